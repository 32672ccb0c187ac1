//! Degree sets of the skew-ring groups built from primes `p`, `q`, `r`.

use num_bigint::BigUint;

use super::cyclotomic::{coprimality_check, cyclotomic_value};
use super::primality::{is_probable_prime, verify_product, MR_ROUNDS};
use super::{ConstructionError, DegreeSet, FactoredInteger, PrimeLabel};

struct Setup {
    set: DegreeSet,
    p: String,
    q: String,
    r: String,
    /// Product of all quotient factors.
    full: FactoredInteger,
    /// `full` with the factors of `Phi_q(p)` removed.
    reduced: FactoredInteger,
}

fn setup(p: u64, q: u64, r: u64, factors: &[PrimeLabel], check_primality: bool) -> Result<Setup, ConstructionError> {
    for x in [p, q, r] {
        if !is_probable_prime(&BigUint::from(x), MR_ROUNDS) {
            return Err(ConstructionError::BadParameters(format!("{x} is not prime")));
        }
    }
    if q < 3 || q >= r || p == q || p == r {
        return Err(ConstructionError::BadParameters(format!("need distinct primes with 3 <= q < r, got p={p} q={q} r={r}")));
    }
    let base = BigUint::from(p);
    let qr = u32::try_from(q * r).map_err(|_| ConstructionError::BadParameters("q*r too large".into()))?;
    let quotient = (base.pow(qr) - 1u8) / (&base - 1u8);
    verify_product(&quotient, factors, check_primality)?;
    if !coprimality_check(p, q, r) {
        return Err(ConstructionError::BadParameters(format!("cyclotomic values of ({p},{q},{r}) are not coprime")));
    }
    let target = cyclotomic_value(q, &base);
    let chosen = sub_product(factors, &target).ok_or_else(|| ConstructionError::Divisibility {
        target: format!("Phi_{q}({p}) = {target}"),
        missing: missing_part(factors, &target),
    })?;
    let mut labels: Vec<PrimeLabel> = [p, q, r].into_iter().map(PrimeLabel::literal).collect();
    labels.extend(factors.iter().cloned());
    let set = DegreeSet::new(&labels)?;
    let full = FactoredInteger::product(factors.iter().map(|l| l.name.as_str()));
    let reduced = full
        .div(&FactoredInteger::product(chosen.iter().map(|&i| factors[i].name.as_str())))
        .expect("sub-product divides");
    Ok(Setup { set, p: p.to_string(), q: q.to_string(), r: r.to_string(), full, reduced })
}

/// Indices of a sub-multiset of `factors` multiplying to `target`.
fn sub_product(factors: &[PrimeLabel], target: &BigUint) -> Option<Vec<usize>> {
    let mut chosen = Vec::new();
    let mut rest = target.clone();
    for (i, l) in factors.iter().enumerate() {
        if (&rest % &l.value) == BigUint::ZERO {
            rest /= &l.value;
            chosen.push(i);
        }
    }
    (rest == BigUint::from(1u8)).then_some(chosen)
}

fn missing_part(factors: &[PrimeLabel], target: &BigUint) -> String {
    let mut rest = target.clone();
    for l in factors {
        if (&rest % &l.value) == BigUint::ZERO {
            rest /= &l.value;
        }
    }
    rest.to_string()
}

impl Setup {
    fn degree(&self, q_exp: u64, p_exp: u64, with_r: bool, cofactor: &FactoredInteger) -> FactoredInteger {
        let mut d = cofactor.clone().times(&self.q, q_exp).times(&self.p, p_exp);
        if with_r {
            d = d.times(&self.r, 1);
        }
        d
    }

    fn base_degrees(&mut self) -> Result<(), ConstructionError> {
        let one = FactoredInteger::one();
        for d in [
            self.degree(1, 0, false, &one),
            self.degree(0, 0, true, &one),
            self.degree(1, 0, true, &one),
        ] {
            self.set.insert(d)?;
        }
        Ok(())
    }
}

/// The `q = 3` display: eleven degrees.
pub fn dugan_cd_q3(p: u64, r: u64, quotient_factors: &[PrimeLabel], check_primality: bool) -> Result<DegreeSet, ConstructionError> {
    let mut s = setup(p, 3, r, quotient_factors, check_primality)?;
    s.base_degrees()?;
    let (full, reduced) = (s.full.clone(), s.reduced.clone());
    let degrees = [
        s.degree(0, 0, false, &full),
        s.degree(0, (3 * r - 1) / 2, false, &full),
        s.degree(1, 3 * r, false, &reduced),
        s.degree(0, 3 * r - 3, false, &reduced),
        s.degree(1, 3 * r - 3, false, &reduced),
        s.degree(0, 3 * r - 3, false, &full),
        s.degree(0, 3 * r - 2, false, &full),
    ];
    for d in degrees {
        s.set.insert(d)?;
    }
    Ok(s.set)
}

/// The general display over `0 <= i <= q-2` and `0 <= j <= q-1`.
pub fn dugan_cd_general(p: u64, q: u64, r: u64, quotient_factors: &[PrimeLabel], check_primality: bool) -> Result<DegreeSet, ConstructionError> {
    let mut s = setup(p, q, r, quotient_factors, check_primality)?;
    s.base_degrees()?;
    let (full, reduced) = (s.full.clone(), s.reduced.clone());
    let h = (q - 1) / 2;
    let mut degrees = vec![
        s.degree(1, h * q * r, false, &reduced),
        s.degree(0, h * (q * r - q), false, &reduced),
        s.degree(1, h * (q * r - q), false, &reduced),
    ];
    for i in 0..=q - 2 {
        degrees.push(s.degree(0, i * ((q * r - 1) / 2), false, &full));
    }
    for j in 0..q {
        degrees.push(s.degree(0, h * (q * r - q + j - 1), false, &full));
    }
    for d in degrees {
        s.set.insert(d)?;
    }
    Ok(s.set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g36_factors() -> Vec<PrimeLabel> {
        [("s", 7u64), ("t", 103), ("u", 2143), ("v", 11119), ("w", 131071)]
            .into_iter()
            .map(|(n, v)| PrimeLabel::new(n, BigUint::from(v)))
            .collect()
    }

    #[test]
    fn q3_shape() {
        let cd = dugan_cd_q3(2, 17, &g36_factors(), true).unwrap();
        assert_eq!(cd.len(), 11);
        assert!(cd.contains(&FactoredInteger::product(["t", "u", "v", "w"]).times("2", 48)));
        assert!(cd.contains(&FactoredInteger::product(["t", "u", "v", "w"]).times("2", 51).times("3", 1)));
    }

    #[test]
    fn missing_cyclotomic_factor() {
        let mut f = g36_factors();
        f[0] = PrimeLabel::new("s", BigUint::from(7u8 * 7));
        assert!(matches!(dugan_cd_q3(2, 17, &f, false), Err(ConstructionError::Verify(_))));
        // Product right but Phi_3(2) = 7 split across no single label.
        let merged = vec![
            PrimeLabel::new("s", BigUint::from(7u64 * 103)),
            PrimeLabel::new("u", BigUint::from(2143u64)),
            PrimeLabel::new("v", BigUint::from(11119u64)),
            PrimeLabel::new("w", BigUint::from(131071u64)),
        ];
        assert!(matches!(dugan_cd_q3(2, 17, &merged, false), Err(ConstructionError::Divisibility { .. })));
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(dugan_cd_q3(4, 17, &g36_factors(), false), Err(ConstructionError::BadParameters(_))));
        assert!(matches!(dugan_cd_general(2, 17, 3, &g36_factors(), false), Err(ConstructionError::BadParameters(_))));
    }
}
