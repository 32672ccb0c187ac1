use super::cyclotomic::{divisors, factorize};
use super::primality::{mersenne, verify_product};
use super::{ConstructionError, DegreeSet, FactoredInteger, PrimeLabel};

/// Degrees `{1} ∪ {d | m : d > 1} ∪ {2^m - 1}` of the semilinear group over
/// `GF(2^m)`, with `2^m - 1` given by its prime factors.
///
/// Only exponents with at most two prime factors (counted with multiplicity)
/// are accepted; the divisor rule is unchecked beyond that.
pub fn galois_cd(m: u32, mersenne_factors: &[PrimeLabel], check_primality: bool) -> Result<DegreeSet, ConstructionError> {
    let factors = factorize(u64::from(m));
    let omega: u32 = factors.iter().map(|&(_, e)| e).sum();
    if m < 2 || omega > 2 {
        return Err(ConstructionError::UnsupportedExponent(m));
    }
    verify_product(&mersenne(m), mersenne_factors, check_primality)?;
    let mut labels: Vec<PrimeLabel> = factors.iter().map(|&(p, _)| PrimeLabel::literal(p)).collect();
    labels.extend(mersenne_factors.iter().cloned());
    let mut cd = DegreeSet::new(&labels)?;
    for d in divisors(u64::from(m)).into_iter().filter(|&d| d > 1) {
        let degree = factorize(d).into_iter().fold(FactoredInteger::one(), |acc, (p, e)| {
            acc.times(&p.to_string(), u64::from(e))
        });
        cd.insert(degree)?;
    }
    cd.insert(FactoredInteger::product(mersenne_factors.iter().map(|l| l.name.as_str())))?;
    Ok(cd)
}
