use num_bigint::BigUint;
use num_traits::One;

use super::primality::gcd;

/// Prime factorisation of a machine integer by trial division.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..).take_while(|d| d * d <= n).filter(|d| n.is_multiple_of(*d)).flat_map(|d| [d, n / d]).collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn mobius(n: u64) -> i8 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Phi_n(x)` as the product of `(x^d - 1)^mu(n/d)` over divisors `d` of `n`.
pub fn cyclotomic_value(n: u64, x: &BigUint) -> BigUint {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for d in divisors(n) {
        let term = x.pow(d as u32) - 1u8;
        match mobius(n / d) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    let (q, r) = (&num / &den, &num % &den);
    debug_assert!(r == BigUint::ZERO);
    q
}

/// `Phi_q(p)`, `Phi_r(p)` and `Phi_{qr}(p)` are pairwise coprime.
pub fn coprimality_check(p: u64, q: u64, r: u64) -> bool {
    let x = BigUint::from(p);
    let values = [cyclotomic_value(q, &x), cyclotomic_value(r, &x), cyclotomic_value(q * r, &x)];
    (0..3).all(|i| (i + 1..3).all(|j| gcd(&values[i], &values[j]).is_one()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_phi(n: u64, x: u64) -> i128 {
        // Polynomial division over the integers, coefficients low degree first.
        fn phi(n: u64) -> Vec<i128> {
            let mut poly = vec![-1i128];
            poly.resize(n as usize + 1, 0);
            poly[n as usize] = 1;
            for d in divisors(n).into_iter().filter(|&d| d < n) {
                let div = phi(d);
                let mut q = vec![0i128; poly.len() - div.len() + 1];
                for i in (0..q.len()).rev() {
                    let c = poly[i + div.len() - 1];
                    q[i] = c;
                    for (j, &b) in div.iter().enumerate() {
                        poly[i + j] -= c * b;
                    }
                }
                poly = q;
            }
            poly
        }
        phi(n).iter().rev().fold(0i128, |acc, &c| acc * x as i128 + c)
    }

    #[test]
    fn small_values() {
        assert_eq!(cyclotomic_value(1, &BigUint::from(2u8)), BigUint::one());
        assert_eq!(cyclotomic_value(3, &BigUint::from(23u8)), BigUint::from(553u32));
        assert_eq!(cyclotomic_value(2, &BigUint::from(7u8)), BigUint::from(8u8));
        for n in 1..=30 {
            for x in 2..=5 {
                assert_eq!(cyclotomic_value(n, &BigUint::from(x)), BigUint::from(naive_phi(n, x) as u128), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn product_over_divisors() {
        let x = BigUint::from(103u8);
        for n in [11u64, 19, 209] {
            let prod: BigUint = divisors(n).into_iter().map(|d| cyclotomic_value(d, &x)).product();
            assert_eq!(prod, x.pow(n as u32) - 1u8);
        }
    }

    #[test]
    fn coprime_triples() {
        assert!(coprimality_check(2, 3, 17));
        assert!(coprimality_check(23, 3, 13));
        assert!(coprimality_check(103, 11, 13));
        assert!(coprimality_check(103, 11, 19));
        // Phi_2(5) = 6 and Phi_6(5) = 21 share 3.
        assert!(!coprimality_check(5, 2, 3));
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(divisors(12), [1, 2, 3, 4, 6, 12]);
        assert_eq!(factorize(360), [(2, 3), (3, 2), (5, 1)]);
        assert_eq!([mobius(1), mobius(6), mobius(12), mobius(30)], [1, 1, 0, -1]);
    }
}
