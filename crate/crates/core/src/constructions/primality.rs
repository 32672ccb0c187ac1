use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::PrimeLabel;

/// Miller-Rabin rounds used for every certificate check.
pub const MR_ROUNDS: usize = 40;

pub fn small_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut k = 2u64;
    while out.len() < count {
        if out.iter().take_while(|&&p| p * p <= k).all(|&p| !k.is_multiple_of(p)) {
            out.push(k);
        }
        k += 1;
    }
    out
}

/// Miller-Rabin with the first `rounds` primes as bases.
pub fn is_probable_prime(n: &BigUint, rounds: usize) -> bool {
    let bases = small_primes(rounds.max(1));
    if let Some(small) = n.to_u64() {
        if small < 2 {
            return false;
        }
        if bases.contains(&small) {
            return true;
        }
    }
    if bases.iter().any(|&p| (n % p).is_zero()) {
        return false;
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for &a in &bases {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("product of factors is {product}, expected {target}")]
    ProductMismatch { product: BigUint, target: BigUint },
    #[error("factor {label} = {value} is composite")]
    Composite { label: String, value: BigUint },
}

/// Checks that the labels multiply to `target` and, optionally, that each is prime.
pub fn verify_product(target: &BigUint, primes: &[PrimeLabel], check_primality: bool) -> Result<(), VerifyError> {
    if check_primality {
        if let Some(bad) = primes.iter().find(|l| !is_probable_prime(&l.value, MR_ROUNDS)) {
            return Err(VerifyError::Composite { label: bad.name.clone(), value: bad.value.clone() });
        }
    }
    let product: BigUint = primes.iter().map(|l| &l.value).product();
    if &product != target {
        return Err(VerifyError::ProductMismatch { product, target: target.clone() });
    }
    Ok(())
}

/// `2^m - 1`
pub fn mersenne(m: u32) -> BigUint {
    (BigUint::one() << m) - 1u8
}

pub fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}
