//! Occurrence certificates from number theory and from joins.

mod closure;
mod cyclotomic;
mod dugan;
mod factored;
mod galois;
pub mod primality;
mod recipes;

pub use closure::{join_closure, JoinCertificate};
pub use cyclotomic::{coprimality_check, cyclotomic_value, divisors, factorize, mobius};
pub use dugan::{dugan_cd_general, dugan_cd_q3};
pub use factored::{DegreeSet, FactoredInteger, PrimeLabel};
pub use galois::galois_cd;
pub use primality::{is_probable_prime, mersenne, verify_product, VerifyError, MR_ROUNDS};
pub use recipes::{parse_recipes, shipped_recipes, Recipe, RecipeKind, RecipeParseError, Rendered};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("prime label {label}: {reason}")]
    BadLabel { label: String, reason: String },
    #[error("{0}")]
    BadParameters(String),
    #[error("{target} is not a product of the given factors; unmatched part {missing}")]
    Divisibility { target: String, missing: String },
    #[error("exponent {0} has more than two prime factors; the divisor rule is not established there")]
    UnsupportedExponent(u32),
    #[error("{0} prime labels exceed the vertex limit")]
    TooManyPrimes(usize),
}
