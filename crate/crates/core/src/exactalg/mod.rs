//! Exact scalar and univariate polynomial algebra over the rationals.
//!
//! [`Poly`] is a dense polynomial with [`Rational`] coefficients. The heavier
//! operations (products, composition, gcd, resultants) run on integer images
//! with a common denominator; characteristic polynomials of multiplication
//! operators go through the multi-modular engine in [`modular`].

mod charpoly;
mod interp;
mod intpoly;
mod modgcd;
pub mod modular;
mod poly;
mod resultant;
mod squarefree;

pub use charpoly::{charpoly_mod, charpoly_mod_with, CharpolyOptions, Engine};
pub(crate) use charpoly::log2_of;
pub use interp::{interpolate, resultant_in_t};
pub use poly::Poly;
pub use resultant::resultant;
pub use squarefree::{
    coprime_basis, radical, radical_divides, squarefree, SquarefreeDecomposition,
    SquarefreeFactor,
};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational number; always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Arbitrary-precision integer.
pub type Integer = BigInt;

/// Shorthand for the rational `num / den`.
///
/// # Panics
/// Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}
