//! Exact-arithmetic Krawtchouk matrices and the combinatorics around them.
//!
//! The crate is organised bottom-up:
//!
//! - [`combinatorics`]: binomials, Catalan and Super Catalan numbers over big integers.
//! - [`krawtchouk`]: Krawtchouk matrices for an arbitrary rational parameter `r`, built
//!   from the generating function `(1+z)^(N-j) (1-rz)^j`, and their structural identities.
//! - [`identities`]: partial sums, sums of squares and Catalan special values.
//! - [`zeon`]: raising/lowering operators on the Boolean lattice as sparse integer matrices.
//! - [`linalg`]: fraction-free exact elimination used by the algebra analysis.
//! - [`algebra`]: degree, dimension, centralizer and center dimension of operator algebras.
//! - [`suites`]: parameter-grid sweeps that drive everything above.
//!
//! All arithmetic is exact. There are no tolerances anywhere in the crate.

#![forbid(unsafe_code)]

pub mod algebra;
pub mod combinatorics;
pub mod error;
pub mod identities;
pub mod krawtchouk;
pub mod linalg;
pub mod report;
pub mod suites;
pub mod zeon;

pub use error::Error;
pub use krawtchouk::{KrawtchoukMatrix, RParameter};
pub use report::IdentityReport;

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;
/// Exact rational, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Parses a rational from `num/den` or a bare integer, with an optional sign.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let text = text.trim();
    let bad = || Error::Parse(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: Int = num.parse().map_err(|_| bad())?;
    let den: Int = den.parse().map_err(|_| bad())?;
    if num_traits::Zero::is_zero(&den) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Renders a rational as `num/den`, or as a bare integer when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}
