//! Exact integer combinatorics: factorials, binomial coefficients, Catalan and
//! Super Catalan numbers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Int, Rational};

pub fn factorial(n: u64) -> Int {
    (2..=n).fold(Int::one(), |acc, k| acc * k)
}

/// Binomial coefficient `n choose k`, zero when `k` lies outside `[0, n]`.
pub fn binomial(n: u64, k: i64) -> Int {
    if k < 0 || k as u64 > n {
        return Int::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Int::one();
    for i in 0..k {
        // acc = C(n, i) * (n - i) / (i + 1) stays integral at every step
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Like [`binomial`], but takes a signed top argument and rejects `n < 0`.
pub fn checked_binomial(n: i64, k: i64) -> Result<Int, Error> {
    if n < 0 {
        return Err(Error::Negative(n));
    }
    Ok(binomial(n as u64, k))
}

/// Binomial coefficient for signed indices, used where indices arise from
/// offsets like `n - 1`. `n` must be nonnegative.
pub(crate) fn binom(n: i64, k: i64) -> Int {
    checked_binomial(n, k).expect("binomial with negative top argument")
}

/// The Catalan number `C_m = binom(2m, m) / (m + 1)`.
pub fn catalan(m: u64) -> Int {
    let (q, r) = binomial(2 * m, m as i64).div_rem(&BigInt::from(m + 1));
    debug_assert!(r.is_zero());
    q
}

/// The Super Catalan number `(2n-2k)! (2k)! / ((n-k)! k! n!)`.
pub fn super_catalan(n: u64, k: u64) -> Result<Int, Error> {
    if k > n {
        return Err(Error::Precondition(format!(
            "super_catalan needs 0 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    let num = factorial(2 * n - 2 * k) * factorial(2 * k);
    let den = factorial(n - k) * factorial(k) * factorial(n);
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    Ok(q)
}

pub(crate) fn int(value: impl Into<Int>) -> Rational {
    Rational::from_integer(value.into())
}

pub(crate) fn sign(exponent: i64) -> Int {
    if exponent.rem_euclid(2) == 0 {
        Int::one()
    } else {
        -Int::one()
    }
}
