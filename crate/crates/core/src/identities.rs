//! Summation identities along columns and rows, and the special values that
//! link the symmetric matrices to Catalan and Super Catalan numbers.
//!
//! Each operation returns both sides of an identity computed independently:
//! one side by brute-force summation over matrix entries built from the
//! generating function, the other by the closed form. Callers (and the sweeps
//! in [`crate::suites`]) compare them for exact equality.
//!
//! A term whose coefficient is `j` or `N - j` is dropped when that
//! coefficient vanishes, so an index like `j - 1 = -1` is never resolved.
//! Degrees outside `[0, N]` read as zero coefficients.

use num_traits::{One, Zero};

use crate::combinatorics::{binom, binomial, catalan, int, sign, super_catalan};
use crate::krawtchouk::KrawtchoukMatrix;
use crate::report::IdentityReport;
use crate::{Error, Int, Rational};

/// Index ranges for a column partial sum: order `N`, column `j`, upper
/// summation limit `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartialSumParams {
    pub order: usize,
    pub column: usize,
    pub limit: usize,
}

impl PartialSumParams {
    pub fn new(order: usize, column: usize, limit: usize) -> Result<Self, Error> {
        if order < 1 {
            return Err(Error::Precondition("partial sums need N >= 1".into()));
        }
        if column > order || limit > order {
            return Err(Error::Precondition(format!(
                "need 0 <= j, m <= N, got N = {order}, j = {column}, m = {limit}"
            )));
        }
        Ok(Self {
            order,
            column,
            limit,
        })
    }
}

fn square(x: &Rational) -> Rational {
    x * x
}

fn weighted_square_sum(phi: &KrawtchoukMatrix, j: usize, m: usize) -> Rational {
    let big = phi.order() as i64;
    (0..=m)
        .map(|n| int(big - 2 * n as i64) * square(phi.get(n, j)))
        .sum()
}

/// General-`r` weighted sum of squares down a column. Returns
/// `sum_{n<=m} (N-2n) phi^N[n][j]^2` and the closed right-hand side
/// `(N-j) phi^(N-1)[m][j]^2 + r j phi^(N-1)[m][j-1]^2
///  + (1-r)/(1+r) j sum_{n<=m} (r phi^N[n][j-1]^2 + phi^N[n][j]^2)`.
pub fn sum_squares_general(
    order: usize,
    r: &Rational,
    j: usize,
    m: usize,
) -> Result<(Rational, Rational), Error> {
    let p = PartialSumParams::new(order, j, m)?;
    if (Rational::one() + r).is_zero() {
        return Err(Error::SingularParameter);
    }
    let phi = KrawtchoukMatrix::build(order, r);
    let below = KrawtchoukMatrix::build(order - 1, r);
    sum_squares_general_with(&phi, &below, p)
}

pub fn sum_squares_general_with(
    phi: &KrawtchoukMatrix,
    below: &KrawtchoukMatrix,
    p: PartialSumParams,
) -> Result<(Rational, Rational), Error> {
    let r = phi.parameter().value();
    let one = Rational::one();
    if (&one + r).is_zero() {
        return Err(Error::SingularParameter);
    }
    let PartialSumParams {
        order,
        column: j,
        limit: m,
    } = p;
    let lhs = weighted_square_sum(phi, j, m);
    let m = m as i64;
    let mut rhs = Rational::zero();
    if j < order {
        rhs += int((order - j) as i64) * square(&below.coefficient(m, j));
    }
    if j > 0 {
        let jr = int(j as i64);
        rhs += r * &jr * square(&below.coefficient(m, j - 1));
        let ratio = (&one - r) / (&one + r);
        let inner: Rational = (0..=m as usize)
            .map(|n| r * square(phi.get(n, j - 1)) + square(phi.get(n, j)))
            .sum();
        rhs += ratio * jr * inner;
    }
    Ok((lhs, rhs))
}

/// Symmetric sum of squares:
/// `sum_{n<=m} (N-2n) Phi^N[n][j]^2 = (N-j) Phi^(N-1)[m][j]^2 + j Phi^(N-1)[m][j-1]^2`.
pub fn sum_squares_symmetric(
    order: usize,
    j: usize,
    m: usize,
) -> Result<(Rational, Rational), Error> {
    let p = PartialSumParams::new(order, j, m)?;
    let phi = KrawtchoukMatrix::symmetric(order);
    let below = KrawtchoukMatrix::symmetric(order - 1);
    Ok(sum_squares_symmetric_with(&phi, &below, p))
}

pub fn sum_squares_symmetric_with(
    phi: &KrawtchoukMatrix,
    below: &KrawtchoukMatrix,
    p: PartialSumParams,
) -> (Rational, Rational) {
    let PartialSumParams {
        order,
        column: j,
        limit: m,
    } = p;
    let lhs = weighted_square_sum(phi, j, m);
    let mut rhs = Rational::zero();
    if j < order {
        rhs += int((order - j) as i64) * square(&below.coefficient(m as i64, j));
    }
    if j > 0 {
        rhs += int(j as i64) * square(&below.coefficient(m as i64, j - 1));
    }
    (lhs, rhs)
}

/// Plain weighted partial sum for `j >= 2`. Returns
/// `sum_{n<=m} (N-2n) Phi^N[n][j]`, `(N-j) Phi^(N-1)[m][j] + j Phi^(N-1)[m][j-2]`
/// and `(N-1-2m) Phi^(N-1)[m][j-1] + Phi^(N-1)[m][j-2]`.
pub fn partial_sum_plain(
    order: usize,
    j: usize,
    m: usize,
) -> Result<(Rational, Rational, Rational), Error> {
    let p = PartialSumParams::new(order, j, m)?;
    if j < 2 {
        return Err(Error::Precondition(format!(
            "plain partial sums need j >= 2, got {j}"
        )));
    }
    let phi = KrawtchoukMatrix::symmetric(order);
    let below = KrawtchoukMatrix::symmetric(order - 1);
    Ok(partial_sum_plain_with(&phi, &below, p))
}

pub fn partial_sum_plain_with(
    phi: &KrawtchoukMatrix,
    below: &KrawtchoukMatrix,
    p: PartialSumParams,
) -> (Rational, Rational, Rational) {
    let PartialSumParams {
        order,
        column: j,
        limit: m,
    } = p;
    let big = order as i64;
    let mi = m as i64;
    let lhs: Rational = (0..=m)
        .map(|n| int(big - 2 * n as i64) * phi.get(n, j))
        .sum();
    let mut first = int(j as i64) * below.coefficient(mi, j - 2);
    if j < order {
        first += int(big - j as i64) * below.coefficient(mi, j);
    }
    let second =
        int(big - 1 - 2 * mi) * below.coefficient(mi, j - 1) + below.coefficient(mi, j - 2);
    (lhs, first, second)
}

/// `Phi^(N-1)[m][j] = sum_{n<=m} Phi^N[n][j+1]` for `0 <= j, m <= N-1`.
pub fn column_sum_relation(
    order: usize,
    j: usize,
    m: usize,
) -> Result<(Rational, Rational), Error> {
    if order < 1 || j + 1 > order || m + 1 > order {
        return Err(Error::Precondition(format!(
            "column sums need N >= 1 and 0 <= j, m <= N-1, got N = {order}, j = {j}, m = {m}"
        )));
    }
    let phi = KrawtchoukMatrix::symmetric(order);
    let below = KrawtchoukMatrix::symmetric(order - 1);
    Ok(column_sum_relation_with(&phi, &below, j, m))
}

pub fn column_sum_relation_with(
    phi: &KrawtchoukMatrix,
    below: &KrawtchoukMatrix,
    j: usize,
    m: usize,
) -> (Rational, Rational) {
    let rhs = (0..=m).map(|n| phi.get(n, j + 1).clone()).sum();
    (below.get(m, j).clone(), rhs)
}

/// Full column sum of squares, brute force and
/// `binom(2N-2j, N-j) binom(2j, j) / binom(N, j)`.
pub fn column_sum_of_squares(order: usize, j: usize) -> Result<(Int, Rational), Error> {
    if j > order {
        return Err(Error::Precondition(format!(
            "column {j} outside order {order}"
        )));
    }
    Ok(column_sum_of_squares_with(
        &KrawtchoukMatrix::symmetric(order),
        j,
    ))
}

pub fn column_sum_of_squares_with(phi: &KrawtchoukMatrix, j: usize) -> (Int, Rational) {
    let brute: Rational = phi.column(j).iter().map(square).sum();
    (brute.to_integer(), column_squares_closed(phi.order(), j))
}

pub fn column_squares_closed(order: usize, j: usize) -> Rational {
    let (big, j) = (order as i64, j as i64);
    Rational::new(
        binom(2 * big - 2 * j, big - j) * binom(2 * j, j),
        binom(big, j),
    )
}

/// Full row sum of squares, brute force and
/// `sum_{k<=i} binom(N+1, 2k+1) binom(2k, k) binom(N-2k, i-k)`.
pub fn row_sum_of_squares(order: usize, i: usize) -> Result<(Int, Int), Error> {
    if i > order {
        return Err(Error::Precondition(format!(
            "row {i} outside order {order}"
        )));
    }
    Ok(row_sum_of_squares_with(
        &KrawtchoukMatrix::symmetric(order),
        i,
    ))
}

pub fn row_sum_of_squares_with(phi: &KrawtchoukMatrix, i: usize) -> (Int, Int) {
    let brute: Rational = phi.rows()[i].iter().map(square).sum();
    (brute.to_integer(), row_squares_closed(phi.order(), i))
}

pub fn row_squares_closed(order: usize, i: usize) -> Int {
    let (big, i) = (order as i64, i as i64);
    (0..=i)
        .filter(|k| big - 2 * k >= 0)
        .map(|k| binom(big + 1, 2 * k + 1) * binom(2 * k, k) * binom(big - 2 * k, i - k))
        .sum()
}

/// Closed form of the middle-row entry `Phi^N[m][j]`, `m = floor(N/2)`.
pub fn central_row_value(order: usize, j: usize) -> Result<Rational, Error> {
    if j > order {
        return Err(Error::Precondition(format!(
            "column {j} outside order {order}"
        )));
    }
    let big = order as i64;
    let m = big / 2;
    let j = j as i64;
    let half = j / 2;
    if order.is_multiple_of(2) && j % 2 == 1 {
        return Ok(Rational::zero());
    }
    Ok(Rational::new(
        binom(m, half) * sign(half) * binom(big, m),
        binom(big, j),
    ))
}

/// `sum_{i<=m} Phi^m[i][j/2]^2` against `(-1)^(j/2) Phi^(2m)[m][j]`, for even `j`.
pub fn column_square_central_link(m: usize, j: usize) -> Result<(Rational, Rational), Error> {
    if !j.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "column-square link needs even j, got {j}"
        )));
    }
    if j / 2 > m {
        return Err(Error::Precondition(format!(
            "need j/2 <= m, got m = {m}, j = {j}"
        )));
    }
    Ok(column_square_central_link_with(
        &KrawtchoukMatrix::symmetric(m),
        &KrawtchoukMatrix::symmetric(2 * m),
        j,
    ))
}

pub fn column_square_central_link_with(
    small: &KrawtchoukMatrix,
    double: &KrawtchoukMatrix,
    j: usize,
) -> (Rational, Rational) {
    let lhs = small.column(j / 2).iter().map(square).sum();
    let rhs = int(sign((j / 2) as i64)) * double.get(small.order(), j);
    (lhs, rhs)
}

/// `binom(n, k) binom(2n, n) / binom(2n, 2k)` against the Super Catalan number `S(n, k)`.
pub fn super_catalan_link(n: u64, k: u64) -> Result<(Rational, Rational), Error> {
    let rhs = int(super_catalan(n, k)?);
    let lhs = Rational::new(
        binomial(n, k as i64) * binomial(2 * n, n as i64),
        binomial(2 * n, 2 * k as i64),
    );
    Ok((lhs, rhs))
}

/// The Catalan evaluations in the orders `2m` and `2m+1`, each followed by its
/// mirror `Phi^N[i][N-j] = (-1)^i Phi^N[i][j]`.
pub fn catalan_connection_report(m: usize) -> Result<IdentityReport, Error> {
    if m < 1 {
        return Err(Error::Precondition(
            "the Catalan connection needs m >= 1".into(),
        ));
    }
    Ok(catalan_connection_with(
        &KrawtchoukMatrix::symmetric(2 * m),
        &KrawtchoukMatrix::symmetric(2 * m + 1),
    ))
}

pub fn catalan_connection_with(even: &KrawtchoukMatrix, odd: &KrawtchoukMatrix) -> IdentityReport {
    let m = even.order() / 2;
    assert_eq!(odd.order(), 2 * m + 1);
    let c_m = int(catalan(m as u64));
    let c_prev = int(catalan(m as u64 - 1));
    let two = int(2);
    let evaluations: [(&KrawtchoukMatrix, usize, usize, Rational); 7] = [
        (even, m - 1, 1, c_m.clone()),
        (even, m + 1, 1, -c_m.clone()),
        (even, m, 2, -two * c_prev),
        (odd, m, 1, c_m.clone()),
        (odd, m, 2, -c_m.clone()),
        (odd, m + 1, 1, -c_m.clone()),
        (odd, m + 1, 2, -c_m),
    ];
    let mut report = IdentityReport::new("catalan-connection");
    for (phi, i, j, value) in evaluations {
        let order = phi.order();
        report.check(|| format!("N={order} i={i} j={j}"), phi.get(i, j), &value);
        let mirrored = int(sign(i as i64)) * &value;
        report.check(
            || format!("mirror N={order} i={i} j={}", order - j),
            phi.get(i, order - j),
            &mirrored,
        );
    }
    report
}
