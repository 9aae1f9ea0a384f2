//! Krawtchouk matrices for a general rational parameter.
//!
//! Column `j` of the order-`N` matrix holds the coefficients of
//! `(1+z)^(N-j) (1-rz)^j`, so entry `[n][j]` is the Krawtchouk polynomial of
//! degree `n` evaluated at `j`. Rows are degrees and columns are evaluation
//! points throughout the crate.
//!
//! The matrices are built by expanding that product directly. Every
//! recurrence and symmetry below is then checked against the expansion rather
//! than used to produce it.

use num_traits::{One, Zero};

use crate::combinatorics::{binomial, int, sign};
use crate::report::IdentityReport;
use crate::{Error, Int, Rational};

/// The parameter `r = (1-p)/p`. `r = 1` is the symmetric case `p = 1/2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RParameter(Rational);

impl RParameter {
    pub fn new(r: Rational) -> Self {
        Self(r)
    }

    pub fn symmetric() -> Self {
        Self(Rational::one())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.is_one()
    }

    /// `p = 1/(1+r)`, undefined at `r = -1`.
    pub fn p(&self) -> Option<Rational> {
        let denom = Rational::one() + &self.0;
        (!denom.is_zero()).then(|| denom.recip())
    }

    /// `q = 1 - p`, undefined at `r = -1`.
    pub fn q(&self) -> Option<Rational> {
        self.p().map(|p| Rational::one() - p)
    }
}

impl From<Rational> for RParameter {
    fn from(r: Rational) -> Self {
        Self(r)
    }
}

/// Multiplies a coefficient vector in place by `(a + b z)`.
fn mul_linear(poly: &mut Vec<Rational>, a: &Rational, b: &Rational) {
    poly.push(Rational::zero());
    for k in (0..poly.len()).rev() {
        let shifted = if k > 0 {
            &poly[k - 1] * b
        } else {
            Rational::zero()
        };
        poly[k] = &poly[k] * a + shifted;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrawtchoukMatrix {
    order: usize,
    r: RParameter,
    entries: Vec<Vec<Rational>>,
}

impl KrawtchoukMatrix {
    /// Expands `(1+z)^(N-j) (1-rz)^j` for every column `j`.
    pub fn build(order: usize, r: &Rational) -> Self {
        let one = Rational::one();
        let minus_r = -r.clone();
        let mut entries = vec![Vec::with_capacity(order + 1); order + 1];
        for j in 0..=order {
            let mut poly = vec![Rational::one()];
            for _ in 0..order - j {
                mul_linear(&mut poly, &one, &one);
            }
            for _ in 0..j {
                mul_linear(&mut poly, &one, &minus_r);
            }
            debug_assert_eq!(poly.len(), order + 1);
            for (n, coeff) in poly.into_iter().enumerate() {
                entries[n].push(coeff);
            }
        }
        Self {
            order,
            r: RParameter::new(r.clone()),
            entries,
        }
    }

    /// The symmetric matrix `r = 1`, whose entries are all integers.
    pub fn symmetric(order: usize) -> Self {
        Self::build(order, &Rational::one())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.order + 1
    }

    pub fn parameter(&self) -> &RParameter {
        &self.r
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// Entry `[n][j]`; panics outside the matrix.
    pub fn get(&self, n: usize, j: usize) -> &Rational {
        &self.entries[n][j]
    }

    /// Entry `[n][j]` with the boundary convention that degree `-1` reads as
    /// zero. Any other index outside `[0, N]` is an error.
    pub fn entry(&self, n: i64, j: i64) -> Result<Rational, Error> {
        let out_of_range = || Error::IndexOutOfRange {
            order: self.order,
            row: n,
            col: j,
        };
        if j < 0 || j as usize > self.order {
            return Err(out_of_range());
        }
        match n {
            -1 => Ok(Rational::zero()),
            n if n >= 0 && n as usize <= self.order => {
                Ok(self.entries[n as usize][j as usize].clone())
            }
            _ => Err(out_of_range()),
        }
    }

    /// Coefficient of `z^n` in column `j`'s generating polynomial. This is
    /// zero for every `n` outside `[0, N]`; `j` must be a valid column.
    pub fn coefficient(&self, n: i64, j: usize) -> Rational {
        assert!(j <= self.order, "column {j} outside order {}", self.order);
        if n < 0 || n as usize > self.order {
            Rational::zero()
        } else {
            self.entries[n as usize][j].clone()
        }
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().flatten().all(|x| x.is_integer())
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        self.entries.iter().map(|row| row[j].clone()).collect()
    }

    pub fn transpose(&self) -> Vec<Vec<Rational>> {
        (0..self.size()).map(|j| self.column(j)).collect()
    }

    /// Plain matrix product with another matrix of the same order.
    pub fn matmul(&self, other: &KrawtchoukMatrix) -> Vec<Vec<Rational>> {
        assert_eq!(self.order, other.order);
        let size = self.size();
        (0..size)
            .map(|i| {
                (0..size)
                    .map(|k| {
                        (0..size)
                            .map(|l| &self.entries[i][l] * &other.entries[l][k])
                            .sum()
                    })
                    .collect()
            })
            .collect()
    }

    /// Adds `delta` to one entry. Only used to exercise failure reporting.
    #[doc(hidden)]
    pub fn perturb(&mut self, n: usize, j: usize, delta: &Rational) {
        self.entries[n][j] += delta;
    }
}

/// `B = diag(binom(N, i))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialDiagonal {
    order: usize,
    diagonal: Vec<Int>,
}

impl BinomialDiagonal {
    pub fn new(order: usize) -> Self {
        let diagonal = (0..=order)
            .map(|i| binomial(order as u64, i as i64))
            .collect();
        Self { order, diagonal }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn diagonal(&self) -> &[Int] {
        &self.diagonal
    }
}

fn params(tag: &str, order: usize, r: &Rational, n: i64, j: i64) -> String {
    format!("{tag} N={order} r={r} n={n} j={j}")
}

/// Both Pascal-type relations between orders `N` and `N+1`:
/// `phi^N[n][j] + phi^N[n-1][j] = phi^(N+1)[n][j]` and
/// `phi^N[n][j] - r phi^N[n-1][j] = phi^(N+1)[n][j+1]`.
pub fn verify_pascal(order: usize, r: &Rational) -> IdentityReport {
    let lower = KrawtchoukMatrix::build(order, r);
    let upper = KrawtchoukMatrix::build(order + 1, r);
    pascal_report(&lower, &upper)
}

pub fn pascal_report(lower: &KrawtchoukMatrix, upper: &KrawtchoukMatrix) -> IdentityReport {
    let order = lower.order();
    let r = lower.parameter().value();
    assert_eq!(upper.order(), order + 1);
    let mut report = IdentityReport::new("pascal");
    for n in 0..=order as i64 {
        for j in 0..=order as i64 {
            let here = lower.entry(n, j).expect("in range");
            let above = lower.entry(n - 1, j).expect("boundary row");
            let (nu, ju) = (n as usize, j as usize);
            report.check(
                || params("i", order, r, n, j),
                &(&here + &above),
                upper.get(nu, ju),
            );
            report.check(
                || params("ii", order, r, n, j),
                &(&here - r * &above),
                upper.get(nu, ju + 1),
            );
        }
    }
    report
}

/// The three-term recurrence in the evaluation point:
/// `(N + (r-1)j - n(1+r)) phi[n][j] = (N-j) phi[n][j+1] + r j phi[n][j-1]`.
/// Terms whose coefficient `N-j` or `j` vanishes are dropped.
pub fn verify_recurrence_j(order: usize, r: &Rational) -> Result<IdentityReport, Error> {
    if order == 0 {
        return Err(Error::Precondition(
            "the recurrence in j needs N >= 1".into(),
        ));
    }
    Ok(recurrence_report(&KrawtchoukMatrix::build(order, r)))
}

pub fn recurrence_report(phi: &KrawtchoukMatrix) -> IdentityReport {
    let order = phi.order();
    let r = phi.parameter().value();
    let big_n = int(order as i64);
    let mut report = IdentityReport::new("recurrence");
    for n in 0..=order {
        for j in 0..=order {
            let jr = int(j as i64);
            let coeff =
                &big_n + (r - Rational::one()) * &jr - int(n as i64) * (Rational::one() + r);
            let lhs = coeff * phi.get(n, j);
            let mut rhs = Rational::zero();
            if j < order {
                rhs += int((order - j) as i64) * phi.get(n, j + 1);
            }
            if j > 0 {
                rhs += r * &jr * phi.get(n, j - 1);
            }
            report.check(
                || params("recurrence", order, r, n as i64, j as i64),
                &lhs,
                &rhs,
            );
        }
    }
    report
}

/// Whether `Phi^N Phi^N = 2^N I` for the symmetric matrix.
pub fn verify_involution(order: usize) -> bool {
    involution_holds(&KrawtchoukMatrix::symmetric(order))
}

pub fn involution_holds(phi: &KrawtchoukMatrix) -> bool {
    let scale = int(Int::one() << phi.order());
    let square = phi.matmul(phi);
    square.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(k, x)| if i == k { *x == scale } else { x.is_zero() })
    })
}

/// Row and column sign symmetries of the symmetric matrix.
pub fn verify_sign_symmetries(order: usize) -> IdentityReport {
    sign_symmetry_report(&KrawtchoukMatrix::symmetric(order))
}

pub fn sign_symmetry_report(phi: &KrawtchoukMatrix) -> IdentityReport {
    let order = phi.order();
    let mut report = IdentityReport::new("symmetries");
    for i in 0..=order {
        for j in 0..=order {
            let x = phi.get(i, j);
            let row_flip = int(sign(i as i64)) * x;
            report.check(
                || format!("column-reflection N={order} i={i} j={j}"),
                phi.get(i, order - j),
                &row_flip,
            );
            let col_flip = int(sign(j as i64)) * x;
            report.check(
                || format!("row-reflection N={order} i={i} j={j}"),
                phi.get(order - i, j),
                &col_flip,
            );
        }
        let diag = int(sign(order as i64)) * phi.get(i, i);
        report.check(
            || format!("diagonal N={order} i={i}"),
            phi.get(order - i, order - i),
            &diag,
        );
    }
    report
}

/// Closed forms for row 1, column 0 and column 1 of the symmetric matrix:
/// `Phi^N[1][j] = N - 2j`, `Phi^N[n][0] = binom(N, n)` and
/// `Phi^(N+1)[n][1] = binom(N, n) - binom(N, n-1) = binom(N, n)(N+1-2n)/(N+1-n)`.
pub fn closed_form_row1_col01(order: usize) -> IdentityReport {
    rows_cols_report(
        &KrawtchoukMatrix::symmetric(order),
        &KrawtchoukMatrix::symmetric(order + 1),
    )
}

pub fn rows_cols_report(phi: &KrawtchoukMatrix, next: &KrawtchoukMatrix) -> IdentityReport {
    let order = phi.order();
    let big = order as i64;
    let mut report = IdentityReport::new("rows-cols");
    if order >= 1 {
        for j in 0..=order {
            report.check(
                || format!("row1 N={order} j={j}"),
                phi.get(1, j),
                &int(big - 2 * j as i64),
            );
        }
    }
    for n in 0..=order {
        report.check(
            || format!("col0 N={order} n={n}"),
            phi.get(n, 0),
            &int(binomial(order as u64, n as i64)),
        );
    }
    for n in 0..=big {
        let difference = int(binomial(order as u64, n) - binomial(order as u64, n - 1));
        let entry = next.get(n as usize, 1);
        report.check(
            || format!("col1-difference N+1={} n={n}", order + 1),
            entry,
            &difference,
        );
        if big + 1 - n != 0 {
            let quotient = int(binomial(order as u64, n))
                * Rational::new((big + 1 - 2 * n).into(), (big + 1 - n).into());
            report.check(
                || format!("col1-quotient N+1={} n={n}", order + 1),
                entry,
                &quotient,
            );
        }
    }
    report
}

/// `Phi B` is symmetric, equivalently `Phi[j][i] = binom(N, j)/binom(N, i) Phi[i][j]`.
pub fn verify_binomial_conjugation(order: usize) -> IdentityReport {
    conjugation_report(&KrawtchoukMatrix::symmetric(order))
}

pub fn conjugation_report(phi: &KrawtchoukMatrix) -> IdentityReport {
    let order = phi.order();
    let b = BinomialDiagonal::new(order);
    let mut report = IdentityReport::new("conjugation");
    for i in 0..=order {
        for j in 0..=order {
            // (Phi B)[i][j] = Phi[i][j] B[j]
            let pb_ij = phi.get(i, j) * int(b.diagonal()[j].clone());
            let pb_ji = phi.get(j, i) * int(b.diagonal()[i].clone());
            report.check(
                || format!("PhiB-symmetric N={order} i={i} j={j}"),
                &pb_ij,
                &pb_ji,
            );
            let formula =
                Rational::new(b.diagonal()[j].clone(), b.diagonal()[i].clone()) * phi.get(i, j);
            report.check(
                || format!("entrywise N={order} i={i} j={j}"),
                phi.get(j, i),
                &formula,
            );
        }
    }
    report
}
