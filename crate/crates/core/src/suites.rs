//! Parameter-grid sweeps over every identity in the crate.
//!
//! Each suite walks a grid of orders (and parameters `r` where relevant),
//! builds the matrices once per grid point, and folds the per-point reports
//! in parameter order. With more than one job the grid points are evaluated
//! on a thread pool; the folded report is identical either way.

use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::combinatorics::{binomial, catalan, int, super_catalan};
use crate::identities::{
    catalan_connection_with, central_row_value, column_square_central_link_with,
    column_squares_closed, column_sum_of_squares_with, column_sum_relation_with,
    partial_sum_plain_with, row_sum_of_squares_with, sum_squares_general_with,
    sum_squares_symmetric_with, PartialSumParams,
};
use crate::krawtchouk::{
    conjugation_report, involution_holds, pascal_report, recurrence_report, rows_cols_report,
    sign_symmetry_report, KrawtchoukMatrix,
};
use crate::report::{IdentityReport, DEFAULT_FAILURE_CAP};
use crate::zeon::{lower, op_t, op_tstar, op_u, raise, SubsetIndex, ZeonMatrix};
use crate::{parse_rational, Error, Int, Rational};

/// Largest `n` swept by the zeon suite.
pub const ZEON_MAX_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Pascal,
    Recurrence,
    Involution,
    Symmetries,
    RowsCols,
    Conjugation,
    Sums,
    Catalan,
    SuperCatalan,
    Zeon,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Pascal,
        Suite::Recurrence,
        Suite::Involution,
        Suite::Symmetries,
        Suite::RowsCols,
        Suite::Conjugation,
        Suite::Sums,
        Suite::Catalan,
        Suite::SuperCatalan,
        Suite::Zeon,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Pascal => "pascal",
            Suite::Recurrence => "recurrence",
            Suite::Involution => "involution",
            Suite::Symmetries => "symmetries",
            Suite::RowsCols => "rows-cols",
            Suite::Conjugation => "conjugation",
            Suite::Sums => "sums",
            Suite::Catalan => "catalan",
            Suite::SuperCatalan => "supercatalan",
            Suite::Zeon => "zeon",
        }
    }

    /// Resolves a suite name; `all` expands to every suite.
    pub fn select(name: &str) -> Result<Vec<Suite>, Error> {
        if name == "all" {
            return Ok(Self::ALL.to_vec());
        }
        Self::ALL
            .iter()
            .find(|s| s.name() == name)
            .map(|s| vec![*s])
            .ok_or_else(|| Error::Parse(name.to_string()))
    }

    pub fn uses_r(&self) -> bool {
        matches!(self, Suite::Pascal | Suite::Recurrence | Suite::Sums)
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL
            .iter()
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

/// The parameter sample used by default for `r`-dependent suites.
pub fn default_r_values() -> Vec<Rational> {
    ["0", "1", "2", "1/2", "3/7", "-2", "5"]
        .iter()
        .map(|s| parse_rational(s).expect("literal"))
        .collect()
}

/// A deliberate corruption: add one to entry `[row][col]` of every order-`order`
/// matrix a sweep builds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fault {
    pub order: usize,
    pub row: usize,
    pub col: usize,
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub max_n: usize,
    pub r_values: Vec<Rational>,
    pub failure_cap: usize,
    /// Worker threads; `None` or `Some(1)` runs sequentially.
    pub jobs: Option<usize>,
    pub fault: Option<Fault>,
}

impl SweepConfig {
    pub fn new(max_n: usize) -> Self {
        Self {
            max_n,
            r_values: default_r_values(),
            failure_cap: DEFAULT_FAILURE_CAP,
            jobs: None,
            fault: None,
        }
    }

    fn matrix(&self, order: usize, r: &Rational) -> KrawtchoukMatrix {
        let mut m = KrawtchoukMatrix::build(order, r);
        if let Some(f) = self.fault {
            if f.order == order && f.row <= order && f.col <= order {
                m.perturb(f.row, f.col, &Rational::one());
            }
        }
        m
    }

    fn symmetric(&self, order: usize) -> KrawtchoukMatrix {
        self.matrix(order, &Rational::one())
    }

    fn report(&self, name: &str) -> IdentityReport {
        IdentityReport::with_cap(name, self.failure_cap)
    }

    /// Evaluates `point` over `points` and folds the results in order.
    fn sweep<P, F>(&self, name: &str, points: Vec<P>, point: F) -> IdentityReport
    where
        P: Send + Sync,
        F: Fn(&P) -> IdentityReport + Send + Sync,
    {
        let parts: Vec<IdentityReport> = match self.jobs {
            Some(jobs) if jobs > 1 => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build()
                    .expect("thread pool");
                pool.install(|| points.par_iter().map(&point).collect())
            }
            _ => points.iter().map(&point).collect(),
        };
        let mut total = self.report(name);
        for part in parts {
            total.absorb(part);
        }
        total
    }
}

pub fn run_suite(suite: Suite, config: &SweepConfig) -> IdentityReport {
    let name = suite.name();
    let orders = |from: usize| (from..=config.max_n).collect::<Vec<_>>();
    let with_r = |from: usize| {
        orders(from)
            .into_iter()
            .flat_map(|n| config.r_values.iter().map(move |r| (n, r.clone())))
            .collect::<Vec<_>>()
    };
    match suite {
        Suite::Pascal => config.sweep(name, with_r(0), |(n, r)| {
            pascal_report(&config.matrix(*n, r), &config.matrix(n + 1, r))
        }),
        Suite::Recurrence => config.sweep(name, with_r(1), |(n, r)| {
            recurrence_report(&config.matrix(*n, r))
        }),
        Suite::Involution => config.sweep(name, orders(0), |&n| {
            let mut report = config.report(name);
            report.check_that(
                || format!("Phi^2 = 2^N I, N={n}"),
                involution_holds(&config.symmetric(n)),
                || ("Phi^2".into(), format!("{} I", Int::one() << n)),
            );
            report
        }),
        Suite::Symmetries => config.sweep(name, orders(0), |&n| {
            sign_symmetry_report(&config.symmetric(n))
        }),
        Suite::RowsCols => config.sweep(name, orders(0), |&n| {
            rows_cols_report(&config.symmetric(n), &config.symmetric(n + 1))
        }),
        Suite::Conjugation => config.sweep(name, orders(0), |&n| {
            conjugation_report(&config.symmetric(n))
        }),
        Suite::Sums => config.sweep(name, orders(0), |&n| sums_at(config, n)),
        Suite::Catalan => config.sweep(name, orders(0), |&n| catalan_at(config, n)),
        Suite::SuperCatalan => {
            config.sweep(name, orders(0), |&n| super_catalan_at(config, n as u64))
        }
        Suite::Zeon => config.sweep(
            name,
            (1..=config.max_n.min(ZEON_MAX_N) as u32).collect(),
            |&n| zeon_at(config, n),
        ),
    }
}

/// Runs every named suite, in order.
pub fn run_suites(suites: &[Suite], config: &SweepConfig) -> Vec<IdentityReport> {
    suites.iter().map(|s| run_suite(*s, config)).collect()
}

/// General-`r` sums of squares at order `N` over every `r` (except -1) and every `(j, m)`.
pub fn general_sums_at(config: &SweepConfig, n: usize) -> IdentityReport {
    let mut report = config.report("sum-squares-general");
    if n == 0 {
        return report;
    }
    for r in config
        .r_values
        .iter()
        .filter(|r| !(Rational::one() + *r).is_zero())
    {
        let (phi, below) = (config.matrix(n, r), config.matrix(n - 1, r));
        for j in 0..=n {
            for m in 0..=n {
                let p = PartialSumParams {
                    order: n,
                    column: j,
                    limit: m,
                };
                let (lhs, rhs) = sum_squares_general_with(&phi, &below, p).expect("r != -1");
                report.check(|| format!("general N={n} r={r} j={j} m={m}"), &lhs, &rhs);
            }
        }
    }
    report
}

/// Symmetric-case sums at order `N`: sums of squares (and their agreement
/// with the general form at `r = 1`), plain partial sums, column partial
/// sums, and full column/row sums of squares.
pub fn symmetric_sums_at(config: &SweepConfig, n: usize) -> IdentityReport {
    let mut report = config.report("sums-symmetric");
    let phi = config.symmetric(n);
    for j in 0..=n {
        let (brute, closed) = column_sum_of_squares_with(&phi, j);
        report.check(
            || format!("column-squares N={n} j={j}"),
            &int(brute),
            &closed,
        );
        report.check_that(
            || format!("column-squares-integral N={n} j={j}"),
            closed.is_integer(),
            || (closed.to_string(), "integer".into()),
        );
        let (brute, closed) = row_sum_of_squares_with(&phi, j);
        report.check(
            || format!("row-squares N={n} i={j}"),
            &int(brute),
            &int(closed),
        );
    }
    if n == 0 {
        return report;
    }
    let below = config.symmetric(n - 1);
    let one = Rational::one();
    let general = config.matrix(n, &one);
    let general_below = config.matrix(n - 1, &one);
    for j in 0..=n {
        for m in 0..=n {
            let p = PartialSumParams {
                order: n,
                column: j,
                limit: m,
            };
            let (lhs, rhs) = sum_squares_symmetric_with(&phi, &below, p);
            report.check(
                || format!("symmetric-squares N={n} j={j} m={m}"),
                &lhs,
                &rhs,
            );
            let (glhs, grhs) =
                sum_squares_general_with(&general, &general_below, p).expect("r = 1");
            report.check(
                || format!("symmetric-vs-general lhs N={n} j={j} m={m}"),
                &lhs,
                &glhs,
            );
            report.check(
                || format!("symmetric-vs-general rhs N={n} j={j} m={m}"),
                &rhs,
                &grhs,
            );
            if m == n {
                report.check(
                    || format!("full-column N={n} j={j}"),
                    &lhs,
                    &Rational::zero(),
                );
            }
            if j >= 2 {
                let (lhs, first, second) = partial_sum_plain_with(&phi, &below, p);
                report.check(
                    || format!("plain-sum first N={n} j={j} m={m}"),
                    &lhs,
                    &first,
                );
                report.check(
                    || format!("plain-sum second N={n} j={j} m={m}"),
                    &lhs,
                    &second,
                );
            }
            if j < n && m < n {
                let (lhs, rhs) = column_sum_relation_with(&phi, &below, j, m);
                report.check(|| format!("column-sum N={n} j={j} m={m}"), &lhs, &rhs);
            }
        }
    }
    report
}

fn sums_at(config: &SweepConfig, n: usize) -> IdentityReport {
    let mut report = general_sums_at(config, n);
    report.absorb(symmetric_sums_at(config, n));
    report
}

/// Integrality of the closed column sum of squares, for every column of order `N`.
pub fn column_square_integrality(n: usize) -> IdentityReport {
    let mut report = IdentityReport::new("column-squares-integral");
    for j in 0..=n {
        let closed = column_squares_closed(n, j);
        report.check_that(
            || format!("N={n} j={j}"),
            closed.is_integer(),
            || (closed.to_string(), "integer".into()),
        );
    }
    report
}

/// Middle-row closed forms at order `n`, plus the Catalan evaluations and
/// column-square links whose largest order is `n`.
fn catalan_at(config: &SweepConfig, n: usize) -> IdentityReport {
    let mut report = central_row_at(config, n);
    if n >= 3 && n % 2 == 1 {
        let m = (n - 1) / 2;
        report.absorb(catalan_connection_with(
            &config.symmetric(2 * m),
            &config.symmetric(n),
        ));
    }
    if n.is_multiple_of(2) {
        report.absorb(column_square_link_at(config, n / 2));
    }
    report
}

pub fn central_row_at(config: &SweepConfig, n: usize) -> IdentityReport {
    let mut report = config.report("central-row");
    let phi = config.symmetric(n);
    for j in 0..=n {
        let closed = central_row_value(n, j).expect("j <= N");
        report.check(
            || format!("central-row N={n} j={j}"),
            phi.get(n / 2, j),
            &closed,
        );
    }
    report
}

pub fn column_square_link_at(config: &SweepConfig, m: usize) -> IdentityReport {
    let mut report = config.report("column-square-link");
    let (small, double) = (config.symmetric(m), config.symmetric(2 * m));
    for j in (0..=2 * m).step_by(2) {
        let (lhs, rhs) = column_square_central_link_with(&small, &double, j);
        report.check(|| format!("column-square-link m={m} j={j}"), &lhs, &rhs);
    }
    report
}

/// Super Catalan identities at `n`: the binomial form, the symmetry
/// `S(n, k) = S(n, n-k)`, and `(n+1) C_n = binom(2n, n)`.
pub fn super_catalan_at(config: &SweepConfig, n: u64) -> IdentityReport {
    let mut report = config.report("supercatalan");
    for k in 0..=n {
        let (lhs, rhs) = crate::identities::super_catalan_link(n, k).expect("k <= n");
        report.check(|| format!("binomial-form n={n} k={k}"), &lhs, &rhs);
        let mirrored = int(super_catalan(n, n - k).expect("k <= n"));
        report.check(|| format!("symmetry n={n} k={k}"), &rhs, &mirrored);
    }
    report.check(
        || format!("catalan n={n}"),
        &int(catalan(n) * (n + 1)),
        &int(binomial(2 * n, n as i64)),
    );
    report
}

fn same(
    report: &mut IdentityReport,
    case: impl FnOnce() -> String,
    a: &ZeonMatrix,
    b: &ZeonMatrix,
) {
    report.check_that(case, a == b, || {
        (format!("nnz {}", a.nnz()), format!("nnz {}", b.nnz()))
    });
}

/// Operator identities on the Boolean lattice of `{1..n}`.
pub fn zeon_at(config: &SweepConfig, n: u32) -> IdentityReport {
    let mut report = config.report("zeon");
    let raises: Vec<ZeonMatrix> = (1..=n).map(|i| raise(n, i).expect("i <= n")).collect();
    let lowers: Vec<ZeonMatrix> = (1..=n).map(|i| lower(n, i).expect("i <= n")).collect();
    let zero = ZeonMatrix::zero(n);
    for (k, (r, l)) in raises.iter().zip(&lowers).enumerate() {
        let i = k + 1;
        same(
            &mut report,
            || format!("lower = raise^T n={n} i={i}"),
            l,
            &r.transpose(),
        );
        same(
            &mut report,
            || format!("raise^2 = 0 n={n} i={i}"),
            &r.mul(r),
            &zero,
        );
        same(
            &mut report,
            || format!("lower^2 = 0 n={n} i={i}"),
            &l.mul(l),
            &zero,
        );
        for (k2, (r2, l2)) in raises.iter().zip(&lowers).enumerate().skip(k + 1) {
            let i2 = k2 + 1;
            same(
                &mut report,
                || format!("raise commute n={n} i={i} k={i2}"),
                &r.mul(r2),
                &r2.mul(r),
            );
            same(
                &mut report,
                || format!("lower commute n={n} i={i} k={i2}"),
                &l.mul(l2),
                &l2.mul(l),
            );
        }
    }
    let t = op_t(n).expect("n >= 1");
    let ts = op_tstar(n).expect("n >= 1");
    let u = op_u(n).expect("n >= 1");
    same(
        &mut report,
        || format!("T* = T^T n={n}"),
        &ts,
        &t.transpose(),
    );
    report.check(
        || format!("nnz(T) = n 2^(n-1) n={n}"),
        &int(t.nnz() as u64),
        &int(Int::from(n) << (n - 1)),
    );
    let per_generator = raises
        .iter()
        .zip(&lowers)
        .fold(ZeonMatrix::zero(n), |acc, (r, l)| {
            acc.add(&l.mul(r).sub(&r.mul(l)))
        });
    same(
        &mut report,
        || format!("sum_i [delta_i, e_i] = U n={n}"),
        &per_generator,
        &u,
    );
    report.check_that(
        || format!("U diagonal n={n}"),
        u.is_diagonal(),
        || ("off-diagonal".into(), "none".into()),
    );
    let mut multiplicity = vec![0u64; n as usize + 1];
    for (mask, value) in u.diagonal().iter().enumerate() {
        let layer = SubsetIndex(mask as u32).layer();
        multiplicity[layer as usize] += 1;
        report.check(
            || format!("U[I][I] = n - 2|I| n={n} I={mask}"),
            &int(value.clone()),
            &int(n as i64 - 2 * layer as i64),
        );
    }
    for (layer, count) in multiplicity.iter().enumerate() {
        report.check(
            || format!("multiplicity of {} n={n}", n as i64 - 2 * layer as i64),
            &int(*count),
            &int(binomial(n as u64, layer as i64)),
        );
    }
    report
}
