//! Structure statistics of matrix algebras generated by zeon operators.
//!
//! A finite-dimensional *-algebra is a direct sum of `m_i` copies of full
//! matrix algebras of degree `d_i`, and four numbers describe it:
//!
//! - degree `d = sum m_i d_i` (the ambient matrix size),
//! - dimension `delta = sum d_i^2`,
//! - centralizer dimension `zeta = sum m_i^2`,
//! - center dimension `z`, the number of components.
//!
//! [`compute_stats`] obtains all four by exact elimination on the generator
//! matrices; [`predicted_stats`] evaluates the closed forms for the three
//! operator families. The two routes share nothing but the generator matrices.

use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::combinatorics::{binom, catalan, int};
use crate::krawtchouk::KrawtchoukMatrix;
use crate::linalg::{sparse_rank, EchelonBasis, IntMatrix, SparseVec};
use crate::report::IdentityReport;
use crate::zeon::{op_t, op_tstar, op_u};
use crate::{Error, Int, Rational};

pub(crate) fn serialize_int<S: Serializer>(value: &Int, s: S) -> Result<S::Ok, S::Error> {
    match value.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&value.to_string()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraStats {
    #[serde(rename = "d", serialize_with = "serialize_int")]
    pub degree: Int,
    #[serde(rename = "delta", serialize_with = "serialize_int")]
    pub dimension: Int,
    #[serde(rename = "zeta", serialize_with = "serialize_int")]
    pub centralizer: Int,
    #[serde(rename = "z", serialize_with = "serialize_int")]
    pub center: Int,
}

impl AlgebraStats {
    pub fn new(
        d: impl Into<Int>,
        delta: impl Into<Int>,
        zeta: impl Into<Int>,
        z: impl Into<Int>,
    ) -> Self {
        Self {
            degree: d.into(),
            dimension: delta.into(),
            centralizer: zeta.into(),
            center: z.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    #[serde(rename = "m", serialize_with = "serialize_int")]
    pub multiplicity: Int,
    #[serde(rename = "d", serialize_with = "serialize_int")]
    pub degree: Int,
}

/// Multiset of `(m_i, d_i)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct ComponentSpec {
    pub components: Vec<Component>,
}

impl ComponentSpec {
    pub fn push(&mut self, multiplicity: Int, degree: Int) {
        self.components.push(Component {
            multiplicity,
            degree,
        });
    }

    pub fn degree(&self) -> Int {
        self.components
            .iter()
            .map(|c| &c.multiplicity * &c.degree)
            .sum()
    }

    pub fn dimension(&self) -> Int {
        self.components.iter().map(|c| &c.degree * &c.degree).sum()
    }

    pub fn centralizer(&self) -> Int {
        self.components
            .iter()
            .map(|c| &c.multiplicity * &c.multiplicity)
            .sum()
    }

    pub fn count(&self) -> usize {
        self.components.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyKind {
    /// The algebra generated by `U`.
    #[serde(rename = "U")]
    U,
    /// The algebra generated by `T` and `T*`.
    #[serde(rename = "T")]
    TTstar,
    /// The algebra generated by `T T*` and `T* T`.
    #[serde(rename = "TT")]
    TTstarTstarT,
}

impl FamilyKind {
    pub fn parse(token: &str) -> Result<Self, Error> {
        match token {
            "U" | "u" | "GEN_U" => Ok(Self::U),
            "T" | "t" | "GEN_T_TSTAR" => Ok(Self::TTstar),
            "TT" | "tt" | "GEN_TTSTAR_TSTART" => Ok(Self::TTstarTstarT),
            other => Err(Error::Parse(other.to_string())),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Self::U => "U",
            Self::TTstar => "T",
            Self::TTstarTstarT => "TT",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraFamily {
    pub kind: FamilyKind,
    pub n: u32,
}

impl AlgebraFamily {
    pub fn new(kind: FamilyKind, n: u32) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::Precondition("algebra families need n >= 1".into()));
        }
        Ok(Self { kind, n })
    }

    /// Generator matrices over the subset basis.
    pub fn generators(&self) -> Result<Vec<IntMatrix>, Error> {
        let n = self.n;
        Ok(match self.kind {
            FamilyKind::U => vec![op_u(n)?.to_dense()],
            FamilyKind::TTstar => vec![op_t(n)?.to_dense(), op_tstar(n)?.to_dense()],
            FamilyKind::TTstarTstarT => {
                let (t, ts) = (op_t(n)?, op_tstar(n)?);
                vec![t.mul(&ts).to_dense(), ts.mul(&t).to_dense()]
            }
        })
    }
}

fn common_size(generators: &[IntMatrix]) -> Result<usize, Error> {
    let first = generators.first().ok_or(Error::NoGenerators)?;
    let size = first.rows();
    for g in generators {
        if !g.is_square() || g.rows() != size {
            return Err(Error::SizeMismatch {
                expected: size,
                found: if g.rows() != size { g.rows() } else { g.cols() },
            });
        }
    }
    Ok(size)
}

fn vectorize(m: &IntMatrix) -> SparseVec {
    SparseVec::from_dense(m.as_slice())
}

/// Result of closing a set of matrices under multiplication.
#[derive(Debug, Clone)]
pub struct SpanClosure {
    /// Linearly independent matrices spanning the algebra.
    pub basis: Vec<IntMatrix>,
    /// Span dimension after the seed step and after each multiplication round.
    pub dimensions: Vec<usize>,
}

impl SpanClosure {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Smallest subspace containing the generators (and the identity when
/// `unital`) that is closed under multiplication. Each round multiplies the
/// matrices added in the previous round on the right by every generator.
pub fn span_closure(generators: &[IntMatrix], unital: bool) -> Result<SpanClosure, Error> {
    let size = common_size(generators)?;
    let mut echelon = EchelonBasis::new();
    let mut basis = Vec::new();
    let mut frontier = Vec::new();
    let seeds = unital
        .then(|| IntMatrix::identity(size))
        .into_iter()
        .chain(generators.iter().cloned());
    for seed in seeds {
        if echelon.insert(vectorize(&seed)) {
            frontier.push(basis.len());
            basis.push(seed);
        }
    }
    let mut dimensions = vec![basis.len()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &k in &frontier {
            for g in generators {
                let product = basis[k].mul(g);
                if echelon.insert(vectorize(&product)) {
                    next.push(basis.len());
                    basis.push(product);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        dimensions.push(basis.len());
        frontier = next;
    }
    Ok(SpanClosure { basis, dimensions })
}

pub fn span_closure_dimension(generators: &[IntMatrix], unital: bool) -> Result<usize, Error> {
    Ok(span_closure(generators, unital)?.dimension())
}

/// Rows of the linear system `X A - A X = 0` in the `d^2` row-major entries of `X`.
fn commutation_equations(a: &IntMatrix) -> Vec<SparseVec> {
    let d = a.rows();
    let mut by_col: Vec<Vec<(usize, &Int)>> = vec![Vec::new(); d];
    let mut by_row: Vec<Vec<(usize, &Int)>> = vec![Vec::new(); d];
    for (k, j, v) in a.nonzeros() {
        by_col[j].push((k, v));
        by_row[k].push((j, v));
    }
    let mut rows = Vec::new();
    for (i, row_i) in by_row.iter().enumerate() {
        for (j, col_j) in by_col.iter().enumerate() {
            // (XA)_ij = sum_k X_ik A_kj, (AX)_ij = sum_k A_ik X_kj
            let left = col_j.iter().map(|&(k, v)| (i * d + k, v.clone()));
            let right = row_i.iter().map(|&(k, v)| (k * d + j, -v.clone()));
            let row = SparseVec::from_pairs(left.chain(right));
            if !row.is_zero() {
                rows.push(row);
            }
        }
    }
    rows
}

/// Dimension of `{X : X A = A X for every generator A}`.
pub fn centralizer_dimension(generators: &[IntMatrix]) -> Result<usize, Error> {
    let d = common_size(generators)?;
    let rows: Vec<SparseVec> = generators.iter().flat_map(commutation_equations).collect();
    Ok(d * d - sparse_rank(rows))
}

/// Dimension of the center of the unital algebra generated by `generators`.
pub fn center_dimension(generators: &[IntMatrix]) -> Result<usize, Error> {
    let closure = span_closure(generators, true)?;
    Ok(center_dimension_of(&closure, generators))
}

/// Center of an already closed algebra: the elements `sum c_i B_i` of the
/// span that commute with every generator. The map
/// `c -> ([sum c_i B_i, A_k])_k` is linear in `c`, so the center dimension is
/// `dim - rank` of the commutators `[B_i, A_k]` stacked per basis element.
pub fn center_dimension_of(closure: &SpanClosure, generators: &[IntMatrix]) -> usize {
    let mut echelon = EchelonBasis::new();
    for b in &closure.basis {
        let stacked: Vec<Int> = generators
            .iter()
            .flat_map(|g| b.commutator(g).as_slice().to_vec())
            .collect();
        echelon.insert(SparseVec::from_dense(&stacked));
    }
    closure.dimension() - echelon.rank()
}

/// All four statistics of the unital algebra generated by `generators`.
pub fn compute_stats(generators: &[IntMatrix]) -> Result<AlgebraStats, Error> {
    let d = common_size(generators)?;
    let closure = span_closure(generators, true)?;
    let zeta = centralizer_dimension(generators)?;
    let z = center_dimension_of(&closure, generators);
    Ok(AlgebraStats::new(
        d as u64,
        closure.dimension() as u64,
        zeta as u64,
        z as u64,
    ))
}

/// Closed-form prediction for a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    /// Closed forms as stated; for `T T*, T* T` the center entry is the
    /// stated `1 + floor(n/2)`.
    pub stats: AlgebraStats,
    pub components: ComponentSpec,
    /// Number of components in the predicted decomposition.
    pub component_count: usize,
}

fn multiplicity(n: u32, alpha: u32) -> Int {
    let (n, a) = (n as i64, alpha as i64);
    binom(n, a) - binom(n, a - 1)
}

pub fn predicted_stats(family: AlgebraFamily) -> Prediction {
    let n = family.n;
    let ni = n as i64;
    let d = Int::one() << n;
    let half = n / 2;
    let mut components = ComponentSpec::default();
    let stats = match family.kind {
        FamilyKind::U => {
            for i in 0..=ni {
                components.push(binom(ni, i), Int::one());
            }
            AlgebraStats::new(d, ni + 1, binom(2 * ni, ni), ni + 1)
        }
        FamilyKind::TTstar => {
            for alpha in 0..=half {
                components.push(multiplicity(n, alpha), Int::from(n + 1 - 2 * alpha));
            }
            AlgebraStats::new(d, binom(ni + 3, 3), catalan(n as u64), 1 + half)
        }
        FamilyKind::TTstarTstarT => {
            for alpha in 0..=half {
                for _ in 0..n + 1 - 2 * alpha {
                    components.push(multiplicity(n, alpha), Int::one());
                }
            }
            let (delta, zeta) = if n.is_multiple_of(2) {
                let c = binom(ni, ni / 2);
                ((ni + 2) * (ni + 2) / 4, &c * &c)
            } else {
                let h = half as i64;
                (
                    (ni + 1) * (ni + 3) / 4,
                    Int::from(2) * binom(ni, h) * binom(ni - 1, h),
                )
            };
            AlgebraStats::new(d, delta, zeta, 1 + half)
        }
    };
    let component_count = components.count();
    Prediction {
        stats,
        components,
        component_count,
    }
}

/// Compares a component multiset with the four statistics. Mismatches are
/// listed in the report, never raised.
pub fn component_consistency(spec: &ComponentSpec, stats: &AlgebraStats) -> IdentityReport {
    let mut report = IdentityReport::new("component-consistency");
    report.check(
        || "sum m_i d_i = d".into(),
        &int(spec.degree()),
        &int(stats.degree.clone()),
    );
    report.check(
        || "sum d_i^2 = delta".into(),
        &int(spec.dimension()),
        &int(stats.dimension.clone()),
    );
    report.check(
        || "sum m_i^2 = zeta".into(),
        &int(spec.centralizer()),
        &int(stats.centralizer.clone()),
    );
    report.check(
        || "component count = z".into(),
        &int(spec.count() as u64),
        &int(stats.center.clone()),
    );
    report
}

/// A chain of values that must all coincide: a direct sum, intermediate
/// Krawtchouk-matrix evaluations, and a closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationCheck {
    pub lhs: Rational,
    pub steps: Vec<Rational>,
    pub rhs: Rational,
}

impl DerivationCheck {
    pub fn holds(&self) -> bool {
        self.steps.iter().all(|s| *s == self.lhs) && self.lhs == self.rhs
    }
}

fn require_positive(n: u32) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::Precondition("derivation checks need n >= 1".into()));
    }
    Ok(())
}

/// Degree of the `T, T*` algebra: `sum_{alpha <= floor(n/2)} Phi^N[1][alpha] Phi^N[alpha][1]`
/// with `N = n + 1`, against `2^n`. The step is the component form
/// `sum m_alpha d_alpha`.
pub fn degree_via_krawtchouk(n: u32) -> Result<DerivationCheck, Error> {
    require_positive(n)?;
    let phi = KrawtchoukMatrix::symmetric(n as usize + 1);
    let half = (n / 2) as usize;
    let lhs = (0..=half).map(|a| phi.get(1, a) * phi.get(a, 1)).sum();
    let components: Int = (0..=n / 2)
        .map(|a| multiplicity(n, a) * (n + 1 - 2 * a))
        .sum();
    Ok(DerivationCheck {
        lhs,
        steps: vec![int(components)],
        rhs: int(Int::one() << n),
    })
}

/// Dimension of the `T, T*` algebra: `sum_{alpha <= floor(n/2)} (n+1-2 alpha)^2`
/// against `binom(n+3, 3)`. The steps are half the brute-force row-1 sum of
/// squares of `Phi^N` and half its closed form `(N+1)N + 2 binom(N+1, 3)`.
pub fn delta_via_row_squares(n: u32) -> Result<DerivationCheck, Error> {
    require_positive(n)?;
    let big = n as i64 + 1;
    let phi = KrawtchoukMatrix::symmetric(big as usize);
    let lhs: Int = (0..=n / 2).map(|a| Int::from(n + 1 - 2 * a).pow(2)).sum();
    let half = Rational::new(1.into(), 2.into());
    let brute: Rational = phi.rows()[1].iter().map(|x| x * x).sum();
    let closed_row = int((big + 1) * big) + int(2) * int(binom(big + 1, 3));
    Ok(DerivationCheck {
        lhs: int(lhs),
        steps: vec![&half * brute, half * closed_row],
        rhs: int(binom(n as i64 + 3, 3)),
    })
}

/// Centralizer dimension of the `T T*, T* T` algebra:
/// `sum_{alpha <= m} (N - 2 alpha) Phi^N[alpha][1]^2`, `N = n + 1`, `m = floor(N/2)`,
/// against the even/odd closed form. The step is the symmetric sum-of-squares
/// right-hand side `(N-1) Phi^(N-1)[m][1]^2 + Phi^(N-1)[m][0]^2`.
pub fn zeta_via_theorem(n: u32) -> Result<DerivationCheck, Error> {
    require_positive(n)?;
    let big = n as usize + 1;
    let m = big / 2;
    let phi = KrawtchoukMatrix::symmetric(big);
    let below = KrawtchoukMatrix::symmetric(big - 1);
    let lhs = (0..=m)
        .map(|a| int((big - 2 * a) as i64) * phi.get(a, 1) * phi.get(a, 1))
        .sum();
    let step = int(big as i64 - 1) * below.coefficient(m as i64, 1).pow(2)
        + below.coefficient(m as i64, 0).pow(2);
    let family = AlgebraFamily {
        kind: FamilyKind::TTstarTstarT,
        n,
    };
    Ok(DerivationCheck {
        lhs,
        steps: vec![step],
        rhs: int(predicted_stats(family).stats.centralizer),
    })
}

/// Centralizer dimension of the `T, T*` algebra:
/// `sum_{alpha <= m} Phi^N[alpha][1]^2` against `C_n`, through half the
/// column-1 sum-of-squares closed form.
pub fn zeta_via_column_squares(n: u32) -> Result<DerivationCheck, Error> {
    require_positive(n)?;
    let big = n as usize + 1;
    let phi = KrawtchoukMatrix::symmetric(big);
    let lhs = (0..=big / 2).map(|a| phi.get(a, 1) * phi.get(a, 1)).sum();
    let half = Rational::new(1.into(), 2.into());
    let step = half * crate::identities::column_squares_closed(big, 1);
    Ok(DerivationCheck {
        lhs,
        steps: vec![step],
        rhs: int(catalan(n as u64)),
    })
}

/// Largest `n` that [`analyze_family`] accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComputeBudget {
    pub max_n: u32,
}

impl ComputeBudget {
    pub const DEFAULT_MAX_N: u32 = 5;
    pub const LARGE_MAX_N: u32 = 6;

    pub fn allow_large() -> Self {
        Self {
            max_n: Self::LARGE_MAX_N,
        }
    }
}

impl Default for ComputeBudget {
    fn default() -> Self {
        Self {
            max_n: Self::DEFAULT_MAX_N,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StatMatches {
    pub d: bool,
    pub delta: bool,
    pub zeta: bool,
    pub z: bool,
}

/// Computed statistics next to their predictions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub family: FamilyKind,
    pub n: u32,
    pub computed: AlgebraStats,
    pub predicted: AlgebraStats,
    /// Computed against predicted, field by field.
    pub matches: StatMatches,
    pub components: ComponentSpec,
    pub component_count: usize,
    /// Whether the computed center dimension equals the predicted component count.
    pub z_matches_components: bool,
    pub closure_dimensions: Vec<usize>,
    pub notes: Vec<String>,
}

impl FamilyReport {
    /// The stated center dimension of the `T T*, T* T` algebra disagrees with
    /// its own component count; that one mismatch is documented rather than
    /// treated as a failure.
    pub fn has_known_center_discrepancy(&self) -> bool {
        self.family == FamilyKind::TTstarTstarT && !self.matches.z && self.z_matches_components
    }

    pub fn unexpected_mismatch(&self) -> bool {
        let m = self.matches;
        !(m.d
            && m.delta
            && m.zeta
            && self.z_matches_components
            && (m.z || self.has_known_center_discrepancy()))
    }
}

pub fn analyze_family(family: AlgebraFamily, budget: ComputeBudget) -> Result<FamilyReport, Error> {
    if family.n > budget.max_n {
        return Err(Error::BudgetExceeded {
            n: family.n,
            max: budget.max_n,
        });
    }
    let generators = family.generators()?;
    let closure = span_closure(&generators, true)?;
    let zeta = centralizer_dimension(&generators)?;
    let z = center_dimension_of(&closure, &generators);
    let computed = AlgebraStats::new(
        generators[0].rows() as u64,
        closure.dimension() as u64,
        zeta as u64,
        z as u64,
    );
    let prediction = predicted_stats(family);
    let predicted = prediction.stats.clone();
    let matches = StatMatches {
        d: computed.degree == predicted.degree,
        delta: computed.dimension == predicted.dimension,
        zeta: computed.centralizer == predicted.centralizer,
        z: computed.center == predicted.center,
    };
    let z_matches_components = computed.center == Int::from(prediction.component_count);
    let mut notes = Vec::new();
    if family.n > ComputeBudget::DEFAULT_MAX_N {
        notes.push(format!(
            "n = {} is beyond the default budget; expect long runtimes",
            family.n
        ));
    }
    if family.kind == FamilyKind::TTstarTstarT && !matches.z {
        notes.push(format!(
            "stated z = {} differs from computed z = {} (component count {})",
            predicted.center, computed.center, prediction.component_count
        ));
    }
    Ok(FamilyReport {
        family: family.kind,
        n: family.n,
        computed,
        predicted,
        matches,
        components: prediction.components,
        component_count: prediction.component_count,
        z_matches_components,
        closure_dimensions: closure.dimensions,
        notes,
    })
}

/// Whether every generator is symmetric, so the algebra is closed under transpose.
pub fn is_star_closed(generators: &[IntMatrix]) -> bool {
    generators
        .iter()
        .all(|g| generators.contains(&g.transpose()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeon;

    fn family(kind: FamilyKind, n: u32) -> AlgebraFamily {
        AlgebraFamily::new(kind, n).unwrap()
    }

    #[test]
    fn span_closure_examples() {
        let u2 = family(FamilyKind::U, 2).generators().unwrap();
        assert_eq!(span_closure_dimension(&u2, true).unwrap(), 3);
        assert_eq!(
            span_closure_dimension(&[IntMatrix::identity(5)], true).unwrap(),
            1
        );
        let tt2 = family(FamilyKind::TTstarTstarT, 2).generators().unwrap();
        assert_eq!(span_closure_dimension(&tt2, true).unwrap(), 4);
        // the non-unital algebra of U misses the identity when 0 is an eigenvalue
        assert_eq!(span_closure_dimension(&u2, false).unwrap(), 2);
    }

    #[test]
    fn centralizer_examples() {
        let u2 = family(FamilyKind::U, 2).generators().unwrap();
        assert_eq!(centralizer_dimension(&u2).unwrap(), 6);
        let t2 = family(FamilyKind::TTstar, 2).generators().unwrap();
        assert_eq!(centralizer_dimension(&t2).unwrap(), 2);
        for d in 1..=5 {
            assert_eq!(
                centralizer_dimension(&[IntMatrix::identity(d)]).unwrap(),
                d * d
            );
        }
    }

    #[test]
    fn center_examples() {
        let u2 = family(FamilyKind::U, 2).generators().unwrap();
        assert_eq!(center_dimension(&u2).unwrap(), 3);
        let t4 = family(FamilyKind::TTstar, 4).generators().unwrap();
        assert_eq!(center_dimension(&t4).unwrap(), 3);
        assert_eq!(center_dimension(&[IntMatrix::identity(4)]).unwrap(), 1);
    }

    #[test]
    fn generator_validation() {
        assert_eq!(centralizer_dimension(&[]), Err(Error::NoGenerators));
        let mismatch = [IntMatrix::identity(2), IntMatrix::identity(3)];
        assert!(matches!(
            span_closure(&mismatch, true),
            Err(Error::SizeMismatch { .. })
        ));
        assert!(matches!(
            centralizer_dimension(&mismatch),
            Err(Error::SizeMismatch { .. })
        ));
        assert!(matches!(
            center_dimension(&[IntMatrix::zeros(2, 3)]),
            Err(Error::SizeMismatch { .. })
        ));
        assert!(AlgebraFamily::new(FamilyKind::U, 0).is_err());
    }

    #[test]
    fn rational_generators_are_rescaled() {
        let half = Rational::new(1.into(), 2.into());
        let u = zeon::op_u(2).unwrap().to_dense();
        let rows: Vec<Vec<Rational>> = (0..4)
            .map(|i| (0..4).map(|j| int(u[(i, j)].clone()) * &half).collect())
            .collect();
        let scaled = IntMatrix::from_rationals(&rows);
        assert_eq!(
            compute_stats(&[scaled]).unwrap(),
            compute_stats(&[u]).unwrap()
        );
    }

    #[test]
    fn predicted_examples() {
        let t4 = predicted_stats(family(FamilyKind::TTstar, 4));
        assert_eq!(t4.stats, AlgebraStats::new(16, 35, 14, 3));
        let tt4 = predicted_stats(family(FamilyKind::TTstarTstarT, 4));
        assert_eq!(
            (tt4.stats.dimension.clone(), tt4.stats.centralizer.clone()),
            (Int::from(9), Int::from(36))
        );
        let u1 = predicted_stats(family(FamilyKind::U, 1));
        assert_eq!(u1.stats, AlgebraStats::new(2, 2, 2, 2));
        assert_eq!(u1.components.components.len(), 2);
        assert!(u1
            .components
            .components
            .iter()
            .all(|c| c.multiplicity.is_one() && c.degree.is_one()));
    }

    #[test]
    fn consistency_examples() {
        let t4 = predicted_stats(family(FamilyKind::TTstar, 4));
        assert_eq!(t4.components.degree(), Int::from(16));
        assert_eq!(
            t4.components
                .components
                .iter()
                .map(|c| (c.multiplicity.clone(), c.degree.clone()))
                .collect::<Vec<_>>(),
            vec![
                (1.into(), 5.into()),
                (3.into(), 3.into()),
                (2.into(), 1.into())
            ]
        );
        assert!(component_consistency(&t4.components, &t4.stats).passed());
        let u3 = predicted_stats(family(FamilyKind::U, 3));
        assert_eq!(u3.components.centralizer(), Int::from(20));
        assert!(component_consistency(&u3.components, &u3.stats).passed());
        let tt2 = predicted_stats(family(FamilyKind::TTstarTstarT, 2));
        let report = component_consistency(&tt2.components, &tt2.stats);
        assert_eq!(report.failure_count, 1);
        assert_eq!(report.failures[0].case, "component count = z");
        assert_eq!(
            (
                report.failures[0].lhs.as_str(),
                report.failures[0].rhs.as_str()
            ),
            ("4", "2")
        );
    }

    #[test]
    fn derivation_examples() {
        let deg4 = degree_via_krawtchouk(4).unwrap();
        assert_eq!(deg4.rhs, int(16));
        assert!(deg4.holds());
        assert!(degree_via_krawtchouk(1).unwrap().holds());
        assert_eq!(degree_via_krawtchouk(7).unwrap().lhs, int(128));
        let d4 = delta_via_row_squares(4).unwrap();
        assert_eq!((d4.lhs.clone(), d4.holds()), (int(35), true));
        assert_eq!(delta_via_row_squares(1).unwrap().lhs, int(4));
        assert_eq!(delta_via_row_squares(7).unwrap().rhs, int(120));
        assert_eq!(zeta_via_theorem(4).unwrap().rhs, int(36));
        assert_eq!(zeta_via_theorem(3).unwrap().rhs, int(12));
        assert_eq!(zeta_via_theorem(1).unwrap().lhs, int(2));
        for n in 1..=10 {
            assert!(zeta_via_theorem(n).unwrap().holds(), "n={n}");
            assert!(zeta_via_column_squares(n).unwrap().holds(), "n={n}");
        }
        assert!(degree_via_krawtchouk(0).is_err());
    }

    #[test]
    fn analyze_small_families() {
        let u4 = analyze_family(family(FamilyKind::U, 4), ComputeBudget::default()).unwrap();
        assert_eq!(u4.computed, AlgebraStats::new(16, 5, 70, 5));
        assert!(!u4.unexpected_mismatch());
        let t3 = analyze_family(family(FamilyKind::TTstar, 3), ComputeBudget::default()).unwrap();
        assert_eq!(t3.computed, AlgebraStats::new(8, 20, 5, 2));
        assert!(!t3.unexpected_mismatch());
        let tt2 = analyze_family(
            family(FamilyKind::TTstarTstarT, 2),
            ComputeBudget::default(),
        )
        .unwrap();
        assert_eq!(tt2.computed, AlgebraStats::new(4, 4, 4, 4));
        assert_eq!(tt2.predicted.center, Int::from(2));
        assert!(!tt2.matches.z);
        assert!(tt2.has_known_center_discrepancy());
        assert!(!tt2.unexpected_mismatch());
        assert_eq!(tt2.notes.len(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let err = analyze_family(family(FamilyKind::U, 6), ComputeBudget::default()).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { n: 6, max: 5 });
    }

    #[test]
    fn closure_grows_strictly() {
        for kind in [FamilyKind::U, FamilyKind::TTstar, FamilyKind::TTstarTstarT] {
            for n in 1..=4 {
                let gens = family(kind, n).generators().unwrap();
                let closure = span_closure(&gens, true).unwrap();
                assert!(closure.dimensions.windows(2).all(|w| w[0] < w[1]));
                assert!(closure.dimensions.len() <= 1 << (2 * n));
                assert_eq!(*closure.dimensions.last().unwrap(), closure.dimension());
            }
        }
    }

    #[test]
    fn generator_sets_are_star_closed() {
        for kind in [FamilyKind::U, FamilyKind::TTstar, FamilyKind::TTstarTstarT] {
            assert!(is_star_closed(&family(kind, 3).generators().unwrap()));
        }
    }
}
