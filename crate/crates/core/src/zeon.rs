//! Raising and lowering operators on the Boolean lattice.
//!
//! The zeon algebra on `n` generators `e_1..e_n` (commuting, `e_i^2 = 0`) has
//! the basis `e_I` over subsets `I` of `{1..n}`. A subset is a bitmask with bit
//! `i-1` standing for element `i`, and basis vectors are ordered by mask value.
//! Operators act on column vectors, so `A * B` applies `B` first.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::linalg::IntMatrix;
use crate::{Error, Int};

/// Subset of `{1..n}` as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetIndex(pub u32);

impl SubsetIndex {
    pub fn from_elements(elements: &[u32]) -> Self {
        Self(elements.iter().fold(0, |mask, &i| mask | (1 << (i - 1))))
    }

    /// Size of the subset, i.e. its layer in the lattice.
    pub fn layer(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, i: u32) -> bool {
        self.0 & (1 << (i - 1)) != 0
    }

    pub fn elements(self) -> Vec<u32> {
        (1..=32).filter(|&i| self.contains(i)).collect()
    }
}

/// Zeon product of basis elements: `e_I e_J = e_(I u J)` when the subsets are
/// disjoint, and `None` (the product vanishes) otherwise.
pub fn zeon_mul(a: SubsetIndex, b: SubsetIndex) -> Option<SubsetIndex> {
    (a.0 & b.0 == 0).then_some(SubsetIndex(a.0 | b.0))
}

/// Sparse `2^n x 2^n` integer matrix indexed by subsets. Zero entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeonMatrix {
    n: u32,
    entries: BTreeMap<(u32, u32), Int>,
}

const MAX_GENERATORS: u32 = 16;

impl ZeonMatrix {
    pub fn zero(n: u32) -> Self {
        assert!(
            n <= MAX_GENERATORS,
            "n = {n} is too large for a dense subset index"
        );
        Self {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: u32) -> Self {
        let mut out = Self::zero(n);
        for mask in 0..1u32 << n {
            out.entries.insert((mask, mask), Int::one());
        }
        out
    }

    pub fn generators(&self) -> u32 {
        self.n
    }

    pub fn size(&self) -> usize {
        1 << self.n
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: SubsetIndex, col: SubsetIndex) -> Int {
        self.entries
            .get(&(row.0, col.0))
            .cloned()
            .unwrap_or_default()
    }

    /// Stored entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (SubsetIndex, SubsetIndex, &Int)> {
        self.entries
            .iter()
            .map(|(&(r, c), v)| (SubsetIndex(r), SubsetIndex(c), v))
    }

    fn add_entry(&mut self, row: u32, col: u32, value: Int) {
        use std::collections::btree_map::Entry;
        if value.is_zero() {
            return;
        }
        match self.entries.entry((row, col)) {
            Entry::Vacant(slot) => {
                slot.insert(value);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += value;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (&(r, c), v) in &self.entries {
            out.entries.insert((c, r), v.clone());
        }
        out
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_entry(r, c, if negate { -v.clone() } else { v.clone() });
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut by_row: BTreeMap<u32, Vec<(u32, &Int)>> = BTreeMap::new();
        for (&(r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = Self::zero(self.n);
        for (&(r, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(c, b) in row {
                    out.add_entry(r, c, a * b);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|(r, c)| r == c)
    }

    /// Diagonal in subset order.
    pub fn diagonal(&self) -> Vec<Int> {
        (0..1u32 << self.n)
            .map(|i| self.entries.get(&(i, i)).cloned().unwrap_or_default())
            .collect()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut dense = IntMatrix::zeros(self.size(), self.size());
        for (&(r, c), v) in &self.entries {
            dense[(r as usize, c as usize)] = v.clone();
        }
        dense
    }

    /// Coordinate text: a `#` header line, then one `row col value` line per
    /// stored entry in row-major order.
    pub fn to_coordinate_text(&self, name: &str) -> String {
        let mut out = format!(
            "# zeon op={name} n={} size={} nnz={}\n",
            self.n,
            self.size(),
            self.nnz()
        );
        for (&(r, c), v) in &self.entries {
            writeln!(out, "{r} {c} {v}").expect("write to string");
        }
        out
    }

    pub fn to_json(&self, name: &str) -> serde_json::Value {
        let export = ZeonExport {
            schema: 1,
            op: name.to_string(),
            n: self.n,
            size: self.size(),
            nnz: self.nnz(),
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| (r, c, v.to_string()))
                .collect(),
            diagonal: self
                .is_diagonal()
                .then(|| self.diagonal().iter().map(Int::to_string).collect()),
        };
        serde_json::to_value(export).expect("serializable")
    }
}

#[derive(Serialize)]
struct ZeonExport {
    schema: u32,
    op: String,
    n: u32,
    size: usize,
    nnz: usize,
    entries: Vec<(u32, u32, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diagonal: Option<Vec<String>>,
}

fn check_index(n: u32, i: u32) -> Result<(), Error> {
    if i == 0 || i > n {
        return Err(Error::Precondition(format!(
            "generator index {i} outside 1..={n}"
        )));
    }
    Ok(())
}

/// Multiplication by `e_i`.
pub fn raise(n: u32, i: u32) -> Result<ZeonMatrix, Error> {
    check_index(n, i)?;
    let bit = SubsetIndex::from_elements(&[i]);
    let mut out = ZeonMatrix::zero(n);
    for mask in 0..1u32 << n {
        if let Some(target) = zeon_mul(bit, SubsetIndex(mask)) {
            out.entries.insert((target.0, mask), Int::one());
        }
    }
    Ok(out)
}

/// The adjoint of [`raise`]: removes `i` from subsets that contain it.
pub fn lower(n: u32, i: u32) -> Result<ZeonMatrix, Error> {
    check_index(n, i)?;
    let mut out = ZeonMatrix::zero(n);
    for mask in 0..1u32 << n {
        let subset = SubsetIndex(mask);
        if subset.contains(i) {
            out.entries
                .insert((mask & !(1 << (i - 1)), mask), Int::one());
        }
    }
    Ok(out)
}

fn require_generators(n: u32) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::Precondition("operators need n >= 1".into()));
    }
    Ok(())
}

/// `T = sum_i e_i`.
pub fn op_t(n: u32) -> Result<ZeonMatrix, Error> {
    require_generators(n)?;
    (1..=n).try_fold(ZeonMatrix::zero(n), |acc, i| Ok(acc.add(&raise(n, i)?)))
}

/// `T* = sum_i delta_i`.
pub fn op_tstar(n: u32) -> Result<ZeonMatrix, Error> {
    require_generators(n)?;
    (1..=n).try_fold(ZeonMatrix::zero(n), |acc, i| Ok(acc.add(&lower(n, i)?)))
}

/// `U = [T*, T] = T* T - T T*`.
pub fn op_u(n: u32) -> Result<ZeonMatrix, Error> {
    let t = op_t(n)?;
    let ts = op_tstar(n)?;
    Ok(ts.mul(&t).sub(&t.mul(&ts)))
}

/// Parsed operator token: `T`, `Tstar`, `U`, `raise:i` or `lower:i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    T,
    TStar,
    U,
    Raise(u32),
    Lower(u32),
}

impl OperatorKind {
    pub fn parse(token: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(token.to_string());
        match token {
            "T" => Ok(Self::T),
            "Tstar" | "T*" => Ok(Self::TStar),
            "U" => Ok(Self::U),
            other => {
                let (kind, index) = other.split_once(':').ok_or_else(bad)?;
                let index: u32 = index.parse().map_err(|_| bad())?;
                match kind {
                    "raise" => Ok(Self::Raise(index)),
                    "lower" => Ok(Self::Lower(index)),
                    _ => Err(bad()),
                }
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            Self::T => "T".into(),
            Self::TStar => "Tstar".into(),
            Self::U => "U".into(),
            Self::Raise(i) => format!("raise:{i}"),
            Self::Lower(i) => format!("lower:{i}"),
        }
    }

    pub fn build(&self, n: u32) -> Result<ZeonMatrix, Error> {
        match *self {
            Self::T => op_t(n),
            Self::TStar => op_tstar(n),
            Self::U => op_u(n),
            Self::Raise(i) => raise(n, i),
            Self::Lower(i) => lower(n, i),
        }
    }
}
