//! Exact linear algebra over the integers.
//!
//! Rank computations use fraction-free elimination: eliminating the leading
//! entry of `v` against a row `w` with the same leading column replaces `v` by
//! `(w_p / g) v - (v_p / g) w`, `g = gcd(v_p, w_p)`, and every stored row is
//! divided by the gcd of its entries. Nothing ever leaves the integers, and
//! the rank over the rationals is the rank of the integer echelon form.
//!
//! Sparse systems are first split into independent blocks (rows that share no
//! column with each other), whose ranks add up.

use std::collections::{BTreeMap, HashMap};
use std::ops::{Index, IndexMut};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::{Int, Rational};

/// Dense integer matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut out = Self::zeros(size, size);
        for i in 0..size {
            out[(i, i)] = Int::one();
        }
        out
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Clears denominators: returns `c * M` for the least positive integer `c`
    /// that makes every entry integral.
    pub fn from_rationals(rows: &[Vec<Rational>]) -> Self {
        let lcm = rows
            .iter()
            .flatten()
            .fold(Int::one(), |acc, x| acc.lcm(x.denom()));
        let scaled = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
                    .collect()
            })
            .collect();
        Self::from_rows(scaled)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entries in row-major order; this is the vectorization used for
    /// spans of matrices.
    pub fn as_slice(&self) -> &[Int] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Int)> {
        let cols = self.cols;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / cols, k % cols, v))
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

/// Sparse integer vector, sorted by column with no stored zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseVec(Vec<(usize, Int)>);

impl SparseVec {
    pub fn from_dense(values: &[Int]) -> Self {
        Self(
            values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| (k, v.clone()))
                .collect(),
        )
    }

    /// Builds from unsorted `(column, value)` pairs, summing duplicates.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Int)>) -> Self {
        let mut acc: BTreeMap<usize, Int> = BTreeMap::new();
        for (k, v) in pairs {
            *acc.entry(k).or_default() += v;
        }
        Self(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Int)] {
        &self.0
    }

    fn lead(&self) -> Option<&(usize, Int)> {
        self.0.first()
    }

    /// Divides by the gcd of the entries and makes the leading entry positive.
    fn normalize(&mut self) {
        let Some((_, first)) = self.0.first() else {
            return;
        };
        let mut g = first.abs();
        for (_, v) in &self.0[1..] {
            if g.is_one() {
                break;
            }
            g = g.gcd(v);
        }
        if first.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, v) in &mut self.0 {
                *v /= &g;
            }
        }
    }

    /// `a * self - b * other`, merged column by column.
    fn combine(&self, a: &Int, other: &SparseVec, b: &Int) -> SparseVec {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut x, mut y) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            let next = match (x.peek(), y.peek()) {
                (Some(&&(i, ref u)), Some(&&(j, ref w))) => {
                    if i < j {
                        x.next();
                        (i, a * u)
                    } else if j < i {
                        y.next();
                        (j, -(b * w))
                    } else {
                        x.next();
                        y.next();
                        (i, a * u - b * w)
                    }
                }
                (Some(&&(i, ref u)), None) => {
                    x.next();
                    (i, a * u)
                }
                (None, Some(&&(j, ref w))) => {
                    y.next();
                    (j, -(b * w))
                }
                (None, None) => break,
            };
            if !next.1.is_zero() {
                out.push(next);
            }
        }
        SparseVec(out)
    }
}

/// Row echelon basis built one vector at a time. Rows have pairwise distinct
/// leading columns.
#[derive(Debug, Clone, Default)]
pub struct EchelonBasis {
    rows: HashMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis and reports whether it was independent.
    /// Independent vectors are added to the basis.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        match self.reduce(v) {
            Some(rest) => {
                let lead = rest.lead().expect("nonzero").0;
                self.rows.insert(lead, rest);
                true
            }
            None => false,
        }
    }

    /// Whether `v` lies in the span of the basis.
    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_none()
    }

    fn reduce(&self, mut v: SparseVec) -> Option<SparseVec> {
        v.normalize();
        loop {
            let (col, coeff) = v.lead()?;
            let Some(row) = self.rows.get(col) else {
                return Some(v);
            };
            let pivot = &row.0[0].1;
            let g = coeff.gcd(pivot);
            let (a, b) = (pivot / &g, coeff / &g);
            v = v.combine(&a, row, &b);
            v.normalize();
        }
    }
}

/// Rank of a sparse row system, split into independent blocks and eliminated
/// block by block. The result does not depend on the number of worker threads.
pub fn sparse_rank(rows: Vec<SparseVec>) -> usize {
    block_decompose(rows)
        .into_par_iter()
        .map(|block| {
            let mut basis = EchelonBasis::new();
            for row in block {
                basis.insert(row);
            }
            basis.rank()
        })
        .sum()
}

fn find(parent: &mut HashMap<usize, usize>, x: usize) -> usize {
    let mut root = x;
    while let Some(&p) = parent.get(&root) {
        if p == root {
            break;
        }
        root = p;
    }
    let mut cur = x;
    while cur != root {
        let next = parent[&cur];
        parent.insert(cur, root);
        cur = next;
    }
    root
}

/// Groups rows into blocks that share no column across blocks. Blocks and the
/// rows inside them keep their input order.
pub fn block_decompose(rows: Vec<SparseVec>) -> Vec<Vec<SparseVec>> {
    let mut parent: HashMap<usize, usize> = HashMap::new();
    for row in &rows {
        let mut cols = row.0.iter().map(|(c, _)| *c);
        let Some(first) = cols.next() else { continue };
        parent.entry(first).or_insert(first);
        let a = find(&mut parent, first);
        for c in cols {
            parent.entry(c).or_insert(c);
            let b = find(&mut parent, c);
            if a != b {
                parent.insert(b, a);
            }
        }
    }
    let mut order: Vec<usize> = Vec::new();
    let mut blocks: HashMap<usize, Vec<SparseVec>> = HashMap::new();
    for row in rows {
        let Some(&(first, _)) = row.lead() else {
            continue;
        };
        let root = find(&mut parent, first);
        blocks
            .entry(root)
            .or_insert_with(|| {
                order.push(root);
                Vec::new()
            })
            .push(row);
    }
    order
        .into_iter()
        .map(|root| blocks.remove(&root).expect("block"))
        .collect()
}

/// Basis of the rational nullspace `{x : A x = 0}` for a dense system with
/// `width` unknowns, via reduced row echelon form. Intended for small systems.
pub fn nullspace_basis(rows: &[Vec<Int>], width: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), width);
            r.iter().cloned().map(Rational::from_integer).collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..width {
        let Some(p) = (next..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(next, p);
        let inv = m[next][col].recip();
        for x in &mut m[next] {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != next && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let pivot_row = m[next].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        next += 1;
    }
    let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); width];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -m[row][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(values: &[i64]) -> Vec<Int> {
        values.iter().map(|&v| Int::from(v)).collect()
    }

    fn sv(values: &[i64]) -> SparseVec {
        SparseVec::from_dense(&ints(values))
    }

    /// Rank by Gaussian elimination over the rationals, independent of the
    /// fraction-free path.
    fn rational_rank(rows: &[Vec<i64>]) -> usize {
        let width = rows.first().map_or(0, Vec::len);
        let dense: Vec<Vec<Int>> = rows.iter().map(|r| ints(r)).collect();
        width - nullspace_basis(&dense, width).len()
    }

    #[test]
    fn echelon_rank_small() {
        let mut basis = EchelonBasis::new();
        assert!(basis.insert(sv(&[2, 4, 6])));
        assert!(!basis.insert(sv(&[1, 2, 3])));
        assert!(basis.insert(sv(&[0, 3, 1])));
        assert!(!basis.insert(sv(&[4, 11, 13])));
        assert!(!basis.insert(sv(&[0, 0, 0])));
        assert_eq!(basis.rank(), 2);
        assert!(basis.contains(sv(&[2, 7, 7])));
        assert!(!basis.contains(sv(&[0, 0, 1])));
    }

    #[test]
    fn sparse_rank_matches_rational_rank() {
        let rows = vec![
            vec![1, 0, 0, 2, 0, 0],
            vec![0, 3, 0, 0, -1, 0],
            vec![2, 0, 0, 4, 0, 0],
            vec![0, 0, 5, 0, 0, 7],
            vec![0, 6, 0, 0, -2, 0],
            vec![0, 0, 0, 0, 0, 1],
        ];
        let sparse = rows.iter().map(|r| sv(r)).collect();
        assert_eq!(sparse_rank(sparse), rational_rank(&rows));
        assert_eq!(rational_rank(&rows), 4);
    }

    #[test]
    fn blocks_do_not_share_columns() {
        let rows = vec![
            sv(&[1, 0, 1, 0]),
            sv(&[0, 1, 0, 0]),
            sv(&[0, 0, 1, 1]),
            sv(&[0, 0, 0, 0]),
        ];
        let blocks = block_decompose(rows);
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].len(), 2);
        assert_eq!(blocks[1].len(), 1);
    }

    #[test]
    fn nullspace_of_rank_one() {
        let basis = nullspace_basis(&[ints(&[1, 2, 3])], 3);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let dot: Rational = v
                .iter()
                .zip([1, 2, 3])
                .map(|(x, c)| x * Rational::from_integer(c.into()))
                .sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn dense_products() {
        let a = IntMatrix::from_rows(vec![ints(&[0, 1]), ints(&[0, 0])]);
        let b = a.transpose();
        assert_eq!(a.mul(&a), IntMatrix::zeros(2, 2));
        assert_eq!(
            b.commutator(&a),
            IntMatrix::from_rows(vec![ints(&[-1, 0]), ints(&[0, 1])])
        );
        assert_eq!(
            IntMatrix::identity(3).mul(&IntMatrix::identity(3)),
            IntMatrix::identity(3)
        );
        assert_eq!(
            a.nonzeros().map(|(i, j, _)| (i, j)).collect::<Vec<_>>(),
            vec![(0, 1)]
        );
    }

    #[test]
    fn clears_denominators() {
        let half = Rational::new(1.into(), 2.into());
        let third = Rational::new((-1).into(), 3.into());
        let m = IntMatrix::from_rationals(&[vec![half, third]]);
        assert_eq!(m, IntMatrix::from_rows(vec![ints(&[3, -2])]));
    }

    proptest::proptest! {
        #[test]
        fn fraction_free_rank_agrees(rows in proptest::collection::vec(proptest::collection::vec(-3i64..4, 5), 1..7)) {
            let sparse = rows.iter().map(|r| sv(r)).collect();
            proptest::prop_assert_eq!(sparse_rank(sparse), rational_rank(&rows));
        }
    }
}
