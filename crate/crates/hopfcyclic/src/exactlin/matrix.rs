//! Sparse matrices over an exact field.
//!
//! Entries are stored in a `BTreeMap` keyed by `(row, col)`, so iteration
//! order (and everything derived from it) is deterministic. The invariant
//! is that stored entries are nonzero and indices are in range.

use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix<S> {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), S>,
}

/// Labelled basis of a finite-dimensional vector space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeSpace {
    labels: Vec<String>,
}

impl FreeSpace {
    pub fn new(labels: Vec<String>) -> Self {
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            assert!(seen.insert(l.clone()), "duplicate basis label `{l}`");
        }
        FreeSpace { labels }
    }

    pub fn from_strs(labels: &[&str]) -> Self {
        Self::new(labels.iter().map(|s| s.to_string()).collect())
    }

    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Basis of the tensor product, labels joined by `⊗`.
    pub fn tensor(&self, other: &FreeSpace) -> FreeSpace {
        let mut labels = Vec::with_capacity(self.dimension() * other.dimension());
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        FreeSpace { labels }
    }
}

impl<S: Scalar> SparseMatrix<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_entries<I>(rows: usize, cols: usize, it: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, S)>,
    {
        let mut m = Self::zero(rows, cols);
        for (r, c, v) in it {
            let cur = m.get(r, c) + v;
            m.set(r, c, cur);
        }
        m
    }

    /// Column vector with a single 1 in position `i`.
    pub fn basis_vector(n: usize, i: usize) -> Self {
        let mut m = Self::zero(n, 1);
        m.set(i, 0, S::one());
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> S {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for (r, c, v) in self.iter() {
            m.set(c, r, v.clone());
        }
        m
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut m = Self::zero(self.rows, self.cols);
        for (r, c, v) in self.iter() {
            m.set(r, c, v.clone() * s.clone());
        }
        m
    }

    pub fn neg(&self) -> Self {
        let mut m = Self::zero(self.rows, self.cols);
        for (r, c, v) in self.iter() {
            m.set(r, c, -v.clone());
        }
        m
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (r, c, v) in other.iter() {
            let cur = m.get(r, c) + v.clone();
            m.set(r, c, cur);
        }
        m
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        // group rhs entries by row for sparse row lookup
        let mut by_row: BTreeMap<usize, Vec<(usize, &S)>> = BTreeMap::new();
        for (r, c, v) in other.iter() {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), S> = BTreeMap::new();
        for (r, k, v) in self.iter() {
            if let Some(row) = by_row.get(&k) {
                for (c, w) in row {
                    let e = acc.entry((r, *c)).or_insert_with(S::zero);
                    *e = e.clone() + v.clone() * (*w).clone();
                }
            }
        }
        let mut m = Self::zero(self.rows, other.cols);
        for ((r, c), v) in acc {
            m.set(r, c, v);
        }
        m
    }

    /// Kronecker product; the left factor is the slow index.
    pub fn kron(&self, other: &Self) -> Self {
        let mut m = Self::zero(self.rows * other.rows, self.cols * other.cols);
        for (r1, c1, v1) in self.iter() {
            for (r2, c2, v2) in other.iter() {
                m.set(
                    r1 * other.rows + r2,
                    c1 * other.cols + c2,
                    v1.clone() * v2.clone(),
                );
            }
        }
        m
    }

    /// Extract column `c` as a column vector.
    pub fn column(&self, c: usize) -> Self {
        let mut m = Self::zero(self.rows, 1);
        for (r, cc, v) in self.iter() {
            if cc == c {
                m.set(r, 0, v.clone());
            }
        }
        m
    }

    /// Assemble a matrix whose columns are the given column vectors.
    pub fn from_columns(rows: usize, columns: &[SparseMatrix<S>]) -> Self {
        let mut m = Self::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.rows, rows);
            assert_eq!(col.cols, 1);
            for (r, _, v) in col.iter() {
                m.set(r, j, v.clone());
            }
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<S>> {
        let mut d = vec![vec![S::zero(); self.cols]; self.rows];
        for (r, c, v) in self.iter() {
            d[r][c] = v.clone();
        }
        d
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }
}

impl<S: Scalar> fmt::Debug for SparseMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows.min(32) {
            let row: Vec<String> = (0..self.cols.min(32)).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}
