//! Quotients and subspaces of a free space, with deterministic bases.

use super::elim::{kernel_basis, solve, Rref};
use super::matrix::SparseMatrix;
use crate::scalar::Scalar;

/// Quotient of an ambient space by the column span of a relation matrix.
///
/// The quotient basis consists of the classes of standard basis vectors at
/// the non-pivot coordinates of the reduced relation span, so it is fully
/// determined by the pivot rule.
pub struct QuotientSpace<S> {
    ambient_dim: usize,
    rref: Rref<S>,
    free: Vec<usize>,
}

impl<S: Scalar> QuotientSpace<S> {
    /// `relations` has the ambient dimension as row count; its columns span
    /// the subspace being killed.
    pub fn new(relations: &SparseMatrix<S>) -> Self {
        let rref = Rref::of(&relations.transpose());
        let free = rref.free_columns();
        QuotientSpace {
            ambient_dim: relations.rows(),
            rref,
            free,
        }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Projection matrix ambient -> quotient.
    pub fn projection(&self) -> SparseMatrix<S> {
        let mut p = SparseMatrix::zero(self.dim(), self.ambient_dim);
        for i in 0..self.ambient_dim {
            let mut v = vec![S::zero(); self.ambient_dim];
            v[i] = num_traits::One::one();
            self.rref.reduce(&mut v);
            for (j, &f) in self.free.iter().enumerate() {
                if !v[f].is_zero() {
                    p.set(j, i, v[f].clone());
                }
            }
        }
        p
    }

    /// Section matrix quotient -> ambient, sending the j-th quotient basis
    /// vector to the standard vector at its free coordinate.
    pub fn section(&self) -> SparseMatrix<S> {
        let mut s = SparseMatrix::zero(self.ambient_dim, self.dim());
        for (j, &f) in self.free.iter().enumerate() {
            s.set(f, j, num_traits::One::one());
        }
        s
    }

    pub fn free_coordinates(&self) -> &[usize] {
        &self.free
    }
}

/// A subspace of a free space given by a spanning set, with solve-based
/// coordinates relative to a deterministic basis.
pub struct Subspace<S> {
    ambient_dim: usize,
    /// Basis columns (a maximal independent subset of the span, in order).
    basis: SparseMatrix<S>,
}

impl<S: Scalar> Subspace<S> {
    pub fn from_span(ambient_dim: usize, span: &[SparseMatrix<S>]) -> Self {
        let m = SparseMatrix::from_columns(ambient_dim, span);
        let basis_cols = super::elim::image_basis(&m);
        Subspace {
            ambient_dim,
            basis: SparseMatrix::from_columns(ambient_dim, &basis_cols),
        }
    }

    /// Kernel of a matrix, as a subspace of its column-index space.
    pub fn from_kernel(m: &SparseMatrix<S>) -> Self {
        let cols = m.cols();
        Subspace::from_span(cols, &kernel_basis(m))
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Inclusion matrix subspace -> ambient.
    pub fn inclusion(&self) -> &SparseMatrix<S> {
        &self.basis
    }

    /// Coordinates of an ambient vector in the subspace basis, if it lies
    /// in the subspace.
    pub fn coordinates(&self, v: &SparseMatrix<S>) -> Option<SparseMatrix<S>> {
        solve(&self.basis, v)
    }

    /// Restrict a map `ambient -> ambient'` along two subspaces. Returns
    /// `None` if the image escapes the target subspace.
    pub fn restrict_map(
        map: &SparseMatrix<S>,
        source: &Subspace<S>,
        target: &Subspace<S>,
    ) -> Option<SparseMatrix<S>> {
        let mut cols = Vec::new();
        for j in 0..source.dim() {
            let v = map.matmul(&source.basis.column(j));
            cols.push(target.coordinates(&v)?);
        }
        Some(SparseMatrix::from_columns(target.dim(), &cols))
    }

    /// Intersection of two subspaces of the same ambient space.
    pub fn intersect(&self, other: &Subspace<S>) -> Subspace<S> {
        // solve a x = b y: kernel of [A | -B]
        let a = &self.basis;
        let b = &other.basis;
        let mut stacked = SparseMatrix::zero(self.ambient_dim, a.cols() + b.cols());
        for (r, c, v) in a.iter() {
            stacked.set(r, c, v.clone());
        }
        for (r, c, v) in b.iter() {
            stacked.set(r, a.cols() + c, -v.clone());
        }
        let mut span = Vec::new();
        for k in kernel_basis(&stacked) {
            // first block of coordinates gives a vector of the intersection
            let mut x = SparseMatrix::zero(a.cols(), 1);
            for (r, _, v) in k.iter() {
                if r < a.cols() {
                    x.set(r, 0, v.clone());
                }
            }
            span.push(a.matmul(&x));
        }
        Subspace::from_span(self.ambient_dim, &span)
    }
}
