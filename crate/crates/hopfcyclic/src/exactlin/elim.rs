//! Exact Gaussian elimination: rank, kernel, image, solve, cohomology.
//!
//! Pivoting is deterministic (leftmost column, topmost row) so every basis
//! this module returns is reproducible across runs.

use super::matrix::SparseMatrix;
use crate::scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinError {
    #[error("composition d_out * d_in is not zero")]
    CompositionNotZero,
}

/// Reduced row echelon form, kept dense per elimination block.
pub struct Rref<S> {
    /// Reduced nonzero rows, each with leading 1 at `pivots[k]`.
    pub rows: Vec<Vec<S>>,
    /// Pivot column of each reduced row, strictly increasing.
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl<S: Scalar> Rref<S> {
    pub fn of(m: &SparseMatrix<S>) -> Self {
        let mut dense = m.to_dense();
        let cols = m.cols();
        let mut pivots = Vec::new();
        let mut rank = 0usize;
        for col in 0..cols {
            // topmost row with nonzero entry at this column
            let mut pr = None;
            for r in rank..dense.len() {
                if !dense[r][col].is_zero() {
                    pr = Some(r);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            dense.swap(rank, pr);
            let inv = S::one() / dense[rank][col].clone();
            for c in col..cols {
                dense[rank][c] = dense[rank][c].clone() * inv.clone();
            }
            for r in 0..dense.len() {
                if r != rank && !dense[r][col].is_zero() {
                    let f = dense[r][col].clone();
                    for c in col..cols {
                        dense[r][c] = dense[r][c].clone() - f.clone() * dense[rank][c].clone();
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        dense.truncate(rank);
        Rref {
            rows: dense,
            pivots,
            cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce a dense vector against the rref rows. After reduction all
    /// pivot coordinates vanish.
    pub fn reduce(&self, v: &mut [S]) {
        assert_eq!(v.len(), self.cols);
        for (k, &p) in self.pivots.iter().enumerate() {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for c in p..self.cols {
                    v[c] = v[c].clone() - f.clone() * self.rows[k][c].clone();
                }
            }
        }
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|c| !self.pivots.contains(c)).collect()
    }
}

pub fn rank<S: Scalar>(m: &SparseMatrix<S>) -> usize {
    Rref::of(m).rank()
}

/// Basis of the null space, in reduced echelon form, one vector per free
/// column in increasing column order.
pub fn kernel_basis<S: Scalar>(m: &SparseMatrix<S>) -> Vec<SparseMatrix<S>> {
    let rref = Rref::of(m);
    let mut out = Vec::new();
    for f in rref.free_columns() {
        let mut v = SparseMatrix::zero(m.cols(), 1);
        v.set(f, 0, S::one());
        for (k, &p) in rref.pivots.iter().enumerate() {
            let coef = rref.rows[k][f].clone();
            if !coef.is_zero() {
                v.set(p, 0, -coef);
            }
        }
        out.push(v);
    }
    out
}

/// Column-space basis: the columns of `m` sitting at pivot positions.
pub fn image_basis<S: Scalar>(m: &SparseMatrix<S>) -> Vec<SparseMatrix<S>> {
    let rref = Rref::of(m);
    rref.pivots.iter().map(|&p| m.column(p)).collect()
}

/// Solve `a x = b` for one column vector, if consistent.
pub fn solve<S: Scalar>(a: &SparseMatrix<S>, b: &SparseMatrix<S>) -> Option<SparseMatrix<S>> {
    assert_eq!(a.rows(), b.rows());
    assert_eq!(b.cols(), 1);
    // eliminate the augmented matrix [a | b]
    let mut aug = SparseMatrix::zero(a.rows(), a.cols() + 1);
    for (r, c, v) in a.iter() {
        aug.set(r, c, v.clone());
    }
    for (r, _, v) in b.iter() {
        aug.set(r, a.cols(), v.clone());
    }
    let rref = Rref::of(&aug);
    if rref.pivots.contains(&a.cols()) {
        return None; // inconsistent
    }
    let mut x = SparseMatrix::zero(a.cols(), 1);
    for (k, &p) in rref.pivots.iter().enumerate() {
        let v = rref.rows[k][a.cols()].clone();
        if !v.is_zero() {
            x.set(p, 0, v);
        }
    }
    Some(x)
}

/// Exact inverse of a square matrix, if invertible.
pub fn inverse<S: Scalar>(m: &SparseMatrix<S>) -> Option<SparseMatrix<S>> {
    let n = m.rows();
    if m.cols() != n {
        return None;
    }
    let mut aug = SparseMatrix::zero(n, 2 * n);
    for (r, c, v) in m.iter() {
        aug.set(r, c, v.clone());
    }
    for i in 0..n {
        aug.set(i, n + i, S::one());
    }
    let rref = Rref::of(&aug);
    if rref.pivots.len() < n || rref.pivots[n - 1] != n - 1 {
        return None;
    }
    let mut inv = SparseMatrix::zero(n, n);
    for (k, row) in rref.rows.iter().enumerate() {
        for c in 0..n {
            if !row[n + c].is_zero() {
                inv.set(k, c, row[n + c].clone());
            }
        }
    }
    Some(inv)
}

/// Cohomology at a spot of a cochain complex: `d_in` enters the space,
/// `d_out` leaves it. Returns the betti number and representative
/// cocycles (kernel vectors completing an image basis).
pub fn cohomology_at<S: Scalar>(
    d_in: &SparseMatrix<S>,
    d_out: &SparseMatrix<S>,
) -> Result<(usize, Vec<SparseMatrix<S>>), LinError> {
    assert_eq!(d_in.rows(), d_out.cols(), "middle space dimension mismatch");
    if !d_out.matmul(d_in).is_zero_matrix() {
        return Err(LinError::CompositionNotZero);
    }
    let ker = kernel_basis(d_out);
    let im = image_basis(d_in);
    let betti = ker.len() - im.len();
    // grow a row-elimination state seeded with the image basis; kernel
    // vectors that enlarge the rank become representatives
    let n = d_in.rows();
    let mut span: Vec<SparseMatrix<S>> = im;
    let mut reps = Vec::new();
    let mut current = Rref::of(&SparseMatrix::from_columns(n, &span));
    for v in ker {
        let mut probe = span.clone();
        probe.push(v.clone());
        let r = Rref::of(&SparseMatrix::from_columns(n, &probe));
        if r.rank() > current.rank() {
            reps.push(v.clone());
            span.push(v);
            current = r;
        }
    }
    debug_assert_eq!(reps.len(), betti);
    Ok((betti, reps))
}
