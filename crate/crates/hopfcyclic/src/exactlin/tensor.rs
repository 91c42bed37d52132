//! Tensor-index bookkeeping: Kronecker embeddings, factor permutations.
//!
//! Multi-indices follow the usual convention: the leftmost tensor factor
//! is the slowest index.

use super::matrix::SparseMatrix;
use crate::scalar::Scalar;

/// Decompose a flat index into a multi-index over `dims`.
pub fn unflatten(dims: &[usize], mut idx: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = idx % dims[k];
        idx /= dims[k];
    }
    out
}

/// Flatten a multi-index over `dims`.
pub fn flatten(dims: &[usize], multi: &[usize]) -> usize {
    let mut idx = 0;
    for (d, i) in dims.iter().zip(multi) {
        debug_assert!(i < d);
        idx = idx * d + i;
    }
    idx
}

/// Permutation matrix reordering tensor factors: output factor `p` is
/// input factor `perm[p]`.
pub fn tensor_permutation<S: Scalar>(dims: &[usize], perm: &[usize]) -> SparseMatrix<S> {
    assert_eq!(dims.len(), perm.len());
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut m = SparseMatrix::zero(total, total);
    for i in 0..total {
        let multi = unflatten(dims, i);
        let out_multi: Vec<usize> = perm.iter().map(|&p| multi[p]).collect();
        m.set(flatten(&out_dims, &out_multi), i, S::one());
    }
    m
}

/// Swap of two adjacent tensor factors `A ⊗ B -> B ⊗ A`.
pub fn swap<S: Scalar>(dim_a: usize, dim_b: usize) -> SparseMatrix<S> {
    tensor_permutation(&[dim_a, dim_b], &[1, 0])
}

/// Apply `map` to the factor at `pos` of a tensor product with the given
/// input factor dimensions; identity elsewhere.
pub fn apply_at<S: Scalar>(
    map: &SparseMatrix<S>,
    dims: &[usize],
    pos: usize,
) -> SparseMatrix<S> {
    assert_eq!(map.cols(), dims[pos], "factor dimension mismatch");
    let before: usize = dims[..pos].iter().product();
    let after: usize = dims[pos + 1..].iter().product();
    SparseMatrix::identity(before)
        .kron(map)
        .kron(&SparseMatrix::identity(after))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rat};

    #[test]
    fn permutation_roundtrip() {
        let dims = [2, 3, 2];
        let p = tensor_permutation::<Rat>(&dims, &[2, 0, 1]);
        let q = tensor_permutation::<Rat>(&[2, 2, 3], &[1, 2, 0]);
        assert!(q.matmul(&p).is_identity());
    }

    #[test]
    fn swap_involution() {
        let s = swap::<Rat>(2, 3);
        let t = swap::<Rat>(3, 2);
        assert!(t.matmul(&s).is_identity());
    }

    #[test]
    fn apply_at_middle_factor() {
        let mut f = SparseMatrix::<Rat>::zero(1, 2);
        f.set(0, 0, rat(3));
        f.set(0, 1, rat(5));
        let m = apply_at(&f, &[2, 2, 2], 1);
        assert_eq!(m.rows(), 4);
        assert_eq!(m.cols(), 8);
        // e0 ⊗ e1 ⊗ e0 -> 5 * e0 ⊗ e0
        let v = SparseMatrix::<Rat>::basis_vector(8, flatten(&[2, 2, 2], &[0, 1, 0]));
        let out = m.matmul(&v);
        assert_eq!(out.get(0, 0), rat(5));
    }
}
