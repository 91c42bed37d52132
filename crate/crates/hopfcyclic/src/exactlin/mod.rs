//! Exact rational sparse linear algebra: the substrate for every structure
//! map, differential, and cohomology rank in this crate.

pub mod elim;
pub mod matrix;
pub mod quotient;
pub mod tensor;

pub use elim::{cohomology_at, image_basis, inverse, kernel_basis, rank, solve, LinError, Rref};
pub use matrix::{FreeSpace, SparseMatrix};
pub use quotient::{QuotientSpace, Subspace};
pub use tensor::{apply_at, flatten, swap, tensor_permutation, unflatten};

#[cfg(test)]
mod proptests {
    use super::*;
    use crate::scalar::{rat, Rat};
    use proptest::prelude::*;

    fn arb_matrix() -> impl Strategy<Value = SparseMatrix<Rat>> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |data| {
                let mut m = SparseMatrix::zero(r, c);
                for i in 0..r {
                    for j in 0..c {
                        m.set(i, j, rat(data[i * c + j]));
                    }
                }
                m
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix()) {
            prop_assert_eq!(rank(&m) + kernel_basis(&m).len(), m.cols());
        }

        #[test]
        fn kernel_vectors_annihilated(m in arb_matrix()) {
            for v in kernel_basis(&m) {
                prop_assert!(m.matmul(&v).is_zero_matrix());
            }
        }

        #[test]
        fn image_vectors_in_column_space(m in arb_matrix()) {
            let im = image_basis(&m);
            // independent: rank of assembled basis equals count
            let b = SparseMatrix::from_columns(m.rows(), &im);
            prop_assert_eq!(rank(&b), im.len());
            for v in &im {
                prop_assert!(solve(&m, v).is_some());
            }
        }

        #[test]
        fn zero_differentials_full_betti(n in 1usize..6) {
            let z_in = SparseMatrix::<Rat>::zero(n, 1);
            let z_out = SparseMatrix::<Rat>::zero(1, n);
            let (betti, _) = cohomology_at(&z_in, &z_out).unwrap();
            prop_assert_eq!(betti, n);
        }
    }
}
