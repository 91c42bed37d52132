//! Lie algebras by bracket structure constants.

use crate::exactlin::matrix::FreeSpace;
use crate::Mat;

/// A finite-dimensional Lie algebra with a named frame.
///
/// The bracket is a `dim x dim²` matrix sending `X_i ⊗ X_j` to `[X_i, X_j]`.
#[derive(Clone, Debug)]
pub struct LieDatum {
    pub space: FreeSpace,
    pub bracket: Mat,
}

impl LieDatum {
    pub fn dim(&self) -> usize {
        self.space.dimension()
    }

    /// `[X_i, X_j]` as a column vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Mat {
        self.bracket.column(i * self.dim() + j)
    }

    pub fn bracket_vec(&self, a: &Mat, b: &Mat) -> Mat {
        self.bracket.matmul(&a.kron(b))
    }

    /// Matrix of `ad_X` on the frame, for a basis index.
    pub fn ad_basis(&self, i: usize) -> Mat {
        let d = self.dim();
        let cols: Vec<Mat> = (0..d).map(|j| self.bracket_basis(i, j)).collect();
        Mat::from_columns(d, &cols)
    }

    pub fn is_antisymmetric(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            (0..d).all(|j| self.bracket_basis(i, j) == self.bracket_basis(j, i).neg())
        })
    }
}

/// Jacobi identity on all frame triples (antisymmetry included).
pub fn check_jacobi(g: &LieDatum) -> bool {
    if !g.is_antisymmetric() {
        return false;
    }
    let d = g.dim();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let ei = Mat::basis_vector(d, i);
                let ej = Mat::basis_vector(d, j);
                let ek = Mat::basis_vector(d, k);
                let t1 = g.bracket_vec(&g.bracket_basis(i, j), &ek);
                let t2 = g.bracket_vec(&g.bracket_basis(j, k), &ei);
                let t3 = g.bracket_vec(&g.bracket_basis(k, i), &ej);
                let _ = (&ei, &ej);
                if !t1.add(&t2).add(&t3).is_zero_matrix() {
                    return false;
                }
            }
        }
    }
    true
}

/// The abelian Lie algebra on the given frame labels.
pub fn abelian(labels: &[&str]) -> LieDatum {
    let space = FreeSpace::from_strs(labels);
    let d = space.dimension();
    LieDatum {
        space,
        bracket: Mat::zero(d, d * d),
    }
}

/// The nonabelian two-dimensional Lie algebra `aff(1)`: `[X, Y] = Y`.
pub fn aff1() -> LieDatum {
    let space = FreeSpace::from_strs(&["X", "Y"]);
    let mut bracket = Mat::zero(2, 4);
    bracket.set(1, 0 * 2 + 1, crate::rat(1)); // [X,Y] = Y
    bracket.set(1, 1 * 2 + 0, crate::rat(-1)); // [Y,X] = -Y
    LieDatum { space, bracket }
}
