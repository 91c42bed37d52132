//! Modules, comodules, module coalgebras, and the (stable)
//! anti-Yetter-Drinfeld conditions over a Hopf presentation, together
//! with the anti-Drinfeld double `B_AYD(H)` and the two-way module
//! correspondence.
//!
//! On truncated presentations the checks are windowed: a basis
//! combination is skipped when any required product escapes the
//! filtration cutoff, so "true" means "holds on every representable
//! combination".

use crate::exactlin::matrix::FreeSpace;
use crate::exactlin::swap;
use crate::hopf::{dual_hopf, Character, GroupLike, HopfError, HopfPresentation};
use crate::scalar::Rat;
use crate::Mat;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SaydError {
    #[error("dimension mismatch in {0}")]
    DimensionMismatch(String),
    #[error("the given module/comodule pair is not anti-Yetter-Drinfeld")]
    NotAyd,
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// A right module: `action` is the matrix of `V ⊗ A -> V`, `v ⊗ a ↦ v·a`.
#[derive(Clone, Debug)]
pub struct RightModule {
    pub space: FreeSpace,
    pub action: Mat,
}

impl RightModule {
    pub fn dim(&self) -> usize {
        self.space.dimension()
    }

    /// `v·a` for column vectors.
    pub fn act(&self, v: &Mat, a: &Mat) -> Mat {
        self.action.matmul(&v.kron(a))
    }

    /// The trivial module `v·h = ε(h)v` on the given space.
    pub fn trivial(h: &HopfPresentation, space: FreeSpace) -> Self {
        let v = space.dimension();
        let action = Mat::identity(v).kron(&h.counit);
        RightModule { space, action }
    }
}

/// A left comodule: `coaction` is the matrix of `V -> H ⊗ V`,
/// `v ↦ v⟨-1⟩ ⊗ v⟨0⟩`.
#[derive(Clone, Debug)]
pub struct LeftComodule {
    pub space: FreeSpace,
    pub coaction: Mat,
}

impl LeftComodule {
    pub fn dim(&self) -> usize {
        self.space.dimension()
    }

    /// The trivial comodule `v ↦ 1 ⊗ v`.
    pub fn trivial(h: &HopfPresentation, space: FreeSpace) -> Self {
        let v = space.dimension();
        let coaction = h.unit.kron(&Mat::identity(v));
        LeftComodule { space, coaction }
    }
}

/// A module-and-comodule on one space; AYD and stability are predicates.
#[derive(Clone, Debug)]
pub struct ModuleComodule {
    pub module: RightModule,
    pub comodule: LeftComodule,
}

impl ModuleComodule {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }
}

/// A coalgebra carrying a left action of the Hopf algebra:
/// `action` is `H ⊗ C -> C`.
#[derive(Clone, Debug)]
pub struct ModuleCoalgebra {
    pub space: FreeSpace,
    pub comult: Mat,
    pub counit: Mat,
    pub action: Mat,
}

impl ModuleCoalgebra {
    pub fn dim(&self) -> usize {
        self.space.dimension()
    }

    /// `H` as a module coalgebra over itself, by left multiplication.
    pub fn regular(h: &HopfPresentation) -> Self {
        ModuleCoalgebra {
            space: h.space.clone(),
            comult: h.comult.clone(),
            counit: h.counit.clone(),
            action: h.mult.clone(),
        }
    }
}

/// Right-module axioms: `v·1 = v` and `(v·a)·b = v·(ab)`, the latter
/// windowed on truncated presentations.
pub fn check_module(h: &HopfPresentation, m: &RightModule) -> bool {
    let d = h.dim();
    let v = m.dim();
    if m.action.rows() != v || m.action.cols() != v * d {
        return false;
    }
    if m.action.matmul(&Mat::identity(v).kron(&h.unit)) != Mat::identity(v) {
        return false;
    }
    for i in 0..d {
        for j in 0..d {
            let prod = match h.mul_basis(i, j) {
                Ok(p) => p,
                Err(_) => continue,
            };
            let ei = Mat::basis_vector(d, i);
            let ej = Mat::basis_vector(d, j);
            for k in 0..v {
                let vk = Mat::basis_vector(v, k);
                if m.act(&m.act(&vk, &ei), &ej) != m.act(&vk, &prod) {
                    return false;
                }
            }
        }
    }
    true
}

/// Left-comodule axioms: counitality and coassociativity. Over a
/// truncated presentation the coassociativity comparison ignores tensor
/// rows whose two Hopf legs cannot coexist inside the window (their
/// filtration degrees exceed the cutoff).
pub fn check_comodule(h: &HopfPresentation, c: &LeftComodule) -> bool {
    let d = h.dim();
    let v = c.dim();
    if c.coaction.rows() != d * v || c.coaction.cols() != v {
        return false;
    }
    let counital = h.counit.kron(&Mat::identity(v)).matmul(&c.coaction);
    if !counital.is_identity() {
        return false;
    }
    let lhs = h.comult.kron(&Mat::identity(v)).matmul(&c.coaction);
    let rhs = Mat::identity(d).kron(&c.coaction).matmul(&c.coaction);
    let diff = lhs.add(&rhs.neg());
    match &h.truncation {
        None => diff.is_zero_matrix(),
        Some(t) => diff.iter().all(|(row, _, coeff)| {
            let i = row / (d * v) % d;
            let j = row / v % d;
            t.degrees[i] + t.degrees[j] > t.cutoff || coeff.is_zero()
        }),
    }
}

/// Module-coalgebra axioms: left-module laws plus
/// `Δ(h·c) = (h⟨1⟩·c⟨1⟩) ⊗ (h⟨2⟩·c⟨2⟩)` and `ε(h·c) = ε(h)ε(c)`.
pub fn check_module_coalgebra(h: &HopfPresentation, c: &ModuleCoalgebra) -> bool {
    let d = h.dim();
    let n = c.dim();
    if c.action.rows() != n || c.action.cols() != d * n {
        return false;
    }
    // unit law
    if c.action.matmul(&h.unit.kron(&Mat::identity(n))) != Mat::identity(n) {
        return false;
    }
    // associativity of the left action, windowed over H-products
    for i in 0..d {
        for j in 0..d {
            let prod = match h.mul_basis(i, j) {
                Ok(p) => p,
                Err(_) => continue,
            };
            let inner = c
                .action
                .matmul(&Mat::basis_vector(d, j).kron(&Mat::identity(n)));
            let lhs = c
                .action
                .matmul(&Mat::basis_vector(d, i).kron(&Mat::identity(n)))
                .matmul(&inner);
            let rhs = c.action.matmul(&prod.kron(&Mat::identity(n)));
            if lhs != rhs {
                return false;
            }
        }
    }
    // Δ(h·c) = (h⟨1⟩·c⟨1⟩)⊗(h⟨2⟩·c⟨2⟩)
    let lhs = c.comult.matmul(&c.action);
    let act2 = c.action.kron(&c.action);
    let regroup = crate::exactlin::tensor_permutation::<Rat>(&[d, d, n, n], &[0, 2, 1, 3]);
    let rhs = act2
        .matmul(&regroup)
        .matmul(&h.comult.kron(&c.comult));
    if lhs != rhs {
        return false;
    }
    // ε(h·c) = ε(h)ε(c)
    c.counit.matmul(&c.action) == h.counit.kron(&c.counit)
}

/// First basis pair `(v_k, h_i)` violating the AYD identity
/// `▼(v·h) = S(h⟨3⟩) v⟨-1⟩ h⟨1⟩ ⊗ v⟨0⟩·h⟨2⟩`, or `None`. Pairs whose
/// right-hand side is not representable inside a truncation window are
/// skipped.
pub fn ayd_violation(h: &HopfPresentation, v: &ModuleComodule) -> Option<(String, String)> {
    let d = h.dim();
    let n = v.dim();
    let delta2 = h.comult_iter(2);
    'pairs: for i in 0..d {
        for k in 0..n {
            let vk = Mat::basis_vector(n, k);
            let ei = Mat::basis_vector(d, i);
            let lhs = v.comodule.coaction.matmul(&v.module.act(&vk, &ei));
            // expand Δ²(h_i) and the coaction of v_k termwise
            let dh = delta2.column(i);
            let cv = v.comodule.coaction.matmul(&vk);
            let mut rhs = Mat::zero(d * n, 1);
            for (hrow, _, hc) in dh.iter() {
                let idx = crate::exactlin::unflatten(&[d, d, d], hrow);
                let (h1, h2, h3) = (idx[0], idx[1], idx[2]);
                let s_h3 = h.antipode.column(h3);
                for (crow, _, cc) in cv.iter() {
                    let (a, m) = (crow / n, crow % n);
                    let left = match h
                        .mul_vec(&s_h3, &Mat::basis_vector(d, a))
                        .and_then(|p| h.mul_vec(&p, &Mat::basis_vector(d, h1)))
                    {
                        Ok(p) => p,
                        Err(_) => continue 'pairs, // outside the window
                    };
                    let right = v
                        .module
                        .act(&Mat::basis_vector(n, m), &Mat::basis_vector(d, h2));
                    rhs = rhs.add(&left.kron(&right).scale(&(hc.clone() * cc.clone())));
                }
            }
            if lhs != rhs {
                return Some((
                    v.module.space.label(k).to_string(),
                    h.space.label(i).to_string(),
                ));
            }
        }
    }
    None
}

/// Anti-Yetter-Drinfeld predicate; false when the underlying module or
/// comodule axioms already fail.
pub fn check_ayd(h: &HopfPresentation, v: &ModuleComodule) -> bool {
    check_module(h, &v.module)
        && check_comodule(h, &v.comodule)
        && ayd_violation(h, v).is_none()
}

/// Stability: `v⟨0⟩·v⟨-1⟩ = v` for every basis element.
pub fn check_stable(h: &HopfPresentation, v: &ModuleComodule) -> bool {
    let d = h.dim();
    let n = v.dim();
    let back = v
        .module
        .action
        .matmul(&swap::<Rat>(d, n))
        .matmul(&v.comodule.coaction);
    back.is_identity()
}

/// The one-dimensional module-comodule `^σ k_δ`: action by the character
/// `δ`, coaction by the group-like `σ`.
pub fn sayd_from_mpi(
    _h: &HopfPresentation,
    delta: &Character,
    sigma: &GroupLike,
) -> ModuleComodule {
    let space = FreeSpace::from_strs(&["v"]);
    ModuleComodule {
        module: RightModule {
            space: space.clone(),
            action: delta.covector.clone(),
        },
        comodule: LeftComodule {
            space,
            coaction: sigma.element.clone(),
        },
    }
}

/// The anti-Drinfeld double `B_AYD(H)` on the grid `H° ⊗ H`.
#[derive(Clone, Debug)]
pub struct AydDouble {
    pub space: FreeSpace,
    pub hopf_dim: usize,
    /// `(H°⊗H) ⊗ (H°⊗H) -> H°⊗H`
    pub mult: Mat,
    /// Unit element `ε ⊗ 1`, as a column vector.
    pub unit: Mat,
    /// Distinguished element `ρ = Σᵢ fⁱ ⊗ xᵢ` over dual bases.
    pub rho: Mat,
}

impl AydDouble {
    pub fn dim(&self) -> usize {
        self.space.dimension()
    }

    pub fn mul_vec(&self, a: &Mat, b: &Mat) -> Mat {
        self.mult.matmul(&a.kron(b))
    }

    /// The endomorphism of `H` corresponding to an element under
    /// `H°⊗H ≅ End(H)`, `(φ⊗h)(g) = φ(g)h`.
    pub fn lambda(&self, el: &Mat) -> Mat {
        let d = self.hopf_dim;
        let mut m = Mat::zero(d, d);
        for (row, _, c) in el.iter() {
            let (alpha, beta) = (row / d, row % d);
            let prev = m.get(beta, alpha);
            m.set(beta, alpha, prev + c.clone());
        }
        m
    }
}

/// Build `B_AYD(H)` with the multiplication
/// `(φ⊗h)(φ′⊗h′) = φ′⟨1⟩(S⁻¹h⟨3⟩) φ′⟨3⟩(S²h⟨1⟩) φφ′⟨2⟩ ⊗ h⟨2⟩h′`.
pub fn build_ayd_double(h: &HopfPresentation) -> Result<AydDouble, SaydError> {
    if h.is_truncated() {
        return Err(SaydError::Hopf(HopfError::NotFiniteDimensional));
    }
    let d = h.dim();
    let ho = dual_hopf(h)?;
    let s_inv = h.antipode_inverse()?;
    let s2 = h.antipode.matmul(&h.antipode);
    let delta2_h = h.comult_iter(2);
    let delta2_ho = ho.comult_iter(2);
    let n = d * d;
    let mut mult = Mat::zero(n, n * n);
    for p in 0..d {
        for i in 0..d {
            let col_left = p * d + i;
            let dh = delta2_h.column(i);
            for q in 0..d {
                let dphi = delta2_ho.column(q);
                for j in 0..d {
                    let col = col_left * n + (q * d + j);
                    let mut out = Mat::zero(n, 1);
                    for (hrow, _, hc) in dh.iter() {
                        let hidx = crate::exactlin::unflatten(&[d, d, d], hrow);
                        let (h1, h2, h3) = (hidx[0], hidx[1], hidx[2]);
                        for (frow, _, fc) in dphi.iter() {
                            let fidx = crate::exactlin::unflatten(&[d, d, d], frow);
                            let (f1, f2, f3) = (fidx[0], fidx[1], fidx[2]);
                            // f1(S⁻¹ h3) · f3(S² h1)
                            let eval = s_inv.get(f1, h3) * s2.get(f3, h1);
                            if eval.is_zero() {
                                continue;
                            }
                            let phi_part = ho.mul_basis(p, f2).expect("untruncated");
                            let h_part = h.mul_basis(h2, j).expect("untruncated");
                            let term = phi_part
                                .kron(&h_part)
                                .scale(&(eval * hc.clone() * fc.clone()));
                            out = out.add(&term);
                        }
                    }
                    for (r, _, c) in out.iter() {
                        mult.set(r, col, c.clone());
                    }
                }
            }
        }
    }
    let unit = h.counit.transpose().kron(&h.unit);
    let mut rho = Mat::zero(n, 1);
    for i in 0..d {
        rho.set(i * d + i, 0, crate::rat(1));
    }
    Ok(AydDouble {
        space: ho.space.tensor(&h.space),
        hopf_dim: d,
        mult,
        unit,
        rho,
    })
}

/// `ρ = Σᵢ fⁱ ⊗ xᵢ`; checked to correspond to `id_H` under λ.
pub fn rho_element(b: &AydDouble) -> Result<Mat, SaydError> {
    if !b.lambda(&b.rho).is_identity() {
        return Err(SaydError::DimensionMismatch("rho".into()));
    }
    Ok(b.rho.clone())
}

/// Module axioms over the double, checked exhaustively.
pub fn check_double_module(b: &AydDouble, m: &RightModule) -> bool {
    let n = b.dim();
    let v = m.dim();
    if m.action.rows() != v || m.action.cols() != v * n {
        return false;
    }
    if m.action.matmul(&Mat::identity(v).kron(&b.unit)) != Mat::identity(v) {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            let ei = Mat::basis_vector(n, i);
            let ej = Mat::basis_vector(n, j);
            let prod = b.mul_vec(&ei, &ej);
            for k in 0..v {
                let vk = Mat::basis_vector(v, k);
                if m.act(&m.act(&vk, &ei), &ej) != m.act(&vk, &prod) {
                    return false;
                }
            }
        }
    }
    true
}

/// An AYD module becomes a module over the double via
/// `v·(φ⊗h) = φ(v⟨-1⟩) v⟨0⟩·h`.
pub fn ayd_to_double_module(
    h: &HopfPresentation,
    v: &ModuleComodule,
) -> Result<RightModule, SaydError> {
    if !check_ayd(h, v) {
        return Err(SaydError::NotAyd);
    }
    let d = h.dim();
    let n = v.dim();
    let mut action = Mat::zero(n, n * d * d);
    for k in 0..n {
        let cv = v.comodule.coaction.matmul(&Mat::basis_vector(n, k));
        for p in 0..d {
            for j in 0..d {
                let col = k * d * d + p * d + j;
                let mut out = Mat::zero(n, 1);
                for (crow, _, cc) in cv.iter() {
                    let (a, m) = (crow / n, crow % n);
                    if a != p {
                        continue; // φ = e_p* evaluates dual basis
                    }
                    let moved = v
                        .module
                        .act(&Mat::basis_vector(n, m), &Mat::basis_vector(d, j));
                    out = out.add(&moved.scale(cc));
                }
                for (r, _, c) in out.iter() {
                    action.set(r, col, c.clone());
                }
            }
        }
    }
    Ok(RightModule {
        space: v.module.space.clone(),
        action,
    })
}

/// A module over the double restricts to an AYD module: action through
/// `ε ⊗ h`, coaction `v ↦ Σᵢ xᵢ ⊗ v·(fⁱ⊗1)`.
pub fn double_module_to_ayd(h: &HopfPresentation, m: &RightModule) -> ModuleComodule {
    let d = h.dim();
    let n = m.dim();
    // ε in dual-basis coordinates is Σᵢ ε(xᵢ) fⁱ
    let mut action = Mat::zero(n, n * d);
    for k in 0..n {
        for j in 0..d {
            let mut el = Mat::zero(d * d, 1);
            for i in 0..d {
                let e = h.counit.get(0, i);
                if !e.is_zero() {
                    el.set(i * d + j, 0, e);
                }
            }
            let out = m.act(&Mat::basis_vector(n, k), &el);
            for (r, _, c) in out.iter() {
                action.set(r, k * d + j, c.clone());
            }
        }
    }
    let mut coaction = Mat::zero(d * n, n);
    for k in 0..n {
        for i in 0..d {
            // fⁱ⊗1 = Σ_j η_j e_i* ⊗ e_j with η the unit coordinates
            let mut el = Mat::zero(d * d, 1);
            for (j, _, u) in h.unit.iter() {
                el.set(i * d + j, 0, u.clone());
            }
            let moved = m.act(&Mat::basis_vector(n, k), &el);
            for (r, _, c) in moved.iter() {
                coaction.set(i * n + r, k, c.clone());
            }
        }
    }
    ModuleComodule {
        module: RightModule {
            space: m.space.clone(),
            action,
        },
        comodule: LeftComodule {
            space: m.space.clone(),
            coaction,
        },
    }
}

/// Stability through the double: `v·ρ = v` for every basis element.
pub fn stability_via_rho(b: &AydDouble, m: &RightModule) -> bool {
    let v = m.dim();
    m.action.matmul(&Mat::identity(v).kron(&b.rho)) == Mat::identity(v)
}
