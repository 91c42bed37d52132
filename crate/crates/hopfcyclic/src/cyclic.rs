//! The Hopf-cyclic cocyclic module of a module coalgebra with SAYD
//! coefficients: the `⊗_H` quotient realization, the standard complex on
//! `V ⊗ H^{⊗n}`, the identification `I` between them, the `b` and `B`
//! operators, and windowed HC/HP.

use crate::bicomplex::{BicomplexError, CohomologyReport, MixedWindow};
use crate::exactlin::matrix::FreeSpace;
use crate::exactlin::{apply_at, tensor_permutation, QuotientSpace};
use crate::hopf::{AxiomReport, HopfPresentation};
use crate::sayd::{
    ayd_to_double_module, check_ayd, check_module_coalgebra, check_stable, ModuleCoalgebra,
    ModuleComodule, SaydError,
};
use crate::scalar::Rat;
use crate::Mat;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CyclicError {
    #[error("coefficients do not pass the SAYD checks")]
    NotSayd,
    #[error("the coalgebra action does not satisfy the module-coalgebra axioms")]
    NotModuleCoalgebra,
    #[error("operator {0} does not descend to the ⊗_H quotient")]
    OperatorDoesNotDescend(String),
    #[error("window of size {0} is too small for the request")]
    WindowExceeded(usize),
    #[error(transparent)]
    Sayd(#[from] SaydError),
    #[error(transparent)]
    Bicomplex(#[from] BicomplexError),
}

/// A cocyclic module materialized degree by degree inside a window.
#[derive(Clone, Debug)]
pub struct CocyclicSpace {
    pub window: usize,
    pub spaces: Vec<FreeSpace>,
    /// `faces[n][i] = ∂ᵢ: Cⁿ -> Cⁿ⁺¹` for `i = 0..=n+1`, `n = 0..window`.
    pub faces: Vec<Vec<Mat>>,
    /// `degeneracies[n][j] = σⱼ: Cⁿ -> Cⁿ⁻¹` for `j = 0..=n-1`, `n = 1..=window`.
    pub degeneracies: Vec<Vec<Mat>>,
    /// `cyclic[n] = τ: Cⁿ -> Cⁿ` for `n = 0..=window`.
    pub cyclic: Vec<Mat>,
}

impl CocyclicSpace {
    pub fn dim(&self, n: usize) -> usize {
        self.spaces[n].dimension()
    }

    fn face(&self, n: usize, i: usize) -> &Mat {
        &self.faces[n][i]
    }

    fn degeneracy(&self, n: usize, j: usize) -> &Mat {
        &self.degeneracies[n - 1][j]
    }
}

/// Diagonal left action `H ⊗ A^{⊗m} -> A^{⊗m}` through an action
/// `act: H ⊗ A -> A`, comultiplying `m - 1` times; `m = 0` acts by ε.
fn diagonal_action(h: &HopfPresentation, act: &Mat, a_dim: usize, m: usize) -> Mat {
    let d = h.dim();
    if m == 0 {
        return h.counit.clone();
    }
    let spread = h.comult_iter(m - 1); // H -> H^{⊗m}
    let mut dims = vec![d; m];
    dims.extend(std::iter::repeat(a_dim).take(m));
    let mut perm = Vec::new();
    for k in 0..m {
        perm.push(k);
        perm.push(m + k);
    }
    let interleave = tensor_permutation::<Rat>(&dims, &perm);
    let mut act_each = Mat::identity(1);
    for _ in 0..m {
        act_each = act_each.kron(act);
    }
    act_each
        .matmul(&interleave)
        .matmul(&spread.kron(&Mat::identity(a_dim.pow(m as u32))))
}

/// The quotient realization of one degree: `Cⁿ = V ⊗_H C^{⊗(n+1)}`.
struct QuotientDegree {
    q: QuotientSpace<Rat>,
    ambient_labels: FreeSpace,
}

fn quotient_degree(
    h: &HopfPresentation,
    c: &ModuleCoalgebra,
    v: &ModuleComodule,
    n: usize,
) -> QuotientDegree {
    let d = h.dim();
    let cd = c.dim();
    let vd = v.dim();
    let cpow = cd.pow((n + 1) as u32);
    // relation span: (v·h) ⊗ x − v ⊗ h·x, with h acting diagonally
    let diag = diagonal_action(h, &c.action, cd, n + 1); // H⊗C^{⊗n+1} -> C^{⊗n+1}
    let left = v.module.action.kron(&Mat::identity(cpow));
    // reorder V⊗H⊗C.. so the action sees (V,H) and the coaction sees (H,C..)
    let right = Mat::identity(vd).kron(&diag);
    let relations = left.sub(&right); // columns indexed by V⊗H⊗C^{⊗n+1}
    let _ = d;
    let mut ambient_labels = v.module.space.clone();
    for _ in 0..=n {
        ambient_labels = ambient_labels.tensor(&c.space);
    }
    QuotientDegree {
        q: QuotientSpace::new(&relations),
        ambient_labels,
    }
}

fn quotient_labels(qd: &QuotientDegree) -> FreeSpace {
    FreeSpace::new(
        qd.q
            .free_coordinates()
            .iter()
            .map(|&f| qd.ambient_labels.label(f).to_string())
            .collect(),
    )
}

/// Descend an ambient operator to the quotients, verifying that it is
/// well defined on classes.
fn descend(
    name: &str,
    op: &Mat,
    src: &QuotientSpace<Rat>,
    tgt: &QuotientSpace<Rat>,
) -> Result<Mat, CyclicError> {
    let p_src = src.projection();
    let p_tgt = tgt.projection();
    let descended = p_tgt.matmul(op).matmul(&src.section());
    if descended.matmul(&p_src) != p_tgt.matmul(op) {
        return Err(CyclicError::OperatorDoesNotDescend(name.to_string()));
    }
    Ok(descended)
}

/// Ambient matrix of `∂_{n+1}` on `V ⊗ C^{⊗(n+1)}`.
fn last_face_ambient(h: &HopfPresentation, c: &ModuleCoalgebra, v: &ModuleComodule, n: usize) -> Mat {
    let d = h.dim();
    let cd = c.dim();
    let vd = v.dim();
    // V⊗C^{n+1} → H⊗V⊗C^{n+1} → H⊗V⊗C⊗C⊗C^{n} → (permute) → V⊗C^{n+1}⊗H⊗C → V⊗C^{n+2}
    let coact = v.comodule.coaction.kron(&Mat::identity(cd.pow((n + 1) as u32)));
    let mut dims = vec![d, vd];
    dims.extend(std::iter::repeat(cd).take(n + 1));
    let split = apply_at(&c.comult, &dims, 2);
    // factors now: [H, V, c⁰⟨1⟩, c⁰⟨2⟩, c¹..cⁿ]
    let mut dims2 = vec![d, vd, cd, cd];
    dims2.extend(std::iter::repeat(cd).take(n));
    let mut perm = vec![1, 3];
    perm.extend(4..4 + n);
    perm.push(0);
    perm.push(2);
    let rearrange = tensor_permutation::<Rat>(&dims2, &perm);
    let act_last = Mat::identity(vd * cd.pow((n + 1) as u32)).kron(&c.action);
    act_last.matmul(&rearrange).matmul(&split).matmul(&coact)
}

/// Ambient matrix of `τ` on `V ⊗ C^{⊗(n+1)}`.
fn tau_ambient(h: &HopfPresentation, c: &ModuleCoalgebra, v: &ModuleComodule, n: usize) -> Mat {
    let d = h.dim();
    let cd = c.dim();
    let vd = v.dim();
    let coact = v.comodule.coaction.kron(&Mat::identity(cd.pow((n + 1) as u32)));
    // factors: [H, V, c⁰, c¹..cⁿ] → [V, c¹..cⁿ, H, c⁰]
    let mut dims = vec![d, vd];
    dims.extend(std::iter::repeat(cd).take(n + 1));
    let mut perm = vec![1];
    perm.extend(3..3 + n);
    perm.push(0);
    perm.push(2);
    let rearrange = tensor_permutation::<Rat>(&dims, &perm);
    let act_last = Mat::identity(vd * cd.pow(n as u32)).kron(&c.action);
    act_last.matmul(&rearrange).matmul(&coact)
}

/// The Hopf-cyclic cocyclic module of the module coalgebra `C` with SAYD
/// coefficients `V`, realized as explicit `⊗_H` quotients.
pub fn hopf_cyclic_complex(
    h: &HopfPresentation,
    c: &ModuleCoalgebra,
    v: &ModuleComodule,
    window: usize,
) -> Result<CocyclicSpace, CyclicError> {
    if !(check_ayd(h, v) && check_stable(h, v)) {
        return Err(CyclicError::NotSayd);
    }
    if !check_module_coalgebra(h, c) {
        return Err(CyclicError::NotModuleCoalgebra);
    }
    hopf_cyclic_complex_unchecked(h, c, v, window)
}

/// Same construction without the coefficient checks; used to exhibit how
/// the cocyclic identities fail on non-SAYD data.
pub fn hopf_cyclic_complex_unchecked(
    h: &HopfPresentation,
    c: &ModuleCoalgebra,
    v: &ModuleComodule,
    window: usize,
) -> Result<CocyclicSpace, CyclicError> {
    let cd = c.dim();
    let vd = v.dim();
    let degrees: Vec<QuotientDegree> =
        (0..=window).map(|n| quotient_degree(h, c, v, n)).collect();
    let spaces: Vec<FreeSpace> = degrees.iter().map(quotient_labels).collect();

    let mut faces = Vec::new();
    for n in 0..window {
        let mut dims = vec![vd];
        dims.extend(std::iter::repeat(cd).take(n + 1));
        let mut row = Vec::new();
        for i in 0..=n {
            let amb = apply_at(&c.comult, &dims, 1 + i);
            row.push(descend(
                &format!("face {i} at degree {n}"),
                &amb,
                &degrees[n].q,
                &degrees[n + 1].q,
            )?);
        }
        let amb = last_face_ambient(h, c, v, n);
        row.push(descend(
            &format!("face {} at degree {n}", n + 1),
            &amb,
            &degrees[n].q,
            &degrees[n + 1].q,
        )?);
        faces.push(row);
    }

    let mut degeneracies = Vec::new();
    for n in 1..=window {
        let mut dims = vec![vd];
        dims.extend(std::iter::repeat(cd).take(n + 1));
        let mut row = Vec::new();
        for j in 0..n {
            let amb = apply_at(&c.counit, &dims, 1 + j + 1);
            row.push(descend(
                &format!("degeneracy {j} at degree {n}"),
                &amb,
                &degrees[n].q,
                &degrees[n - 1].q,
            )?);
        }
        degeneracies.push(row);
    }

    let mut cyclic = Vec::new();
    for n in 0..=window {
        let amb = tau_ambient(h, c, v, n);
        cyclic.push(descend(
            &format!("cyclic at degree {n}"),
            &amb,
            &degrees[n].q,
            &degrees[n].q,
        )?);
    }

    Ok(CocyclicSpace {
        window,
        spaces,
        faces,
        degeneracies,
        cyclic,
    })
}

/// The standard complex `Cⁿ = V ⊗ H^{⊗n}` with the transformed operators.
pub fn standard_complex(
    h: &HopfPresentation,
    v: &ModuleComodule,
    window: usize,
) -> Result<CocyclicSpace, CyclicError> {
    if !(check_ayd(h, v) && check_stable(h, v)) {
        return Err(CyclicError::NotSayd);
    }
    Ok(standard_complex_unchecked(h, v, window))
}

/// The standard complex without the coefficient checks.
pub fn standard_complex_unchecked(
    h: &HopfPresentation,
    v: &ModuleComodule,
    window: usize,
) -> CocyclicSpace {
    let d = h.dim();
    let vd = v.dim();
    let mut spaces = vec![v.module.space.clone()];
    for n in 1..=window {
        spaces.push(spaces[n - 1].tensor(&h.space));
    }

    let mut faces = Vec::new();
    for n in 0..window {
        let mut dims = vec![vd];
        dims.extend(std::iter::repeat(d).take(n));
        let mut row = Vec::new();
        // ∂₀ inserts the unit in front
        row.push(Mat::identity(vd).kron(&h.unit.kron(&Mat::identity(d.pow(n as u32)))));
        for i in 1..=n {
            row.push(apply_at(&h.comult, &dims, i));
        }
        // ∂_{n+1} appends v⟨-1⟩
        let coact = v.comodule.coaction.kron(&Mat::identity(d.pow(n as u32)));
        let mut dims2 = vec![d, vd];
        dims2.extend(std::iter::repeat(d).take(n));
        let mut perm: Vec<usize> = (1..n + 2).collect();
        perm.push(0);
        row.push(tensor_permutation::<Rat>(&dims2, &perm).matmul(&coact));
        faces.push(row);
    }

    let mut degeneracies = Vec::new();
    for n in 1..=window {
        let mut dims = vec![vd];
        dims.extend(std::iter::repeat(d).take(n));
        let row = (0..n)
            .map(|j| apply_at(&h.counit, &dims, 1 + j))
            .collect();
        degeneracies.push(row);
    }

    let mut cyclic = vec![Mat::identity(vd)];
    for n in 1..=window {
        // v⟨0⟩h¹⟨1⟩ ⊗ S(h¹⟨2⟩)·(h²⊗…⊗hⁿ⊗v⟨-1⟩)
        let coact = v.comodule.coaction.kron(&Mat::identity(d.pow(n as u32)));
        let mut dims = vec![d, vd];
        dims.extend(std::iter::repeat(d).take(n));
        let split = apply_at(&h.comult, &dims, 2);
        // factors: [H_a, V, h¹⟨1⟩, h¹⟨2⟩, h²..hⁿ] → [V, h¹⟨1⟩, h¹⟨2⟩, h²..hⁿ, H_a]
        let mut dims2 = vec![d, vd, d, d];
        dims2.extend(std::iter::repeat(d).take(n - 1));
        let mut perm: Vec<usize> = (1..n + 3).collect();
        perm.push(0);
        let rearrange = tensor_permutation::<Rat>(&dims2, &perm);
        let act = v.module.action.kron(&Mat::identity(d.pow((n + 1) as u32)));
        let mut dims3 = vec![vd];
        dims3.extend(std::iter::repeat(d).take(n + 1));
        let s_mid = apply_at(&h.antipode, &dims3, 1);
        let diag = Mat::identity(vd).kron(&diagonal_action(h, &h.mult, d, n));
        cyclic.push(
            diag.matmul(&s_mid)
                .matmul(&act)
                .matmul(&rearrange)
                .matmul(&split)
                .matmul(&coact),
        );
    }

    CocyclicSpace {
        window,
        spaces,
        faces,
        degeneracies,
        cyclic,
    }
}

/// The identification `I: V⊗_H H^{⊗(n+1)} -> V⊗H^{⊗n}` and its inverse,
/// as matrices on the quotient realization.
pub fn iso_i(
    h: &HopfPresentation,
    v: &ModuleComodule,
    n: usize,
) -> Result<(Mat, Mat), CyclicError> {
    let d = h.dim();
    let vd = v.dim();
    let c = ModuleCoalgebra::regular(h);
    let qd = quotient_degree(h, &c, v, n);
    // ambient map: v·h⁰⟨1⟩ ⊗ S(h⁰⟨2⟩)·(h¹⊗…⊗hⁿ)
    let mut dims = vec![vd];
    dims.extend(std::iter::repeat(d).take(n + 1));
    let split = apply_at(&h.comult, &dims, 1);
    let act = v.module.action.kron(&Mat::identity(d.pow((n + 1) as u32)));
    let s_mid = apply_at(&h.antipode, &dims, 1);
    let diag = Mat::identity(vd).kron(&diagonal_action(h, &h.mult, d, n));
    let ambient = diag.matmul(&s_mid).matmul(&act).matmul(&split);
    let forward = ambient.matmul(&qd.q.section());
    // inverse: insert the unit in slot 0, then project
    let insert = Mat::identity(vd).kron(&h.unit.kron(&Mat::identity(d.pow(n as u32))));
    let backward = qd.q.projection().matmul(&insert);
    if !forward.matmul(&backward).is_identity() || !backward.matmul(&forward).is_identity() {
        return Err(CyclicError::OperatorDoesNotDescend(format!(
            "iso I at degree {n}"
        )));
    }
    Ok((forward, backward))
}

/// Hochschild coboundary `b = Σ (-1)ⁱ ∂ᵢ : Cⁿ -> Cⁿ⁺¹`.
pub fn hochschild_b(x: &CocyclicSpace, n: usize) -> Result<Mat, CyclicError> {
    if n >= x.window {
        return Err(CyclicError::WindowExceeded(x.window));
    }
    let mut b = Mat::zero(x.dim(n + 1), x.dim(n));
    for (i, f) in x.faces[n].iter().enumerate() {
        b = if i % 2 == 0 { b.add(f) } else { b.sub(f) };
    }
    Ok(b)
}

/// Connes boundary `B: Cⁿ -> Cⁿ⁻¹`, assembled from the extra degeneracy
/// `σ₋₁ = σ_{n-1} ∘ τ` and the cyclic symmetrizer, with the `(1 - λ)`
/// factor needed on the unnormalized complex (`λ = (-1)ⁿ τ`).
pub fn connes_b(x: &CocyclicSpace, n: usize) -> Result<Mat, CyclicError> {
    if n > x.window {
        return Err(CyclicError::WindowExceeded(x.window));
    }
    if n == 0 {
        return Ok(Mat::zero(0, x.dim(0)));
    }
    let sigma_last = x.degeneracy(n, n - 1);
    let extra = sigma_last.matmul(&x.cyclic[n]);
    // 1 - λ on Cⁿ
    let lam_n = if n % 2 == 0 {
        x.cyclic[n].clone()
    } else {
        x.cyclic[n].neg()
    };
    let one_minus = Mat::identity(x.dim(n)).sub(&lam_n);
    // symmetrizer Σ λ^k on Cⁿ⁻¹
    let lam_m = if (n - 1) % 2 == 0 {
        x.cyclic[n - 1].clone()
    } else {
        x.cyclic[n - 1].neg()
    };
    let mut a = Mat::zero(x.dim(n - 1), x.dim(n - 1));
    let mut pow = Mat::identity(x.dim(n - 1));
    for _ in 0..n {
        a = a.add(&pow);
        pow = pow.matmul(&lam_m);
    }
    Ok(a.matmul(&extra).matmul(&one_minus))
}

/// Every cosimplicial and cyclic identity inside the window, reported
/// per family and degree.
pub fn check_cocyclic_identities(x: &CocyclicSpace) -> AxiomReport {
    let mut report = AxiomReport { items: vec![] };
    let w = x.window;

    for n in 0..w.saturating_sub(1) {
        let mut ok = true;
        for j in 0..=n + 2 {
            for i in 0..j {
                let lhs = x.face(n + 1, j).matmul(x.face(n, i));
                let rhs = x.face(n + 1, i).matmul(x.face(n, j - 1));
                ok &= lhs == rhs;
            }
        }
        report.push(&format!("face-face n={n}"), ok);
    }

    for n in 1..w {
        // σⱼ: Cⁿ⁺¹ -> Cⁿ then σᵢ: Cⁿ -> Cⁿ⁻¹, i ≤ j
        let mut ok = true;
        for j in 0..n {
            for i in 0..=j {
                let lhs = x.degeneracy(n, i).matmul(x.degeneracy(n + 1, j + 1));
                let rhs = x.degeneracy(n, j).matmul(x.degeneracy(n + 1, i));
                ok &= lhs == rhs;
            }
        }
        report.push(&format!("degeneracy-degeneracy n={n}"), ok);
    }

    for n in 0..w {
        let mut ok = true;
        for j in 0..=n {
            for i in 0..=n + 1 {
                let comp = x.degeneracy(n + 1, j).matmul(x.face(n, i));
                if i == j || i == j + 1 {
                    ok &= comp.is_identity();
                } else if i < j {
                    ok &= n >= 1
                        && comp == x.face(n - 1, i).matmul(x.degeneracy(n, j - 1));
                } else {
                    ok &= n >= 1
                        && comp == x.face(n - 1, i - 1).matmul(x.degeneracy(n, j));
                }
            }
        }
        report.push(&format!("face-degeneracy n={n}"), ok);
    }

    for n in 1..=w {
        let mut ok = x.cyclic[n].matmul(x.face(n - 1, 0)) == *x.face(n - 1, n);
        for i in 1..=n {
            ok &= x.cyclic[n].matmul(x.face(n - 1, i))
                == x.face(n - 1, i - 1).matmul(&x.cyclic[n - 1]);
        }
        report.push(&format!("cyclic-face n={n}"), ok);
    }

    for n in 0..w {
        let tau_sq = x.cyclic[n + 1].matmul(&x.cyclic[n + 1]);
        let mut ok =
            x.cyclic[n].matmul(x.degeneracy(n + 1, 0)) == x.degeneracy(n + 1, n).matmul(&tau_sq);
        for j in 1..=n {
            ok &= x.cyclic[n].matmul(x.degeneracy(n + 1, j))
                == x.degeneracy(n + 1, j - 1).matmul(&x.cyclic[n + 1]);
        }
        report.push(&format!("cyclic-degeneracy n={n}"), ok);
    }

    for n in 0..=w {
        let mut pow = Mat::identity(x.dim(n));
        for _ in 0..=n {
            pow = pow.matmul(&x.cyclic[n]);
        }
        report.push(&format!("cyclic-order n={n}"), pow.is_identity());
    }

    report
}

/// Assemble the `(b, B)` mixed window of a cocyclic space.
pub fn mixed_window(x: &CocyclicSpace) -> Result<MixedWindow, CyclicError> {
    let dims = (0..=x.window).map(|n| x.dim(n)).collect();
    let up = (0..x.window)
        .map(|n| hochschild_b(x, n))
        .collect::<Result<_, _>>()?;
    let down = (1..=x.window)
        .map(|n| connes_b(x, n))
        .collect::<Result<_, _>>()?;
    Ok(MixedWindow { dims, up, down })
}

/// Cyclic cohomology per total degree `0..window-1`.
pub fn hc_cohomology(x: &CocyclicSpace) -> Result<CohomologyReport, CyclicError> {
    Ok(mixed_window(x)?.cyclic_cohomology()?)
}

/// Periodic cyclic cohomology `[even, odd]` with a stabilization flag.
pub fn hp_cohomology(x: &CocyclicSpace) -> Result<CohomologyReport, CyclicError> {
    Ok(mixed_window(x)?.periodic_cohomology()?)
}

/// The cyclic operator computed through `ρ = Σᵢ fⁱ⊗xᵢ`:
/// `τ(v⊗_H c⁰⊗…⊗cⁿ) = Σᵢ (v·fⁱ)⊗_H c¹⊗…⊗xᵢ·c⁰`.
pub fn cyclic_via_rho(
    h: &HopfPresentation,
    c: &ModuleCoalgebra,
    v: &ModuleComodule,
    n: usize,
) -> Result<Mat, CyclicError> {
    let d = h.dim();
    let cd = c.dim();
    let vd = v.dim();
    let dm = ayd_to_double_module(h, v)?;
    let qd = quotient_degree(h, c, v, n);
    // rotate c⁰ to the end among the coalgebra legs
    let dims: Vec<usize> = std::iter::repeat(cd).take(n + 1).collect();
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.push(0);
    let rotate = tensor_permutation::<Rat>(&dims, &perm);
    let mut ambient = Mat::zero(vd * cd.pow((n + 1) as u32), vd * cd.pow((n + 1) as u32));
    for i in 0..d {
        // fⁱ⊗1 in the double's coordinates
        let mut el = Mat::zero(d * d, 1);
        for (j, _, u) in h.unit.iter() {
            el.set(i * d + j, 0, u.clone());
        }
        let a_i = dm.action.matmul(&Mat::identity(vd).kron(&el));
        let act_i = c.action.matmul(&Mat::basis_vector(d, i).kron(&Mat::identity(cd)));
        let c_part = Mat::identity(cd.pow(n as u32)).kron(&act_i).matmul(&rotate);
        ambient = ambient.add(&a_i.kron(&c_part));
    }
    descend("cyclic via rho", &ambient, &qd.q, &qd.q)
}
