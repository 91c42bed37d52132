//! Hopf algebra presentations by structure-constant tensors.
//!
//! All structure maps are sparse matrices between tensor powers of the
//! underlying space, with the leftmost factor as the slow index:
//! `mult: H⊗H -> H` is `dim x dim²`, `comult: H -> H⊗H` is `dim² x dim`,
//! and so on. A filtered truncation records basis degrees, the cutoff,
//! and which basis products escape the window; those products are zero in
//! the `mult` tensor and raise [`HopfError::TruncationOverflow`] when
//! actually requested.

use crate::exactlin::{apply_at, inverse, swap};
use crate::exactlin::matrix::FreeSpace;
use crate::scalar::Rat;
use crate::Mat;
use num_traits::One;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HopfError {
    #[error("dimension mismatch in {0}")]
    DimensionMismatch(String),
    #[error("operation requires a finite-dimensional (untruncated) Hopf algebra")]
    NotFiniteDimensional,
    #[error("the given covector is not a character")]
    NotACharacter,
    #[error("the given element is not group-like")]
    NotGroupLike,
    #[error("product of basis elements {0} and {1} escapes the truncation window")]
    TruncationOverflow(String, String),
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
}

/// Filtration data of a degree-truncated presentation.
#[derive(Clone, Debug)]
pub struct Truncation {
    /// Filtration degree of each basis element.
    pub degrees: Vec<usize>,
    /// Degree cutoff of the retained basis.
    pub cutoff: usize,
    /// Basis pairs whose product escapes the window.
    pub overflow_pairs: BTreeSet<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct HopfPresentation {
    pub space: FreeSpace,
    /// `H⊗H -> H`
    pub mult: Mat,
    /// Unit element, as a column vector.
    pub unit: Mat,
    /// `H -> H⊗H`
    pub comult: Mat,
    /// Counit, as a `1 x dim` covector.
    pub counit: Mat,
    pub antipode: Mat,
    pub truncation: Option<Truncation>,
}

/// A unital algebra-map covector on the Hopf space.
#[derive(Clone, Debug)]
pub struct Character {
    pub covector: Mat,
}

/// A group-like element: `Δ(σ) = σ⊗σ`, `ε(σ) = 1`.
#[derive(Clone, Debug)]
pub struct GroupLike {
    pub element: Mat,
}

#[derive(Clone, Debug)]
pub struct ModularPair {
    pub delta: Character,
    pub sigma: GroupLike,
    pub verified: bool,
}

/// Per-axiom verification outcome.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub items: Vec<(String, bool)>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|(_, ok)| *ok)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.items
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n.as_str())
            .collect()
    }

    pub fn push(&mut self, name: &str, ok: bool) {
        self.items.push((name.to_string(), ok));
    }
}

impl HopfPresentation {
    pub fn dim(&self) -> usize {
        self.space.dimension()
    }

    pub fn is_truncated(&self) -> bool {
        self.truncation.is_some()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.truncation.as_ref().map_or(0, |t| t.degrees[i])
    }

    fn cutoff(&self) -> usize {
        self.truncation.as_ref().map_or(usize::MAX, |t| t.cutoff)
    }

    /// Product of two basis elements, or an overflow error.
    pub fn mul_basis(&self, i: usize, j: usize) -> Result<Mat, HopfError> {
        if let Some(t) = &self.truncation {
            if t.overflow_pairs.contains(&(i, j)) {
                return Err(HopfError::TruncationOverflow(
                    self.space.label(i).to_string(),
                    self.space.label(j).to_string(),
                ));
            }
        }
        Ok(self.mult.column(i * self.dim() + j))
    }

    /// Product of two element vectors; errors if any contributing basis
    /// pair overflows the window.
    pub fn mul_vec(&self, a: &Mat, b: &Mat) -> Result<Mat, HopfError> {
        let d = self.dim();
        let mut out = Mat::zero(d, 1);
        for (i, _, va) in a.iter() {
            for (j, _, vb) in b.iter() {
                let col = self.mul_basis(i, j)?;
                out = out.add(&col.scale(&(va.clone() * vb.clone())));
            }
        }
        Ok(out)
    }

    pub fn counit_of(&self, v: &Mat) -> Rat {
        self.counit.matmul(v).get(0, 0)
    }

    pub fn comult_of(&self, v: &Mat) -> Mat {
        self.comult.matmul(v)
    }

    /// `(Δ ⊗ id) ∘ Δ`, the fixed expansion order for iterated comultiplication.
    pub fn comult2(&self) -> Mat {
        let d = self.dim();
        apply_at(&self.comult, &[d, d], 0).matmul(&self.comult)
    }

    /// Iterated comultiplication `H -> H^{⊗(n+1)}` with the fixed
    /// left-expansion order; `n = 0` is the identity.
    pub fn comult_iter(&self, n: usize) -> Mat {
        let d = self.dim();
        let mut m = Mat::identity(d);
        for k in 0..n {
            // expand the leftmost factor
            let dims: Vec<usize> = vec![d; k + 1];
            m = apply_at(&self.comult, &dims, 0).matmul(&m);
        }
        m
    }

    /// Left-multiplication matrix by an element.
    pub fn left_mul(&self, a: &Mat) -> Mat {
        let d = self.dim();
        self.mult.matmul(&a.kron(&Mat::identity(d)))
    }

    /// Right-multiplication matrix by an element.
    pub fn right_mul(&self, a: &Mat) -> Mat {
        let d = self.dim();
        self.mult.matmul(&Mat::identity(d).kron(a))
    }

    /// Inverse antipode as an exact matrix inverse.
    pub fn antipode_inverse(&self) -> Result<Mat, HopfError> {
        inverse(&self.antipode).ok_or(HopfError::AntipodeNotInvertible)
    }

    /// Diagonal left action of an element on `H^{⊗n}`: comultiply `a`
    /// `n-1` times and multiply componentwise.
    pub fn diagonal_left_mul(&self, a: &Mat, n: usize) -> Mat {
        let d = self.dim();
        if n == 0 {
            // H^{⊗0} = k; the action is by the counit
            return Mat::identity(1).scale(&self.counit_of(a));
        }
        let delta_a = self.comult_iter(n - 1).matmul(a); // column in H^{⊗n}
        let dims_big: Vec<usize> = vec![d; 2 * n];
        // interleave (a_1 ⊗ ... ⊗ a_n) ⊗ (h_1 ⊗ ... ⊗ h_n) into pairs
        let mut perm = Vec::new();
        for k in 0..n {
            perm.push(k);
            perm.push(n + k);
        }
        let interleave = crate::exactlin::tensor_permutation::<Rat>(&dims_big, &perm);
        let mut mult_each = Mat::identity(1);
        for _ in 0..n {
            mult_each = mult_each.kron(&self.mult);
        }
        let dn = d.pow(n as u32);
        mult_each
            .matmul(&interleave)
            .matmul(&delta_a.kron(&Mat::identity(dn)))
    }
}

/// Verify every Hopf axiom by exact tensor contraction. On truncated
/// presentations, combinations whose total filtration degree escapes the
/// cutoff are skipped (their products are not represented).
pub fn check_hopf_axioms(h: &HopfPresentation) -> Result<AxiomReport, HopfError> {
    let d = h.dim();
    if h.mult.rows() != d
        || h.mult.cols() != d * d
        || h.comult.rows() != d * d
        || h.comult.cols() != d
        || h.unit.rows() != d
        || h.counit.cols() != d
        || h.antipode.rows() != d
        || h.antipode.cols() != d
    {
        return Err(HopfError::DimensionMismatch("structure tensors".into()));
    }
    let mut report = AxiomReport { items: vec![] };
    let cutoff = h.cutoff();

    // associativity, basis triples within the window
    let mut assoc = true;
    'outer: for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                if h.degree(i) + h.degree(j) + h.degree(k) > cutoff {
                    continue;
                }
                let ei = Mat::basis_vector(d, i);
                let ej = Mat::basis_vector(d, j);
                let ek = Mat::basis_vector(d, k);
                let lhs = h.mul_vec(&h.mul_vec(&ei, &ej).unwrap(), &ek).unwrap();
                let rhs = h.mul_vec(&ei, &h.mul_vec(&ej, &ek).unwrap()).unwrap();
                if lhs != rhs {
                    assoc = false;
                    break 'outer;
                }
            }
        }
    }
    report.push("associativity", assoc);

    // unit laws (unit is degree 0, never overflows)
    let left_unit = (0..d).all(|i| {
        h.mul_vec(&h.unit, &Mat::basis_vector(d, i)).unwrap() == Mat::basis_vector(d, i)
    });
    let right_unit = (0..d).all(|i| {
        h.mul_vec(&Mat::basis_vector(d, i), &h.unit).unwrap() == Mat::basis_vector(d, i)
    });
    report.push("left-unit", left_unit);
    report.push("right-unit", right_unit);

    // coassociativity and counit laws: pure coalgebra matrix identities
    let lhs = apply_at(&h.comult, &[d, d], 0).matmul(&h.comult);
    let rhs = apply_at(&h.comult, &[d, d], 1).matmul(&h.comult);
    report.push("coassociativity", lhs == rhs);
    let left_counit = apply_at(&h.counit, &[d, d], 0).matmul(&h.comult);
    let right_counit = apply_at(&h.counit, &[d, d], 1).matmul(&h.comult);
    report.push("left-counit", left_counit.is_identity());
    report.push("right-counit", right_counit.is_identity());

    // Δ is an algebra map: Δ(ab) = Δ(a)Δ(b) in H⊗H, skipping overflow pairs
    let mut comult_mult = true;
    'pairs: for i in 0..d {
        for j in 0..d {
            if h.degree(i) + h.degree(j) > cutoff {
                continue;
            }
            let ei = Mat::basis_vector(d, i);
            let ej = Mat::basis_vector(d, j);
            let lhs = h.comult_of(&h.mul_vec(&ei, &ej).unwrap());
            let da = h.comult_of(&ei);
            let db = h.comult_of(&ej);
            let rhs = mul_in_tensor_square(h, &da, &db);
            if lhs != rhs {
                comult_mult = false;
                break 'pairs;
            }
        }
    }
    report.push("comult-multiplicative", comult_mult);

    // ε is an algebra map
    let mut counit_mult = true;
    'epairs: for i in 0..d {
        for j in 0..d {
            if h.degree(i) + h.degree(j) > cutoff {
                continue;
            }
            let ei = Mat::basis_vector(d, i);
            let ej = Mat::basis_vector(d, j);
            let lhs = h.counit_of(&h.mul_vec(&ei, &ej).unwrap());
            let rhs = h.counit_of(&ei) * h.counit_of(&ej);
            if lhs != rhs {
                counit_mult = false;
                break 'epairs;
            }
        }
    }
    report.push("counit-multiplicative", counit_mult);

    report.push("comult-unit", h.comult_of(&h.unit) == h.unit.kron(&h.unit));
    report.push("counit-unit", h.counit_of(&h.unit).is_one());

    // antipode axiom m(S⊗id)Δ = ηε = m(id⊗S)Δ (degree-preserving, never overflows)
    let eta_eps = h.unit.matmul(&h.counit);
    let s_left = h
        .mult
        .matmul(&apply_at(&h.antipode, &[d, d], 0))
        .matmul(&h.comult);
    let s_right = h
        .mult
        .matmul(&apply_at(&h.antipode, &[d, d], 1))
        .matmul(&h.comult);
    report.push("antipode-left", s_left == eta_eps);
    report.push("antipode-right", s_right == eta_eps);

    if let Some(t) = &h.truncation {
        // structure tensors must respect the filtration up to the cutoff
        let mut filtered = true;
        for (r, c, _) in h.mult.iter() {
            let (i, j) = (c / d, c % d);
            if h.degree(r) > h.degree(i) + h.degree(j) {
                filtered = false;
            }
        }
        for (r, c, _) in h.comult.iter() {
            let (a, b) = (r / d, r % d);
            if h.degree(a) + h.degree(b) > h.degree(c) {
                filtered = false;
            }
        }
        let _ = t;
        report.push("filtration-respected", filtered);
    }

    Ok(report)
}

/// Componentwise product of two vectors of `H⊗H`, with overflow skipping
/// delegated to `mul_basis`. Used for the bialgebra compatibility check.
fn mul_in_tensor_square(h: &HopfPresentation, a: &Mat, b: &Mat) -> Mat {
    let d = h.dim();
    let mut out = Mat::zero(d * d, 1);
    for (ra, _, va) in a.iter() {
        let (a1, a2) = (ra / d, ra % d);
        for (rb, _, vb) in b.iter() {
            let (b1, b2) = (rb / d, rb % d);
            let p1 = h.mul_basis(a1, b1).expect("overflow inside filtered product");
            let p2 = h.mul_basis(a2, b2).expect("overflow inside filtered product");
            out = out.add(&p1.kron(&p2).scale(&(va.clone() * vb.clone())));
        }
    }
    out
}

/// `δ(ab) = δ(a)δ(b)` on basis pairs inside the window, and `δ(1) = 1`.
pub fn is_character(h: &HopfPresentation, phi: &Mat) -> bool {
    let d = h.dim();
    if phi.rows() != 1 || phi.cols() != d {
        return false;
    }
    if !phi.matmul(&h.unit).get(0, 0).is_one() {
        return false;
    }
    let cutoff = h.cutoff();
    for i in 0..d {
        for j in 0..d {
            if h.degree(i) + h.degree(j) > cutoff {
                continue;
            }
            let prod = h.mul_basis(i, j).unwrap();
            let lhs = phi.matmul(&prod).get(0, 0);
            let rhs = phi.get(0, i) * phi.get(0, j);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// `Δ(v) = v⊗v` and `ε(v) = 1`.
pub fn is_group_like(h: &HopfPresentation, v: &Mat) -> bool {
    v.rows() == h.dim()
        && v.cols() == 1
        && h.comult_of(v) == v.kron(v)
        && h.counit_of(v).is_one()
}

/// Matrix of the twisted antipode `S_δ(h) = δ(h⟨1⟩) S(h⟨2⟩)`.
pub fn twisted_antipode(h: &HopfPresentation, delta: &Character) -> Result<Mat, HopfError> {
    if !is_character(h, &delta.covector) {
        return Err(HopfError::NotACharacter);
    }
    Ok(delta.covector.kron(&h.antipode).matmul(&h.comult))
}

/// Matrix of `Ad_σ(h) = σ h σ⁻¹`; `σ⁻¹ = S(σ)` for a group-like σ.
pub fn ad_sigma(h: &HopfPresentation, sigma: &GroupLike) -> Result<Mat, HopfError> {
    if !is_group_like(h, &sigma.element) {
        return Err(HopfError::NotGroupLike);
    }
    let sigma_inv = h.antipode.matmul(&sigma.element);
    // group-like ⇒ S(σ) is a two-sided inverse; confirmed here
    if h.mul_vec(&sigma.element, &sigma_inv)? != h.unit {
        return Err(HopfError::NotGroupLike);
    }
    Ok(h.left_mul(&sigma.element).matmul(&h.right_mul(&sigma_inv)))
}

/// Decide whether `(δ, σ)` is a modular pair in involution:
/// `δ(σ) = 1` and `S_δ² = Ad_σ` as matrices.
pub fn check_mpi(
    h: &HopfPresentation,
    delta: &Character,
    sigma: &GroupLike,
) -> Result<ModularPair, HopfError> {
    let s_delta = twisted_antipode(h, delta)?;
    let ad = ad_sigma(h, sigma)?;
    let pairing = delta.covector.matmul(&sigma.element).get(0, 0);
    let verified = pairing.is_one() && s_delta.matmul(&s_delta) == ad;
    Ok(ModularPair {
        delta: delta.clone(),
        sigma: sigma.clone(),
        verified,
    })
}

/// Dual Hopf algebra of a finite-dimensional presentation: all structure
/// tensors transposed, with mult ↔ comult and unit ↔ counit exchanged.
pub fn dual_hopf(h: &HopfPresentation) -> Result<HopfPresentation, HopfError> {
    if h.is_truncated() {
        return Err(HopfError::NotFiniteDimensional);
    }
    let labels: Vec<String> = h.space.labels().iter().map(|l| format!("{l}*")).collect();
    Ok(HopfPresentation {
        space: FreeSpace::new(labels),
        mult: h.comult.transpose(),
        unit: h.counit.transpose(),
        comult: h.mult.transpose(),
        counit: h.unit.transpose(),
        antipode: h.antipode.transpose(),
        truncation: None,
    })
}

/// Swap matrix on `H ⊗ H`, for convenience in compatibility checks.
pub fn swap_square(h: &HopfPresentation) -> Mat {
    swap::<Rat>(h.dim(), h.dim())
}
