//! Matched pairs of Hopf algebras: a left U-module algebra structure on
//! F, a right F-comodule coalgebra structure on U, five compatibility
//! identities between them, and the crossed, cocrossed, and bicrossed
//! products on F⊗U.
//!
//! Tensor layout: the action `▷: U⊗F -> F` is a `dim F × (dim U · dim F)`
//! matrix with the U index slow; the coaction `▼: U -> U⊗F` is a
//! `(dim U · dim F) × dim U` matrix with the U index slow. The bicrossed
//! product lives on F⊗U with the F index slow.

use crate::exactlin::{apply_at, tensor_permutation};
use crate::hopf::{
    check_hopf_axioms, AxiomReport, HopfError, HopfPresentation, Truncation,
};
use crate::matchedpair::MatchedError;
use crate::scalar::Rat;
use crate::Mat;
use std::collections::BTreeSet;

/// A matched pair: `u` acts on `f` (module algebra) and `f` coacts on
/// `u` (comodule coalgebra), subject to five compatibility identities.
#[derive(Clone, Debug)]
pub struct MatchedPairDatum {
    pub u: HopfPresentation,
    pub f: HopfPresentation,
    /// `U⊗F -> F`, the action `u ⊗ f ↦ u▷f`.
    pub action: Mat,
    /// `U -> U⊗F`, the coaction `u ↦ u⟨0⟩ ⊗ u⟨1⟩`.
    pub coaction: Mat,
}

impl MatchedPairDatum {
    /// The endomorphism `f ↦ u·f` of F, for an element `u` of U.
    pub fn act_vec(&self, u: &Mat) -> Mat {
        let df = self.f.dim();
        self.action.matmul(&u.kron(&Mat::identity(df)))
    }
}

/// Trivial action `u▷f = ε(u)f` and trivial coaction `u ↦ u⊗1`.
pub fn trivial_matched_pair(u: &HopfPresentation, f: &HopfPresentation) -> MatchedPairDatum {
    let du = u.dim();
    let df = f.dim();
    MatchedPairDatum {
        u: u.clone(),
        f: f.clone(),
        action: u.counit.kron(&Mat::identity(df)),
        coaction: Mat::identity(du).kron(&f.unit),
    }
}

fn cutoff_of(h: &HopfPresentation) -> usize {
    h.truncation.as_ref().map_or(usize::MAX, |t| t.cutoff)
}

/// Left U-module algebra laws on F: unit absorption `u▷1 = ε(u)1`,
/// multiplicativity `u▷(fg) = (u⟨1⟩▷f)(u⟨2⟩▷g)`, and the module law
/// `(uv)▷f = u▷(v▷f)` on basis pairs inside the truncation window.
pub fn check_module_algebra(u: &HopfPresentation, f: &HopfPresentation, action: &Mat) -> bool {
    let du = u.dim();
    let df = f.dim();
    if action.rows() != df || action.cols() != du * df {
        return false;
    }
    // 1 acts as the identity
    if !action.matmul(&u.unit.kron(&Mat::identity(df))).is_identity() {
        return false;
    }
    // u▷1 = ε(u)1
    let on_unit = action.matmul(&Mat::identity(du).kron(&f.unit));
    if on_unit != f.unit.matmul(&u.counit) {
        return false;
    }
    // u▷(fg) = (u⟨1⟩▷f)(u⟨2⟩▷g) as maps U⊗F⊗F -> F
    let lhs = action.matmul(&Mat::identity(du).kron(&f.mult));
    let interleave = tensor_permutation::<Rat>(&[du, du, df, df], &[0, 2, 1, 3]);
    let rhs = f
        .mult
        .matmul(&action.kron(action))
        .matmul(&interleave)
        .matmul(&u.comult.kron(&Mat::identity(df * df)));
    if lhs != rhs {
        return false;
    }
    // (uv)▷f = u▷(v▷f), basis pairs inside the window
    let cutoff = cutoff_of(u);
    let acts: Vec<Mat> = (0..du)
        .map(|i| action.matmul(&Mat::basis_vector(du, i).kron(&Mat::identity(df))))
        .collect();
    for i in 0..du {
        for j in 0..du {
            if u.degree(i) + u.degree(j) > cutoff {
                continue;
            }
            let prod = u.mul_basis(i, j).expect("pair inside window");
            let lhs = action.matmul(&prod.kron(&Mat::identity(df)));
            if lhs != acts[i].matmul(&acts[j]) {
                return false;
            }
        }
    }
    true
}

/// Right F-comodule coalgebra laws on U: coassociativity and counit for
/// the coaction, compatibility with the coproduct of U
/// (`u⟨1⟩⟨0⟩ ⊗ u⟨2⟩⟨0⟩ ⊗ u⟨1⟩⟨1⟩u⟨2⟩⟨1⟩ = u⟨0⟩⟨1⟩ ⊗ u⟨0⟩⟨2⟩ ⊗ u⟨1⟩`),
/// and compatibility with the counit (`ε(u⟨0⟩)u⟨1⟩ = ε(u)1`).
pub fn check_comodule_coalgebra(
    u: &HopfPresentation,
    f: &HopfPresentation,
    coaction: &Mat,
) -> bool {
    let du = u.dim();
    let df = f.dim();
    if coaction.rows() != du * df || coaction.cols() != du {
        return false;
    }
    // counit: (id ⊗ ε_F)∘▼ = id
    if !Mat::identity(du).kron(&f.counit).matmul(coaction).is_identity() {
        return false;
    }
    // coassociativity: (id ⊗ Δ_F)∘▼ = (▼ ⊗ id)∘▼
    let lhs = Mat::identity(du).kron(&f.comult).matmul(coaction);
    let rhs = apply_at(coaction, &[du, df], 0).matmul(coaction);
    if lhs != rhs {
        return false;
    }
    // coproduct compatibility, as maps U -> U⊗U⊗F
    let step = apply_at(coaction, &[du, du], 0).matmul(&u.comult); // U⊗F⊗U
    let both = apply_at(coaction, &[du, df, du], 2).matmul(&step); // U⊗F⊗U⊗F
    let collect = tensor_permutation::<Rat>(&[du, df, du, df], &[0, 2, 1, 3]);
    let lhs = Mat::identity(du * du)
        .kron(&f.mult)
        .matmul(&collect)
        .matmul(&both);
    let rhs = apply_at(&u.comult, &[du, df], 0).matmul(coaction);
    if lhs != rhs {
        return false;
    }
    // counit compatibility: ε(u⟨0⟩)u⟨1⟩ = ε(u)1
    let lhs = u.counit.kron(&Mat::identity(df)).matmul(coaction);
    lhs == f.unit.matmul(&u.counit)
}

/// The five compatibility identities of a matched pair, on top of the
/// module-algebra and comodule-coalgebra structures. The coaction-mult
/// identity is compared on basis pairs inside the truncation window.
pub fn check_matched_pair(d: &MatchedPairDatum) -> AxiomReport {
    let du = d.u.dim();
    let df = d.f.dim();
    let mut report = AxiomReport { items: vec![] };
    report.push(
        "module-algebra",
        check_module_algebra(&d.u, &d.f, &d.action),
    );
    report.push(
        "comodule-coalgebra",
        check_comodule_coalgebra(&d.u, &d.f, &d.coaction),
    );

    // (1) ε(u▷f) = ε(u)ε(f)
    report.push(
        "action-counit",
        d.f.counit.matmul(&d.action) == d.u.counit.kron(&d.f.counit),
    );

    // (2) Δ(u▷f) = u⟨1⟩⟨0⟩▷f⟨1⟩ ⊗ u⟨1⟩⟨1⟩(u⟨2⟩▷f⟨2⟩), maps U⊗F -> F⊗F
    let lhs = d.f.comult.matmul(&d.action);
    let split_u = apply_at(&d.u.comult, &[du, df], 0); // u1,u2,f
    let split_f = apply_at(&d.f.comult, &[du, du, df], 2); // u1,u2,f1,f2
    let coact_u1 = apply_at(&d.coaction, &[du, du, df, df], 0); // u1',x,u2,f1,f2
    let arrange = tensor_permutation::<Rat>(&[du, df, du, df, df], &[0, 3, 1, 2, 4]);
    // now u1',f1,x,u2,f2
    let act_first = d.action.kron(&Mat::identity(df * du * df));
    let act_second = Mat::identity(df * df).kron(&d.action);
    let mul_tail = Mat::identity(df).kron(&d.f.mult);
    let rhs = mul_tail
        .matmul(&act_second)
        .matmul(&act_first)
        .matmul(&arrange)
        .matmul(&coact_u1)
        .matmul(&split_f)
        .matmul(&split_u);
    report.push("action-comult", lhs == rhs);

    // (3) ▼(1) = 1⊗1
    report.push(
        "coaction-unit",
        d.coaction.matmul(&d.u.unit) == d.u.unit.kron(&d.f.unit),
    );

    // (4) ▼(uv) = u⟨1⟩⟨0⟩v⟨0⟩ ⊗ u⟨1⟩⟨1⟩(u⟨2⟩▷v⟨1⟩), maps U⊗U -> U⊗F,
    // compared on basis pairs inside the window
    let lhs = d.coaction.matmul(&d.u.mult);
    let split_u = apply_at(&d.u.comult, &[du, du], 0); // u1,u2,v
    let coact_u1 = apply_at(&d.coaction, &[du, du, du], 0); // u1',x,u2,v
    let coact_v = apply_at(&d.coaction, &[du, df, du, du], 3); // u1',x,u2,v',y
    let arrange = tensor_permutation::<Rat>(&[du, df, du, du, df], &[0, 3, 1, 2, 4]);
    // now u1',v',x,u2,y
    let mul_u = d.u.mult.kron(&Mat::identity(df * du * df));
    let act = Mat::identity(du * df).kron(&d.action);
    let mul_f = Mat::identity(du).kron(&d.f.mult);
    let rhs = mul_f
        .matmul(&act)
        .matmul(&mul_u)
        .matmul(&arrange)
        .matmul(&coact_v)
        .matmul(&coact_u1)
        .matmul(&split_u);
    let cutoff = cutoff_of(&d.u);
    let diff = lhs.add(&rhs.neg());
    let mut ok = true;
    for (_, c, _) in diff.iter() {
        let (i, j) = (c / du, c % du);
        if d.u.degree(i) + d.u.degree(j) <= cutoff {
            ok = false;
        }
    }
    report.push("coaction-mult", ok);

    // (5) u⟨2⟩⟨0⟩ ⊗ (u⟨1⟩▷f)u⟨2⟩⟨1⟩ = u⟨1⟩⟨0⟩ ⊗ u⟨1⟩⟨1⟩(u⟨2⟩▷f),
    // maps U⊗F -> U⊗F
    let split_u = apply_at(&d.u.comult, &[du, df], 0); // u1,u2,f
    let coact_u2 = apply_at(&d.coaction, &[du, du, df], 1); // u1,u2',x,f
    let arrange = tensor_permutation::<Rat>(&[du, du, df, df], &[1, 0, 3, 2]);
    // now u2',u1,f,x
    let act = Mat::identity(du).kron(&d.action).kron(&Mat::identity(df));
    let mul_f = Mat::identity(du).kron(&d.f.mult);
    let lhs = mul_f
        .matmul(&act)
        .matmul(&arrange)
        .matmul(&coact_u2)
        .matmul(&split_u);
    let coact_u1 = apply_at(&d.coaction, &[du, du, df], 0); // u1',x,u2,f
    let act = Mat::identity(du * df).kron(&d.action);
    let rhs = mul_f
        .matmul(&act)
        .matmul(&coact_u1)
        .matmul(&split_u);
    report.push("action-coaction-mixed", lhs == rhs);

    report
}

/// The cocrossed coproduct and counit on F⊗U:
/// `Δ(f⊗u) = f⟨1⟩ ⊗ u⟨1⟩⟨0⟩ ⊗ f⟨2⟩u⟨1⟩⟨1⟩ ⊗ u⟨2⟩`, `ε = ε_F ⊗ ε_U`.
pub fn build_cocrossed_coalgebra(d: &MatchedPairDatum) -> (Mat, Mat) {
    let du = d.u.dim();
    let df = d.f.dim();
    let split_f = apply_at(&d.f.comult, &[df, du], 0); // f1,f2,u
    let split_u = apply_at(&d.u.comult, &[df, df, du], 2); // f1,f2,u1,u2
    let coact = apply_at(&d.coaction, &[df, df, du, du], 2); // f1,f2,u1',x,u2
    let arrange = tensor_permutation::<Rat>(&[df, df, du, df, du], &[0, 2, 1, 3, 4]);
    // now f1,u1',f2,x,u2
    let mul_f = Mat::identity(df * du)
        .kron(&d.f.mult)
        .kron(&Mat::identity(du));
    let comult = mul_f.matmul(&arrange).matmul(&coact).matmul(&split_u).matmul(&split_f);
    let counit = d.f.counit.kron(&d.u.counit);
    (comult, counit)
}

/// The crossed product and unit on F⊗U:
/// `(f⊗u)(g⊗v) = f(u⟨1⟩▷g) ⊗ u⟨2⟩v`, unit `1⊗1`.
pub fn build_crossed_algebra(d: &MatchedPairDatum) -> (Mat, Mat) {
    let du = d.u.dim();
    let df = d.f.dim();
    let split_u = apply_at(&d.u.comult, &[df, du, df, du], 1); // f,u1,u2,g,v
    let arrange = tensor_permutation::<Rat>(&[df, du, du, df, du], &[0, 1, 3, 2, 4]);
    // now f,u1,g,u2,v
    let act = Mat::identity(df)
        .kron(&d.action)
        .kron(&Mat::identity(du * du));
    let mult = d.f.mult.kron(&d.u.mult).matmul(&act).matmul(&arrange).matmul(&split_u);
    let unit = d.f.unit.kron(&d.u.unit);
    (mult, unit)
}

/// The bicrossed product Hopf algebra on F⊗U, with antipode
/// `S(f⊗u) = (1⊗S(u⟨0⟩))(S(f·u⟨1⟩)⊗1)` in the crossed algebra.
/// Requires every matched-pair identity; a truncation on U propagates to
/// the product.
pub fn build_bicrossed(d: &MatchedPairDatum) -> Result<HopfPresentation, MatchedError> {
    if d.f.is_truncated() {
        return Err(MatchedError::Hopf(HopfError::NotFiniteDimensional));
    }
    let report = check_matched_pair(d);
    if !report.all_pass() {
        return Err(MatchedError::NotMatched(report.failed().join(", ")));
    }
    let du = d.u.dim();
    let df = d.f.dim();
    let dim = df * du;
    let (mult, unit) = build_crossed_algebra(d);
    let (comult, counit) = build_cocrossed_coalgebra(d);
    let mut antipode = Mat::zero(dim, dim);
    for a in 0..df {
        for m in 0..du {
            let ea = Mat::basis_vector(df, a);
            let mut col = Mat::zero(dim, 1);
            for (r, _, c) in d.coaction.column(m).iter() {
                let (k, x) = (r / df, r % df);
                let s_u = d.u.antipode.column(k);
                let fax = d.f.mult.matmul(&ea.kron(&Mat::basis_vector(df, x)));
                let s_f = d.f.antipode.matmul(&fax);
                let left = d.f.unit.kron(&s_u);
                let right = s_f.kron(&d.u.unit);
                col = col.add(&mult.matmul(&left.kron(&right)).scale(c));
            }
            for (r, _, c) in col.iter() {
                antipode.set(r, a * du + m, c.clone());
            }
        }
    }
    let truncation = d.u.truncation.as_ref().map(|t| {
        let mut degrees = Vec::with_capacity(dim);
        for _ in 0..df {
            degrees.extend(t.degrees.iter().copied());
        }
        let mut overflow_pairs = BTreeSet::new();
        for i in 0..dim {
            for j in 0..dim {
                if degrees[i] + degrees[j] > t.cutoff {
                    overflow_pairs.insert((i, j));
                }
            }
        }
        Truncation {
            degrees,
            cutoff: t.cutoff,
            overflow_pairs,
        }
    });
    let h = HopfPresentation {
        space: d.f.space.tensor(&d.u.space),
        mult,
        unit,
        comult,
        counit,
        antipode,
        truncation,
    };
    let axioms = check_hopf_axioms(&h)?;
    if !axioms.all_pass() {
        return Err(MatchedError::NotMatched(axioms.failed().join(", ")));
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::examples::{functions_on_cyclic, group_algebra_cyclic, sweedler_h4};
    use crate::liecyclic::aff1;
    use crate::rat;

    #[test]
    fn trivial_datum_passes_everything() {
        let u = group_algebra_cyclic(2);
        let f = group_algebra_cyclic(3);
        let d = trivial_matched_pair(&u, &f);
        assert!(check_module_algebra(&u, &f, &d.action));
        assert!(check_comodule_coalgebra(&u, &f, &d.coaction));
        let report = check_matched_pair(&d);
        assert!(report.all_pass(), "failed: {:?}", report.failed());
    }

    #[test]
    fn trivial_datum_builds_tensor_product_hopf() {
        let u = sweedler_h4();
        let f = functions_on_cyclic(2);
        let d = trivial_matched_pair(&u, &f);
        let h = build_bicrossed(&d).unwrap();
        let du = u.dim();
        let df = f.dim();
        // mult: (F⊗U⊗F⊗U) -> (F⊗F⊗U⊗U) -> F⊗U componentwise
        let collect = tensor_permutation::<Rat>(&[df, du, df, du], &[0, 2, 1, 3]);
        assert_eq!(h.mult, f.mult.kron(&u.mult).matmul(&collect));
        // comult: F⊗U -> F⊗F⊗U⊗U -> (F⊗U)⊗(F⊗U)
        let spread = tensor_permutation::<Rat>(&[df, df, du, du], &[0, 2, 1, 3]);
        assert_eq!(h.comult, spread.matmul(&f.comult.kron(&u.comult)));
        assert_eq!(h.antipode, f.antipode.kron(&u.antipode));
        // antipode of f⊗1 is S_F(f)⊗1
        for a in 0..df {
            let v = Mat::basis_vector(df, a).kron(&u.unit);
            assert_eq!(
                h.antipode.matmul(&v),
                f.antipode.matmul(&Mat::basis_vector(df, a)).kron(&u.unit)
            );
        }
    }

    #[test]
    fn cocrossed_counit_formula() {
        let u = group_algebra_cyclic(3);
        let f = functions_on_cyclic(2);
        let d = trivial_matched_pair(&u, &f);
        let (_, counit) = build_cocrossed_coalgebra(&d);
        for a in 0..f.dim() {
            for m in 0..u.dim() {
                let v = Mat::basis_vector(f.dim(), a).kron(&Mat::basis_vector(u.dim(), m));
                assert_eq!(
                    counit.matmul(&v).get(0, 0),
                    f.counit.get(0, a) * u.counit.get(0, m)
                );
            }
        }
    }

    #[test]
    fn broken_leibniz_fails_module_algebra() {
        // X▷g = g on F = kℤ/2 is not a derivation: X▷(g·g) = 0 but the
        // Leibniz expansion gives 2g² = 2
        let g = aff1();
        let u = crate::hopf::truncated_uea(&g, 2);
        let f = group_algebra_cyclic(2);
        let du = u.dim();
        let df = f.dim();
        // trivial (zero-derivation) extension: every monomial of positive
        // degree acts as zero; this is a module algebra
        let trivial = u.counit.kron(&Mat::identity(df));
        assert!(check_module_algebra(&u, &f, &trivial));
        // perturb: the generator X (basis index 1) sends g to g
        let mut bad = trivial.clone();
        bad.set(1, 1 * df + 1, rat(1));
        assert!(!check_module_algebra(&u, &f, &bad));
    }

    #[test]
    fn perturbed_coaction_fails_comodule_coalgebra() {
        let u = group_algebra_cyclic(2);
        let f = functions_on_cyclic(2);
        let d = trivial_matched_pair(&u, &f);
        assert!(check_comodule_coalgebra(&u, &f, &d.coaction));
        let mut bad = d.coaction.clone();
        // rescale one δ-component of ▼(g): breaks coassociativity
        bad.set(1 * f.dim() + 1, 1, rat(2));
        assert!(!check_comodule_coalgebra(&u, &f, &bad));
    }

    #[test]
    fn fifth_identity_named_failure() {
        // H₄ genuinely acts on kℤ/2 = k[t]/(t²-1): g▷t = -t, x▷t = 1 is a
        // module algebra (skew Leibniz rule), but with the trivial coaction
        // the mixed identity needs cocommutativity of U and fails
        let u = sweedler_h4();
        let f = group_algebra_cyclic(2);
        let mut d = trivial_matched_pair(&u, &f);
        let df = f.dim();
        let mut action = Mat::zero(df, u.dim() * df);
        // 1▷ = id
        action.set(0, 0 * df + 0, rat(1));
        action.set(1, 0 * df + 1, rat(1));
        // g▷: 1 ↦ 1, t ↦ -t
        action.set(0, 1 * df + 0, rat(1));
        action.set(1, 1 * df + 1, rat(-1));
        // x▷: 1 ↦ 0, t ↦ 1
        action.set(0, 2 * df + 1, rat(1));
        // gx▷ = g▷(x▷-): t ↦ 1
        action.set(0, 3 * df + 1, rat(1));
        d.action = action;
        assert!(check_module_algebra(&u, &f, &d.action));
        let report = check_matched_pair(&d);
        assert!(!report.all_pass());
        assert!(report.failed().contains(&"action-coaction-mixed"));
        assert!(matches!(
            build_bicrossed(&d),
            Err(MatchedError::NotMatched(_))
        ));
    }
}
