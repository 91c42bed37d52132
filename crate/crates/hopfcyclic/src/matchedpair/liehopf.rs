//! Lie-Hopf data: a Lie algebra acting on a commutative Hopf algebra by
//! derivations together with a compatible coaction, the induced bracket
//! on g⊗F, the extension of the coaction to the truncated enveloping
//! algebra, and the canonical modular pair (trace character, coaction
//! determinant) on the bicrossed product.

use crate::exactlin::matrix::FreeSpace;
use crate::hopf::pbw::monomials;
use crate::hopf::{
    check_mpi, is_group_like, swap_square, truncated_uea, AxiomReport, Character,
    GroupLike, HopfPresentation, ModularPair,
};
use crate::liecyclic::{check_jacobi, LieDatum};
use crate::matchedpair::matched::MatchedPairDatum;
use crate::matchedpair::MatchedError;
use crate::scalar::Rat;
use crate::Mat;
use num_traits::Zero;
use std::collections::BTreeMap;

/// A Lie algebra `g` acting on a commutative Hopf algebra `F` by
/// derivations, with a coaction `g -> g⊗F` satisfying the Lie-Hopf
/// compatibilities. Layout: `action: g⊗F -> F` with the g index slow;
/// `coaction: g -> g⊗F` with the g index slow.
#[derive(Clone, Debug)]
pub struct LieHopfDatum {
    pub g: LieDatum,
    pub f: HopfPresentation,
    pub action: Mat,
    pub coaction: Mat,
}

impl LieHopfDatum {
    /// The operator `f ↦ Xᵢ▷f` on F.
    pub fn act_basis(&self, i: usize) -> Mat {
        let df = self.f.dim();
        self.action
            .matmul(&Mat::basis_vector(self.g.dim(), i).kron(&Mat::identity(df)))
    }
}

/// The zero action with the trivial coaction `X ↦ X⊗1`.
pub fn trivial_lie_hopf(g: &LieDatum, f: &HopfPresentation) -> LieHopfDatum {
    let d = g.dim();
    let df = f.dim();
    LieHopfDatum {
        g: g.clone(),
        f: f.clone(),
        action: Mat::zero(df, d * df),
        coaction: Mat::identity(d).kron(&f.unit),
    }
}

/// One-dimensional `g = span(X)` over `F = kℤ/2` with the zero action
/// and the coaction `X ↦ X⊗g`: the smallest Lie-Hopf datum whose
/// canonical group-like is not the unit.
pub fn line_over_kz2() -> LieHopfDatum {
    let g = crate::liecyclic::abelian(&["X"]);
    let f = crate::hopf::examples::group_algebra_cyclic(2);
    let df = f.dim();
    let mut coaction = Mat::zero(df, 1);
    coaction.set(1, 0, crate::rat(1)); // X ↦ X ⊗ g
    LieHopfDatum {
        g,
        f,
        action: Mat::zero(df, df),
        coaction,
    }
}

/// The bracket tensor on g⊗F before any verification:
/// `[X⊗f, Y⊗h] = [X,Y]⊗fh + Y⊗ε(f)(X▷h) − X⊗ε(h)(Y▷f)`.
fn gf_bracket_raw(l: &LieHopfDatum) -> LieDatum {
    let d = l.g.dim();
    let df = l.f.dim();
    let big = d * df;
    let acts: Vec<Mat> = (0..d).map(|i| l.act_basis(i)).collect();
    let mut bracket = Mat::zero(big, big * big);
    for i in 0..d {
        for a in 0..df {
            for j in 0..d {
                for b in 0..df {
                    let ea = Mat::basis_vector(df, a);
                    let eb = Mat::basis_vector(df, b);
                    let mut col = Mat::zero(big, 1);
                    let fab = l.f.mult.matmul(&ea.kron(&eb));
                    for (k, _, c) in l.g.bracket_basis(i, j).iter() {
                        col = col.add(&Mat::basis_vector(d, k).kron(&fab).scale(c));
                    }
                    let eps_a = l.f.counit.get(0, a);
                    if !eps_a.is_zero() {
                        let term = Mat::basis_vector(d, j).kron(&acts[i].matmul(&eb));
                        col = col.add(&term.scale(&eps_a));
                    }
                    let eps_b = l.f.counit.get(0, b);
                    if !eps_b.is_zero() {
                        let term = Mat::basis_vector(d, i).kron(&acts[j].matmul(&ea));
                        col = col.add(&term.scale(&(-eps_b)));
                    }
                    let src = (i * df + a) * big + (j * df + b);
                    for (r, _, c) in col.iter() {
                        bracket.set(r, src, c.clone());
                    }
                }
            }
        }
    }
    let labels: Vec<String> = l
        .g
        .space
        .labels()
        .iter()
        .flat_map(|x| {
            l.f.space
                .labels()
                .iter()
                .map(move |f| format!("{x}({f})"))
        })
        .collect();
    LieDatum {
        space: FreeSpace::new(labels),
        bracket,
    }
}

/// The bracket on g⊗F, with antisymmetry and Jacobi re-verified.
pub fn gf_bracket(l: &LieHopfDatum) -> Result<LieDatum, MatchedError> {
    let gf = gf_bracket_raw(l);
    if !check_jacobi(&gf) {
        return Err(MatchedError::NotLieHopf("gF-bracket".into()));
    }
    Ok(gf)
}

/// Verify every Lie-Hopf compatibility: F commutative and an F-comodule
/// base, the action by derivations killed by the counit, the Lie-module
/// law, the coaction a Lie-algebra map into g⊗F, and the g-linearity of
/// the coproduct through the bullet action
/// `X•(f⊗h) = X⟨0⟩▷f ⊗ X⟨1⟩h + f ⊗ X▷h`.
pub fn check_lie_hopf(l: &LieHopfDatum) -> AxiomReport {
    let d = l.g.dim();
    let df = l.f.dim();
    let mut report = AxiomReport { items: vec![] };
    let acts: Vec<Mat> = (0..d).map(|i| l.act_basis(i)).collect();

    report.push(
        "base-commutative",
        l.f.mult.matmul(&swap_square(&l.f)) == l.f.mult,
    );

    // g is a right F-comodule: counit and coassociativity
    let counit_ok = Mat::identity(d)
        .kron(&l.f.counit)
        .matmul(&l.coaction)
        .is_identity();
    let lhs = Mat::identity(d).kron(&l.f.comult).matmul(&l.coaction);
    let rhs = crate::exactlin::apply_at(&l.coaction, &[d, df], 0).matmul(&l.coaction);
    report.push("base-comodule", counit_ok && lhs == rhs);

    let derivation = acts.iter().all(|a| {
        let lhs = a.matmul(&l.f.mult);
        let leibniz = a.kron(&Mat::identity(df)).add(&Mat::identity(df).kron(a));
        lhs == l.f.mult.matmul(&leibniz)
    });
    report.push("derivation", derivation);

    report.push(
        "action-counit",
        acts.iter().all(|a| l.f.counit.matmul(a).is_zero_matrix()),
    );

    // left Lie-module law on F: A_{[X,Y]} = A_X A_Y − A_Y A_X
    let mut module = true;
    for i in 0..d {
        for j in 0..d {
            let mut lhs = Mat::zero(df, df);
            for (k, _, c) in l.g.bracket_basis(i, j).iter() {
                lhs = lhs.add(&acts[k].scale(c));
            }
            let rhs = acts[i].matmul(&acts[j]).add(&acts[j].matmul(&acts[i]).neg());
            if lhs != rhs {
                module = false;
            }
        }
    }
    report.push("lie-module", module);

    // the coaction is a Lie-algebra map into (g⊗F, gF-bracket)
    let gf = gf_bracket_raw(l);
    let lie_map = l.coaction.matmul(&l.g.bracket)
        == gf.bracket.matmul(&l.coaction.kron(&l.coaction));
    report.push("coaction-lie-map", lie_map && check_jacobi(&gf));

    // Δ(X▷f) = X•Δ(f)
    let mut comult_linear = true;
    for i in 0..d {
        let lhs = l.f.comult.matmul(&acts[i]);
        let mut bullet = Mat::identity(df).kron(&acts[i]);
        for (r, _, c) in l.coaction.column(i).iter() {
            let (k, x) = (r / df, r % df);
            let lx = l.f.left_mul(&Mat::basis_vector(df, x));
            bullet = bullet.add(&acts[k].kron(&lx).scale(c));
        }
        if lhs != bullet.matmul(&l.f.comult) {
            comult_linear = false;
        }
    }
    report.push("comult-linear", comult_linear);

    report
}

/// Extend the coaction to the degree-`n` truncated enveloping algebra by
/// the recursion `▼(Xu) = X⟨0⟩u⟨0⟩ ⊗ X⟨1⟩u⟨1⟩ + u⟨0⟩ ⊗ X▷u⟨1⟩`,
/// `▼(1) = 1⊗1`. Returns the truncated algebra and the coaction matrix.
pub fn extend_coaction_to_ug(
    l: &LieHopfDatum,
    n: usize,
) -> Result<(HopfPresentation, Mat), MatchedError> {
    let report = check_lie_hopf(l);
    if !report.all_pass() {
        return Err(MatchedError::NotLieHopf(report.failed().join(", ")));
    }
    let d = l.g.dim();
    let df = l.f.dim();
    let uea = truncated_uea(&l.g, n);
    let nu = uea.dim();
    let basis = monomials(d, n);
    let index: BTreeMap<Vec<usize>, usize> = basis
        .iter()
        .enumerate()
        .map(|(m, e)| (e.clone(), m))
        .collect();
    let acts: Vec<Mat> = (0..d).map(|i| l.act_basis(i)).collect();
    let gen_left: Vec<Mat> = (0..d)
        .map(|i| {
            let mut e = vec![0; d];
            e[i] = 1;
            uea.left_mul(&Mat::basis_vector(nu, index[&e]))
        })
        .collect();
    let f_left: Vec<Mat> = (0..df)
        .map(|x| l.f.left_mul(&Mat::basis_vector(df, x)))
        .collect();
    let mut cols: Vec<Mat> = Vec::with_capacity(nu);
    for expo in &basis {
        if expo.iter().all(|&e| e == 0) {
            cols.push(uea.unit.kron(&l.f.unit));
            continue;
        }
        let i = expo.iter().position(|&e| e > 0).expect("nonzero monomial");
        let mut rest = expo.clone();
        rest[i] -= 1;
        let prev = &cols[index[&rest]];
        let mut col = Mat::identity(nu).kron(&acts[i]).matmul(prev);
        for (r, _, c) in l.coaction.column(i).iter() {
            let (k, x) = (r / df, r % df);
            col = col.add(&gen_left[k].kron(&f_left[x]).matmul(prev).scale(c));
        }
        cols.push(col);
    }
    let coaction = Mat::from_columns(nu * df, &cols);
    Ok((uea, coaction))
}

/// Assemble the full matched pair `(U(g) truncated at degree n, F)` by
/// extending the action multiplicatively over the PBW basis and the
/// coaction by the recursion above.
pub fn lie_hopf_to_matched_pair(
    l: &LieHopfDatum,
    n: usize,
) -> Result<MatchedPairDatum, MatchedError> {
    let (uea, coaction) = extend_coaction_to_ug(l, n)?;
    let d = l.g.dim();
    let df = l.f.dim();
    let nu = uea.dim();
    let acts: Vec<Mat> = (0..d).map(|i| l.act_basis(i)).collect();
    let mut action = Mat::zero(df, nu * df);
    for (m, expo) in monomials(d, n).iter().enumerate() {
        // (X_{i₁}⋯X_{i_k})▷f applies the rightmost generator first
        let mut a = Mat::identity(df);
        for (i, &count) in expo.iter().enumerate() {
            for _ in 0..count {
                a = a.matmul(&acts[i]);
            }
        }
        for x in 0..df {
            for (r, _, c) in a.column(x).iter() {
                action.set(r, m * df + x, c.clone());
            }
        }
    }
    Ok(MatchedPairDatum {
        u: uea,
        f: l.f.clone(),
        action,
        coaction,
    })
}

/// The trace character `δ(Xᵢ) = Tr(ad_{Xᵢ})` on the degree-`n` truncated
/// enveloping algebra, extended multiplicatively over the PBW basis.
pub fn canonical_delta(g: &LieDatum, n: usize) -> Character {
    let d = g.dim();
    let traces: Vec<Rat> = (0..d)
        .map(|i| {
            let ad = g.ad_basis(i);
            (0..d).fold(Rat::zero(), |acc, j| acc + ad.get(j, j))
        })
        .collect();
    let basis = monomials(d, n);
    let mut covector = Mat::zero(1, basis.len());
    for (m, expo) in basis.iter().enumerate() {
        let mut v = crate::rat(1);
        for (i, &count) in expo.iter().enumerate() {
            for _ in 0..count {
                v = v * traces[i].clone();
            }
        }
        covector.set(0, m, v);
    }
    Character { covector }
}

/// All permutations of `0..d` with their signs.
fn signed_permutations(d: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = vec![(Vec::new(), 1i64)];
    for _ in 0..d {
        let mut next = Vec::new();
        for (p, s) in &out {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, p.len());
                let sign = if (p.len() - pos) % 2 == 0 { *s } else { -*s };
                next.push((q, sign));
            }
        }
        out = next;
    }
    out
}

/// The determinant of the first-order coaction coefficients:
/// `σ = det(f_ij)` where `coaction(X_j) = Σᵢ Xᵢ ⊗ f_ij`, verified
/// group-like in F.
pub fn canonical_sigma(l: &LieHopfDatum) -> Result<GroupLike, MatchedError> {
    let d = l.g.dim();
    let df = l.f.dim();
    let coeff = |i: usize, j: usize| -> Mat {
        let col = l.coaction.column(j);
        let mut out = Mat::zero(df, 1);
        for (r, _, c) in col.iter() {
            if r / df == i {
                out.set(r % df, 0, c.clone());
            }
        }
        out
    };
    let mut sigma = Mat::zero(df, 1);
    for (p, s) in signed_permutations(d) {
        let mut term = l.f.unit.clone();
        for (j, &i) in p.iter().enumerate() {
            term = l.f.mult.matmul(&term.kron(&coeff(i, j)));
        }
        sigma = sigma.add(&term.scale(&crate::rat(s)));
    }
    if !is_group_like(&l.f, &sigma) {
        return Err(MatchedError::NotGroupLike);
    }
    Ok(GroupLike { element: sigma })
}

/// The canonical modular pair `(ε_F ⊗ δ, σ ⊗ 1)` on the bicrossed
/// product `F ⋈ U(g)` truncated at degree `n`, verified by the full
/// modular-pair check. Returns the bicrossed Hopf algebra and the pair.
pub fn canonical_mpi(
    l: &LieHopfDatum,
    n: usize,
) -> Result<(HopfPresentation, ModularPair), MatchedError> {
    let datum = lie_hopf_to_matched_pair(l, n)?;
    let h = crate::matchedpair::matched::build_bicrossed(&datum)?;
    let delta = canonical_delta(&l.g, n);
    let delta_hat = Character {
        covector: l.f.counit.kron(&delta.covector),
    };
    let sigma = canonical_sigma(l)?;
    let sigma_hat = GroupLike {
        element: sigma.element.kron(&datum.u.unit),
    };
    let pair = check_mpi(&h, &delta_hat, &sigma_hat)?;
    Ok((h, pair))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::examples::group_algebra_cyclic;
    use crate::hopf::{is_character, HopfError};
    use crate::liecyclic::{abelian, aff1};
    use crate::matchedpair::matched::check_matched_pair;
    use crate::rat;

    #[test]
    fn trivial_and_line_data_pass() {
        let t = trivial_lie_hopf(&aff1(), &group_algebra_cyclic(2));
        let report = check_lie_hopf(&t);
        assert!(report.all_pass(), "failed: {:?}", report.failed());
        let line = line_over_kz2();
        let report = check_lie_hopf(&line);
        assert!(report.all_pass(), "failed: {:?}", report.failed());
    }

    #[test]
    fn broken_derivation_named_failure() {
        let mut l = trivial_lie_hopf(&abelian(&["X"]), &group_algebra_cyclic(2));
        // X▷g = g is not a derivation on k[ℤ/2]
        l.action.set(1, 1, rat(1));
        let report = check_lie_hopf(&l);
        assert!(report.failed().contains(&"derivation"));
        assert!(matches!(
            extend_coaction_to_ug(&l, 2),
            Err(MatchedError::NotLieHopf(_))
        ));
    }

    #[test]
    fn gf_bracket_trivial_action_is_componentwise() {
        let l = trivial_lie_hopf(&aff1(), &group_algebra_cyclic(2));
        let gf = gf_bracket(&l).unwrap();
        let d = 2;
        let df = 2;
        for i in 0..d {
            for a in 0..df {
                for j in 0..d {
                    for b in 0..df {
                        let fab = l.f.mult.matmul(
                            &Mat::basis_vector(df, a).kron(&Mat::basis_vector(df, b)),
                        );
                        let mut expected = Mat::zero(d * df, 1);
                        for (k, _, c) in l.g.bracket_basis(i, j).iter() {
                            expected = expected
                                .add(&Mat::basis_vector(d, k).kron(&fab).scale(c));
                        }
                        assert_eq!(gf.bracket_basis(i * df + a, j * df + b), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn gf_bracket_line_datum_passes_jacobi() {
        let gf = gf_bracket(&line_over_kz2()).unwrap();
        assert_eq!(gf.dim(), 2);
        assert!(gf.bracket.is_zero_matrix());
    }

    #[test]
    fn coaction_extension_values() {
        let l = line_over_kz2();
        let (uea, coaction) = extend_coaction_to_ug(&l, 3).unwrap();
        let df = 2;
        // ▼(1) = 1⊗1
        assert_eq!(coaction.column(0), uea.unit.kron(&l.f.unit));
        // ▼(X) = X⊗g
        assert_eq!(
            coaction.column(1),
            Mat::basis_vector(uea.dim(), 1).kron(&Mat::basis_vector(df, 1))
        );
        // ▼(X²) = X²⊗g² = X²⊗1, since the recursion multiplies the F legs
        assert_eq!(
            coaction.column(2),
            Mat::basis_vector(uea.dim(), 2).kron(&Mat::basis_vector(df, 0))
        );
        // ▼(X³) = X³⊗g
        assert_eq!(
            coaction.column(3),
            Mat::basis_vector(uea.dim(), 3).kron(&Mat::basis_vector(df, 1))
        );
        assert!(crate::matchedpair::matched::check_comodule_coalgebra(
            &uea, &l.f, &coaction
        ));
    }

    #[test]
    fn trivial_coaction_extends_trivially() {
        let l = trivial_lie_hopf(&aff1(), &group_algebra_cyclic(2));
        let (uea, coaction) = extend_coaction_to_ug(&l, 3).unwrap();
        assert_eq!(coaction, Mat::identity(uea.dim()).kron(&l.f.unit));
    }

    #[test]
    fn matched_pairs_from_lie_hopf_data() {
        for (l, n) in [
            (trivial_lie_hopf(&aff1(), &group_algebra_cyclic(2)), 2),
            (line_over_kz2(), 3),
        ] {
            let d = lie_hopf_to_matched_pair(&l, n).unwrap();
            let report = check_matched_pair(&d);
            assert!(report.all_pass(), "failed: {:?}", report.failed());
        }
    }

    #[test]
    fn trace_character_values() {
        let eps_like = canonical_delta(&abelian(&["X"]), 3);
        let uea = truncated_uea(&abelian(&["X"]), 3);
        assert_eq!(eps_like.covector, uea.counit);

        let delta = canonical_delta(&aff1(), 2);
        let uea = truncated_uea(&aff1(), 2);
        assert!(is_character(&uea, &delta.covector));
        // basis: 1, X, Y, X², XY, Y²
        assert_eq!(delta.covector.get(0, 1), rat(1)); // δ(X) = Tr ad_X = 1
        assert_eq!(delta.covector.get(0, 2), rat(0)); // δ(Y) = 0
        assert_eq!(delta.covector.get(0, 3), rat(1)); // δ(X²) = 1
        assert_eq!(delta.covector.get(0, 4), rat(0)); // δ(XY) = 0
    }

    #[test]
    fn coaction_determinants() {
        let t = trivial_lie_hopf(&aff1(), &group_algebra_cyclic(2));
        assert_eq!(canonical_sigma(&t).unwrap().element, t.f.unit);
        let line = line_over_kz2();
        assert_eq!(
            canonical_sigma(&line).unwrap().element,
            Mat::basis_vector(2, 1)
        );
        // diagonal coaction on a 2-dim abelian g: σ = g·g = 1
        let g = abelian(&["X", "Y"]);
        let f = group_algebra_cyclic(2);
        let mut coaction = Mat::zero(4, 2);
        coaction.set(0 * 2 + 1, 0, rat(1)); // X ↦ X⊗g
        coaction.set(1 * 2 + 1, 1, rat(1)); // Y ↦ Y⊗g
        let l = LieHopfDatum {
            g,
            f: f.clone(),
            action: Mat::zero(2, 4),
            coaction,
        };
        assert!(check_lie_hopf(&l).all_pass());
        assert_eq!(canonical_sigma(&l).unwrap().element, f.unit);
    }

    #[test]
    fn canonical_pairs_verify() {
        let t = trivial_lie_hopf(&abelian(&["X"]), &group_algebra_cyclic(2));
        let (_, pair) = canonical_mpi(&t, 2).unwrap();
        assert!(pair.verified);
        // the canonical pair of the trivial datum is (ε, 1)
        let uea = truncated_uea(&t.g, 2);
        assert_eq!(pair.delta.covector, t.f.counit.kron(&uea.counit));
        assert_eq!(pair.sigma.element, t.f.unit.kron(&uea.unit));

        let (_, pair) = canonical_mpi(&line_over_kz2(), 3).unwrap();
        assert!(pair.verified);

        let (_, pair) = canonical_mpi(&trivial_lie_hopf(&aff1(), &group_algebra_cyclic(2)), 3)
            .unwrap();
        assert!(pair.verified);
    }

    #[test]
    fn wrong_sigma_rejected() {
        // anything other than the determinant is not even group-like here:
        // perturbing σ by a non-group-like element fails the modular check
        let l = line_over_kz2();
        let (h, _) = canonical_mpi(&l, 3).unwrap();
        let delta_hat = Character {
            covector: l.f.counit.kron(&truncated_uea(&l.g, 3).counit),
        };
        let mut bad = Mat::zero(h.dim(), 1);
        bad.set(0, 0, rat(1));
        bad.set(1, 0, rat(1)); // 1⊗1 + 1⊗X is not group-like
        let wrong = GroupLike { element: bad };
        assert_eq!(
            check_mpi(&h, &delta_hat, &wrong).unwrap_err(),
            HopfError::NotGroupLike
        );
    }
}
