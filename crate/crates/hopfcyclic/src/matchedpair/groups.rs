//! Matched pairs of finite group algebras from an exact factorization
//! `G = G₁G₂`: the mutual actions are recovered by unique
//! refactorization `b·a = (b▷a)(b◁a)`, and the resulting datum is
//! `U = k[G₁]` acting on `F = k^{G₂}` with coaction
//! `a ↦ Σ_b (b▷a) ⊗ δ_b`.

use crate::exactlin::matrix::FreeSpace;
use crate::hopf::{dual_hopf, HopfPresentation};
use crate::matchedpair::matched::MatchedPairDatum;
use crate::matchedpair::MatchedError;
use crate::rat;
use crate::Mat;

/// The group algebra of a finite group given by labels and a
/// multiplication table `table[i][j] = index of gᵢ·gⱼ`.
pub fn group_hopf(labels: &[&str], table: &[Vec<usize>]) -> HopfPresentation {
    let n = labels.len();
    assert_eq!(table.len(), n);
    assert!(table.iter().all(|row| row.len() == n));
    let e = (0..n)
        .find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
        .expect("multiplication table has no identity");
    let space = FreeSpace::from_strs(labels);
    let mut mult = Mat::zero(n, n * n);
    let mut comult = Mat::zero(n * n, n);
    let mut counit = Mat::zero(1, n);
    let mut antipode = Mat::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            mult.set(table[i][j], i * n + j, rat(1));
        }
        comult.set(i * n + i, i, rat(1));
        counit.set(0, i, rat(1));
        let inv = (0..n)
            .find(|&j| table[i][j] == e)
            .expect("multiplication table has no inverse");
        antipode.set(inv, i, rat(1));
    }
    HopfPresentation {
        space,
        mult,
        unit: Mat::basis_vector(n, e),
        comult,
        counit,
        antipode,
        truncation: None,
    }
}

/// Build the matched pair `(k[G₁], k^{G₂})` from an exact factorization
/// `G = G₁G₂`: `g1` and `g2` list the element indices of the two
/// subgroups in `table`, and every group element must factor uniquely as
/// `a·b` with `a ∈ G₁`, `b ∈ G₂`.
pub fn exact_factorization(
    labels: &[&str],
    table: &[Vec<usize>],
    g1: &[usize],
    g2: &[usize],
) -> Result<MatchedPairDatum, MatchedError> {
    let n = labels.len();
    let e = (0..n)
        .find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
        .ok_or_else(|| MatchedError::NotExactFactorization("no identity element".into()))?;
    for (name, sub) in [("G1", g1), ("G2", g2)] {
        if !sub.contains(&e) {
            return Err(MatchedError::NotExactFactorization(format!(
                "{name} does not contain the identity"
            )));
        }
        for &a in sub {
            for &b in sub {
                if !sub.contains(&table[a][b]) {
                    return Err(MatchedError::NotExactFactorization(format!(
                        "{name} is not closed under multiplication"
                    )));
                }
            }
        }
    }
    if g1.len() * g2.len() != n {
        return Err(MatchedError::NotExactFactorization(
            "subgroup orders do not multiply to the group order".into(),
        ));
    }
    // refactor[g] = (position of a in g1, position of b in g2) with g = a·b
    let mut refactor: Vec<Option<(usize, usize)>> = vec![None; n];
    for (ia, &a) in g1.iter().enumerate() {
        for (ib, &b) in g2.iter().enumerate() {
            let p = table[a][b];
            if refactor[p].is_some() {
                return Err(MatchedError::NotExactFactorization(format!(
                    "element `{}` factors in two ways",
                    labels[p]
                )));
            }
            refactor[p] = Some((ia, ib));
        }
    }
    let refactor: Vec<(usize, usize)> = refactor
        .into_iter()
        .map(|o| o.expect("counting ensures surjectivity"))
        .collect();

    let labels1: Vec<&str> = g1.iter().map(|&i| labels[i]).collect();
    let labels2: Vec<&str> = g2.iter().map(|&i| labels[i]).collect();
    let sub_table = |sub: &[usize]| -> Vec<Vec<usize>> {
        sub.iter()
            .map(|&a| {
                sub.iter()
                    .map(|&b| {
                        sub.iter()
                            .position(|&c| c == table[a][b])
                            .expect("closure checked above")
                    })
                    .collect()
            })
            .collect()
    };
    let u = group_hopf(&labels1, &sub_table(g1));
    let f = dual_hopf(&group_hopf(&labels2, &sub_table(g2)))?;
    let du = g1.len();
    let df = g2.len();

    // b·a = (b▷a)(b◁a): b▷a ∈ G₁ drives the coaction, b◁a ∈ G₂ the action
    let mut action = Mat::zero(df, du * df);
    let mut coaction = Mat::zero(du * df, du);
    for (ia, &a) in g1.iter().enumerate() {
        for (ib, &b) in g2.iter().enumerate() {
            let (fwd, back) = refactor[table[b][a]];
            // a ▷ δ_{b◁a} picks up δ_b;  a ↦ Σ_b (b▷a) ⊗ δ_b
            action.set(ib, ia * df + back, rat(1));
            coaction.set(fwd * df + ib, ia, rat(1));
        }
    }
    Ok(MatchedPairDatum {
        u,
        f,
        action,
        coaction,
    })
}

/// The matched pair `(kℤ/3, k^{ℤ/2})` from the exact factorization
/// `S₃ = ⟨(123)⟩ · ⟨(12)⟩`.
pub fn s3_matched_pair() -> MatchedPairDatum {
    // permutations of {0,1,2} in lexicographic order, composed as
    // (p∘q)(x) = p(q(x))
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let labels = ["e", "s23", "s12", "c", "c2", "s13"];
    let idx = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| idx(&[p[q[0]], p[q[1]], p[q[2]]]))
                .collect()
        })
        .collect();
    // G₁ = ⟨(012)⟩ = {e, [1,2,0], [2,0,1]}, G₂ = {e, [1,0,2]}
    exact_factorization(&labels, &table, &[0, 3, 4], &[0, 2])
        .expect("S₃ factors exactly over its rotation and reflection subgroups")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::check_hopf_axioms;
    use crate::matchedpair::matched::{
        build_bicrossed, check_comodule_coalgebra, check_module_algebra,
        check_matched_pair,
    };

    fn z6_data() -> (Vec<&'static str>, Vec<Vec<usize>>) {
        let labels = vec!["e", "t", "t2", "t3", "t4", "t5"];
        let table = (0..6)
            .map(|i| (0..6).map(|j| (i + j) % 6).collect())
            .collect();
        (labels, table)
    }

    #[test]
    fn group_hopf_passes_axioms() {
        let (labels, table) = z6_data();
        let h = group_hopf(&labels, &table);
        assert!(check_hopf_axioms(&h).unwrap().all_pass());
    }

    #[test]
    fn abelian_factorization_gives_trivial_actions() {
        let (labels, table) = z6_data();
        let d = exact_factorization(&labels, &table, &[0, 2, 4], &[0, 3]).unwrap();
        // ℤ/6 = ℤ/3 × ℤ/2: both derived actions are trivial
        let trivial = super::super::matched::trivial_matched_pair(&d.u, &d.f);
        assert_eq!(d.action, trivial.action);
        assert_eq!(d.coaction, trivial.coaction);
        assert!(check_matched_pair(&d).all_pass());
    }

    #[test]
    fn non_subgroup_rejected() {
        let (labels, table) = z6_data();
        assert!(matches!(
            exact_factorization(&labels, &table, &[0, 1, 2], &[0, 3]),
            Err(MatchedError::NotExactFactorization(_))
        ));
        assert!(matches!(
            exact_factorization(&labels, &table, &[0, 2, 4], &[0, 2]),
            Err(MatchedError::NotExactFactorization(_))
        ));
    }

    #[test]
    fn s3_datum_is_matched_and_nontrivial() {
        let d = s3_matched_pair();
        assert_eq!(d.u.dim(), 3);
        assert_eq!(d.f.dim(), 2);
        assert!(check_module_algebra(&d.u, &d.f, &d.action));
        assert!(check_comodule_coalgebra(&d.u, &d.f, &d.coaction));
        let report = check_matched_pair(&d);
        assert!(report.all_pass(), "failed: {:?}", report.failed());
        // the reflection conjugates the rotation: the coaction is not u⊗1
        let trivial = super::super::matched::trivial_matched_pair(&d.u, &d.f);
        assert_ne!(d.coaction, trivial.coaction);
    }

    #[test]
    fn s3_bicrossed_is_a_hopf_algebra() {
        let d = s3_matched_pair();
        let h = build_bicrossed(&d).unwrap();
        assert_eq!(h.dim(), 6);
        assert!(check_hopf_axioms(&h).unwrap().all_pass());
        // the bicrossed product of a nonabelian factorization is neither
        // the tensor product: its multiplication is noncommutative or its
        // comultiplication non-cocommutative
        let swap = crate::hopf::swap_square(&h);
        let commutative = h.mult.matmul(&swap) == h.mult;
        let cocommutative = swap.matmul(&h.comult) == h.comult;
        assert!(!(commutative && cocommutative));
    }
}
