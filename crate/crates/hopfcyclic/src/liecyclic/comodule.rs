//! Lie coactions and their two algebraic avatars: modules over a
//! truncated symmetric algebra on the dual frame, and comodules over a
//! truncated enveloping algebra via the exponential of the coaction.

use crate::exactlin::matrix::FreeSpace;
use crate::exactlin::{swap, unflatten};
use crate::hopf::pbw::{monomial_label, monomials, truncated_uea};
use crate::hopf::HopfPresentation;
use crate::liecyclic::{LieDatum, LieError};
use crate::sayd::LeftComodule;
use crate::scalar::Rat;
use crate::Mat;
use num_traits::One;
use std::collections::{BTreeMap, BTreeSet};

/// A left Lie comodule: `coaction: V -> g ⊗ V`, `v ↦ v[-1] ⊗ v[0]`.
#[derive(Clone, Debug)]
pub struct LieComodule {
    pub space: FreeSpace,
    pub coaction: Mat,
}

impl LieComodule {
    pub fn dim(&self) -> usize {
        self.space.dimension()
    }

    /// The zero coaction on the given space.
    pub fn trivial(space: FreeSpace, g: &LieDatum) -> Self {
        let v = space.dimension();
        LieComodule {
            space,
            coaction: Mat::zero(g.dim() * v, v),
        }
    }

    /// The endomorphism `v ↦ (fⁱ ⊗ id)(coaction v)` pairing the coaction
    /// leg against a dual frame vector.
    pub fn pairing(&self, g: &LieDatum, i: usize) -> Mat {
        let v = self.dim();
        Mat::basis_vector(g.dim(), i)
            .transpose()
            .kron(&Mat::identity(v))
            .matmul(&self.coaction)
    }
}

/// The comodule condition `v[-2] ∧ v[-1] ⊗ v[0] = 0`: the double
/// coaction is symmetric in its two Lie legs.
pub fn check_lie_comodule(g: &LieDatum, c: &LieComodule) -> bool {
    let d = g.dim();
    let v = c.dim();
    if c.coaction.rows() != d * v || c.coaction.cols() != v {
        return false;
    }
    let double = Mat::identity(d).kron(&c.coaction).matmul(&c.coaction);
    let swapped = swap::<Rat>(d, d).kron(&Mat::identity(v)).matmul(&double);
    double == swapped
}

/// The symmetric algebra on the dual frame of `g`, truncated at total
/// degree `cutoff`; monomial products beyond the cutoff are recorded as
/// overflow and left zero.
#[derive(Clone, Debug)]
pub struct TruncatedSymmetricAlgebra {
    pub space: FreeSpace,
    pub gens: usize,
    pub cutoff: usize,
    /// Exponent vectors, aligned with `space`.
    pub basis: Vec<Vec<usize>>,
    pub degrees: Vec<usize>,
    pub mult: Mat,
    pub overflow_pairs: BTreeSet<(usize, usize)>,
}

impl TruncatedSymmetricAlgebra {
    pub fn dim(&self) -> usize {
        self.space.dimension()
    }

    /// Index of a monomial by exponent vector, when inside the window.
    pub fn monomial_index(&self, expo: &[usize]) -> Option<usize> {
        self.basis.iter().position(|b| b == expo)
    }

    /// Basis index of the product of two basis monomials, or `None` on
    /// overflow.
    pub fn mul_basis(&self, i: usize, j: usize) -> Option<usize> {
        if self.overflow_pairs.contains(&(i, j)) {
            return None;
        }
        let sum: Vec<usize> = self.basis[i]
            .iter()
            .zip(&self.basis[j])
            .map(|(a, b)| a + b)
            .collect();
        self.monomial_index(&sum)
    }
}

/// Labels for the dual frame: `f` when `g` is a line, else `f1, f2, …`.
fn dual_frame(g: &LieDatum) -> FreeSpace {
    let d = g.dim();
    if d == 1 {
        FreeSpace::from_strs(&["f"])
    } else {
        FreeSpace::new((1..=d).map(|i| format!("f{i}")).collect())
    }
}

/// Build the truncated symmetric algebra `S(g*)` at degree ≤ `cutoff`.
pub fn truncated_sym(g: &LieDatum, cutoff: usize) -> TruncatedSymmetricAlgebra {
    let d = g.dim();
    let frame = dual_frame(g);
    let basis = monomials(d, cutoff);
    let n = basis.len();
    let index: BTreeMap<Vec<usize>, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, b)| (b.clone(), i))
        .collect();
    let labels: Vec<String> = basis.iter().map(|b| monomial_label(&frame, b)).collect();
    let degrees: Vec<usize> = basis.iter().map(|b| b.iter().sum()).collect();
    let mut mult = Mat::zero(n, n * n);
    let mut overflow_pairs = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if degrees[i] + degrees[j] > cutoff {
                overflow_pairs.insert((i, j));
                continue;
            }
            let sum: Vec<usize> = basis[i].iter().zip(&basis[j]).map(|(a, b)| a + b).collect();
            mult.set(index[&sum], i * n + j, Rat::one());
        }
    }
    TruncatedSymmetricAlgebra {
        space: FreeSpace::new(labels),
        gens: d,
        cutoff,
        basis,
        degrees,
        mult,
        overflow_pairs,
    }
}

/// A right module over a truncated `S(g*)`: `action: V ⊗ S -> V`.
#[derive(Clone, Debug)]
pub struct SymModule {
    pub algebra: TruncatedSymmetricAlgebra,
    pub space: FreeSpace,
    pub action: Mat,
}

impl SymModule {
    pub fn dim(&self) -> usize {
        self.space.dimension()
    }

    pub fn act(&self, v: &Mat, a: &Mat) -> Mat {
        self.action.matmul(&v.kron(a))
    }
}

/// Turn a Lie comodule into a module over the truncated `S(g*)`:
/// generators act by `v·fⁱ = fⁱ(v[-1]) v[0]`, monomials by iteration.
/// The iterated generator actions are asserted (not assumed) to be
/// order-independent.
pub fn comodule_to_sym_module(
    g: &LieDatum,
    c: &LieComodule,
    q_max: usize,
) -> Result<SymModule, LieError> {
    let d = g.dim();
    let v = c.dim();
    let pair: Vec<Mat> = (0..d).map(|i| c.pairing(g, i)).collect();
    for i in 0..d {
        for j in i + 1..d {
            if pair[i].matmul(&pair[j]) != pair[j].matmul(&pair[i]) {
                return Err(LieError::OrderDependentAction);
            }
        }
    }
    let algebra = truncated_sym(g, q_max);
    let n = algebra.dim();
    let mut action = Mat::zero(v, v * n);
    for (m, expo) in algebra.basis.iter().enumerate() {
        let mut a = Mat::identity(v);
        for (i, &e) in expo.iter().enumerate() {
            for _ in 0..e {
                a = pair[i].matmul(&a);
            }
        }
        for k in 0..v {
            let out = a.column(k);
            for (r, _, coeff) in out.iter() {
                action.set(r, k * n + m, coeff.clone());
            }
        }
    }
    Ok(SymModule {
        algebra,
        space: c.space.clone(),
        action,
    })
}

/// Recover a Lie comodule from a truncated `S(g*)`-module via
/// `v ↦ Σᵢ Xᵢ ⊗ v·fⁱ`.
pub fn sym_module_to_comodule(g: &LieDatum, m: &SymModule) -> LieComodule {
    let d = g.dim();
    let v = m.dim();
    let n = m.algebra.dim();
    let mut coaction = Mat::zero(d * v, v);
    for i in 0..d {
        let mut e = vec![0usize; d];
        e[i] = 1;
        let gi = m
            .algebra
            .monomial_index(&e)
            .expect("degree-one monomial inside the window");
        for k in 0..v {
            let out = m.act(&Mat::basis_vector(v, k), &Mat::basis_vector(n, gi));
            for (r, _, coeff) in out.iter() {
                coaction.set(i * v + r, k, coeff.clone());
            }
        }
    }
    LieComodule {
        space: m.space.clone(),
        coaction,
    }
}

/// The Koszul coaction on the truncated `S(g*)`:
/// `∇*(R) = Σᵢ Xᵢ ⊗ R·fⁱ`, with the top degree truncated to zero.
pub fn koszul_coaction(
    g: &LieDatum,
    q_max: usize,
) -> (TruncatedSymmetricAlgebra, LieComodule) {
    let d = g.dim();
    let algebra = truncated_sym(g, q_max);
    let n = algebra.dim();
    let mut coaction = Mat::zero(d * n, n);
    for (col, expo) in algebra.basis.iter().enumerate() {
        for i in 0..d {
            let mut bumped = expo.clone();
            bumped[i] += 1;
            if let Some(row) = algebra.monomial_index(&bumped) {
                coaction.set(i * n + row, col, Rat::one());
            }
        }
    }
    let comodule = LieComodule {
        space: algebra.space.clone(),
        coaction,
    };
    (algebra, comodule)
}

fn factorial(k: usize) -> Rat {
    let mut f = Rat::one();
    for i in 2..=k {
        f = f * Rat::from_integer(i.into());
    }
    f
}

/// The exponential coaction over the degree-`N` truncated enveloping
/// algebra, with its exactness flag.
#[derive(Clone, Debug)]
pub struct ExpComodule {
    /// The truncated enveloping algebra the coaction lands in.
    pub hopf: HopfPresentation,
    pub comodule: LeftComodule,
    /// True when the iterated coaction vanishes inside the window, so no
    /// terms were dropped.
    pub exact: bool,
}

/// `v ↦ Σ_k (1/k!) v[-k]⋯v[-1] ⊗ v[0]`, evaluated termwise in the
/// degree-≤`N` truncation of the enveloping algebra.
pub fn exp_coaction(g: &LieDatum, c: &LieComodule, n_cutoff: usize) -> ExpComodule {
    let d = g.dim();
    let v = c.dim();
    let hopf = truncated_uea(g, n_cutoff);
    let u = hopf.dim();
    let gen_idx: Vec<usize> = (0..d)
        .map(|i| hopf.space.index_of(g.space.label(i)).expect("generator"))
        .collect();
    let mut coaction = hopf.unit.kron(&Mat::identity(v)); // k = 0 term
    // iterated coaction C_k: V -> g^{⊗k} ⊗ V; leftmost leg applied first
    let mut iter = c.coaction.clone();
    for k in 1..=n_cutoff {
        let inv_fact = Rat::one() / factorial(k);
        let mut term = Mat::zero(u * v, v);
        for (row, col, coeff) in iter.iter() {
            let mut dims = vec![d; k];
            dims.push(v);
            let idx = unflatten(&dims, row);
            // multiply v[-k] ⋯ v[-1] left to right in the enveloping algebra
            let mut prod = hopf.unit.clone();
            for &leg in &idx[..k] {
                prod = hopf
                    .mul_vec(&prod, &Mat::basis_vector(u, gen_idx[leg]))
                    .expect("degree k ≤ cutoff");
            }
            let w = idx[k];
            for (r, _, pc) in prod.iter() {
                let prev = term.get(r * v + w, col);
                term.set(r * v + w, col, prev + pc.clone() * coeff.clone() * inv_fact.clone());
            }
        }
        coaction = coaction.add(&term);
        if k < n_cutoff {
            iter = Mat::identity(d.pow(k as u32)).kron(&c.coaction).matmul(&iter);
        }
    }
    // one more step decides exactness: did the series terminate?
    let next = Mat::identity(d.pow(n_cutoff as u32))
        .kron(&c.coaction)
        .matmul(&iter);
    let exact = next.is_zero_matrix();
    ExpComodule {
        hopf,
        comodule: LeftComodule {
            space: c.space.clone(),
            coaction,
        },
        exact,
    }
}

/// Compose a comodule over the truncated enveloping algebra with the
/// canonical projection onto the degree-one part.
pub fn project_ug_comodule_to_g(
    g: &LieDatum,
    h: &HopfPresentation,
    w: &LeftComodule,
) -> LieComodule {
    let d = g.dim();
    let u = h.dim();
    let mut proj = Mat::zero(d, u);
    for i in 0..d {
        let gi = h.space.index_of(g.space.label(i)).expect("generator");
        proj.set(i, gi, Rat::one());
    }
    LieComodule {
        space: w.space.clone(),
        coaction: proj.kron(&Mat::identity(w.dim())).matmul(&w.coaction),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecyclic::{abelian, aff1};
    use crate::rat;

    fn line_comodule() -> (LieDatum, LieComodule) {
        // one-dimensional g, coaction 1 ↦ X ⊗ 1
        let g = abelian(&["X"]);
        let c = LieComodule {
            space: FreeSpace::from_strs(&["v"]),
            coaction: Mat::identity(1),
        };
        (g, c)
    }

    #[test]
    fn comodule_condition_examples() {
        let g2 = abelian(&["X", "Y"]);
        let space = FreeSpace::from_strs(&["a", "b"]);
        assert!(check_lie_comodule(
            &g2,
            &LieComodule::trivial(space.clone(), &g2)
        ));
        let (g, c) = line_comodule();
        assert!(check_lie_comodule(&g, &c));
        // a ↦ X⊗b, b ↦ Y⊗a mixes X∧Y nontrivially
        let mut coaction = Mat::zero(4, 2);
        coaction.set(0 * 2 + 1, 0, rat(1));
        coaction.set(1 * 2 + 0, 1, rat(1));
        assert!(!check_lie_comodule(&g2, &LieComodule { space, coaction }));
    }

    #[test]
    fn koszul_line_and_condition() {
        let g = abelian(&["X"]);
        let (alg, c) = koszul_coaction(&g, 2);
        assert_eq!(alg.space.labels(), &["1", "f", "f^2"]);
        // ∇*(1) = X⊗f, ∇*(f) = X⊗f², ∇*(f²) = 0 (truncated)
        assert_eq!(c.coaction.column(0), Mat::basis_vector(3, 1));
        assert_eq!(c.coaction.column(1), Mat::basis_vector(3, 2));
        assert!(c.coaction.column(2).is_zero_matrix());
        let g2 = aff1();
        let (_, c2) = koszul_coaction(&g2, 3);
        assert!(check_lie_comodule(&g2, &c2));
    }

    #[test]
    fn sym_module_correspondence() {
        let (g, c) = line_comodule();
        let m = comodule_to_sym_module(&g, &c, 2).unwrap();
        let one = Mat::basis_vector(1, 0);
        // 1·f = 1 and 1·f² = 1
        assert_eq!(m.act(&one, &Mat::basis_vector(3, 1)), one);
        assert_eq!(m.act(&one, &Mat::basis_vector(3, 2)), one);
        // trivial coaction: positive-degree monomials act as zero
        let g2 = abelian(&["X", "Y"]);
        let t = LieComodule::trivial(FreeSpace::from_strs(&["a", "b"]), &g2);
        let mt = comodule_to_sym_module(&g2, &t, 2).unwrap();
        for j in 1..mt.algebra.dim() {
            for k in 0..2 {
                assert!(mt
                    .act(&Mat::basis_vector(2, k), &Mat::basis_vector(mt.algebra.dim(), j))
                    .is_zero_matrix());
            }
        }
        // Koszul: R·fⁱ is multiplication by fⁱ in the truncated algebra
        let (alg, ck) = koszul_coaction(&aff1(), 2);
        let mk = comodule_to_sym_module(&aff1(), &ck, 2).unwrap();
        let n = alg.dim();
        for r in 0..n {
            for i in 0..2 {
                let mut e = vec![0usize; 2];
                e[i] = 1;
                let fi = alg.monomial_index(&e).unwrap();
                let lhs = mk.act(&Mat::basis_vector(n, r), &Mat::basis_vector(mk.algebra.dim(), fi));
                let rhs = alg.mult.matmul(&Mat::basis_vector(n, r).kron(&Mat::basis_vector(n, fi)));
                assert_eq!(lhs, rhs);
            }
        }
        // roundtrips recover the coactions
        assert_eq!(sym_module_to_comodule(&g, &m).coaction, c.coaction);
        assert_eq!(sym_module_to_comodule(&g2, &mt).coaction, t.coaction);
        assert_eq!(sym_module_to_comodule(&aff1(), &mk).coaction, ck.coaction);
    }

    #[test]
    fn exponential_line_truncated() {
        let (g, c) = line_comodule();
        let e = exp_coaction(&g, &c, 2);
        assert!(!e.exact);
        // 1 ↦ 1⊗1 + X⊗1 + (1/2) X²⊗1
        let mut expected = Mat::zero(3, 1);
        expected.set(0, 0, rat(1));
        expected.set(1, 0, rat(1));
        expected.set(2, 0, Rat::new(1.into(), 2.into()));
        assert_eq!(e.comodule.coaction, expected);
        assert!(crate::sayd::check_comodule(&e.hopf, &e.comodule));
    }

    #[test]
    fn exponential_exact_cases() {
        let g = abelian(&["X"]);
        let t = LieComodule::trivial(FreeSpace::from_strs(&["v", "w"]), &g);
        let e = exp_coaction(&g, &t, 3);
        assert!(e.exact);
        assert_eq!(e.comodule.coaction, e.hopf.unit.kron(&Mat::identity(2)));
        assert!(crate::sayd::check_comodule(&e.hopf, &e.comodule));
        // Koszul coaction is nilpotent: exact once the window clears q_max
        let (_, ck) = koszul_coaction(&g, 2);
        let ek = exp_coaction(&g, &ck, 3);
        assert!(ek.exact);
        assert!(crate::sayd::check_comodule(&ek.hopf, &ek.comodule));
        let ek_narrow = exp_coaction(&g, &ck, 1);
        assert!(!ek_narrow.exact);
    }

    #[test]
    fn projection_roundtrips() {
        let g = abelian(&["X"]);
        let t = LieComodule::trivial(FreeSpace::from_strs(&["v"]), &g);
        let et = exp_coaction(&g, &t, 2);
        assert!(project_ug_comodule_to_g(&g, &et.hopf, &et.comodule)
            .coaction
            .is_zero_matrix());
        let (_, ck) = koszul_coaction(&g, 2);
        let ek = exp_coaction(&g, &ck, 3);
        assert_eq!(
            project_ug_comodule_to_g(&g, &ek.hopf, &ek.comodule).coaction,
            ck.coaction
        );
        // degree-one extraction of the truncated exponential: 1 ↦ X⊗1
        let (_, c) = line_comodule();
        let e = exp_coaction(&g, &c, 2);
        assert_eq!(
            project_ug_comodule_to_g(&g, &e.hopf, &e.comodule).coaction,
            c.coaction
        );
    }
}
