//! Degree-truncated universal enveloping algebras on a
//! Poincaré-Birkhoff-Witt basis.
//!
//! The retained basis consists of the sorted monomials
//! `X_1^{a_1} ⋯ X_d^{a_d}` of total degree at most the cutoff, ordered by
//! degree then lexicographically. Products are straightened against the
//! bracket; pairs whose straightened product escapes the window are
//! recorded as overflow and left zero in the multiplication tensor.

use crate::exactlin::matrix::FreeSpace;
use crate::hopf::presentation::{HopfPresentation, Truncation};
use crate::liecyclic::LieDatum;
use crate::scalar::Rat;
use crate::Mat;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Sorted monomials of degree ≤ cutoff, in degree-then-lex order.
pub(crate) fn monomials(d: usize, cutoff: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for deg in 0..=cutoff {
        let mut stack = vec![(Vec::new(), deg)];
        let mut level = Vec::new();
        while let Some((prefix, rem)) = stack.pop() {
            if prefix.len() == d {
                if rem == 0 {
                    level.push(prefix);
                }
                continue;
            }
            let last = prefix.len() == d - 1;
            for e in (0..=rem).rev() {
                if last && e != rem {
                    continue;
                }
                let mut p = prefix.clone();
                p.push(e);
                stack.push((p, rem - e));
            }
        }
        // descending exponent vectors put earlier generators first: X before Y
        level.sort_by(|a, b| b.cmp(a));
        out.extend(level);
    }
    out
}

pub(crate) fn monomial_label(gens: &FreeSpace, expo: &[usize]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in expo.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(gens.label(i).to_string()),
            _ => parts.push(format!("{}^{}", gens.label(i), e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("")
    }
}

fn word_of(expo: &[usize]) -> Vec<usize> {
    let mut w = Vec::new();
    for (i, &e) in expo.iter().enumerate() {
        w.extend(std::iter::repeat(i).take(e));
    }
    w
}

fn exponents_of(d: usize, word: &[usize]) -> Vec<usize> {
    let mut e = vec![0usize; d];
    for &g in word {
        e[g] += 1;
    }
    e
}

/// Rewrite a generator word as a combination of sorted monomials, using
/// `X_i X_j = X_j X_i + [X_i, X_j]` at each descent. Terminates because
/// every step either lowers the degree or removes an inversion.
fn straighten(g: &LieDatum, word: &[usize]) -> BTreeMap<Vec<usize>, Rat> {
    let d = g.dim();
    let mut acc: BTreeMap<Vec<usize>, Rat> = BTreeMap::new();
    let mut work: Vec<(Rat, Vec<usize>)> = vec![(Rat::one(), word.to_vec())];
    while let Some((coeff, w)) = work.pop() {
        match (0..w.len().saturating_sub(1)).find(|&k| w[k] > w[k + 1]) {
            None => {
                let key = exponents_of(d, &w);
                let entry = acc.entry(key.clone()).or_insert_with(Rat::zero);
                *entry = entry.clone() + coeff;
                if acc[&key].is_zero() {
                    acc.remove(&key);
                }
            }
            Some(k) => {
                let mut swapped = w.clone();
                swapped.swap(k, k + 1);
                let bracket = g.bracket_basis(w[k], w[k + 1]);
                for (r, _, c) in bracket.iter() {
                    let mut shorter = w[..k].to_vec();
                    shorter.push(r);
                    shorter.extend_from_slice(&w[k + 2..]);
                    work.push((coeff.clone() * c.clone(), shorter));
                }
                work.push((coeff, swapped));
            }
        }
    }
    acc
}

fn binom(n: usize, k: usize) -> Rat {
    Rat::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

/// The enveloping algebra of `g` truncated at filtration degree `cutoff`,
/// as a filtered Hopf presentation on the PBW basis.
pub fn truncated_uea(g: &LieDatum, cutoff: usize) -> HopfPresentation {
    let d = g.dim();
    let basis = monomials(d, cutoff);
    let n = basis.len();
    let index: BTreeMap<Vec<usize>, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, b)| (b.clone(), i))
        .collect();
    let labels: Vec<String> = basis.iter().map(|b| monomial_label(&g.space, b)).collect();
    let space = FreeSpace::new(labels);
    let degrees: Vec<usize> = basis.iter().map(|b| b.iter().sum()).collect();

    let mut mult = Mat::zero(n, n * n);
    let mut overflow_pairs = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if degrees[i] + degrees[j] > cutoff {
                overflow_pairs.insert((i, j));
                continue;
            }
            let mut word = word_of(&basis[i]);
            word.extend(word_of(&basis[j]));
            for (expo, c) in straighten(g, &word) {
                mult.set(index[&expo], i * n + j, c);
            }
        }
    }

    // Δ(X^a) = Σ_{b ≤ a} Π C(a_i, b_i) · X^b ⊗ X^{a-b}: each generator is
    // primitive and its two tensor legs commute factor by factor.
    let mut comult = Mat::zero(n * n, n);
    for (col, a) in basis.iter().enumerate() {
        let mut splits: Vec<(Vec<usize>, Vec<usize>, Rat)> =
            vec![(Vec::new(), Vec::new(), Rat::one())];
        for &ai in a {
            let mut next = Vec::new();
            for (left, right, c) in splits {
                for b in 0..=ai {
                    let mut l = left.clone();
                    let mut r = right.clone();
                    l.push(b);
                    r.push(ai - b);
                    next.push((l, r, c.clone() * binom(ai, b)));
                }
            }
            splits = next;
        }
        for (l, r, c) in splits {
            comult.set(index[&l] * n + index[&r], col, c);
        }
    }

    let mut counit = Mat::zero(1, n);
    counit.set(0, index[&vec![0usize; d]], Rat::one());

    // S is the antihomomorphic extension of X ↦ -X:
    // S(X_{i_1} ⋯ X_{i_k}) = (-1)^k X_{i_k} ⋯ X_{i_1}, then straightened.
    let mut antipode = Mat::zero(n, n);
    for (col, a) in basis.iter().enumerate() {
        let mut word = word_of(a);
        word.reverse();
        let sign = if word.len() % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        for (expo, c) in straighten(g, &word) {
            antipode.set(index[&expo], col, sign.clone() * c);
        }
    }

    let unit = Mat::basis_vector(n, index[&vec![0usize; d]]);
    HopfPresentation {
        space,
        mult,
        unit,
        comult,
        counit,
        antipode,
        truncation: Some(Truncation {
            degrees,
            cutoff,
            overflow_pairs,
        }),
    }
}
