//! The stock examples used throughout the test suite: cyclic group
//! algebras and their function-algebra duals, and the four-dimensional
//! Sweedler algebra.

use crate::exactlin::matrix::FreeSpace;
use crate::hopf::presentation::{dual_hopf, Character, GroupLike, HopfPresentation};
use crate::rat;
use crate::Mat;

/// The group algebra `k[ℤ/n]`, basis `1, g, g^2, …`.
pub fn group_algebra_cyclic(n: usize) -> HopfPresentation {
    assert!(n >= 1);
    let labels: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    let space = FreeSpace::new(labels);
    let mut mult = Mat::zero(n, n * n);
    let mut comult = Mat::zero(n * n, n);
    let mut counit = Mat::zero(1, n);
    let mut antipode = Mat::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            mult.set((i + j) % n, i * n + j, rat(1));
        }
        comult.set(i * n + i, i, rat(1));
        counit.set(0, i, rat(1));
        antipode.set((n - i) % n, i, rat(1));
    }
    HopfPresentation {
        space,
        mult,
        unit: Mat::basis_vector(n, 0),
        comult,
        counit,
        antipode,
        truncation: None,
    }
}

/// The function algebra `k^{ℤ/n}` as the dual of the group algebra.
pub fn functions_on_cyclic(n: usize) -> HopfPresentation {
    dual_hopf(&group_algebra_cyclic(n)).expect("group algebra is finite-dimensional")
}

/// Sweedler's four-dimensional Hopf algebra: `g² = 1`, `x² = 0`,
/// `xg = -gx`, with `Δ(g) = g⊗g`, `Δ(x) = x⊗1 + g⊗x`.
pub fn sweedler_h4() -> HopfPresentation {
    let space = FreeSpace::from_strs(&["1", "g", "x", "gx"]);
    // indices: 0 = 1, 1 = g, 2 = x, 3 = gx
    let mut mult = Mat::zero(4, 16);
    let table: [[(usize, i64); 4]; 4] = [
        // 1·-          g·-          x·-          gx·-
        [(0, 1), (1, 1), (2, 1), (3, 1)],
        [(1, 1), (0, 1), (3, 1), (2, 1)],
        [(2, 1), (3, -1), (0, 0), (0, 0)],
        [(3, 1), (2, -1), (0, 0), (0, 0)],
    ];
    for i in 0..4 {
        for j in 0..4 {
            let (k, c) = table[i][j];
            if c != 0 {
                mult.set(k, i * 4 + j, rat(c));
            }
        }
    }
    let mut comult = Mat::zero(16, 4);
    comult.set(0 * 4 + 0, 0, rat(1)); // Δ(1) = 1⊗1
    comult.set(1 * 4 + 1, 1, rat(1)); // Δ(g) = g⊗g
    comult.set(2 * 4 + 0, 2, rat(1)); // Δ(x) = x⊗1 + g⊗x
    comult.set(1 * 4 + 2, 2, rat(1));
    comult.set(3 * 4 + 1, 3, rat(1)); // Δ(gx) = gx⊗g + 1⊗gx
    comult.set(0 * 4 + 3, 3, rat(1));
    let mut counit = Mat::zero(1, 4);
    counit.set(0, 0, rat(1));
    counit.set(0, 1, rat(1));
    let mut antipode = Mat::zero(4, 4);
    antipode.set(0, 0, rat(1)); // S(1) = 1
    antipode.set(1, 1, rat(1)); // S(g) = g
    antipode.set(3, 2, rat(-1)); // S(x) = -gx
    antipode.set(2, 3, rat(1)); // S(gx) = x
    HopfPresentation {
        space,
        mult,
        unit: Mat::basis_vector(4, 0),
        comult,
        counit,
        antipode,
        truncation: None,
    }
}

/// All rational-valued characters of `k[ℤ/n]`: `g` may go to any rational
/// n-th root of unity, so only ±1 survive over the rationals.
pub fn cyclic_characters(n: usize) -> Vec<Character> {
    let mut out = Vec::new();
    for s in [1i64, -1] {
        if s == -1 && n % 2 != 0 {
            continue;
        }
        let mut cov = Mat::zero(1, n);
        for i in 0..n {
            cov.set(0, i, rat(s.pow(i as u32)));
        }
        out.push(Character { covector: cov });
    }
    out
}

/// The group-like elements of `k[ℤ/n]`: every group basis element.
pub fn cyclic_group_likes(n: usize) -> Vec<GroupLike> {
    (0..n)
        .map(|i| GroupLike {
            element: Mat::basis_vector(n, i),
        })
        .collect()
}

/// The two characters of the Sweedler algebra: the counit and the sign
/// character `g ↦ -1`, both vanishing on `x` and `gx`.
pub fn h4_characters() -> Vec<Character> {
    let mut eps = Mat::zero(1, 4);
    eps.set(0, 0, rat(1));
    eps.set(0, 1, rat(1));
    let mut sgn = Mat::zero(1, 4);
    sgn.set(0, 0, rat(1));
    sgn.set(0, 1, rat(-1));
    vec![Character { covector: eps }, Character { covector: sgn }]
}

/// The group-like elements of the Sweedler algebra: `1` and `g`.
pub fn h4_group_likes() -> Vec<GroupLike> {
    vec![
        GroupLike {
            element: Mat::basis_vector(4, 0),
        },
        GroupLike {
            element: Mat::basis_vector(4, 1),
        },
    ]
}
