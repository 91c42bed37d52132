//! The bicrossed-product mixed bicomplex: cells `∧^q g* ⊗ F^{⊗p}`, rows
//! given by the Chevalley-Eilenberg coboundary with coefficients in the
//! left U(g)-module `F^{⊗p}`, columns by the coalgebra Hochschild
//! coboundary of F with coefficients in the F-comodule `∧^q g*` induced
//! from the Lie-Hopf coaction. The two differentials commute; the total
//! complex uses the standard `(-1)^q` sign twist on the columns.

use crate::exactlin::{apply_at, cohomology_at, unflatten};
use crate::liecyclic::ce_coboundary;
use crate::liecyclic::wedge::{insert_sign, subset_index, subsets};
use crate::matchedpair::liehopf::{check_lie_hopf, LieHopfDatum};
use crate::matchedpair::MatchedError;
use crate::rat;
use crate::Mat;

/// The assembled bicomplex: `dims[q][p]` is the cell dimension,
/// `d_ce[q][p]: (q,p) -> (q+1,p)` for `q < q_max`, and
/// `b[q][p]: (q,p) -> (q,p+1)` for `p < p_max`.
#[derive(Clone, Debug)]
pub struct BicrossedBicomplex {
    pub p_max: usize,
    pub q_max: usize,
    pub wedge_dim: usize,
    pub dims: Vec<Vec<usize>>,
    pub d_ce: Vec<Vec<Mat>>,
    pub b: Vec<Vec<Mat>>,
}

fn neg_pow(k: usize) -> crate::scalar::Rat {
    if k % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

impl BicrossedBicomplex {
    /// `d_CE² = 0` on every column and `b² = 0` on every row.
    pub fn check_squares(&self) -> bool {
        for p in 0..=self.p_max {
            for q in 0..self.q_max.saturating_sub(1) {
                if !self.d_ce[q + 1][p]
                    .matmul(&self.d_ce[q][p])
                    .is_zero_matrix()
                {
                    return false;
                }
            }
        }
        for q in 0..=self.q_max {
            for p in 0..self.p_max.saturating_sub(1) {
                if !self.b[q][p + 1].matmul(&self.b[q][p]).is_zero_matrix() {
                    return false;
                }
            }
        }
        true
    }

    /// The row and column differentials commute cell by cell; the
    /// `(-1)^q` twist of the total complex then makes them anticommute.
    pub fn check_commute(&self) -> bool {
        for q in 0..self.q_max {
            for p in 0..self.p_max {
                let one_way = self.b[q + 1][p].matmul(&self.d_ce[q][p]);
                let other = self.d_ce[q][p + 1].matmul(&self.b[q][p]);
                if one_way != other {
                    return false;
                }
            }
        }
        true
    }

    /// The total differential out of total degree `n`, on cells ordered
    /// by increasing `q`, with the column maps twisted by `(-1)^q`.
    pub fn total_differential(&self, n: usize) -> Mat {
        let cells = |m: usize| -> Vec<usize> {
            (0..=m.min(self.q_max)).filter(|&q| m - q <= self.p_max).collect()
        };
        let src = cells(n);
        let tgt = cells(n + 1);
        let offset = |list: &[usize], m: usize, q: usize| -> usize {
            list.iter()
                .take_while(|&&x| x != q)
                .map(|&x| self.dims[x][m - x])
                .sum()
        };
        let rows: usize = tgt.iter().map(|&q| self.dims[q][n + 1 - q]).sum();
        let cols: usize = src.iter().map(|&q| self.dims[q][n - q]).sum();
        let mut out = Mat::zero(rows, cols);
        let mut add_block = |block: &Mat, r0: usize, c0: usize| {
            for (r, c, v) in block.iter() {
                let cur = out.get(r0 + r, c0 + c) + v.clone();
                out.set(r0 + r, c0 + c, cur);
            }
        };
        for &q in &src {
            let p = n - q;
            let c0 = offset(&src, n, q);
            if q < self.q_max && tgt.contains(&(q + 1)) {
                add_block(&self.d_ce[q][p], offset(&tgt, n + 1, q + 1), c0);
            }
            if p < self.p_max && tgt.contains(&q) {
                add_block(&self.b[q][p].scale(&neg_pow(q)), offset(&tgt, n + 1, q), c0);
            }
        }
        out
    }

    /// Total-complex cohomology dimensions in degrees `0..p_max`, valid
    /// when `q_max` is at least the Lie-algebra dimension so only the
    /// `p` direction is truncated.
    pub fn total_cohomology(&self) -> Result<Vec<usize>, MatchedError> {
        let mut dims = Vec::new();
        for n in 0..self.p_max {
            let d_out = self.total_differential(n);
            let d_in = if n == 0 {
                Mat::zero(d_out.cols(), 0)
            } else {
                self.total_differential(n - 1)
            };
            let (betti, _) = cohomology_at(&d_in, &d_out)?;
            dims.push(betti);
        }
        Ok(dims)
    }
}

/// Assemble the bicrossed bicomplex of a Lie-Hopf datum up to `p_max`
/// tensor factors of F and wedge degree `q_max`.
pub fn bicrossed_bicomplex(
    l: &LieHopfDatum,
    p_max: usize,
    q_max: usize,
) -> Result<BicrossedBicomplex, MatchedError> {
    let report = check_lie_hopf(l);
    if !report.all_pass() {
        return Err(MatchedError::NotLieHopf(report.failed().join(", ")));
    }
    let d = l.g.dim();
    let df = l.f.dim();
    let acts: Vec<Mat> = (0..d).map(|i| l.act_basis(i)).collect();

    // left U(g)-action on F^{⊗p}: slot s takes the action of the coacted
    // generator, with the F leg multiplied into slot s+1; the last slot
    // takes the plain action
    let left_action = |i: usize, p: usize| -> Mat {
        let fp = df.pow(p as u32);
        let mut out = Mat::zero(fp, fp);
        if p == 0 {
            return out;
        }
        for s in 0..p {
            if s == p - 1 {
                out = out.add(&Mat::identity(df.pow((p - 1) as u32)).kron(&acts[i]));
            } else {
                for (r, _, c) in l.coaction.column(i).iter() {
                    let (k, x) = (r / df, r % df);
                    let lx = l.f.left_mul(&Mat::basis_vector(df, x));
                    let block = Mat::identity(df.pow(s as u32))
                        .kron(&acts[k])
                        .kron(&lx)
                        .kron(&Mat::identity(df.pow((p - s - 2) as u32)));
                    out = out.add(&block.scale(c));
                }
            }
        }
        out
    };

    // dual-basis coaction coefficients: coaction(X_k) = Σ_j X_j ⊗ f_jk
    // makes the dual frame coact by f^j ↦ Σ_k f^k ⊗ S(f_jk)
    let mut s_coeff = vec![vec![Mat::zero(df, 1); d]; d];
    for k in 0..d {
        for (r, _, c) in l.coaction.column(k).iter() {
            let (j, x) = (r / df, r % df);
            let s = l.f.antipode.column(x).scale(c);
            s_coeff[j][k] = s_coeff[j][k].add(&s);
        }
    }
    // multiplicative extension to ∧^q g*
    let wedge_coaction = |q: usize| -> Mat {
        let src = subsets(d, q);
        let mut out = Mat::zero(src.len() * df, src.len());
        for (ci, subset) in src.iter().enumerate() {
            let leg_dims = vec![d; q];
            let tuples = d.pow(q as u32);
            for t in 0..tuples {
                let digits = unflatten(&leg_dims, t);
                // wedge the legs f^{k_1} ∧ … ∧ f^{k_q}, prepending from
                // the right to track the sign
                let mut sorted: Vec<usize> = Vec::new();
                let mut sign = 1i64;
                let mut ok = true;
                for &k in digits.iter().rev() {
                    match insert_sign(&sorted, k) {
                        Some((s, sg)) => {
                            sorted = s;
                            sign *= sg;
                        }
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if !ok {
                    continue;
                }
                let ti = subset_index(&src, &sorted);
                let mut fpart = l.f.unit.clone();
                for (leg, &k) in digits.iter().enumerate() {
                    fpart = l.f.mult.matmul(&fpart.kron(&s_coeff[subset[leg]][k]));
                }
                for (r, _, v) in fpart.iter() {
                    let cur = out.get(ti * df + r, ci) + v.clone() * rat(sign);
                    out.set(ti * df + r, ci, cur);
                }
            }
        }
        out
    };

    let mut dims = Vec::new();
    let mut d_ce = Vec::new();
    let mut b = Vec::new();
    for q in 0..=q_max {
        let wq = subsets(d, q).len();
        dims.push((0..=p_max).map(|p| wq * df.pow(p as u32)).collect::<Vec<_>>());
        if q < q_max {
            let row: Vec<Mat> = (0..=p_max)
                .map(|p| {
                    let right: Vec<Mat> = (0..d).map(|i| left_action(i, p).neg()).collect();
                    ce_coboundary(&l.g, &right, df.pow(p as u32), q)
                })
                .collect();
            d_ce.push(row);
        }
        let rho = wedge_coaction(q);
        let mut row = Vec::new();
        for p in 0..p_max {
            let mut cell_dims = vec![wq];
            cell_dims.extend(std::iter::repeat(df).take(p));
            let mut col = apply_at(&rho, &cell_dims, 0);
            for i in 1..=p {
                let face = apply_at(&l.f.comult, &cell_dims, i);
                col = col.add(&face.scale(&neg_pow(i)));
            }
            let append = Mat::identity(wq * df.pow(p as u32)).kron(&l.f.unit);
            col = col.add(&append.scale(&neg_pow(p + 1)));
            row.push(col);
        }
        b.push(row);
    }
    Ok(BicrossedBicomplex {
        p_max,
        q_max,
        wedge_dim: d,
        dims,
        d_ce,
        b,
    })
}
