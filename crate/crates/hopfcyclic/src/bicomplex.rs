//! Windowed mixed complexes and their total cohomology.
//!
//! A [`MixedWindow`] holds spaces `D⁰..D^N` with a degree-raising map `u`
//! (a Hochschild-type coboundary) and a degree-lowering map `d` (a
//! Connes-type boundary) satisfying `u² = d² = ud + du = 0`. The diagonal
//! bicomplex `CC^{p,q} = D^{q-p}` (for `0 ≤ p ≤ q`) is totalized per
//! total degree to give the cyclic-type cohomology; the periodic theory
//! is read off from the stabilized tail of those ranks.

use crate::exactlin::{cohomology_at, LinError};
use crate::Mat;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BicomplexError {
    #[error("window of size {0} is too small for the request")]
    WindowExceeded(usize),
    #[error(transparent)]
    Lin(#[from] LinError),
}

/// `HC`-style or `HP`-style report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    Cyclic,
    Periodic,
}

/// Cohomology dimensions with representatives (total-complex vectors).
#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub mode: Mode,
    /// Per total degree for `Cyclic`; `[even, odd]` for `Periodic`.
    pub dims: Vec<usize>,
    pub representatives: Vec<Vec<Mat>>,
    /// `Periodic` only: the reported dims agree with the window one smaller.
    pub stabilization: Option<bool>,
}

/// Spaces `D⁰..D^N` with anticommuting up and down maps.
#[derive(Clone, Debug)]
pub struct MixedWindow {
    /// Dimensions of `D⁰..D^N`.
    pub dims: Vec<usize>,
    /// `up[m]: D^m -> D^{m+1}`, for `m = 0..N-1`.
    pub up: Vec<Mat>,
    /// `down[m]: D^m -> D^{m-1}`, for `m = 1..N` (index `m-1`).
    pub down: Vec<Mat>,
}

impl MixedWindow {
    pub fn window(&self) -> usize {
        self.dims.len() - 1
    }

    /// `u² = 0`, `d² = 0`, `ud + du = 0`, wherever both composites fit.
    pub fn check_differentials(&self) -> bool {
        let n = self.window();
        for m in 0..n.saturating_sub(1) {
            if !self.up[m + 1].matmul(&self.up[m]).is_zero_matrix() {
                return false;
            }
        }
        for m in 2..=n {
            if !self.down[m - 2].matmul(&self.down[m - 1]).is_zero_matrix() {
                return false;
            }
        }
        for m in 1..n {
            let ud = self.up[m - 1].matmul(&self.down[m - 1]);
            let du = self.down[m].matmul(&self.up[m]);
            if !ud.add(&du).is_zero_matrix() {
                return false;
            }
        }
        true
    }

    /// Cells `(p, q)` with `p + q = n`, `0 ≤ p ≤ q`, as inner degrees
    /// `q - p` in order of increasing `p`.
    fn diagonal_cells(n: usize) -> Vec<usize> {
        (0..=n / 2).map(|p| n - 2 * p).collect()
    }

    /// Total differential from total degree `n` to `n + 1`; requires
    /// `n + 1 ≤ window`.
    pub fn total_differential(&self, n: usize) -> Result<Mat, BicomplexError> {
        if n + 1 > self.window() {
            return Err(BicomplexError::WindowExceeded(self.window()));
        }
        let src = Self::diagonal_cells(n);
        let tgt = Self::diagonal_cells(n + 1);
        let src_offsets = offsets(&src, &self.dims);
        let tgt_offsets = offsets(&tgt, &self.dims);
        let rows = *tgt_offsets.last().unwrap();
        let cols = *src_offsets.last().unwrap();
        let mut total = Mat::zero(rows, cols);
        for (p, &m) in src.iter().enumerate() {
            // vertical: (p, q) -> (p, q+1) via up
            if m + 1 <= self.window() && p < tgt.len() && tgt[p] == m + 1 {
                paste(&mut total, &self.up[m], tgt_offsets[p], src_offsets[p]);
            }
            // horizontal: (p, q) -> (p+1, q) via down
            if m >= 1 && p + 1 < tgt.len() && tgt[p + 1] == m - 1 {
                paste(&mut total, &self.down[m - 1], tgt_offsets[p + 1], src_offsets[p]);
            }
        }
        Ok(total)
    }

    /// Total cohomology of the first-quadrant diagonal bicomplex, per
    /// total degree `0..=window-1`.
    pub fn cyclic_cohomology(&self) -> Result<CohomologyReport, BicomplexError> {
        let n_max = self.window().saturating_sub(1);
        let mut dims = Vec::new();
        let mut reps = Vec::new();
        for n in 0..=n_max {
            let d_out = self.total_differential(n)?;
            let d_in = if n == 0 {
                Mat::zero(d_out.cols(), 0)
            } else {
                self.total_differential(n - 1)?
            };
            let (betti, r) = cohomology_at(&d_in, &d_out)?;
            dims.push(betti);
            reps.push(r);
        }
        Ok(CohomologyReport {
            mode: Mode::Cyclic,
            dims,
            representatives: reps,
            stabilization: None,
        })
    }

    /// Periodic cohomology read off the stabilized tail of the cyclic
    /// ranks: the even (odd) dimension is the top available even (odd)
    /// total degree. The flag records agreement with the window one
    /// smaller, i.e. with the previous degree of the same parity.
    pub fn periodic_cohomology(&self) -> Result<CohomologyReport, BicomplexError> {
        if self.window() < 4 {
            return Err(BicomplexError::WindowExceeded(self.window()));
        }
        let hc = self.cyclic_cohomology()?;
        let top = hc.dims.len() - 1;
        let (top_even, top_odd) = if top % 2 == 0 {
            (top, top - 1)
        } else {
            (top - 1, top)
        };
        let stable =
            hc.dims[top_even] == hc.dims[top_even - 2] && hc.dims[top_odd] == hc.dims[top_odd - 2];
        Ok(CohomologyReport {
            mode: Mode::Periodic,
            dims: vec![hc.dims[top_even], hc.dims[top_odd]],
            representatives: vec![
                hc.representatives[top_even].clone(),
                hc.representatives[top_odd].clone(),
            ],
            stabilization: Some(stable),
        })
    }
}

fn offsets(cells: &[usize], dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0];
    for &m in cells {
        out.push(out.last().unwrap() + dims[m]);
    }
    out
}

fn paste(into: &mut Mat, block: &Mat, row0: usize, col0: usize) {
    for (r, c, v) in block.iter() {
        let prev = into.get(row0 + r, col0 + c);
        into.set(row0 + r, col0 + c, prev + v.clone());
    }
}
