//! Numerical rank of the differential of `parameters -> X -> X Z` in a chart
//! of `Gr(k, k + m)`.

use nalgebra::DMatrix;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::cell::{sample_parameters, BridgeChain};
use super::linalg::subsets;
use super::zmap::{project_matrix, ZMap};
use crate::affperm::BoundedAffinePermutation;
use crate::error::{Error, Result};

/// Parameter samples per query; the maximum rank is reported.
pub const SAMPLES: usize = 3;
/// Relative finite-difference step.
pub const STEP: f64 = 1e-5;
/// Default singular-value threshold relative to the largest one.
pub const DEFAULT_TOL: f64 = 1e-8;
/// Chart minors below this fraction of the largest minor are treated as zero.
const CHART_THRESHOLD: f64 = 1e-8;

/// `dim` of the image of `Pi_f` under `Z`, estimated as the numerical rank of
/// the Jacobian at seeded interior points of the cell.
pub fn numeric_image_dimension(f: &BoundedAffinePermutation, z: &ZMap, seed: u64, tol: f64) -> Result<usize> {
    let (k, n) = (f.k(), f.n());
    if z.n() != n || z.kpm() <= k {
        return Err(Error::Shape(format!(
            "Z is {} x {}, expected {n} x (k+m) with k = {k}, m > 0",
            z.n(),
            z.kpm()
        )));
    }
    let chain = BridgeChain::new(f);
    // Z and Z g (g invertible) differ by a change of coordinates on the
    // target, so the rank is computed with the orthonormal factor of Z; this
    // removes the large spread in column scales of Vandermonde-type maps.
    let zf = z.matrix().to_f64().qr().q();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = None;
    for _ in 0..SAMPLES {
        let params = sample_parameters(&mut rng, chain.dimension());
        // exact check that the sample avoids the exceptional locus
        if project_matrix(&chain.evaluate(&params), z).is_err() {
            continue;
        }
        let t: Vec<f64> = params.iter().map(|p| p.to_f64().expect("finite")).collect();
        let r = jacobian_rank(&chain, &zf, &t, tol);
        best = Some(best.map_or(r, |b: usize| b.max(r)));
    }
    best.ok_or(Error::ExceptionalLocus { rank: 0, k })
}

fn image_f64(chain: &BridgeChain, z: &DMatrix<f64>, t: &[f64]) -> DMatrix<f64> {
    chain.evaluate_f64(t) * z
}

/// Lexicographically first `k`-subset of columns of `y` whose minor is not
/// negligible relative to the largest one.
fn chart_columns(y: &DMatrix<f64>) -> Vec<usize> {
    let k = y.nrows();
    let all = subsets(y.ncols(), k);
    let minors: Vec<f64> = all
        .iter()
        .map(|cols| y.select_columns(cols).determinant().abs())
        .collect();
    let max = minors.iter().copied().fold(0.0, f64::max);
    let idx = minors
        .iter()
        .position(|&d| d > CHART_THRESHOLD * max)
        .expect("a rank-k matrix has a nonzero maximal minor");
    all[idx].clone()
}

/// The `k * m` affine coordinates `Y_S^{-1} Y_{S^c}`.
fn chart_coordinates(y: &DMatrix<f64>, chart: &[usize], rest: &[usize]) -> Vec<f64> {
    let ys = y.select_columns(chart);
    let inv = ys.try_inverse().unwrap_or_else(|| DMatrix::from_element(y.nrows(), y.nrows(), f64::NAN));
    let coords = inv * y.select_columns(rest);
    coords.iter().copied().collect()
}

fn jacobian_rank(chain: &BridgeChain, z: &DMatrix<f64>, t: &[f64], tol: f64) -> usize {
    let d = t.len();
    if d == 0 {
        return 0;
    }
    let y0 = image_f64(chain, z, t);
    let chart = chart_columns(&y0);
    let rest: Vec<usize> = (0..y0.ncols()).filter(|c| !chart.contains(c)).collect();
    let rows = chart.len() * rest.len();
    let mut jac = DMatrix::zeros(rows, d);
    let mut tp = t.to_vec();
    for p in 0..d {
        let h = STEP * t[p].abs().max(1.0);
        tp[p] = t[p] + h;
        let plus = chart_coordinates(&image_f64(chain, z, &tp), &chart, &rest);
        tp[p] = t[p] - h;
        let minus = chart_coordinates(&image_f64(chain, z, &tp), &chart, &rest);
        tp[p] = t[p];
        for (r, (a, b)) in plus.iter().zip(&minus).enumerate() {
            jac[(r, p)] = (a - b) / (2.0 * h);
        }
    }
    numerical_rank(&jac, tol)
}

/// Number of singular values above `tol * sigma_max`.
pub fn numerical_rank(m: &DMatrix<f64>, tol: f64) -> usize {
    if m.is_empty() {
        return 0;
    }
    let sv = m.clone().svd(false, false).singular_values;
    let max = sv.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > tol * max).count()
}
