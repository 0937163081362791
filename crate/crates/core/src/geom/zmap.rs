//! Positive linear maps `Z : R^n -> R^(k+m)` and the induced projection
//! `X -> X Z` on Grassmannians.

use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::cell::CellPoint;
use super::label::plucker_coordinates;
use super::linalg::{q, qi, QMatrix, Q};
use crate::error::{Error, Result};

/// An `n x (k + m)` matrix of full rank, optionally certified positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZMap {
    matrix: QMatrix,
    positive: bool,
}

impl ZMap {
    /// Accepts any full-rank `n x kpm` matrix with `n > kpm`.
    pub fn new(matrix: QMatrix) -> Result<Self> {
        let (n, kpm) = (matrix.nrows(), matrix.ncols());
        if kpm == 0 || n <= kpm {
            return Err(Error::Shape(format!("Z must be n x (k+m) with n > k+m, got {n} x {kpm}")));
        }
        let rank = matrix.rank();
        if rank != kpm {
            return Err(Error::RankDeficient { expected: kpm, got: rank });
        }
        Ok(Self { matrix, positive: false })
    }

    /// Like [`ZMap::new`], but verifies exactly that every maximal minor is
    /// strictly positive.
    pub fn new_positive(matrix: QMatrix) -> Result<Self> {
        let mut z = Self::new(matrix)?;
        let transposed = z.matrix.transpose();
        if let Some((rows, value)) = plucker_coordinates(&transposed)
            .into_iter()
            .find(|(_, d)| !d.is_positive())
        {
            return Err(Error::NotPositive {
                rows: rows.into_iter().map(|r| r + 1).collect(),
                value: value.to_string(),
            });
        }
        z.positive = true;
        Ok(z)
    }

    /// Rows `(1, t_i, ..., t_i^(kpm-1))` with `t_i = i`.
    pub fn vandermonde(n: usize, kpm: usize) -> Result<Self> {
        let nodes: Vec<Q> = (1..=n as i64).map(qi).collect();
        Self::new_positive(vandermonde_matrix(&nodes, kpm))
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn kpm(&self) -> usize {
        self.matrix.ncols()
    }
}

fn vandermonde_matrix(nodes: &[Q], kpm: usize) -> QMatrix {
    let rows = nodes
        .iter()
        .map(|t| {
            let mut row = Vec::with_capacity(kpm);
            let mut p = Q::one();
            for _ in 0..kpm {
                row.push(p.clone());
                p *= t;
            }
            row
        })
        .collect();
    QMatrix::from_rows(rows).expect("rectangular")
}

/// A seeded positive `Z = L V`: `V` is the Vandermonde matrix at `t_i = i` and
/// `L` a product of elementary bidiagonal factors with weights in `[1/2, 2]`.
///
/// `L` is totally nonnegative and invertible, so by Cauchy–Binet every maximal
/// minor of `L V` is a nonnegative combination of the (positive) maximal minors
/// of `V` with at least one positive term. Positivity is re-verified exactly.
pub fn sample_positive_z(n: usize, kpm: usize, seed: u64) -> Result<ZMap> {
    if kpm == 0 || n <= kpm {
        return Err(Error::Shape(format!("need n > k+m > 0, got n = {n}, k+m = {kpm}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nodes: Vec<Q> = (1..=n as i64).map(qi).collect();
    let mut z = vandermonde_matrix(&nodes, kpm).to_rows();
    let mut weight = || q(1000 + 3 * rng.gen_range(0..=1000i64), 2000);
    // two sweeps of lower and upper bidiagonal row operations
    for _ in 0..2 {
        for i in (0..n - 1).rev() {
            let a = weight();
            let b = weight();
            let (head, tail) = z.split_at_mut(i + 1);
            let (upper, lower) = (&mut head[i], &mut tail[0]);
            for (x, y) in upper.iter().zip(lower.iter_mut()) {
                *y += x * &a;
            }
            for (x, y) in upper.iter_mut().zip(lower.iter()) {
                *x += y * &b;
            }
        }
    }
    ZMap::new_positive(QMatrix::from_rows(z)?)
}

/// `X Z`, provided it has rank `k`; otherwise the row space of `X` meets
/// `ker Z` and `X` lies in the exceptional locus.
pub fn project(x: &CellPoint, z: &ZMap) -> Result<QMatrix> {
    project_matrix(&x.matrix, z)
}

pub fn project_matrix(x: &QMatrix, z: &ZMap) -> Result<QMatrix> {
    if x.ncols() != z.n() {
        return Err(Error::Shape(format!(
            "X has {} columns but Z has {} rows",
            x.ncols(),
            z.n()
        )));
    }
    let k = x.nrows();
    let y = x.mul(z.matrix())?;
    let rank = y.rank();
    if rank < k {
        return Err(Error::ExceptionalLocus { rank, k });
    }
    Ok(y)
}

/// Basis of the left kernel `{x : x Z = 0}`.
pub fn left_kernel(z: &ZMap) -> Vec<Vec<Q>> {
    z.matrix.transpose().null_space()
}
