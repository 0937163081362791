//! Complete flags, Schubert conditions, and pulling flags back along `Z`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::cell::CellPoint;
use super::linalg::{qi, QMatrix, Q};
use super::zmap::{left_kernel, ZMap};
use crate::cohom::SchubertIndex;
use crate::error::{Error, Result};

/// A complete flag `F_1 ⊂ ... ⊂ F_n`, stored as an ordered basis:
/// `F_j` is the span of the first `j` rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagSpec {
    basis: QMatrix,
}

impl FlagSpec {
    pub fn new(basis: QMatrix) -> Result<Self> {
        let n = basis.ncols();
        if basis.nrows() != n {
            return Err(Error::Shape(format!(
                "flag basis must be square, got {} x {n}",
                basis.nrows()
            )));
        }
        let rank = basis.rank();
        if rank != n {
            return Err(Error::RankDeficient { expected: n, got: rank });
        }
        Ok(Self { basis })
    }

    /// `F_j = span(e_1, ..., e_j)`.
    pub fn standard(n: usize) -> Self {
        Self {
            basis: QMatrix::identity(n),
        }
    }

    /// A flag with small random integer basis vectors, deterministic in `seed`.
    pub fn random(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let rows = (0..n)
                .map(|_| (0..n).map(|_| qi(rng.gen_range(-3..=3))).collect())
                .collect();
            if let Ok(f) = Self::new(QMatrix::from_rows(rows).expect("square")) {
                return f;
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    /// Basis of `F_j` as a `j x n` matrix.
    pub fn subspace(&self, j: usize) -> QMatrix {
        let rows: Vec<usize> = (0..j).collect();
        let cols: Vec<usize> = (0..self.dim()).collect();
        self.basis.select(&rows, &cols)
    }
}

/// `dim(X ∩ F_j) = rank X + j - rank [X; F_j]`.
pub fn intersection_dimension(x: &QMatrix, flag: &FlagSpec, j: usize) -> usize {
    let fj = flag.subspace(j);
    let joint = x.stack(&fj).expect("same ambient dimension").rank();
    x.rank() + j - joint
}

/// Whether the row space of `x` lies in the Schubert variety `X_I(F)`:
/// `dim(X ∩ F_j) >= #(I ∩ [n - j + 1, n])` for all `j`.
pub fn subspace_in_schubert(x: &QMatrix, index: &SchubertIndex, flag: &FlagSpec) -> Result<bool> {
    let n = flag.dim();
    if x.ncols() != n || index.n() != n || index.k() != x.nrows() {
        return Err(Error::Shape(format!(
            "X is {} x {}, I is a {}-subset of [{}], flag lives in dimension {n}",
            x.nrows(),
            x.ncols(),
            index.k(),
            index.n()
        )));
    }
    Ok((1..=n).all(|j| intersection_dimension(x, flag, j) >= index.count_in(n - j + 1, n)))
}

pub fn schubert_member(x: &CellPoint, index: &SchubertIndex, flag: &FlagSpec) -> Result<bool> {
    subspace_in_schubert(&x.matrix, index, flag)
}

/// A complete flag `F` in `R^n` with `F_{n-(k+m)+j} = Z^{-1}(G_j)`; the first
/// `n - (k+m)` steps form a seeded basis of `ker Z`.
pub fn inverse_flag_extension(z: &ZMap, g: &FlagSpec, seed: u64) -> Result<FlagSpec> {
    let (n, kpm) = (z.n(), z.kpm());
    if g.dim() != kpm {
        return Err(Error::Shape(format!("flag in dimension {} but Z has {kpm} columns", g.dim())));
    }
    let kernel = left_kernel(z);
    if kernel.len() != n - kpm {
        return Err(Error::RankDeficient {
            expected: kpm,
            got: n - kernel.len(),
        });
    }
    let kernel = QMatrix::from_rows(kernel)?;
    // a random invertible change of basis inside ker Z
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mixed = loop {
        let dim = n - kpm;
        let rows = (0..dim)
            .map(|_| (0..dim).map(|_| qi(rng.gen_range(-3..=3))).collect())
            .collect();
        let change = QMatrix::from_rows(rows)?;
        if dim == 0 || change.rank() == dim {
            break change.mul(&kernel)?;
        }
    };
    let zt = z.matrix().transpose();
    let mut rows: Vec<Vec<Q>> = mixed.to_rows();
    for j in 0..kpm {
        let target = g.basis().row(j).to_vec();
        let pre = zt.solve(&target).ok_or(Error::RankDeficient {
            expected: kpm,
            got: zt.rank(),
        })?;
        rows.push(pre);
    }
    FlagSpec::new(QMatrix::from_rows(rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affperm::BoundedAffinePermutation;
    use crate::geom::cell::sample_cell_point;

    #[test]
    fn trivial_and_point_conditions() {
        let f = BoundedAffinePermutation::identity_shift(2, 5).unwrap();
        let x = sample_cell_point(&f, 1).unwrap();
        let flag = FlagSpec::random(5, 2);
        let all = SchubertIndex::new(5, vec![1, 2]).unwrap();
        assert!(schubert_member(&x, &all, &flag).unwrap());
        let top = SchubertIndex::new(5, vec![4, 5]).unwrap();
        assert!(!schubert_member(&x, &top, &flag).unwrap());
        let fk = flag.subspace(2);
        assert!(subspace_in_schubert(&fk, &top, &flag).unwrap());
    }

    #[test]
    fn coordinate_projection_pulls_back_to_kernel() {
        let mut zm = QMatrix::zeros(5, 3);
        for i in 0..3 {
            zm[(i, i)] = qi(1);
        }
        let z = ZMap::new(zm).unwrap();
        let flag = inverse_flag_extension(&z, &FlagSpec::standard(3), 4).unwrap();
        let kernel = QMatrix::from_i64(&[vec![0, 0, 0, 1, 0], vec![0, 0, 0, 0, 1]]).unwrap();
        let f2 = flag.subspace(2);
        assert_eq!(f2.rank(), 2);
        assert_eq!(f2.stack(&kernel).unwrap().rank(), 2);
        for j in 1..=5 {
            assert_eq!(flag.subspace(j).rank(), j);
        }
    }
}
