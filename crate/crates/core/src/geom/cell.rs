//! Totally nonnegative points of positroid cells from bridge decompositions.
//!
//! Starting from the coordinate subspace labelling a point stratum, each
//! bridge adds a multiple of column `a` to column `b`, where every column
//! strictly between them (cyclically) is a loop or a coloop. Each bridge
//! raises the cell dimension by one. The sign of the multiple is chosen so
//! that every Plücker coordinate stays nonnegative: it is `(-1)^c` for `c`
//! coloops crossed, or `(-1)^(k-1-c)` when the bridge wraps past column `n`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::label::positroid_label;
use super::linalg::{q, QMatrix, Q};
use crate::affperm::BoundedAffinePermutation;
use crate::error::{Error, Result};

/// A point of `Gr(k, n)` with its positroid label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellPoint {
    pub matrix: QMatrix,
    pub label: BoundedAffinePermutation,
}

impl CellPoint {
    /// Wraps `matrix`, computing its label.
    pub fn new(matrix: QMatrix) -> Result<Self> {
        let label = positroid_label(&matrix)?;
        if label.k() != matrix.nrows() {
            return Err(Error::RankDeficient {
                expected: matrix.nrows(),
                got: label.k(),
            });
        }
        Ok(Self { matrix, label })
    }

    pub fn k(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn n(&self) -> usize {
        self.matrix.ncols()
    }

    /// Recomputes the label from the matrix and compares with the cached one.
    pub fn label_is_consistent(&self) -> bool {
        positroid_label(&self.matrix).is_ok_and(|f| f == self.label)
    }
}

/// One bridge: `column[dst] += sign * t * column[src]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Bridge {
    src: usize,
    dst: usize,
    negative: bool,
}

/// A bridge decomposition: a point stratum plus a sequence of column moves,
/// one per dimension of the cell.
#[derive(Clone, Debug)]
pub struct BridgeChain {
    target: BoundedAffinePermutation,
    /// Columns (0-based) of the coordinate subspace we start from.
    start_columns: Vec<usize>,
    /// Bridges in order of application.
    bridges: Vec<Bridge>,
}

fn is_fixed(f: &BoundedAffinePermutation, p: i64) -> bool {
    let v = f.value(p);
    v == p || v == p + f.n() as i64
}

/// A bridge that can be removed from `f`: positions `a < b` (`b` possibly past
/// `n`) with every position strictly between them fixed, such that `f (a b)`
/// is bounded and one step longer.
fn removable_bridge(f: &BoundedAffinePermutation) -> Option<(Bridge, BoundedAffinePermutation)> {
    let n = f.n() as i64;
    for a in 1..=n {
        if is_fixed(f, a) {
            continue;
        }
        let Some(b) = (a + 1..a + n).find(|&b| !is_fixed(f, b)) else {
            continue;
        };
        if f.value(a) > f.value(b) {
            continue;
        }
        let Some(g) = f.try_apply_transposition(a as usize, (b - a) as usize) else {
            continue;
        };
        if g.length() != f.length() + 1 {
            continue;
        }
        // sign that makes each Plücker coordinate pick up a nonnegative term
        let coloops = (a + 1..b).filter(|&c| f.value(c) == c + n).count();
        let wraps = b > n;
        let swaps = if wraps { f.k() - 1 - coloops } else { coloops };
        let bridge = Bridge {
            src: (a - 1) as usize,
            dst: ((b - 1) % n) as usize,
            negative: swaps % 2 == 1,
        };
        return Some((bridge, g));
    }
    None
}

impl BridgeChain {
    pub fn new(f: &BoundedAffinePermutation) -> Self {
        // walk down to a point stratum, recording the bridges removed
        let mut cur = f.clone();
        let mut bridges = Vec::new();
        while cur.length() < cur.max_length() {
            let (bridge, next) =
                removable_bridge(&cur).expect("every cell of positive dimension has a removable bridge");
            bridges.push(bridge);
            cur = next;
        }
        bridges.reverse();
        let n = f.n() as i64;
        let start_columns = cur
            .window()
            .iter()
            .enumerate()
            .filter(|(p, &v)| v == *p as i64 + 1 + n)
            .map(|(p, _)| p)
            .collect();
        Self {
            target: f.clone(),
            start_columns,
            bridges,
        }
    }

    pub fn target(&self) -> &BoundedAffinePermutation {
        &self.target
    }

    /// Number of parameters, equal to `dim Pi_f`.
    pub fn dimension(&self) -> usize {
        self.bridges.len()
    }

    fn start_matrix<T: Clone>(&self, zero: T, one: T) -> Vec<Vec<T>> {
        let (k, n) = (self.target.k(), self.target.n());
        let mut m = vec![vec![zero; n]; k];
        for (r, &c) in self.start_columns.iter().enumerate() {
            m[r][c] = one.clone();
        }
        m
    }

    /// Exact evaluation at the given parameters.
    pub fn evaluate(&self, params: &[Q]) -> QMatrix {
        assert_eq!(params.len(), self.dimension());
        let mut m = self.start_matrix(Q::zero(), Q::one());
        for (b, t) in self.bridges.iter().zip(params) {
            let coef = if b.negative { -t.clone() } else { t.clone() };
            for row in m.iter_mut() {
                let add = &row[b.src] * &coef;
                row[b.dst] += add;
            }
        }
        if m.is_empty() {
            return QMatrix::zeros(0, self.target.n());
        }
        QMatrix::from_rows(m).expect("rectangular")
    }

    /// Floating-point evaluation, `k x n`.
    pub fn evaluate_f64(&self, params: &[f64]) -> nalgebra::DMatrix<f64> {
        assert_eq!(params.len(), self.dimension());
        let (k, n) = (self.target.k(), self.target.n());
        let start = self.start_matrix(0.0, 1.0);
        let mut m = nalgebra::DMatrix::from_fn(k, n, |i, j| start[i][j]);
        for (b, &t) in self.bridges.iter().zip(params) {
            let coef = if b.negative { -t } else { t };
            for r in 0..k {
                m[(r, b.dst)] += m[(r, b.src)] * coef;
            }
        }
        m
    }
}

/// Parameters uniform on `[1/2, 2]` with denominator 2000, from `rng`.
pub fn sample_parameters(rng: &mut ChaCha8Rng, count: usize) -> Vec<Q> {
    (0..count)
        .map(|_| q(1000 + 3 * rng.gen_range(0..=1000i64), 2000))
        .collect()
}

/// A totally nonnegative point of the open cell `Pi_f`, deterministic in `seed`.
pub fn sample_cell_point(f: &BoundedAffinePermutation, seed: u64) -> Result<CellPoint> {
    let chain = BridgeChain::new(f);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params = sample_parameters(&mut rng, chain.dimension());
    let matrix = chain.evaluate(&params);
    let point = CellPoint::new(matrix).map_err(|_| Error::SamplerFailure(f.to_string()))?;
    if &point.label != f {
        return Err(Error::SamplerFailure(f.to_string()));
    }
    Ok(point)
}
