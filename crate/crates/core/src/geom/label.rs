use std::collections::BTreeSet;

use num_traits::Zero;

use super::linalg::{subsets, QMatrix, Span, Q};
use crate::affperm::BoundedAffinePermutation;
use crate::error::{Error, Result};

/// `f_X(i) = min { j >= i : v_i in span(v_{i+1}, ..., v_j) }` for the columns
/// `v_i` of `X`, extended periodically.
///
/// The result lies in `Bound(r, n)` with `r = rank X`.
pub fn positroid_label(x: &QMatrix) -> Result<BoundedAffinePermutation> {
    let n = x.ncols();
    if n == 0 {
        return Err(Error::Shape("matrix has no columns".into()));
    }
    let cols: Vec<Vec<Q>> = (0..n).map(|j| x.column(j)).collect();
    let mut window = Vec::with_capacity(n);
    for i in 0..n {
        let v = &cols[i];
        let mut span = Span::new();
        let mut j = i;
        while !span.contains(v) {
            j += 1;
            span.insert(&cols[j % n]);
        }
        window.push(j as i64 + 1);
    }
    let rank = x.rank();
    BoundedAffinePermutation::new(rank, window)
}

/// All maximal minors `Δ_I(X)`, `I` a `k`-subset of `0..n` in lex order.
pub fn plucker_coordinates(x: &QMatrix) -> Vec<(Vec<usize>, Q)> {
    let k = x.nrows();
    let rows: Vec<usize> = (0..k).collect();
    subsets(x.ncols(), k)
        .into_iter()
        .map(|cols| {
            let d = x.select(&rows, &cols).determinant().expect("square");
            (cols, d)
        })
        .collect()
}

/// The Grassmann necklace `I_1, ..., I_n` of `f`, with
/// `I_i = { f(j) mod n : j < i <= f(j) }` (0-based residues).
pub fn grassmann_necklace(f: &BoundedAffinePermutation) -> Vec<BTreeSet<usize>> {
    let n = f.n() as i64;
    (1..=n)
        .map(|i| {
            (i - n..i)
                .filter(|&j| f.value(j) >= i)
                .map(|j| (f.value(j) - 1).rem_euclid(n) as usize)
                .collect()
        })
        .collect()
}

/// Bases of the positroid of `f` by the necklace criterion: `B` is a basis iff
/// `B >= I_i` in the `i`-shifted Gale order for every `i`.
pub fn positroid_bases(f: &BoundedAffinePermutation) -> BTreeSet<Vec<usize>> {
    let n = f.n();
    let necklace = grassmann_necklace(f);
    subsets(n, f.k())
        .into_iter()
        .filter(|b| {
            necklace.iter().enumerate().all(|(i, ii)| {
                let shift = |x: usize| (x + n - i) % n;
                let mut bs: Vec<usize> = b.iter().map(|&x| shift(x)).collect();
                let mut is: Vec<usize> = ii.iter().map(|&x| shift(x)).collect();
                bs.sort_unstable();
                is.sort_unstable();
                bs.iter().zip(&is).all(|(a, c)| a >= c)
            })
        })
        .collect()
}

/// Support of the Plücker vector.
pub fn nonzero_plucker_set(x: &QMatrix) -> BTreeSet<Vec<usize>> {
    plucker_coordinates(x)
        .into_iter()
        .filter(|(_, d)| !d.is_zero())
        .map(|(s, _)| s)
        .collect()
}
