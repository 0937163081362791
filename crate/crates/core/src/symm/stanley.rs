//! Affine Stanley symmetric functions by counting cyclically decreasing
//! factorizations.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::kostka::monomial_to_schur;
use super::partition::{partitions_bounded, Partition};
use super::symfn::{Basis, SymFn};
use crate::affperm::{cyclic_subsets_of_size, AffinePermutation, BoundedAffinePermutation};

/// Counts factorizations `v = v_1 v_2 ... v_r` into cyclically decreasing
/// factors with prescribed lengths and lengths adding up.
///
/// Memoized on `(remaining element, remaining length vector)`; one counter can
/// be reused across many length vectors for the same `n`.
pub struct FactorizationCounter {
    n: usize,
    /// Reduced words of all cyclically decreasing elements, grouped by length.
    words_by_len: Vec<Vec<Vec<usize>>>,
    memo: HashMap<(Vec<i64>, Vec<usize>), BigUint>,
}

impl FactorizationCounter {
    pub fn new(n: usize) -> Self {
        let words_by_len = (0..n)
            .map(|s| {
                cyclic_subsets_of_size(n, s)
                    .iter()
                    .map(|c| c.decreasing_word())
                    .collect()
            })
            .collect();
        Self {
            n,
            words_by_len,
            memo: HashMap::new(),
        }
    }

    /// Number of cyclically decreasing factorizations of `v` (an element of
    /// `W_n`, shift sum zero) whose factor lengths are `lengths`, in order.
    pub fn count(&mut self, v: &AffinePermutation, lengths: &[usize]) -> BigUint {
        assert_eq!(v.n(), self.n, "period mismatch");
        if lengths.iter().sum::<usize>() != v.inversions() {
            return BigUint::zero();
        }
        self.count_rec(v, lengths)
    }

    fn count_rec(&mut self, v: &AffinePermutation, lengths: &[usize]) -> BigUint {
        let Some((&first, rest)) = lengths.split_first() else {
            return if v.is_identity() { BigUint::one() } else { BigUint::zero() };
        };
        if first >= self.n {
            return BigUint::zero();
        }
        if first == 0 {
            return self.count_rec(v, rest);
        }
        let key = (v.window().to_vec(), lengths.to_vec());
        if let Some(c) = self.memo.get(&key) {
            return c.clone();
        }
        let mut total = BigUint::zero();
        let candidates: Vec<AffinePermutation> = self.words_by_len[first]
            .iter()
            .filter_map(|word| strip_left(v, word))
            .collect();
        for rem in candidates {
            total += self.count_rec(&rem, rest);
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `d^{-1} v` for `d = s_{w_1} ... s_{w_j}`, provided `l(d^{-1} v) = l(v) - j`.
fn strip_left(v: &AffinePermutation, word: &[usize]) -> Option<AffinePermutation> {
    let mut cur = v.clone();
    for &i in word {
        if !cur.has_left_descent(i) {
            return None;
        }
        cur = cur.left_generator(i);
    }
    Some(cur)
}

/// Coefficient of `m_lambda` in `F_f`: the number of cyclically decreasing
/// factorizations of `f_0^{-1} f` with factor lengths `lambda`.
pub fn affine_stanley_monomial(f: &BoundedAffinePermutation, lambda: &Partition) -> BigUint {
    let v = f.coset_part();
    if lambda.size() != f.length() {
        return BigUint::zero();
    }
    FactorizationCounter::new(f.n()).count(&v, lambda.parts())
}

/// `F_f` in the monomial basis.
pub fn affine_stanley_monomial_expansion(f: &BoundedAffinePermutation) -> SymFn {
    let n = f.n();
    let v = f.coset_part();
    let d = f.length();
    let mut counter = FactorizationCounter::new(n);
    let mut out = SymFn::zero(Basis::Monomial);
    // a cyclically decreasing factor has length at most n - 1
    for lambda in partitions_bounded(d, n.saturating_sub(1), usize::MAX) {
        let c = counter.count(&v, lambda.parts());
        if !c.is_zero() {
            out.add_term(lambda, BigInt::from(c));
        }
    }
    out
}

/// `F_f` in the Schur basis.
pub fn affine_stanley_schur(f: &BoundedAffinePermutation) -> SymFn {
    monomial_to_schur(&affine_stanley_monomial_expansion(f))
        .expect("monomial expansion of F_f is homogeneous")
}
