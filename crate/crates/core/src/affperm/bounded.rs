use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::perm::{swap_positions, AffinePermutation};
use crate::error::{Error, Result};
use crate::text::{fmt_list, parse_int_list};

/// A `(k, n)`-bounded affine permutation: `sum (f(i) - i) = kn` and
/// `i <= f(i) <= i + n`. These label the positroid strata of `Gr(k, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BoundedRepr", into = "BoundedRepr")]
pub struct BoundedAffinePermutation {
    k: usize,
    base: AffinePermutation,
}

#[derive(Serialize, Deserialize)]
struct BoundedRepr {
    k: usize,
    window: Vec<i64>,
}

impl TryFrom<BoundedRepr> for BoundedAffinePermutation {
    type Error = Error;
    fn try_from(r: BoundedRepr) -> Result<Self> {
        Self::new(r.k, r.window)
    }
}

impl From<BoundedAffinePermutation> for BoundedRepr {
    fn from(f: BoundedAffinePermutation) -> Self {
        BoundedRepr {
            k: f.k,
            window: f.base.window().to_vec(),
        }
    }
}

impl BoundedAffinePermutation {
    pub fn new(k: usize, window: Vec<i64>) -> Result<Self> {
        let base = AffinePermutation::new(window)?;
        Self::from_affine(k, base)
    }

    pub fn from_affine(k: usize, base: AffinePermutation) -> Result<Self> {
        let n = base.n();
        if k > n {
            return Err(Error::KOutOfRange { k, n });
        }
        let sum = base.shift_sum();
        let expected = (k * n) as i64;
        if sum != expected {
            return Err(Error::SumCondition { sum, expected });
        }
        for (p, &v) in base.window().iter().enumerate() {
            let i = p as i64 + 1;
            if v < i || v > i + n as i64 {
                return Err(Error::Unbounded {
                    i,
                    value: v,
                    n: n as i64,
                });
            }
        }
        Ok(Self { k, base })
    }

    /// Parse a window string, inferring `k` from the sum condition.
    pub fn parse_infer_k(s: &str) -> Result<Self> {
        let base: AffinePermutation = s.parse()?;
        let n = base.n() as i64;
        let sum = base.shift_sum();
        if sum.rem_euclid(n) != 0 || sum < 0 {
            return Err(Error::SumCondition { sum, expected: -1 });
        }
        Self::from_affine((sum / n) as usize, base)
    }

    /// Parse a window string and check it against the given `(k, n)`.
    pub fn parse_with(k: usize, n: usize, s: &str) -> Result<Self> {
        let window = parse_int_list(s)?;
        if window.len() != n {
            return Err(Error::PeriodMismatch {
                expected: n,
                got: window.len(),
            });
        }
        Self::new(k, window)
    }

    /// `f_0(i) = i + k`, the label of the whole Grassmannian.
    pub fn identity_shift(k: usize, n: usize) -> Result<Self> {
        if k > n || n == 0 {
            return Err(Error::KOutOfRange { k, n });
        }
        Ok(Self {
            k,
            base: AffinePermutation::from_window_unchecked(
                (1..=n as i64).map(|i| i + k as i64).collect(),
            ),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn window(&self) -> &[i64] {
        self.base.window()
    }

    pub fn as_affine(&self) -> &AffinePermutation {
        &self.base
    }

    pub fn value(&self, i: i64) -> i64 {
        self.base.value(i)
    }

    /// The `W_n` element `v = f_0^{-1} f`, i.e. `v(i) = f(i) - k`.
    pub fn coset_part(&self) -> AffinePermutation {
        let k = self.k as i64;
        AffinePermutation::from_window_unchecked(self.base.window().iter().map(|&v| v - k).collect())
    }

    /// Inverse of [`coset_part`](Self::coset_part); fails if `f_0 v` is not bounded.
    pub fn from_coset_part(k: usize, v: &AffinePermutation) -> Result<Self> {
        let window = v.window().iter().map(|&x| x + k as i64).collect();
        Self::new(k, window)
    }

    /// `l(f) = l(f_0^{-1} f)`, the codimension of the positroid variety.
    pub fn length(&self) -> usize {
        self.base.inversions()
    }

    /// `k(n - k) - l(f)`.
    pub fn cell_dimension(&self) -> usize {
        self.k * (self.n() - self.k) - self.length()
    }

    pub fn max_length(&self) -> usize {
        self.k * (self.n() - self.k)
    }

    /// `f * s_i` if it is still bounded.
    pub fn try_apply_generator(&self, i: usize) -> Option<Self> {
        if i >= self.n() {
            return None;
        }
        let mut w = self.base.window().to_vec();
        swap_positions(&mut w, i);
        Self::new(self.k, w).ok()
    }

    /// `f * t` where `t` swaps positions `a` and `a + d` (and their translates).
    pub(crate) fn try_apply_transposition(&self, a: usize, d: usize) -> Option<Self> {
        let n = self.n() as i64;
        let a = a as i64;
        let b = a + d as i64;
        let fa = self.value(a);
        let fb = self.value(b);
        let mut w = self.base.window().to_vec();
        // positions a (in 1..=n) and b (possibly > n) shift by their periods
        let (ra, qa) = ((a - 1).rem_euclid(n), (a - 1).div_euclid(n));
        let (rb, qb) = ((b - 1).rem_euclid(n), (b - 1).div_euclid(n));
        w[ra as usize] = fb - qa * n;
        w[rb as usize] = fa - qb * n;
        Self::new(self.k, w).ok()
    }

    /// Positroid strata of codimension one inside `Pi_f`: the `f'` covering
    /// `f` in Bruhat order, i.e. `f' = f t` for a reflection `t` with
    /// `l(f') = l(f) + 1`.
    pub fn boundary_covers(&self) -> BTreeSet<Self> {
        let n = self.n();
        let target = self.length() + 1;
        let mut out = BTreeSet::new();
        if n < 2 {
            return out;
        }
        for a in 1..=n {
            for d in 1..n {
                if let Some(g) = self.try_apply_transposition(a, d) {
                    if g.length() == target {
                        out.insert(g);
                    }
                }
            }
        }
        out
    }
}

/// All of `Bound(k, n)`, sorted by `(length, window)`.
///
/// Breadth-first search from `f_0` by right multiplication with simple
/// generators, keeping bounded results whose length goes up by one.
pub fn enumerate_bound(k: usize, n: usize) -> Result<Vec<BoundedAffinePermutation>> {
    let f0 = BoundedAffinePermutation::identity_shift(k, n)?;
    let mut seen: HashSet<BoundedAffinePermutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(f0.clone());
    queue.push_back(f0);
    while let Some(f) = queue.pop_front() {
        let len = f.length();
        for i in 0..n {
            if f.base.has_right_descent(i) {
                continue;
            }
            if let Some(g) = f.try_apply_generator(i) {
                debug_assert_eq!(g.length(), len + 1);
                if seen.insert(g.clone()) {
                    queue.push_back(g);
                }
            }
        }
    }
    let mut all: Vec<_> = seen.into_iter().collect();
    sort_by_length(&mut all);
    Ok(all)
}

pub fn sort_by_length(cells: &mut [BoundedAffinePermutation]) {
    cells.sort_by(|a, b| {
        a.length()
            .cmp(&b.length())
            .then_with(|| a.window().cmp(b.window()))
    });
}

impl fmt::Display for BoundedAffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_list(f, self.base.window())
    }
}

impl FromStr for BoundedAffinePermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_infer_k(s)
    }
}
