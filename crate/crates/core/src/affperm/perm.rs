use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::text::{fmt_list, parse_int_list};

/// An element of the extended affine symmetric group: a bijection `f` of the
/// integers with `f(i + n) = f(i) + n`, stored by its window `[f(1), ..., f(n)]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::Parse("empty window".into()));
        }
        let mut seen = vec![false; n];
        for &v in &window {
            let r = v.rem_euclid(n as i64) as usize;
            if seen[r] {
                return Err(Error::NotBijective { n });
            }
            seen[r] = true;
        }
        Ok(Self { window })
    }

    pub(crate) fn from_window_unchecked(window: Vec<i64>) -> Self {
        debug_assert!(Self::new(window.clone()).is_ok());
        Self { window }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            window: (1..=n as i64).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `f(i)` for any integer `i`.
    pub fn value(&self, i: i64) -> i64 {
        let n = self.n() as i64;
        let r = (i - 1).rem_euclid(n);
        let q = (i - 1).div_euclid(n);
        self.window[r as usize] + q * n
    }

    /// `f^{-1}(j)` for any integer `j`.
    pub fn preimage(&self, j: i64) -> i64 {
        let n = self.n() as i64;
        let r = j.rem_euclid(n);
        for (pos, &v) in self.window.iter().enumerate() {
            if v.rem_euclid(n) == r {
                return pos as i64 + 1 + (j - v);
            }
        }
        unreachable!("window is a bijection")
    }

    /// `sum_i (f(i) - i)`, always a multiple of `n`.
    pub fn shift_sum(&self) -> i64 {
        self.window
            .iter()
            .enumerate()
            .map(|(p, &v)| v - (p as i64 + 1))
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(p, &v)| v == p as i64 + 1)
    }

    /// Composition as functions: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "period mismatch in compose");
        Self {
            window: other.window.iter().map(|&v| self.value(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n() as i64;
        Self {
            window: (1..=n).map(|j| self.preimage(j)).collect(),
        }
    }

    /// Right action of `s_i` (`0 <= i < n`): swaps `f(i + rn)` and `f(i + rn + 1)`.
    pub fn apply_generator(&self, i: usize) -> Self {
        let mut w = self.window.clone();
        swap_positions(&mut w, i);
        Self { window: w }
    }

    /// Left multiplication `s_i * f`: swaps the values `i + rn` and `i + rn + 1`.
    pub fn left_generator(&self, i: usize) -> Self {
        let n = self.n() as i64;
        let i = i as i64;
        Self {
            window: self
                .window
                .iter()
                .map(|&v| {
                    let r = v.rem_euclid(n);
                    if r == i {
                        v + 1
                    } else if r == (i + 1) % n {
                        v - 1
                    } else {
                        v
                    }
                })
                .collect(),
        }
    }

    /// Number of affine inversions `#{(i, j) : 1 <= i <= n, i < j, f(i) > f(j)}`.
    ///
    /// This is the Coxeter length of the `W_n` part; shifting all values by a
    /// constant does not change it.
    pub fn inversions(&self) -> usize {
        let n = self.n() as i64;
        let mut count = 0i64;
        for a in 1..=n {
            let fa = self.window[(a - 1) as usize];
            for b in 1..=n {
                let fb = self.window[(b - 1) as usize];
                // r with b + r n > a and fb + r n < fa
                let r_min = (a - b).div_euclid(n) + 1;
                let r_max = ceil_div(fa - fb, n) - 1;
                if r_max >= r_min {
                    count += r_max - r_min + 1;
                }
            }
        }
        count as usize
    }

    /// Right descent at `i`: `f(i) > f(i + 1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let i = i as i64;
        self.value(i) > self.value(i + 1)
    }

    /// Left descent at `i`: `f^{-1}(i) > f^{-1}(i + 1)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let i = i as i64;
        self.preimage(i) > self.preimage(i + 1)
    }

    /// A reduced word `[i_1, ..., i_l]` with `self = shift * s_{i_1} ... s_{i_l}`,
    /// where `shift` is the length-zero part.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.n();
        let mut cur = self.clone();
        let mut word = Vec::new();
        'outer: loop {
            for i in 0..n {
                if cur.has_right_descent(i) {
                    cur = cur.apply_generator(i);
                    word.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Swap positions `i` and `i + 1` of a window, with the wrap-around for `i = 0`.
pub(crate) fn swap_positions(w: &mut [i64], i: usize) {
    let n = w.len();
    if i == 0 {
        let first = w[0];
        let last = w[n - 1];
        w[0] = last - n as i64;
        w[n - 1] = first + n as i64;
    } else {
        w.swap(i - 1, i);
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_list(f, &self.window)
    }
}

impl FromStr for AffinePermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_int_list(s)?)
    }
}
