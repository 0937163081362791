use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::{fmt_list, parse_int_list};

/// A weakly decreasing list of positive integers.
///
/// Ordered lexicographically on parts, which refines dominance order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts {parts:?} are not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::Parse(format!("parts {parts:?} contain a zero")));
        }
        Ok(Self(parts))
    }

    /// Sort and drop zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `(width)^height`, a `height x width` rectangle.
    pub fn rectangle(height: usize, width: usize) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Self(vec![width; height])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `lambda_i` with zero padding (0-based).
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        Self((0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Diagram containment `self ⊆ other`.
    pub fn contained_in(&self, other: &Self) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn fits_in_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    pub fn dominates(&self, other: &Self) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions `mu ⊇ self` with `mu / self` a vertical strip of size `size`.
    pub fn add_vertical_strip(&self, size: usize) -> Vec<Partition> {
        let rows = self.len() + size;
        let base: Vec<usize> = (0..rows).map(|i| self.part(i)).collect();
        let mut out = Vec::new();
        let mut cur = base.clone();
        add_vstrip_rec(&base, &mut cur, 0, size, &mut out);
        out
    }

    /// All partitions `nu ⊆ self` with `self / nu` a horizontal strip of size `size`.
    pub fn remove_horizontal_strip(&self, size: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = self.0.clone();
        remove_hstrip_rec(&self.0, &mut cur, 0, size, &mut out);
        out
    }
}

fn add_vstrip_rec(base: &[usize], cur: &mut Vec<usize>, row: usize, left: usize, out: &mut Vec<Partition>) {
    if left == 0 {
        out.push(Partition::from_unsorted(cur.clone()));
        return;
    }
    if row >= base.len() || base.len() - row < left {
        return;
    }
    // add a box in this row if the result stays a partition
    let ok = row == 0 || cur[row - 1] > base[row];
    if ok {
        cur[row] += 1;
        add_vstrip_rec(base, cur, row + 1, left - 1, out);
        cur[row] -= 1;
    }
    add_vstrip_rec(base, cur, row + 1, left, out);
}

fn remove_hstrip_rec(base: &[usize], cur: &mut Vec<usize>, row: usize, left: usize, out: &mut Vec<Partition>) {
    if row == base.len() {
        if left == 0 {
            out.push(Partition::from_unsorted(cur.clone()));
        }
        return;
    }
    let floor = base.get(row + 1).copied().unwrap_or(0);
    let max_remove = (base[row] - floor).min(left);
    for r in 0..=max_remove {
        cur[row] = base[row] - r;
        remove_hstrip_rec(base, cur, row + 1, left - r, out);
    }
    cur[row] = base[row];
}

/// All partitions of `d`, in decreasing lexicographic order.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    partitions_bounded(d, d, usize::MAX)
}

/// Partitions of `d` with every part at most `max_part` and at most `max_len`
/// parts, in decreasing lexicographic order.
pub fn partitions_bounded(d: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    parts_rec(d, max_part.min(d), max_len, &mut cur, &mut out);
    out
}

fn parts_rec(left: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if left == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(left)).rev() {
        cur.push(p);
        parts_rec(left - p, p, max_len, cur, out);
        cur.pop();
    }
}

/// All partitions inside the `rows x cols` box.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    (0..=rows * cols)
        .flat_map(|d| partitions_bounded(d, cols, rows))
        .collect()
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_list(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_int_list(s)?
            .into_iter()
            .map(|v| usize::try_from(v).map_err(|_| Error::Parse(format!("negative part {v}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}
