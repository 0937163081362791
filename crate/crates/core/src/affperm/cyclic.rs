use std::collections::BTreeSet;

use super::perm::AffinePermutation;
use crate::error::{Error, Result};

/// A proper subset of `Z/n`; indexes the cyclically decreasing elements of `W_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicSubset {
    n: usize,
    members: BTreeSet<usize>,
}

impl CyclicSubset {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&i) = members.iter().find(|&&i| i >= n) {
            return Err(Error::GeneratorOutOfRange { i, n });
        }
        if members.len() == n {
            return Err(Error::FullCyclicSubset { n });
        }
        Ok(Self { n, members })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    /// A reduced word for the cyclically decreasing element with this support:
    /// every maximal cyclic run `a, a+1, ..., b` contributes `s_b s_{b-1} ... s_a`.
    pub fn decreasing_word(&self) -> Vec<usize> {
        let n = self.n;
        let mut word = Vec::with_capacity(self.len());
        // A run starts at `a` when `a - 1` is missing; such an `a` exists since S is proper.
        for &a in &self.members {
            if self.members.contains(&((a + n - 1) % n)) {
                continue;
            }
            let mut run = vec![a];
            let mut cur = (a + 1) % n;
            while self.members.contains(&cur) {
                run.push(cur);
                cur = (cur + 1) % n;
            }
            word.extend(run.into_iter().rev());
        }
        word
    }

    pub fn element(&self) -> AffinePermutation {
        self.decreasing_word()
            .into_iter()
            .fold(AffinePermutation::identity(self.n), |acc, i| acc.apply_generator(i))
    }
}

/// All proper subsets of `Z/n` of size `size`, as sorted member lists.
pub fn cyclic_subsets_of_size(n: usize, size: usize) -> Vec<CyclicSubset> {
    if size >= n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    combinations(n, size, 0, &mut current, &mut out);
    out.into_iter()
        .map(|members| CyclicSubset {
            n,
            members: members.into_iter().collect(),
        })
        .collect()
}

fn combinations(n: usize, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == size {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        if n - i < size - cur.len() {
            break;
        }
        cur.push(i);
        combinations(n, size, i + 1, cur, out);
        cur.pop();
    }
}

pub fn cyclically_decreasing_element(s: &CyclicSubset) -> AffinePermutation {
    s.element()
}
