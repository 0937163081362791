use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::partition::{partitions_of, Partition};
use super::symfn::{Basis, SymFn};
use crate::error::{Error, Result};

/// Kostka numbers `K_{lambda, mu}` (semistandard tableaux of shape `lambda`
/// and content `mu`), memoized.
#[derive(Default)]
pub struct KostkaTable {
    memo: HashMap<(Partition, Vec<usize>), BigUint>,
}

impl KostkaTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, shape: &Partition, content: &Partition) -> BigUint {
        if shape.size() != content.size() || !shape.dominates(content) {
            return BigUint::zero();
        }
        self.count(shape, content.parts())
    }

    /// Strip off the largest letter: its cells form a horizontal strip.
    fn count(&mut self, shape: &Partition, content: &[usize]) -> BigUint {
        if content.is_empty() {
            return if shape.is_empty() { BigUint::one() } else { BigUint::zero() };
        }
        if shape.len() > content.len() {
            return BigUint::zero();
        }
        let key = (shape.clone(), content.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let (last, rest) = content.split_last().unwrap();
        let mut total = BigUint::zero();
        for nu in shape.remove_horizontal_strip(*last) {
            total += self.count(&nu, rest);
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// Expand a Schur-basis function in monomials: `s_lambda = sum_mu K_{lambda mu} m_mu`.
pub fn schur_to_monomial(g: &SymFn) -> Result<SymFn> {
    if g.basis() != Basis::Schur {
        return Err(Error::WrongBasis { expected: "schur" });
    }
    let mut table = KostkaTable::new();
    let mut out = SymFn::zero(Basis::Monomial);
    for (lambda, c) in g.terms() {
        for mu in partitions_of(lambda.size()) {
            let k = table.get(lambda, &mu);
            if !k.is_zero() {
                out.add_term(mu, c * BigInt::from(k));
            }
        }
    }
    Ok(out)
}

/// Inverse Kostka change of basis, solving the unitriangular system from the
/// top of dominance order down.
pub fn monomial_to_schur(g: &SymFn) -> Result<SymFn> {
    if g.basis() != Basis::Monomial {
        return Err(Error::WrongBasis {
            expected: "monomial",
        });
    }
    if !g.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let Some(d) = g.degree() else {
        return Ok(SymFn::zero(Basis::Schur));
    };
    let mut table = KostkaTable::new();
    let order = partitions_of(d);
    let mut solved: Vec<(Partition, BigInt)> = Vec::new();
    for lambda in &order {
        let mut c = g.coeff(lambda);
        for (nu, cnu) in &solved {
            let k = table.get(nu, lambda);
            if !k.is_zero() {
                c -= cnu * BigInt::from(k);
            }
        }
        if !c.is_zero() {
            solved.push((lambda.clone(), c));
        }
    }
    Ok(SymFn::from_terms(Basis::Schur, solved))
}
