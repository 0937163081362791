use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Schur,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::Schur => "schur",
        }
    }

    fn symbol(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Schur => 's',
        }
    }
}

/// A finite linear combination of basis elements indexed by partitions.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFn {
    basis: Basis,
    terms: BTreeMap<Partition, BigInt>,
}

impl SymFn {
    pub fn zero(basis: Basis) -> Self {
        Self {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut out = Self::zero(basis);
        out.terms.insert(lambda, BigInt::one());
        out
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, BigInt)>) -> Self {
        let mut out = Self::zero(basis);
        for (p, c) in terms {
            out.add_term(p, c);
        }
        out
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.terms.keys().map(Partition::size);
        match sizes.next() {
            None => true,
            Some(d) => sizes.all(|s| s == d),
        }
    }

    /// The common size of all keys; `None` if zero or inhomogeneous.
    pub fn degree(&self) -> Option<usize> {
        let d = self.terms.keys().next()?.size();
        self.is_homogeneous().then_some(d)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(p, v)| (p.clone(), v * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.basis, other.basis, "adding across bases");
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for SymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            if i > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let mag = c.magnitude();
            if !mag.is_one() {
                write!(f, "{mag} ")?;
            }
            write!(f, "{}{}", self.basis.symbol(), p)?;
        }
        Ok(())
    }
}

/// JSON coefficient: a plain number when it fits in `i64`, else a decimal string.
pub mod coeff_json {
    use super::*;

    pub fn serialize<S: Serializer>(c: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(c) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&c.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(BigInt::from(v)),
            Raw::Str(s) => s.parse().map_err(D::Error::custom),
        }
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct TermRepr {
    pub partition: Partition,
    #[serde(with = "coeff_json")]
    pub coeff: BigInt,
}

#[derive(Serialize, Deserialize)]
struct SymFnRepr {
    basis: Basis,
    terms: Vec<TermRepr>,
}

pub(crate) fn terms_repr<'a>(terms: impl Iterator<Item = (&'a Partition, &'a BigInt)>) -> Vec<TermRepr> {
    terms
        .map(|(p, c)| TermRepr {
            partition: p.clone(),
            coeff: c.clone(),
        })
        .collect()
}

impl Serialize for SymFn {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SymFnRepr {
            basis: self.basis,
            terms: terms_repr(self.terms.iter()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFn {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = SymFnRepr::deserialize(d)?;
        Ok(Self::from_terms(
            r.basis,
            r.terms.into_iter().map(|t| (t.partition, t.coeff)),
        ))
    }
}
