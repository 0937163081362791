use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symm::{terms_repr, Basis, Partition, SymFn, TermRepr};

/// An element of `H*(Gr(k, n))` in the Schubert basis: integer coefficients on
/// partitions inside the `k x (n - k)` rectangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassmannClass {
    k: usize,
    n: usize,
    terms: BTreeMap<Partition, BigInt>,
}

impl GrassmannClass {
    pub fn zero(k: usize, n: usize) -> Self {
        assert!(k <= n, "k = {k} > n = {n}");
        Self {
            k,
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The unit class `[Gr(k, n)] = s_∅`.
    pub fn unit(k: usize, n: usize) -> Self {
        Self::single(k, n, Partition::empty())
    }

    /// The point class `s_{(n-k)^k}`.
    pub fn point(k: usize, n: usize) -> Self {
        Self::single(k, n, Partition::rectangle(k, n - k))
    }

    fn single(k: usize, n: usize, lambda: Partition) -> Self {
        let mut c = Self::zero(k, n);
        c.add_term(lambda, BigInt::one());
        c
    }

    /// Builds a class, dropping partitions outside the rectangle.
    pub fn from_terms(k: usize, n: usize, terms: impl IntoIterator<Item = (Partition, BigInt)>) -> Self {
        let mut c = Self::zero(k, n);
        for (p, v) in terms {
            c.add_term(p, v);
        }
        c
    }

    /// Adds `coeff * s_lambda`; partitions outside the rectangle are zero.
    pub fn add_term(&mut self, lambda: Partition, coeff: BigInt) {
        if coeff.is_zero() || !lambda.fits_in_box(self.k, self.n - self.k) {
            return;
        }
        let e = self.terms.entry(lambda.clone()).or_insert_with(BigInt::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
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

    /// Cohomological degree (in units of complex codimension); `None` for the
    /// zero class or an inhomogeneous one.
    pub fn degree(&self) -> Option<usize> {
        let d = self.terms.keys().next()?.size();
        self.is_homogeneous().then_some(d)
    }

    /// `dim Gr(k, n) = k (n - k)`.
    pub fn ambient_dimension(&self) -> usize {
        self.k * (self.n - self.k)
    }

    /// `lambda^c`: the 180° rotated complement of `lambda` in the rectangle.
    pub fn complement(&self, lambda: &Partition) -> Partition {
        complement(lambda, self.k, self.n - self.k)
    }
}

pub fn complement(lambda: &Partition, rows: usize, cols: usize) -> Partition {
    Partition::from_unsorted((0..rows).map(|i| cols - lambda.part(rows - 1 - i)).collect())
}

impl fmt::Display for GrassmannClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let as_sym = SymFn::from_terms(Basis::Schur, self.terms.iter().map(|(p, c)| (p.clone(), c.clone())));
        write!(f, "{as_sym}")
    }
}

#[derive(Serialize, Deserialize)]
struct ClassRepr {
    k: usize,
    n: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for GrassmannClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ClassRepr {
            k: self.k,
            n: self.n,
            terms: terms_repr(self.terms.iter()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GrassmannClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = ClassRepr::deserialize(d)?;
        if r.k > r.n {
            return Err(D::Error::custom(format!("k = {} > n = {}", r.k, r.n)));
        }
        let mut c = Self::zero(r.k, r.n);
        for t in r.terms {
            if !t.partition.fits_in_box(r.k, r.n - r.k) {
                return Err(D::Error::custom(format!(
                    "partition {} does not fit in the {} x {} rectangle",
                    t.partition,
                    r.k,
                    r.n - r.k
                )));
            }
            c.add_term(t.partition, t.coeff);
        }
        Ok(c)
    }
}

/// A `k`-subset `I` of `[n]` indexing a Schubert variety `X_I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchubertIndex {
    n: usize,
    members: Vec<usize>,
}

impl SchubertIndex {
    pub fn new(n: usize, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        let k = members.len();
        let dup = members.windows(2).any(|w| w[0] == w[1]);
        let out_of_range = members.iter().any(|&i| i == 0 || i > n);
        if dup || out_of_range {
            return Err(Error::BadSchubertIndex(members, k, n));
        }
        Ok(Self { n, members })
    }

    pub fn k(&self) -> usize {
        self.members.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// `lambda(I) = (i_k - k, ..., i_1 - 1)`.
    pub fn partition(&self) -> Partition {
        Partition::from_unsorted(
            self.members
                .iter()
                .enumerate()
                .rev()
                .map(|(j, &i)| i - (j + 1))
                .collect(),
        )
    }

    /// `sum i_j - (1 + ... + k)`.
    pub fn codimension(&self) -> usize {
        let k = self.k();
        self.members.iter().sum::<usize>() - k * (k + 1) / 2
    }

    /// Number of members in `[lo, hi]`.
    pub fn count_in(&self, lo: usize, hi: usize) -> usize {
        self.members.iter().filter(|&&i| lo <= i && i <= hi).count()
    }
}

/// A class in `H*(Gr(k, k + m))` with the rational prefactor `1 / d`, or with
/// only a divisibility bound on `d` when the degree is not computable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmplituhedronClass {
    pub truncation: GrassmannClass,
    pub degree: DegreeInfo,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeInfo {
    /// The projection degree `d`; the class is `truncation / d`.
    Exact(BigInt),
    /// `d` divides this value; the class is `truncation / d` for some such `d`.
    DividesGcd(BigInt),
}

impl AmplituhedronClass {
    /// `truncation / d` when `d` is known. Coefficients are integers whenever
    /// the degree is exact.
    pub fn exact_class(&self) -> Option<GrassmannClass> {
        let DegreeInfo::Exact(d) = &self.degree else {
            return None;
        };
        let t = &self.truncation;
        let mut out = GrassmannClass::zero(t.k(), t.n());
        for (p, c) in t.terms() {
            debug_assert!((c % d).is_zero());
            out.add_term(p.clone(), c / d);
        }
        Some(out)
    }
}

#[derive(Serialize)]
struct AmplituhedronRepr<'a> {
    k: usize,
    n: usize,
    terms: Vec<TermRepr>,
    #[serde(skip_serializing_if = "Option::is_none", with = "opt_coeff")]
    scalar_num: Option<&'a BigInt>,
    #[serde(skip_serializing_if = "Option::is_none", with = "opt_coeff")]
    scalar_den: Option<&'a BigInt>,
    #[serde(skip_serializing_if = "Option::is_none", with = "opt_coeff")]
    degree_divides: Option<&'a BigInt>,
}

mod opt_coeff {
    use num_bigint::BigInt;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(c: &Option<&BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match c {
            Some(v) => crate::symm::coeff_json::serialize(v, s),
            None => s.serialize_none(),
        }
    }
}

impl Serialize for AmplituhedronClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let one = BigInt::one();
        let t = &self.truncation;
        let (num, den, div) = match &self.degree {
            DegreeInfo::Exact(d) => (Some(&one), Some(d), None),
            DegreeInfo::DividesGcd(c) => (None, None, Some(c)),
        };
        AmplituhedronRepr {
            k: t.k(),
            n: t.n(),
            terms: terms_repr(t.terms()),
            scalar_num: num,
            scalar_den: den,
            degree_divides: div,
        }
        .serialize(s)
    }
}
