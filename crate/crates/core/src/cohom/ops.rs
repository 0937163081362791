use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::class::{AmplituhedronClass, DegreeInfo, GrassmannClass, SchubertIndex};
use crate::affperm::{enumerate_bound, BoundedAffinePermutation};
use crate::error::{Error, Result};
use crate::symm::{affine_stanley_schur, partitions_in_box, pieri_power_ek, Basis, Partition, SymFn};

/// The quotient map `Λ -> H*(Gr(k, n))`: Schur functions outside the
/// rectangle go to zero.
pub fn reduce_to_quotient(g: &SymFn, k: usize, n: usize) -> Result<GrassmannClass> {
    if g.basis() != Basis::Schur {
        return Err(Error::WrongBasis { expected: "schur" });
    }
    if k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    Ok(GrassmannClass::from_terms(
        k,
        n,
        g.terms().map(|(p, c)| (p.clone(), c.clone())),
    ))
}

/// `[Pi_f]`, the image of `F_f` in `H*(Gr(k, n))`.
pub fn positroid_class(f: &BoundedAffinePermutation) -> GrassmannClass {
    reduce_to_quotient(&affine_stanley_schur(f), f.k(), f.n()).expect("Schur input, k <= n")
}

pub fn schubert_class(index: &SchubertIndex, k: usize, n: usize) -> Result<GrassmannClass> {
    if index.k() != k || index.n() != n {
        return Err(Error::BadSchubertIndex(index.members().to_vec(), k, n));
    }
    Ok(GrassmannClass::from_terms(k, n, [(index.partition(), BigInt::from(1))]))
}

/// The Poincaré pairing `sum_lambda a_lambda b_{lambda^c}` for classes of
/// complementary degree.
pub fn duality_pair(a: &GrassmannClass, b: &GrassmannClass) -> Result<BigInt> {
    if a.k() != b.k() || a.n() != b.n() {
        return Err(Error::ShapeMismatch {
            k1: a.k(),
            n1: a.n(),
            k2: b.k(),
            n2: b.n(),
        });
    }
    let top = a.ambient_dimension();
    if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
        if da + db != top {
            return Err(Error::DegreeMismatch(da, db, top));
        }
    }
    if !a.is_homogeneous() || !b.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(a
        .terms()
        .map(|(lambda, c)| c * b.coeff(&a.complement(lambda)))
        .sum())
}

/// `mu^{+l}`: prepend `l` columns of height `k` to `mu`.
pub fn add_columns(mu: &Partition, k: usize, l: usize) -> Partition {
    Partition::from_unsorted((0..k).map(|i| mu.part(i) + l).collect())
}

fn check_truncation(k: usize, n: usize, m: usize) -> Result<usize> {
    if n <= k + m {
        return Err(Error::BadTruncation { k, n, m });
    }
    Ok(n - k - m)
}

/// `tau_{k+m}`: the coefficient of `s_mu` in `H*(Gr(k, k + m))` is the
/// coefficient of `s_{mu^{+l}}`, `l = n - k - m`. Applied term by term, so
/// inhomogeneous input is allowed.
pub fn truncate(a: &GrassmannClass, m: usize) -> Result<GrassmannClass> {
    let (k, n) = (a.k(), a.n());
    let l = check_truncation(k, n, m)?;
    Ok(GrassmannClass::from_terms(
        k,
        k + m,
        partitions_in_box(k, m)
            .into_iter()
            .map(|mu| {
                let c = a.coeff(&add_columns(&mu, k, l));
                (mu, c)
            }),
    ))
}

/// Some `lambda` with `l^k ⊆ lambda ⊆ (n-k)^k` has a nonzero coefficient in `[Pi_f]`.
pub fn kinematical_support(f: &BoundedAffinePermutation, m: usize) -> Result<bool> {
    Ok(!truncate(&positroid_class(f), m)?.is_zero())
}

/// The same criterion read off directly from the coefficients of `[Pi_f]`,
/// without building the truncation.
pub fn kinematical_support_by_coefficients(f: &BoundedAffinePermutation, m: usize) -> Result<bool> {
    let (k, n) = (f.k(), f.n());
    let l = check_truncation(k, n, m)?;
    let floor = Partition::rectangle(k, l);
    Ok(positroid_class(f)
        .terms()
        .any(|(lambda, c)| !c.is_zero() && floor.contained_in(lambda)))
}

fn check_top_dimensional(f: &BoundedAffinePermutation, m: usize) -> Result<()> {
    check_truncation(f.k(), f.n(), m)?;
    let (dim, km) = (f.cell_dimension(), f.k() * m);
    if dim != km {
        return Err(Error::NotTopDimensional { dim, km });
    }
    Ok(())
}

/// Projection degree of a cell with `dim Pi_f = km`: the coefficient of
/// `s_{l^k}` in `F_f`, or `None` if that coefficient vanishes (no support).
pub fn degree_top_cell(f: &BoundedAffinePermutation, m: usize) -> Result<Option<BigInt>> {
    check_top_dimensional(f, m)?;
    let l = f.n() - f.k() - m;
    let c = positroid_class(f).coeff(&Partition::rectangle(f.k(), l));
    Ok(c.is_positive().then_some(c))
}

/// `[s_{(n-k)^k}] (e_k)^m F_f`, computed with the classical Pieri rule.
pub fn degree_via_pieri(f: &BoundedAffinePermutation, m: usize) -> Result<BigInt> {
    check_top_dimensional(f, m)?;
    let (k, n) = (f.k(), f.n());
    let g = pieri_power_ek(&affine_stanley_schur(f), k, m, Some((k, n - k)))?;
    Ok(reduce_to_quotient(&g, k, n)?.coeff(&Partition::rectangle(k, n - k)))
}

/// `gcd` of the nonzero coefficients of the truncation; the projection
/// degree divides it.
pub fn degree_gcd_bound(f: &BoundedAffinePermutation, m: usize) -> Result<BigInt> {
    let t = truncate(&positroid_class(f), m)?;
    if t.is_zero() {
        return Err(Error::NoSupport(f.to_string()));
    }
    Ok(t.terms().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c)))
}

/// `[Y_f] = tau_{k+m}([Pi_f]) / d`. For cells below the top dimension the
/// degree is reported only through its gcd bound.
pub fn amplituhedron_class(f: &BoundedAffinePermutation, m: usize) -> Result<AmplituhedronClass> {
    let t = truncate(&positroid_class(f), m)?;
    if t.is_zero() {
        return Err(Error::NoSupport(f.to_string()));
    }
    let degree = if f.cell_dimension() == f.k() * m {
        let d = degree_top_cell(f, m)?.ok_or_else(|| Error::NoSupport(f.to_string()))?;
        DegreeInfo::Exact(d)
    } else {
        DegreeInfo::DividesGcd(t.terms().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c)))
    };
    Ok(AmplituhedronClass {
        truncation: t,
        degree,
    })
}

/// Support flags for every cell of `Bound(k, n)`.
pub fn support_table(k: usize, n: usize, m: usize) -> Result<HashMap<BoundedAffinePermutation, bool>> {
    check_truncation(k, n, m)?;
    enumerate_bound(k, n)?
        .into_iter()
        .map(|f| {
            let s = kinematical_support(&f, m)?;
            Ok((f, s))
        })
        .collect()
}

/// Pairs `(f, f')` with `f` unsupported and `f'` a codimension-one boundary
/// stratum of `f` that is supported. Checking covers suffices: closure of the
/// unsupported set under covers is closure under all of `∂Π_f`.
pub fn support_propagation_violations(
    k: usize,
    n: usize,
    m: usize,
) -> Result<Vec<(BoundedAffinePermutation, BoundedAffinePermutation)>> {
    let table = support_table(k, n, m)?;
    let unsupported: HashSet<_> = table.iter().filter(|(_, &s)| !s).map(|(f, _)| f).collect();
    let mut out = Vec::new();
    // the set of unsupported cells must be closed under passing to covers
    for f in &unsupported {
        for g in f.boundary_covers() {
            if table[&g] {
                out.push(((*f).clone(), g));
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn support_propagates_check(k: usize, n: usize, m: usize) -> Result<bool> {
    Ok(support_propagation_violations(k, n, m)?.is_empty())
}
