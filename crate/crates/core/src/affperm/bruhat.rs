use std::collections::HashSet;

use super::bounded::BoundedAffinePermutation;
use super::perm::AffinePermutation;
use crate::error::{Error, Result};

/// The Bruhat interval `[e, w]` in `W_n`, as the set of all subword products
/// of one reduced word of `w`.
pub fn lower_interval(w: &AffinePermutation) -> HashSet<AffinePermutation> {
    debug_assert_eq!(w.shift_sum(), 0);
    let mut set = HashSet::new();
    set.insert(AffinePermutation::identity(w.n()));
    for i in w.reduced_word() {
        let extra: Vec<_> = set.iter().map(|x| x.apply_generator(i)).collect();
        set.extend(extra);
    }
    set
}

/// `Pi_g` is contained in `Pi_f`; equivalently `f_0^{-1} f <= f_0^{-1} g` in
/// affine Bruhat order.
pub fn bruhat_leq(f: &BoundedAffinePermutation, g: &BoundedAffinePermutation) -> Result<bool> {
    if f.k() != g.k() || f.n() != g.n() {
        return Err(Error::ShapeMismatch {
            k1: f.k(),
            n1: f.n(),
            k2: g.k(),
            n2: g.n(),
        });
    }
    let (lf, lg) = (f.length(), g.length());
    if lf > lg {
        return Ok(false);
    }
    if lf == lg {
        return Ok(f == g);
    }
    Ok(lower_interval(&g.coset_part()).contains(&f.coset_part()))
}

/// All bounded `f` with `Pi_g` inside `Pi_f`, i.e. `f <= g`.
pub fn bounded_below(g: &BoundedAffinePermutation) -> Vec<BoundedAffinePermutation> {
    let k = g.k();
    let mut out: Vec<_> = lower_interval(&g.coset_part())
        .iter()
        .filter_map(|v| BoundedAffinePermutation::from_coset_part(k, v).ok())
        .collect();
    super::bounded::sort_by_length(&mut out);
    out
}
