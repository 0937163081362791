//! The affine symmetric group `W_n` and bounded affine permutations.

mod bounded;
mod bruhat;
mod cyclic;
mod perm;

pub use bounded::{enumerate_bound, sort_by_length, BoundedAffinePermutation};
pub use bruhat::{bounded_below, bruhat_leq, lower_interval};
pub use cyclic::{cyclic_subsets_of_size, cyclically_decreasing_element, CyclicSubset};
pub use perm::AffinePermutation;

/// Decorated permutation of `f`: `(f(i) mod n, decoration)` where a fixed
/// point is decorated `true` when `f(i) = i + n` (a coloop) and `false` when
/// `f(i) = i` (a loop).
pub fn decorated_permutation(f: &BoundedAffinePermutation) -> Vec<(usize, Option<bool>)> {
    let n = f.n() as i64;
    f.window()
        .iter()
        .enumerate()
        .map(|(p, &v)| {
            let i = p as i64 + 1;
            let target = ((v - 1).rem_euclid(n) + 1) as usize;
            let deco = if v == i {
                Some(false)
            } else if v == i + n {
                Some(true)
            } else {
                None
            };
            (target, deco)
        })
        .collect()
}
