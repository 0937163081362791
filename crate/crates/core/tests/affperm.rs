use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigUint;
use positroid::affperm::{
    bounded_below, bruhat_leq, cyclic_subsets_of_size, cyclically_decreasing_element, decorated_permutation,
    enumerate_bound, lower_interval, AffinePermutation, BoundedAffinePermutation,
};
use positroid::symm::{affine_stanley_monomial, Partition};

/// Every window with `i <= f(i) <= i + n`, distinct residues and the right sum.
fn brute_force_bound(k: usize, n: usize) -> BTreeSet<Vec<i64>> {
    let n_i = n as i64;
    let mut out = BTreeSet::new();
    let mut window = vec![0i64; n];
    fn rec(pos: usize, n: i64, k: i64, window: &mut Vec<i64>, out: &mut BTreeSet<Vec<i64>>) {
        if pos == n as usize {
            let residues: HashSet<i64> = window.iter().map(|v| v.rem_euclid(n)).collect();
            let sum: i64 = window.iter().enumerate().map(|(p, v)| v - p as i64 - 1).sum();
            if residues.len() == n as usize && sum == k * n {
                out.insert(window.clone());
            }
            return;
        }
        let i = pos as i64 + 1;
        for v in i..=i + n {
            window[pos] = v;
            rec(pos + 1, n, k, window, out);
        }
    }
    rec(0, n_i, k as i64, &mut window, &mut out);
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=5 {
        let mut total = 0;
        for k in 0..=n {
            let got: BTreeSet<Vec<i64>> = enumerate_bound(k, n)
                .unwrap()
                .iter()
                .map(|f| f.window().to_vec())
                .collect();
            assert_eq!(got, brute_force_bound(k, n), "Bound({k},{n})");
            total += got.len();
        }
        // decorated permutations of [n]: sum_j n!/j!
        let expected: usize = (0..=n).map(|j| (j + 1..=n).product::<usize>()).sum();
        assert_eq!(total, expected, "n = {n}");
    }
}

#[test]
fn lengths_and_dimensions() {
    for (k, n) in [(1, 4), (2, 4), (2, 5), (3, 6)] {
        let cells = enumerate_bound(k, n).unwrap();
        let f0 = BoundedAffinePermutation::identity_shift(k, n).unwrap();
        assert_eq!(cells[0], f0);
        assert_eq!(f0.length(), 0);
        // point strata are the coordinate subspaces: C(n, k) of them
        let points = cells.iter().filter(|f| f.length() == k * (n - k)).count();
        let binom = (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
        assert_eq!(points, binom);
        for f in &cells {
            assert!(f.length() <= k * (n - k));
            // the decorated permutation marks exactly the fixed points
            for (p, (_, deco)) in decorated_permutation(f).iter().enumerate() {
                let i = p as i64 + 1;
                let v = f.value(i);
                assert_eq!(deco.is_some(), v == i || v == i + n as i64);
            }
        }
    }
}

#[test]
fn composition_inverse_roundtrip() {
    let cells = enumerate_bound(2, 5).unwrap();
    for f in cells.iter().take(60) {
        let a = f.as_affine();
        let inv = a.inverse();
        assert!(a.compose(&inv).is_identity());
        assert!(inv.compose(a).is_identity());
        assert_eq!(inv.inversions(), a.inversions());
        for j in -7..7 {
            assert_eq!(a.value(a.preimage(j)), j);
        }
    }
}

fn all_reduced_words(v: &AffinePermutation) -> Vec<Vec<usize>> {
    if v.inversions() == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..v.n() {
        if v.has_right_descent(i) {
            for mut w in all_reduced_words(&v.apply_generator(i)) {
                w.push(i);
                out.push(w);
            }
        }
    }
    out
}

fn reduced_word_count(v: &AffinePermutation, memo: &mut HashMap<AffinePermutation, BigUint>) -> BigUint {
    if v.inversions() == 0 {
        return BigUint::from(1u32);
    }
    if let Some(c) = memo.get(v) {
        return c.clone();
    }
    let mut total = BigUint::from(0u32);
    for i in 0..v.n() {
        if v.has_right_descent(i) {
            total += reduced_word_count(&v.apply_generator(i), memo);
        }
    }
    memo.insert(v.clone(), total.clone());
    total
}

#[test]
fn reduced_words_are_reduced() {
    for f in enumerate_bound(2, 5).unwrap() {
        let v = f.coset_part();
        let w = v.reduced_word();
        assert_eq!(w.len(), f.length());
        let mut rebuilt = AffinePermutation::identity(5);
        for &i in &w {
            rebuilt = rebuilt.apply_generator(i);
        }
        assert_eq!(rebuilt, v);
    }
}

#[test]
fn stanley_unit_content_counts_reduced_words() {
    for (k, n) in [(1, 4), (2, 4), (2, 5), (3, 6)] {
        let mut memo = HashMap::new();
        for f in enumerate_bound(k, n).unwrap() {
            let ones = Partition::new(vec![1; f.length()]).unwrap();
            let expected = reduced_word_count(&f.coset_part(), &mut memo);
            assert_eq!(affine_stanley_monomial(&f, &ones), expected, "{f}");
        }
    }
}

#[test]
fn lower_interval_independent_of_reduced_word() {
    for g in enumerate_bound(2, 4).unwrap() {
        let v = g.coset_part();
        let reference = lower_interval(&v);
        for word in all_reduced_words(&v) {
            let mut set: HashSet<AffinePermutation> = HashSet::from([AffinePermutation::identity(4)]);
            for i in word {
                let extra: Vec<_> = set.iter().map(|x| x.apply_generator(i)).collect();
                set.extend(extra);
            }
            assert_eq!(set, reference, "{g}");
        }
    }
}

#[test]
fn bruhat_is_a_graded_eulerian_order() {
    for (k, n) in [(1, 4), (2, 4), (2, 5)] {
        let cells = enumerate_bound(k, n).unwrap();
        let leq: HashMap<(usize, usize), bool> = (0..cells.len())
            .flat_map(|a| (0..cells.len()).map(move |b| (a, b)))
            .map(|(a, b)| ((a, b), bruhat_leq(&cells[a], &cells[b]).unwrap()))
            .collect();
        for a in 0..cells.len() {
            assert!(leq[&(a, a)]);
            for b in 0..cells.len() {
                if a != b && leq[&(a, b)] {
                    assert!(!leq[&(b, a)], "antisymmetry");
                    assert!(cells[a].length() < cells[b].length());
                    // every nontrivial interval has as many even as odd elements
                    let signed: i64 = (0..cells.len())
                        .filter(|&c| leq[&(a, c)] && leq[&(c, b)])
                        .map(|c| if cells[c].length().is_multiple_of(2) { 1 } else { -1 })
                        .sum();
                    assert_eq!(signed, 0, "[{}, {}]", cells[a], cells[b]);
                }
            }
        }
        for a in 0..cells.len() {
            for b in 0..cells.len() {
                for c in 0..cells.len() {
                    if leq[&(a, b)] && leq[&(b, c)] {
                        assert!(leq[&(a, c)], "transitivity");
                    }
                }
            }
        }
        // covers are exactly the comparable pairs one step apart
        for (a, f) in cells.iter().enumerate() {
            let covers = f.boundary_covers();
            for (b, g) in cells.iter().enumerate() {
                let is_cover = leq[&(a, b)] && g.length() == f.length() + 1;
                assert_eq!(covers.contains(g), is_cover, "{f} -> {g}");
            }
            let below: BTreeSet<_> = bounded_below(f).into_iter().collect();
            let expected: BTreeSet<_> = (0..cells.len()).filter(|&c| leq[&(c, a)]).map(|c| cells[c].clone()).collect();
            assert_eq!(below, expected);
        }
    }
}

#[test]
fn cyclically_decreasing_elements() {
    for n in 2..=6 {
        for size in 0..n {
            for s in cyclic_subsets_of_size(n, size) {
                let w = cyclically_decreasing_element(&s);
                assert_eq!(w.inversions(), size, "length equals |S|");
                assert_eq!(w.shift_sum(), 0);
            }
        }
        // distinct subsets give distinct elements
        let all: HashSet<_> = (0..n)
            .flat_map(|size| cyclic_subsets_of_size(n, size))
            .map(|s| cyclically_decreasing_element(&s))
            .collect();
        assert_eq!(all.len(), (1 << n) - 1);
    }
}

#[test]
fn parse_errors_name_the_invariant() {
    let cases = [
        ("[1,1]", "bijection"),
        ("[0,2,3,5]", "bound condition"),
        ("[1,2", "parse"),
    ];
    for (text, keyword) in cases {
        let err = text.parse::<BoundedAffinePermutation>().unwrap_err().to_string();
        assert!(err.contains(keyword), "{text}: {err}");
    }
    let err = BoundedAffinePermutation::new(2, vec![2, 3, 4]).unwrap_err().to_string();
    assert!(err.contains("sum condition"), "{err}");
}
