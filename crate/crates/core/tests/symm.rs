use num_bigint::{BigInt, BigUint};
use positroid::affperm::enumerate_bound;
use positroid::symm::{
    affine_stanley_monomial_expansion, affine_stanley_schur, monomial_to_schur, partitions_of, pieri_multiply_ek,
    pieri_power_ek, schur_to_monomial, Basis, FactorizationCounter, KostkaTable, Partition, SymFn,
};
use proptest::prelude::*;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

/// Semistandard fillings of `shape` with content `content`, by direct search.
fn ssyt_count(shape: &[usize], content: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut left = content.to_vec();
    fn rec(idx: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let mut total = 0;
        for v in 1..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            if c > 0 && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            left[v - 1] -= 1;
            total += rec(idx + 1, cells, grid, left);
            left[v - 1] += 1;
        }
        grid[r][c] = 0;
        total
    }
    rec(0, &cells, &mut grid, &mut left)
}

#[test]
fn kostka_matches_tableau_search() {
    let mut table = KostkaTable::new();
    for d in 0..=6 {
        for lam in partitions_of(d) {
            for mu in partitions_of(d) {
                let expected = ssyt_count(lam.parts(), mu.parts());
                assert_eq!(table.get(&lam, &mu), BigUint::from(expected), "K_{lam},{mu}");
            }
        }
    }
}

#[test]
fn schur_monomial_roundtrip() {
    for d in 0..=8 {
        for lam in partitions_of(d) {
            let s = SymFn::basis_element(Basis::Schur, lam.clone());
            let m = schur_to_monomial(&s).unwrap();
            assert_eq!(m.basis(), Basis::Monomial);
            assert_eq!(m.coeff(&lam), BigInt::from(1));
            assert_eq!(monomial_to_schur(&m).unwrap(), s, "{lam}");
        }
    }
}

fn hook_length_count(lam: &Partition) -> BigUint {
    let conj = lam.conjugate();
    let mut num: BigUint = (1..=lam.size() as u64).product();
    let mut den = BigUint::from(1u32);
    for (r, &len) in lam.parts().iter().enumerate() {
        for c in 0..len {
            let hook = (len - c - 1) + (conj.part(c) - r - 1) + 1;
            den *= BigUint::from(hook as u64);
        }
    }
    num /= den;
    num
}

#[test]
fn powers_of_e1_count_standard_tableaux() {
    let one = SymFn::basis_element(Basis::Schur, Partition::empty());
    for d in 0..=7 {
        let g = pieri_power_ek(&one, 1, d, None).unwrap();
        for lam in partitions_of(d) {
            assert_eq!(g.coeff(&lam), BigInt::from(hook_length_count(&lam)), "{lam}");
        }
    }
}

#[test]
fn powers_of_ek_are_conjugate_kostka() {
    // [s_lambda] e_k^m = K_{lambda', (k^m)}
    let one = SymFn::basis_element(Basis::Schur, Partition::empty());
    for (k, m) in [(2, 2), (2, 3), (3, 2), (2, 4)] {
        let g = pieri_power_ek(&one, k, m, None).unwrap();
        let content = vec![k; m];
        for lam in partitions_of(k * m) {
            let expected = ssyt_count(lam.conjugate().parts(), &content);
            assert_eq!(g.coeff(&lam), BigInt::from(expected), "k={k} m={m} {lam}");
        }
    }
}

#[test]
fn clipped_pieri_is_restriction() {
    let one = SymFn::basis_element(Basis::Schur, Partition::empty());
    let full = pieri_power_ek(&one, 2, 4, None).unwrap();
    let clipped = pieri_power_ek(&one, 2, 4, Some((3, 3))).unwrap();
    for (lam, c) in full.terms() {
        let expected = if lam.fits_in_box(3, 3) { c.clone() } else { BigInt::from(0) };
        assert_eq!(clipped.coeff(lam), expected);
    }
}

fn compositions(total: usize, parts: usize, max: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=max.min(total) {
        for mut rest in compositions(total - first, parts - 1, max) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn factorization_counts_are_symmetric() {
    for (k, n) in [(2, 4), (1, 4), (2, 5)] {
        let mut counter = FactorizationCounter::new(n);
        for f in enumerate_bound(k, n).unwrap() {
            let v = f.coset_part();
            let len = f.length();
            for parts in 1..=len.min(4) {
                for comp in compositions(len, parts, n - 1) {
                    let mut sorted = comp.clone();
                    sorted.sort_unstable_by(|a, b| b.cmp(a));
                    assert_eq!(counter.count(&v, &comp), counter.count(&v, &sorted), "{f} {comp:?}");
                }
            }
        }
    }
}

#[test]
fn stanley_example_expansion() {
    let f = "[4,3,6,5,8,7,10,9]".parse().unwrap();
    let s = affine_stanley_schur(&f);
    let expected = SymFn::from_terms(
        Basis::Schur,
        [
            (p(&[4]), 1.into()),
            (p(&[3, 1]), 3.into()),
            (p(&[2, 2]), 2.into()),
            (p(&[2, 1, 1]), 3.into()),
            (p(&[1, 1, 1, 1]), 1.into()),
        ],
    );
    assert_eq!(s, expected);
    // (x_1 + x_2 + ...)^4 in monomials: multinomial coefficients
    let m = affine_stanley_monomial_expansion(&f);
    assert_eq!(m.coeff(&p(&[1, 1, 1, 1])), BigInt::from(24));
    assert_eq!(m.coeff(&p(&[2, 1, 1])), BigInt::from(12));
    assert_eq!(m.coeff(&p(&[2, 2])), BigInt::from(6));
}

#[test]
fn stanley_is_schur_positive_inside_the_rectangle() {
    // outside the k x (n-k) rectangle negative terms do occur, e.g. for
    // [1,3,7,4,10] the term -s_{2111}
    let mut saw_negative = false;
    for (k, n) in [(2, 5), (3, 6)] {
        for f in enumerate_bound(k, n).unwrap() {
            let s = affine_stanley_schur(&f);
            for (lam, c) in s.terms() {
                if lam.fits_in_box(k, n - k) {
                    assert!(*c > BigInt::from(0), "{f}: {s}");
                } else {
                    saw_negative |= *c < BigInt::from(0);
                }
            }
            assert_eq!(s.degree().unwrap_or(f.length()), f.length());
        }
    }
    assert!(saw_negative);
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..5, 0..5).prop_map(Partition::from_unsorted)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pieri_products_commute(lam in arb_partition(), a in 1usize..4, b in 1usize..4) {
        let g = SymFn::basis_element(Basis::Schur, lam);
        let ab = pieri_multiply_ek(&pieri_multiply_ek(&g, a).unwrap(), b).unwrap();
        let ba = pieri_multiply_ek(&pieri_multiply_ek(&g, b).unwrap(), a).unwrap();
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn pieri_is_linear(lam in arb_partition(), mu in arb_partition(), k in 1usize..4) {
        prop_assume!(lam.size() == mu.size());
        let x = SymFn::basis_element(Basis::Schur, lam);
        let y = SymFn::basis_element(Basis::Schur, mu);
        let lhs = pieri_multiply_ek(&x.add(&y.scale(&BigInt::from(3))), k).unwrap();
        let rhs = pieri_multiply_ek(&x, k).unwrap().add(&pieri_multiply_ek(&y, k).unwrap().scale(&BigInt::from(3)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kostka_roundtrip_random_sums(lam in arb_partition(), mu in arb_partition(), c in -5i64..5) {
        prop_assume!(lam.size() == mu.size());
        let g = SymFn::from_terms(Basis::Schur, [(lam, BigInt::from(2)), (mu, BigInt::from(c))]);
        prop_assert_eq!(monomial_to_schur(&schur_to_monomial(&g).unwrap()).unwrap(), g);
    }
}

#[test]
fn symfn_json_roundtrip() {
    let g = SymFn::from_terms(Basis::Schur, [(p(&[2, 2]), 2.into()), (p(&[4]), BigInt::from(10).pow(30))]);
    let js = serde_json::to_string(&g).unwrap();
    assert!(js.contains(r#"{"partition":[2,2],"coeff":2}"#));
    let back: SymFn = serde_json::from_str(&js).unwrap();
    assert_eq!(back, g);
}
