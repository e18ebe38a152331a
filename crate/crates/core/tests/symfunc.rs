use asmdpp::laurent::determinant;
use asmdpp::symfunc::*;
use asmdpp::{Monomial, Poly, PolyMatrix};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Exponent vectors of length `m` with entries in `lo..=hi` summing to `k`.
fn compositions(m: usize, k: i64, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    if m == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in lo..=hi {
        for mut rest in compositions(m - 1, k - first, lo, hi) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `h_k(X_1..X_m)` straight from the definition, negative degrees included.
fn h_oracle(n: usize, k: i64, m: usize) -> Poly {
    let (lo, hi, sign) = if k >= 0 { (0, k, 1) } else { (k, -1, if m % 2 == 1 { 1 } else { -1 }) };
    let mut p = Poly::zero(n);
    for e in compositions(m, k, lo, hi) {
        let mut x = vec![0i32; n];
        for (i, &v) in e.iter().enumerate() {
            x[i] = v as i32;
        }
        p = p + Poly::term(Monomial::new(0, 0, 0, &x), BigInt::from(sign));
    }
    p
}

fn x_pow(n: usize, i: usize, e: i64) -> Poly {
    Poly::monomial(Monomial::var_pow(n, asmdpp::Var::X(i), e as i32))
}

/// `det(X_i^{λ_j+m-j}) / det(X_i^{m-j})` with `λ = (k_m..k_1)`.
fn bialternant(n: usize, k: &[i64]) -> Poly {
    let m = k.len();
    let lambda: Vec<i64> = k.iter().rev().copied().collect();
    let num: PolyMatrix = (1..=m)
        .map(|i| (0..m).map(|j| x_pow(n, i, lambda[j] + (m - 1 - j) as i64)).collect())
        .collect();
    let den: PolyMatrix =
        (1..=m).map(|i| (0..m).map(|j| x_pow(n, i, (m - 1 - j) as i64)).collect()).collect();
    determinant(n, &num).unwrap().divide_exact(&determinant(n, &den).unwrap()).unwrap()
}

#[test]
fn extended_h_matches_the_definition() {
    for m in 1..=3 {
        for k in -7..=4 {
            assert_eq!(h_ext::<BigInt>(3, k, 1..=m), h_oracle(3, k, m), "h_{k} in {m} variables");
        }
    }
}

#[test]
fn e_and_h_are_inverse_series() {
    // Σ_j (-1)^j e_j h_{k-j} = 0 for k > 0
    let n = 3;
    for k in 1..=5 {
        let mut acc = Poly::zero(n);
        for j in 0..=k {
            let t = &e_sym::<BigInt>(n, j, 1..=n) * &h_ext(n, k - j, 1..=n);
            acc = if j % 2 == 0 { acc + t } else { acc - t };
        }
        assert!(acc.is_zero(), "k = {k}");
    }
}

#[test]
fn normalization_examples() {
    // s_{(0,2)} = -s_{(1,1)}
    assert_eq!(normalize_lambda(&[0, 2]), Normalized { sign: -1, mu: vec![1, 1], p: 0 });
    assert_eq!(normalize_lambda(&[0, 1]).sign, 0);
    assert_eq!(normalize_lambda(&[-1, -2]), Normalized { sign: 1, mu: vec![1, 0], p: 2 });
    assert_eq!(normalize_weight(&[2, 0]), normalize_lambda(&[0, 2]));
}

#[test]
fn schur_of_a_row_is_h() {
    for k in 0..=4 {
        assert_eq!(schur_ext::<BigInt>(3, &[0, 0, k]), h_ext(3, k, 1..=3));
    }
}

fn weight() -> impl Strategy<Value = Vec<i64>> {
    (1usize..=3).prop_flat_map(|m| prop::collection::vec(-3i64..=3, m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn schur_agrees_with_the_bialternant(k in weight()) {
        prop_assert_eq!(schur_ext::<BigInt>(3, &k), bialternant(3, &k));
    }

    #[test]
    fn jacobi_trudi_forms_agree(k in weight()) {
        let s = schur_ext::<BigInt>(3, &k);
        prop_assert_eq!(schur_jacobi_trudi::<BigInt>(3, &k), s.clone());
        prop_assert_eq!(schur_staircase::<BigInt>(3, &k), s);
    }

    #[test]
    fn schur_is_symmetric(k in prop::collection::vec(-2i64..=3, 3), swap in 0usize..3) {
        let s = schur_ext::<BigInt>(3, &k);
        let mut perm = vec![1, 2, 3];
        perm.swap(swap, (swap + 1) % 3);
        prop_assert_eq!(s.permute_x(&perm), s);
    }
}
