use std::collections::BTreeSet;

use asmdpp::asm_side::gf_amt_enum;
use asmdpp::dpp_side::{enumerate_dpp, gf_dpp_pairs, gf_sbcspp, Dpp, DppPair};
use asmdpp::paths::*;
use asmdpp::{Assignment, Poly};
use num_bigint::BigInt;

#[test]
fn formula_matches_brute_force_single_paths() {
    for n in 1..=3 {
        for i in 1..=n {
            for j in 1..=n {
                let f = single_path_gf::<BigInt>(i, j, n);
                assert_eq!(f, single_path_sum(i, j, n), "W({i},{j}) at n = {n}");
                assert!(f.is_zero() || f.min_exp(asmdpp::Var::V).unwrap() >= -(n as i32));
                let raw = single_paths(PathKind::Extended, n, i, j)
                    .iter()
                    .map(|p| 1u64 << p.steps.iter().filter(|s| **s == Step::U).count())
                    .sum::<u64>();
                let signed = f.sign_value().unwrap();
                assert!(signed.magnitude() <= &raw.into());
            }
        }
    }
}

#[test]
fn lgv_at_order_two_is_the_table() {
    let lgv = gf_lgv::<BigInt>(2).unwrap();
    assert_eq!(lgv.len(), 16);
    assert_eq!(lgv.coefficient_sum(), BigInt::from(18));
    assert_eq!(lgv, gf_amt_enum(&[1, 2]));
}

#[test]
fn path_enumeration_agrees_with_the_other_sides() {
    for n in 0..=3 {
        let paths = gf_paths_enum::<BigInt>(n);
        assert_eq!(paths, gf_sbcspp(n), "n = {n}");
        assert_eq!(paths, gf_dpp_pairs(n), "n = {n}");
        if n > 0 {
            assert_eq!(paths, gf_lgv(n).unwrap(), "n = {n}");
        }
    }
}

#[test]
fn lgv_per_source_set() {
    for n in 1..=3 {
        let w = w_matrix::<BigInt>(n);
        for subset in 0u32..(1 << n) {
            assert_eq!(lgv_subset(&w, n, subset).unwrap(), gf_paths_with_sources(n, subset), "n = {n}, S = {subset:b}");
        }
    }
}

#[test]
fn families_and_pairs_correspond() {
    for n in 0..=3 {
        let mut seen = BTreeSet::new();
        for_each_extended_family(n, |f| {
            let p = family_to_dpp_pair(f).unwrap();
            assert_eq!(p.weight::<BigInt>(), f.weight().unwrap());
            assert_eq!(&dpp_pair_to_family(&p).unwrap(), f);
            assert!(seen.insert(p.to_string()));
        });
        assert_eq!(seen.len(), asmdpp::dpp_side::enumerate_dpp_pairs(n).len());
    }
}

#[test]
fn the_order_eight_family_gives_the_displayed_pair() {
    let b = |e: u32| 1u32 << (e - 1);
    let left = vec![
        vec![b(8), b(7), b(6), b(5), b(3), b(2), b(1)],
        vec![b(7), b(6), b(4), b(2), b(1)],
        vec![b(5), b(3), b(2)],
        vec![b(3), b(1)],
    ];
    let right = vec![vec![8, 8, 7, 7, 6, 4, 1], vec![7, 6, 5, 5], vec![4, 4, 4], vec![3, 2]];
    let pair = DppPair::new(8, left, right).unwrap();
    let f = dpp_pair_to_family(&pair).unwrap();
    assert_eq!(f.sources(), vec![2, 3, 5, 7]);
    let diag: Vec<usize> =
        f.paths().iter().filter(|p| p.steps.last() == Some(&Step::G)).map(|p| p.i).collect();
    assert_eq!(diag, vec![5]);
    assert_eq!(family_to_dpp_pair(&f).unwrap(), pair);
}

#[test]
fn classical_paths_encode_dpps() {
    for n in 0..=4 {
        let families = enumerate_collapsed_families(PathKind::Classical, n);
        assert_eq!(families.len(), enumerate_dpp(n).len());
        let mut images = BTreeSet::new();
        for d in enumerate_dpp(n) {
            let f = dpp_to_paths(&d, n).unwrap();
            assert!(!f.sources().contains(&1));
            assert_eq!(paths_to_dpp(&f).unwrap(), d);
            images.insert(f.to_string());
        }
        let all: BTreeSet<String> = families.iter().map(|f| f.to_string()).collect();
        assert_eq!(images, all);
    }
}

#[test]
fn the_introduction_example_uses_sources_two_three_five_seven() {
    let d = Dpp::new(vec![vec![7, 6, 6, 5, 5], vec![5, 5, 4, 4], vec![3, 3], vec![2]]).unwrap();
    let f = dpp_to_paths(&d, 7).unwrap();
    assert_eq!(f.sources(), vec![2, 3, 5, 7]);
}

#[test]
fn sign_specialization_leaves_classical_paths() {
    let n = 2;
    let sign = Assignment::<BigInt>::sign(n);
    let mut survivors = 0;
    for f in enumerate_collapsed_families(PathKind::Extended, n) {
        let s = f.collapsed_weight::<BigInt>().unwrap().specialize_to_int(&sign).unwrap();
        let has_up = f.paths().iter().any(|p| p.steps.contains(&Step::U));
        let diagonals = f.paths().iter().filter(|p| p.steps.last() == Some(&Step::G)).count();
        if has_up {
            assert_eq!(s, BigInt::from(0));
        } else {
            assert_eq!(s, BigInt::from(if diagonals % 2 == 0 { 1 } else { -1 }));
            survivors += 1;
        }
    }
    assert!(survivors > 0);
    let total = gf_paths_enum::<BigInt>(n).sign_value().unwrap();
    assert_eq!(total, BigInt::from(enumerate_dpp(n).len()));
}

#[test]
fn empty_family() {
    let f = PathFamily::empty(3, PathKind::Extended);
    assert_eq!(f.weight::<BigInt>().unwrap(), Poly::v(3).pow(6));
    assert_eq!(family_to_dpp_pair(&f).unwrap(), DppPair::empty(3));
}

#[test]
fn json_step_lists() {
    let f = enumerate_extended_families(2).pop().unwrap();
    let s = serde_json::to_string(&f.paths()[0]).unwrap();
    assert!(s.starts_with("{\"i\":"));
    assert!(s.contains("\"steps\":[\""));
    let back: PathFamily = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
    assert_eq!(back, f);
}
