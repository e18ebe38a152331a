use asmdpp::laurent::{determinant, mat_mul};
use asmdpp::{Assignment, Error, LaurentPoly, Monomial, Poly, PolyMatrix, Var};
use num_bigint::BigInt;
use num_rational::Ratio;
use proptest::prelude::*;

const N: usize = 2;

fn term() -> impl Strategy<Value = ([i32; 5], i64)> {
    (prop::array::uniform5(-2i32..=2), -4i64..=4)
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(term(), 0..5).prop_map(|ts| {
        ts.into_iter().fold(Poly::zero(N), |acc, (e, c)| {
            acc + Poly::term(Monomial::new(e[0], e[1], e[2], &e[3..]), BigInt::from(c))
        })
    })
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn matrix(dim: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(prop::collection::vec(poly(), dim), dim)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly::zero(N));
        prop_assert_eq!(&a * &Poly::one(N), a.clone());
    }

    #[test]
    fn text_and_json_round_trip(a in poly()) {
        prop_assert_eq!(Poly::parse_text(&a.to_text(), N).unwrap(), a.clone());
        prop_assert_eq!(Poly::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn exact_division_recovers_the_factor(a in poly(), b in nonzero_poly()) {
        let p = &a * &b;
        prop_assert_eq!(p.divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn determinant_alternates(m in matrix(3)) {
        let d = determinant(N, &m).unwrap();
        let mut swapped = m.clone();
        swapped.swap(0, 2);
        prop_assert_eq!(determinant(N, &swapped).unwrap(), -d.clone());
        let mut repeated = m.clone();
        repeated[1] = repeated[0].clone();
        prop_assert!(determinant(N, &repeated).unwrap().is_zero());
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(2), b in matrix(2)) {
        let ab = mat_mul(N, &a, &b).unwrap();
        prop_assert_eq!(determinant(N, &ab).unwrap(), &determinant(N, &a).unwrap() * &determinant(N, &b).unwrap());
    }

    #[test]
    fn specialization_is_a_homomorphism(a in poly(), b in poly(), x in prop::sample::select(vec![-1i64, 1])) {
        // units only: negative exponents must stay integral
        let s = Assignment::new().int(Var::U, -1).int(Var::V, -1).int(Var::X(1), x);
        let lhs = (&a * &b).specialize(&s).unwrap();
        prop_assert_eq!(lhs, &a.specialize(&s).unwrap() * &b.specialize(&s).unwrap());
    }

    #[test]
    fn machine_integers_agree_with_big_ones(es in prop::collection::vec(term(), 0..4)) {
        let small = es.iter().fold(LaurentPoly::<i64>::zero(N), |acc, (e, c)| {
            acc + LaurentPoly::term(Monomial::new(e[0], e[1], e[2], &e[3..]), *c)
        });
        let big = es.iter().fold(Poly::zero(N), |acc, (e, c)| {
            acc + Poly::term(Monomial::new(e[0], e[1], e[2], &e[3..]), BigInt::from(*c))
        });
        prop_assert_eq!((&small * &small).to_text(), (&big * &big).to_text());
    }
}

#[test]
fn rings_of_different_size_do_not_mix() {
    let a = Poly::x(1, 1);
    let b = Poly::x(2, 1);
    assert_eq!(a.checked_add(&b), Err(Error::RingMismatch { left: 1, right: 2 }));
}

#[test]
fn rational_coefficients_invert_scalars() {
    type Q = LaurentPoly<Ratio<i64>>;
    let half = Q::constant(1, Ratio::new(1, 2));
    let two = Q::from_int(1, 2);
    assert_eq!(&half * &two, Q::one(1));
}

#[test]
fn vandermonde_three() {
    let n = 3;
    let m: PolyMatrix = (1..=n).map(|i| (0..n as u32).map(|j| Poly::x(n, i).pow(j)).collect()).collect();
    let mut want = Poly::one(n);
    for i in 1..=n {
        for j in i + 1..=n {
            want = &want * &(Poly::x(n, j) - Poly::x(n, i));
        }
    }
    assert_eq!(determinant(n, &m).unwrap(), want);
}

#[test]
fn poles_are_reported() {
    let p = Poly::monomial(Monomial::var_pow(1, Var::X(1), -1));
    let s = Assignment::new().int(Var::X(1), 0);
    assert!(matches!(p.specialize(&s), Err(Error::Pole(_))));
}
