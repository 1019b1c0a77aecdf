//! Ring laws in `Q[x][s]/(s^2 - x^2 - 4)` and the basic facts about `Z1`, `Z2`.

use graph_energy_core::surd::s_squared;
use graph_energy_core::{IntPoly, SurdElem};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-20i64..=20, 0..6).prop_map(|c| IntPoly::from_i64s(&c))
}

fn elem() -> impl Strategy<Value = SurdElem> {
    (small_poly(), small_poly()).prop_map(|(u, v)| SurdElem::from_int_parts(u, v))
}

proptest! {
    #[test]
    fn addition_and_multiplication_commute(a in elem(), b in elem()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_associates(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn distributive(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn identities_and_inverses(a in elem()) {
        prop_assert_eq!(&a + &SurdElem::zero(), a.clone());
        prop_assert_eq!(&a * &SurdElem::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn norm_is_multiplicative(a in elem(), b in elem()) {
        let lhs = (&a * &b).norm();
        let rhs = &a.norm() * &b.norm();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn conjugation_and_reflection_are_homomorphisms(a in elem(), b in elem()) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a * &b).reflect(), &a.reflect() * &b.reflect());
        prop_assert_eq!((&a + &b).reflect(), &a.reflect() + &b.reflect());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in elem(), b in elem(), x in -3.0f64..3.0) {
        let prod = (&a * &b).eval_f64(x);
        let want = a.eval_f64(x) * b.eval_f64(x);
        prop_assert!((prod - want).abs() <= 1e-9 * (1.0 + want.abs()));
    }
}

#[test]
fn s_squares_to_x2_plus_4() {
    let s = SurdElem::s();
    assert_eq!(&s * &s, SurdElem::from_int(s_squared()));
    assert_eq!(s_squared(), IntPoly::from_i64s(&[4, 0, 1]));
}

#[test]
fn z_relations() {
    let (z1, z2) = (SurdElem::z1(), SurdElem::z2());
    assert_eq!(&z1 * &z2, -SurdElem::one());
    assert_eq!(&z1 + &z2, SurdElem::x());
    assert_eq!(z1.conj(), z2);
}

#[test]
fn power_sums_are_rational() {
    let (z1, z2) = (SurdElem::z1(), SurdElem::z2());
    for n in 0..=60u32 {
        let t = &z1.pow(n) + &z2.pow(n);
        assert!(t.is_rational(), "n = {n}");
        assert!(t.denominator() == &1.into(), "n = {n}");
    }
}
