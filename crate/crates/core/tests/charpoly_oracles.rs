//! Three independent routes to the characteristic polynomial, the matching
//! identity for trees, and the coefficient quasi-order.

use graph_energy_core::charpoly::charpoly_from_matchings;
use graph_energy_core::enumerate::{prufer_decode, unicyclic_bipartite_from};
use graph_energy_core::{
    bipartite_b_coeffs, charpoly_auto, charpoly_cycle, charpoly_deletion, charpoly_general,
    charpoly_p6, charpoly_path, matching_numbers, quasi_order_compare, Graph, QuasiOrder,
};
use proptest::prelude::*;

#[test]
fn triple_agreement_for_families() {
    for n in 1..=24 {
        let g = Graph::path(n).unwrap();
        let rec = charpoly_path(n).unwrap();
        assert_eq!(rec, charpoly_general(&g), "path {n}");
        if let Some(&e) = g.edges().first() {
            assert_eq!(rec, charpoly_deletion(&g, e).unwrap(), "path {n}");
        }
    }
    for n in 3..=24 {
        let g = Graph::cycle(n).unwrap();
        let rec = charpoly_cycle(n).unwrap();
        assert_eq!(rec, charpoly_general(&g), "cycle {n}");
        for &e in g.edges() {
            assert_eq!(rec, charpoly_deletion(&g, e).unwrap(), "cycle {n} edge {e:?}");
        }
    }
    for n in 7..=24 {
        let g = Graph::p6(n).unwrap();
        let rec = charpoly_p6(n).unwrap();
        assert_eq!(rec, charpoly_general(&g), "p6 {n}");
        for &e in g.edges() {
            assert_eq!(rec, charpoly_deletion(&g, e).unwrap(), "p6 {n} edge {e:?}");
        }
    }
}

#[test]
fn known_small_polynomials() {
    // C_4: x^4 - 4x^2, C_6: x^6 - 6x^4 + 9x^2 - 4
    assert_eq!(charpoly_cycle(4).unwrap().to_string(), "x^4 - 4x^2");
    assert_eq!(charpoly_cycle(6).unwrap().to_string(), "x^6 - 6x^4 + 9x^2 - 4");
    assert_eq!(charpoly_path(3).unwrap().to_string(), "x^3 - 2x");
}

#[test]
fn quasi_order_incomparable_for_even_n() {
    for n in (8..=60).step_by(2) {
        let bc = bipartite_b_coeffs(&charpoly_cycle(n).unwrap()).unwrap();
        let bp = bipartite_b_coeffs(&charpoly_p6(n).unwrap()).unwrap();
        let r = quasi_order_compare(&bc, &bp);
        assert_eq!(r.verdict, QuasiOrder::Incomparable, "n = {n}");
        assert!(r.verify(&bc, &bp));
        assert!(r.witness_less.is_some() && r.witness_greater.is_some());
    }
    let bc = bipartite_b_coeffs(&charpoly_cycle(8).unwrap()).unwrap();
    let bp = bipartite_b_coeffs(&charpoly_p6(8).unwrap()).unwrap();
    let r = quasi_order_compare(&bc, &bp);
    // b_4(C_8) = 20 > 19 = b_4(P_8^6), and the order flips at k = 4
    assert_eq!((r.witness_greater, r.witness_less), (Some(2), Some(4)));
    assert_eq!((bc[2].clone(), bp[2].clone()), (20.into(), 19.into()));
    let bpath = bipartite_b_coeffs(&charpoly_path(6).unwrap()).unwrap();
    assert_eq!(quasi_order_compare(&bpath, &bpath).verdict, QuasiOrder::Equal);
}

fn prufer(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..n, n - 2)
}

proptest! {
    #[test]
    fn tree_matchings_give_charpoly((n, seq) in (3usize..=14).prop_flat_map(|n| (Just(n), prufer(n)))) {
        let t = Graph::new(n, &prufer_decode(&seq, n)).unwrap();
        let m = matching_numbers(&t).unwrap();
        prop_assert_eq!(charpoly_from_matchings(n, &m), charpoly_general(&t));
    }

    #[test]
    fn deletion_matches_general_on_unicyclic(
        (n, seq, choice) in (5usize..=16).prop_flat_map(|n| (Just(n), prufer(n), 0usize..100))
    ) {
        if let Some(g) = unicyclic_bipartite_from(&seq, n, choice) {
            let general = charpoly_general(&g);
            prop_assert_eq!(&charpoly_auto(&g), &general);
            for &e in g.edges() {
                prop_assert_eq!(&charpoly_deletion(&g, e).unwrap(), &general);
            }
            // bipartite graphs have b-coefficients, all nonnegative
            prop_assert!(bipartite_b_coeffs(&general).is_ok());
        }
    }

    #[test]
    fn quasi_order_is_antisymmetric(a in prop::collection::vec(0i64..5, 1..6), b in prop::collection::vec(0i64..5, 1..6)) {
        let a: Vec<_> = a.into_iter().map(Into::into).collect();
        let b: Vec<_> = b.into_iter().map(Into::into).collect();
        let ab = quasi_order_compare(&a, &b);
        let ba = quasi_order_compare(&b, &a);
        let flipped = match ab.verdict {
            QuasiOrder::Less => QuasiOrder::Greater,
            QuasiOrder::Greater => QuasiOrder::Less,
            v => v,
        };
        prop_assert_eq!(ba.verdict, flipped);
        prop_assert!(ab.verify(&a, &b));
    }
}
