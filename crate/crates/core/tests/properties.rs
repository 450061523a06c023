use proptest::prelude::*;

use regulus::boolean_idempotents::{bool_functor_on_hom, boolean_algebra_of};
use regulus::lattice::{BooleanHom, FiniteBooleanAlgebra};
use regulus::ring::{build_ring, enumerate_homs, localize_at_element, localize_by_fractions, FiniteRing, Ideal};
use regulus::spectrum::{primes_by_ideal_scan, radical_by_powers, radical_of_ideal, spectrum};
use regulus::stone_duality::{represent_boolean_hom, roundtrip_naturality};
use regulus::vn_hull::vn_hull;
use regulus::vn_regular::{is_vn_regular, vn_ring};

fn small_ring() -> impl Strategy<Value = FiniteRing> {
    let atom = prop_oneof![
        (1u64..=16).prop_map(|n| format!("Z/{n}")),
        Just("GF(4)".to_string()),
        Just("GF(8)".to_string()),
        Just("GF(9)".to_string()),
    ];
    prop::collection::vec(atom, 1..=2).prop_map(|parts| build_ring(&parts.join(" x ")).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn spectrum_matches_ideal_scan(r in small_ring()) {
        let spec = spectrum(&r);
        let scan = primes_by_ideal_scan(&r);
        prop_assert_eq!(spec.primes(), scan.as_slice());
    }

    #[test]
    fn radicals_agree(r in small_ring(), g in any::<prop::sample::Index>()) {
        let i = Ideal::closure(&r, &[g.index(r.card())]).unwrap();
        prop_assert_eq!(radical_of_ideal(&r, &i).unwrap(), radical_by_powers(&r, &i));
    }

    #[test]
    fn hull_kernel_is_nilradical(r in small_ring()) {
        let h = vn_hull(&r).unwrap();
        prop_assert_eq!(h.eta.kernel(), r.nilradical());
        prop_assert!(h.invariants().unwrap().all());
    }

    #[test]
    fn quasi_inverses_are_mutual(r in small_ring()) {
        if let Ok(v) = vn_ring(&r) {
            for a in r.elements() {
                let b = v.quasi_inverse(a).unwrap();
                prop_assert_eq!(r.mul(r.mul(a, b), a), a);
                prop_assert_eq!(r.mul(r.mul(b, a), b), b);
                prop_assert_eq!(v.quasi_inverse(b).unwrap(), a);
            }
        } else {
            prop_assert!(!r.is_reduced());
        }
    }

    #[test]
    fn localizations_agree(r in small_ring(), a in any::<prop::sample::Index>()) {
        let a = a.index(r.card());
        let (l1, e1) = localize_at_element(&r, a).unwrap();
        let (l2, e2) = localize_by_fractions(&r, a).unwrap();
        prop_assert_eq!(l1.card(), l2.card());
        prop_assert_eq!(e1.kernel(), e2.kernel());
    }

    #[test]
    fn boolean_functor_preserves_composition(a in small_ring(), b in 1u64..=6) {
        let mid = FiniteRing::zmod(b).unwrap();
        let end = FiniteRing::zmod(2).unwrap();
        for f in enumerate_homs(&a, &mid).unwrap() {
            for g in enumerate_homs(&mid, &end).unwrap() {
                let lhs = bool_functor_on_hom(&g.compose(&f).unwrap()).unwrap();
                let rhs = bool_functor_on_hom(&g).unwrap().compose(&bool_functor_on_hom(&f).unwrap()).unwrap();
                prop_assert_eq!(lhs.table(), rhs.table());
            }
        }
    }

    #[test]
    fn idempotent_count_is_a_power_of_two(r in small_ring()) {
        let b = boolean_algebra_of(&r).unwrap();
        prop_assert!(b.algebra.card().is_power_of_two());
        prop_assert_eq!(b.algebra.card(), 1 << spectrum(&r).len());
        prop_assert_eq!(is_vn_regular(&r).is_regular(), r.is_reduced());
    }

    #[test]
    fn random_boolean_homs_are_represented(m in 1usize..=3, n in 0usize..=3, seed in any::<u64>()) {
        let dual: Vec<usize> = (0..n).map(|i| ((seed >> (8 * i)) as usize) % m).collect();
        let h = BooleanHom::from_atom_map(
            FiniteBooleanAlgebra::powerset(m),
            FiniteBooleanAlgebra::powerset(n),
            &dual,
        ).unwrap();
        prop_assert!(roundtrip_naturality(&h).unwrap());
        let k = FiniteRing::galois_field(3).unwrap();
        prop_assert!(represent_boolean_hom(&h, &k).unwrap().square_commutes);
    }
}
