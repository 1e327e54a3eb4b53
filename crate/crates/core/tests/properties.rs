//! Property tests for construction invariants and per-edge contribution
//! identities.

use proptest::prelude::*;

use hexdn::construct::{build_family, Family, FamilyParam};
use hexdn::indices::{find_index, Term};
use hexdn::partition::{degree_partition, sum_partition, PairKey};
use hexdn::poly::{rat_int, Poly};

fn family_strategy() -> impl Strategy<Value = Family> {
    prop_oneof![
        Just(Family::Hdn3),
        Just(Family::Thdn3),
        Just(Family::Rhdn3)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_graphs_are_simple_symmetric_and_counted(
        family in family_strategy(),
        r in 2u32..=9,
    ) {
        let g = build_family(FamilyParam::new(family, r)).unwrap();
        prop_assert_eq!(g.vertex_count() as u64, family.vertex_count_formula(r));
        prop_assert_eq!(g.edge_count() as u64, family.edge_count_formula(r));

        // handshake, exactly
        let degree_total: usize = g.degree_histogram().iter().map(|(d, c)| d * c).sum();
        prop_assert_eq!(degree_total, 2 * g.edge_count());

        // edge list is strictly ascending (no loops, no duplicates, sorted)
        let edges = g.edge_list();
        prop_assert_eq!(edges.len(), g.edge_count());
        for (u, v) in &edges {
            prop_assert!(u < v);
        }
        for w in edges.windows(2) {
            prop_assert!(w[0] < w[1]);
        }

        // symmetry through the public api
        for v in g.vertices().iter().step_by(7) {
            for w in g.neighbors(v).unwrap() {
                prop_assert!(g.is_adjacent(w, v));
            }
        }

        // every inserted vertex has degree 4
        for v in g.vertices().iter().filter(|v| v.is_face()) {
            prop_assert_eq!(g.degree(v).unwrap(), 4);
        }
    }

    #[test]
    fn builds_are_reproducible(family in family_strategy(), r in 2u32..=7) {
        let a = build_family(FamilyParam::new(family, r)).unwrap();
        let b = build_family(FamilyParam::new(family, r)).unwrap();
        prop_assert_eq!(a.vertices(), b.vertices());
        prop_assert_eq!(a.edge_list(), b.edge_list());
    }

    #[test]
    fn partition_totals_are_the_edge_count(
        family in family_strategy(),
        r in 2u32..=8,
    ) {
        let g = build_family(FamilyParam::new(family, r)).unwrap();
        prop_assert_eq!(degree_partition(&g).total(), g.edge_count() as u64);
        prop_assert_eq!(sum_partition(&g).total(), g.edge_count() as u64);
    }

    #[test]
    fn pair_key_is_order_insensitive(x in 1u64..1000, y in 1u64..1000) {
        let k = PairKey::new(x, y);
        prop_assert_eq!(k, PairKey::new(y, x));
        prop_assert!(k.lo() <= k.hi());
    }

    #[test]
    fn rezg_contribution_identities(x in 1u64..500, y in 1u64..500) {
        let rezg1 = find_index("ReZG1").unwrap();
        let rezg2 = find_index("ReZG2").unwrap();
        let rezg3 = find_index("ReZG3").unwrap();
        let m1 = find_index("M1").unwrap();
        let m2 = find_index("M2").unwrap();
        let exact = |t: Term| match t {
            Term::Exact(q) => q,
            Term::Approx(_) => panic!("expected exact contribution"),
        };
        let (a, b) = (
            exact(rezg1.contribution(x, y).unwrap()),
            exact(rezg2.contribution(x, y).unwrap()),
        );
        // per edge, the two redefined Zagreb contributions are reciprocal
        prop_assert_eq!(a * b, rat_int(1));
        // and the third is the product of the two classical Zagreb terms
        prop_assert_eq!(
            exact(rezg3.contribution(x, y).unwrap()),
            exact(m1.contribution(x, y).unwrap()) * exact(m2.contribution(x, y).unwrap())
        );
    }

    #[test]
    fn ga_contribution_lies_in_unit_interval(x in 1u64..500, y in 1u64..500) {
        let ga = find_index("GA").unwrap();
        let v = match ga.contribution(x, y).unwrap() {
            Term::Exact(q) => hexdn::poly::rat_to_f64(q),
            Term::Approx(f) => f,
        };
        prop_assert!(v > 0.0 && v <= 1.0 + 1e-15);
        if x == y {
            prop_assert!((v - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn poly_eval_matches_naive_expansion(
        coeffs in prop::collection::vec(-100i128..100, 0..5),
        r in -20i64..20,
    ) {
        let p = Poly::from_ints(&coeffs);
        let mut expected = rat_int(0);
        for (k, &c) in coeffs.iter().enumerate() {
            expected += rat_int(c) * rat_int(r as i128).pow(k as i32);
        }
        prop_assert_eq!(p.eval(r), expected);
    }
}
