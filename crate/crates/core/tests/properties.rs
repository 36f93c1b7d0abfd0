mod common;

use hyperdisc::analysis::{bounds, max_matching, min_hitting_set};
use hyperdisc::construct::{greedy_construct, greedy_hitting_set, hitting_set_setup, weight_bound, Ordering};
use hyperdisc::{
    edge_weights, exact_optimal, format_labeling, parse_hypergraph, parse_labeling, reduce, serialize_hypergraph,
    validate_discriminator, Hypergraph, Labeling, Weight,
};
use proptest::prelude::*;
use rand_chacha::rand_core::SeedableRng;

use common::{random_hypergraph, random_initial, random_ordering};

/// Smallest total weight of a discriminator, by listing every labeling of
/// each total in turn.
fn brute_force_optimum(h: &Hypergraph) -> Weight {
    fn compositions(
        total: Weight,
        parts: usize,
        prefix: &mut Vec<Weight>,
        out: &mut dyn FnMut(&[Weight]) -> bool,
    ) -> bool {
        if parts == 1 {
            prefix.push(total);
            let hit = out(prefix);
            prefix.pop();
            return hit;
        }
        for first in 0..=total {
            prefix.push(first);
            let hit = compositions(total - first, parts - 1, prefix, out);
            prefix.pop();
            if hit {
                return true;
            }
        }
        false
    }
    (1..)
        .find(|&w| {
            compositions(w, h.vertex_count(), &mut Vec::new(), &mut |values| {
                validate_discriminator(h, &Labeling::from_values(values.to_vec()))
                    .unwrap()
                    .is_valid()
            })
        })
        .unwrap()
}

fn hypergraphs(max_edges: usize, max_vertices: usize) -> impl Strategy<Value = Hypergraph> {
    any::<u64>().prop_map(move |seed| {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        random_hypergraph(&mut rng, max_edges, max_vertices)
    })
}

fn with_setup() -> impl Strategy<Value = (Hypergraph, Ordering, Labeling)> {
    any::<u64>().prop_map(|seed| {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let h = random_hypergraph(&mut rng, 6, 10);
        let m = h.vertex_count();
        let ord = random_ordering(&mut rng, m);
        let init = random_initial(&mut rng, m);
        (h, ord, init)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solver_matches_brute_force(h in hypergraphs(4, 4)) {
        let got = exact_optimal(&h).unwrap();
        prop_assert_eq!(got.optimal_weight, brute_force_optimum(&h));
        prop_assert_eq!(got.witness.total_weight(), got.optimal_weight);
        prop_assert!(validate_discriminator(&h, &got.witness).unwrap().is_valid());
    }

    #[test]
    fn optimum_is_preserved_by_reduction(h in hypergraphs(5, 7)) {
        let direct = exact_optimal(&h).unwrap().optimal_weight;
        let reduced = exact_optimal(&reduce(&h).unwrap().to_hypergraph()).unwrap().optimal_weight;
        prop_assert_eq!(direct, reduced);
    }

    #[test]
    fn greedy_is_valid_and_certified((h, ord, init) in with_setup()) {
        let lab = greedy_construct(&h, &ord, &init).unwrap();
        prop_assert!(validate_discriminator(&h, &lab).unwrap().is_valid());
        prop_assert!(lab.total_weight() <= weight_bound(&h, &ord, &init).unwrap());
        for v in 0..h.vertex_count() {
            prop_assert!(lab.get(v) >= init.get(v));
        }
    }

    #[test]
    fn hitting_set_setup_meets_its_bound(h in hypergraphs(6, 10)) {
        let hs = greedy_hitting_set(&h);
        let (ord, init) = hitting_set_setup(&h, &hs);
        let lab = greedy_construct(&h, &ord, &init).unwrap();
        let n = h.edge_count() as Weight;
        prop_assert!(validate_discriminator(&h, &lab).unwrap().is_valid());
        prop_assert!(lab.total_weight() <= n * (n - 1) / 2 + hs.len() as Weight);
    }

    #[test]
    fn bounds_sandwich_the_optimum(h in hypergraphs(5, 8)) {
        let b = bounds(&h).unwrap();
        let w = exact_optimal(&h).unwrap().optimal_weight;
        prop_assert!(b.lower <= w && w <= b.upper());
        let m = max_matching(&h).unwrap();
        for (k, &i) in m.edges.iter().enumerate() {
            for &j in &m.edges[k + 1..] {
                prop_assert!(h.edges()[i].iter().all(|v| !h.edges()[j].contains(v)));
            }
        }
        let hs = min_hitting_set(&h).unwrap();
        prop_assert!(h.edges().iter().all(|e| e.iter().any(|v| hs.members.contains(v))));
    }

    #[test]
    fn validation_agrees_on_reduced_form(h in hypergraphs(5, 8), seed in any::<u64>()) {
        let values: Vec<Weight> = (0..h.vertex_count() as u64).map(|v| (seed >> (v * 3)) & 7).collect();
        let lab = Labeling::from_values(values);
        let r = reduce(&h).unwrap();
        let totals = r.class_totals(&lab);
        prop_assert_eq!(edge_weights(&h, &lab).unwrap(), r.edge_weights(&totals));
        let lifted = r.lift(&totals);
        prop_assert_eq!(
            validate_discriminator(&h, &lab).unwrap().is_valid(),
            validate_discriminator(&h, &lifted).unwrap().is_valid()
        );
    }

    #[test]
    fn reports_round_trip(h in hypergraphs(6, 10)) {
        let again = parse_hypergraph(&serialize_hypergraph(&h)).unwrap();
        prop_assert_eq!(again.edge_count(), h.edge_count());
        let lab = exact_optimal(&h).unwrap().witness;
        let text = format_labeling(&h, &lab).unwrap();
        prop_assert_eq!(parse_labeling(&h, &text).unwrap(), lab);
    }
}
