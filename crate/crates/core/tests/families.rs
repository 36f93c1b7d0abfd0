//! Closed-form families against the exact solver.

use hyperdisc::families::{
    cycle_optimal, disjoint, nested_chain, path_end2, path_optimal, power_set_optimal, r_partite_optimal, star, Family,
    PartSizes,
};
use hyperdisc::{exact_optimal, validate_discriminator};

fn agrees(f: &Family) {
    assert!(validate_discriminator(&f.hypergraph, &f.labeling).unwrap().is_valid());
    let best = exact_optimal(&f.hypergraph).unwrap();
    assert_eq!(best.optimal_weight, f.weight, "{:?}", f.hypergraph.edges());
}

#[test]
fn small_families_are_optimal() {
    for n in 1..=6 {
        agrees(&nested_chain(n).unwrap());
        agrees(&disjoint(n).unwrap());
        agrees(&star(n).unwrap());
    }
    for m in 1..=4 {
        agrees(&power_set_optimal(m).unwrap());
    }
}

#[test]
fn paths_and_cycles_are_optimal() {
    for m in 2..=10 {
        agrees(&path_optimal(m).unwrap());
    }
    for m in 3..=9 {
        agrees(&cycle_optimal(m).unwrap());
    }
}

#[test]
fn end_constrained_paths_discriminate() {
    for m in [4, 5, 8, 9, 12, 13, 16, 17] {
        let f = path_end2(m).unwrap();
        assert!(validate_discriminator(&f.hypergraph, &f.labeling).unwrap().is_valid());
    }
}

#[test]
fn partite_families_are_optimal() {
    for sizes in [
        vec![1],
        vec![2, 1],
        vec![2, 2],
        vec![3, 2],
        vec![3, 3],
        vec![4, 2],
        vec![2, 2, 2],
        vec![3, 2, 1],
    ] {
        agrees(&r_partite_optimal(&PartSizes::new(sizes).unwrap()).unwrap());
    }
}
