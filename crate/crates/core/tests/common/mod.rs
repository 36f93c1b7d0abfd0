#![allow(dead_code)]

use hyperdisc::construct::Ordering;
use hyperdisc::{Hypergraph, Labeling};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A hypergraph on up to `max_vertices` vertices with 1..=`max_edges`
/// distinct non-empty edges. Some vertices may be isolated.
pub fn random_hypergraph(rng: &mut impl Rng, max_edges: usize, max_vertices: usize) -> Hypergraph {
    let m = rng.random_range(1..=max_vertices);
    let limit = (1usize << m) - 1;
    let n = rng.random_range(1..=max_edges.min(limit));
    let mut masks: Vec<usize> = Vec::with_capacity(n);
    while masks.len() < n {
        let mask = rng.random_range(1..=limit);
        if !masks.contains(&mask) {
            masks.push(mask);
        }
    }
    let vertices = (1..=m).map(|i| format!("v{i}")).collect();
    let edges = masks
        .iter()
        .map(|&s| (0..m).filter(|&v| s >> v & 1 == 1).collect())
        .collect();
    Hypergraph::new(vertices, edges).unwrap()
}

pub fn random_ordering(rng: &mut impl Rng, m: usize) -> Ordering {
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(rng);
    Ordering::new(order).unwrap()
}

/// Initial labels: each vertex is 0 with probability one half, else 1..=3.
pub fn random_initial(rng: &mut impl Rng, m: usize) -> Labeling {
    Labeling::from_values(
        (0..m)
            .map(|_| {
                if rng.random_bool(0.5) {
                    0
                } else {
                    rng.random_range(1..=3)
                }
            })
            .collect(),
    )
}

pub fn pairwise_disjoint(h: &Hypergraph) -> bool {
    !h.has_intersecting_pair()
}
