//! Minimum-weight edge-discriminators on finite hypergraphs.
//!
//! An edge-discriminator labels vertices with non-negative integers so that
//! every edge sum is positive and no two edges share a sum. This crate
//! checks, constructs, bounds and exactly optimizes such labelings.
//!
//! ```
//! use hyperdisc::{exact_optimal, parse_hypergraph, validate_discriminator};
//!
//! let h = parse_hypergraph("a\nb\nc\n").unwrap();
//! let best = exact_optimal(&h).unwrap();
//! assert_eq!(best.optimal_weight, 6);
//! assert!(validate_discriminator(&h, &best.witness).unwrap().is_valid());
//! ```

pub mod analysis;
pub mod construct;
pub mod families;
pub mod geometry;
pub mod hypergraph;
pub mod reduce;
pub mod sidon;
pub mod solver;
pub mod text;

pub use analysis::{bounds, census, BoundsReport, CensusOptions, CensusReport};
pub use construct::{greedy_construct, weight_bound, Ordering};
pub use hypergraph::{
    edge_weight, edge_weights, total_weight, validate_discriminator, Hypergraph, HypergraphError, Labeling, Verdict,
    Weight,
};
pub use reduce::{reduce, IncidenceVector, ReducedHypergraph};
pub use solver::{exact_optimal, exact_optimal_with, SolveResult, SolverConfig};
pub use text::{format_labeling, parse_hypergraph, parse_labeling, serialize_hypergraph};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/hypergraphs.md")]
    mod hypergraphs {}
    #[doc = include_str!("../../../book/src/greedy.md")]
    mod greedy {}
    #[doc = include_str!("../../../book/src/exact-search.md")]
    mod exact_search {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/census.md")]
    mod census {}
    #[doc = include_str!("../../../book/src/sidon.md")]
    mod sidon {}
    #[doc = include_str!("../../../book/src/geometry.md")]
    mod geometry {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
