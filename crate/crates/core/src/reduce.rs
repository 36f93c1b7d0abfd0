//! Incidence vectors and the reduced (vertex-class) form of a hypergraph.
//!
//! Two vertices lying in exactly the same edges are interchangeable for
//! discrimination: every edge sum depends only on the per-class totals, and
//! any class total can be carried by a single representative. Reduction
//! therefore merges such vertices and drops isolated ones without changing
//! the optimal weight.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::hypergraph::{Hypergraph, Labeling, Weight};

/// Largest edge count the bitmask-based machinery supports.
pub const MAX_EDGES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("{0} edges exceed the supported maximum of {MAX_EDGES}")]
    TooManyEdges(usize),
    #[error("incidence vector {0} is empty")]
    EmptyClass(IncidenceVector),
    #[error("incidence vector {0} appears twice")]
    DuplicateClass(IncidenceVector),
    #[error("incidence vector {vector} mentions edges beyond {edge_count}")]
    OutOfRange { vector: IncidenceVector, edge_count: usize },
    #[error("edge {0} contains no class")]
    EmptyEdge(usize),
    #[error("edges {0} and {1} contain the same classes")]
    EqualEdges(usize, usize),
}

/// The set of edges containing a vertex, as a bitmask over edge indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IncidenceVector(pub u64);

impl IncidenceVector {
    pub fn from_edges<I: IntoIterator<Item = usize>>(edges: I) -> Self {
        Self(edges.into_iter().fold(0, |m, i| m | (1u64 << i)))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, edge: usize) -> bool {
        self.0 >> edge & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Edge indices in increasing order.
    pub fn edges(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(i)
            }
        })
    }
}

/// Renders one-based edge indices joined by commas, e.g. `1,2,3`.
impl fmt::Display for IncidenceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in self.edges() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
            first = false;
        }
        Ok(())
    }
}

/// A hypergraph quotiented by identical incidence.
///
/// `classes` are distinct, non-empty incidence vectors; edge `i` is the set of
/// classes containing `i`. When produced by [`reduce`], `class_map[v]` gives
/// the class of original vertex `v` (`None` for isolated vertices) and
/// `representatives[c]` the first original vertex of class `c`. Synthetic
/// instances built with [`ReducedHypergraph::from_classes`] leave both empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedHypergraph {
    edge_count: usize,
    classes: Vec<IncidenceVector>,
    class_map: Vec<Option<usize>>,
    representatives: Vec<usize>,
}

impl ReducedHypergraph {
    /// Validates and wraps a list of incidence vectors over `edge_count` edges.
    pub fn from_classes(edge_count: usize, classes: Vec<IncidenceVector>) -> Result<Self, ReduceError> {
        if edge_count > MAX_EDGES {
            return Err(ReduceError::TooManyEdges(edge_count));
        }
        let full = full_mask(edge_count);
        let mut seen = std::collections::HashSet::with_capacity(classes.len());
        for &c in &classes {
            if c.is_empty() {
                return Err(ReduceError::EmptyClass(c));
            }
            if c.0 & !full != 0 {
                return Err(ReduceError::OutOfRange { vector: c, edge_count });
            }
            if !seen.insert(c) {
                return Err(ReduceError::DuplicateClass(c));
            }
        }
        let r = Self {
            edge_count,
            classes,
            class_map: Vec::new(),
            representatives: Vec::new(),
        };
        let supports = r.edge_supports();
        if let Some(i) = supports.iter().position(|s| s.is_empty()) {
            return Err(ReduceError::EmptyEdge(i));
        }
        let mut first: HashMap<&Vec<usize>, usize> = HashMap::new();
        for (i, s) in supports.iter().enumerate() {
            if let Some(&j) = first.get(s) {
                return Err(ReduceError::EqualEdges(j, i));
            }
            first.insert(s, i);
        }
        Ok(r)
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn classes(&self) -> &[IncidenceVector] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_map(&self) -> &[Option<usize>] {
        &self.class_map
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    /// Class indices contained in each edge.
    pub fn edge_supports(&self) -> Vec<Vec<usize>> {
        let mut supports = vec![Vec::new(); self.edge_count];
        for (c, class) in self.classes.iter().enumerate() {
            for i in class.edges() {
                supports[i].push(c);
            }
        }
        supports
    }

    /// Edge sums under per-class values.
    pub fn edge_weights(&self, class_values: &[Weight]) -> Vec<Weight> {
        let mut sums = vec![0; self.edge_count];
        for (class, &x) in self.classes.iter().zip(class_values) {
            for i in class.edges() {
                sums[i] += x;
            }
        }
        sums
    }

    /// Pushes an original-vertex labeling down to class totals.
    pub fn class_totals(&self, labeling: &Labeling) -> Vec<Weight> {
        let mut totals = vec![0; self.classes.len()];
        for (v, c) in self.class_map.iter().enumerate() {
            if let Some(c) = c {
                totals[*c] += labeling.get(v);
            }
        }
        totals
    }

    /// Lifts class values to the original vertex set by placing each class
    /// value on the class representative.
    pub fn lift(&self, class_values: &[Weight]) -> Labeling {
        let mut labeling = Labeling::zeros(self.class_map.len());
        for (&rep, &x) in self.representatives.iter().zip(class_values) {
            labeling.set(rep, x);
        }
        labeling
    }

    /// A plain hypergraph with one vertex `c<k>` per class (one-based).
    pub fn to_hypergraph(&self) -> Hypergraph {
        let vertices = (1..=self.classes.len()).map(|k| format!("c{k}")).collect();
        Hypergraph::new(vertices, self.edge_supports()).expect("reduced invariants hold")
    }

    /// Semicolon-separated incidence vectors, e.g. `1,2,3;2,3;3`.
    pub fn render_classes(&self) -> String {
        self.classes.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(";")
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Incidence vector of every vertex of `h`.
pub fn incidence_vectors(h: &Hypergraph) -> Result<Vec<IncidenceVector>, ReduceError> {
    if h.edge_count() > MAX_EDGES {
        return Err(ReduceError::TooManyEdges(h.edge_count()));
    }
    let mut inc = vec![IncidenceVector::default(); h.vertex_count()];
    for (i, e) in h.edges().iter().enumerate() {
        for &v in e {
            inc[v].0 |= 1 << i;
        }
    }
    Ok(inc)
}

/// Merges vertices with identical incidence and drops isolated vertices.
/// Classes appear in first-appearance order of their vertices.
pub fn reduce(h: &Hypergraph) -> Result<ReducedHypergraph, ReduceError> {
    let inc = incidence_vectors(h)?;
    let mut classes = Vec::new();
    let mut representatives = Vec::new();
    let mut class_map = vec![None; h.vertex_count()];
    let mut lookup: HashMap<IncidenceVector, usize> = HashMap::new();
    for (v, &vec) in inc.iter().enumerate() {
        if vec.is_empty() {
            continue;
        }
        let c = *lookup.entry(vec).or_insert_with(|| {
            classes.push(vec);
            representatives.push(v);
            classes.len() - 1
        });
        class_map[v] = Some(c);
    }
    Ok(ReducedHypergraph {
        edge_count: h.edge_count(),
        classes,
        class_map,
        representatives,
    })
}
