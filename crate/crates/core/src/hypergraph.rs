//! Hypergraphs, vertex labelings and the edge-discriminator check.
//!
//! Vertices are opaque string tokens, but every algorithm in the crate works
//! on dense indices: vertex `k` is the `k`-th entry of
//! [`Hypergraph::vertices`], edge `i` is the `i`-th entry of
//! [`Hypergraph::edges`]. Indices are zero-based in the API and rendered
//! one-based in every text report.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Vertex labels and edge sums. Desk-scale instances stay far below `u64::MAX`.
pub type Weight = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("edge {edge} is empty")]
    EmptyEdge { edge: usize },
    #[error("edge {second} repeats edge {first}")]
    DuplicateEdge { first: usize, second: usize },
    #[error("edge {edge} references vertex index {vertex} but only {count} vertices exist")]
    UnknownVertex { edge: usize, vertex: usize, count: usize },
    #[error("vertex `{0}` is listed twice")]
    DuplicateVertex(String),
    #[error("unknown edge index {index} (hypergraph has {count} edges)")]
    UnknownEdge { index: usize, count: usize },
    #[error("labeling has {got} entries but the hypergraph has {expected} vertices")]
    LabelingSize { expected: usize, got: usize },
}

/// A finite hypergraph with distinct, non-empty edges.
///
/// Each edge is stored as a strictly increasing list of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph from an explicit vertex list and index-based edges.
    ///
    /// Vertices that no edge references are kept as isolated vertices.
    pub fn new(vertices: Vec<String>, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        let mut index = HashMap::with_capacity(vertices.len());
        for (k, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), k).is_some() {
                return Err(HypergraphError::DuplicateVertex(v.clone()));
            }
        }
        let mut normalized: Vec<Vec<usize>> = Vec::with_capacity(edges.len());
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::with_capacity(edges.len());
        for (i, mut edge) in edges.into_iter().enumerate() {
            edge.sort_unstable();
            edge.dedup();
            if edge.is_empty() {
                return Err(HypergraphError::EmptyEdge { edge: i });
            }
            if let Some(&v) = edge.iter().find(|&&v| v >= vertices.len()) {
                return Err(HypergraphError::UnknownVertex {
                    edge: i,
                    vertex: v,
                    count: vertices.len(),
                });
            }
            if let Some(&first) = seen.get(&edge) {
                return Err(HypergraphError::DuplicateEdge { first, second: i });
            }
            seen.insert(edge.clone(), i);
            normalized.push(edge);
        }
        Ok(Self {
            vertices,
            index,
            edges: normalized,
        })
    }

    /// Builds a hypergraph from edges given as vertex tokens; vertices are
    /// numbered in order of first appearance.
    pub fn from_edges<I, E, S>(edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut vertices: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut indexed = Vec::new();
        for edge in edges {
            let mut e = Vec::new();
            for token in edge {
                let token = token.as_ref();
                let k = match index.get(token) {
                    Some(&k) => k,
                    None => {
                        vertices.push(token.to_string());
                        index.insert(token.to_string(), vertices.len() - 1);
                        vertices.len() - 1
                    }
                };
                e.push(k);
            }
            indexed.push(e);
        }
        Self::new(vertices, indexed)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Result<&[usize], HypergraphError> {
        self.edges
            .get(i)
            .map(Vec::as_slice)
            .ok_or(HypergraphError::UnknownEdge {
                index: i,
                count: self.edges.len(),
            })
    }

    /// Number of edges containing each vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Whether some two edges share a vertex.
    pub fn has_intersecting_pair(&self) -> bool {
        self.degrees().iter().any(|&d| d >= 2)
    }
}

/// A vertex labeling `vertex index -> non-negative weight`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Labeling {
    values: Vec<Weight>,
}

impl Labeling {
    pub fn zeros(vertex_count: usize) -> Self {
        Self {
            values: vec![0; vertex_count],
        }
    }

    pub fn from_values(values: Vec<Weight>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[Weight] {
        &self.values
    }

    pub fn get(&self, v: usize) -> Weight {
        self.values[v]
    }

    pub fn set(&mut self, v: usize, w: Weight) {
        self.values[v] = w;
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Sum of all labels.
    pub fn total_weight(&self) -> Weight {
        self.values.iter().sum()
    }

    fn check_size(&self, h: &Hypergraph) -> Result<(), HypergraphError> {
        if self.values.len() != h.vertex_count() {
            return Err(HypergraphError::LabelingSize {
                expected: h.vertex_count(),
                got: self.values.len(),
            });
        }
        Ok(())
    }
}

/// Free-function form of [`Labeling::total_weight`].
pub fn total_weight(labeling: &Labeling) -> Weight {
    labeling.total_weight()
}

/// Sum of the labels on edge `i`.
pub fn edge_weight(h: &Hypergraph, labeling: &Labeling, i: usize) -> Result<Weight, HypergraphError> {
    labeling.check_size(h)?;
    Ok(h.edge(i)?.iter().map(|&v| labeling.get(v)).sum())
}

/// All edge weights, in edge order.
pub fn edge_weights(h: &Hypergraph, labeling: &Labeling) -> Result<Vec<Weight>, HypergraphError> {
    labeling.check_size(h)?;
    Ok(h.edges()
        .iter()
        .map(|e| e.iter().map(|&v| labeling.get(v)).sum())
        .collect())
}

/// Outcome of checking the edge-discriminator property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid {
        edge_weights: Vec<Weight>,
    },
    /// Edge `edge` has weight zero.
    ZeroEdge {
        edge: usize,
    },
    /// Two edges (`first < second`) carry the same weight.
    Collision {
        first: usize,
        second: usize,
        weight: Weight,
    },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Valid { .. } => write!(f, "valid"),
            Verdict::ZeroEdge { edge } => write!(f, "violation: edge {} has weight 0", edge + 1),
            Verdict::Collision { first, second, weight } => write!(
                f,
                "violation: edges {} and {} both weigh {}",
                first + 1,
                second + 1,
                weight
            ),
        }
    }
}

/// Checks that every edge weight is positive and that all edge weights are
/// pairwise distinct. The first zero edge (in edge order) is reported before
/// any collision; among collisions the lexicographically first pair wins.
pub fn validate_discriminator(h: &Hypergraph, labeling: &Labeling) -> Result<Verdict, HypergraphError> {
    let weights = edge_weights(h, labeling)?;
    Ok(verdict_for(weights))
}

pub(crate) fn verdict_for(weights: Vec<Weight>) -> Verdict {
    if let Some(edge) = weights.iter().position(|&w| w == 0) {
        return Verdict::ZeroEdge { edge };
    }
    let mut first_at: HashMap<Weight, usize> = HashMap::with_capacity(weights.len());
    let mut best: Option<(usize, usize)> = None;
    for (j, &w) in weights.iter().enumerate() {
        if let Some(&i) = first_at.get(&w) {
            if best.is_none_or(|b| (i, j) < b) {
                best = Some((i, j));
            }
        } else {
            first_at.insert(w, j);
        }
    }
    match best {
        Some((first, second)) => Verdict::Collision {
            first,
            second,
            weight: weights[first],
        },
        None => Verdict::Valid { edge_weights: weights },
    }
}
