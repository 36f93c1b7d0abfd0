//! B_h sets and the labelings of uniform hypergraphs they induce.
//!
//! A set is B_h when all sums of `h` elements, repetition allowed, are
//! distinct. Labeling the vertices of an r-uniform hypergraph with a B_r
//! set makes every edge sum distinct.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::hypergraph::{Hypergraph, Labeling, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SidonError {
    #[error("order h must be at least 1")]
    ZeroOrder,
    #[error("edge {edge} has {size} vertices, expected {expected}")]
    NotUniform { edge: usize, size: usize, expected: usize },
    #[error("need 1 <= r <= m, got m={m}, r={r}")]
    Parameters { m: usize, r: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BhSet {
    pub h: usize,
    pub elements: Vec<Weight>,
}

/// Greedy B_h sequence: start at 1, then repeatedly take the least integer
/// that keeps the property.
pub fn greedy_bh(h: usize, count: usize) -> Result<BhSet, SidonError> {
    if h == 0 {
        return Err(SidonError::ZeroOrder);
    }
    // sums[k] holds every k-multiset sum of the current elements. A B_h set
    // is B_k for all k <= h, so each level is free of repeats.
    let mut sums: Vec<HashSet<Weight>> = vec![HashSet::new(); h + 1];
    sums[0].insert(0);
    let mut elements = Vec::with_capacity(count);
    let mut x: Weight = 1;
    while elements.len() < count {
        if let Some(levels) = extended_sums(&sums, x) {
            for (k, new) in levels.into_iter().enumerate() {
                sums[k].extend(new);
            }
            elements.push(x);
        }
        x += 1;
    }
    Ok(BhSet { h, elements })
}

/// New k-sums (k = 0..=h) that involve `x` at least once, or `None` if any
/// level would gain a repeated value.
fn extended_sums(sums: &[HashSet<Weight>], x: Weight) -> Option<Vec<Vec<Weight>>> {
    let h = sums.len() - 1;
    let mut levels = vec![Vec::new(); h + 1];
    for k in 1..=h {
        let mut seen = HashSet::new();
        for j in 1..=k as Weight {
            for &s in &sums[k - j as usize] {
                let t = s + j * x;
                if sums[k].contains(&t) || !seen.insert(t) {
                    return None;
                }
            }
        }
        levels[k] = seen.into_iter().collect();
    }
    Some(levels)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BhVerdict {
    Valid,
    /// Two different h-multisets with the same sum.
    Collision {
        left: Vec<Weight>,
        right: Vec<Weight>,
        sum: Weight,
    },
}

impl BhVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, BhVerdict::Valid)
    }
}

impl fmt::Display for BhVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BhVerdict::Valid => write!(f, "valid"),
            BhVerdict::Collision { left, right, sum } => write!(
                f,
                "collision: {} = {} = {}",
                left.iter().join("+"),
                right.iter().join("+"),
                sum
            ),
        }
    }
}

/// Checks the B_h property by listing every h-multiset in lexicographic
/// order. Reports the first multiset whose sum was already seen, with the
/// earlier one.
pub fn verify_bh(set: &BhSet) -> BhVerdict {
    let mut elements = set.elements.clone();
    elements.sort_unstable();
    let mut first = std::collections::HashMap::new();
    for combo in elements.iter().copied().combinations_with_replacement(set.h) {
        let sum: Weight = combo.iter().sum();
        if let Some(prev) = first.get(&sum) {
            return BhVerdict::Collision {
                left: Vec::clone(prev),
                right: combo,
                sum,
            };
        }
        first.insert(sum, combo);
    }
    BhVerdict::Valid
}

/// Labels the vertices of an r-uniform hypergraph, in vertex order, with the
/// greedy B_r set of the right size.
pub fn uniform_sidon_labeling(h: &Hypergraph) -> Result<Labeling, SidonError> {
    let r = h.edges().first().map_or(1, Vec::len);
    if let Some((edge, e)) = h.edges().iter().enumerate().find(|(_, e)| e.len() != r) {
        return Err(SidonError::NotUniform {
            edge,
            size: e.len(),
            expected: r,
        });
    }
    let set = greedy_bh(r, h.vertex_count())?;
    Ok(Labeling::from_values(set.elements))
}

/// `K^r_m`: all r-subsets of `v1..vm`, in lexicographic order.
pub fn complete_uniform(m: usize, r: usize) -> Result<Hypergraph, SidonError> {
    if r == 0 || r > m {
        return Err(SidonError::Parameters { m, r });
    }
    let vertices = (1..=m).map(|i| format!("v{i}")).collect();
    let edges = (0..m).combinations(r).collect();
    Ok(Hypergraph::new(vertices, edges).expect("subsets are distinct"))
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `⌈C(m,r)(C(m,r)+1) / (2 C(m−1,r−1))⌉`: the edge sums are `C(m,r)`
/// distinct positive integers and every vertex lies in `C(m−1,r−1)` edges.
pub fn complete_uniform_lower_bound(m: usize, r: usize) -> Result<Weight, SidonError> {
    if r == 0 || r > m {
        return Err(SidonError::Parameters { m, r });
    }
    let edges = binomial(m as u64, r as u64);
    let degree = binomial(m as u64 - 1, r as u64 - 1);
    Ok((edges * (edges + 1)).div_ceil(2 * degree))
}
