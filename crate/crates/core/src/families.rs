//! Closed-form optimal edge-discriminators for special hypergraphs.
//!
//! Each constructor returns the hypergraph, an optimal labeling and its
//! weight. Paths and cycles use vertices `v1..vm` with edges
//! `{v_i, v_{i+1}}` in order (plus `{v_m, v_1}` for cycles).

use thiserror::Error;

use crate::hypergraph::{Hypergraph, Labeling, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} needs {requirement}, got {got}")]
    Parameter {
        family: &'static str,
        requirement: &'static str,
        got: usize,
    },
    #[error("part sizes must be positive and non-increasing, got {0:?}")]
    PartSizes(Vec<usize>),
}

fn param(family: &'static str, requirement: &'static str, got: usize) -> FamilyError {
    FamilyError::Parameter {
        family,
        requirement,
        got,
    }
}

/// A hypergraph with a known optimal labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub hypergraph: Hypergraph,
    pub labeling: Labeling,
    pub weight: Weight,
}

impl Family {
    fn new(hypergraph: Hypergraph, labels: Vec<Weight>) -> Self {
        let labeling = Labeling::from_values(labels);
        let weight = labeling.total_weight();
        Self {
            hypergraph,
            labeling,
            weight,
        }
    }
}

fn named(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

pub fn path_hypergraph(m: usize) -> Hypergraph {
    let edges = (0..m.saturating_sub(1)).map(|i| vec![i, i + 1]).collect();
    Hypergraph::new(named("v", m), edges).expect("path edges are distinct")
}

pub fn cycle_hypergraph(m: usize) -> Hypergraph {
    let edges = (0..m).map(|i| vec![i, (i + 1) % m]).collect();
    Hypergraph::new(named("v", m), edges).expect("cycle edges are distinct for m >= 3")
}

/// `E_i = {1..i}` for `i = 1..n`, all labels 1, weight `n`.
pub fn nested_chain(n: usize) -> Result<Family, FamilyError> {
    if n < 1 {
        return Err(param("nested", "n >= 1", n));
    }
    let edges = (1..=n).map(|i| (0..i).collect()).collect();
    let h = Hypergraph::new(named("", n), edges).expect("chain edges are distinct");
    Ok(Family::new(h, vec![1; n]))
}

/// `n` pairwise disjoint singletons labeled `1..n`, weight `n(n+1)/2`.
pub fn disjoint(n: usize) -> Result<Family, FamilyError> {
    if n < 1 {
        return Err(param("disjoint", "n >= 1", n));
    }
    let h = Hypergraph::new(named("", n), (0..n).map(|i| vec![i]).collect()).expect("singletons");
    Ok(Family::new(h, (1..=n as Weight).collect()))
}

/// The star `T_n`: centre `c` joined to leaves `l1..ln`. Centre 1 and leaves
/// `0..n−1`, weight `n(n−1)/2 + 1`.
pub fn star(n: usize) -> Result<Family, FamilyError> {
    if n < 1 {
        return Err(param("star", "n >= 1", n));
    }
    let mut vertices = vec!["c".to_string()];
    vertices.extend(named("l", n));
    let h = Hypergraph::new(vertices, (1..=n).map(|l| vec![0, l]).collect()).expect("star edges");
    let mut labels = vec![1];
    labels.extend(0..n as Weight);
    Ok(Family::new(h, labels))
}

/// Maximum `m` accepted by [`power_set_optimal`]; the hypergraph has `2^m − 1` edges.
pub const MAX_POWER_SET: usize = 5;

/// All non-empty subsets of `m` vertices with labels `2^(i−1)`, weight `2^m − 1`.
pub fn power_set_optimal(m: usize) -> Result<Family, FamilyError> {
    if !(1..=MAX_POWER_SET).contains(&m) {
        return Err(param("powerset", "1 <= m <= 5", m));
    }
    let edges = (1u32..1 << m)
        .map(|s| (0..m).filter(|&i| s >> i & 1 == 1).collect())
        .collect();
    let h = Hypergraph::new(named("v", m), edges).expect("subsets are distinct");
    Ok(Family::new(h, (0..m).map(|i| 1 << i).collect()))
}

/// Path labels with both ends 0 and edge weights exactly `{1..m−1}`,
/// for `m ≡ 0, 1 (mod 4)`.
#[allow(clippy::needless_range_loop)]
fn path_labels_zero_ends(m: usize) -> Vec<Weight> {
    debug_assert!(matches!(m % 4, 0 | 1));
    let mut lab = vec![0 as Weight; m + 1]; // one-based
    if m.is_multiple_of(4) {
        // ramp 0,1,…,m/2 over v_1..v_{m/2+1}, then descending equal pairs
        for i in 1..=m / 2 + 1 {
            lab[i] = (i - 1) as Weight;
        }
        for i in m / 4 + 1..m / 2 {
            lab[2 * i] = (m - 2 * i) as Weight;
            lab[2 * i + 1] = (m - 2 * i) as Weight;
        }
    } else {
        let k = m / 4;
        for i in 1..=2 * k + 1 {
            lab[i] = (i - 1) as Weight;
        }
        if k >= 1 {
            lab[2 * k + 2] = (2 * k) as Weight;
        }
        for i in k + 1..2 * k {
            lab[2 * i + 1] = (m - 1 - 2 * i) as Weight;
            lab[2 * i + 2] = (m - 1 - 2 * i) as Weight;
        }
    }
    lab[m] = 0;
    lab.remove(0);
    lab
}

/// Path labels with ends `(0, 1)` and edge weights exactly `{1..m−1}`,
/// for `m ≡ 2, 3 (mod 4)`.
#[allow(clippy::needless_range_loop)]
fn path_labels_zero_one_ends(m: usize) -> Vec<Weight> {
    debug_assert!(m % 4 == 2 || m % 4 == 3);
    let mut lab = vec![0 as Weight; m + 1];
    if m % 4 == 2 {
        for i in 1..=m / 2 + 1 {
            lab[i] = (i - 1) as Weight;
        }
        // integer points of [m/4 + 3/2, m/2]
        for i in (m + 6) / 4..=m / 2 {
            lab[2 * i - 1] = (m + 1 - 2 * i) as Weight;
            lab[2 * i] = (m + 1 - 2 * i) as Weight;
        }
    } else {
        let k = m / 4;
        for i in 1..=2 * k + 2 {
            lab[i] = (i - 1) as Weight;
        }
        lab[2 * k + 3] = (2 * k + 1) as Weight;
        for i in k + 2..=2 * k + 1 {
            lab[2 * i] = (m - 2 * i) as Weight;
            lab[2 * i + 1] = (m - 2 * i) as Weight;
        }
    }
    lab.remove(0);
    lab
}

fn path_labels(m: usize) -> Vec<Weight> {
    match m % 4 {
        0 | 1 => path_labels_zero_ends(m),
        _ => path_labels_zero_one_ends(m),
    }
}

/// Optimal labeling of the path `P_m`, weight `⌈m(m−1)/4⌉`.
pub fn path_optimal(m: usize) -> Result<Family, FamilyError> {
    if m < 2 {
        return Err(param("path", "m >= 2", m));
    }
    Ok(Family::new(path_hypergraph(m), path_labels(m)))
}

fn path_end2_labels(m: usize) -> Vec<Weight> {
    match m {
        4 => vec![0, 1, 1, 2],
        5 => vec![0, 1, 1, 2, 2],
        _ => {
            // zero-ended optimum on P_{m−4}, then m−4, 1, m−3, 2
            let mut lab = path_labels_zero_ends(m - 4);
            let m = m as Weight;
            lab.extend([m - 4, 1, m - 3, 2]);
            lab
        }
    }
}

/// Path labeling with `λ(v_1) = 0`, `λ(v_m) = 2`, edge weights exactly
/// `{1..m−1}` and weight `m(m−1)/4 + 1`, for `m ≡ 0, 1 (mod 4)`, `m ≥ 4`.
pub fn path_end2(m: usize) -> Result<Family, FamilyError> {
    if m < 4 || !matches!(m % 4, 0 | 1) {
        return Err(param("path_end2", "m >= 4 with m = 0 or 1 mod 4", m));
    }
    Ok(Family::new(path_hypergraph(m), path_end2_labels(m)))
}

/// Optimal labeling of the cycle `C_m`, weight `⌈m(m+1)/4⌉`.
///
/// The labels are those of a path on `m + 1` vertices whose two end labels
/// are 0, with the ends identified.
pub fn cycle_optimal(m: usize) -> Result<Family, FamilyError> {
    if m < 3 {
        return Err(param("cycle", "m >= 3", m));
    }
    let mut open_path = match m % 4 {
        0 | 3 => path_labels_zero_ends(m + 1),
        _ => {
            let mut lab = path_end2_labels(m - 1);
            lab.extend([(m - 1) as Weight, 0]);
            lab
        }
    };
    debug_assert_eq!((open_path[0], open_path[m]), (0, 0));
    open_path.truncate(m);
    Ok(Family::new(cycle_hypergraph(m), open_path))
}

/// Part sizes `m_1 ≥ m_2 ≥ … ≥ m_r ≥ 1` of a complete r-partite hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartSizes(Vec<usize>);

impl PartSizes {
    pub fn new(sizes: Vec<usize>) -> Result<Self, FamilyError> {
        let sorted = sizes.windows(2).all(|w| w[0] >= w[1]);
        if sizes.is_empty() || sizes.contains(&0) || !sorted {
            return Err(FamilyError::PartSizes(sizes));
        }
        Ok(Self(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    /// `m_(q) = m_1 ⋯ m_q` for `q = 0..=r`, with `m_(0) = 1`.
    pub fn partial_products(&self) -> Vec<Weight> {
        let mut out = vec![1 as Weight];
        for &s in &self.0 {
            out.push(out.last().unwrap() * s as Weight);
        }
        out
    }

    /// `m_r + ½ Σ_q (m_q − 1)·m_(q)`.
    pub fn optimal_weight(&self) -> Weight {
        let prods = self.partial_products();
        let twice: Weight = self
            .0
            .iter()
            .enumerate()
            .map(|(q, &s)| (s as Weight - 1) * prods[q + 1])
            .sum();
        *self.0.last().unwrap() as Weight + twice / 2
    }
}

/// Cap on the number of edges `Π m_i` of [`r_partite_optimal`].
pub const MAX_PARTITE_EDGES: usize = 1 << 16;

/// Complete r-partite hypergraph with parts `A_1..A_r` (vertices `A<i>_<j>`)
/// and edges `A_1 × … × A_r`, labeled positionally: part `i < r` gets
/// `j·m_(i−1)` for `j = 0..m_i`, the last part gets `j·m_(r−1) + 1`. Edge
/// weights then run through `1..=Π m_i` like mixed-radix numerals.
pub fn r_partite_optimal(parts: &PartSizes) -> Result<Family, FamilyError> {
    let sizes = parts.sizes();
    let edge_total: usize = sizes.iter().product();
    if edge_total > MAX_PARTITE_EDGES {
        return Err(param("rpartite", "at most 65536 edges", edge_total));
    }
    let prods = parts.partial_products();
    let r = sizes.len();
    let mut vertices = Vec::new();
    let mut labels = Vec::new();
    let mut offsets = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        offsets.push(vertices.len());
        for j in 0..s {
            vertices.push(format!("A{}_{}", i + 1, j + 1));
            let shift = if i + 1 == r { 1 } else { 0 };
            labels.push(j as Weight * prods[i] + shift);
        }
    }
    let edges = sizes
        .iter()
        .map(|&s| 0..s)
        .collect::<Vec<_>>()
        .into_iter()
        .fold(vec![Vec::new()], |acc, range| {
            acc.into_iter()
                .flat_map(|prefix| {
                    range.clone().map(move |j| {
                        let mut e = prefix.clone();
                        e.push(j);
                        e
                    })
                })
                .collect()
        })
        .into_iter()
        .map(|tuple: Vec<usize>| tuple.iter().enumerate().map(|(i, &j)| offsets[i] + j).collect())
        .collect();
    let h = Hypergraph::new(vertices, edges).expect("product edges are distinct");
    Ok(Family::new(h, labels))
}

/// `(2q + p(p − 1 + q(q − 1)))/2` for `K_{p,q}` with `p ≥ q`.
pub fn bipartite_weight(p: usize, q: usize) -> Weight {
    let (p, q) = (p.max(q) as Weight, p.min(q) as Weight);
    (2 * q + p * (p - 1 + q * (q - 1))) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{edge_weights, validate_discriminator};

    fn weights(f: &Family) -> Vec<Weight> {
        edge_weights(&f.hypergraph, &f.labeling).unwrap()
    }

    fn sorted(mut v: Vec<Weight>) -> Vec<Weight> {
        v.sort_unstable();
        v
    }

    #[test]
    fn nested_examples() {
        for (n, w) in [(1, 1), (3, 3), (5, 5)] {
            let f = nested_chain(n).unwrap();
            assert_eq!(f.weight, w);
            assert_eq!(weights(&f), (1..=n as Weight).collect::<Vec<_>>());
        }
    }

    #[test]
    fn power_set_examples() {
        assert_eq!(power_set_optimal(1).unwrap().weight, 1);
        let f = power_set_optimal(3).unwrap();
        assert_eq!(f.labeling.values(), &[1, 2, 4]);
        assert_eq!(f.weight, 7);
        assert_eq!(power_set_optimal(4).unwrap().weight, 15);
        assert!(power_set_optimal(6).is_err());
    }

    #[test]
    fn path_examples() {
        let f = path_optimal(4).unwrap();
        assert_eq!(f.labeling.values(), &[0, 1, 2, 0]);
        assert_eq!(weights(&f), vec![1, 3, 2]);
        let f = path_optimal(5).unwrap();
        assert_eq!(f.labeling.values(), &[0, 1, 2, 2, 0]);
        assert_eq!(weights(&f), vec![1, 3, 4, 2]);
        let f = path_optimal(6).unwrap();
        assert_eq!(f.labeling.values(), &[0, 1, 2, 3, 1, 1]);
        assert_eq!(weights(&f), vec![1, 3, 5, 4, 2]);
        assert_eq!(f.weight, 8);
        assert!(path_optimal(1).is_err());
    }

    #[test]
    fn path_postconditions_hold_for_many_lengths() {
        for m in 2..=60 {
            let f = path_optimal(m).unwrap();
            let lab = f.labeling.values();
            assert_eq!(f.weight, (m * (m - 1)).div_ceil(4) as Weight, "m={m}");
            assert_eq!(sorted(weights(&f)), (1..m as Weight).collect::<Vec<_>>(), "m={m}");
            let ends = if m % 4 <= 1 { (0, 0) } else { (0, 1) };
            assert_eq!((lab[0], lab[m - 1]), ends, "m={m}");
        }
    }

    #[test]
    fn path_end2_examples() {
        let f = path_end2(4).unwrap();
        assert_eq!(
            (f.labeling.values(), weights(&f), f.weight),
            (&[0, 1, 1, 2][..], vec![1, 2, 3], 4)
        );
        let f = path_end2(5).unwrap();
        assert_eq!(f.labeling.values(), &[0, 1, 1, 2, 2]);
        assert_eq!((weights(&f), f.weight), (vec![1, 2, 3, 4], 6));
        assert_eq!(path_end2(8).unwrap().weight, 15);
        assert!(path_end2(6).is_err());
        for m in (4..=41).filter(|m| m % 4 <= 1) {
            let f = path_end2(m).unwrap();
            let lab = f.labeling.values();
            assert_eq!((lab[0], lab[m - 1]), (0, 2));
            assert_eq!(sorted(weights(&f)), (1..m as Weight).collect::<Vec<_>>());
            assert_eq!(f.weight, (m * (m - 1) / 4 + 1) as Weight);
        }
    }

    #[test]
    fn cycle_examples() {
        let f = cycle_optimal(3).unwrap();
        assert_eq!(f.weight, 3);
        assert_eq!(sorted(weights(&f)), vec![1, 2, 3]);
        assert_eq!(cycle_optimal(4).unwrap().weight, 5);
        assert_eq!(cycle_optimal(5).unwrap().weight, 8);
        assert!(cycle_optimal(2).is_err());
        for m in 3..=60 {
            let f = cycle_optimal(m).unwrap();
            assert_eq!(f.weight, (m * (m + 1)).div_ceil(4) as Weight, "m={m}");
            assert!(validate_discriminator(&f.hypergraph, &f.labeling).unwrap().is_valid());
        }
    }

    #[test]
    fn star_and_disjoint() {
        for (n, w) in [(1, 1), (3, 4), (5, 11)] {
            assert_eq!(star(n).unwrap().weight, w);
        }
        for (n, w) in [(1, 1), (3, 6), (6, 21)] {
            assert_eq!(disjoint(n).unwrap().weight, w);
        }
    }

    #[test]
    fn r_partite_examples() {
        let f = r_partite_optimal(&PartSizes::new(vec![2, 2]).unwrap()).unwrap();
        assert_eq!(f.labeling.values(), &[0, 1, 1, 3]);
        assert_eq!(sorted(weights(&f)), vec![1, 2, 3, 4]);
        assert_eq!(f.weight, 5);
        let parts = PartSizes::new(vec![2, 2, 2]).unwrap();
        assert_eq!(parts.optimal_weight(), 9);
        assert_eq!(r_partite_optimal(&parts).unwrap().weight, 9);
        for (m, r) in [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2)] {
            let parts = PartSizes::new(vec![m; r]).unwrap();
            let expect = (m * (m.pow(r as u32) + 1) / 2) as Weight;
            assert_eq!(parts.optimal_weight(), expect);
            assert_eq!(r_partite_optimal(&parts).unwrap().weight, expect);
        }
        assert!(PartSizes::new(vec![2, 3]).is_err());
        assert!(PartSizes::new(vec![2, 0]).is_err());
    }

    #[test]
    fn r_partite_edge_weights_are_one_to_product() {
        for sizes in [vec![3, 2], vec![4, 3, 2], vec![3, 3, 1], vec![5]] {
            let f = r_partite_optimal(&PartSizes::new(sizes.clone()).unwrap()).unwrap();
            let total: usize = sizes.iter().product();
            assert_eq!(sorted(weights(&f)), (1..=total as Weight).collect::<Vec<_>>());
        }
    }

    #[test]
    fn bipartite_closed_form() {
        for (p, q) in [(2, 2), (3, 2), (3, 3), (5, 4)] {
            assert_eq!(
                bipartite_weight(p, q),
                PartSizes::new(vec![p, q]).unwrap().optimal_weight()
            );
        }
    }
}
