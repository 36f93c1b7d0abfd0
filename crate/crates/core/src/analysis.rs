//! Bounds on the optimal weight and the exhaustive attainability census.
//!
//! All combinatorial searches here run on the reduced hypergraph, where
//! edges are bitmasks over a handful of classes. Witnesses are mapped back
//! to original vertices through the class representatives.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::hypergraph::{Hypergraph, Weight};
use crate::reduce::{reduce, IncidenceVector, ReduceError, ReducedHypergraph};
use crate::solver::{solve_reduced, SolveError, SolverConfig};

/// Largest edge count enumerated exhaustively (`2^(2^n − 1)` candidates).
pub const MAX_CENSUS_EDGES: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("exhaustive enumeration supports 1..={MAX_CENSUS_EDGES} edges, got {0}")]
    CensusTooLarge(usize),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("could not start worker pool: {0}")]
    Workers(String),
}

/// For each edge, the edges sharing at least one class with it.
fn conflicts(r: &ReducedHypergraph) -> Vec<u64> {
    let mut out = vec![0u64; r.edge_count()];
    for class in r.classes() {
        for i in class.edges() {
            out[i] |= class.mask();
        }
    }
    for (i, c) in out.iter_mut().enumerate() {
        *c &= !(1u64 << i);
    }
    out
}

fn max_independent(cands: u64, conflict: &[u64], current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if cands == 0 {
        if current.len() > best.len() {
            best.clone_from(current);
        }
        return;
    }
    if current.len() + cands.count_ones() as usize <= best.len() {
        return;
    }
    let i = cands.trailing_zeros() as usize;
    let rest = cands & !(1u64 << i);
    current.push(i);
    max_independent(rest & !conflict[i], conflict, current, best);
    current.pop();
    max_independent(rest, conflict, current, best);
}

/// A maximum set of pairwise-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub size: usize,
    /// Edge indices, increasing.
    pub edges: Vec<usize>,
}

pub fn max_matching_reduced(r: &ReducedHypergraph) -> Matching {
    let conflict = conflicts(r);
    let all = crate::reduce::full_mask(r.edge_count());
    let mut best = Vec::new();
    max_independent(all, &conflict, &mut Vec::new(), &mut best);
    Matching {
        size: best.len(),
        edges: best,
    }
}

/// Exact maximum matching by branch and bound over edge subsets.
pub fn max_matching(h: &Hypergraph) -> Result<Matching, ReduceError> {
    Ok(max_matching_reduced(&reduce(h)?))
}

struct HittingSearch<'a> {
    classes: &'a [IncidenceVector],
    all: u64,
    best: Vec<usize>,
}

impl HittingSearch<'_> {
    /// Number of pairwise class-disjoint edges among `unhit`; each needs its own vertex.
    fn packing_bound(&self, unhit: u64) -> usize {
        let mut blocked = 0u64;
        let mut count = 0;
        let mut m = unhit;
        while m != 0 {
            let e = m.trailing_zeros() as usize;
            m &= m - 1;
            if blocked >> e & 1 == 1 {
                continue;
            }
            count += 1;
            for c in self.classes.iter().filter(|c| c.contains(e)) {
                blocked |= c.mask();
            }
        }
        count
    }

    fn run(&mut self, hit: u64, current: &mut Vec<usize>) {
        let unhit = self.all & !hit;
        if unhit == 0 {
            if current.len() < self.best.len() {
                self.best.clone_from(current);
            }
            return;
        }
        if current.len() + self.packing_bound(unhit) >= self.best.len() {
            return;
        }
        let e = unhit.trailing_zeros() as usize;
        let mut options: Vec<usize> = (0..self.classes.len())
            .filter(|&c| self.classes[c].contains(e))
            .collect();
        options.sort_by_key(|&c| std::cmp::Reverse((self.classes[c].mask() & unhit).count_ones()));
        for c in options {
            current.push(c);
            self.run(hit | self.classes[c].mask(), current);
            current.pop();
        }
    }
}

/// A minimum set of vertices meeting every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSet {
    pub size: usize,
    /// Class indices for reduced input, vertex indices for [`min_hitting_set`].
    pub members: Vec<usize>,
}

pub fn min_hitting_set_reduced(r: &ReducedHypergraph) -> HittingSet {
    let mut search = HittingSearch {
        classes: r.classes(),
        all: crate::reduce::full_mask(r.edge_count()),
        // every class together is always a hitting set
        best: (0..r.class_count()).collect(),
    };
    search.run(0, &mut Vec::new());
    let mut members = search.best;
    members.sort_unstable();
    HittingSet {
        size: members.len(),
        members,
    }
}

/// Exact minimum hitting set by branch and bound.
pub fn min_hitting_set(h: &Hypergraph) -> Result<HittingSet, ReduceError> {
    let r = reduce(h)?;
    let hs = min_hitting_set_reduced(&r);
    let mut members: Vec<usize> = hs.members.iter().map(|&c| r.representatives()[c]).collect();
    members.sort_unstable();
    Ok(HittingSet {
        size: members.len(),
        members,
    })
}

/// Every bound on the optimal weight that the crate knows, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub edge_count: usize,
    pub matching: Matching,
    pub hitting_set: HittingSet,
    pub max_degree: usize,
    /// `max(n, δ(δ+1)/2, ⌈n(n+1)/(2Δ)⌉)`.
    pub lower: Weight,
    /// `n(n+1)/2`.
    pub upper_general: Weight,
    /// `n(n−1)/2 + N(H)`.
    pub upper_hitting: Weight,
}

impl BoundsReport {
    pub fn upper(&self) -> Weight {
        self.upper_general.min(self.upper_hitting)
    }
}

fn lower_from(n: usize, matching: usize, max_degree: usize) -> Weight {
    let n = n as Weight;
    let d = matching as Weight;
    let spread = if max_degree == 0 {
        0
    } else {
        (n * (n + 1)).div_ceil(2 * max_degree as Weight)
    };
    n.max(d * (d + 1) / 2).max(spread)
}

/// The combined lower bound for a reduced hypergraph.
pub fn lower_bound_reduced(r: &ReducedHypergraph) -> Weight {
    let delta = max_matching_reduced(r).size;
    let max_degree = r.classes().iter().map(|c| c.len()).max().unwrap_or(0);
    lower_from(r.edge_count(), delta, max_degree)
}

pub fn bounds(h: &Hypergraph) -> Result<BoundsReport, ReduceError> {
    let r = reduce(h)?;
    let n = h.edge_count() as Weight;
    let matching = max_matching_reduced(&r);
    let hitting_set = min_hitting_set(h)?;
    let max_degree = h.degrees().into_iter().max().unwrap_or(0);
    Ok(BoundsReport {
        edge_count: h.edge_count(),
        lower: lower_from(h.edge_count(), matching.size, max_degree),
        upper_general: n * (n + 1) / 2,
        upper_hitting: n * n.saturating_sub(1) / 2 + hitting_set.size as Weight,
        matching,
        hitting_set,
        max_degree,
    })
}

/// Text form of a [`BoundsReport`].
pub fn format_bounds(h: &Hypergraph, b: &BoundsReport) -> String {
    let edges = b.matching.edges.iter().map(|i| (i + 1).to_string()).join(",");
    let hitters = b.hitting_set.members.iter().map(|&v| h.vertex_name(v)).join(",");
    let mut out = String::new();
    writeln!(out, "n {}", b.edge_count).unwrap();
    writeln!(out, "matching {} edges={}", b.matching.size, edges).unwrap();
    writeln!(out, "hitting_set {} vertices={}", b.hitting_set.size, hitters).unwrap();
    writeln!(out, "max_degree {}", b.max_degree).unwrap();
    writeln!(out, "lower {}", b.lower).unwrap();
    writeln!(out, "upper_general {}", b.upper_general).unwrap();
    writeln!(out, "upper_hitting {}", b.upper_hitting).unwrap();
    out
}

fn check_census_size(n: usize) -> Result<(), AnalysisError> {
    if n == 0 || n > MAX_CENSUS_EDGES {
        return Err(AnalysisError::CensusTooLarge(n));
    }
    Ok(())
}

/// Is the subset `s` of non-empty incidence vectors over `n` edges a valid
/// reduced hypergraph? Vector `k` of the universe is the mask `k + 1`.
fn valid_subset(n: usize, s: u32) -> bool {
    let mut supports = [0u32; MAX_CENSUS_EDGES];
    let mut m = s;
    while m != 0 {
        let k = m.trailing_zeros();
        m &= m - 1;
        let vector = k + 1;
        for (i, sup) in supports.iter_mut().enumerate().take(n) {
            if vector >> i & 1 == 1 {
                *sup |= 1 << k;
            }
        }
    }
    let supports = &supports[..n];
    supports.iter().all(|&x| x != 0) && supports.iter().tuple_combinations().all(|(a, b)| a != b)
}

/// Image of subset `s` under every edge permutation; `s` is canonical when
/// it is the smallest image.
fn is_canonical(s: u32, perms: &[Vec<u32>]) -> bool {
    perms.iter().all(|map| {
        let mut image = 0u32;
        let mut m = s;
        while m != 0 {
            let k = m.trailing_zeros() as usize;
            m &= m - 1;
            image |= 1 << map[k];
        }
        image >= s
    })
}

/// For each permutation of `0..n`, where universe vector `k` is sent.
fn vector_permutations(n: usize) -> Vec<Vec<u32>> {
    let universe = (1u32 << n) - 1;
    (0..n)
        .permutations(n)
        .map(|p| {
            (1..=universe)
                .map(|v| {
                    let mut w = 0u32;
                    for (i, &pi) in p.iter().enumerate() {
                        if v >> i & 1 == 1 {
                            w |= 1 << pi;
                        }
                    }
                    w - 1
                })
                .collect()
        })
        .collect()
}

fn subset_to_reduced(n: usize, s: u32) -> ReducedHypergraph {
    let mut classes = Vec::with_capacity(s.count_ones() as usize);
    let mut m = s;
    while m != 0 {
        let k = m.trailing_zeros();
        m &= m - 1;
        classes.push(IncidenceVector(u64::from(k + 1)));
    }
    ReducedHypergraph::from_classes(n, classes).expect("subset already validated")
}

/// Number of candidate subsets examined for `n` edges: `2^(2^n − 1)`.
pub fn candidate_count(n: usize) -> u64 {
    1u64 << ((1u64 << n) - 1)
}

/// Every reduced hypergraph with `n` edges, classes in increasing mask
/// order. With `dedup`, keeps one representative per edge-permutation orbit.
pub fn enumerate_reduced(n: usize, dedup: bool) -> Result<impl Iterator<Item = ReducedHypergraph>, AnalysisError> {
    check_census_size(n)?;
    let perms = if dedup { vector_permutations(n) } else { Vec::new() };
    let total = candidate_count(n) as u32;
    Ok((0..total)
        .filter(move |&s| valid_subset(n, s) && (!dedup || is_canonical(s, &perms)))
        .map(move |s| subset_to_reduced(n, s)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CensusOptions {
    pub dedup: bool,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    pub solver: SolverConfig,
}

/// One weight of the census range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    pub weight: Weight,
    /// Smallest instance (fewest classes, then lexicographic) attaining it.
    pub witness: Option<ReducedHypergraph>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub edge_count: usize,
    pub candidates: u64,
    /// Entries for every weight in `n ..= n(n+1)/2`.
    pub entries: Vec<CensusEntry>,
    /// Every examined instance with its optimal weight.
    pub results: Vec<(ReducedHypergraph, Weight)>,
}

impl CensusReport {
    pub fn instances(&self) -> usize {
        self.results.len()
    }

    pub fn attainable(&self) -> BTreeSet<Weight> {
        self.entries
            .iter()
            .filter(|e| e.witness.is_some())
            .map(|e| e.weight)
            .collect()
    }

    pub fn non_attainable(&self) -> BTreeSet<Weight> {
        self.entries
            .iter()
            .filter(|e| e.witness.is_none())
            .map(|e| e.weight)
            .collect()
    }
}

fn witness_key(r: &ReducedHypergraph) -> (usize, Vec<u64>) {
    (r.class_count(), r.classes().iter().map(|c| c.mask()).collect())
}

/// Solves every reduced hypergraph with `n` edges and collects the set of
/// optimal weights that occur.
pub fn census(n: usize, options: &CensusOptions) -> Result<CensusReport, AnalysisError> {
    let instances: Vec<ReducedHypergraph> = enumerate_reduced(n, options.dedup)?.collect();
    let solve_all = || -> Result<Vec<Weight>, SolveError> {
        instances
            .par_iter()
            .map(|r| solve_reduced(r, &options.solver).map(|s| s.optimal_weight))
            .collect()
    };
    let weights = match options.workers {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| AnalysisError::Workers(e.to_string()))?
            .install(solve_all)?,
        None => solve_all()?,
    };

    let top = (n * (n + 1) / 2) as Weight;
    let mut entries: Vec<CensusEntry> = (n as Weight..=top)
        .map(|weight| CensusEntry { weight, witness: None })
        .collect();
    for (r, &w) in instances.iter().zip(&weights) {
        let entry = &mut entries[(w - n as Weight) as usize];
        let better = entry
            .witness
            .as_ref()
            .is_none_or(|cur| witness_key(r) < witness_key(cur));
        if better {
            entry.witness = Some(r.clone());
        }
    }
    Ok(CensusReport {
        edge_count: n,
        candidates: candidate_count(n),
        entries,
        results: instances.into_iter().zip(weights).collect(),
    })
}

/// Text form of a census: a header line, then one line per weight.
pub fn format_census(report: &CensusReport) -> String {
    let mut out = String::new();
    writeln!(out, "n={} instances={}", report.edge_count, report.instances()).unwrap();
    for e in &report.entries {
        match &e.witness {
            Some(r) => writeln!(out, "w={} attainable witness={}", e.weight, r.render_classes()).unwrap(),
            None => writeln!(out, "w={} non-attainable", e.weight).unwrap(),
        }
    }
    out
}

/// Which weights of `[n(n−1)/2 + 2, n(n+1)/2 − 1]` a census attains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureScan {
    pub edge_count: usize,
    pub low: Weight,
    pub high: Weight,
    pub attained: Vec<Weight>,
}

impl ConjectureScan {
    pub fn is_empty_interval(&self) -> bool {
        self.low > self.high
    }

    /// No weight of the interval is attained (vacuous for an empty interval).
    pub fn consistent(&self) -> bool {
        self.attained.is_empty()
    }
}

pub fn conjecture_scan_of(report: &CensusReport) -> ConjectureScan {
    let n = report.edge_count as Weight;
    let low = n * (n - 1) / 2 + 2;
    let high = n * (n + 1) / 2 - 1;
    let attainable = report.attainable();
    ConjectureScan {
        edge_count: report.edge_count,
        low,
        high,
        attained: (low..=high).filter(|w| attainable.contains(w)).collect(),
    }
}

pub fn conjecture_scan(n: usize, options: &CensusOptions) -> Result<ConjectureScan, AnalysisError> {
    Ok(conjecture_scan_of(&census(n, options)?))
}

pub fn format_conjecture_scan(scan: &ConjectureScan) -> String {
    let attained = if scan.attained.is_empty() {
        "none".to_string()
    } else {
        scan.attained.iter().join(",")
    };
    format!(
        "n={} interval=[{},{}] attained={} {}\n",
        scan.edge_count,
        scan.low,
        scan.high,
        attained,
        if scan.consistent() {
            "consistent"
        } else {
            "inconsistent"
        }
    )
}
