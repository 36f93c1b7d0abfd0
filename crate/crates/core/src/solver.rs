//! Exact minimum-weight edge-discriminators by iterative deepening.
//!
//! The search runs on the reduced hypergraph: one non-negative value per
//! vertex class. For a target weight `w` it assigns class values depth-first
//! (classes in more edges first, values ascending) so that they sum to
//! exactly `w`, and prunes a partial assignment when
//!
//! * two edges (or an edge and the empty set) have equal partial sums and no
//!   unassigned class lies in exactly one of them, so they must end equal;
//! * the edges still open cannot be given distinct, positive final sums
//!   avoiding the closed ones within the remaining budget, or the minimum
//!   total raise this needs exceeds what the remaining budget can deliver.
//!
//! Targets are tried from a lower bound upward; the first feasible target is
//! the optimum and the first assignment found is the lexicographically least
//! witness in assignment order.

use thiserror::Error;

use crate::analysis;
use crate::hypergraph::{Hypergraph, Labeling, Weight};
use crate::reduce::{reduce, ReduceError, ReducedHypergraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("node cap of {cap} exceeded while testing weight {weight}")]
    NodeCapExceeded { cap: u64, weight: Weight },
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error("no edge-discriminator up to weight {0}; the input violates the hypergraph invariants")]
    NoDiscriminator(Weight),
}

/// Where iterative deepening starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DeepeningStart {
    /// `max(n, δ(δ+1)/2, ⌈n(n+1)/(2Δ)⌉)`.
    #[default]
    LowerBound,
    /// Weight 1, independent of any bound. Slower; used when the solver
    /// itself checks the bounds.
    One,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolverConfig {
    /// Maximum number of search nodes per solve; `None` is unlimited.
    pub node_cap: Option<u64>,
    pub start: DeepeningStart,
}

impl SolverConfig {
    pub fn with_node_cap(cap: u64) -> Self {
        Self {
            node_cap: Some(cap),
            ..Self::default()
        }
    }

    pub fn unbounded_start() -> Self {
        Self {
            start: DeepeningStart::One,
            ..Self::default()
        }
    }
}

/// Optimum on a reduced hypergraph: one value per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedSolution {
    pub optimal_weight: Weight,
    pub class_values: Vec<Weight>,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub optimal_weight: Weight,
    /// Optimal labeling on the original vertices; each class value sits on
    /// the class representative.
    pub witness: Labeling,
    pub nodes_explored: u64,
}

struct Search {
    classes: Vec<u64>,
    /// Edge slot pairs (slot `n` is the empty edge) whose remaining supports
    /// become identical once `d` classes are assigned.
    frozen_pairs: Vec<Vec<(usize, usize)>>,
    /// Edges that still meet some unassigned class at depth `d`.
    open: Vec<u64>,
    /// Largest class size among classes `d..`.
    reach: Vec<u64>,
    sums: Vec<Weight>,
    values: Vec<Weight>,
    nodes: u64,
    cap: u64,
    closed_scratch: Vec<Weight>,
    open_scratch: Vec<Weight>,
}

impl Search {
    fn new(n: usize, classes: Vec<u64>, cap: u64) -> Self {
        let c = classes.len();
        let slots = n + 1;
        let mut frozen_pairs = vec![Vec::new(); c + 1];
        for a in 0..slots {
            for b in a + 1..slots {
                let differs = |mask: u64| {
                    let ia = a < n && mask >> a & 1 == 1;
                    let ib = b < n && mask >> b & 1 == 1;
                    ia != ib
                };
                let depth = classes.iter().rposition(|&m| differs(m)).map_or(0, |p| p + 1);
                frozen_pairs[depth].push((a, b));
            }
        }
        let mut open = vec![0u64; c + 1];
        let mut reach = vec![0u64; c + 1];
        for d in (0..c).rev() {
            open[d] = open[d + 1] | classes[d];
            reach[d] = reach[d + 1].max(classes[d].count_ones() as u64);
        }
        Self {
            classes,
            frozen_pairs,
            open,
            reach,
            sums: vec![0; slots],
            values: vec![0; c],
            nodes: 0,
            cap,
            closed_scratch: Vec::with_capacity(slots),
            open_scratch: Vec::with_capacity(slots),
        }
    }

    fn ties(&self, depth: usize) -> bool {
        self.frozen_pairs[depth]
            .iter()
            .any(|&(a, b)| self.sums[a] == self.sums[b])
    }

    /// Can the open edges at `depth` still reach distinct values with `budget` left?
    fn feasible(&mut self, depth: usize, budget: Weight) -> bool {
        let n = self.sums.len() - 1;
        let open = self.open[depth];
        self.closed_scratch.clear();
        self.open_scratch.clear();
        self.closed_scratch.push(0);
        for e in 0..n {
            if open >> e & 1 == 1 {
                self.open_scratch.push(self.sums[e]);
            } else {
                self.closed_scratch.push(self.sums[e]);
            }
        }
        if self.open_scratch.is_empty() {
            return budget == 0;
        }
        self.closed_scratch.sort_unstable();
        self.open_scratch.sort_unstable();
        let mut next_free = 0;
        let mut ci = 0;
        let mut raise = 0;
        for &p in &self.open_scratch {
            let mut x = p.max(next_free);
            while ci < self.closed_scratch.len() && self.closed_scratch[ci] < x {
                ci += 1;
            }
            while ci < self.closed_scratch.len() && self.closed_scratch[ci] == x {
                x += 1;
                ci += 1;
            }
            if x > p + budget {
                return false;
            }
            raise += x - p;
            next_free = x + 1;
        }
        raise <= budget * self.reach[depth]
    }

    fn apply(&mut self, class: usize, delta: Weight, add: bool) {
        let mut m = self.classes[class];
        while m != 0 {
            let e = m.trailing_zeros() as usize;
            if add {
                self.sums[e] += delta;
            } else {
                self.sums[e] -= delta;
            }
            m &= m - 1;
        }
    }

    fn run(&mut self, depth: usize, budget: Weight, target: Weight) -> Result<bool, SolveError> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(SolveError::NodeCapExceeded {
                cap: self.cap,
                weight: target,
            });
        }
        let c = self.classes.len();
        if depth == c {
            return Ok(budget == 0);
        }
        let low = if depth + 1 == c { budget } else { 0 };
        for v in low..=budget {
            self.apply(depth, v, true);
            self.values[depth] = v;
            if !self.ties(depth + 1)
                && self.feasible(depth + 1, budget - v)
                && self.run(depth + 1, budget - v, target)?
            {
                return Ok(true);
            }
            self.apply(depth, v, false);
        }
        Ok(false)
    }
}

/// Class indices in assignment order: larger incidence first, stable.
fn assignment_order(r: &ReducedHypergraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..r.class_count()).collect();
    order.sort_by_key(|&c| std::cmp::Reverse(r.classes()[c].len()));
    order
}

/// Searches for class values summing to exactly `weight`; returns them in
/// class order together with the node count.
pub fn search_weight(
    r: &ReducedHypergraph,
    weight: Weight,
    node_cap: Option<u64>,
) -> Result<(Option<Vec<Weight>>, u64), SolveError> {
    let order = assignment_order(r);
    let masks = order.iter().map(|&c| r.classes()[c].mask()).collect();
    let mut search = Search::new(r.edge_count(), masks, node_cap.unwrap_or(u64::MAX));
    let found = !search.ties(0) && search.feasible(0, weight) && search.run(0, weight, weight)?;
    let values = found.then(|| {
        let mut by_class = vec![0; r.class_count()];
        for (pos, &c) in order.iter().enumerate() {
            by_class[c] = search.values[pos];
        }
        by_class
    });
    Ok((values, search.nodes))
}

/// Optimal weight and class values of a reduced hypergraph.
pub fn solve_reduced(r: &ReducedHypergraph, config: &SolverConfig) -> Result<ReducedSolution, SolveError> {
    let n = r.edge_count() as Weight;
    let ceiling = n * (n + 1) / 2;
    let start = match config.start {
        DeepeningStart::LowerBound => analysis::lower_bound_reduced(r),
        DeepeningStart::One => 1,
    };
    let mut nodes = 0;
    for w in start..=ceiling.max(start) {
        let remaining = config.node_cap.map(|cap| cap.saturating_sub(nodes));
        let (found, used) = search_weight(r, w, remaining).map_err(|e| match e {
            SolveError::NodeCapExceeded { weight, .. } => SolveError::NodeCapExceeded {
                cap: config.node_cap.unwrap_or(u64::MAX),
                weight,
            },
            other => other,
        })?;
        nodes += used;
        if let Some(class_values) = found {
            return Ok(ReducedSolution {
                optimal_weight: w,
                class_values,
                nodes_explored: nodes,
            });
        }
    }
    Err(SolveError::NoDiscriminator(ceiling))
}

/// A labeling of `h` with total weight exactly `weight` that discriminates
/// the edges, if one exists.
pub fn exists_with_weight(h: &Hypergraph, weight: Weight) -> Result<Option<Labeling>, SolveError> {
    let r = reduce(h)?;
    let (found, _) = search_weight(&r, weight, None)?;
    Ok(found.map(|values| r.lift(&values)))
}

/// The optimal edge-discriminator weight of `h` with a witness.
pub fn exact_optimal(h: &Hypergraph) -> Result<SolveResult, SolveError> {
    exact_optimal_with(h, &SolverConfig::default())
}

pub fn exact_optimal_with(h: &Hypergraph, config: &SolverConfig) -> Result<SolveResult, SolveError> {
    let r = reduce(h)?;
    let sol = solve_reduced(&r, config)?;
    Ok(SolveResult {
        optimal_weight: sol.optimal_weight,
        witness: r.lift(&sol.class_values),
        nodes_explored: sol.nodes_explored,
    })
}
