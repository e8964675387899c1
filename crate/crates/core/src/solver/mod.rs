//! Exact total dominator chromatic number χ_d^t and dominator chromatic
//! number χ_d, with the constructive bound procedures in [`bounds`].

pub mod bounds;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::coloring::{chromatic_number_exact, Coloring};
use crate::domination::gamma_t_exact;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Search limits. `node_budget: None` searches to completion.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub node_budget: Option<u64>,
}

impl SolverConfig {
    pub fn with_budget(nodes: u64) -> Self {
        SolverConfig {
            node_budget: Some(nodes),
        }
    }
}

/// Result of an exact solve.
///
/// `elapsed` is wall-clock and deliberately left out of the serialized form
/// so that identical runs produce identical JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub value: usize,
    pub witness: Coloring,
    pub lower_bound_used: usize,
    pub upper_bound_used: usize,
    pub nodes_explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Which neighborhood must contain a full class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Domination {
    /// `N(v)`: total dominator colorings.
    Open,
    /// `N[v]`: dominator colorings.
    Closed,
}

/// Depth-first search for a proper coloring with at most `k` classes in
/// which every vertex's target neighborhood contains a whole class.
///
/// Vertices are colored in label order and a vertex may only open the next
/// unused class, so the first coloring found is the lexicographically least
/// canonical one.
struct DominatorSearch<'a> {
    g: &'a Graph,
    target: Vec<VertexSet>,
    k: usize,
    classes: Vec<VertexSet>,
    nodes: u64,
    budget: Option<u64>,
    aborted: bool,
}

impl<'a> DominatorSearch<'a> {
    fn new(g: &'a Graph, mode: Domination, budget: Option<u64>) -> Self {
        let target = (0..g.n())
            .map(|v| match mode {
                Domination::Open => g.neighbors(v),
                Domination::Closed => g.closed_neighbors(v),
            })
            .collect();
        DominatorSearch {
            g,
            target,
            k: 0,
            classes: Vec::new(),
            nodes: 0,
            budget,
            aborted: false,
        }
    }

    /// Finds the lex-least coloring with at most `k` classes.
    fn run(&mut self, k: usize) -> Option<Vec<VertexSet>> {
        self.k = k;
        self.classes = vec![VertexSet::EMPTY; k];
        if k == 0 || !self.viable(0, 0) {
            return None;
        }
        if self.extend(0, 0) {
            Some(
                self.classes
                    .iter()
                    .copied()
                    .filter(|c| !c.is_empty())
                    .collect(),
            )
        } else {
            None
        }
    }

    /// A vertex stays satisfiable while some current class lies inside its
    /// target, or a class can still be opened among its uncolored targets.
    /// Classes only grow, so a class that already escapes the target is lost.
    fn viable(&self, next: usize, used: usize) -> bool {
        let uncolored = self.g.vertices() - VertexSet::full(next);
        let can_open = used < self.k;
        self.target.iter().all(|&t| {
            (can_open && t.intersects(uncolored))
                || self.classes[..used].iter().any(|cl| cl.is_subset(t))
        })
    }

    fn extend(&mut self, v: usize, used: usize) -> bool {
        if v == self.g.n() {
            return true;
        }
        let nb = self.g.neighbors(v);
        for c in 0..self.k.min(used + 1) {
            if self.classes[c].intersects(nb) {
                continue;
            }
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                self.aborted = true;
                return false;
            }
            self.classes[c].insert(v);
            let now_used = used.max(c + 1);
            if self.viable(v + 1, now_used) && self.extend(v + 1, now_used) {
                return true;
            }
            self.classes[c].remove(v);
            if self.aborted {
                return false;
            }
        }
        false
    }
}

fn sweep(
    g: &Graph,
    mode: Domination,
    lower: usize,
    upper: usize,
    config: &SolverConfig,
) -> Result<SolveReport> {
    let start = Instant::now();
    let mut search = DominatorSearch::new(g, mode, config.node_budget);
    for k in lower..=upper {
        if let Some(classes) = search.run(k) {
            let witness = Coloring::from_classes(g.n(), &classes)?;
            debug_assert_eq!(witness.k(), k);
            return Ok(SolveReport {
                value: witness.k(),
                witness,
                lower_bound_used: lower,
                upper_bound_used: upper,
                nodes_explored: search.nodes,
                elapsed: start.elapsed(),
            });
        }
        if search.aborted {
            return Err(Error::BudgetExceeded {
                lower: k,
                upper,
                nodes: search.nodes,
            });
        }
    }
    Err(Error::Internal(format!(
        "no coloring found up to the proven upper bound {upper}"
    )))
}

fn require_tdc_domain(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::domain("graph has no vertices"));
    }
    if let Some(v) = g.isolated_vertices().first() {
        return Err(Error::domain(format!(
            "vertex {v} is isolated; no total dominator coloring exists"
        )));
    }
    Ok(())
}

/// `max{χ(G), γ_t(G)}`, a lower bound for χ_d^t since χ <= χ_d <= χ_d^t.
pub fn tdc_lower_bound(g: &Graph) -> Result<usize> {
    require_tdc_domain(g)?;
    let chi = chromatic_number_exact(g).0;
    Ok(chi.max(gamma_t_exact(g)?.value))
}

/// Cheapest constructive upper bound used to cap the sweep.
fn seed_upper_bound(g: &Graph) -> usize {
    let n = g.n();
    if n <= bounds::ALPHA0_MAX_VERTICES {
        if let Ok((a0, _)) = bounds::alpha0(g) {
            return n.min(n + 1 - a0);
        }
    }
    n
}

/// χ_d^t(G) with the lexicographically least optimal witness.
pub fn tdc_exact(g: &Graph) -> Result<SolveReport> {
    tdc_exact_with(g, &SolverConfig::default())
}

pub fn tdc_exact_with(g: &Graph, config: &SolverConfig) -> Result<SolveReport> {
    let lower = tdc_lower_bound(g)?;
    let upper = seed_upper_bound(g).max(lower);
    sweep(g, Domination::Open, lower, upper, config)
}

/// χ_d(G) with the lexicographically least optimal witness.
pub fn dc_exact(g: &Graph) -> Result<SolveReport> {
    dc_exact_with(g, &SolverConfig::default())
}

pub fn dc_exact_with(g: &Graph, config: &SolverConfig) -> Result<SolveReport> {
    if g.n() == 0 {
        return Ok(SolveReport {
            value: 0,
            witness: Coloring::from_labels(&[]),
            lower_bound_used: 0,
            upper_bound_used: 0,
            nodes_explored: 0,
            elapsed: Duration::ZERO,
        });
    }
    let lower = chromatic_number_exact(g).0;
    sweep(g, Domination::Closed, lower, g.n(), config)
}
