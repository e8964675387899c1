//! Exact domination and total domination numbers with every minimum set.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{k_subsets, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DominationKind {
    Domination,
    TotalDomination,
}

/// Minimum cardinality together with every set achieving it, sorted by
/// vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationResult {
    pub kind: DominationKind,
    pub value: usize,
    pub witnesses: Vec<VertexSet>,
}

pub fn is_total_dominating_set(g: &Graph, s: VertexSet) -> bool {
    (0..g.n()).all(|v| g.neighbors(v).intersects(s))
}

pub fn is_dominating_set(g: &Graph, s: VertexSet) -> bool {
    (0..g.n()).all(|v| g.closed_neighbors(v).intersects(s))
}

fn minimum_sets(
    g: &Graph,
    kind: DominationKind,
    start: usize,
    reach: impl Fn(usize) -> VertexSet,
) -> DominationResult {
    let n = g.n();
    let all = g.vertices();
    // vertices whose neighborhood `reach` contains u
    let covers: Vec<VertexSet> = (0..n)
        .map(|u| (0..n).filter(|&v| reach(v).contains(u)).collect())
        .collect();
    for k in start..=n {
        let mut witnesses: Vec<VertexSet> = k_subsets(n, k)
            .filter(|s| s.iter().fold(VertexSet::EMPTY, |acc, u| acc | covers[u]) == all)
            .collect();
        if !witnesses.is_empty() {
            witnesses.sort_unstable();
            return DominationResult {
                kind,
                value: k,
                witnesses,
            };
        }
    }
    unreachable!("V itself dominates every graph in the domain")
}

/// γ_t(G) and all γ_t-sets, by increasing cardinality from 2.
pub fn gamma_t_exact(g: &Graph) -> Result<DominationResult> {
    if g.n() == 0 || g.has_isolated_vertex() {
        return Err(Error::domain(
            "total domination needs a nonempty graph without isolated vertices",
        ));
    }
    Ok(minimum_sets(g, DominationKind::TotalDomination, 2, |v| {
        g.neighbors(v)
    }))
}

/// γ(G) and all γ-sets.
pub fn gamma_exact(g: &Graph) -> DominationResult {
    minimum_sets(g, DominationKind::Domination, 0, |v| g.closed_neighbors(v))
}

/// Checks `γ_t(G□H) <= min{γ_t(G)|V(H)|, γ_t(H)|V(G)|}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductBoundCheck {
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

pub fn check_product_bound(g: &Graph, h: &Graph) -> Result<ProductBoundCheck> {
    let gt = gamma_t_exact(g)?.value;
    let ht = gamma_t_exact(h)?.value;
    let lhs = gamma_t_exact(&g.cartesian_product(h)?)?.value;
    let rhs = (gt * h.n()).min(ht * g.n());
    Ok(ProductBoundCheck {
        lhs,
        rhs,
        holds: lhs <= rhs,
    })
}
