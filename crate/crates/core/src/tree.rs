//! Distances and tree structure: eccentricity, diameter, radius, center,
//! leaves, support vertices and the leaf → support map.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Center of a tree: one vertex, or the two ends of one edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Center {
    Vertex(usize),
    Edge(usize, usize),
}

impl Center {
    pub fn vertices(self) -> VertexSet {
        match self {
            Center::Vertex(v) => VertexSet::singleton(v),
            Center::Edge(u, v) => VertexSet::singleton(u) | VertexSet::singleton(v),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeProfile {
    pub leaves: VertexSet,
    pub supports: VertexSet,
    /// Leaf → its support vertex. Empty for `P_2`, whose leaves have no support.
    pub sigma: BTreeMap<usize, usize>,
    pub s: usize,
    pub ell: usize,
    pub diameter: usize,
    pub radius: usize,
    pub center: Center,
}

impl TreeProfile {
    /// Whether `L ∪ S = V(T)`.
    pub fn all_leaf_or_support(&self, n: usize) -> bool {
        (self.leaves | self.supports) == VertexSet::full(n)
    }
}

/// Eccentricity of every vertex of a connected graph.
pub fn eccentricities(g: &Graph) -> Result<Vec<usize>> {
    (0..g.n())
        .map(|v| {
            g.bfs_distances(v)?
                .into_iter()
                .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
                .ok_or_else(|| Error::domain("eccentricity is undefined on a disconnected graph"))
        })
        .collect()
}

/// All-pairs distances of a connected graph.
pub fn distance_matrix(g: &Graph) -> Result<Vec<Vec<usize>>> {
    (0..g.n())
        .map(|v| {
            g.bfs_distances(v)?
                .into_iter()
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::domain("distances are infinite on a disconnected graph"))
        })
        .collect()
}

fn farthest(g: &Graph, from: usize) -> (usize, usize) {
    let dist = g.bfs_distances(from).expect("vertex in range");
    dist.iter()
        .enumerate()
        .filter_map(|(v, d)| d.map(|d| (v, d)))
        .fold(
            (from, 0),
            |best, (v, d)| if d > best.1 { (v, d) } else { best },
        )
}

/// Center by repeatedly stripping every current leaf.
fn strip_center(g: &Graph) -> Center {
    let mut alive = g.vertices();
    while alive.len() > 2 {
        let layer: VertexSet = alive
            .iter()
            .filter(|&v| (g.neighbors(v) & alive).len() <= 1)
            .collect();
        alive = alive - layer;
    }
    let mut it = alive.iter();
    match (it.next(), it.next()) {
        (Some(u), Some(v)) => Center::Edge(u, v),
        (Some(u), None) => Center::Vertex(u),
        _ => unreachable!("a tree keeps at least one central vertex"),
    }
}

pub fn analyze_tree(g: &Graph) -> Result<TreeProfile> {
    if !g.is_tree() {
        return Err(Error::domain("input graph is not a tree"));
    }
    if g.n() < 2 {
        return Err(Error::domain("tree profiles need at least two vertices"));
    }
    let leaves: VertexSet = (0..g.n()).filter(|&v| g.degree(v) == 1).collect();
    let supports: VertexSet = (0..g.n())
        .filter(|&v| g.degree(v) > 1 && g.neighbors(v).intersects(leaves))
        .collect();
    let sigma = leaves
        .iter()
        .filter_map(|u| {
            let p = g.neighbors(u).first()?;
            supports.contains(p).then_some((u, p))
        })
        .collect();

    let (a, _) = farthest(g, 0);
    let (_, diameter) = farthest(g, a);

    Ok(TreeProfile {
        leaves,
        supports,
        sigma,
        s: supports.len(),
        ell: leaves.len(),
        diameter,
        radius: diameter.div_ceil(2),
        center: strip_center(g),
    })
}
