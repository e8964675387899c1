//! Immutable simple undirected graphs with bitset adjacency.

mod dimacs;
mod family;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

pub use dimacs::{read_dimacs, write_dimacs};
pub use family::{prufer_decode, FamilySpec};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is one [`VertexSet`] per vertex. The type is immutable once
/// built: every operator returns a new graph.
///
/// The serde form is the edge list `{"n": 3, "edges": [[0, 1], [1, 2]]}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "EdgeList", into = "EdgeList")]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// The JSON edge-list interchange form, 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<EdgeList> for Graph {
    type Error = Error;

    fn try_from(list: EdgeList) -> Result<Graph> {
        Graph::new(list.n, list.edges.iter().map(|&[u, v]| (u, v)))
    }
}

impl From<Graph> for EdgeList {
    fn from(g: Graph) -> EdgeList {
        EdgeList {
            n: g.n,
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// Builds a graph from an edge list, ignoring duplicate and reversed pairs.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Graph {
        debug_assert!(adj.len() <= MAX_VERTICES);
        Graph { n: adj.len(), adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// δ(G); zero for the graph without vertices.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    /// Δ(G); zero for the graph without vertices.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|s| s.is_empty())
    }

    /// Vertices of degree `n - 1`.
    pub fn universal_vertices(&self) -> VertexSet {
        if self.n == 0 {
            return VertexSet::EMPTY;
        }
        (0..self.n)
            .filter(|&v| self.adj[v].len() == self.n - 1)
            .collect()
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| !self.adj[v].intersects(set))
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// True iff the graph is `K_{a,b}` for some `a, b >= 1`.
    pub fn is_complete_bipartite(&self) -> bool {
        if self.n < 2 {
            return false;
        }
        let side = self.adj[0];
        let other = self.vertices() - side;
        !side.is_empty()
            && self.is_independent(side)
            && self.is_independent(other)
            && self.m() == side.len() * other.len()
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| all - self.adj[v] - VertexSet::singleton(v))
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Cartesian product. Vertex `(u, x)` is labeled `u * |V(h)| + x`.
    pub fn cartesian_product(&self, h: &Graph) -> Result<Graph> {
        let (n, k) = (self.n, h.n);
        let mut g = Graph::empty(n * k)?;
        for u in 0..n {
            for x in 0..k {
                let me = u * k + x;
                for y in h.adj[x] {
                    g.adj[me].insert(u * k + y);
                }
                for v in self.adj[u] {
                    g.adj[me].insert(v * k + x);
                }
            }
        }
        Ok(g)
    }

    /// Adds vertex `n` adjacent to every existing vertex.
    pub fn add_universal_vertex(&self) -> Result<Graph> {
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: self.n + 1,
                max: MAX_VERTICES,
            });
        }
        let mut adj = self.adj.clone();
        for s in adj.iter_mut() {
            s.insert(self.n);
        }
        adj.push(self.vertices());
        Ok(Graph::from_adjacency(adj))
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|s| VertexSet::from_bits(s.bits() << shift)),
        );
        Ok(Graph::from_adjacency(adj))
    }

    /// Subgraph induced by `keep`, relabeled to `0..|keep|` in increasing
    /// order. Returns the graph and the original label of each new vertex.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let keep = keep & self.vertices();
        let labels = keep.to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let adj = labels
            .iter()
            .map(|&v| (self.adj[v] & keep).iter().map(|u| index[u]).collect())
            .collect();
        (Graph::from_adjacency(adj), labels)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next |= self.adj[v];
                }
                frontier = next - comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<usize>>> {
        if source >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: source,
                n: self.n,
            });
        }
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for u in self.adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        Ok(dist)
    }

    /// Structural invariant check: symmetric, loop-free, in range.
    pub fn is_well_formed(&self) -> bool {
        let all = self.vertices();
        self.adj.len() == self.n
            && (0..self.n).all(|v| {
                self.adj[v].is_subset(all)
                    && !self.adj[v].contains(v)
                    && self.adj[v].iter().all(|u| self.adj[u].contains(v))
            })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
