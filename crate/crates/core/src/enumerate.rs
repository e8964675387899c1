//! Exhaustive and seeded graph corpora: labeled graphs, labeled trees
//! (Prüfer sequences), isomorphism classes of trees, random connected graphs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{prufer_decode, FamilySpec, Graph};
use crate::tree::{analyze_tree, Center};
use crate::vertex_set::VertexSet;

/// Every labeled graph on `n` vertices (`2^(n(n-1)/2)` of them), `n <= 8`.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "labeled enumeration is limited to 8 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let mut adj = vec![VertexSet::EMPTY; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        Graph::from_adjacency(adj)
    })
}

/// Every connected labeled graph on `n` vertices.
pub fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    labeled_graphs(n).filter(|g| g.is_connected())
}

/// Every labeled tree on `n` vertices, in lexicographic Prüfer order.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    let len = n.saturating_sub(2);
    let mut seq = vec![0usize; len];
    let mut done = n == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let t = prufer_decode(&seq, n).expect("valid Prüfer sequence");
        // odometer increment
        done = true;
        for digit in seq.iter_mut().rev() {
            *digit += 1;
            if *digit < n {
                done = false;
                break;
            }
            *digit = 0;
        }
        Some(t)
    })
}

type Code = (u32, u64); // (bit length, bits)

fn rooted_code(g: &Graph, v: usize, parent: usize) -> Code {
    let mut kids: Vec<Code> = g
        .neighbors(v)
        .iter()
        .filter(|&u| u != parent)
        .map(|u| rooted_code(g, u, v))
        .collect();
    kids.sort_unstable();
    let (mut len, mut bits) = (1u32, 1u64);
    for (l, b) in kids {
        bits = bits << l | b;
        len += l;
    }
    (len + 1, bits << 1)
}

/// Canonical form of a tree (AHU encoding rooted at the center): two trees
/// are isomorphic iff their codes are equal. Trees are limited to 32 vertices.
pub fn tree_canonical_code(g: &Graph) -> Result<u128> {
    if g.n() > 32 {
        return Err(Error::input(
            "canonical tree codes support at most 32 vertices",
        ));
    }
    if g.n() == 1 {
        return Ok(0b10);
    }
    let center = analyze_tree(g)?.center;
    Ok(match center {
        Center::Vertex(c) => rooted_code(g, c, usize::MAX).1 as u128,
        Center::Edge(a, b) => {
            let (x, y) = (rooted_code(g, a, b), rooted_code(g, b, a));
            let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
            1u128 << 127 | ((lo.1 as u128) << hi.0 | hi.1 as u128)
        }
    })
}

/// One representative per isomorphism class of trees on `n` vertices,
/// grown by attaching a leaf to every vertex of every tree on `n - 1`
/// vertices. Sorted by canonical code.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut current = vec![Graph::empty(1).expect("one vertex")];
    for size in 2..=n {
        let mut next: BTreeMap<u128, Graph> = BTreeMap::new();
        for t in &current {
            for v in 0..t.n() {
                let mut adj = t.adjacency().to_vec();
                adj[v].insert(size - 1);
                adj.push(VertexSet::singleton(v));
                let grown = Graph::from_adjacency(adj);
                let code = tree_canonical_code(&grown).expect("small tree");
                next.entry(code).or_insert(grown);
            }
        }
        current = next.into_values().collect();
    }
    current
}

/// Isomorphism classes reached by sweeping all `n^(n-2)` Prüfer sequences;
/// maps canonical code to the first labeled tree found in the class.
pub fn tree_classes_by_prufer(n: usize) -> BTreeMap<u128, Graph> {
    let mut classes = BTreeMap::new();
    for t in labeled_trees(n) {
        let code = tree_canonical_code(&t).expect("small tree");
        classes.entry(code).or_insert(t);
    }
    classes
}

/// `count` connected graphs with orders drawn from `orders`, sampled as
/// `G(n, 1/2)` with consecutive seeds from `seed`, rejecting disconnected
/// draws. Deterministic.
pub fn random_connected_graphs(
    count: usize,
    orders: std::ops::RangeInclusive<usize>,
    seed: u64,
) -> Vec<Graph> {
    let span = (orders.end() - orders.start() + 1) as u64;
    let mut out = Vec::with_capacity(count);
    let mut s = seed;
    while out.len() < count {
        let n = orders.start() + (s % span) as usize;
        let g = FamilySpec::RandomGraph {
            n,
            num: 1,
            den: 2,
            seed: s,
        }
        .generate()
        .expect("valid random family");
        s += 1;
        if n >= 2 && g.is_connected() {
            out.push(g);
        }
    }
    out
}
