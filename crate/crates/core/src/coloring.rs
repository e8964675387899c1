//! Colorings, the proper / dominator / total dominator predicates, common and
//! private neighborhoods, and the exact chromatic number.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A total assignment of vertices to color classes `1..=k`.
///
/// Every class in `1..=k` is non-empty. Serialized as
/// `{"k": 2, "assignment": [1, 2, 1, 2]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct Coloring {
    k: usize,
    assignment: Vec<usize>,
}

#[derive(Deserialize)]
struct RawColoring {
    k: usize,
    assignment: Vec<usize>,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = Error;

    fn try_from(raw: RawColoring) -> Result<Coloring> {
        let c = Coloring::new(raw.assignment)?;
        if c.k != raw.k {
            return Err(Error::input(format!(
                "coloring declares k = {} but uses {} classes",
                raw.k, c.k
            )));
        }
        Ok(c)
    }
}

impl Coloring {
    /// Validates an assignment with classes numbered `1..=k`, all used.
    pub fn new(assignment: Vec<usize>) -> Result<Coloring> {
        let k = assignment.iter().copied().max().unwrap_or(0);
        if assignment.contains(&0) {
            return Err(Error::input("color classes are numbered from 1"));
        }
        let mut used = vec![false; k + 1];
        for &c in &assignment {
            used[c] = true;
        }
        if let Some(missing) = (1..=k).find(|&c| !used[c]) {
            return Err(Error::input(format!("color class {missing} is empty")));
        }
        Ok(Coloring { k, assignment })
    }

    /// Relabels arbitrary labels to `1..=k` in order of first use.
    pub fn from_labels(labels: &[usize]) -> Coloring {
        let mut map: Vec<(usize, usize)> = Vec::new();
        let assignment = labels
            .iter()
            .map(|&l| match map.iter().find(|(from, _)| *from == l) {
                Some(&(_, to)) => to,
                None => {
                    let to = map.len() + 1;
                    map.push((l, to));
                    to
                }
            })
            .collect();
        Coloring {
            k: map.len(),
            assignment,
        }
    }

    /// Builds a coloring from disjoint classes covering `0..n`, canonicalized
    /// by first use.
    pub fn from_classes(n: usize, classes: &[VertexSet]) -> Result<Coloring> {
        let mut labels = vec![usize::MAX; n];
        for (i, class) in classes.iter().enumerate() {
            for v in class.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if labels[v] != usize::MAX {
                    return Err(Error::input(format!("vertex {v} appears in two classes")));
                }
                labels[v] = i;
            }
        }
        if let Some(v) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::input(format!("vertex {v} is not colored")));
        }
        Ok(Coloring::from_labels(&labels))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    /// Classes `V_1..V_k`, index `i - 1` holding class `i`.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = vec![VertexSet::EMPTY; self.k];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c - 1].insert(v);
        }
        classes
    }

    /// Class `i` (1-based).
    pub fn class(&self, i: usize) -> Result<VertexSet> {
        if i == 0 || i > self.k {
            return Err(Error::input(format!(
                "class index {i} outside 1..={}",
                self.k
            )));
        }
        Ok(self.classes()[i - 1])
    }
}

fn check_total(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.n() {
        return Err(Error::input(format!(
            "coloring covers {} vertices but the graph has {}",
            c.len(),
            g.n()
        )));
    }
    Ok(())
}

pub(crate) fn classes_proper(g: &Graph, classes: &[VertexSet]) -> bool {
    classes.iter().all(|&cl| g.is_independent(cl))
}

/// Every vertex `v` has a class inside `target(v)`.
pub(crate) fn classes_dominated_by(
    g: &Graph,
    classes: &[VertexSet],
    target: impl Fn(usize) -> VertexSet,
) -> bool {
    (0..g.n()).all(|v| {
        let t = target(v);
        classes.iter().any(|cl| cl.is_subset(t))
    })
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    check_total(g, c)?;
    Ok(g.edges().all(|(u, v)| c.color(u) != c.color(v)))
}

/// Proper, and every vertex is adjacent to all of some class. A coloring of
/// a different vertex count is never a total dominator coloring of `g`.
pub fn is_total_dominator_coloring(g: &Graph, c: &Coloring) -> bool {
    if c.len() != g.n() {
        return false;
    }
    let classes = c.classes();
    classes_proper(g, &classes) && classes_dominated_by(g, &classes, |v| g.neighbors(v))
}

/// Proper, and every closed neighborhood contains some class.
pub fn is_dominator_coloring(g: &Graph, c: &Coloring) -> bool {
    if c.len() != g.n() {
        return false;
    }
    let classes = c.classes();
    classes_proper(g, &classes) && classes_dominated_by(g, &classes, |v| g.closed_neighbors(v))
}

/// `CN(class)`: vertices adjacent to every member of `class`.
pub fn common_neighborhood(g: &Graph, class: VertexSet) -> Result<VertexSet> {
    if class.is_empty() {
        return Err(Error::input("common neighborhood of an empty class"));
    }
    if !class.is_subset(g.vertices()) {
        return Err(Error::input("class contains vertices outside the graph"));
    }
    Ok(class
        .iter()
        .fold(g.vertices(), |acc, u| acc & g.neighbors(u)))
}

/// `pn(V_i; c)`: vertices adjacent to all of class `i` and to all of no
/// other class.
pub fn private_neighborhood(g: &Graph, c: &Coloring, i: usize) -> Result<VertexSet> {
    check_total(g, c)?;
    c.class(i)?;
    let classes = c.classes();
    Ok((0..g.n())
        .filter(|&v| {
            let nb = g.neighbors(v);
            classes
                .iter()
                .enumerate()
                .all(|(j, cl)| cl.is_subset(nb) == (j + 1 == i))
        })
        .collect())
}

/// Checks that the common neighborhoods of the classes of size at most Δ
/// cover `V`. Holds for every total dominator coloring.
pub fn verify_cn_cover(g: &Graph, c: &Coloring) -> Result<bool> {
    if !is_total_dominator_coloring(g, c) {
        return Err(Error::domain("coloring is not a total dominator coloring"));
    }
    let delta = g.max_degree();
    let mut cover = VertexSet::EMPTY;
    for cl in c.classes().into_iter().filter(|cl| cl.len() <= delta) {
        cover |= common_neighborhood(g, cl)?;
    }
    Ok(cover == g.vertices())
}

/// Greedy clique in decreasing-degree order; a lower bound for χ.
pub(crate) fn greedy_clique(g: &Graph) -> VertexSet {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut best = VertexSet::EMPTY;
    for &start in &order {
        let mut clique = VertexSet::singleton(start);
        let mut cand = g.neighbors(start);
        for &v in &order {
            if cand.contains(v) {
                clique.insert(v);
                cand &= g.neighbors(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

struct ColorSearch<'a> {
    g: &'a Graph,
    k: usize,
    classes: Vec<VertexSet>,
}

impl ColorSearch<'_> {
    fn extend(&mut self, v: usize, used: usize) -> bool {
        if v == self.g.n() {
            return true;
        }
        let nb = self.g.neighbors(v);
        for c in 0..self.k.min(used + 1) {
            if self.classes[c].intersects(nb) {
                continue;
            }
            self.classes[c].insert(v);
            if self.extend(v + 1, used.max(c + 1)) {
                return true;
            }
            self.classes[c].remove(v);
        }
        false
    }
}

/// χ(G) with a witness.
///
/// Backtracking over vertices in label order; a vertex may open at most one
/// new class, and the sweep starts from a greedy clique size. The witness is
/// the lexicographically least proper coloring with χ classes.
pub fn chromatic_number_exact(g: &Graph) -> (usize, Coloring) {
    let n = g.n();
    if n == 0 {
        return (0, Coloring::from_labels(&[]));
    }
    let mut k = greedy_clique(g).len().max(1);
    loop {
        let mut search = ColorSearch {
            g,
            k,
            classes: vec![VertexSet::EMPTY; k],
        };
        if search.extend(0, 0) {
            let classes: Vec<VertexSet> = search
                .classes
                .into_iter()
                .filter(|c| !c.is_empty())
                .collect();
            let witness = Coloring::from_classes(n, &classes).expect("classes partition V");
            return (witness.k(), witness);
        }
        k += 1;
    }
}
