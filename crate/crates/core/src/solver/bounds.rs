//! Constructive lower and upper bounds for χ_d^t, each with a certificate
//! that can be re-checked independently of how it was found.

use serde::{Deserialize, Serialize};

use super::{tdc_exact_with, SolverConfig};
use crate::coloring::{chromatic_number_exact, is_proper, is_total_dominator_coloring, Coloring};
use crate::domination::{gamma_t_exact, is_total_dominating_set};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// α_0 enumerates independent sets exhaustively; past this size it is refused.
pub const ALPHA0_MAX_VERTICES: usize = 24;

/// An upper bound realized by an explicit total dominator coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructiveBound {
    pub value: usize,
    /// The vertex set the construction is built around (the α_0-set, the
    /// γ_t-set, or the partite class).
    pub set: VertexSet,
    pub witness: Coloring,
}

fn validated(
    g: &Graph,
    what: &str,
    value: usize,
    set: VertexSet,
    labels: &[usize],
) -> Result<ConstructiveBound> {
    let witness = Coloring::from_labels(labels);
    if witness.k() != value || !is_total_dominator_coloring(g, &witness) {
        return Err(Error::Internal(format!(
            "{what} construction on {set} is not a total dominator coloring with {value} classes"
        )));
    }
    Ok(ConstructiveBound {
        value,
        set,
        witness,
    })
}

fn require_connected_total(g: &Graph) -> Result<()> {
    if g.n() == 0 || g.has_isolated_vertex() {
        return Err(Error::domain(
            "bound needs a nonempty graph without isolated vertices",
        ));
    }
    if !g.is_connected() {
        return Err(Error::domain("bound is stated for connected graphs"));
    }
    Ok(())
}

/// Whether independent `s` leaves `G - S` with no isolated vertex, or only
/// isolated vertices adjacent to all of `S`.
fn alpha0_admissible(g: &Graph, s: VertexSet) -> bool {
    let rest = g.vertices() - s;
    rest.iter()
        .all(|v| g.neighbors(v).intersects(rest) || s.is_subset(g.neighbors(v)))
}

/// α_0(G) and the lexicographically least maximum admissible set.
pub fn alpha0(g: &Graph) -> Result<(usize, VertexSet)> {
    if g.n() > ALPHA0_MAX_VERTICES {
        return Err(Error::input(format!(
            "alpha0 enumeration is limited to {ALPHA0_MAX_VERTICES} vertices"
        )));
    }
    fn walk(g: &Graph, set: VertexSet, allowed: VertexSet, best: &mut (usize, VertexSet)) {
        if set.len() > best.0 && alpha0_admissible(g, set) {
            *best = (set.len(), set);
        }
        if set.len() + allowed.len() <= best.0 {
            return;
        }
        let mut allowed = allowed;
        while let Some(v) = allowed.first() {
            allowed.remove(v);
            let mut next = set;
            next.insert(v);
            walk(g, next, allowed - g.neighbors(v), best);
        }
    }
    let mut best = (0, VertexSet::EMPTY);
    walk(g, VertexSet::EMPTY, g.vertices(), &mut best);
    Ok(best)
}

/// `χ_d^t <= n + 1 - α_0`: singletons off the α_0-set, one shared class on it.
pub fn ub_alpha0(g: &Graph) -> Result<ConstructiveBound> {
    require_connected_total(g)?;
    let (a0, s) = alpha0(g)?;
    let labels: Vec<usize> = (0..g.n())
        .map(|v| if s.contains(v) { 0 } else { v + 1 })
        .collect();
    validated(g, "alpha0", g.n() + 1 - a0, s, &labels)
}

/// `χ_d^t <= γ_t + min_S χ(G[V - S])` over all γ_t-sets `S`, realized by
/// singletons on `S` plus an optimal proper coloring of the rest.
pub fn ub_gamma_t_chi(g: &Graph) -> Result<ConstructiveBound> {
    require_connected_total(g)?;
    let gt = gamma_t_exact(g)?;
    let mut best: Option<(usize, VertexSet, Coloring, Vec<usize>)> = None;
    for &s in &gt.witnesses {
        let (rest, labels_of) = g.induced_subgraph(g.vertices() - s);
        let (chi, coloring) = chromatic_number_exact(&rest);
        if best.as_ref().is_none_or(|b| chi < b.0) {
            best = Some((chi, s, coloring, labels_of));
        }
    }
    let (chi, s, coloring, labels_of) = best.expect("at least one γ_t-set");
    let mut labels = vec![0; g.n()];
    for (i, &v) in labels_of.iter().enumerate() {
        labels[v] = coloring.color(i);
    }
    for v in s {
        labels[v] = g.n() + 1 + v;
    }
    validated(g, "gamma_t + chi", gt.value + chi, s, &labels)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartiteBounds {
    /// `n - n' + 1` with `n' = max{n_i : n_i <= δ}`, if some part qualifies.
    pub n_prime: Option<ConstructiveBound>,
    /// `γ_t + p`, when δ >= 1.
    pub gamma_t_plus_p: Option<usize>,
}

/// Bounds for a graph given a partition of `V` into independent parts.
pub fn ub_partite(g: &Graph, parts: &[VertexSet]) -> Result<PartiteBounds> {
    let mut seen = VertexSet::EMPTY;
    for &p in parts {
        if p.is_empty() {
            return Err(Error::input("partite parts must be non-empty"));
        }
        if p.intersects(seen) || !p.is_subset(g.vertices()) {
            return Err(Error::input("parts do not partition the vertex set"));
        }
        if !g.is_independent(p) {
            return Err(Error::input(format!("part {p} is not independent")));
        }
        seen |= p;
    }
    if seen != g.vertices() {
        return Err(Error::input("parts do not cover the vertex set"));
    }
    let delta = g.min_degree();
    // first part of the largest admissible size
    let chosen = parts
        .iter()
        .filter(|p| p.len() <= delta)
        .fold(None::<VertexSet>, |best, &p| match best {
            Some(b) if b.len() >= p.len() => Some(b),
            _ => Some(p),
        });
    let n_prime = match chosen {
        Some(part) => {
            let labels: Vec<usize> = (0..g.n())
                .map(|v| if part.contains(v) { 0 } else { v + 1 })
                .collect();
            Some(validated(
                g,
                "partite",
                g.n() - part.len() + 1,
                part,
                &labels,
            )?)
        }
        None => None,
    };
    let gamma_t_plus_p = if delta >= 1 {
        Some(gamma_t_exact(g)?.value + parts.len())
    } else {
        None
    };
    Ok(PartiteBounds {
        n_prime,
        gamma_t_plus_p,
    })
}

/// When Δ = n - 1: χ_d^t = ℓ + χ(G - U) for the ℓ universal vertices `U`,
/// witnessed by singletons on `U` plus an optimal coloring of the rest.
pub fn universal_vertex_value(g: &Graph) -> Option<ConstructiveBound> {
    let n = g.n();
    let universal = g.universal_vertices();
    if n < 2 || universal.is_empty() {
        return None;
    }
    let (rest, labels_of) = g.induced_subgraph(g.vertices() - universal);
    let (chi, coloring) = chromatic_number_exact(&rest);
    let mut labels = vec![0; n];
    for (i, &v) in labels_of.iter().enumerate() {
        labels[v] = coloring.color(i);
    }
    for u in universal {
        labels[u] = n + 1 + u;
    }
    // n >= 2 with a universal vertex is connected and isolation-free
    Some(
        validated(
            g,
            "universal vertex",
            universal.len() + chi,
            universal,
            &labels,
        )
        .expect("universal-vertex coloring is a total dominator coloring"),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentBounds {
    /// Exact χ_d^t of each component, ordered as `Graph::connected_components`.
    pub per_component: Vec<usize>,
    pub components: usize,
    /// `max χ_d^t(G_i) + 2ω - 2`.
    pub lb: usize,
    /// `Σ χ_d^t(G_i)`, realized by `witness`.
    pub ub: usize,
    pub witness: Coloring,
    /// At most one component is not complete bipartite.
    pub equality_expected: bool,
}

pub fn component_bounds(g: &Graph, config: &SolverConfig) -> Result<ComponentBounds> {
    if g.n() == 0 || g.has_isolated_vertex() {
        return Err(Error::domain(
            "every component needs minimum degree at least 1",
        ));
    }
    let comps = g.connected_components();
    let mut labels = vec![0; g.n()];
    let mut per_component = Vec::with_capacity(comps.len());
    let mut non_cb = 0;
    let mut offset = 0;
    for &comp in &comps {
        let (sub, labels_of) = g.induced_subgraph(comp);
        let report = tdc_exact_with(&sub, config)?;
        for (i, &v) in labels_of.iter().enumerate() {
            labels[v] = offset + report.witness.color(i);
        }
        offset += report.value;
        per_component.push(report.value);
        if !sub.is_complete_bipartite() {
            non_cb += 1;
        }
    }
    let omega = comps.len();
    let lb = per_component.iter().max().copied().unwrap_or(0) + 2 * omega - 2;
    let ub: usize = per_component.iter().sum();
    let witness = Coloring::from_labels(&labels);
    if witness.k() != ub || !is_total_dominator_coloring(g, &witness) {
        return Err(Error::Internal(
            "combined component coloring is invalid".into(),
        ));
    }
    Ok(ComponentBounds {
        per_component,
        components: omega,
        lb,
        ub,
        witness,
        equality_expected: non_cb <= 1,
    })
}

/// `max{χ, γ_t}` with the evidence that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObservationBound {
    pub value: usize,
    pub chi: usize,
    pub chi_witness: Coloring,
    pub gamma_t: usize,
    pub gamma_t_set: VertexSet,
}

/// Every bound that applies to a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsRecord {
    pub n: usize,
    pub obs_lb: ObservationBound,
    pub components_lb: Option<usize>,
    pub components_ub: Option<ComponentBounds>,
    pub alpha0_ub: Option<ConstructiveBound>,
    pub gamma_t_chi_ub: Option<ConstructiveBound>,
    /// `n - n' + 1` over the classes of an optimal proper coloring.
    pub partite_ub: Option<ConstructiveBound>,
    /// `γ_t + χ`, the p-partite bound with `p = χ`.
    pub gamma_t_p_ub: Option<usize>,
    /// Exact value through the universal-vertex formula, when Δ = n - 1.
    pub universal_value: Option<ConstructiveBound>,
}

impl BoundsRecord {
    /// Best lower bound present.
    pub fn lower(&self) -> usize {
        self.obs_lb.value.max(self.components_lb.unwrap_or(0))
    }

    /// Named upper bounds present, `n` included.
    pub fn upper_bounds(&self) -> Vec<(&'static str, usize)> {
        let mut out = vec![("n", self.n)];
        let mut push = |name, b: &Option<ConstructiveBound>| {
            if let Some(b) = b {
                out.push((name, b.value));
            }
        };
        push("alpha0_ub", &self.alpha0_ub);
        push("gamma_t_chi_ub", &self.gamma_t_chi_ub);
        push("partite_ub", &self.partite_ub);
        push("universal_value", &self.universal_value);
        if let Some(c) = &self.components_ub {
            out.push(("components_ub", c.ub));
        }
        if let Some(v) = self.gamma_t_p_ub {
            out.push(("gamma_t_p_ub", v));
        }
        out
    }

    pub fn upper(&self) -> usize {
        self.upper_bounds()
            .into_iter()
            .map(|(_, v)| v)
            .min()
            .unwrap_or(self.n)
    }

    /// Re-checks every certificate against `g` without trusting the producer.
    pub fn revalidate(&self, g: &Graph) -> Result<()> {
        let fail = |what: &str| {
            Err(Error::Internal(format!(
                "certificate for {what} does not validate"
            )))
        };
        let obs = &self.obs_lb;
        if obs.chi_witness.k() != obs.chi
            || !is_proper(g, &obs.chi_witness)?
            || obs.gamma_t_set.len() != obs.gamma_t
            || !is_total_dominating_set(g, obs.gamma_t_set)
            || obs.value != obs.chi.max(obs.gamma_t)
        {
            return fail("obs_lb");
        }
        for (name, b) in [
            ("alpha0_ub", &self.alpha0_ub),
            ("gamma_t_chi_ub", &self.gamma_t_chi_ub),
            ("partite_ub", &self.partite_ub),
            ("universal_value", &self.universal_value),
        ] {
            if let Some(b) = b {
                if b.witness.k() != b.value || !is_total_dominator_coloring(g, &b.witness) {
                    return fail(name);
                }
            }
        }
        if let Some(c) = &self.components_ub {
            if c.witness.k() != c.ub || !is_total_dominator_coloring(g, &c.witness) {
                return fail("components_ub");
            }
        }
        Ok(())
    }
}

pub fn bounds_report(g: &Graph) -> Result<BoundsRecord> {
    bounds_report_with(g, &SolverConfig::default())
}

pub fn bounds_report_with(g: &Graph, config: &SolverConfig) -> Result<BoundsRecord> {
    if g.n() == 0 || g.has_isolated_vertex() {
        return Err(Error::domain(
            "bounds need a nonempty graph without isolated vertices",
        ));
    }
    let (chi, chi_witness) = chromatic_number_exact(g);
    let gt = gamma_t_exact(g)?;
    let obs_lb = ObservationBound {
        value: chi.max(gt.value),
        chi,
        chi_witness: chi_witness.clone(),
        gamma_t: gt.value,
        gamma_t_set: gt.witnesses[0],
    };
    let connected = g.is_connected();
    let components_ub = if connected {
        None
    } else {
        Some(component_bounds(g, config)?)
    };
    let small = g.n() <= ALPHA0_MAX_VERTICES;
    let partite = ub_partite(g, &chi_witness.classes())?;
    Ok(BoundsRecord {
        n: g.n(),
        obs_lb,
        components_lb: components_ub.as_ref().map(|c| c.lb),
        components_ub,
        alpha0_ub: if connected && small {
            Some(ub_alpha0(g)?)
        } else {
            None
        },
        gamma_t_chi_ub: if connected {
            Some(ub_gamma_t_chi(g)?)
        } else {
            None
        },
        partite_ub: partite.n_prime,
        gamma_t_p_ub: partite.gamma_t_plus_p,
        universal_value: universal_vertex_value(g),
    })
}
