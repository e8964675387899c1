//! The universal-vertex reduction from graph k-colorability to total
//! dominator k'-colorability with `k' = k + 1`.

use serde::{Deserialize, Serialize};

use crate::coloring::{chromatic_number_exact, is_proper, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::{tdc_exact_with, SolverConfig};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionInstance {
    pub source: Graph,
    pub k: usize,
    /// `source` plus a vertex (label `source.n()`) adjacent to everything.
    pub reduced: Graph,
    pub k_prime: usize,
}

impl ReductionInstance {
    /// Label of the added vertex in `reduced`.
    pub fn apex(&self) -> usize {
        self.source.n()
    }
}

pub fn reduce(g: &Graph, k: usize) -> Result<ReductionInstance> {
    if k < 1 {
        return Err(Error::input("color count k must be at least 1"));
    }
    Ok(ReductionInstance {
        source: g.clone(),
        k,
        reduced: g.add_universal_vertex()?,
        k_prime: k + 1,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionCheck {
    pub chi: usize,
    pub tdc_of_reduced: usize,
    /// `χ_d^t(G') == χ(G) + 1`.
    pub holds: bool,
    /// The optimal total dominator coloring of `G'` found by the solver.
    pub reduced_witness: Coloring,
    /// That witness with the apex deleted; a proper coloring of `G`.
    pub extracted: Coloring,
    /// The apex is alone in its class.
    pub apex_alone: bool,
}

/// Solves both sides exactly and maps the reduced witness back to `G`.
/// A budget overrun surfaces as [`Error::BudgetExceeded`], i.e. inconclusive.
pub fn verify_reduction(g: &Graph, config: &SolverConfig) -> Result<ReductionCheck> {
    let inst = reduce(g, 1)?;
    let chi = chromatic_number_exact(g).0;
    let report = tdc_exact_with(&inst.reduced, config)?;
    let apex = inst.apex();
    let apex_color = report.witness.color(apex);
    let apex_alone = (0..g.n()).all(|v| report.witness.color(v) != apex_color);
    let extracted = Coloring::from_labels(&report.witness.assignment()[..g.n()]);
    if !is_proper(g, &extracted)? {
        return Err(Error::Internal(
            "deleting the apex did not leave a proper coloring".into(),
        ));
    }
    Ok(ReductionCheck {
        chi,
        tdc_of_reduced: report.value,
        holds: report.value == chi + 1,
        reduced_witness: report.witness,
        extracted,
        apex_alone,
    })
}
