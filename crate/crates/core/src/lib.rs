//! Exact total dominator colorings of small graphs.
//!
//! A *total dominator coloring* is a proper coloring in which every vertex
//! is adjacent to every vertex of at least one color class; χ_d^t(G) is the
//! fewest classes such a coloring can have. This crate computes it exactly,
//! together with the companion invariants χ, χ_d, γ and γ_t, the classical
//! constructive bounds, closed forms for standard families and trees, and
//! the universal-vertex reduction from graph coloring.
//!
//! Graphs hold at most [`MAX_VERTICES`] vertices; the exact solvers target
//! graphs of up to about 15 vertices.

pub mod coloring;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod reduction;
pub mod solver;
pub mod tree;
pub mod vertex_set;

pub use coloring::{
    chromatic_number_exact, common_neighborhood, is_dominator_coloring, is_proper,
    is_total_dominator_coloring, private_neighborhood, verify_cn_cover, Coloring,
};
pub use domination::{
    check_product_bound, gamma_exact, gamma_t_exact, is_dominating_set, is_total_dominating_set,
    DominationKind, DominationResult, ProductBoundCheck,
};
pub use error::{Error, Result};
pub use families::{
    comparison_report, formula_value, tree_formula, verify_family, ComparisonReport, FamilyKind,
    FormulaQuery, VerificationReport,
};
pub use graph::{read_dimacs, write_dimacs, EdgeList, FamilySpec, Graph};
pub use reduction::{reduce, verify_reduction, ReductionCheck, ReductionInstance};
pub use solver::bounds::{bounds_report, bounds_report_with, BoundsRecord};
pub use solver::{
    dc_exact, dc_exact_with, tdc_exact, tdc_exact_with, tdc_lower_bound, SolveReport, SolverConfig,
};
pub use tree::{analyze_tree, Center, TreeProfile};
pub use vertex_set::{VertexSet, MAX_VERTICES};
