//! Functional graphs of translation-invariant operators.

mod brute;
mod classify;
mod orbit;
mod structure;

pub use brute::{brute_cap_from_env, brute_force_graph, BRUTE_CAP_ENV, DEFAULT_BRUTE_CAP};
pub use classify::{
    classify, classify_with, remark4_check, remark4_reports, ComplexityReport, Verdict,
};
pub use orbit::{
    max_orbit_stats, orbit_stats_algebraic, orbit_stats_iterative, OrbitStats, DEFAULT_BUDGET,
};
pub use structure::{
    cycle_structure, cycle_sum_product, decompose, decompose_with, factor_orders, tree_shape,
    CycleSum, FactorOrders, GraphDecomposition, TermOrder, TreeShape,
};
