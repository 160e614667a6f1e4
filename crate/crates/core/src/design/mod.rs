//! Minimum-mass design of square and circular OADLC mechanisms with
//! identical layers.

mod constraints;
mod feasibility;
mod naive;
mod search;
mod simplex;

pub use constraints::{DesignConstraints, DesignLayout};
pub use feasibility::{check_feasible, BoundKind, ConstraintCheck, FeasibilityReport, FEASIBILITY_TOL};
pub use naive::{naive_designs_report, NaiveDesignRow};
pub use search::{
    exhaustive_search, optimize, optimize_with, DesignSolution, GridResolution, SearchMethod, SearchOptions,
    SearchStats,
};
