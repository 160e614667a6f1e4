//! Stiffness models and design tools for orthogonally assembled
//! double-layered corrugated (OADLC) mechanisms.
//!
//! Two corrugated sheets with triangular profiles are stacked with their
//! creases at right angles. Each unit cell is replaced by an equivalent flat
//! plate ([`moduli`]), the cells of a layer are combined as series and
//! parallel springs ([`stiffness`]), and the two layers are mixed by the
//! direction of interest. On top of the model sit a minimum-mass design
//! search ([`design`]) and a cut-file generator ([`pattern`]).
//!
//! Everything inside the crate is SI (m, Pa, N/m, N·m, kg, rad); [`units`]
//! holds the conversions used at the boundaries.

pub mod design;
pub mod error;
pub mod geometry;
pub mod layer;
pub mod material;
pub mod moduli;
pub mod pattern;
pub mod stiffness;
pub mod units;

pub use design::{
    check_feasible, exhaustive_search, naive_designs_report, optimize, DesignConstraints, DesignLayout,
    DesignSolution, FeasibilityReport, GridResolution, SearchOptions,
};
pub use error::{Error, Result};
pub use geometry::{folded_dimensions, mass, FoldedDimensions};
pub use layer::{Assembly, LayerSpec, Layout, UnitCount};
pub use material::Material;
pub use moduli::{moduli_from_plate_matrices, triangular_moduli, EquivalentModuli, PlateMatrices};
pub use pattern::{generate_assembly_kit, generate_layer_pattern, FoldPattern, TabSpec};
pub use stiffness::{
    analyze, assembly_bending, assembly_inplane, layer_bending, layer_inplane, pipeline_d, pipeline_k,
    DirectionalStiffness, StiffnessReport,
};
