//! Independent reference evaluators for the corrugated-laminate stiffness
//! models.
//!
//! Nothing here shares code with `oadlc-core`. The spring reducer works on
//! plain stiffness lists, and the moduli evaluator re-derives the triangular
//! unit-cell moduli at 192-bit precision from algebraically rearranged forms,
//! so a mistake in the production formulas cannot cancel against the same
//! mistake here.

mod moduli;
mod network;
mod spring;

pub use moduli::{reference_moduli, ReferenceModuli};
pub use network::{reference_assembly, reference_layer, ReferenceLayer};
pub use spring::{reduce, SpringChain, Topology};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("invalid spring chain: {0}")]
    InvalidChain(String),
    #[error("domain violation: {0}")]
    Domain(String),
    #[error("extended-precision arithmetic failed: {0}")]
    Arithmetic(String),
}
