use std::fmt;

/// Errors raised by the stiffness models, the design search and the pattern
/// generator.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("domain violation: {0}")]
    Domain(String),
    #[error("infeasible design problem: {0}")]
    Infeasible(Box<InfeasibleDiagnostic>),
    #[error("degenerate search box: {0}")]
    DegenerateBox(String),
    #[error("fabrication limit exceeded: flat extent {extent_mm:.3} mm > limit {limit_mm:.3} mm")]
    FabricationLimit { extent_mm: f64, limit_mm: f64 },
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),
    #[error("malformed pattern file: {0}")]
    PatternFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

/// The least-violating point found while scanning an infeasible problem.
#[derive(Debug, Clone, PartialEq)]
pub struct InfeasibleDiagnostic {
    pub width: f64,
    pub fold_angle: f64,
    pub crease_count: usize,
    /// Name of the constraint with the largest normalized violation at that point.
    pub worst_constraint: String,
    /// Normalized violation (violation divided by the bound magnitude).
    pub violation: f64,
}

impl fmt::Display for InfeasibleDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.crease_count == 0 {
            return write!(f, "no admissible point in the search box");
        }
        write!(
            f,
            "most-violated constraint `{}` (relative violation {:.3e}) at W = {:.4} mm, n = {}, alpha = {:.4} deg",
            self.worst_constraint,
            self.violation,
            self.width * 1e3,
            self.crease_count,
            self.fold_angle.to_degrees()
        )
    }
}
