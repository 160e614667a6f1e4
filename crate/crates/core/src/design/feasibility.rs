use serde::Serialize;

use super::constraints::{DesignConstraints, DesignLayout};
use crate::geometry::{mass, FoldedDimensions};
use crate::layer::{half_angle, Assembly};
use crate::material::Material;
use crate::moduli::triangular_moduli;
use crate::stiffness::{compose_orthogonal, layer_bending_from_moduli, layer_inplane_from_moduli};

/// Relative tolerance applied to every inequality.
pub const FEASIBILITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// `value >= bound`
    Lower,
    /// `value <= bound`
    Upper,
    /// `value == bound`
    Equal,
}

/// One evaluated inequality. `slack` is positive when satisfied with margin,
/// zero on the boundary and negative when violated, in the value's SI unit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstraintCheck {
    pub name: &'static str,
    pub kind: BoundKind,
    pub value: f64,
    pub bound: f64,
    pub slack: f64,
    pub satisfied: bool,
}

impl ConstraintCheck {
    fn new(name: &'static str, kind: BoundKind, value: f64, bound: f64) -> Self {
        let slack = match kind {
            BoundKind::Lower => value - bound,
            BoundKind::Upper => bound - value,
            BoundKind::Equal => -(value - bound).abs(),
        };
        let scale = bound.abs().max(value.abs()).max(f64::MIN_POSITIVE);
        let satisfied = slack.is_finite() && slack >= -FEASIBILITY_TOL * scale;
        Self {
            name,
            kind,
            value,
            bound,
            slack,
            satisfied,
        }
    }

    /// Violation relative to the bound's magnitude; zero when satisfied.
    pub fn normalized_violation(&self) -> f64 {
        if self.satisfied {
            0.0
        } else if !self.slack.is_finite() {
            f64::INFINITY
        } else {
            -self.slack / self.bound.abs().max(self.value.abs()).max(f64::MIN_POSITIVE)
        }
    }
}

/// Per-constraint verdicts for one candidate design, plus the quantities they
/// were computed from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeasibilityReport {
    pub width: f64,
    pub fold_angle: f64,
    pub crease_count: usize,
    pub checks: Vec<ConstraintCheck>,
    pub feasible: bool,
    pub folded_length: f64,
    pub folded_thickness: f64,
    /// `(n + 1) W`
    pub flat_length: f64,
    /// Tallest panel; `None` when the layout cannot be built.
    pub flat_height: Option<f64>,
    pub k_eta: Option<f64>,
    pub d_eta: Option<f64>,
    pub mass: Option<f64>,
}

impl FeasibilityReport {
    pub fn check(&self, name: &str) -> Option<&ConstraintCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn worst(&self) -> Option<&ConstraintCheck> {
        self.checks
            .iter()
            .filter(|c| !c.satisfied)
            .max_by(|a, b| a.normalized_violation().total_cmp(&b.normalized_violation()))
    }

    pub fn max_normalized_violation(&self) -> f64 {
        self.checks.iter().map(|c| c.normalized_violation()).fold(0.0, f64::max)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Evaluate every constraint and every metric.
    Full,
    /// Stop at the first violated constraint; mass only for feasible points.
    FirstViolation,
}

/// Evaluates the constraints in a fixed order: layout, fabrication limit,
/// folded length, folded thickness, stiffness floors.
pub(crate) fn assess(
    material: &Material,
    c: &DesignConstraints,
    width: f64,
    fold_angle: f64,
    crease_count: usize,
    mode: Mode,
) -> FeasibilityReport {
    let flat_length = (crease_count + 1) as f64 * width;
    let layer = c
        .layout
        .layer(*material, width, fold_angle, crease_count)
        .map(|l| l.with_unit_count(c.unit_count));
    let (s, co) = half_angle(fold_angle);
    let folded = FoldedDimensions {
        length: flat_length * s,
        thickness: 2.0 * width * co,
    };

    let mut report = FeasibilityReport {
        width,
        fold_angle,
        crease_count,
        checks: Vec::with_capacity(9),
        feasible: true,
        folded_length: folded.length,
        folded_thickness: folded.thickness,
        flat_length,
        flat_height: layer.as_ref().ok().map(|l| l.flat_extent().1),
        k_eta: None,
        d_eta: None,
        mass: None,
    };

    // Returns true when evaluation should stop.
    let push = |report: &mut FeasibilityReport, check: ConstraintCheck| -> bool {
        let ok = check.satisfied;
        report.feasible &= ok;
        report.checks.push(check);
        !ok && mode == Mode::FirstViolation
    };

    if let DesignLayout::Circular { radius } = c.layout {
        let diameter = 2.0 * radius;
        let value = if layer.is_ok() { folded.length } else { f64::INFINITY };
        if push(&mut report, ConstraintCheck::new("layout_diameter", BoundKind::Equal, value, diameter)) {
            return report;
        }
    }
    if let Some(limit) = c.fabrication_limit {
        if push(&mut report, ConstraintCheck::new("flat_length", BoundKind::Upper, flat_length, limit)) {
            return report;
        }
        let height = report.flat_height.unwrap_or(f64::INFINITY);
        if push(&mut report, ConstraintCheck::new("flat_height", BoundKind::Upper, height, limit)) {
            return report;
        }
    }
    if let Some(lo) = c.folded_length_min {
        if push(&mut report, ConstraintCheck::new("folded_length_min", BoundKind::Lower, folded.length, lo)) {
            return report;
        }
    }
    if let Some(hi) = c.folded_length_max {
        if push(&mut report, ConstraintCheck::new("folded_length_max", BoundKind::Upper, folded.length, hi)) {
            return report;
        }
    }
    if let Some(lo) = c.thickness_min {
        if push(&mut report, ConstraintCheck::new("thickness_min", BoundKind::Lower, folded.thickness, lo)) {
            return report;
        }
    }
    if let Some(hi) = c.thickness_max {
        if push(&mut report, ConstraintCheck::new("thickness_max", BoundKind::Upper, folded.thickness, hi)) {
            return report;
        }
    }

    let layer = match layer {
        Ok(l) => l,
        Err(_) => {
            report.feasible = false;
            for (name, floor) in [("k_min", c.k_min), ("d_min", c.d_min)] {
                if let Some(floor) = floor {
                    report.checks.push(ConstraintCheck::new(name, BoundKind::Lower, 0.0, floor));
                }
            }
            if let Some(last) = report.checks.last_mut() {
                last.satisfied = false;
            }
            return report;
        }
    };

    let need_stiffness = mode == Mode::Full || c.k_min.is_some() || c.d_min.is_some();
    if need_stiffness {
        match triangular_moduli(&layer) {
            Ok(m) => {
                if mode == Mode::Full || c.k_min.is_some() {
                    let k = layer_inplane_from_moduli(&layer, &m);
                    report.k_eta = Some(compose_orthogonal(k, k, c.eta));
                }
                if mode == Mode::Full || c.d_min.is_some() {
                    let d = layer_bending_from_moduli(&layer, &m);
                    report.d_eta = Some(compose_orthogonal(d, d, c.eta));
                }
            }
            Err(_) => report.feasible = false,
        }
    }
    if let Some(floor) = c.k_min {
        let value = report.k_eta.unwrap_or(0.0);
        if push(&mut report, ConstraintCheck::new("k_min", BoundKind::Lower, value, floor)) {
            return report;
        }
    }
    if let Some(floor) = c.d_min {
        let value = report.d_eta.unwrap_or(0.0);
        if push(&mut report, ConstraintCheck::new("d_min", BoundKind::Lower, value, floor)) {
            return report;
        }
    }

    if mode == Mode::Full || report.feasible {
        report.mass = mass(&Assembly::identical(layer), c.connector_allowance).ok();
    }
    report
}

/// Evaluates every constraint of `c` at the square- or circular-layout
/// design `(width, fold_angle, crease_count)` built from `material`, with
/// identical layers. Infeasibility is reported, never raised.
pub fn check_feasible(
    material: &Material,
    width: f64,
    fold_angle: f64,
    crease_count: usize,
    c: &DesignConstraints,
) -> FeasibilityReport {
    assess(material, c, width, fold_angle, crease_count, Mode::Full)
}
