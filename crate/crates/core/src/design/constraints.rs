use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::layer::{LayerSpec, UnitCount};
use crate::material::Material;

/// Planform used to derive crease lengths from `(W, α, n)` during design.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum DesignLayout {
    /// Square folded footprint: crease length equals the folded chordwise length.
    Square,
    /// Disk of the given radius (m). The folded chordwise length must equal
    /// the diameter.
    Circular { radius: f64 },
}

impl DesignLayout {
    pub fn layer(&self, material: Material, width: f64, fold_angle: f64, crease_count: usize) -> Result<LayerSpec> {
        match *self {
            DesignLayout::Square => LayerSpec::square(material, width, fold_angle, crease_count),
            DesignLayout::Circular { radius } => {
                LayerSpec::circular(material, width, fold_angle, crease_count, radius)
            }
        }
    }
}

/// Bounds and requirements of the minimum-mass design problem. SI units;
/// `None` leaves a constraint out.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DesignConstraints {
    /// Largest flat sheet dimension the cutter accepts.
    pub fabrication_limit: Option<f64>,
    pub folded_length_min: Option<f64>,
    pub folded_length_max: Option<f64>,
    pub thickness_min: Option<f64>,
    pub thickness_max: Option<f64>,
    /// In-plane stiffness floor (N/m).
    pub k_min: Option<f64>,
    /// Bending stiffness floor (N·m).
    pub d_min: Option<f64>,
    pub width_bounds: (f64, f64),
    pub crease_bounds: (usize, usize),
    pub angle_bounds: (f64, f64),
    /// Direction (rad) in which the stiffness floors apply.
    pub eta: f64,
    pub layout: DesignLayout,
    pub unit_count: UnitCount,
    /// Extra mass fraction for connectors and tabs.
    pub connector_allowance: f64,
}

impl Default for DesignConstraints {
    fn default() -> Self {
        Self {
            fabrication_limit: None,
            folded_length_min: None,
            folded_length_max: None,
            thickness_min: None,
            thickness_max: None,
            k_min: None,
            d_min: None,
            width_bounds: (1e-3, 50e-3),
            crease_bounds: (1, 200),
            angle_bounds: (5f64.to_radians(), 175f64.to_radians()),
            eta: 0.0,
            layout: DesignLayout::Square,
            unit_count: UnitCount::Creases,
            connector_allowance: 0.0,
        }
    }
}

fn ordered(name: &str, lo: Option<f64>, hi: Option<f64>) -> Result<()> {
    for x in [lo, hi].into_iter().flatten() {
        if !x.is_finite() || x < 0.0 {
            return Err(Error::DegenerateBox(format!("{name} bound {x} must be finite and non-negative")));
        }
    }
    if let (Some(lo), Some(hi)) = (lo, hi) {
        if lo > hi {
            return Err(Error::DegenerateBox(format!("{name} bounds out of order: {lo} > {hi}")));
        }
    }
    Ok(())
}

impl DesignConstraints {
    /// Checks that every bound is finite and ordered and that the search box
    /// is non-empty.
    pub fn validate_bounds(&self) -> Result<()> {
        let (w_lo, w_hi) = self.width_bounds;
        if !(w_lo.is_finite() && w_hi.is_finite() && w_lo > 0.0 && w_lo <= w_hi) {
            return Err(Error::DegenerateBox(format!("width bounds [{w_lo}, {w_hi}] invalid")));
        }
        let (a_lo, a_hi) = self.angle_bounds;
        if !(a_lo > 0.0 && a_hi <= std::f64::consts::PI && a_lo <= a_hi) {
            return Err(Error::DegenerateBox(format!(
                "fold angle bounds [{}, {}] deg must satisfy 0 < lo <= hi <= 180",
                a_lo.to_degrees(),
                a_hi.to_degrees()
            )));
        }
        let (n_lo, n_hi) = self.crease_bounds;
        if n_lo < 1 || n_lo > n_hi {
            return Err(Error::DegenerateBox(format!("crease count bounds [{n_lo}, {n_hi}] invalid")));
        }
        ordered("fabrication limit", self.fabrication_limit, None)?;
        ordered("folded length", self.folded_length_min, self.folded_length_max)?;
        ordered("folded thickness", self.thickness_min, self.thickness_max)?;
        ordered("K_min", self.k_min, None)?;
        ordered("D_min", self.d_min, None)?;
        if let DesignLayout::Circular { radius } = self.layout {
            if !(radius.is_finite() && radius > 0.0) {
                return Err(Error::DegenerateBox(format!("circular radius {radius} must be positive")));
            }
        }
        if !self.eta.is_finite() {
            return Err(Error::DegenerateBox("direction of interest must be finite".into()));
        }
        if !(self.connector_allowance.is_finite() && self.connector_allowance >= 0.0) {
            return Err(domain("connector allowance must be non-negative"));
        }
        Ok(())
    }

    /// Full validation for the optimizer: bounds plus at least one stiffness
    /// floor.
    pub fn validate(&self) -> Result<()> {
        self.validate_bounds()?;
        if self.k_min.is_none() && self.d_min.is_none() {
            return Err(domain("at least one of K_min or D_min is required"));
        }
        Ok(())
    }
}
