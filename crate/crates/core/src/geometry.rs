use serde::Serialize;

use crate::error::{domain, Result};
use crate::layer::{half_angle, Assembly, LayerSpec};

/// Folded size of a layer (m).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FoldedDimensions {
    /// Chordwise length `(n + 1) W sin(α/2)`.
    pub length: f64,
    /// Height of a stack of two such layers, `2 W cos(α/2)`.
    pub thickness: f64,
}

pub fn folded_dimensions(layer: &LayerSpec) -> FoldedDimensions {
    let (s, c) = half_angle(layer.fold_angle());
    FoldedDimensions {
        length: (layer.crease_count() + 1) as f64 * layer.width() * s,
        thickness: 2.0 * layer.width() * c,
    }
}

/// Sheet mass (kg): `(1 + allowance) Σ ρ t A_flat` over both layers, where
/// `A_flat` is the developed panel area. `connector_allowance` accounts for
/// tabs and connectors as a fraction of the sheet mass.
pub fn mass(a: &Assembly, connector_allowance: f64) -> Result<f64> {
    if !(connector_allowance.is_finite() && connector_allowance >= 0.0) {
        return Err(domain(format!(
            "connector allowance must be non-negative, got {connector_allowance}"
        )));
    }
    let sheets: f64 = a
        .layers()
        .iter()
        .map(|l| l.material().density() * l.material().thickness() * l.developed_area())
        .sum();
    Ok((1.0 + connector_allowance) * sheets)
}
