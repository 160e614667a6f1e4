//! Spring-network stiffness of single layers and of the orthogonal
//! two-layer assembly.
//!
//! A layer is a chain of unit cells. Across the corrugations (chordwise) the
//! cells act in series, along the creases (spanwise) in parallel. The
//! assembly stiffness in direction `η` (measured from layer 1's creases)
//! mixes layer 1's spanwise and layer 2's chordwise response with `cos² η`,
//! and the remaining pair with `sin² η`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{folded_dimensions, mass};
use crate::layer::{half_angle, Assembly, LayerSpec};
use crate::moduli::{triangular_moduli, EquivalentModuli};

/// Chordwise and spanwise stiffness of one layer. N/m for in-plane, N·m for
/// bending.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DirectionalStiffness {
    pub chordwise: f64,
    pub spanwise: f64,
}

pub fn layer_inplane_from_moduli(layer: &LayerSpec, moduli: &EquivalentModuli) -> DirectionalStiffness {
    let (s, _) = half_angle(layer.fold_angle());
    let w = layer.width();
    let t = layer.material().thickness();
    let lengths = layer.unit_lengths();
    let compliance: f64 = lengths.iter().map(|l| w * s / (moduli.e_cx * l * t)).sum();
    let spanwise: f64 = lengths.iter().map(|l| moduli.e_cy * w * t * s / l).sum();
    DirectionalStiffness {
        chordwise: 1.0 / compliance,
        spanwise,
    }
}

pub fn layer_bending_from_moduli(layer: &LayerSpec, moduli: &EquivalentModuli) -> DirectionalStiffness {
    let (s, _) = half_angle(layer.fold_angle());
    let w = layer.width();
    let t3 = layer.material().thickness().powi(3);
    let lengths = layer.unit_lengths();
    let compliance: f64 = lengths.iter().map(|l| 12.0 * w * s / (moduli.e_bx * l * t3)).sum();
    let spanwise: f64 = lengths.iter().map(|l| moduli.e_by * t3 * w * s / (12.0 * l)).sum();
    DirectionalStiffness {
        chordwise: 1.0 / compliance,
        spanwise,
    }
}

/// In-plane stiffness `(K_C, K_S)` of one layer.
pub fn layer_inplane(layer: &LayerSpec) -> Result<DirectionalStiffness> {
    Ok(layer_inplane_from_moduli(layer, &triangular_moduli(layer)?))
}

/// Bending stiffness `(D_C, D_S)` of one layer.
pub fn layer_bending(layer: &LayerSpec) -> Result<DirectionalStiffness> {
    Ok(layer_bending_from_moduli(layer, &triangular_moduli(layer)?))
}

/// Combines the two layers' responses in direction `eta` (rad, taken mod π).
pub fn compose_orthogonal(layer1: DirectionalStiffness, layer2: DirectionalStiffness, eta: f64) -> f64 {
    let along = layer1.spanwise + layer2.chordwise;
    let across = layer2.spanwise + layer1.chordwise;
    if along == across {
        return along;
    }
    let (s, c) = eta.rem_euclid(PI).sin_cos();
    along * (c * c) + across * (s * s)
}

/// In-plane assembly stiffness `K_η` (N/m).
pub fn assembly_inplane(a: &Assembly, eta: f64) -> Result<f64> {
    Ok(compose_orthogonal(layer_inplane(&a.layer1)?, layer_inplane(&a.layer2)?, eta))
}

/// Out-of-plane assembly stiffness `D_η` (N·m).
pub fn assembly_bending(a: &Assembly, eta: f64) -> Result<f64> {
    Ok(compose_orthogonal(layer_bending(&a.layer1)?, layer_bending(&a.layer2)?, eta))
}

/// Moduli → layer springs → assembly, for the in-plane stiffness.
pub fn pipeline_k(a: &Assembly, eta: f64) -> Result<f64> {
    let m1 = triangular_moduli(&a.layer1)?;
    let m2 = triangular_moduli(&a.layer2)?;
    let k1 = layer_inplane_from_moduli(&a.layer1, &m1);
    let k2 = layer_inplane_from_moduli(&a.layer2, &m2);
    Ok(compose_orthogonal(k1, k2, eta))
}

/// Moduli → layer springs → assembly, for the bending stiffness.
pub fn pipeline_d(a: &Assembly, eta: f64) -> Result<f64> {
    let m1 = triangular_moduli(&a.layer1)?;
    let m2 = triangular_moduli(&a.layer2)?;
    let d1 = layer_bending_from_moduli(&a.layer1, &m1);
    let d2 = layer_bending_from_moduli(&a.layer2, &m2);
    Ok(compose_orthogonal(d1, d2, eta))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LayerReport {
    pub moduli: EquivalentModuli,
    pub inplane: DirectionalStiffness,
    pub bending: DirectionalStiffness,
    /// Folded chordwise length (m).
    pub folded_length: f64,
}

/// Everything the model predicts for one assembly, SI units.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StiffnessReport {
    pub layers: [LayerReport; 2],
    pub eta: f64,
    pub k_eta: f64,
    pub d_eta: f64,
    pub mass: f64,
    /// Folded chordwise length of layer 1 (m).
    pub folded_length: f64,
    /// Height of the folded two-layer stack (m).
    pub folded_thickness: f64,
}

fn layer_report(layer: &LayerSpec) -> Result<LayerReport> {
    let moduli = triangular_moduli(layer)?;
    Ok(LayerReport {
        moduli,
        inplane: layer_inplane_from_moduli(layer, &moduli),
        bending: layer_bending_from_moduli(layer, &moduli),
        folded_length: folded_dimensions(layer).length,
    })
}

/// Evaluates the full model for `a` in direction `eta`.
pub fn analyze(a: &Assembly, eta: f64, connector_allowance: f64) -> Result<StiffnessReport> {
    let r1 = layer_report(&a.layer1)?;
    let r2 = layer_report(&a.layer2)?;
    let k_eta = compose_orthogonal(r1.inplane, r2.inplane, eta);
    let d_eta = compose_orthogonal(r1.bending, r2.bending, eta);
    let stack = a
        .layers()
        .iter()
        .map(|l| l.width() * half_angle(l.fold_angle()).1)
        .sum();
    let mass = mass(a, connector_allowance)?;
    if ![k_eta, d_eta, mass].iter().all(|v| v.is_finite()) {
        return Err(Error::Domain(format!(
            "model evaluation is not finite (K = {k_eta}, D = {d_eta}, m = {mass})"
        )));
    }
    Ok(StiffnessReport {
        folded_length: r1.folded_length,
        layers: [r1, r2],
        eta,
        k_eta,
        d_eta,
        mass,
        folded_thickness: stack,
    })
}
