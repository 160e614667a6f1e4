//! Equivalent-plate moduli of a corrugated unit cell.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::layer::{half_angle, LayerSpec};
use crate::material::Material;

/// Smallest fold angle admitted by the closed forms; smaller angles are
/// raised to this value before evaluation.
pub const MIN_FOLD_ANGLE: f64 = 1e-9;

/// Moduli (Pa) of the flat plate that replaces one unit cell.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EquivalentModuli {
    /// In-plane modulus across the corrugations.
    pub e_cx: f64,
    /// In-plane modulus along the creases.
    pub e_cy: f64,
    /// Bending modulus across the corrugations.
    pub e_bx: f64,
    /// Bending modulus along the creases.
    pub e_by: f64,
}

/// Entries of the symmetric in-plane (`A`, N/m) and bending (`D`, N·m)
/// stiffness matrices of an orthotropic Kirchhoff plate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlateMatrices {
    pub a11: f64,
    pub a12: f64,
    pub a22: f64,
    pub a66: f64,
    pub d11: f64,
    pub d12: f64,
    pub d22: f64,
    pub d66: f64,
}

impl PlateMatrices {
    fn validate(&self) -> Result<()> {
        let all = [self.a11, self.a12, self.a22, self.a66, self.d11, self.d12, self.d22, self.d66];
        if all.iter().any(|x| !x.is_finite()) {
            return Err(domain("plate matrix entries must be finite"));
        }
        if !(self.a11 > 0.0 && self.a11 * self.a22 - self.a12 * self.a12 > 0.0) {
            return Err(domain("in-plane stiffness block is not positive definite"));
        }
        if !(self.d11 > 0.0 && self.d11 * self.d22 - self.d12 * self.d12 > 0.0) {
            return Err(domain("bending stiffness block is not positive definite"));
        }
        Ok(())
    }
}

/// Engineering moduli of the equivalent plate of thickness `thickness` (m).
pub fn moduli_from_plate_matrices(p: &PlateMatrices, thickness: f64) -> Result<EquivalentModuli> {
    p.validate()?;
    if !(thickness.is_finite() && thickness > 0.0) {
        return Err(domain(format!("plate thickness must be positive, got {thickness}")));
    }
    let t = thickness;
    let det_a = p.a11 * p.a22 - p.a12 * p.a12;
    let det_d = p.d11 * p.d22 - p.d12 * p.d12;
    Ok(EquivalentModuli {
        e_cx: det_a / (t * p.a22),
        e_cy: det_a / (t * p.a11),
        e_bx: 12.0 * det_d / (t.powi(3) * p.d22),
        e_by: 12.0 * det_d / (t.powi(3) * p.d11),
    })
}

/// Closed-form moduli of a triangular unit cell of panel width `width` (m)
/// and fold angle `fold_angle` (rad).
pub fn triangular_cell_moduli(material: &Material, width: f64, fold_angle: f64) -> Result<EquivalentModuli> {
    if !(fold_angle > 0.0 && fold_angle <= std::f64::consts::PI) {
        return Err(domain(format!("fold angle {fold_angle} rad outside (0, pi]")));
    }
    let nu = material.poisson_ratio();
    if nu >= 1.0 {
        return Err(domain(format!("Poisson ratio {nu} must be below 1")));
    }
    if !(width.is_finite() && width > 0.0) {
        return Err(domain(format!("panel width must be positive, got {width}")));
    }
    let alpha = fold_angle.max(MIN_FOLD_ANGLE);
    let e = material.youngs_modulus();
    let t = material.thickness();
    let w = width;
    let (s, c) = half_angle(alpha);
    let (nu2, nu3, nu4) = (nu * nu, nu.powi(3), nu.powi(4));
    let (t2, w2) = (t * t, w * w);

    let e_cx = e * (t2 * (nu2 - 2.0 * nu - 1.0) * s)
        / ((3.0 * nu4 + 2.0 * nu3 - nu - 3.0) * t2 * (s * s)
            + (-nu4 + 2.0 * nu3 + 4.0 * nu2 - 2.0 * nu - 3.0) * w2 * c);
    let e_cy = e * (nu2 - 2.0 * nu - 3.0) / (4.0 * (nu2 - 1.0) * s);
    let e_bx = e * (w2 * (alpha.cos() + 1.0) * s + t2 * (1.0 - nu2) * (s * s))
        / (2.0 * (1.0 - nu2) * (w2 * (c * c) + t2 * (s * s)));
    let e_by = e * (s + w2 * (c * c) / (t2 * (1.0 - nu2) * s));

    Ok(EquivalentModuli { e_cx, e_cy, e_bx, e_by })
}

/// [`triangular_cell_moduli`] for a layer's material and geometry.
pub fn triangular_moduli(layer: &LayerSpec) -> Result<EquivalentModuli> {
    triangular_cell_moduli(layer.material(), layer.width(), layer.fold_angle())
}
