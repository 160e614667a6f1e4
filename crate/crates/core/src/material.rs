use serde::Serialize;

use crate::error::{domain, Result};

/// Isotropic sheet material of constant thickness. All values SI.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Material {
    youngs_modulus: f64,
    poisson_ratio: f64,
    thickness: f64,
    density: f64,
}

impl Material {
    /// `youngs_modulus` in Pa, `thickness` in m, `density` in kg/m³.
    pub fn new(youngs_modulus: f64, poisson_ratio: f64, thickness: f64, density: f64) -> Result<Self> {
        if !(youngs_modulus.is_finite() && youngs_modulus > 0.0) {
            return Err(domain(format!("Young's modulus must be positive, got {youngs_modulus}")));
        }
        if !(0.0..0.5).contains(&poisson_ratio) {
            return Err(domain(format!("Poisson ratio must lie in [0, 0.5), got {poisson_ratio}")));
        }
        if !(thickness.is_finite() && thickness > 0.0) {
            return Err(domain(format!("thickness must be positive, got {thickness}")));
        }
        if !(density.is_finite() && density >= 0.0) {
            return Err(domain(format!("density must be non-negative, got {density}")));
        }
        Ok(Self {
            youngs_modulus,
            poisson_ratio,
            thickness,
            density,
        })
    }

    /// Polyester (Dura-Lar) film: 2.7 GPa, ν = 0.43, 0.125 mm. The density of
    /// 1390 kg/m³ is a typical polyester value rather than a measured one.
    pub fn dura_lar() -> Self {
        Self {
            youngs_modulus: 2.7e9,
            poisson_ratio: 0.43,
            thickness: 0.125e-3,
            density: 1390.0,
        }
    }

    pub fn youngs_modulus(&self) -> f64 {
        self.youngs_modulus
    }

    pub fn poisson_ratio(&self) -> f64 {
        self.poisson_ratio
    }

    pub fn thickness(&self) -> f64 {
        self.thickness
    }

    pub fn density(&self) -> f64 {
        self.density
    }

    pub fn with_youngs_modulus(self, youngs_modulus: f64) -> Result<Self> {
        Self::new(youngs_modulus, self.poisson_ratio, self.thickness, self.density)
    }

    pub fn with_density(self, density: f64) -> Result<Self> {
        Self::new(self.youngs_modulus, self.poisson_ratio, self.thickness, density)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_values() {
        assert!(Material::new(0.0, 0.3, 1e-4, 1000.0).is_err());
        assert!(Material::new(1e9, 0.5, 1e-4, 1000.0).is_err());
        assert!(Material::new(1e9, -0.1, 1e-4, 1000.0).is_err());
        assert!(Material::new(1e9, 0.3, 0.0, 1000.0).is_err());
        assert!(Material::new(1e9, 0.3, 1e-4, -1.0).is_err());
        assert!(Material::new(1e9, 0.3, 1e-4, f64::NAN).is_err());
        assert!(Material::new(1e9, 0.0, 1e-4, 0.0).is_ok());
    }

    #[test]
    fn dura_lar_is_valid() {
        let m = Material::dura_lar();
        assert_eq!(Material::new(2.7e9, 0.43, 0.125e-3, 1390.0).unwrap(), m);
    }
}
