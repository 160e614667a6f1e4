//! Shared inputs for the benchmarks.

use oadlc_core::units::{deg_to_rad, mm_to_m, mnm_to_nm};
use oadlc_core::{Assembly, DesignConstraints, LayerSpec, Material};

/// Square layer in Dura-Lar with width and angle in mm and degrees.
pub fn square_layer(w_mm: f64, n: usize, alpha_deg: f64) -> LayerSpec {
    LayerSpec::square(Material::dura_lar(), mm_to_m(w_mm), deg_to_rad(alpha_deg), n).expect("valid layer")
}

pub fn case_study_assembly() -> Assembly {
    Assembly::identical(square_layer(8.0, 8, 84.0))
}

pub fn case_study_constraints() -> DesignConstraints {
    DesignConstraints {
        fabrication_limit: Some(mm_to_m(250.0)),
        folded_length_min: Some(mm_to_m(48.0)),
        folded_length_max: Some(mm_to_m(60.0)),
        thickness_min: Some(mm_to_m(10.0)),
        thickness_max: Some(mm_to_m(12.5)),
        d_min: Some(mnm_to_nm(80.0)),
        ..Default::default()
    }
}
