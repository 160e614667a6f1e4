//! Conversions between the SI values used internally and the reporting units
//! used at the edges (mm, GPa, degrees, grams, mN·m, N/mm, g/cm³).

pub fn mm_to_m(mm: f64) -> f64 {
    mm / 1000.0
}

pub fn m_to_mm(m: f64) -> f64 {
    m * 1000.0
}

pub fn gpa_to_pa(gpa: f64) -> f64 {
    gpa * 1e9
}

pub fn pa_to_gpa(pa: f64) -> f64 {
    pa / 1e9
}

pub fn deg_to_rad(deg: f64) -> f64 {
    deg.to_radians()
}

pub fn rad_to_deg(rad: f64) -> f64 {
    rad.to_degrees()
}

pub fn kg_to_g(kg: f64) -> f64 {
    kg * 1000.0
}

pub fn g_to_kg(g: f64) -> f64 {
    g / 1000.0
}

pub fn g_per_cm3_to_kg_per_m3(rho: f64) -> f64 {
    rho * 1000.0
}

pub fn kg_per_m3_to_g_per_cm3(rho: f64) -> f64 {
    rho / 1000.0
}

/// N·m to mN·m.
pub fn nm_to_mnm(d: f64) -> f64 {
    d * 1000.0
}

/// mN·m to N·m.
pub fn mnm_to_nm(d: f64) -> f64 {
    d / 1000.0
}

/// N/m to N/mm.
pub fn n_per_m_to_n_per_mm(k: f64) -> f64 {
    k / 1000.0
}

/// N/mm to N/m.
pub fn n_per_mm_to_n_per_m(k: f64) -> f64 {
    k * 1000.0
}
