//! Machine-readable records in reporting units (mm, degrees, N/mm, mN·m, g).

use oadlc_core::design::{ConstraintCheck, FeasibilityReport};
use oadlc_core::pattern::AssemblyNotes;
use oadlc_core::stiffness::LayerReport;
use oadlc_core::units::{kg_to_g, m_to_mm, n_per_m_to_n_per_mm, nm_to_mnm, rad_to_deg};
use oadlc_core::{DesignSolution, LayerSpec, StiffnessReport};
use serde_json::{json, Value};

use crate::config::Config;
use crate::format::round_record;

/// Scale from SI to the reporting unit of a named constraint.
pub fn constraint_unit(name: &str) -> (f64, &'static str) {
    match name {
        "k_min" => (1e-3, "N/mm"),
        "d_min" => (1e3, "mNm"),
        _ => (1e3, "mm"),
    }
}

fn check(c: &ConstraintCheck) -> Value {
    let (scale, unit) = constraint_unit(c.name);
    json!({
        "name": c.name,
        "kind": c.kind,
        "value": c.value * scale,
        "bound": c.bound * scale,
        "slack": c.slack * scale,
        "unit": unit,
        "satisfied": c.satisfied,
    })
}

pub fn feasibility(r: &FeasibilityReport) -> Value {
    json!({
        "W_mm": m_to_mm(r.width),
        "n": r.crease_count,
        "alpha_deg": rad_to_deg(r.fold_angle),
        "feasible": r.feasible,
        "flat_length_mm": m_to_mm(r.flat_length),
        "flat_height_mm": r.flat_height.map(m_to_mm),
        "folded_length_mm": m_to_mm(r.folded_length),
        "folded_thickness_mm": m_to_mm(r.folded_thickness),
        "K_N_per_mm": r.k_eta.map(n_per_m_to_n_per_mm),
        "D_mNm": r.d_eta.map(nm_to_mnm),
        "mass_g": r.mass.map(kg_to_g),
        "constraints": r.checks.iter().map(check).collect::<Vec<_>>(),
    })
}

fn layer(spec: &LayerSpec, r: &LayerReport) -> Value {
    json!({
        "W_mm": m_to_mm(spec.width()),
        "n": spec.crease_count(),
        "alpha_deg": rad_to_deg(spec.fold_angle()),
        "layout": spec.layout(),
        "E_cx_MPa": r.moduli.e_cx * 1e-6,
        "E_cy_MPa": r.moduli.e_cy * 1e-6,
        "E_bx_MPa": r.moduli.e_bx * 1e-6,
        "E_by_MPa": r.moduli.e_by * 1e-6,
        "K_chordwise_N_per_mm": n_per_m_to_n_per_mm(r.inplane.chordwise),
        "K_spanwise_N_per_mm": n_per_m_to_n_per_mm(r.inplane.spanwise),
        "D_chordwise_mNm": nm_to_mnm(r.bending.chordwise),
        "D_spanwise_mNm": nm_to_mnm(r.bending.spanwise),
        "folded_length_mm": m_to_mm(r.folded_length),
    })
}

fn config(c: &Config) -> Value {
    serde_json::to_value(c).expect("configuration serializes")
}

pub fn analysis(c: &Config, layers: [&LayerSpec; 2], r: &StiffnessReport) -> Value {
    round_record(json!({
        "command": "analyze",
        "config": config(c),
        "result": {
            "eta_deg": rad_to_deg(r.eta),
            "K_N_per_mm": n_per_m_to_n_per_mm(r.k_eta),
            "D_mNm": nm_to_mnm(r.d_eta),
            "mass_g": kg_to_g(r.mass),
            "folded_length_mm": m_to_mm(r.folded_length),
            "folded_thickness_mm": m_to_mm(r.folded_thickness),
            "layers": [layer(layers[0], &r.layers[0]), layer(layers[1], &r.layers[1])],
        },
    }))
}

pub fn solution(c: &Config, s: &DesignSolution, exhaustive: bool, emit_pattern: bool) -> Value {
    round_record(json!({
        "command": "optimize",
        "config": config(c),
        "flags": { "exhaustive": exhaustive, "emit_pattern": emit_pattern },
        "result": {
            "W_mm": m_to_mm(s.width),
            "n": s.crease_count,
            "alpha_deg": rad_to_deg(s.fold_angle),
            "K_N_per_mm": n_per_m_to_n_per_mm(s.k_eta),
            "D_mNm": nm_to_mnm(s.d_eta),
            "mass_g": kg_to_g(s.mass),
            "folded_length_mm": m_to_mm(s.folded_length),
            "folded_thickness_mm": m_to_mm(s.folded_thickness),
            "feasibility": feasibility(&s.feasibility),
            "search": { "method": s.stats.method, "evaluations": s.stats.evaluations },
        },
    }))
}

pub fn validation(c: &Config, r: &FeasibilityReport) -> Value {
    round_record(json!({
        "command": "validate",
        "config": config(c),
        "result": feasibility(r),
    }))
}

pub fn pattern(c: &Config) -> Value {
    round_record(json!({
        "command": "pattern",
        "config": config(c),
    }))
}

pub fn kit_notes(notes: &AssemblyNotes) -> Value {
    round_record(serde_json::to_value(notes).expect("notes serialize"))
}
