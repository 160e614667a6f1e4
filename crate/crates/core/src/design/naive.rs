use serde::Serialize;

use super::constraints::DesignConstraints;
use super::feasibility::{check_feasible, FeasibilityReport};
use crate::error::{domain, Result};
use crate::material::Material;

/// One hand-picked design evaluated against the constraints.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NaiveDesignRow {
    pub width: f64,
    pub crease_count: usize,
    pub fold_angle: f64,
    pub feasible: bool,
    pub k_eta: Option<f64>,
    pub d_eta: Option<f64>,
    pub mass: Option<f64>,
    pub report: FeasibilityReport,
}

/// Evaluates candidate `(W, n, α)` designs and sorts them by model mass
/// (stable, so equal masses keep their input order).
pub fn naive_designs_report(
    material: &Material,
    c: &DesignConstraints,
    candidates: &[(f64, usize, f64)],
) -> Result<Vec<NaiveDesignRow>> {
    if candidates.is_empty() {
        return Err(domain("no candidate designs supplied"));
    }
    let mut rows: Vec<NaiveDesignRow> = candidates
        .iter()
        .map(|&(width, crease_count, fold_angle)| {
            let report = check_feasible(material, width, fold_angle, crease_count, c);
            NaiveDesignRow {
                width,
                crease_count,
                fold_angle,
                feasible: report.feasible,
                k_eta: report.k_eta,
                d_eta: report.d_eta,
                mass: report.mass,
                report,
            }
        })
        .collect();
    rows.sort_by(|a, b| a.mass.unwrap_or(f64::INFINITY).total_cmp(&b.mass.unwrap_or(f64::INFINITY)));
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{deg_to_rad, mm_to_m};

    #[test]
    fn vacuous_constraints_accept_everything() {
        let c = DesignConstraints::default();
        let cands = [(mm_to_m(6.0), 31, deg_to_rad(29.0)), (mm_to_m(8.0), 8, deg_to_rad(84.0))];
        let rows = naive_designs_report(&Material::dura_lar(), &c, &cands).unwrap();
        assert!(rows.iter().all(|r| r.feasible));
        assert!(rows[0].mass.unwrap() <= rows[1].mass.unwrap());
        assert_eq!(rows[0].crease_count, 8);
    }

    #[test]
    fn empty_candidates_rejected() {
        assert!(naive_designs_report(&Material::dura_lar(), &DesignConstraints::default(), &[]).is_err());
    }
}
