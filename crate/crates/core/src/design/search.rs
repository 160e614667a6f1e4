use std::cmp::Ordering;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::constraints::{DesignConstraints, DesignLayout};
use super::feasibility::{assess, check_feasible, FeasibilityReport, Mode};
use super::simplex::{self, SimplexOptions};
use crate::error::{Error, InfeasibleDiagnostic, Result};
use crate::layer::{Assembly, LayerSpec};
use crate::material::Material;

/// Tuning of the continuous inner search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SearchOptions {
    /// Seeding grid points per axis for each crease count.
    pub seed_grid: usize,
    /// Number of best seeds refined by the simplex.
    pub polish_starts: usize,
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            seed_grid: 64,
            polish_starts: 3,
            tolerance: 1e-10,
            max_iterations: 4000,
        }
    }
}

/// Step sizes of the enumeration grid (m, rad).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridResolution {
    pub width_step: f64,
    pub angle_step: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMethod {
    Simplex,
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SearchStats {
    pub method: SearchMethod,
    pub evaluations: u64,
    #[serde(skip)]
    pub wall_time: Duration,
}

/// A feasible minimum-mass design with identical layers.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DesignSolution {
    pub material: Material,
    pub constraints: DesignConstraints,
    pub width: f64,
    pub fold_angle: f64,
    pub crease_count: usize,
    pub k_eta: f64,
    pub d_eta: f64,
    pub mass: f64,
    pub folded_length: f64,
    pub folded_thickness: f64,
    pub feasibility: FeasibilityReport,
    pub stats: SearchStats,
}

impl DesignSolution {
    pub fn layer(&self) -> Result<LayerSpec> {
        Ok(self
            .constraints
            .layout
            .layer(self.material, self.width, self.fold_angle, self.crease_count)?
            .with_unit_count(self.constraints.unit_count))
    }

    pub fn assembly(&self) -> Result<Assembly> {
        Ok(Assembly::identical(self.layer()?))
    }
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    mass: f64,
    crease_count: usize,
    width: f64,
    fold_angle: f64,
}

/// Lexicographic order on `(mass, n, W, α)`.
fn rank(a: &Candidate, b: &Candidate) -> Ordering {
    a.mass
        .total_cmp(&b.mass)
        .then(a.crease_count.cmp(&b.crease_count))
        .then(a.width.total_cmp(&b.width))
        .then(a.fold_angle.total_cmp(&b.fold_angle))
}

fn better(best: Option<Candidate>, next: Option<Candidate>) -> Option<Candidate> {
    match (best, next) {
        (Some(a), Some(b)) => Some(if rank(&b, &a) == Ordering::Less { b } else { a }),
        (a, b) => a.or(b),
    }
}

fn in_box(c: &DesignConstraints, width: f64, fold_angle: f64) -> bool {
    let (w_lo, w_hi) = c.width_bounds;
    let (a_lo, a_hi) = c.angle_bounds;
    (w_lo..=w_hi).contains(&width) && (a_lo..=a_hi).contains(&fold_angle)
}

/// Feasible mass, or `None`.
fn feasible_mass(material: &Material, c: &DesignConstraints, width: f64, fold_angle: f64, n: usize) -> Option<f64> {
    if !in_box(c, width, fold_angle) {
        return None;
    }
    let r = assess(material, c, width, fold_angle, n, Mode::FirstViolation);
    if r.feasible {
        r.mass
    } else {
        None
    }
}

/// Crease counts that can satisfy the flat-length and folded-length limits
/// at the smallest admissible panel.
fn crease_range(c: &DesignConstraints) -> std::ops::RangeInclusive<usize> {
    let (n_lo, mut n_hi) = c.crease_bounds;
    let w_lo = c.width_bounds.0;
    let pitch_lo = w_lo * (0.5 * c.angle_bounds.0).sin();
    let cap = |limit: f64, unit: f64| -> usize {
        let panels = (limit / unit * (1.0 + 1e-9)).floor();
        if panels < 1.0 {
            0
        } else {
            (panels as usize).saturating_sub(1)
        }
    };
    if let Some(l_fab) = c.fabrication_limit {
        n_hi = n_hi.min(cap(l_fab, w_lo));
    }
    if let Some(l_max) = c.folded_length_max {
        n_hi = n_hi.min(cap(l_max, pitch_lo));
    }
    n_lo..=n_hi
}

/// Maps folded length `u` and stack thickness `v` to `(W, α)`.
fn width_angle(u: f64, v: f64, n: usize) -> (f64, f64) {
    let pitch = u / (n + 1) as f64;
    let rise = 0.5 * v;
    (pitch.hypot(rise), 2.0 * pitch.atan2(rise))
}

fn interval(lo: f64, hi: f64) -> Option<(f64, f64)> {
    (lo <= hi).then_some((lo, hi))
}

/// Best design for a fixed crease count. The continuous search runs over the
/// folded length and stack thickness, where the layout limits are a box.
fn search_crease_count(
    material: &Material,
    c: &DesignConstraints,
    n: usize,
    opts: &SearchOptions,
) -> (Option<Candidate>, u64) {
    let (w_lo, w_hi) = c.width_bounds;
    let (a_lo, a_hi) = c.angle_bounds;
    let panels = (n + 1) as f64;
    let u_range = match c.layout {
        DesignLayout::Square => interval(
            c.folded_length_min.unwrap_or(0.0).max(panels * w_lo * (0.5 * a_lo).sin()),
            c.folded_length_max.unwrap_or(f64::INFINITY).min(panels * w_hi * (0.5 * a_hi).sin()),
        ),
        DesignLayout::Circular { radius } => Some((2.0 * radius, 2.0 * radius)),
    };
    let v_range = interval(
        c.thickness_min.unwrap_or(0.0).max(2.0 * w_lo * (0.5 * a_hi).cos().max(0.0)),
        c.thickness_max.unwrap_or(f64::INFINITY).min(2.0 * w_hi * (0.5 * a_lo).cos()),
    );
    let (Some((u_lo, u_hi)), Some((v_lo, v_hi))) = (u_range, v_range) else {
        return (None, 0);
    };

    let to_design = |p: [f64; 2]| {
        let u = u_lo + p[0] * (u_hi - u_lo);
        let v = v_lo + p[1] * (v_hi - v_lo);
        width_angle(u, v, n)
    };
    let objective = |p: [f64; 2]| {
        let (w, a) = to_design(p);
        feasible_mass(material, c, w, a, n).unwrap_or(f64::INFINITY)
    };

    let steps = opts.seed_grid.max(2);
    let axis = |lo: f64, hi: f64| -> Vec<f64> {
        if lo == hi {
            vec![0.0]
        } else {
            (0..steps).map(|i| i as f64 / (steps - 1) as f64).collect()
        }
    };
    let mut evaluations = 0u64;
    let mut seeds: Vec<([f64; 2], f64)> = Vec::new();
    for &x in &axis(u_lo, u_hi) {
        for &y in &axis(v_lo, v_hi) {
            evaluations += 1;
            let m = objective([x, y]);
            if m.is_finite() {
                seeds.push(([x, y], m));
            }
        }
    }
    seeds.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0[0].total_cmp(&b.0[0])).then(a.0[1].total_cmp(&b.0[1])));

    let simplex_opts = SimplexOptions {
        initial_step: 1.0 / (steps - 1) as f64,
        tolerance: opts.tolerance,
        max_iterations: opts.max_iterations,
    };
    let mut best = None;
    for (start, _) in seeds.iter().take(opts.polish_starts.max(1)) {
        let r = simplex::minimize(objective, *start, &simplex_opts);
        evaluations += r.evaluations;
        if r.value.is_finite() {
            let (width, fold_angle) = to_design(r.point);
            best = better(
                best,
                Some(Candidate {
                    mass: r.value,
                    crease_count: n,
                    width,
                    fold_angle,
                }),
            );
        }
    }
    (best, evaluations)
}

/// Scans the `(W, α, n)` box for the point whose largest normalized
/// constraint violation is smallest.
fn least_violation(material: &Material, c: &DesignConstraints) -> InfeasibleDiagnostic {
    const PER_AXIS: usize = 12;
    let (w_lo, w_hi) = c.width_bounds;
    let (a_lo, a_hi) = c.angle_bounds;
    let (n_lo, n_hi) = c.crease_bounds;
    let n_step = ((n_hi - n_lo) / 64).max(1);
    let ns: Vec<usize> = (n_lo..=n_hi).step_by(n_step).collect();
    let frac = |i: usize| i as f64 / (PER_AXIS - 1) as f64;
    ns.par_iter()
        .map(|&n| {
            let mut best: Option<(f64, InfeasibleDiagnostic)> = None;
            for i in 0..PER_AXIS {
                for j in 0..PER_AXIS {
                    let w = w_lo + frac(i) * (w_hi - w_lo);
                    let a = a_lo + frac(j) * (a_hi - a_lo);
                    let r = check_feasible(material, w, a, n, c);
                    let v = r.max_normalized_violation();
                    if best.as_ref().is_none_or(|(bv, _)| v < *bv) {
                        let worst = r.worst().map(|w| w.name).unwrap_or("none");
                        best = Some((
                            v,
                            InfeasibleDiagnostic {
                                width: w,
                                fold_angle: a,
                                crease_count: n,
                                worst_constraint: worst.to_string(),
                                violation: v,
                            },
                        ));
                    }
                }
            }
            best
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .min_by(|a, b| a.0.total_cmp(&b.0))
        .map(|(_, d)| d)
        .unwrap_or(InfeasibleDiagnostic {
            width: w_lo,
            fold_angle: a_lo,
            crease_count: 0,
            worst_constraint: "search box".into(),
            violation: f64::INFINITY,
        })
}

fn finish(
    material: &Material,
    c: &DesignConstraints,
    best: Option<Candidate>,
    stats: SearchStats,
) -> Result<DesignSolution> {
    let Some(best) = best else {
        return Err(Error::Infeasible(Box::new(least_violation(material, c))));
    };
    let feasibility = check_feasible(material, best.width, best.fold_angle, best.crease_count, c);
    let (Some(k_eta), Some(d_eta), Some(mass)) = (feasibility.k_eta, feasibility.d_eta, feasibility.mass) else {
        return Err(Error::Domain("model could not be evaluated at the optimum".into()));
    };
    Ok(DesignSolution {
        material: *material,
        constraints: c.clone(),
        width: best.width,
        fold_angle: best.fold_angle,
        crease_count: best.crease_count,
        k_eta,
        d_eta,
        mass,
        folded_length: feasibility.folded_length,
        folded_thickness: feasibility.folded_thickness,
        feasibility,
        stats,
    })
}

/// Minimum-mass design over integer `n` and continuous `(W, α)`.
///
/// Each admissible crease count is searched independently (in parallel): a
/// seeding grid over folded length × stack thickness, then simplex
/// refinement of the best seeds. The overall minimum is chosen by the
/// lexicographic order `(mass, n, W, α)`, so the result does not depend on
/// thread scheduling.
pub fn optimize(material: &Material, c: &DesignConstraints) -> Result<DesignSolution> {
    optimize_with(material, c, &SearchOptions::default())
}

pub fn optimize_with(material: &Material, c: &DesignConstraints, opts: &SearchOptions) -> Result<DesignSolution> {
    c.validate()?;
    let started = Instant::now();
    let per_n: Vec<(Option<Candidate>, u64)> = crease_range(c)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&n| search_crease_count(material, c, n, opts))
        .collect();
    let evaluations = per_n.iter().map(|(_, e)| e).sum();
    let best = per_n.into_iter().fold(None, |acc, (cand, _)| better(acc, cand));
    let stats = SearchStats {
        method: SearchMethod::Simplex,
        evaluations,
        wall_time: started.elapsed(),
    };
    finish(material, c, best, stats)
}

fn grid_axis(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let count = ((hi - lo) / step * (1.0 + 1e-12)).floor() as usize;
    (0..=count).map(|k| (lo + k as f64 * step).min(hi)).collect()
}

/// Enumerates the box on a regular `(W, α)` grid for every crease count.
/// Same tie-breaking as [`optimize`].
pub fn exhaustive_search(
    material: &Material,
    c: &DesignConstraints,
    resolution: GridResolution,
) -> Result<DesignSolution> {
    c.validate()?;
    if !(resolution.width_step > 0.0 && resolution.angle_step > 0.0) {
        return Err(Error::DegenerateBox("grid resolution must be positive".into()));
    }
    let started = Instant::now();
    let widths = grid_axis(c.width_bounds.0, c.width_bounds.1, resolution.width_step);
    let angles = grid_axis(c.angle_bounds.0, c.angle_bounds.1, resolution.angle_step);
    let per_n: Vec<(Option<Candidate>, u64)> = crease_range(c)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&n| {
            let mut best = None;
            let mut evaluations = 0u64;
            for &w in &widths {
                for &a in &angles {
                    evaluations += 1;
                    if let Some(mass) = feasible_mass(material, c, w, a, n) {
                        best = better(
                            best,
                            Some(Candidate {
                                mass,
                                crease_count: n,
                                width: w,
                                fold_angle: a,
                            }),
                        );
                    }
                }
            }
            (best, evaluations)
        })
        .collect();
    let evaluations = per_n.iter().map(|(_, e)| e).sum();
    let best = per_n.into_iter().fold(None, |acc, (cand, _)| better(acc, cand));
    let stats = SearchStats {
        method: SearchMethod::Exhaustive,
        evaluations,
        wall_time: started.elapsed(),
    };
    finish(material, c, best, stats)
}
