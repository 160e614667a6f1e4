use std::fmt::Write;

use oadlc_core::pattern::{generate_kit_for_assembly, segments_csv, write_svg, AssemblyKit};
use oadlc_core::units::{kg_to_g, m_to_mm, n_per_m_to_n_per_mm, nm_to_mnm, rad_to_deg};
use oadlc_core::{analyze, check_feasible, exhaustive_search, optimize, FeasibilityReport};
use serde_json::Value;

use crate::config::{Config, SweepParameter};
use crate::error::CliError;
use crate::format::{record_text, round_record, sig6};
use crate::records::{self, constraint_unit};

/// Text for standard output plus named files for the output directory.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Outcome {
    pub stdout: String,
    pub files: Vec<(String, String)>,
    pub exit_code: i32,
}

impl Outcome {
    fn text(stdout: String) -> Self {
        Self {
            stdout,
            ..Self::default()
        }
    }
}

pub fn cmd_analyze(config: &Config) -> Result<Outcome, CliError> {
    let assembly = config.assembly()?;
    let report = analyze(&assembly, config.eta(), config.connector_allowance()?)?;
    let text = record_text(&records::analysis(config, assembly.layers(), &report));
    Ok(Outcome {
        files: vec![("analyze.json".into(), text.clone())],
        ..Outcome::text(text)
    })
}

fn kit_files(kit: &AssemblyKit, csv: bool) -> Result<Vec<(String, String)>, CliError> {
    let mut files = Vec::new();
    for (name, p) in [("layer1", &kit.layer1), ("layer2", &kit.layer2)] {
        files.push((format!("{name}.svg"), write_svg(p)?));
        if csv {
            files.push((format!("{name}.csv"), segments_csv(p)));
        }
    }
    Ok(files)
}

pub fn cmd_optimize(config: &Config, exhaustive: bool, emit_pattern: bool) -> Result<Outcome, CliError> {
    let material = config.material()?;
    let constraints = config.constraints()?;
    config.connector_allowance()?;
    let solution = if exhaustive {
        exhaustive_search(&material, &constraints, config.grid())?
    } else {
        optimize(&material, &constraints)?
    };
    let mut record = records::solution(config, &solution, exhaustive, emit_pattern);
    let mut files = Vec::new();
    if emit_pattern {
        let kit = generate_kit_for_assembly(
            &solution.assembly()?,
            &config.tab_spec(),
            constraints.fabrication_limit,
            Some(record.clone()),
        )?;
        files = kit_files(&kit, config.output.csv)?;
        record["patterns"] = files.iter().map(|(name, _)| Value::from(name.as_str())).collect();
    }
    let text = record_text(&record);
    files.insert(0, ("optimize.json".into(), text.clone()));
    Ok(Outcome {
        files,
        ..Outcome::text(text)
    })
}

pub fn cmd_pattern(config: &Config) -> Result<Outcome, CliError> {
    let assembly = config.assembly()?;
    let record = records::pattern(config);
    let kit = generate_kit_for_assembly(&assembly, &config.tab_spec(), config.fabrication_limit(), Some(record.clone()))?;
    let mut files = kit_files(&kit, config.output.csv)?;
    let mut summary = record;
    summary["notes"] = records::kit_notes(&kit.notes);
    summary["files"] = files.iter().map(|(name, _)| Value::from(name.as_str())).collect();
    let text = record_text(&summary);
    files.insert(0, ("pattern.json".into(), text.clone()));
    Ok(Outcome {
        files,
        ..Outcome::text(text)
    })
}

fn sweep_value(vary: SweepParameter, v: f64) -> String {
    match vary {
        SweepParameter::N => format!("{v}"),
        _ => sig6(v),
    }
}

pub fn cmd_sweep(config: &Config, vary: SweepParameter, values: &[f64]) -> Result<Outcome, CliError> {
    if values.is_empty() {
        return Err(CliError::Config("sweep needs at least one value".into()));
    }
    let allowance = config.connector_allowance()?;
    config.assembly()?;
    let header = serde_json::to_string(&round_record(serde_json::json!({
        "command": "sweep",
        "config": config,
        "vary": vary,
        "values": values,
    })))
    .expect("record serializes");
    let mut out = format!("# {header}\n{},K_N_per_mm,D_mNm,mass_g\n", vary.column());
    let mut skipped = Vec::new();
    for &v in values {
        let row = config
            .assembly_with(vary, v)
            .and_then(|a| analyze(&a, config.eta(), allowance).map_err(CliError::from));
        match row {
            Ok(r) => {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    sweep_value(vary, v),
                    sig6(n_per_m_to_n_per_mm(r.k_eta)),
                    sig6(nm_to_mnm(r.d_eta)),
                    sig6(kg_to_g(r.mass))
                );
            }
            Err(e) => {
                let _ = writeln!(out, "# skipped {}={}: {e}", vary.column(), sweep_value(vary, v));
                skipped.push(v);
            }
        }
    }
    Ok(Outcome {
        files: vec![("sweep.csv".into(), out.clone())],
        ..Outcome::text(out)
    })
}

/// Slack table for people.
pub fn slack_table(r: &FeasibilityReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "design: W = {} mm, n = {}, alpha = {} deg",
        sig6(m_to_mm(r.width)),
        r.crease_count,
        sig6(rad_to_deg(r.fold_angle))
    );
    let _ = writeln!(out, "{:<20} {:>4} {:>12} {:>12} {:>12} {:<5} status", "constraint", "", "value", "bound", "slack", "unit");
    for c in &r.checks {
        let (scale, unit) = constraint_unit(c.name);
        let op = match c.kind {
            oadlc_core::design::BoundKind::Lower => ">=",
            oadlc_core::design::BoundKind::Upper => "<=",
            oadlc_core::design::BoundKind::Equal => "==",
        };
        let _ = writeln!(
            out,
            "{:<20} {:>4} {:>12} {:>12} {:>12} {:<5} {}",
            c.name,
            op,
            sig6(c.value * scale),
            sig6(c.bound * scale),
            sig6(c.slack * scale),
            unit,
            if c.satisfied { "ok" } else { "VIOLATED" }
        );
    }
    let metric = |v: Option<f64>, f: fn(f64) -> f64| v.map_or("n/a".to_string(), |x| sig6(f(x)));
    let _ = writeln!(
        out,
        "K_eta = {} N/mm, D_eta = {} mNm, mass = {} g",
        metric(r.k_eta, n_per_m_to_n_per_mm),
        metric(r.d_eta, nm_to_mnm),
        metric(r.mass, kg_to_g)
    );
    let _ = writeln!(out, "verdict: {}", if r.feasible { "feasible" } else { "infeasible" });
    out
}

/// Exit code 3 when the design violates a constraint.
pub fn cmd_validate(config: &Config) -> Result<Outcome, CliError> {
    let material = config.material()?;
    let constraints = config.constraints()?;
    config.connector_allowance()?;
    let layer = config.layer_block()?;
    let n = layer
        .n
        .or_else(|| layer.L_mm.as_ref().map(Vec::len))
        .ok_or_else(|| CliError::Config("[layer].n is required".into()))?;
    config.assembly()?;
    let report = check_feasible(
        &material,
        oadlc_core::units::mm_to_m(layer.W_mm),
        oadlc_core::units::deg_to_rad(layer.alpha_deg),
        n,
        &constraints,
    );
    Ok(Outcome {
        stdout: slack_table(&report),
        files: vec![("validate.json".into(), record_text(&records::validation(config, &report)))],
        exit_code: if report.feasible { 0 } else { 3 },
    })
}
