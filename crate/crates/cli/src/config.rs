//! TOML design configuration. Every physical quantity carries its unit in
//! the key name; unknown keys are rejected.

use std::path::Path;

use oadlc_core::units::{deg_to_rad, g_per_cm3_to_kg_per_m3, gpa_to_pa, mm_to_m, mnm_to_nm, n_per_mm_to_n_per_m};
use oadlc_core::{
    Assembly, DesignConstraints, DesignLayout, GridResolution, LayerSpec, Material, TabSpec, UnitCount,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(non_snake_case)]
pub struct MaterialConfig {
    #[serde(default = "defaults::e_gpa")]
    pub E_GPa: f64,
    #[serde(default = "defaults::nu")]
    pub nu: f64,
    #[serde(default = "defaults::t_mm")]
    pub t_mm: f64,
    #[serde(default = "defaults::rho")]
    pub rho_g_cm3: f64,
}

impl Default for MaterialConfig {
    fn default() -> Self {
        Self {
            E_GPa: defaults::e_gpa(),
            nu: defaults::nu(),
            t_mm: defaults::t_mm(),
            rho_g_cm3: defaults::rho(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LayoutKind {
    #[default]
    Square,
    Circular,
    Explicit,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(non_snake_case)]
pub struct LayerConfig {
    pub W_mm: f64,
    /// Crease count; taken from `L_mm` for explicit layouts.
    pub n: Option<usize>,
    pub alpha_deg: f64,
    #[serde(default)]
    pub layout: LayoutKind,
    /// Disk radius for circular layouts.
    pub R_mm: Option<f64>,
    /// Crease lengths for explicit layouts.
    pub L_mm: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssemblyConfig {
    /// Direction of interest, from layer 1's creases.
    #[serde(default)]
    pub eta_deg: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(non_snake_case)]
pub struct ConstraintsConfig {
    pub L_fab_mm: Option<f64>,
    pub L_min_mm: Option<f64>,
    pub L_max_mm: Option<f64>,
    pub t_min_mm: Option<f64>,
    pub t_max_mm: Option<f64>,
    pub K_min_N_per_mm: Option<f64>,
    pub D_min_mNm: Option<f64>,
    #[serde(default = "defaults::w_bounds")]
    pub W_bounds_mm: [f64; 2],
    #[serde(default = "defaults::n_bounds")]
    pub n_bounds: [usize; 2],
    #[serde(default = "defaults::alpha_bounds")]
    pub alpha_bounds_deg: [f64; 2],
    #[serde(default)]
    pub eta_deg: f64,
    /// Design planform; defaults to `[layer]`'s when that is square or
    /// circular, else square.
    pub layout: Option<LayoutKind>,
    pub R_mm: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(non_snake_case)]
pub struct ModelConfig {
    /// Which lengths the spring sums run over.
    #[serde(default)]
    pub unit_count: UnitCount,
    /// Enumeration grid used by `optimize --exhaustive`.
    #[serde(default = "defaults::grid_w")]
    pub grid_W_mm: f64,
    #[serde(default = "defaults::grid_alpha")]
    pub grid_alpha_deg: f64,
}

impl Default for ModelConfig {
    fn default() -> Self {
        Self {
            unit_count: UnitCount::default(),
            grid_W_mm: defaults::grid_w(),
            grid_alpha_deg: defaults::grid_alpha(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    /// Output directory; `--out` overrides it. Not echoed into records.
    #[serde(default, skip_serializing)]
    pub dir: Option<String>,
    /// Extra mass fraction for connectors.
    #[serde(default)]
    pub connector_allowance: f64,
    #[serde(default = "defaults::yes")]
    pub tabs: bool,
    #[serde(default = "defaults::tab_depth")]
    pub tab_depth_mm: f64,
    #[serde(default = "defaults::tab_inset")]
    pub tab_inset_mm: f64,
    #[serde(default)]
    pub kerf_mm: f64,
    #[serde(default = "defaults::yes")]
    pub mountain_first: bool,
    /// Also write segment CSV files next to the SVGs.
    #[serde(default)]
    pub csv: bool,
}

impl Default for OutputConfig {
    fn default() -> Self {
        Self {
            dir: None,
            connector_allowance: 0.0,
            tabs: true,
            tab_depth_mm: defaults::tab_depth(),
            tab_inset_mm: defaults::tab_inset(),
            kerf_mm: 0.0,
            mountain_first: true,
            csv: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepParameter {
    W,
    #[serde(rename = "n")]
    N,
    #[serde(rename = "alpha")]
    Alpha,
}

impl SweepParameter {
    /// CSV column header for the parameter.
    pub fn column(&self) -> &'static str {
        match self {
            Self::W => "W_mm",
            Self::N => "n",
            Self::Alpha => "alpha_deg",
        }
    }
}

impl std::str::FromStr for SweepParameter {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "W" => Ok(Self::W),
            "n" => Ok(Self::N),
            "alpha" => Ok(Self::Alpha),
            _ => Err(CliError::Config(format!("sweep parameter must be W, n or alpha, got `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub vary: SweepParameter,
    /// Values in the parameter's unit (mm, count or degrees).
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default)]
    pub material: MaterialConfig,
    pub layer: Option<LayerConfig>,
    /// Second layer; a copy of `[layer]` when absent.
    pub layer2: Option<LayerConfig>,
    #[serde(default)]
    pub assembly: AssemblyConfig,
    pub constraints: Option<ConstraintsConfig>,
    #[serde(default)]
    pub model: ModelConfig,
    #[serde(default)]
    pub output: OutputConfig,
    pub sweep: Option<SweepConfig>,
}

mod defaults {
    pub fn e_gpa() -> f64 {
        2.7
    }
    pub fn nu() -> f64 {
        0.43
    }
    pub fn t_mm() -> f64 {
        0.125
    }
    pub fn rho() -> f64 {
        1.39
    }
    pub fn w_bounds() -> [f64; 2] {
        [1.0, 50.0]
    }
    pub fn n_bounds() -> [usize; 2] {
        [1, 200]
    }
    pub fn alpha_bounds() -> [f64; 2] {
        [5.0, 175.0]
    }
    pub fn grid_w() -> f64 {
        0.5
    }
    pub fn grid_alpha() -> f64 {
        1.0
    }
    pub fn yes() -> bool {
        true
    }
    pub fn tab_depth() -> f64 {
        5.0
    }
    pub fn tab_inset() -> f64 {
        0.5
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut config: Config = toml::from_str(text).map_err(|e| CliError::Config(format!("config: {e}")))?;
        config.resolve();
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    /// Fills in defaults that depend on other blocks.
    fn resolve(&mut self) {
        if let Some(c) = self.constraints.as_mut() {
            if c.layout.is_none() {
                let from_layer = self.layer.as_ref().filter(|l| l.layout != LayoutKind::Explicit);
                c.layout = Some(from_layer.map_or(LayoutKind::Square, |l| l.layout));
                if c.R_mm.is_none() {
                    c.R_mm = from_layer.and_then(|l| l.R_mm);
                }
            }
        }
    }

    pub fn material(&self) -> Result<Material, CliError> {
        let m = &self.material;
        Material::new(gpa_to_pa(m.E_GPa), m.nu, mm_to_m(m.t_mm), g_per_cm3_to_kg_per_m3(m.rho_g_cm3))
            .map_err(|e| CliError::invalid("[material]", e))
    }

    pub fn layer_block(&self) -> Result<&LayerConfig, CliError> {
        self.layer.as_ref().ok_or_else(|| CliError::Config("config has no [layer] block".into()))
    }

    pub fn constraints_block(&self) -> Result<&ConstraintsConfig, CliError> {
        self.constraints
            .as_ref()
            .ok_or_else(|| CliError::Config("config has no [constraints] block".into()))
    }

    fn build_layer(&self, block: &LayerConfig, key: &str) -> Result<LayerSpec, CliError> {
        let material = self.material()?;
        let (w, a) = (mm_to_m(block.W_mm), deg_to_rad(block.alpha_deg));
        let need_n = || {
            block.n.ok_or_else(|| CliError::Config(format!("{key}.n is required for a {:?} layout", block.layout)))
        };
        let layer = match block.layout {
            LayoutKind::Square => LayerSpec::square(material, w, a, need_n()?),
            LayoutKind::Circular => {
                let r = block
                    .R_mm
                    .ok_or_else(|| CliError::Config(format!("{key}.R_mm is required for a circular layout")))?;
                LayerSpec::circular(material, w, a, need_n()?, mm_to_m(r))
            }
            LayoutKind::Explicit => {
                let lengths = block
                    .L_mm
                    .as_ref()
                    .ok_or_else(|| CliError::Config(format!("{key}.L_mm is required for an explicit layout")))?;
                if block.n.is_some_and(|n| n != lengths.len()) {
                    return Err(CliError::Config(format!("{key}.n does not match the length of {key}.L_mm")));
                }
                LayerSpec::new(material, w, a, lengths.iter().map(|&l| mm_to_m(l)).collect())
            }
        };
        Ok(layer.map_err(|e| CliError::invalid(key, e))?.with_unit_count(self.model.unit_count))
    }

    pub fn assembly(&self) -> Result<Assembly, CliError> {
        let layer1 = self.build_layer(self.layer_block()?, "[layer]")?;
        let layer2 = match &self.layer2 {
            Some(block) => self.build_layer(block, "[layer2]")?,
            None => layer1.clone(),
        };
        Ok(Assembly::new(layer1, layer2))
    }

    /// Assembly with `W`, `n` or `α` of both layers replaced.
    pub fn assembly_with(&self, vary: SweepParameter, value: f64) -> Result<Assembly, CliError> {
        let mut varied = self.clone();
        for block in [varied.layer.as_mut(), varied.layer2.as_mut()].into_iter().flatten() {
            match vary {
                SweepParameter::W => block.W_mm = value,
                SweepParameter::Alpha => block.alpha_deg = value,
                SweepParameter::N => {
                    if !(value >= 1.0 && value.fract() == 0.0 && value <= u32::MAX as f64) {
                        return Err(CliError::Config(format!("crease count must be a positive integer, got {value}")));
                    }
                    if block.layout == LayoutKind::Explicit {
                        return Err(CliError::Config("cannot vary n of an explicit layout".into()));
                    }
                    block.n = Some(value as usize);
                }
            }
        }
        varied.assembly()
    }

    pub fn eta(&self) -> f64 {
        deg_to_rad(self.assembly.eta_deg)
    }

    pub fn constraints(&self) -> Result<DesignConstraints, CliError> {
        let c = self.constraints_block()?;
        let layout = match c.layout.unwrap_or_default() {
            LayoutKind::Square => DesignLayout::Square,
            LayoutKind::Circular => DesignLayout::Circular {
                radius: mm_to_m(c.R_mm.ok_or_else(|| {
                    CliError::Config("constraints.R_mm is required for a circular layout".into())
                })?),
            },
            LayoutKind::Explicit => {
                return Err(CliError::Config("constraints.layout must be square or circular".into()));
            }
        };
        let dc = DesignConstraints {
            fabrication_limit: c.L_fab_mm.map(mm_to_m),
            folded_length_min: c.L_min_mm.map(mm_to_m),
            folded_length_max: c.L_max_mm.map(mm_to_m),
            thickness_min: c.t_min_mm.map(mm_to_m),
            thickness_max: c.t_max_mm.map(mm_to_m),
            k_min: c.K_min_N_per_mm.map(n_per_mm_to_n_per_m),
            d_min: c.D_min_mNm.map(mnm_to_nm),
            width_bounds: (mm_to_m(c.W_bounds_mm[0]), mm_to_m(c.W_bounds_mm[1])),
            crease_bounds: (c.n_bounds[0], c.n_bounds[1]),
            angle_bounds: (deg_to_rad(c.alpha_bounds_deg[0]), deg_to_rad(c.alpha_bounds_deg[1])),
            eta: deg_to_rad(c.eta_deg),
            layout,
            unit_count: self.model.unit_count,
            connector_allowance: self.output.connector_allowance,
        };
        dc.validate().map_err(|e| CliError::invalid("[constraints]", e))?;
        Ok(dc)
    }

    pub fn grid(&self) -> GridResolution {
        GridResolution {
            width_step: mm_to_m(self.model.grid_W_mm),
            angle_step: deg_to_rad(self.model.grid_alpha_deg),
        }
    }

    pub fn tab_spec(&self) -> TabSpec {
        let o = &self.output;
        TabSpec {
            enabled: o.tabs,
            depth: o.tab_depth_mm,
            inset: o.tab_inset_mm,
            kerf: o.kerf_mm,
            mountain_first: o.mountain_first,
        }
    }

    /// Fabrication limit from `[constraints]`, if any.
    pub fn fabrication_limit(&self) -> Option<f64> {
        self.constraints.as_ref().and_then(|c| c.L_fab_mm).map(mm_to_m)
    }

    pub fn connector_allowance(&self) -> Result<f64, CliError> {
        let a = self.output.connector_allowance;
        if a.is_finite() && a >= 0.0 {
            Ok(a)
        } else {
            Err(CliError::Config(format!("output.connector_allowance must be non-negative, got {a}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CASE_STUDY: &str = r#"
        [layer]
        W_mm = 8
        n = 8
        alpha_deg = 84

        [constraints]
        L_fab_mm = 250
        L_min_mm = 48
        L_max_mm = 60
        t_min_mm = 10
        t_max_mm = 12.5
        D_min_mNm = 80
    "#;

    #[test]
    fn defaults_materialize() {
        let c = Config::parse(CASE_STUDY).unwrap();
        assert_eq!(c.material, MaterialConfig::default());
        let k = c.constraints.as_ref().unwrap();
        assert_eq!(k.layout, Some(LayoutKind::Square));
        assert_eq!(k.W_bounds_mm, [1.0, 50.0]);
        let dc = c.constraints().unwrap();
        assert_eq!(dc.fabrication_limit, Some(0.25));
        assert_eq!(dc.d_min, Some(0.08));
        assert_eq!(c.material().unwrap(), Material::dura_lar());
        let a = c.assembly().unwrap();
        assert_eq!(a.layer1, a.layer2);
    }

    #[test]
    fn unknown_keys_rejected_with_location() {
        let err = Config::parse("[layer]\nW_mm = 8\nn = 8\nalpha_deg = 84\nwidth = 3\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("width") && msg.contains("line 5"), "{msg}");
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn invalid_values_name_their_block() {
        let c = Config::parse("[material]\nnu = 0.7\n[layer]\nW_mm = 8\nn = 8\nalpha_deg = 84\n").unwrap();
        let err = c.assembly().unwrap_err();
        assert!(err.to_string().starts_with("[material]"), "{err}");
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn circular_layer_sets_design_layout() {
        let c = Config::parse(
            "[layer]\nW_mm = 8\nn = 9\nalpha_deg = 90\nlayout = \"circular\"\nR_mm = 40\n[constraints]\nD_min_mNm = 80\n",
        )
        .unwrap();
        assert_eq!(c.constraints().unwrap().layout, DesignLayout::Circular { radius: 0.04 });
    }

    #[test]
    fn explicit_layer() {
        let c = Config::parse("[layer]\nW_mm = 10\nalpha_deg = 90\nlayout = \"explicit\"\nL_mm = [40, 50, 60]\n").unwrap();
        let a = c.assembly().unwrap();
        assert_eq!(a.layer1.crease_count(), 3);
        assert!(c.assembly_with(SweepParameter::N, 4.0).is_err());
        assert_eq!(c.assembly_with(SweepParameter::W, 12.0).unwrap().layer1.width(), 0.012);
    }
}
