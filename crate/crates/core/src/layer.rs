use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::material::Material;

/// How crease lengths are laid out across the chordwise direction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Layout {
    /// Every crease as long as the folded chordwise length, so the folded
    /// layer is square.
    Square,
    /// Panels clipped to a disk of the given radius (m) in the folded state.
    Circular { radius: f64 },
    /// Crease lengths supplied by the caller.
    Explicit,
}

/// Number of spring units summed in the series/parallel layer models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnitCount {
    /// One unit per crease (`n` terms).
    #[default]
    Creases,
    /// One unit per panel (`n + 1` terms).
    Panels,
}

/// One corrugated layer with a triangular profile.
///
/// `crease_lengths` has one entry per crease (`n` entries). `panel_heights`
/// has one entry per flat panel (`n + 1` entries) and is what the sheet
/// outline and the developed area are built from; every crease is no longer
/// than either panel it joins.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LayerSpec {
    material: Material,
    width: f64,
    fold_angle: f64,
    crease_lengths: Vec<f64>,
    panel_heights: Vec<f64>,
    layout: Layout,
    unit_count: UnitCount,
}

fn check_panel_geometry(width: f64, fold_angle: f64, crease_count: usize) -> Result<()> {
    if !(width.is_finite() && width > 0.0) {
        return Err(domain(format!("panel width must be positive, got {width}")));
    }
    if !(fold_angle > 0.0 && fold_angle <= PI) {
        return Err(domain(format!(
            "fold angle must lie in (0, 180] degrees, got {} degrees",
            fold_angle.to_degrees()
        )));
    }
    if crease_count == 0 {
        return Err(domain("a layer needs at least one crease"));
    }
    Ok(())
}

/// `sin(α/2)` and `cos(α/2)`, with the f64 nearest π read as the exactly
/// flat sheet.
pub(crate) fn half_angle(fold_angle: f64) -> (f64, f64) {
    if fold_angle == PI {
        (1.0, 0.0)
    } else {
        let (s, c) = (0.5 * fold_angle).sin_cos();
        (s, c)
    }
}

impl LayerSpec {
    /// A layer with caller-supplied crease lengths (m). Panel heights are the
    /// longer of the creases on either side of each panel.
    pub fn new(material: Material, width: f64, fold_angle: f64, crease_lengths: Vec<f64>) -> Result<Self> {
        check_panel_geometry(width, fold_angle, crease_lengths.len())?;
        if let Some(bad) = crease_lengths.iter().find(|l| !(l.is_finite() && **l > 0.0)) {
            return Err(Error::DegenerateGeometry(format!("crease length must be positive, got {bad}")));
        }
        let n = crease_lengths.len();
        let panel_heights = (0..=n)
            .map(|k| {
                let left = if k > 0 { crease_lengths[k - 1] } else { 0.0 };
                let right = if k < n { crease_lengths[k] } else { 0.0 };
                left.max(right)
            })
            .collect();
        Ok(Self {
            material,
            width,
            fold_angle,
            crease_lengths,
            panel_heights,
            layout: Layout::Explicit,
            unit_count: UnitCount::default(),
        })
    }

    /// Square layout: every crease is `(n + 1) W sin(α/2)` long.
    pub fn square(material: Material, width: f64, fold_angle: f64, crease_count: usize) -> Result<Self> {
        check_panel_geometry(width, fold_angle, crease_count)?;
        let length = square_crease_length(width, fold_angle, crease_count);
        Ok(Self {
            material,
            width,
            fold_angle,
            crease_lengths: vec![length; crease_count],
            panel_heights: vec![length; crease_count + 1],
            layout: Layout::Square,
            unit_count: UnitCount::default(),
        })
    }

    /// Circular layout of radius `radius` (m). Panel `k`, centred at folded
    /// chordwise coordinate `c_k`, is `2 sqrt(R² - c_k²)` tall; each crease
    /// takes the shorter of its two panels.
    pub fn circular(
        material: Material,
        width: f64,
        fold_angle: f64,
        crease_count: usize,
        radius: f64,
    ) -> Result<Self> {
        check_panel_geometry(width, fold_angle, crease_count)?;
        if !(radius.is_finite() && radius > 0.0) {
            return Err(domain(format!("radius must be positive, got {radius}")));
        }
        let panel_heights = circular_panel_heights(width, fold_angle, crease_count, radius)?;
        let crease_lengths = panel_heights.windows(2).map(|p| p[0].min(p[1])).collect();
        Ok(Self {
            material,
            width,
            fold_angle,
            crease_lengths,
            panel_heights,
            layout: Layout::Circular { radius },
            unit_count: UnitCount::default(),
        })
    }

    /// Rebuilds this layer's layout with new `(W, α, n)`. Explicit layouts
    /// keep their crease lengths only when `n` is unchanged.
    pub fn reshaped(&self, width: f64, fold_angle: f64, crease_count: usize) -> Result<Self> {
        let layer = match self.layout {
            Layout::Square => Self::square(self.material, width, fold_angle, crease_count)?,
            Layout::Circular { radius } => {
                Self::circular(self.material, width, fold_angle, crease_count, radius)?
            }
            Layout::Explicit => {
                if crease_count != self.crease_count() {
                    return Err(domain(
                        "cannot change the crease count of an explicit crease-length layout",
                    ));
                }
                Self::new(self.material, width, fold_angle, self.crease_lengths.clone())?
            }
        };
        Ok(layer.with_unit_count(self.unit_count))
    }

    pub fn with_unit_count(mut self, unit_count: UnitCount) -> Self {
        self.unit_count = unit_count;
        self
    }

    pub fn with_material(mut self, material: Material) -> Self {
        self.material = material;
        self
    }

    pub fn material(&self) -> &Material {
        &self.material
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn fold_angle(&self) -> f64 {
        self.fold_angle
    }

    pub fn crease_count(&self) -> usize {
        self.crease_lengths.len()
    }

    pub fn crease_lengths(&self) -> &[f64] {
        &self.crease_lengths
    }

    pub fn panel_heights(&self) -> &[f64] {
        &self.panel_heights
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    pub fn unit_count(&self) -> UnitCount {
        self.unit_count
    }

    /// Lengths summed over in the spring models, per [`UnitCount`].
    pub fn unit_lengths(&self) -> &[f64] {
        match self.unit_count {
            UnitCount::Creases => &self.crease_lengths,
            UnitCount::Panels => &self.panel_heights,
        }
    }

    /// Flat (unfolded) sheet extent `((n + 1) W, max panel height)` in m.
    pub fn flat_extent(&self) -> (f64, f64) {
        let height = self.panel_heights.iter().cloned().fold(0.0, f64::max);
        ((self.crease_count() + 1) as f64 * self.width, height)
    }

    /// Developed flat area of the panels (m²).
    pub fn developed_area(&self) -> f64 {
        self.panel_heights.iter().map(|h| self.width * h).sum()
    }
}

pub fn square_crease_length(width: f64, fold_angle: f64, crease_count: usize) -> f64 {
    (crease_count + 1) as f64 * width * half_angle(fold_angle).0
}

fn circular_panel_heights(width: f64, fold_angle: f64, crease_count: usize, radius: f64) -> Result<Vec<f64>> {
    let pitch = width * half_angle(fold_angle).0;
    let panels = crease_count + 1;
    let span = panels as f64 * pitch;
    (0..panels)
        .map(|k| {
            let centre = (k as f64 + 0.5) * pitch - 0.5 * span;
            let h2 = radius * radius - centre * centre;
            if h2 > 0.0 {
                Ok(2.0 * h2.sqrt())
            } else {
                Err(Error::DegenerateGeometry(format!(
                    "panel {k} centred at {:.4} mm lies outside the {:.4} mm disk",
                    centre * 1e3,
                    radius * 1e3
                )))
            }
        })
        .collect()
}

/// Two corrugated layers stacked with their creases at right angles.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Assembly {
    pub layer1: LayerSpec,
    pub layer2: LayerSpec,
}

impl Assembly {
    pub fn new(layer1: LayerSpec, layer2: LayerSpec) -> Self {
        Self { layer1, layer2 }
    }

    /// Both layers built from the same specification.
    pub fn identical(layer: LayerSpec) -> Self {
        Self {
            layer1: layer.clone(),
            layer2: layer,
        }
    }

    pub fn layers(&self) -> [&LayerSpec; 2] {
        [&self.layer1, &self.layer2]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat() -> Material {
        Material::dura_lar()
    }

    #[test]
    fn square_layer_has_uniform_creases() {
        let l = LayerSpec::square(mat(), 8e-3, 84f64.to_radians(), 8).unwrap();
        assert_eq!(l.crease_count(), 8);
        assert_eq!(l.panel_heights().len(), 9);
        let expected = 9.0 * 8e-3 * (42f64.to_radians()).sin();
        for &x in l.crease_lengths() {
            assert!((x - expected).abs() < 1e-15);
        }
        assert_eq!(l.unit_lengths().len(), 8);
        assert_eq!(l.clone().with_unit_count(UnitCount::Panels).unit_lengths().len(), 9);
    }

    #[test]
    fn rejects_invalid_geometry() {
        assert!(LayerSpec::square(mat(), 0.0, 1.0, 3).is_err());
        assert!(LayerSpec::square(mat(), 1e-3, 0.0, 3).is_err());
        assert!(LayerSpec::square(mat(), 1e-3, 3.2, 3).is_err());
        assert!(LayerSpec::square(mat(), 1e-3, 1.0, 0).is_err());
        assert!(LayerSpec::new(mat(), 1e-3, 1.0, vec![]).is_err());
        assert!(matches!(
            LayerSpec::new(mat(), 1e-3, 1.0, vec![1e-2, 0.0]),
            Err(Error::DegenerateGeometry(_))
        ));
        assert!(LayerSpec::square(mat(), 1e-3, PI, 3).is_ok());
    }

    #[test]
    fn explicit_panels_cover_their_creases() {
        let l = LayerSpec::new(mat(), 1e-2, 1.0, vec![0.04, 0.05, 0.06]).unwrap();
        assert_eq!(l.panel_heights(), &[0.04, 0.05, 0.06, 0.06]);
        assert_eq!(l.flat_extent(), (0.04, 0.06));
    }

    #[test]
    fn circular_heights_are_chords() {
        let (w, a, n, r) = (8e-3, 90f64.to_radians(), 13, 40e-3);
        let l = LayerSpec::circular(mat(), w, a, n, r).unwrap();
        let pitch = w * (a / 2.0).sin();
        for (k, h) in l.panel_heights().iter().enumerate() {
            let c = (k as f64 + 0.5) * pitch - 0.5 * (n + 1) as f64 * pitch;
            assert!((h - 2.0 * (r * r - c * c).sqrt()).abs() < 1e-15);
        }
        for (j, len) in l.crease_lengths().iter().enumerate() {
            let p = l.panel_heights();
            assert!(*len <= p[j] && *len <= p[j + 1]);
        }
        // symmetric about the centre
        let p = l.panel_heights();
        assert!((p[0] - p[n]).abs() < 1e-15);
    }

    #[test]
    fn circular_rejects_panels_outside_disk() {
        let err = LayerSpec::circular(mat(), 8e-3, 90f64.to_radians(), 20, 40e-3);
        assert!(matches!(err, Err(Error::DegenerateGeometry(_))));
    }

    #[test]
    fn reshape_keeps_layout() {
        let l = LayerSpec::square(mat(), 8e-3, 1.2, 4).unwrap().with_unit_count(UnitCount::Panels);
        let r = l.reshaped(9e-3, 1.3, 5).unwrap();
        assert_eq!(r.layout(), Layout::Square);
        assert_eq!(r.unit_count(), UnitCount::Panels);
        assert_eq!(r.crease_count(), 5);
        let e = LayerSpec::new(mat(), 1e-2, 1.0, vec![0.04, 0.05]).unwrap();
        assert!(e.reshaped(1e-2, 1.1, 3).is_err());
        assert!(e.reshaped(1e-2, 1.1, 2).is_ok());
    }
}
