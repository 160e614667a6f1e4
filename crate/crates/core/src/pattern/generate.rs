use serde::Serialize;

use super::offset::{offset_outward, simplify};
use super::{Crease, CreaseKind, FoldPattern, PatternMetadata, Point, Segment, Tab, TabSpec};
use crate::design::DesignSolution;
use crate::error::{Error, Result};
use crate::geometry::folded_dimensions;
use crate::layer::{half_angle, Assembly, LayerSpec};
use crate::units::{kg_per_m3_to_g_per_cm3, m_to_mm, pa_to_gpa, rad_to_deg};

fn metadata(layer: &LayerSpec, index: u8, tabs: &TabSpec, fabrication_limit: Option<f64>) -> PatternMetadata {
    let folded = folded_dimensions(layer);
    let (sheet_w, sheet_h) = layer.flat_extent();
    let mat = layer.material();
    PatternMetadata {
        layer: index,
        orientation_deg: if index == 2 { 90.0 } else { 0.0 },
        width_mm: m_to_mm(layer.width()),
        fold_angle_deg: rad_to_deg(layer.fold_angle()),
        crease_count: layer.crease_count(),
        layout: layer.layout(),
        thickness_mm: m_to_mm(mat.thickness()),
        youngs_modulus_gpa: pa_to_gpa(mat.youngs_modulus()),
        poisson_ratio: mat.poisson_ratio(),
        density_g_cm3: kg_per_m3_to_g_per_cm3(mat.density()),
        crease_lengths_mm: layer.crease_lengths().iter().map(|&l| m_to_mm(l)).collect(),
        panel_heights_mm: layer.panel_heights().iter().map(|&h| m_to_mm(h)).collect(),
        sheet_width_mm: m_to_mm(sheet_w),
        sheet_height_mm: m_to_mm(sheet_h),
        folded_length_mm: m_to_mm(folded.length),
        folded_thickness_mm: m_to_mm(folded.thickness),
        fabrication_limit_mm: fabrication_limit.map(m_to_mm),
        tabs: *tabs,
        design: None,
    }
}

fn build(layer: &LayerSpec, index: u8, tabs: &TabSpec, fabrication_limit: Option<f64>) -> Result<FoldPattern> {
    if let Some(bad) = layer.panel_heights().iter().find(|h| !(**h > 0.0)) {
        return Err(Error::DegenerateGeometry(format!("panel height {bad} m")));
    }
    let (sheet_w, sheet_h) = layer.flat_extent();
    if let Some(limit) = fabrication_limit {
        let extent = sheet_w.max(sheet_h);
        if extent > limit * (1.0 + 1e-12) {
            return Err(Error::FabricationLimit {
                extent_mm: m_to_mm(extent),
                limit_mm: m_to_mm(limit),
            });
        }
    }
    let w = m_to_mm(layer.width());
    if tabs.enabled && !(tabs.depth > 0.0 && tabs.inset >= 0.0 && 2.0 * tabs.inset < w) {
        return Err(Error::DegenerateGeometry(format!(
            "tab depth {} mm / inset {} mm do not fit a {w} mm panel",
            tabs.depth, tabs.inset
        )));
    }
    if !(tabs.kerf >= 0.0 && tabs.kerf.is_finite()) {
        return Err(Error::DegenerateGeometry(format!("kerf {} mm", tabs.kerf)));
    }

    let heights: Vec<f64> = layer.panel_heights().iter().map(|&h| m_to_mm(h)).collect();
    let big_h = m_to_mm(sheet_h);
    let top = |k: usize| 0.5 * (big_h - heights[k]);
    let bottom = |k: usize| 0.5 * (big_h + heights[k]);
    let x = |k: usize| k as f64 * w;
    let panels = heights.len();

    let mut outline = Vec::with_capacity(8 * panels + 4);
    let mut tab_list = Vec::new();
    // top edge, left to right
    outline.push(Point::new(0.0, top(0)));
    for k in 0..panels {
        let y = top(k);
        outline.push(Point::new(x(k), y));
        if tabs.enabled {
            let (a, b) = (Point::new(x(k) + tabs.inset, y), Point::new(x(k + 1) - tabs.inset, y));
            outline.extend([a, Point::new(a.x, y - tabs.depth), Point::new(b.x, y - tabs.depth), b]);
            tab_list.push(Tab {
                fold: Segment { a, b },
                depth: -tabs.depth,
            });
        }
        outline.push(Point::new(x(k + 1), y));
    }
    // bottom edge, right to left
    for k in (0..panels).rev() {
        let y = bottom(k);
        outline.push(Point::new(x(k + 1), y));
        if tabs.enabled {
            let (a, b) = (Point::new(x(k + 1) - tabs.inset, y), Point::new(x(k) + tabs.inset, y));
            outline.extend([a, Point::new(a.x, y + tabs.depth), Point::new(b.x, y + tabs.depth), b]);
            tab_list.push(Tab {
                fold: Segment { a, b },
                depth: tabs.depth,
            });
        }
        outline.push(Point::new(x(k), y));
    }
    let outline = offset_outward(&simplify(outline), 0.5 * tabs.kerf);

    let creases = layer
        .crease_lengths()
        .iter()
        .enumerate()
        .map(|(j, &len)| {
            let half = 0.5 * m_to_mm(len);
            let kind = match (j % 2 == 0) == tabs.mountain_first {
                true => CreaseKind::Mountain,
                false => CreaseKind::Valley,
            };
            Crease {
                segment: Segment {
                    a: Point::new(x(j + 1), 0.5 * big_h - half),
                    b: Point::new(x(j + 1), 0.5 * big_h + half),
                },
                kind,
            }
        })
        .collect();

    Ok(FoldPattern {
        outline,
        creases,
        tabs: tab_list,
        metadata: metadata(layer, index, tabs, fabrication_limit),
    })
}

/// Cut pattern for one layer: `n + 1` panels of width `W` side by side, `n`
/// creases alternating mountain/valley on the panel boundaries, and a tab on
/// both chordwise edges of every panel when tabs are enabled.
///
/// `fabrication_limit` (m) caps the flat sheet size.
pub fn generate_layer_pattern(layer: &LayerSpec, tabs: &TabSpec, fabrication_limit: Option<f64>) -> Result<FoldPattern> {
    build(layer, 1, tabs, fabrication_limit)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AssemblyNotes {
    pub orientation: String,
    pub layer2_rotation_deg: f64,
    pub folded_length_mm: [f64; 2],
    pub folded_thickness_mm: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AssemblyKit {
    pub layer1: FoldPattern,
    pub layer2: FoldPattern,
    pub notes: AssemblyNotes,
}

/// Patterns for both layers of `assembly`, with `design` copied into each
/// pattern's metadata.
pub fn generate_kit_for_assembly(
    assembly: &Assembly,
    tabs: &TabSpec,
    fabrication_limit: Option<f64>,
    design: Option<serde_json::Value>,
) -> Result<AssemblyKit> {
    let mut layer1 = build(&assembly.layer1, 1, tabs, fabrication_limit)?;
    let mut layer2 = build(&assembly.layer2, 2, tabs, fabrication_limit)?;
    layer1.metadata.design = design.clone();
    layer2.metadata.design = design;
    let stack: f64 = assembly
        .layers()
        .iter()
        .map(|l| m_to_mm(l.width() * half_angle(l.fold_angle()).1))
        .sum();
    let notes = AssemblyNotes {
        orientation: "stack layer 2 on layer 1 with its creases perpendicular to layer 1's; join the layers at the edge tabs".into(),
        layer2_rotation_deg: 90.0,
        folded_length_mm: [layer1.metadata.folded_length_mm, layer2.metadata.folded_length_mm],
        folded_thickness_mm: stack,
    };
    Ok(AssemblyKit { layer1, layer2, notes })
}

/// Assembly kit for an optimized design. The solution record is embedded in
/// both patterns.
pub fn generate_assembly_kit(solution: &DesignSolution, tabs: &TabSpec) -> Result<AssemblyKit> {
    let record = serde_json::to_value(solution).map_err(|e| Error::PatternFormat(e.to_string()))?;
    generate_kit_for_assembly(
        &solution.assembly()?,
        tabs,
        solution.constraints.fabrication_limit,
        Some(record),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::material::Material;

    fn square(w_mm: f64, n: usize, alpha_deg: f64) -> LayerSpec {
        LayerSpec::square(Material::dura_lar(), w_mm / 1000.0, alpha_deg.to_radians(), n).unwrap()
    }

    #[test]
    fn case_study_sheet() {
        let p = generate_layer_pattern(&square(8.0, 8, 84.0), &TabSpec::disabled(), Some(0.25)).unwrap();
        let (x0, y0, x1, y1) = p.bounding_box();
        assert_eq!((x0, y0), (0.0, 0.0));
        assert!((x1 - 72.0).abs() < 1e-9);
        assert!((y1 - 48.18).abs() < 0.005);
        assert_eq!(p.creases.len(), 8);
        assert_eq!(p.count(CreaseKind::Mountain), 4);
        assert_eq!(p.outline.len(), 4);
        for w in p.creases.windows(2) {
            assert_ne!(w[0].kind, w[1].kind);
        }
        assert_eq!(p.creases[0].kind, CreaseKind::Mountain);
    }

    #[test]
    fn single_crease() {
        let p = generate_layer_pattern(&square(10.0, 1, 90.0), &TabSpec::default(), None).unwrap();
        assert_eq!(p.creases.len(), 1);
        assert_eq!(p.tabs.len(), 4);
        assert!(p.outline_area() > 0.0);
        assert!(p.outline_segments().all(|s| s.length() > 0.0));
        // panels plus four 9 mm x 5 mm tabs
        let sheet = 20.0 * 2.0 * 10.0 * (45f64.to_radians()).sin();
        assert!((p.outline_area() - (sheet + 4.0 * 45.0)).abs() < 1e-9);
    }

    #[test]
    fn valley_first_when_requested() {
        let tabs = TabSpec {
            mountain_first: false,
            ..TabSpec::disabled()
        };
        let p = generate_layer_pattern(&square(8.0, 3, 90.0), &tabs, None).unwrap();
        assert_eq!(p.creases[0].kind, CreaseKind::Valley);
        assert_eq!(p.count(CreaseKind::Valley), 2);
    }

    #[test]
    fn circular_panels_follow_chords() {
        let layer = LayerSpec::circular(Material::dura_lar(), 8e-3, 90f64.to_radians(), 13, 40e-3).unwrap();
        let p = generate_layer_pattern(&layer, &TabSpec::disabled(), None).unwrap();
        let pitch = 8.0 * (45f64.to_radians()).sin();
        for (k, h) in p.metadata.panel_heights_mm.iter().enumerate() {
            let c = (k as f64 + 0.5) * pitch - 7.0 * pitch;
            assert!((h - 2.0 * (1600.0 - c * c).sqrt()).abs() < 1e-9);
        }
        let (_, _, x1, y1) = p.bounding_box();
        assert!((x1 - 112.0).abs() < 1e-9);
        let tallest = p.metadata.panel_heights_mm.iter().cloned().fold(0.0, f64::max);
        assert!((y1 - tallest).abs() < 1e-9);
        // every crease lies within the outline's vertical span at its x
        for c in &p.creases {
            assert!(c.segment.a.y >= 0.0 && c.segment.b.y <= y1);
        }
    }

    #[test]
    fn fabrication_limit_enforced() {
        let err = generate_layer_pattern(&square(8.0, 40, 84.0), &TabSpec::default(), Some(0.25));
        assert!(matches!(err, Err(Error::FabricationLimit { .. })));
    }

    #[test]
    fn tabs_must_fit() {
        let tabs = TabSpec {
            inset: 5.0,
            ..TabSpec::default()
        };
        assert!(matches!(
            generate_layer_pattern(&square(8.0, 3, 90.0), &tabs, None),
            Err(Error::DegenerateGeometry(_))
        ));
    }

    #[test]
    fn kerf_grows_outline() {
        let tabs = TabSpec {
            kerf: 0.2,
            ..TabSpec::disabled()
        };
        let p = generate_layer_pattern(&square(8.0, 3, 90.0), &tabs, None).unwrap();
        let (x0, y0, x1, _) = p.bounding_box();
        assert!((x0 + 0.1).abs() < 1e-12 && (y0 + 0.1).abs() < 1e-12);
        assert!((x1 - 32.1).abs() < 1e-12);
    }

    #[test]
    fn identical_layers_give_congruent_kit() {
        let kit = generate_kit_for_assembly(&Assembly::identical(square(8.0, 8, 84.0)), &TabSpec::default(), None, None)
            .unwrap();
        assert_eq!(kit.layer1.outline, kit.layer2.outline);
        assert_eq!(kit.layer1.creases, kit.layer2.creases);
        assert_eq!(kit.layer2.metadata.orientation_deg, 90.0);
        assert!((kit.notes.folded_thickness_mm - 11.89).abs() < 0.005);
    }
}
