//! Flat cut patterns for corrugated layers.
//!
//! Coordinates are millimetres with `x` across the corrugations (panels side
//! by side) and `y` along the creases, `y` growing downwards as in SVG.
//! Panels are centred on the line `y = H / 2`, `H` being the tallest panel.

mod generate;
mod offset;
mod svg;

use serde::{Deserialize, Serialize};

pub use generate::{generate_assembly_kit, generate_kit_for_assembly, generate_layer_pattern, AssemblyKit, AssemblyNotes};
pub use svg::{read_svg, segments_csv, write_svg};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    fn close_to(&self, other: &Point, tol: f64) -> bool {
        (self.x - other.x).abs() <= tol && (self.y - other.y).abs() <= tol
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn length(&self) -> f64 {
        (self.b.x - self.a.x).hypot(self.b.y - self.a.y)
    }

    fn close_to(&self, other: &Segment, tol: f64) -> bool {
        self.a.close_to(&other.a, tol) && self.b.close_to(&other.b, tol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CreaseKind {
    Mountain,
    Valley,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Crease {
    pub segment: Segment,
    pub kind: CreaseKind,
}

/// A rectangular connector tab hinged on `fold`, reaching `depth` mm in `y`
/// (negative above the sheet, positive below).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tab {
    pub fold: Segment,
    pub depth: f64,
}

impl Tab {
    pub fn polygon(&self) -> [Point; 4] {
        let Segment { a, b } = self.fold;
        [a, b, Point::new(b.x, b.y + self.depth), Point::new(a.x, a.y + self.depth)]
    }
}

/// Connector tabs and cutter settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TabSpec {
    pub enabled: bool,
    /// Tab depth (mm).
    pub depth: f64,
    /// Gap between a tab and each panel side (mm).
    pub inset: f64,
    /// Cutter kerf (mm); the cut outline is offset outward by half of it.
    pub kerf: f64,
    /// Whether the first crease is a mountain fold.
    pub mountain_first: bool,
}

impl Default for TabSpec {
    fn default() -> Self {
        Self {
            enabled: true,
            depth: 5.0,
            inset: 0.5,
            kerf: 0.0,
            mountain_first: true,
        }
    }
}

impl TabSpec {
    pub fn disabled() -> Self {
        Self {
            enabled: false,
            ..Self::default()
        }
    }
}

/// Design parameters echoed into every pattern file, in reporting units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatternMetadata {
    pub layer: u8,
    /// Rotation of this layer's creases relative to layer 1 (degrees).
    pub orientation_deg: f64,
    pub width_mm: f64,
    pub fold_angle_deg: f64,
    pub crease_count: usize,
    pub layout: crate::layer::Layout,
    pub thickness_mm: f64,
    pub youngs_modulus_gpa: f64,
    pub poisson_ratio: f64,
    pub density_g_cm3: f64,
    pub crease_lengths_mm: Vec<f64>,
    pub panel_heights_mm: Vec<f64>,
    pub sheet_width_mm: f64,
    pub sheet_height_mm: f64,
    pub folded_length_mm: f64,
    pub folded_thickness_mm: f64,
    pub fabrication_limit_mm: Option<f64>,
    pub tabs: TabSpec,
    /// Full design record when the pattern came from a design run.
    pub design: Option<serde_json::Value>,
}

/// Cut outline, fold lines and tabs for one layer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FoldPattern {
    /// Closed cut contour including tabs (last point joins the first).
    pub outline: Vec<Point>,
    pub creases: Vec<Crease>,
    pub tabs: Vec<Tab>,
    pub metadata: PatternMetadata,
}

impl FoldPattern {
    /// `(min_x, min_y, max_x, max_y)` of the cut outline.
    pub fn bounding_box(&self) -> (f64, f64, f64, f64) {
        self.outline.iter().fold(
            (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY),
            |(x0, y0, x1, y1), p| (x0.min(p.x), y0.min(p.y), x1.max(p.x), y1.max(p.y)),
        )
    }

    /// Flat panel extent `((n + 1) W, tallest panel)`, tabs excluded.
    pub fn sheet_extent(&self) -> (f64, f64) {
        (self.metadata.sheet_width_mm, self.metadata.sheet_height_mm)
    }

    pub fn outline_segments(&self) -> impl Iterator<Item = Segment> + '_ {
        let n = self.outline.len();
        (0..n).map(move |i| Segment {
            a: self.outline[i],
            b: self.outline[(i + 1) % n],
        })
    }

    /// Shoelace area of the outline (mm², positive).
    pub fn outline_area(&self) -> f64 {
        offset::signed_area(&self.outline).abs()
    }

    pub fn count(&self, kind: CreaseKind) -> usize {
        self.creases.iter().filter(|c| c.kind == kind).count()
    }

    /// Same pattern up to `tol` mm in every coordinate, with identical
    /// metadata.
    pub fn approx_eq(&self, other: &FoldPattern, tol: f64) -> bool {
        self.metadata == other.metadata
            && self.outline.len() == other.outline.len()
            && self.outline.iter().zip(&other.outline).all(|(a, b)| a.close_to(b, tol))
            && self.creases.len() == other.creases.len()
            && self
                .creases
                .iter()
                .zip(&other.creases)
                .all(|(a, b)| a.kind == b.kind && a.segment.close_to(&b.segment, tol))
            && self.tabs.len() == other.tabs.len()
            && self
                .tabs
                .iter()
                .zip(&other.tabs)
                .all(|(a, b)| a.fold.close_to(&b.fold, tol) && (a.depth - b.depth).abs() <= tol)
    }
}
