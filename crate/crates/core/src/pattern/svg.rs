use std::fmt::Write;

use super::{Crease, CreaseKind, FoldPattern, PatternMetadata, Point, Segment, Tab};
use crate::error::{Error, Result};

const MARGIN_MM: f64 = 1.0;
const STROKE_WIDTH: &str = "0.1";
const COMMENT_TAG: &str = "oadlc-pattern ";

/// Fixed six-decimal millimetre value with `-0` folded into `0`.
fn mm(v: f64) -> String {
    let s = format!("{v:.6}");
    if s.trim_start_matches('-').bytes().all(|b| b == b'0' || b == b'.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn group_open(out: &mut String, class: &str, dash: Option<&str>) {
    let _ = write!(
        out,
        "  <g class=\"{class}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"{STROKE_WIDTH}\""
    );
    if let Some(d) = dash {
        let _ = write!(out, " stroke-dasharray=\"{d}\"");
    }
    out.push_str(">\n");
}

fn line(out: &mut String, s: &Segment, extra: &str) {
    let _ = writeln!(
        out,
        "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"{extra}/>",
        mm(s.a.x),
        mm(s.a.y),
        mm(s.b.x),
        mm(s.b.y)
    );
}

/// SVG document for `pattern`: millimetre units, one group per line class
/// and the pattern metadata as JSON in a leading comment. Output depends only
/// on the pattern, so equal patterns give identical bytes.
pub fn write_svg(pattern: &FoldPattern) -> Result<String> {
    let json = serde_json::to_string(&pattern.metadata).map_err(|e| Error::PatternFormat(e.to_string()))?;
    // "--" may not appear inside an XML comment; it can only occur within
    // JSON strings, where the escape is equivalent.
    let json = json.replace("--", "-\\u002d");

    let (x0, y0, x1, y1) = pattern.bounding_box();
    let (vx, vy) = (x0 - MARGIN_MM, y0 - MARGIN_MM);
    let (vw, vh) = (x1 - x0 + 2.0 * MARGIN_MM, y1 - y0 + 2.0 * MARGIN_MM);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(out, "<!-- {COMMENT_TAG}{json} -->");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}mm\" height=\"{}mm\" viewBox=\"{} {} {} {}\">",
        mm(vw),
        mm(vh),
        mm(vx),
        mm(vy),
        mm(vw),
        mm(vh)
    );

    group_open(&mut out, "cut", None);
    out.push_str("    <path d=\"");
    for (i, p) in pattern.outline.iter().enumerate() {
        let _ = write!(out, "{}{},{} ", if i == 0 { "M" } else { "L" }, mm(p.x), mm(p.y));
    }
    out.push_str("Z\"/>\n  </g>\n");

    for (kind, class, dash) in [
        (CreaseKind::Mountain, "mountain", "4 2"),
        (CreaseKind::Valley, "valley", "4 2 1 2"),
    ] {
        group_open(&mut out, class, Some(dash));
        for c in pattern.creases.iter().filter(|c| c.kind == kind) {
            line(&mut out, &c.segment, "");
        }
        out.push_str("  </g>\n");
    }

    group_open(&mut out, "tab-fold", Some("1 1"));
    for t in &pattern.tabs {
        line(&mut out, &t.fold, &format!(" data-depth=\"{}\"", mm(t.depth)));
    }
    out.push_str("  </g>\n</svg>\n");
    Ok(out)
}

fn bad(msg: impl Into<String>) -> Error {
    Error::PatternFormat(msg.into())
}

fn attr_f64(node: roxmltree::Node, name: &str) -> Result<f64> {
    let raw = node.attribute(name).ok_or_else(|| bad(format!("<{}> lacks {name}", node.tag_name().name())))?;
    raw.trim()
        .parse()
        .map_err(|_| bad(format!("{name}=\"{raw}\" is not a number")))
}

fn read_segment(node: roxmltree::Node) -> Result<Segment> {
    Ok(Segment {
        a: Point::new(attr_f64(node, "x1")?, attr_f64(node, "y1")?),
        b: Point::new(attr_f64(node, "x2")?, attr_f64(node, "y2")?),
    })
}

fn read_path(d: &str) -> Result<Vec<Point>> {
    let mut points = Vec::new();
    for token in d.split_whitespace() {
        let body = match token {
            "Z" | "z" => break,
            t if t.starts_with('M') || t.starts_with('L') => &t[1..],
            t => t,
        };
        let (x, y) = body.split_once(',').ok_or_else(|| bad(format!("bad path token {token}")))?;
        let parse = |s: &str| s.parse::<f64>().map_err(|_| bad(format!("bad path token {token}")));
        points.push(Point::new(parse(x)?, parse(y)?));
    }
    if points.len() < 3 {
        return Err(bad("cut outline has fewer than three points"));
    }
    Ok(points)
}

/// Parses a document produced by [`write_svg`]. Coordinates come back to the
/// six decimals written; metadata comes back exactly.
pub fn read_svg(text: &str) -> Result<FoldPattern> {
    let doc = roxmltree::Document::parse(text).map_err(|e| bad(e.to_string()))?;
    let metadata: PatternMetadata = doc
        .root()
        .children()
        .filter(|n| n.is_comment())
        .find_map(|n| n.text().map(str::trim).and_then(|t| t.strip_prefix(COMMENT_TAG)))
        .ok_or_else(|| bad("missing pattern metadata comment"))
        .and_then(|json| serde_json::from_str(json).map_err(|e| bad(e.to_string())))?;

    let mut outline = None;
    let mut creases = Vec::new();
    let mut tabs = Vec::new();
    for group in doc.root_element().children().filter(|n| n.has_tag_name("g")) {
        let class = group.attribute("class").unwrap_or_default();
        for el in group.children().filter(|n| n.is_element()) {
            match (class, el.tag_name().name()) {
                ("cut", "path") => {
                    if outline.is_some() {
                        return Err(bad("more than one cut outline"));
                    }
                    outline = Some(read_path(el.attribute("d").unwrap_or_default())?);
                }
                ("mountain", "line") => creases.push(Crease {
                    segment: read_segment(el)?,
                    kind: CreaseKind::Mountain,
                }),
                ("valley", "line") => creases.push(Crease {
                    segment: read_segment(el)?,
                    kind: CreaseKind::Valley,
                }),
                ("tab-fold", "line") => tabs.push(Tab {
                    fold: read_segment(el)?,
                    depth: attr_f64(el, "data-depth")?,
                }),
                (c, t) => return Err(bad(format!("unexpected <{t}> in group \"{c}\""))),
            }
        }
    }
    creases.sort_by(|a, b| a.segment.a.x.total_cmp(&b.segment.a.x));
    Ok(FoldPattern {
        outline: outline.ok_or_else(|| bad("missing cut outline"))?,
        creases,
        tabs,
        metadata,
    })
}

/// One row per drawn segment: `x1,y1,x2,y2,class`.
pub fn segments_csv(pattern: &FoldPattern) -> String {
    let mut out = String::from("x1,y1,x2,y2,class\n");
    let mut row = |s: &Segment, class: &str| {
        let _ = writeln!(out, "{},{},{},{},{class}", mm(s.a.x), mm(s.a.y), mm(s.b.x), mm(s.b.y));
    };
    for s in pattern.outline_segments() {
        row(&s, "cut");
    }
    for c in &pattern.creases {
        row(
            &c.segment,
            match c.kind {
                CreaseKind::Mountain => "mountain",
                CreaseKind::Valley => "valley",
            },
        );
    }
    for t in &pattern.tabs {
        row(&t.fold, "tab-fold");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layer::LayerSpec;
    use crate::material::Material;
    use crate::pattern::{generate_layer_pattern, TabSpec};

    fn pattern(tabs: &TabSpec) -> FoldPattern {
        let layer = LayerSpec::square(Material::dura_lar(), 8e-3, 84f64.to_radians(), 8).unwrap();
        generate_layer_pattern(&layer, tabs, Some(0.25)).unwrap()
    }

    #[test]
    fn number_format() {
        assert_eq!(mm(-0.0), "0.000000");
        assert_eq!(mm(-1e-9), "0.000000");
        assert_eq!(mm(1.5), "1.500000");
        assert_eq!(mm(-2.25), "-2.250000");
    }

    #[test]
    fn round_trip() {
        for tabs in [TabSpec::default(), TabSpec::disabled()] {
            let p = pattern(&tabs);
            let svg = write_svg(&p).unwrap();
            let back = read_svg(&svg).unwrap();
            assert!(back.approx_eq(&p, 1e-6));
            assert_eq!(write_svg(&back).unwrap(), svg);
        }
    }

    #[test]
    fn groups_and_styles() {
        let svg = write_svg(&pattern(&TabSpec::default())).unwrap();
        assert!(svg.contains("<g class=\"cut\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.1\">"));
        assert!(svg.contains("class=\"mountain\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.1\" stroke-dasharray=\"4 2\""));
        assert!(svg.contains("stroke-dasharray=\"4 2 1 2\""));
        assert!(svg.contains("class=\"tab-fold\""));
        assert_eq!(svg.matches("<line").count(), 8 + 18);
        assert!(svg.contains("width=\"74.000000mm\""));
    }

    #[test]
    fn viewbox_is_outline_plus_margin() {
        let p = pattern(&TabSpec::disabled());
        let svg = write_svg(&p).unwrap();
        let doc = roxmltree::Document::parse(&svg).unwrap();
        let vb: Vec<f64> = doc
            .root_element()
            .attribute("viewBox")
            .unwrap()
            .split(' ')
            .map(|v| v.parse().unwrap())
            .collect();
        let (x0, y0, x1, y1) = p.bounding_box();
        assert_eq!(vb[0], -1.0);
        assert_eq!(vb[1], -1.0);
        assert!((vb[2] - (x1 - x0 + 2.0)).abs() < 1e-6);
        assert!((vb[3] - (y1 - y0 + 2.0)).abs() < 1e-6);
    }

    #[test]
    fn comment_survives_double_hyphen() {
        let mut p = pattern(&TabSpec::disabled());
        p.metadata.design = Some(serde_json::json!({ "note": "a -- b --" }));
        let svg = write_svg(&p).unwrap();
        let back = read_svg(&svg).unwrap();
        assert_eq!(back.metadata, p.metadata);
    }

    #[test]
    fn rejects_foreign_documents() {
        assert!(read_svg("<svg xmlns=\"http://www.w3.org/2000/svg\"/>").is_err());
        assert!(read_svg("not xml").is_err());
    }

    #[test]
    fn csv_rows() {
        let p = pattern(&TabSpec::disabled());
        let csv = segments_csv(&p);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("x1,y1,x2,y2,class"));
        assert_eq!(csv.lines().count(), 1 + 4 + 8);
        assert_eq!(csv.lines().filter(|l| l.ends_with(",mountain")).count(), 4);
    }
}
