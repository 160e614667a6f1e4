use oadlc_core::error::Error;
use oadlc_core::pattern::{read_svg, segments_csv, write_svg, CreaseKind, Point, Segment};
use oadlc_core::units::{deg_to_rad, m_to_mm, mm_to_m, mnm_to_nm};
use oadlc_core::{
    folded_dimensions, generate_assembly_kit, generate_layer_pattern, optimize, DesignConstraints, LayerSpec, Material,
    TabSpec,
};
use proptest::prelude::*;

fn cross(o: Point, a: Point, b: Point) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Proper or touching intersection of two segments that share no endpoint.
fn intersects(p: &Segment, q: &Segment) -> bool {
    let d1 = cross(q.a, q.b, p.a);
    let d2 = cross(q.a, q.b, p.b);
    let d3 = cross(p.a, p.b, q.a);
    let d4 = cross(p.a, p.b, q.b);
    let straddle = |u: f64, v: f64| (u > 0.0 && v < 0.0) || (u < 0.0 && v > 0.0);
    straddle(d1, d2) && straddle(d3, d4)
}

fn is_simple(segments: &[Segment]) -> bool {
    let n = segments.len();
    (0..n).all(|i| ((i + 2)..n).all(|j| (i == 0 && j == n - 1) || !intersects(&segments[i], &segments[j])))
}

prop_compose! {
    fn square_layer()(w in 2.0..20.0f64, n in 1usize..40, a in 10.0..170.0f64) -> LayerSpec {
        LayerSpec::square(Material::dura_lar(), mm_to_m(w), deg_to_rad(a), n).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn square_sheets(layer in square_layer(), tabs in any::<bool>()) {
        let spec = if tabs { TabSpec::default() } else { TabSpec::disabled() };
        let n = layer.crease_count();
        let p = generate_layer_pattern(&layer, &spec, None).unwrap();

        prop_assert_eq!(p.creases.len(), n);
        prop_assert!(p.creases.windows(2).all(|c| c[0].kind != c[1].kind));
        let m = p.count(CreaseKind::Mountain) as i64;
        prop_assert!((m - (n as i64 - m)).abs() <= 1);

        let width = (n + 1) as f64 * m_to_mm(layer.width());
        let height = m_to_mm(layer.crease_lengths()[0]);
        let (x0, y0, x1, y1) = p.bounding_box();
        let depth = if tabs { spec.depth } else { 0.0 };
        prop_assert!((x1 - x0 - width).abs() <= 1e-9);
        prop_assert!((y1 - y0 - height - 2.0 * depth).abs() <= 1e-9);
        prop_assert!((p.metadata.folded_length_mm - m_to_mm(folded_dimensions(&layer).length)).abs() <= 1e-9);

        let segs: Vec<Segment> = p.outline_segments().collect();
        prop_assert!(segs.iter().all(|s| s.length() > 0.0));
        prop_assert!(p.outline_area() > 0.0);
        prop_assert!(is_simple(&segs));
        for c in &p.creases {
            prop_assert!(c.segment.length() > 0.0);
            prop_assert!(c.segment.a.x > x0 && c.segment.a.x < x1);
            prop_assert!(c.segment.a.y >= y0 + depth - 1e-12 && c.segment.b.y <= y1 - depth + 1e-12);
        }

        let svg = write_svg(&p).unwrap();
        let back = read_svg(&svg).unwrap();
        prop_assert!(back.approx_eq(&p, 1e-6));
        prop_assert_eq!(write_svg(&back).unwrap(), svg);
    }

    #[test]
    fn fabrication_limit_respected(layer in square_layer(), limit in 20.0..400.0f64) {
        let (w, h) = layer.flat_extent();
        let extent = m_to_mm(w.max(h));
        match generate_layer_pattern(&layer, &TabSpec::disabled(), Some(mm_to_m(limit))) {
            Ok(p) => {
                prop_assert!(extent <= limit * (1.0 + 1e-12));
                let (x0, y0, x1, y1) = p.bounding_box();
                prop_assert!((x1 - x0).max(y1 - y0) <= limit * (1.0 + 1e-12));
            }
            Err(Error::FabricationLimit { .. }) => prop_assert!(extent > limit),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }
}

#[test]
fn optimized_kit_round_trips_and_echoes_design() {
    let c = DesignConstraints {
        fabrication_limit: Some(mm_to_m(250.0)),
        folded_length_min: Some(mm_to_m(48.0)),
        folded_length_max: Some(mm_to_m(60.0)),
        thickness_min: Some(mm_to_m(10.0)),
        thickness_max: Some(mm_to_m(12.5)),
        d_min: Some(mnm_to_nm(80.0)),
        ..Default::default()
    };
    let s = optimize(&Material::dura_lar(), &c).unwrap();
    let kit = generate_assembly_kit(&s, &TabSpec::default()).unwrap();
    assert_eq!(kit.layer1.creases, kit.layer2.creases);
    assert!((kit.notes.folded_thickness_mm - m_to_mm(s.folded_thickness)).abs() < 1e-9);
    for p in [&kit.layer1, &kit.layer2] {
        let back = read_svg(&write_svg(p).unwrap()).unwrap();
        assert!(back.approx_eq(p, 1e-6));
        let design = back.metadata.design.as_ref().unwrap();
        assert_eq!(design["crease_count"], s.crease_count);
        assert_eq!(design["mass"].as_f64(), Some(s.mass));
    }
}

#[test]
fn csv_lists_every_segment() {
    let layer = LayerSpec::square(Material::dura_lar(), mm_to_m(8.0), deg_to_rad(84.0), 8).unwrap();
    let p = generate_layer_pattern(&layer, &TabSpec::default(), None).unwrap();
    let csv = segments_csv(&p);
    assert_eq!(csv.lines().count(), 1 + p.outline.len() + p.creases.len() + p.tabs.len());
    assert!(csv.lines().skip(1).all(|l| l.split(',').count() == 5));
}
