use super::Point;

pub(crate) fn signed_area(points: &[Point]) -> f64 {
    let n = points.len();
    0.5 * (0..n)
        .map(|i| {
            let (p, q) = (points[i], points[(i + 1) % n]);
            p.x * q.y - q.x * p.y
        })
        .sum::<f64>()
}

/// Drops repeated and collinear vertices of a closed polyline.
pub(crate) fn simplify(points: Vec<Point>) -> Vec<Point> {
    let mut pts: Vec<Point> = Vec::with_capacity(points.len());
    for p in points {
        if pts.last() != Some(&p) {
            pts.push(p);
        }
    }
    while pts.len() > 1 && pts.first() == pts.last() {
        pts.pop();
    }
    loop {
        let n = pts.len();
        if n < 4 {
            return pts;
        }
        let drop = (0..n).find(|&i| {
            let (a, b, c) = (pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]);
            let cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
            let dot = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y);
            cross == 0.0 && dot > 0.0
        });
        match drop {
            Some(i) => {
                pts.remove(i);
            }
            None => return pts,
        }
    }
}

/// Offsets a simple polygon outward by `distance` with mitred corners.
pub(crate) fn offset_outward(points: &[Point], distance: f64) -> Vec<Point> {
    if distance == 0.0 || points.len() < 3 {
        return points.to_vec();
    }
    // Outward normal of edge (p -> q) is to the left for clockwise (negative
    // area) polygons and to the right for counter-clockwise ones.
    let sign = if signed_area(points) > 0.0 { 1.0 } else { -1.0 };
    let normal = |p: Point, q: Point| {
        let (dx, dy) = (q.x - p.x, q.y - p.y);
        let len = dx.hypot(dy);
        (sign * dy / len, -sign * dx / len)
    };
    let n = points.len();
    (0..n)
        .map(|i| {
            let (prev, cur, next) = (points[(i + n - 1) % n], points[i], points[(i + 1) % n]);
            let (ax, ay) = normal(prev, cur);
            let (bx, by) = normal(cur, next);
            let denom = 1.0 + ax * bx + ay * by;
            Point::new(cur.x + distance * (ax + bx) / denom, cur.y + distance * (ay + by) / denom)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Vec<Point> {
        vec![Point::new(0.0, 0.0), Point::new(2.0, 0.0), Point::new(2.0, 2.0), Point::new(0.0, 2.0)]
    }

    #[test]
    fn offset_grows_square_either_orientation() {
        for pts in [square(), square().into_iter().rev().collect()] {
            let out = offset_outward(&pts, 0.5);
            assert!((signed_area(&out).abs() - 9.0).abs() < 1e-12);
        }
    }

    #[test]
    fn simplify_removes_collinear_and_duplicates() {
        let pts = vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(2.0, 2.0),
            Point::new(0.0, 2.0),
            Point::new(0.0, 0.0),
        ];
        assert_eq!(simplify(pts), square());
    }
}
