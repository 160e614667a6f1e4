//! Nelder–Mead simplex minimization over the unit square.
//!
//! Trial points are projected onto `[0, 1]²` before evaluation, so the
//! objective sees only box-feasible arguments. Infeasible points are expected
//! to evaluate to `+∞`.

pub(crate) struct SimplexOptions {
    pub initial_step: f64,
    pub tolerance: f64,
    pub max_iterations: usize,
}

pub(crate) struct SimplexResult {
    pub point: [f64; 2],
    pub value: f64,
    pub evaluations: u64,
}

fn project(p: [f64; 2]) -> [f64; 2] {
    [p[0].clamp(0.0, 1.0), p[1].clamp(0.0, 1.0)]
}

fn lerp(a: [f64; 2], b: [f64; 2], t: f64) -> [f64; 2] {
    [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])]
}

pub(crate) fn minimize<F>(mut f: F, start: [f64; 2], opts: &SimplexOptions) -> SimplexResult
where
    F: FnMut([f64; 2]) -> f64,
{
    let mut evaluations = 0u64;
    let mut eval = |p: [f64; 2]| {
        evaluations += 1;
        f(p)
    };

    let start = project(start);
    let mut vertices = [start; 3];
    for (axis, v) in vertices.iter_mut().skip(1).enumerate() {
        let mut p = start;
        // step inward if the start sits on the upper face
        p[axis] = if p[axis] + opts.initial_step <= 1.0 {
            p[axis] + opts.initial_step
        } else {
            p[axis] - opts.initial_step
        };
        *v = project(p);
    }
    let mut values = vertices.map(&mut eval);

    for _ in 0..opts.max_iterations {
        // order: best, middle, worst; ties broken by coordinates for determinism
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&a, &b| {
            values[a]
                .total_cmp(&values[b])
                .then(vertices[a][0].total_cmp(&vertices[b][0]))
                .then(vertices[a][1].total_cmp(&vertices[b][1]))
        });
        vertices = idx.map(|i| vertices[i]);
        values = idx.map(|i| values[i]);

        let diameter = (1..3)
            .map(|i| (vertices[i][0] - vertices[0][0]).abs().max((vertices[i][1] - vertices[0][1]).abs()))
            .fold(0.0, f64::max);
        let spread = if values[2].is_finite() {
            (values[2] - values[0]).abs()
        } else {
            f64::INFINITY
        };
        if diameter <= opts.tolerance && spread <= opts.tolerance * values[0].abs().max(f64::MIN_POSITIVE) {
            break;
        }
        if diameter <= f64::EPSILON {
            break;
        }

        let centroid = lerp(vertices[0], vertices[1], 0.5);
        let reflected = project(lerp(centroid, vertices[2], -1.0));
        let f_r = eval(reflected);
        if f_r < values[0] {
            let expanded = project(lerp(centroid, vertices[2], -2.0));
            let f_e = eval(expanded);
            if f_e < f_r {
                vertices[2] = expanded;
                values[2] = f_e;
            } else {
                vertices[2] = reflected;
                values[2] = f_r;
            }
            continue;
        }
        if f_r < values[1] {
            vertices[2] = reflected;
            values[2] = f_r;
            continue;
        }
        let (contracted, f_c) = if f_r < values[2] {
            let p = project(lerp(centroid, reflected, 0.5));
            (p, eval(p))
        } else {
            let p = project(lerp(centroid, vertices[2], 0.5));
            (p, eval(p))
        };
        if f_c < values[2].min(f_r) {
            vertices[2] = contracted;
            values[2] = f_c;
            continue;
        }
        for i in 1..3 {
            vertices[i] = lerp(vertices[0], vertices[i], 0.5);
            values[i] = eval(vertices[i]);
        }
    }

    let best = (0..3)
        .min_by(|&a, &b| values[a].total_cmp(&values[b]))
        .unwrap_or(0);
    SimplexResult {
        point: vertices[best],
        value: values[best],
        evaluations,
    }
}
