use crate::moduli::reference_moduli;
use crate::spring::{reduce, SpringChain};
use crate::OracleError;

/// Chordwise (series) and spanwise (parallel) springs of one layer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceLayer {
    pub k_chordwise: f64,
    pub k_spanwise: f64,
    pub d_chordwise: f64,
    pub d_spanwise: f64,
}

/// Builds the per-cell spring network of a layer from reference moduli and
/// reduces it. `lengths` are the unit-cell lengths (m) entering the sums.
pub fn reference_layer(
    youngs_modulus: f64,
    poisson_ratio: f64,
    thickness: f64,
    width: f64,
    fold_angle: f64,
    lengths: &[f64],
) -> Result<ReferenceLayer, OracleError> {
    let m = reference_moduli(youngs_modulus, poisson_ratio, thickness, width, fold_angle)?;
    let s = if fold_angle == std::f64::consts::PI {
        1.0
    } else {
        (0.5 * fold_angle).sin()
    };
    let t = thickness;
    let t3 = t * t * t;
    let cells = |f: &dyn Fn(f64) -> f64| lengths.iter().map(|&l| f(l)).collect::<Vec<_>>();
    let k_c = SpringChain::series(cells(&|l| m.e_cx * l * t / (width * s)))?;
    let k_s = SpringChain::parallel(cells(&|l| m.e_cy * width * t * s / l))?;
    let d_c = SpringChain::series(cells(&|l| m.e_bx * l * t3 / (12.0 * width * s)))?;
    let d_s = SpringChain::parallel(cells(&|l| m.e_by * t3 * width * s / (12.0 * l)))?;
    Ok(ReferenceLayer {
        k_chordwise: reduce(&k_c),
        k_spanwise: reduce(&k_s),
        d_chordwise: reduce(&d_c),
        d_spanwise: reduce(&d_s),
    })
}

/// In-plane and bending stiffness of two layers stacked with crossed creases,
/// in direction `eta` (rad) from layer 1's creases. Each direction sees one
/// layer's spanwise and the other's chordwise spring in parallel.
pub fn reference_assembly(layer1: &ReferenceLayer, layer2: &ReferenceLayer, eta: f64) -> Result<(f64, f64), OracleError> {
    let (s, c) = eta.sin_cos();
    let (c2, s2) = (c * c, s * s);
    let mix = |along: [f64; 2], across: [f64; 2]| -> Result<f64, OracleError> {
        let a = reduce(&SpringChain::parallel(along.to_vec())?);
        let b = reduce(&SpringChain::parallel(across.to_vec())?);
        Ok(a * c2 + b * s2)
    };
    Ok((
        mix(
            [layer1.k_spanwise, layer2.k_chordwise],
            [layer2.k_spanwise, layer1.k_chordwise],
        )?,
        mix(
            [layer1.d_spanwise, layer2.d_chordwise],
            [layer2.d_spanwise, layer1.d_chordwise],
        )?,
    ))
}
