use astro_float::{BigFloat, Consts, Radix, RoundingMode};

use crate::OracleError;

/// Working precision in bits (about 57 decimal digits).
const PRECISION: usize = 192;
const RM: RoundingMode = RoundingMode::ToEven;

/// Equivalent moduli of a triangular unit cell, rounded to `f64` from the
/// extended-precision evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceModuli {
    pub e_cx: f64,
    pub e_cy: f64,
    pub e_bx: f64,
    pub e_by: f64,
}

struct Ctx {
    cc: Consts,
}

impl Ctx {
    fn new() -> Result<Self, OracleError> {
        Consts::new()
            .map(|cc| Self { cc })
            .map_err(|e| OracleError::Arithmetic(format!("{e:?}")))
    }

    fn num(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, PRECISION)
    }

    fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, PRECISION, RM)
    }

    fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, PRECISION, RM)
    }

    fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, PRECISION, RM)
    }

    fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, PRECISION, RM)
    }

    /// Horner evaluation of `c[0] + c[1] x + c[2] x^2 + ...`.
    fn poly(&self, coeffs: &[f64], x: &BigFloat) -> BigFloat {
        let mut acc = self.num(0.0);
        for &c in coeffs.iter().rev() {
            acc = self.add(&self.mul(&acc, x), &self.num(c));
        }
        acc
    }

    fn sin(&mut self, x: &BigFloat) -> Result<BigFloat, OracleError> {
        let y = x.sin(PRECISION, RM, &mut self.cc);
        if y.is_nan() {
            return Err(OracleError::Arithmetic("sin produced NaN".into()));
        }
        Ok(y)
    }

    fn cos(&mut self, x: &BigFloat) -> Result<BigFloat, OracleError> {
        let y = x.cos(PRECISION, RM, &mut self.cc);
        if y.is_nan() {
            return Err(OracleError::Arithmetic("cos produced NaN".into()));
        }
        Ok(y)
    }

    fn to_f64(&mut self, x: &BigFloat) -> Result<f64, OracleError> {
        let text = x
            .format(Radix::Dec, RM, &mut self.cc)
            .map_err(|e| OracleError::Arithmetic(format!("{e:?}")))?;
        text.parse::<f64>()
            .map_err(|e| OracleError::Arithmetic(format!("cannot read back {text:?}: {e}")))
    }
}

/// Re-evaluates the four triangular-cell moduli at extended precision.
///
/// Arguments are SI: Young's modulus (Pa), Poisson ratio, sheet thickness
/// (m), panel width (m) and fold angle (rad). The algebra is rearranged
/// relative to the closed forms used in production: the membrane modulus
/// `E_cx` is divided through by `t² sin(α/2)`, `E_cy` is reduced to
/// `(3 - ν) / (4 (1 - ν) sin(α/2))`, and `cos α + 1` is replaced by
/// `2 cos²(α/2)`.
pub fn reference_moduli(
    youngs_modulus: f64,
    poisson_ratio: f64,
    thickness: f64,
    width: f64,
    fold_angle: f64,
) -> Result<ReferenceModuli, OracleError> {
    let finite = [youngs_modulus, poisson_ratio, thickness, width, fold_angle]
        .iter()
        .all(|x| x.is_finite());
    if !finite {
        return Err(OracleError::Domain("non-finite input".into()));
    }
    if !(fold_angle > 0.0 && fold_angle <= std::f64::consts::PI) {
        return Err(OracleError::Domain(format!(
            "fold angle {fold_angle} rad outside (0, pi]"
        )));
    }
    if !(poisson_ratio > -1.0 && poisson_ratio < 1.0) {
        return Err(OracleError::Domain(format!(
            "Poisson ratio {poisson_ratio} outside (-1, 1)"
        )));
    }
    if youngs_modulus <= 0.0 || thickness <= 0.0 || width <= 0.0 {
        return Err(OracleError::Domain(
            "modulus, thickness and width must be positive".into(),
        ));
    }

    let mut cx = Ctx::new()?;
    let e = cx.num(youngs_modulus);
    let nu = cx.num(poisson_ratio);
    let t = cx.num(thickness);
    let w = cx.num(width);
    // The f64 nearest pi stands for the exactly flat sheet.
    let angle = if fold_angle == std::f64::consts::PI {
        cx.cc.pi(PRECISION, RM)
    } else {
        cx.num(fold_angle)
    };
    let half = cx.div(&angle, &cx.num(2.0));
    let s = cx.sin(&half)?;
    let c = cx.cos(&half)?;
    let one = cx.num(1.0);

    let s2 = cx.mul(&s, &s);
    let c2 = cx.mul(&c, &c);
    let t2 = cx.mul(&t, &t);
    let w2 = cx.mul(&w, &w);
    let aspect2 = cx.div(&w2, &t2);
    let one_minus_nu2 = cx.sub(&one, &cx.mul(&nu, &nu));

    // E_cx = E (ν² - 2ν - 1) / [ (3ν⁴ + 2ν³ - ν - 3) s + (-ν⁴ + 2ν³ + 4ν² - 2ν - 3) (W/t)² c / s ]
    let num_cx = cx.poly(&[-1.0, -2.0, 1.0], &nu);
    let p_s = cx.poly(&[-3.0, -1.0, 0.0, 2.0, 3.0], &nu);
    let p_c = cx.poly(&[-3.0, -2.0, 4.0, 2.0, -1.0], &nu);
    let den_cx = cx.add(
        &cx.mul(&p_s, &s),
        &cx.div(&cx.mul(&cx.mul(&p_c, &aspect2), &c), &s),
    );
    let e_cx = cx.mul(&e, &cx.div(&num_cx, &den_cx));

    // E_cy = E (3 - ν) / (4 (1 - ν) s)
    let e_cy = cx.div(
        &cx.mul(&e, &cx.sub(&cx.num(3.0), &nu)),
        &cx.mul(&cx.num(4.0), &cx.mul(&cx.sub(&one, &nu), &s)),
    );

    // E_bx = E [2 W² c² s + t² (1-ν²) s²] / [2 (1-ν²) (W² c² + t² s²)]
    let w2c2 = cx.mul(&w2, &c2);
    let t2s2 = cx.mul(&t2, &s2);
    let num_bx = cx.add(
        &cx.mul(&cx.num(2.0), &cx.mul(&w2c2, &s)),
        &cx.mul(&one_minus_nu2, &t2s2),
    );
    let den_bx = cx.mul(&cx.mul(&cx.num(2.0), &one_minus_nu2), &cx.add(&w2c2, &t2s2));
    let e_bx = cx.mul(&e, &cx.div(&num_bx, &den_bx));

    // E_by = E [t² (1-ν²) s² + W² c²] / [t² (1-ν²) s]
    let t2_eff = cx.mul(&t2, &one_minus_nu2);
    let e_by = cx.mul(
        &e,
        &cx.div(&cx.add(&cx.mul(&t2_eff, &s2), &w2c2), &cx.mul(&t2_eff, &s)),
    );

    Ok(ReferenceModuli {
        e_cx: cx.to_f64(&e_cx)?,
        e_cy: cx.to_f64(&e_cy)?,
        e_bx: cx.to_f64(&e_bx)?,
        e_by: cx.to_f64(&e_by)?,
    })
}
