use rug::{Complex, Float};

use crate::error::{Error, Result};
use crate::mp::{inv_root, log10_abs, PrecisionContext};
use crate::series::PowerSeries;
use crate::specfun::zeta_series;
use crate::Series;

/// `w`-jet of the branch `s(w)` of `zeta^{-1}` through `s(0) = -2`, by
/// Lagrange inversion of `zeta(-2 + y) = w`.
pub fn inverse_jet_at_zero(order: usize, ctx: &PrecisionContext) -> Result<Series> {
    let prec = ctx.bits();
    let zero = Complex::new(prec);
    let f = zeta_series(&ctx.complex(-2), order, ctx)?;
    // f(y) = a_1 y + a_2 y^2 + ...; h = y / f(y)
    let shifted: Vec<Complex> = f.coeffs()[1..].to_vec();
    let mut padded = shifted;
    padded.push(Complex::new(prec));
    let h = PowerSeries::new(zero.clone(), padded).truncate(order.saturating_sub(1)).recip()?;
    let mut coeffs = vec![Complex::new(prec); order + 1];
    coeffs[0] = ctx.complex(-2);
    let mut hp = PowerSeries::constant(zero.clone(), ctx.complex(1), order.saturating_sub(1));
    for n in 1..=order {
        hp = hp.mul(&h)?;
        coeffs[n] = Complex::with_val(prec, hp.coeff(n - 1) / n as u32);
    }
    Ok(PowerSeries::new(zero, coeffs))
}

/// `Z_j(m) = (1/(m-1)!) d^m/dw^m log[zeta^{-1}(w)/(w + 1/2)]` at 0 for
/// `m = 1..=m_max` (index `m - 1`).
pub fn zj_table(m_max: usize, ctx: &PrecisionContext) -> Result<Vec<Float>> {
    if m_max < 1 {
        return Err(Error::Domain("m_max must be at least 1".into()));
    }
    let prec = ctx.bits();
    let s = inverse_jet_at_zero(m_max, ctx)?;
    // 1/(w + 1/2) = 2 sum (-2w)^k
    let mut g = vec![Complex::new(prec); m_max + 1];
    let mut t = Float::with_val(prec, 2);
    for c in g.iter_mut() {
        *c = Complex::with_val(prec, &t);
        t *= -2i32;
    }
    let q = s.mul(&PowerSeries::new(Complex::new(prec), g))?;
    let l = q.log_normalized()?;
    Ok((1..=m_max).map(|m| Float::with_val(prec, l.coeff(m).real() * m as u32)).collect())
}

/// `j_1 ~ [m Z_j(m)]^{-1/m}` with `Z_j(m)` taken from the order-`m`
/// approximant `(w + 1/2) (sum I_n(m) w^n)^{-1/m}`, where
/// `m Z_j(m) = sum_n j_n^{-m} = -m [w^m] log sum I_n(m) w^n`.
pub fn j1_from_inverse(m: usize, ctx: &PrecisionContext) -> Result<Float> {
    if m < 1 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    let prec = ctx.bits();
    let coeffs = super::attractor::expansion_coeffs(m, ctx)?;
    let p = PowerSeries::new(Complex::new(prec), coeffs.iter().map(|c| Complex::with_val(prec, c)).collect());
    let l = p.log_normalized()?;
    let v = Complex::with_val(prec, l.coeff(m) * -(m as i64));
    let r = inv_root(&v, m as u32);
    Ok(Float::with_val(prec, r.real()))
}

/// The critical point `c` with `zeta'(c) = 0` between -4 and -2 and the
/// value `j_1 = zeta(c)`.
#[derive(Clone, Debug)]
pub struct J1Limit {
    pub c: Float,
    pub j1: Float,
}

pub fn j1_limit(ctx: &PrecisionContext) -> Result<J1Limit> {
    let prec = ctx.bits();
    let mut c = ctx.complex(-2.717_262_829_2);
    let target = -(ctx.digits as f64 + ctx.guard as f64 / 2.0);
    for _ in 0..200 {
        let j = zeta_series(&c, 2, ctx)?;
        // zeta'(c) = c1, zeta''(c) = 2 c2
        let d2 = Complex::with_val(prec, j.coeff(2) * 2u32);
        let step = Complex::with_val(prec, j.coeff(1) / &d2);
        c -= &step;
        if step.is_zero() || log10_abs(&step) < target {
            let v = zeta_series(&c, 0, ctx)?;
            return Ok(J1Limit { c: Float::with_val(prec, c.real()), j1: Float::with_val(prec, v.coeff(0).real()) });
        }
    }
    Err(Error::NoConvergence("Newton iteration for zeta'(c) = 0".into()))
}
