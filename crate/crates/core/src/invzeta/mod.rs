//! The inverse Riemann zeta function: the limit formula, the expansion
//! coefficients `I_n(m)`, the attractor of branch singularities `j_n`,
//! the product formula with branch search, and the identities built on it.

mod attractor;
mod identities;
mod product;
mod singular;

pub use attractor::{attractor, expansion_coeffs, polyroots, AttractorTable};
pub use identities::{identity_suite, IdentityCheck, IdentityReport};
pub use product::{error_grid, inverse_derivative, izeta_product, BranchResult, DerivativeResult, GridPoint};
pub use singular::{j1_from_inverse, j1_limit, zj_table, J1Limit};

use rug::ops::Pow;
use rug::{Complex, Float};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mp::{inv_root, log10_abs, root_branch, PrecisionContext};
use crate::series::PowerSeries;
use crate::specfun::{zeta, zeta_series, zeta_shifted_series};
use crate::Series;

/// `j_1` to the digits needed for region tests.
pub const J1_APPROX: f64 = 0.009_159_890_119_903_462;

/// Sign applied to the principal `m`-th root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    Auto,
    Positive,
    Negative,
}

/// An inverse-zeta value with advisory warnings.
#[derive(Clone, Debug)]
pub struct InverseValue {
    pub s: Complex,
    pub warnings: Vec<String>,
}

fn is_real(w: &Complex, ctx: &PrecisionContext) -> bool {
    let im = Complex::with_val(64, w.imag());
    log10_abs(&im) < -(ctx.digits as f64) / 2.0
}

/// Whether `w` lies on the real segment `[j_1, 1]` where the principal
/// branch is unreliable.
pub fn in_singular_strip(w: &Complex, ctx: &PrecisionContext) -> bool {
    let re = w.real().to_f64();
    is_real(w, ctx) && (J1_APPROX..=1.0).contains(&re)
}

/// Negative for real `w` in `(-1/2, j_1)`, positive elsewhere.
pub fn auto_sign(w: &Complex, ctx: &PrecisionContext) -> Sign {
    let re = w.real().to_f64();
    if is_real(w, ctx) && re > -0.5 && re < J1_APPROX {
        Sign::Negative
    } else {
        Sign::Positive
    }
}

/// The limit formula `s_1 = +/- Z(m)^{-1/m}`, with `Z(m)` taken from the
/// jet of `(zeta(s) - w)(s - 1)` about 0. The `w`-independent jet of
/// `(s - 1) zeta(s)` is computed once.
#[derive(Clone, Debug)]
pub struct InverseLimit {
    pub m: usize,
    pub ctx: PrecisionContext,
    shifted: Series,
}

impl InverseLimit {
    pub fn new(m: usize, ctx: &PrecisionContext) -> Result<Self> {
        if m < 1 {
            return Err(Error::Domain("m must be at least 1".into()));
        }
        let zero = Complex::new(ctx.bits());
        Ok(InverseLimit { m, ctx: *ctx, shifted: zeta_shifted_series(&zero, m, ctx)? })
    }

    /// `Z(m)` for the zeros of `zeta(s) - w`.
    pub fn z(&self, w: &Complex) -> Result<Complex> {
        let prec = self.ctx.bits();
        let mut c = self.shifted.coeffs().to_vec();
        c[0] += w;
        c[1] -= w;
        let f = PowerSeries::new(Complex::new(prec), c);
        if f.constant_term_vanishes() {
            return Err(Error::ZeroConstantTerm);
        }
        let l = f.log_normalized()?;
        Ok(Complex::with_val(prec, l.coeff(self.m) * -(self.m as i64)))
    }

    pub fn eval(&self, w: &Complex, sign: Sign) -> Result<InverseValue> {
        let prec = self.ctx.bits();
        let mut warnings = Vec::new();
        if in_singular_strip(w, &self.ctx) {
            warnings.push(format!(
                "w = {} lies in the singular strip (j1, 1); the principal branch is unreliable here",
                w.real().to_f64()
            ));
        }
        let half = Complex::with_val(prec, 0.5);
        let dist = Complex::with_val(prec, w + &half);
        if log10_abs(&dist) < -(self.ctx.digits as f64) / 2.0 {
            // w = -1/2: average the two sides
            let delta = Float::with_val(prec, 10).pow(-(self.ctx.digits as i32) / 2);
            let mut acc = Complex::new(prec);
            for d in [delta.clone(), -delta] {
                let wd = Complex::with_val(prec, w + &d);
                let s = self.eval_direct(&wd, if sign == Sign::Auto { auto_sign(&wd, &self.ctx) } else { sign })?;
                acc += s;
            }
            warnings.push("w = -1/2 evaluated as the mean of w = -1/2 +/- 10^(-digits/2)".into());
            return Ok(InverseValue { s: acc / 2u32, warnings });
        }
        let sign = if sign == Sign::Auto { auto_sign(w, &self.ctx) } else { sign };
        Ok(InverseValue { s: self.eval_direct(w, sign)?, warnings })
    }

    fn eval_direct(&self, w: &Complex, sign: Sign) -> Result<Complex> {
        let z = self.z(w)?;
        if z.is_zero() {
            return Err(Error::NoRoot);
        }
        let s = inv_root(&z, self.m as u32);
        Ok(if sign == Sign::Negative { -s } else { s })
    }

    /// Second solution from `Z(m) - s_1^{-m}`, scanning the `m` branches
    /// of the root for the smallest residual `|zeta(s) - w|`; residuals above
    /// `10^-3` mean the deflated sum has no dominant term.
    pub fn branch2(&self, w: &Complex, s1: &Complex) -> Result<BranchResult> {
        let prec = self.ctx.bits();
        let mut r = self.z(w)?;
        r -= Complex::with_val(prec, s1.pow(-(self.m as i32)));
        if r.is_zero() {
            return Err(Error::NoRoot);
        }
        let inv = Complex::with_val(prec, r.recip_ref());
        let mut best: Option<BranchResult> = None;
        for lambda in 0..self.m as u32 {
            let s = root_branch(&inv, self.m as u32, lambda);
            let res = Complex::with_val(prec, zeta(&s, &self.ctx)? - w);
            let e = Float::with_val(prec, res.abs_ref());
            if best.as_ref().map_or(true, |b| e < b.residual) {
                best = Some(BranchResult { s, lambda, residual: e, m: self.m });
            }
        }
        let best = best.ok_or(Error::NoRoot)?;
        let e = best.residual_log10();
        if e > -3.0 {
            return Err(Error::BranchNotFound { best: 10f64.powf(e) });
        }
        Ok(best)
    }
}

/// `zeta^{-1}(w)` by the limit formula at order `m`.
pub fn izeta_limit(w: &Complex, m: usize, sign: Sign, ctx: &PrecisionContext) -> Result<InverseValue> {
    InverseLimit::new(m, ctx)?.eval(w, sign)
}

/// Second solution of `zeta(s) = w` given the first to high precision.
pub fn izeta_branch2(w: &Complex, s1: &Complex, m: usize, ctx: &PrecisionContext) -> Result<BranchResult> {
    InverseLimit::new(m, ctx)?.branch2(w, s1)
}

/// Newton refinement of a solution of `zeta(s) = w`.
pub fn newton_inverse(w: &Complex, s0: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let prec = ctx.bits();
    let mut s = Complex::with_val(prec, s0);
    let target = -(ctx.digits as f64 + ctx.guard as f64 / 2.0);
    for _ in 0..400 {
        let j = zeta_series(&s, 1, ctx)?;
        let f = Complex::with_val(prec, j.coeff(0) - w);
        if j.coeff(1).is_zero() {
            return Err(Error::Singularity);
        }
        let step = Complex::with_val(prec, &f / j.coeff(1));
        s -= &step;
        if log10_abs(&step) - log10_abs(&s).max(0.0) < target || step.is_zero() {
            return Ok(s);
        }
    }
    Err(Error::NoConvergence("Newton iteration for zeta(s) = w".into()))
}

/// `I_0(2)` and `I_1(2)` of the second-order approximation, from the jet.
pub fn second_order_coeffs(ctx: &PrecisionContext) -> Result<(Float, Float)> {
    let c = expansion_coeffs(2, ctx)?;
    Ok((c[0].clone(), c[1].clone()))
}

/// `+/- (w + 1/2) (w^2 + I_1(2) w + I_0(2))^{-1/2}`.
pub fn second_order_approx(w: &Complex, sign: Sign, ctx: &PrecisionContext) -> Result<Complex> {
    let prec = ctx.bits();
    let (i0, i1) = second_order_coeffs(ctx)?;
    let mut q = Complex::with_val(prec, w * w);
    q += Complex::with_val(prec, w * &i1);
    q += &i0;
    if log10_abs(&q) < -(ctx.digits as f64) / 2.0 {
        return Err(Error::Singularity);
    }
    let root = inv_root(&q, 2);
    let s = Complex::with_val(prec, w + 0.5f64) * root;
    let sign = if sign == Sign::Auto { auto_sign(w, ctx) } else { sign };
    Ok(if sign == Sign::Negative { -s } else { s })
}
