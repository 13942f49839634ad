//! Recursive root extraction from generalized zeta tables and its
//! applications: sinc and Bessel zeros, trivial and nontrivial zeta zeros,
//! polynomials, function inverses and Golomb's prime recurrence.

use std::sync::Arc;

use rug::ops::Pow;
use rug::Assign;
use rug::{Complex, Float};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::logderiv::{log_derivative_zeta, z1_table, z_modsq_asymptotic, z_nt_table, GenZetaTable};
use crate::mp::{
    decimal_places, digits_for_bits, format_complex, inv_root, log10_abs, pi, two_pow, zeta_real,
    PrecisionContext,
};
use crate::series::PowerSeries;
use crate::specfun::{
    bessel_j_series, hurwitz_zeta, zeta_series, FunctionSpec, Parity, TableMeaning,
};
use crate::Series;

/// Map from the extracted `x = R^{-1/m}` to the reported root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RootTransform {
    Plain,
    /// `-x`, for the trivial zeros.
    Negate,
    /// `t = (x - 1/4)^{1/2}`, for ordinates from `|rho|^2` sums.
    ModulusToImaginary,
}

impl RootTransform {
    pub fn forward(&self, x: &Complex) -> Complex {
        let prec = x.prec().0;
        match self {
            RootTransform::Plain => x.clone(),
            RootTransform::Negate => Complex::with_val(prec, -x),
            RootTransform::ModulusToImaginary => Complex::with_val(prec, x - 0.25f64).sqrt(),
        }
    }

    /// The quantity whose `-m`-th power appears in the table.
    pub fn raw(&self, r: &Complex) -> Complex {
        let prec = r.prec().0;
        match self {
            RootTransform::Plain => r.clone(),
            RootTransform::Negate => Complex::with_val(prec, -r),
            RootTransform::ModulusToImaginary => Complex::with_val(prec, r * r) + 0.25f64,
        }
    }

    fn expects_real(&self) -> bool {
        !matches!(self, RootTransform::Plain)
    }
}

#[derive(Clone, Debug)]
pub struct RootEstimate {
    pub value: Complex,
    /// `R^{-1/m}` before the transform.
    pub raw: Complex,
    /// Table index used.
    pub order: usize,
    /// `log10` of an error estimate, when one is available.
    pub error_log10: Option<f64>,
    /// Whether the deflation value was snapped to the nearest integer.
    pub rounded: bool,
}

impl RootEstimate {
    fn new(value: Complex, raw: Complex, order: usize) -> Self {
        RootEstimate { value, raw, order, error_log10: None, rounded: false }
    }

    /// Decimal places of agreement with the estimate's own error bound.
    pub fn reported_digits(&self) -> Option<f64> {
        self.error_log10.map(|e| -e)
    }
}

/// Roots in extraction (dominance) order with the values used to deflate.
#[derive(Clone, Debug, Default)]
pub struct RootList {
    pub roots: Vec<RootEstimate>,
    pub deflation: Vec<Complex>,
}

/// Factor 2 for raw tables of even functions: each `+/-` pair counted once.
fn pair_factor(table: &GenZetaTable) -> u32 {
    if table.parity == Parity::Even && table.meaning == TableMeaning::ZerosMinusPoles {
        2
    } else {
        1
    }
}

fn radicand(table: &GenZetaTable, order: usize, known_raw: &[Complex], corrections: &[Complex]) -> Result<Complex> {
    let z = table.value(order)?;
    let prec = z.prec().0;
    let mut r = Complex::with_val(prec, z / pair_factor(table));
    for k in known_raw.iter().chain(corrections) {
        let p = Complex::with_val(prec, k.pow(-(order as i32)));
        r -= p;
    }
    Ok(r)
}

fn finish(
    r: Complex,
    order: usize,
    transform: RootTransform,
    expect_real: bool,
    index: usize,
) -> Result<RootEstimate> {
    if r.is_zero() {
        return Err(Error::NoRoot);
    }
    let mut r = r;
    if expect_real {
        let prec = r.prec().0;
        let tol = -(digits_for_bits(prec) / 2.0);
        let rel_im = log10_abs(&Complex::with_val(prec, r.imag())) - log10_abs(&r);
        if rel_im <= tol {
            // a real radicand: take the branch cut from above
            r.mut_imag().assign(0);
        }
        let x = inv_root(&r, order as u32);
        if *r.real() <= 0 || rel_im > tol {
            return Err(Error::DominanceViolated { index, raw: format_complex(&x, 30) });
        }
    }
    let x = inv_root(&r, order as u32);
    let value = transform.forward(&x);
    Ok(RootEstimate::new(value, x, order))
}

/// `transform(Z(order)^{-1/order})`.
pub fn extract_principal(table: &GenZetaTable, order: usize, transform: RootTransform) -> Result<RootEstimate> {
    let r = radicand(table, order, &[], &[])?;
    let real = transform.expects_real() || table.parity == Parity::Even;
    finish(r, order, transform, real, 1)
}

/// `transform((Z(order) - sum raw(known)^{-order})^{-1/order})`; `known`
/// holds reported roots.
pub fn extract_next(
    table: &GenZetaTable,
    known: &[Complex],
    order: usize,
    transform: RootTransform,
) -> Result<RootEstimate> {
    extract_with_corrections(table, known, &[], order, transform)
}

/// As [`extract_next`], additionally subtracting `c^{-order}` for each raw
/// correction term `c`.
pub fn extract_with_corrections(
    table: &GenZetaTable,
    known: &[Complex],
    corrections: &[Complex],
    order: usize,
    transform: RootTransform,
) -> Result<RootEstimate> {
    let raw: Vec<Complex> = known.iter().map(|k| transform.raw(k)).collect();
    let r = radicand(table, order, &raw, corrections)?;
    let real = transform.expects_real() || table.parity == Parity::Even;
    finish(r, order, transform, real, known.len() + 1)
}

/// Zero `n` of `sin(pi s)/(pi s)` from the jet of order `2m`, deflating the
/// exact lower zeros.
pub fn sinc_zero(n: usize, m: usize, ctx: &PrecisionContext) -> Result<RootEstimate> {
    let table = log_derivative_zeta(&FunctionSpec::sinc(), 2 * m, ctx)?;
    let known: Vec<Complex> = (1..n).map(|k| ctx.complex(k as u32)).collect();
    extract_next(&table, &known, 2 * m, RootTransform::Plain)
}

/// Zero `n` of `J_nu` from the jet of order `2m`; `known` are the lower
/// zeros at high precision.
pub fn bessel_zero(nu: &Float, known: &[Complex], m: usize, ctx: &PrecisionContext) -> Result<RootEstimate> {
    let table = log_derivative_zeta(&FunctionSpec::bessel_j(nu.clone())?, 2 * m, ctx)?;
    extract_next(&table, known, 2 * m, RootTransform::Plain)
}

/// Trivial zero `rho_{t,n}` near `-2n` from the jet of `(s-1) zeta(s)` of
/// order `2m`, deflating `-2, ..., -2(n-1)` and the conjugate pairs
/// `1/2 +/- i t_k` of the supplied ordinates.
pub fn trivial_zero(n: usize, m: usize, corrections: &[Float], ctx: &PrecisionContext) -> Result<RootEstimate> {
    if n < 1 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let table = log_derivative_zeta(&FunctionSpec::riemann_zeta_shifted(), 2 * m, ctx)?;
    trivial_zero_from_table(&table, n, m, corrections)
}

pub fn trivial_zero_from_table(
    table: &GenZetaTable,
    n: usize,
    m: usize,
    corrections: &[Float],
) -> Result<RootEstimate> {
    let prec = table.ctx.bits();
    let known: Vec<Complex> = (1..n).map(|k| Complex::with_val(prec, -2 * k as i32)).collect();
    let mut corr = Vec::new();
    for t in corrections {
        corr.push(Complex::with_val(prec, (0.5f64, t)));
        corr.push(Complex::with_val(prec, (0.5f64, Float::with_val(prec, -t))));
    }
    let mut est = extract_with_corrections(table, &known, &corr, 2 * m, RootTransform::Negate)?;
    est.value = Complex::with_val(prec, est.value.real());
    Ok(est)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NontrivialMethod {
    /// `t` from `(1/2)(Z_nt(m)^2 - Z_nt(2m))`, assuming `sigma = 1/2`.
    ModsqAsymptotic,
    /// `t` from `Z_1(2m)` out of the `Xi(t)` jet.
    Z1Xi,
    /// `t` from `Z_1(2m)` via `log|zeta|` at `1/2` and `zeta(2m, 5/4)`.
    Z1Hurwitz,
}

#[derive(Clone, Debug)]
pub struct NontrivialEstimate {
    pub t: Float,
    /// `-log10 |t(m) - t(m+2)|`.
    pub stable_digits: f64,
}

/// Ordinate `t_n` of the `n`-th nontrivial zero; `known` holds
/// `t_1..t_{n-1}` at high precision.
pub fn nontrivial_zero(
    n: usize,
    m: usize,
    method: NontrivialMethod,
    known: &[Float],
    ctx: &PrecisionContext,
) -> Result<NontrivialEstimate> {
    if n < 1 || m < 1 {
        return Err(Error::Domain("n and m must be at least 1".into()));
    }
    if known.len() < n - 1 {
        return Err(Error::Domain(format!("need {} known ordinates", n - 1)));
    }
    let known = &known[..n - 1];
    let prec = ctx.bits();
    for k in known {
        if (k.prec() as f64) < prec as f64 * 0.99 {
            return Err(Error::Domain("known ordinates carry less precision than the context".into()));
        }
    }
    let m2 = m + 2;
    let estimates: Vec<Float> = match method {
        NontrivialMethod::ModsqAsymptotic => {
            let zt = z_nt_table(2 * m2, ctx)?;
            [m, m2]
                .iter()
                .map(|&mm| {
                    let mut r = z_modsq_asymptotic(mm, &zt)?;
                    for t in known {
                        let q = Float::with_val(prec, t * t) + 0.25f64;
                        r -= Complex::with_val(prec, q.pow(-(mm as i32)));
                    }
                    let x = inv_root(&r, mm as u32);
                    let t = RootTransform::ModulusToImaginary.forward(&x);
                    Ok(Float::with_val(prec, t.real()))
                })
                .collect::<Result<_>>()?
        }
        NontrivialMethod::Z1Xi => {
            let z1 = z1_table(2 * m2, ctx)?;
            let kc: Vec<Complex> = known.iter().map(|t| Complex::with_val(prec, t)).collect();
            [m, m2]
                .iter()
                .map(|&mm| {
                    let e = extract_next(&z1, &kc, 2 * mm, RootTransform::Plain)?;
                    Ok(Float::with_val(prec, e.value.real()))
                })
                .collect::<Result<_>>()?
        }
        NontrivialMethod::Z1Hurwitz => {
            let half = Complex::with_val(prec, 0.5);
            let zs = zeta_series(&half, 2 * m2, ctx)?;
            let l = zs.log_normalized()?;
            let a = Float::with_val(prec, 1.25);
            [m, m2]
                .iter()
                .map(|&mm| {
                    let k = 2 * mm;
                    // (log|zeta|)^{(2m)}(1/2)/(2m-1)! = 2m Re l_{2m}
                    let d = Float::with_val(prec, l.coeff(k).real() * k as u32);
                    let hz = hurwitz_zeta(&Complex::with_val(prec, k), &a, ctx)?;
                    let mut b = two_pow(k as i32, prec) - d;
                    b -= Float::with_val(prec, hz.real() * two_pow(-(k as i32), prec));
                    b /= 2u32;
                    if mm % 2 == 1 {
                        b = -b;
                    }
                    let mut r = Complex::with_val(prec, &b);
                    for t in known {
                        r -= Complex::with_val(prec, t.pow(-(k as i32)));
                    }
                    if *r.real() <= 0 {
                        return Err(Error::DominanceViolated {
                            index: known.len() + 1,
                            raw: format_complex(&inv_root(&r, k as u32), 30),
                        });
                    }
                    let x = inv_root(&r, k as u32);
                    Ok(Float::with_val(prec, x.real()))
                })
                .collect::<Result<_>>()?
        }
    };
    let a = Complex::with_val(prec, &estimates[0]);
    let b = Complex::with_val(prec, &estimates[1]);
    Ok(NontrivialEstimate { t: estimates[0].clone(), stable_digits: decimal_places(&a, &b) })
}

/// Ordinates `t_1..t_count` refined by Newton's method on `zeta(1/2 + i t)`
/// from starting values bootstrapped with the `Z_1` recurrence.
pub fn reference_zeros(count: usize, ctx: &PrecisionContext) -> Result<Vec<Float>> {
    let mb = 40;
    // t_n < 3n + 14 for small n; deflation cancels about 2m log10 t_n digits
    let cancel = (2 * mb) as f64 * (3.0 * count as f64 + 14.0).log10();
    let boot = PrecisionContext::new(cancel.ceil() as u32 + 40)?;
    let table = z1_table(2 * mb, &boot)?;
    let mut out: Vec<Float> = Vec::with_capacity(count);
    for _ in 0..count {
        let known: Vec<Complex> = out.iter().map(|t| Complex::with_val(boot.bits(), t)).collect();
        let e = extract_next(&table, &known, 2 * mb, RootTransform::Plain)?;
        let guess = Float::with_val(ctx.bits(), e.value.real());
        out.push(refine_critical_zero(&guess, ctx)?);
    }
    Ok(out)
}

/// Newton iteration `s <- s - zeta(s)/zeta'(s)` from `1/2 + i t0`.
pub fn refine_critical_zero(t0: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let prec = ctx.bits();
    let mut s = Complex::with_val(prec, (0.5f64, t0));
    let target = -(ctx.digits as f64 + ctx.guard as f64 / 2.0);
    let mut wctx = PrecisionContext::with_guard(ctx.digits.min(40), ctx.guard)?;
    for _ in 0..200 {
        let j = zeta_series(&s, 1, &wctx)?;
        let step = Complex::with_val(prec, j.coeff(0) / j.coeff(1));
        s -= &step;
        let l = log10_abs(&step);
        let have = wctx.digits as f64;
        if l < -(have * 0.45) && wctx.digits < ctx.digits {
            wctx = PrecisionContext::with_guard((wctx.digits * 2).min(ctx.digits), ctx.guard)?;
            continue;
        }
        if wctx.digits >= ctx.digits && l < target {
            return Ok(Float::with_val(prec, s.imag()));
        }
    }
    Err(Error::NoConvergence("Newton refinement of a critical-line zero".into()))
}

/// `sigma_1 = [ ((1/2) Z_nt(m)^2 - (1/2) Z_nt(2m))^{-1/m} - Z_1(2m)^{-1/m} ]^{1/2}`.
pub fn real_part_check(m: usize, ctx: &PrecisionContext) -> Result<Float> {
    if m < 2 {
        return Err(Error::Domain("m must be at least 2".into()));
    }
    let prec = ctx.bits();
    let zt = z_nt_table(2 * m, ctx)?;
    let z1 = z1_table(2 * m, ctx)?;
    let a = inv_root(&z_modsq_asymptotic(m, &zt)?, m as u32);
    let b = inv_root(z1.value(2 * m)?, m as u32);
    let d = Float::with_val(prec, a.real() - b.real());
    if d < 0 {
        return Err(Error::DominanceViolated { index: 1, raw: format!("sigma^2 = {}", d.to_f64()) });
    }
    Ok(d.sqrt())
}

/// Evaluate a polynomial with ascending coefficients and its derivative.
fn poly_eval(coeffs: &[Complex], x: &Complex) -> (Complex, Complex) {
    let prec = x.prec().0;
    let mut p = Complex::new(prec);
    let mut dp = Complex::new(prec);
    for c in coeffs.iter().rev() {
        dp *= x;
        dp += &p;
        p *= x;
        p += c;
    }
    (p, dp)
}

/// All roots of a polynomial with real, positive, well separated roots by
/// successive extraction at order `m`, snapping to integers when the
/// estimate is within its own error.
pub fn solve_polynomial(coeffs: &[Complex], m: usize, ctx: &PrecisionContext) -> Result<RootList> {
    let spec = FunctionSpec::polynomial(coeffs.to_vec())?;
    let degree = coeffs.len() - 1;
    let prec = ctx.bits();
    let table = log_derivative_zeta(&spec, m, ctx)?;
    let mut list = RootList::default();
    for idx in 0..degree {
        let est = extract_next(&table, &list.deflation, m, RootTransform::Plain)?;
        let x = est.value.clone();
        let violated = || Error::DominanceViolated { index: idx + 1, raw: format_complex(&x, 30) };
        let prev = extract_next(&table, &list.deflation, m - 1, RootTransform::Plain).map_err(|_| violated())?;
        let im = log10_abs(&Complex::with_val(prec, x.imag())) - log10_abs(&x);
        if im > -(ctx.digits as f64) / 2.0 {
            return Err(violated());
        }
        let stab = log10_abs(&Complex::with_val(prec, &x - &prev.value)) - log10_abs(&x);
        if stab > -1.0 {
            return Err(violated());
        }
        let stab = stab + log10_abs(&x);
        let (p, dp) = poly_eval(coeffs, &x);
        let newton = log10_abs(&p) - log10_abs(&dp);
        let err = stab.max(newton);
        let nearest = Float::with_val(prec, x.real().round_ref());
        let dist = log10_abs(&Complex::with_val(prec, x.real() - &nearest));
        let mut e = est;
        e.value = Complex::with_val(prec, x.real());
        e.error_log10 = Some(err);
        let defl = if dist <= err + std::f64::consts::LOG10_2 {
            e.rounded = true;
            Complex::with_val(prec, &nearest)
        } else {
            e.value.clone()
        };
        list.deflation.push(defl);
        list.roots.push(e);
    }
    Ok(list)
}

/// Functions inverted through the jet of `f(s) - w` about 0.
#[derive(Clone, Debug)]
pub enum InverseTarget {
    /// `(Gamma(s) - w) s`.
    Gamma,
    /// `J_nu(s) - w` for integer `nu >= 0`.
    BesselJ(u32),
    /// `cos(s) - w`.
    Cos,
    /// `s e^s - w`.
    LambertW,
    /// `(s - s^3) e^s - w`.
    CubicExp,
    /// `p(s) - w`, ascending coefficients.
    Poly(Vec<Complex>),
}

impl InverseTarget {
    pub fn spec(&self, w: &Complex) -> FunctionSpec {
        let w = w.clone();
        match self {
            InverseTarget::Gamma => FunctionSpec::gamma_shifted(w),
            InverseTarget::BesselJ(nu) => {
                let nu = *nu;
                let parity = if nu % 2 == 0 { Parity::Even } else { Parity::None };
                FunctionSpec::user_series(
                    "bessel_j_minus_w",
                    parity,
                    Arc::new(move |order, ctx| {
                        let prec = ctx.bits();
                        // J_nu(s) = (s/2)^nu / nu! * [J_nu(s)/s^nu normalised]
                        let base = bessel_j_series(&Complex::with_val(prec, nu), order);
                        let scale = Float::with_val(prec, rug::Integer::from(rug::Integer::factorial(nu)))
                            * two_pow(nu as i32, prec);
                        let mut c = vec![Complex::new(prec); order + 1];
                        for k in 0..=order {
                            if k + nu as usize <= order {
                                c[k + nu as usize] = Complex::with_val(prec, base.coeff(k) / &scale);
                            }
                        }
                        c[0] -= &w;
                        Ok(PowerSeries::new(Complex::new(prec), c))
                    }),
                )
            }
            InverseTarget::Cos => FunctionSpec::user_series(
                "cos_minus_w",
                Parity::Even,
                Arc::new(move |order, ctx| {
                    let prec = ctx.bits();
                    let mut c = vec![Complex::new(prec); order + 1];
                    let mut t = Float::with_val(prec, 1);
                    for k in (0..=order).step_by(2) {
                        if k > 0 {
                            t /= ((k - 1) * k) as u32;
                            t = -t;
                        }
                        c[k] = Complex::with_val(prec, &t);
                    }
                    c[0] -= &w;
                    Ok(PowerSeries::new(Complex::new(prec), c))
                }),
            ),
            InverseTarget::LambertW => FunctionSpec::user_series(
                "lambert_w",
                Parity::None,
                Arc::new(move |order, ctx| {
                    let prec = ctx.bits();
                    // s e^s = sum s^{k} / (k-1)!
                    let mut c = vec![Complex::new(prec); order + 1];
                    let mut f = Float::with_val(prec, 1);
                    for (k, slot) in c.iter_mut().enumerate().skip(1) {
                        if k > 1 {
                            f /= (k - 1) as u32;
                        }
                        *slot = Complex::with_val(prec, &f);
                    }
                    c[0] -= &w;
                    Ok(PowerSeries::new(Complex::new(prec), c))
                }),
            ),
            InverseTarget::CubicExp => FunctionSpec::user_series(
                "cubic_exp",
                Parity::None,
                Arc::new(move |order, ctx| {
                    let prec = ctx.bits();
                    let zero = Complex::new(prec);
                    let e = PowerSeries::variable(zero.clone(), order).exp();
                    let mut p = vec![zero.clone(); order + 1];
                    if order >= 1 {
                        p[1] = Complex::with_val(prec, 1);
                    }
                    if order >= 3 {
                        p[3] = Complex::with_val(prec, -1);
                    }
                    let mut c = PowerSeries::new(zero.clone(), p).mul(&e)?.into_coeffs();
                    c[0] -= &w;
                    Ok(PowerSeries::new(zero, c))
                }),
            ),
            InverseTarget::Poly(coeffs) => {
                let coeffs = coeffs.clone();
                FunctionSpec::user_series(
                    "poly_minus_w",
                    Parity::None,
                    Arc::new(move |order, ctx| {
                        let prec = ctx.bits();
                        let mut c = vec![Complex::new(prec); order + 1];
                        for (k, v) in coeffs.iter().enumerate().take(order + 1) {
                            c[k] = Complex::with_val(prec, v);
                        }
                        c[0] -= &w;
                        Ok(PowerSeries::new(Complex::new(prec), c))
                    }),
                )
            }
        }
    }

    /// Forward evaluation `f(s)`, used to check inverses.
    pub fn forward(&self, s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
        let prec = ctx.bits();
        Ok(match self {
            InverseTarget::Gamma => gamma_real(s, ctx)?,
            InverseTarget::BesselJ(nu) => {
                let spec = InverseTarget::BesselJ(*nu).spec(&Complex::new(prec));
                let j = spec.series(200, ctx)?;
                eval_series(&j, s)
            }
            InverseTarget::Cos => Complex::with_val(prec, s.cos_ref()),
            InverseTarget::LambertW => Complex::with_val(prec, s * Complex::with_val(prec, s.exp_ref())),
            InverseTarget::CubicExp => {
                let s3 = Complex::with_val(prec, s.pow(3u32));
                Complex::with_val(prec, (Complex::with_val(prec, s - s3)) * Complex::with_val(prec, s.exp_ref()))
            }
            InverseTarget::Poly(c) => poly_eval(c, s).0,
        })
    }
}

fn eval_series(j: &Series, s: &Complex) -> Complex {
    let prec = s.prec().0;
    let mut acc = Complex::new(prec);
    for c in j.coeffs().iter().rev() {
        acc *= s;
        acc += c;
    }
    acc
}

/// `Gamma(s)` for real `s` through MPFR.
fn gamma_real(s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let prec = ctx.bits();
    if !s.imag().is_zero() && log10_abs(&Complex::with_val(prec, s.imag())) > -(ctx.digits as f64) / 2.0 {
        return Err(Error::Domain("gamma forward check needs a real argument".into()));
    }
    Ok(Complex::with_val(prec, Float::with_val(prec, s.real().gamma_ref())))
}

/// Principal solution of `f(s) = w` from the jet of order `m`.
pub fn invert_function(target: &InverseTarget, w: &Complex, m: usize, ctx: &PrecisionContext) -> Result<Complex> {
    let spec = target.spec(w);
    let table = log_derivative_zeta(&spec, m, ctx)?;
    let est = extract_principal(&table, m, RootTransform::Plain)?;
    Ok(est.value)
}

/// First `count` primes from `p_{n+1} = (1 - Q_n(s)/zeta(s))^{-1/s}` with
/// `Q_n(s) = prod_{k<=n} (1 - p_k^{-s})^{-1}`.
pub fn golomb_primes(count: usize, s: &Float, ctx: &PrecisionContext) -> Result<Vec<u64>> {
    let mut primes: Vec<u64> = Vec::with_capacity(count);
    let s64 = s.to_f64();
    for _ in 0..count {
        let bound = primes.last().map_or(2.0, |&p| 2.0 * p as f64);
        let need = (s64 * bound.log10()).ceil() as u32 + 30;
        let wctx = if need > ctx.digits { ctx.raised(need - ctx.digits) } else { *ctx };
        let prec = wctx.bits();
        let sp = Float::with_val(prec, s);
        let z = zeta_real(&sp);
        let mut q = Float::with_val(prec, 1);
        for &p in &primes {
            let t = Float::with_val(prec, Float::with_val(prec, p).pow(-Float::with_val(prec, &sp)));
            q /= Float::with_val(prec, 1 - t);
        }
        let r = Float::with_val(prec, 1 - Float::with_val(prec, &q / &z));
        if r <= 0 {
            return Err(Error::Ambiguous(f64::INFINITY));
        }
        let e = Float::with_val(prec, -(Float::with_val(prec, 1) / &sp));
        let v = Float::with_val(prec, r.pow(&e));
        let nearest = Float::with_val(prec, v.round_ref());
        let dist = Float::with_val(53, &v - &nearest).abs().to_f64();
        if dist > 0.25 {
            return Err(Error::Ambiguous(dist));
        }
        primes.push(nearest.to_f64() as u64);
    }
    Ok(primes)
}

/// `pi / 2`, the principal zero of the cosine.
pub fn half_pi(ctx: &PrecisionContext) -> Float {
    pi(ctx.bits()) / 2u32
}
