//! Special-function jets and the catalogue of target functions.

mod zeta;

use std::fmt;
use std::sync::Arc;

use rug::{Complex, Float};

use crate::error::{Error, Result};
use crate::mp::{pi, PrecisionContext};
use crate::scalar::Scalar;
use crate::series::PowerSeries;
use crate::Series;

pub(crate) use zeta::hurwitz_integer_values;

/// Jet of `zeta(s)` about `center`.
pub fn zeta_series(center: &Complex, order: usize, ctx: &PrecisionContext) -> Result<Series> {
    zeta::hurwitz_jet(center, &ctx.real(1), order, false, ctx)
}

/// Jet of the entire function `(s - 1) zeta(s)` about `center`.
pub fn zeta_shifted_series(center: &Complex, order: usize, ctx: &PrecisionContext) -> Result<Series> {
    zeta::hurwitz_jet(center, &ctx.real(1), order, true, ctx)
}

/// Jet of `zeta(s) - 1/(s - 1)` about `s = 1`.
pub fn zeta_minus_pole_series(order: usize, ctx: &PrecisionContext) -> Result<Series> {
    let one = ctx.complex(1);
    let p = zeta::hurwitz_jet(&one, &ctx.real(1), order + 1, true, ctx)?;
    // ((s-1) zeta(s) - 1) / (s - 1)
    let coeffs = p.coeffs()[1..].to_vec();
    Ok(PowerSeries::new(one, coeffs))
}

pub fn zeta(s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    Ok(zeta_series(s, 0, ctx)?.coeff(0).clone())
}

pub fn hurwitz_zeta(s: &Complex, a: &Float, ctx: &PrecisionContext) -> Result<Complex> {
    Ok(zeta::hurwitz_jet(s, a, 0, false, ctx)?.coeff(0).clone())
}

pub fn hurwitz_zeta_series(center: &Complex, a: &Float, order: usize, ctx: &PrecisionContext) -> Result<Series> {
    zeta::hurwitz_jet(center, a, order, false, ctx)
}

/// `beta(s) = 4^{-s} (zeta(s, 1/4) - zeta(s, 3/4))`.
pub fn dirichlet_beta(s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let prec = ctx.bits();
    let q1 = hurwitz_zeta(s, &Float::with_val(prec, 0.25), ctx)?;
    let q3 = hurwitz_zeta(s, &Float::with_val(prec, 0.75), ctx)?;
    let four = Complex::with_val(prec, 4);
    let f = Complex::with_val(prec, -s);
    let scale = Complex::with_val(prec, rug::ops::Pow::pow(&four, &f));
    Ok(Complex::with_val(prec, (q1 - q3) * scale))
}

/// Jet of `log Gamma(s)` about a real `center > 0`.
pub fn log_gamma_series(center: &Float, order: usize, ctx: &PrecisionContext) -> Result<Series> {
    if *center <= 0 {
        return Err(Error::Domain("log-gamma center must be positive".into()));
    }
    let prec = ctx.bits();
    let a = Float::with_val(prec, center);
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Complex::with_val(prec, Float::with_val(prec, a.ln_gamma_ref())));
    if order >= 1 {
        coeffs.push(Complex::with_val(prec, Float::with_val(prec, a.digamma_ref())));
    }
    if order >= 2 {
        let hz = hurwitz_integer_values(&a, order, ctx);
        for k in 2..=order {
            let mut v = Float::with_val(prec, &hz[k - 2] / k as u32);
            if k % 2 == 1 {
                v = -v;
            }
            coeffs.push(Complex::with_val(prec, v));
        }
    }
    Ok(PowerSeries::new(Complex::with_val(prec, &a), coeffs))
}

/// `Gamma(1 + s/2) pi^{-s/2}` as a jet in `x = s - c0` for real `c0`.
fn gamma_pi_factor(c0: &Float, order: usize, ctx: &PrecisionContext) -> Result<Vec<Complex>> {
    let prec = ctx.bits();
    let a = Float::with_val(prec, c0 / 2u32) + 1u32;
    let lg = log_gamma_series(&a, order, ctx)?;
    let half = Complex::with_val(prec, 0.5);
    let mut l = lg.scale_variable(&half).into_coeffs();
    let lnpi = pi(prec).ln();
    l[0] -= Complex::with_val(prec, Float::with_val(prec, &lnpi * c0) / 2u32);
    if order >= 1 {
        l[1] -= Complex::with_val(prec, &lnpi / 2u32);
    }
    let center = Complex::with_val(prec, c0);
    Ok(PowerSeries::new(center, l).exp().into_coeffs())
}

/// Jet of `xi(s) = (s-1) zeta(s) pi^{-s/2} Gamma(1 + s/2)` about `s = 0`.
pub fn xi_series(order: usize, ctx: &PrecisionContext) -> Result<Series> {
    let prec = ctx.bits();
    let zero = Complex::new(prec);
    let z = zeta_shifted_series(&zero, order, ctx)?;
    let g = PowerSeries::new(zero.clone(), gamma_pi_factor(&Float::new(prec), order, ctx)?);
    z.mul(&g)
}

/// Jet of `Xi(t) = xi(1/2 + i t)` about `t = 0`.
pub fn big_xi_critical_series(order: usize, ctx: &PrecisionContext) -> Result<Series> {
    let prec = ctx.bits();
    let half = Float::with_val(prec, 0.5);
    let c = Complex::with_val(prec, &half);
    let z = zeta_shifted_series(&c, order, ctx)?;
    let g = PowerSeries::new(c.clone(), gamma_pi_factor(&half, order, ctx)?);
    let xi = z.mul(&g)?;
    let i = Complex::with_val(prec, (0, 1));
    Ok(xi.scale_variable(&i).with_center(Complex::new(prec)))
}

/// Jet of `J_nu(x) / x^nu` about 0, normalised to constant term 1:
/// `c_{2n} = (-1)^n / (4^n n! (nu+1)_n)`.
pub fn bessel_j_series<T: Scalar>(nu: &T, order: usize) -> PowerSeries<T> {
    let zero = nu.zero_like();
    let mut coeffs = vec![zero.clone(); order + 1];
    let mut c = nu.one_like();
    coeffs[0] = c.clone();
    let mut n = 1;
    while 2 * n <= order {
        let d = nu.from_i64_like(n as i64).add_ref(nu).mul_i64(-4 * n as i64);
        c = c.div_ref(&d);
        coeffs[2 * n] = c.clone();
        n += 1;
    }
    PowerSeries::new(zero, coeffs)
}

/// Jet of `sin(pi s) / (pi s)` about 0.
pub fn sinc_series(order: usize, ctx: &PrecisionContext) -> Series {
    let prec = ctx.bits();
    let p = pi(prec);
    let p2 = Float::with_val(prec, &p * &p);
    let mut coeffs = vec![Complex::new(prec); order + 1];
    let mut c = Float::with_val(prec, 1);
    coeffs[0] = Complex::with_val(prec, &c);
    let mut n = 1;
    while 2 * n <= order {
        c *= &p2;
        c /= ((2 * n) * (2 * n + 1)) as u32;
        c = -c;
        coeffs[2 * n] = Complex::with_val(prec, &c);
        n += 1;
    }
    PowerSeries::new(Complex::new(prec), coeffs)
}

/// Jet of a polynomial with ascending coefficients about 0.
pub fn poly_series<T: Scalar>(coeffs: &[T], order: usize) -> PowerSeries<T> {
    let zero = coeffs[0].zero_like();
    let mut c = vec![zero.clone(); order + 1];
    for (k, v) in coeffs.iter().enumerate().take(order + 1) {
        c[k] = v.clone();
    }
    PowerSeries::new(zero, c)
}

/// Symmetry of the zero set about the expansion center.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    /// Zeros come in `+/-` pairs.
    Even,
    None,
}

/// What the entries of a log-derivative table sum over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableMeaning {
    /// `sum rho^{-m}` over zeros minus poles of the target.
    ZerosMinusPoles,
    /// `sum rho^{-m}` over nontrivial zeta zeros (conjugate pairs included).
    NontrivialConjugatePairs,
    /// `sum |rho|^{-2m}` over zeros in the upper half plane.
    ModulusSquared,
    /// `sum t^{-m}` over positive ordinates / positive zeros only.
    PositiveZeros,
    /// Mean `(1/k) sum j^{-m}` over attractor singularities.
    SingularitiesMean,
}

pub type SeriesGenerator = Arc<dyn Fn(usize, &PrecisionContext) -> Result<Series> + Send + Sync>;

#[derive(Clone)]
pub enum FunctionKind {
    /// `(s - 1) zeta(s)` about 0.
    RiemannZetaShifted,
    /// `(zeta(s) - w)(s - 1)` about 0.
    ZetaMinusW(Complex),
    /// `xi(s)` about 0.
    Xi,
    /// `Xi(t)` about 0.
    BigXiCriticalLine,
    /// `J_nu(x) / x^nu` about 0.
    BesselJ(Float),
    /// `sin(pi s)/(pi s)` about 0.
    Sinc,
    /// Polynomial with ascending coefficients.
    Polynomial(Vec<Complex>),
    /// `(Gamma(s) - w) s = Gamma(1 + s) - w s` about 0.
    GammaShifted(Complex),
    UserSeries { name: String, generator: SeriesGenerator },
}

impl fmt::Debug for FunctionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionKind::RiemannZetaShifted => write!(f, "RiemannZetaShifted"),
            FunctionKind::ZetaMinusW(w) => write!(f, "ZetaMinusW({w})"),
            FunctionKind::Xi => write!(f, "Xi"),
            FunctionKind::BigXiCriticalLine => write!(f, "BigXiCriticalLine"),
            FunctionKind::BesselJ(nu) => write!(f, "BesselJ({nu})"),
            FunctionKind::Sinc => write!(f, "Sinc"),
            FunctionKind::Polynomial(c) => write!(f, "Polynomial(degree {})", c.len().saturating_sub(1)),
            FunctionKind::GammaShifted(w) => write!(f, "GammaShifted({w})"),
            FunctionKind::UserSeries { name, .. } => write!(f, "UserSeries({name})"),
        }
    }
}

/// A target function together with its expansion convention.
#[derive(Clone, Debug)]
pub struct FunctionSpec {
    pub kind: FunctionKind,
    pub parity: Parity,
}

impl FunctionSpec {
    pub fn riemann_zeta_shifted() -> Self {
        FunctionSpec { kind: FunctionKind::RiemannZetaShifted, parity: Parity::None }
    }
    pub fn zeta_minus_w(w: Complex) -> Self {
        FunctionSpec { kind: FunctionKind::ZetaMinusW(w), parity: Parity::None }
    }
    pub fn xi() -> Self {
        FunctionSpec { kind: FunctionKind::Xi, parity: Parity::None }
    }
    pub fn big_xi_critical_line() -> Self {
        FunctionSpec { kind: FunctionKind::BigXiCriticalLine, parity: Parity::Even }
    }
    pub fn bessel_j(nu: Float) -> Result<Self> {
        if nu <= -1 {
            return Err(Error::Domain("Bessel order must exceed -1".into()));
        }
        Ok(FunctionSpec { kind: FunctionKind::BesselJ(nu), parity: Parity::Even })
    }
    pub fn sinc() -> Self {
        FunctionSpec { kind: FunctionKind::Sinc, parity: Parity::Even }
    }
    pub fn polynomial(coeffs: Vec<Complex>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::Domain("polynomial must have degree >= 1".into()));
        }
        if coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(FunctionSpec { kind: FunctionKind::Polynomial(coeffs), parity: Parity::None })
    }
    pub fn gamma_shifted(w: Complex) -> Self {
        FunctionSpec { kind: FunctionKind::GammaShifted(w), parity: Parity::None }
    }
    pub fn user_series(name: &str, parity: Parity, generator: SeriesGenerator) -> Self {
        FunctionSpec { kind: FunctionKind::UserSeries { name: name.to_string(), generator }, parity }
    }

    /// Table meaning of the raw log-derivative sums.
    pub fn meaning(&self) -> TableMeaning {
        match self.kind {
            FunctionKind::Xi => TableMeaning::NontrivialConjugatePairs,
            FunctionKind::BigXiCriticalLine | FunctionKind::BesselJ(_) => TableMeaning::PositiveZeros,
            _ => TableMeaning::ZerosMinusPoles,
        }
    }

    /// Whether stored sums run over one member of each `+/-` pair.
    pub fn halved(&self) -> bool {
        self.meaning() == TableMeaning::PositiveZeros
    }

    pub fn name(&self) -> String {
        match &self.kind {
            FunctionKind::RiemannZetaShifted => "riemann_zeta_shifted".into(),
            FunctionKind::ZetaMinusW(_) => "zeta_minus_w".into(),
            FunctionKind::Xi => "xi".into(),
            FunctionKind::BigXiCriticalLine => "big_xi_critical_line".into(),
            FunctionKind::BesselJ(_) => "bessel_j".into(),
            FunctionKind::Sinc => "sinc".into(),
            FunctionKind::Polynomial(_) => "polynomial".into(),
            FunctionKind::GammaShifted(_) => "gamma_shifted".into(),
            FunctionKind::UserSeries { name, .. } => name.clone(),
        }
    }

    /// Jet of the target function about its center, to `order`.
    pub fn series(&self, order: usize, ctx: &PrecisionContext) -> Result<Series> {
        let prec = ctx.bits();
        let zero = Complex::new(prec);
        match &self.kind {
            FunctionKind::RiemannZetaShifted => zeta_shifted_series(&zero, order, ctx),
            FunctionKind::ZetaMinusW(w) => {
                let z = zeta_shifted_series(&zero, order, ctx)?;
                // subtract w (s - 1)
                let w = Complex::with_val(prec, w);
                let mut c = z.into_coeffs();
                c[0] += &w;
                if order >= 1 {
                    c[1] -= &w;
                }
                Ok(PowerSeries::new(zero, c))
            }
            FunctionKind::Xi => xi_series(order, ctx),
            FunctionKind::BigXiCriticalLine => big_xi_critical_series(order, ctx),
            FunctionKind::BesselJ(nu) => Ok(bessel_j_series(&Complex::with_val(prec, nu), order)),
            FunctionKind::Sinc => Ok(sinc_series(order, ctx)),
            FunctionKind::Polynomial(c) => {
                let c: Vec<Complex> = c.iter().map(|v| Complex::with_val(prec, v)).collect();
                Ok(poly_series(&c, order))
            }
            FunctionKind::GammaShifted(w) => {
                let lg = log_gamma_series(&Float::with_val(prec, 1), order, ctx)?;
                let g = lg.with_center(zero.clone()).exp();
                let mut c = g.into_coeffs();
                if order >= 1 {
                    c[1] -= Complex::with_val(prec, w);
                }
                Ok(PowerSeries::new(zero, c))
            }
            FunctionKind::UserSeries { generator, .. } => generator(order, ctx),
        }
    }
}
