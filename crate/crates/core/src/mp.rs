//! Multiprecision plumbing: precision contexts, decimal I/O and a few
//! constants, on top of MPFR/MPC through `rug`.

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type BigReal = Float;
pub type BigComplex = Complex;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Requested decimal digits plus guard digits used internally.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrecisionContext {
    pub digits: u32,
    pub guard: u32,
}

impl PrecisionContext {
    pub const MIN_DIGITS: u32 = 30;
    pub const DEFAULT_GUARD: u32 = 20;

    pub fn new(digits: u32) -> Result<Self> {
        Self::with_guard(digits, Self::DEFAULT_GUARD)
    }

    pub fn with_guard(digits: u32, guard: u32) -> Result<Self> {
        if digits < Self::MIN_DIGITS {
            return Err(Error::Domain(format!(
                "precision must be at least {} digits, got {digits}",
                Self::MIN_DIGITS
            )));
        }
        Ok(PrecisionContext { digits, guard })
    }

    /// Working precision in bits.
    pub fn bits(&self) -> u32 {
        bits_for_digits(self.digits + self.guard)
    }

    /// A context with `extra` more requested digits.
    pub fn raised(&self, extra: u32) -> Self {
        PrecisionContext { digits: self.digits + extra, guard: self.guard }
    }

    pub fn real<T>(&self, v: T) -> Float
    where
        Float: rug::Assign<T>,
    {
        Float::with_val(self.bits(), v)
    }

    pub fn complex<T>(&self, v: T) -> Complex
    where
        Complex: rug::Assign<T>,
    {
        Complex::with_val(self.bits(), v)
    }
}

pub fn bits_for_digits(digits: u32) -> u32 {
    (digits as f64 * LOG2_10).ceil() as u32 + 64
}

/// Number of decimal digits carried by a precision in bits.
pub fn digits_for_bits(bits: u32) -> f64 {
    bits as f64 / LOG2_10
}

pub fn parse_decimal(text: &str, ctx: &PrecisionContext) -> Result<Float> {
    parse_decimal_prec(text, ctx.bits())
}

pub fn parse_decimal_prec(text: &str, prec: u32) -> Result<Float> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse(text.to_string()));
    }
    match Float::parse(t) {
        Ok(p) => {
            let f = Float::with_val(prec, p);
            if f.is_finite() {
                Ok(f)
            } else {
                Err(Error::Parse(text.to_string()))
            }
        }
        Err(_) => Err(Error::Parse(text.to_string())),
    }
}

/// Parses `re`, `re,im`, `re im` or `re+imi`-free pairs into a complex value.
pub fn parse_complex(text: &str, ctx: &PrecisionContext) -> Result<Complex> {
    let parts: Vec<&str> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .collect();
    let prec = ctx.bits();
    match parts.as_slice() {
        [re] => Ok(Complex::with_val(prec, (parse_decimal_prec(re, prec)?, 0))),
        [re, im] => Ok(Complex::with_val(
            prec,
            (parse_decimal_prec(re, prec)?, parse_decimal_prec(im, prec)?),
        )),
        _ => Err(Error::Parse(text.to_string())),
    }
}

/// Plain positional decimal with `sig` significant digits.
pub fn format_sig(x: &Float, sig: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let (neg, digits, exp) = x.to_sign_string_exp(10, Some(sig.max(1)));
    let exp = exp.unwrap_or(0);
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if exp <= 0 {
        out.push_str("0.");
        for _ in 0..(-exp) {
            out.push('0');
        }
        out.push_str(&digits);
    } else {
        let e = exp as usize;
        if e >= digits.len() {
            out.push_str(&digits);
            for _ in digits.len()..e {
                out.push('0');
            }
        } else {
            out.push_str(&digits[..e]);
            out.push('.');
            out.push_str(&digits[e..]);
        }
    }
    out
}

/// Plain positional decimal with `places` digits after the point.
pub fn format_fixed(x: &Float, places: usize) -> String {
    if x.is_zero() {
        return format!("0.{}", "0".repeat(places));
    }
    let exp = x.get_exp().unwrap_or(0) as f64 * std::f64::consts::LOG10_2;
    let sig = (exp.ceil() as i64 + places as i64 + 2).max(1) as usize;
    let s = format_sig(x, sig);
    match s.find('.') {
        Some(p) => {
            let end = (p + 1 + places).min(s.len());
            s[..end].to_string()
        }
        None => s,
    }
}

pub fn format_complex(z: &Complex, sig: usize) -> String {
    let im = z.imag();
    if im.is_zero() {
        format_sig(z.real(), sig)
    } else {
        let re = format_sig(z.real(), sig);
        let ims = format_sig(&Float::with_val(im.prec(), im.abs_ref()), sig);
        let sign = if im.is_sign_negative() { '-' } else { '+' };
        format!("{re} {sign} {ims}i")
    }
}

/// `log10 |z|`, or negative infinity for zero.
pub fn log10_abs(z: &Complex) -> f64 {
    let a = Float::with_val(64, z.abs_ref());
    log10_float(&a)
}

pub fn log10_float(x: &Float) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let (m, e) = x.to_f64_exp();
    m.abs().log10() + e as f64 * std::f64::consts::LOG10_2
}

/// Number of correct decimal places of `a` relative to `b`, i.e.
/// `-log10 |a - b|`, capped by the working precision.
pub fn decimal_places(a: &Complex, b: &Complex) -> f64 {
    let prec = a.prec().0.min(b.prec().0);
    let d = Complex::with_val(prec, a - b);
    let l = log10_abs(&d);
    if l == f64::NEG_INFINITY {
        digits_for_bits(prec)
    } else {
        -l
    }
}

pub fn decimal_places_real(a: &Float, b: &Float) -> f64 {
    let prec = a.prec().min(b.prec());
    let d = Float::with_val(prec, a - b);
    let l = log10_float(&d);
    if l == f64::NEG_INFINITY {
        digits_for_bits(prec)
    } else {
        -l
    }
}

/// Significant digits of agreement, `-log10 |a-b|/|b|`.
pub fn significant_digits(a: &Complex, b: &Complex) -> f64 {
    decimal_places(a, b) + log10_abs(b)
}

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

pub fn euler_gamma(prec: u32) -> Float {
    Float::with_val(prec, Constant::Euler)
}

pub fn ln2(prec: u32) -> Float {
    Float::with_val(prec, Constant::Log2)
}

/// `log sqrt(2 pi)`.
pub fn log_sqrt_2pi(prec: u32) -> Float {
    let two_pi = pi(prec) * 2u32;
    two_pi.ln() / 2u32
}

/// Riemann zeta at a real argument (MPFR).
pub fn zeta_real(s: &Float) -> Float {
    Float::with_val(s.prec(), s.zeta_ref())
}

pub fn zeta_u(n: u32, prec: u32) -> Float {
    Float::with_val(prec, Float::zeta_u(n))
}

/// Principal `m`-th root with an extra branch rotation
/// `exp(2 pi i lambda / m)`.
pub fn root_branch(a: &Complex, m: u32, lambda: u32) -> Complex {
    let prec = a.prec().0;
    let inv = Float::with_val(prec, 1) / m;
    let p = Complex::with_val(prec, a.pow(&inv));
    if lambda == 0 {
        return p;
    }
    let angle = pi(prec) * 2u32 * lambda / m;
    let rot = Complex::with_val(prec, (Float::with_val(prec, angle.cos_ref()), Float::with_val(prec, angle.sin_ref())));
    p * rot
}

/// Principal `a^(-1/m)`.
pub fn inv_root(a: &Complex, m: u32) -> Complex {
    let prec = a.prec().0;
    let e = -(Float::with_val(prec, 1) / m);
    Complex::with_val(prec, a.pow(&e))
}

pub fn complex_pow_i(z: &Complex, n: i32) -> Complex {
    Complex::with_val(z.prec().0, z.pow(n))
}

pub fn real_pow_i(x: &Float, n: i32) -> Float {
    Float::with_val(x.prec(), x.pow(n))
}

pub fn float_pow(x: &Float, p: &Float) -> Float {
    Float::with_val(x.prec(), x.pow(p))
}

pub(crate) fn two_pow(n: i32, prec: u32) -> Float {
    Float::with_val(prec, 2).pow(n)
}
