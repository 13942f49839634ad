use std::fmt::Write as _;
use std::path::Path;

use rug::{Complex, Float};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mp::{format_sig, log10_abs, parse_decimal_prec, PrecisionContext};
use crate::specfun::zeta_shifted_series;

/// Coefficients `I_0(m)..=I_m(m)` of `[zeta^{-1}(w)/(w + 1/2)]^{-m} ~ sum I_n(m) w^n`.
///
/// With `u = w + 1/2` and `g` the jet of `(x - 1) zeta(x)` at 0, the
/// log-derivative of `u (1 - x) + r(x)`, `r = (g_1 + 1/2) x + sum_{k>=2} g_k x^k`,
/// gives `u^m Z(m) = u^m - m sum_j (-1)^{j+1}/j [x^m] q^j u^{m-j}` with
/// `q = r/(1 - x)`; the result is re-expanded in `w`.
pub fn expansion_coeffs(m: usize, ctx: &PrecisionContext) -> Result<Vec<Float>> {
    if m < 1 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    let prec = ctx.bits();
    let g = zeta_shifted_series(&Complex::new(prec), m, ctx)?;
    let mut r: Vec<Float> = g.coeffs().iter().map(|c| Float::with_val(prec, c.real())).collect();
    r[0] = Float::new(prec);
    r[1] += 0.5f64;
    let mut q = vec![Float::new(prec); m + 1];
    let mut acc = Float::new(prec);
    for k in 0..=m {
        acc += &r[k];
        q[k] = acc.clone();
    }
    // c[k] is the coefficient of u^k
    let mut c = vec![Float::new(prec); m + 1];
    c[m] = Float::with_val(prec, 1);
    let mut pw = q.clone();
    for j in 1..=m {
        if j > 1 {
            pw = mul_trunc(&pw, &q, m);
        }
        let mut t = Float::with_val(prec, &pw[m] * m as u32);
        t /= j as u32;
        if j % 2 == 0 {
            c[m - j] += t;
        } else {
            c[m - j] -= t;
        }
    }
    // u = w + 1/2
    let mut out = vec![Float::new(prec); m + 1];
    for (k, ck) in c.iter().enumerate() {
        let mut half_pow = Float::with_val(prec, ck);
        for n in (0..=k).rev() {
            let b = rug::Integer::from(rug::Integer::binomial_u(k as u32, n as u32));
            out[n] += Float::with_val(prec, &half_pow * &b);
            half_pow /= 2u32;
        }
    }
    out[m] = Float::with_val(prec, 1);
    Ok(out)
}

fn mul_trunc(a: &[Float], b: &[Float], order: usize) -> Vec<Float> {
    let prec = a[0].prec();
    let mut out = vec![Float::new(prec); order + 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += Float::with_val(prec, ai * bj);
        }
    }
    out
}

fn horner(coeffs: &[Complex], z: &Complex) -> (Complex, Complex) {
    let prec = z.prec().0;
    let mut p = Complex::new(prec);
    let mut dp = Complex::new(prec);
    for c in coeffs.iter().rev() {
        dp *= z;
        dp += &p;
        p *= z;
        p += c;
    }
    (p, dp)
}

/// `log10 sum |a_k| |z|^k`, the scale of rounding errors in Horner's rule.
fn noise_log10(a: &[Complex], z: &Complex) -> f64 {
    let az = Float::with_val(64, z.abs_ref());
    let mut acc = Float::new(64);
    for c in a.iter().rev() {
        acc *= &az;
        acc += Float::with_val(64, c.abs_ref());
    }
    crate::mp::log10_float(&acc)
}

/// All roots of the polynomial with ascending `coeffs` by Aberth-Ehrlich
/// iteration at the coefficients' precision.
pub fn polyroots(coeffs: &[Complex]) -> Result<Vec<Complex>> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 || coeffs[n].is_zero() {
        return Err(Error::Domain("leading coefficient must be nonzero".into()));
    }
    let prec = coeffs[n].prec().0;
    let lead = coeffs[n].clone();
    let a: Vec<Complex> = coeffs.iter().map(|c| Complex::with_val(prec, c / &lead)).collect();
    // Fujiwara-type radius for the starting circle
    let mut radius = 0f64;
    for (k, c) in a.iter().enumerate().take(n) {
        let l = log10_abs(c);
        if l.is_finite() {
            radius = radius.max(10f64.powf(l / (n - k) as f64));
        }
    }
    let radius = (radius * 2.0).max(1e-3);
    let mut z: Vec<Complex> = (0..n)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex::with_val(prec, (radius * th.cos(), radius * th.sin()))
        })
        .collect();
    let digits = crate::mp::digits_for_bits(prec);
    let tol = -(digits - 8.0);
    let mut converged = vec![false; n];
    for _ in 0..2000 {
        let mut all = true;
        for k in 0..n {
            if converged[k] {
                continue;
            }
            let (p, dp) = horner(&a, &z[k]);
            // residual at the rounding-noise level of the evaluation
            let noise = noise_log10(&a, &z[k]) - digits + 4.0;
            if p.is_zero() || log10_abs(&p) < noise {
                converged[k] = true;
                continue;
            }
            let ratio = Complex::with_val(prec, &p / &dp);
            let mut sum = Complex::new(prec);
            for j in 0..n {
                if j != k {
                    let d = Complex::with_val(prec, &z[k] - &z[j]);
                    sum += d.recip();
                }
            }
            let denom = Complex::with_val(prec, 1 - Complex::with_val(prec, &ratio * &sum));
            let step = Complex::with_val(prec, ratio / denom);
            z[k] -= &step;
            let rel = log10_abs(&step) - log10_abs(&z[k]).max(0.0);
            if rel < tol {
                converged[k] = true;
            } else {
                all = false;
            }
        }
        if all {
            return Ok(z);
        }
    }
    let worst = z.iter().map(|r| log10_abs(&horner(&a, r).0)).fold(f64::NEG_INFINITY, f64::max);
    Err(Error::NoConvergence(format!("Aberth iteration stalled; worst log10 residual {worst:.1}")))
}

/// Roots `j_n` of `sum I_n(m) w^n`, real ones ascending, then conjugate
/// pairs by ascending `|Im|` with the negative imaginary part first.
#[derive(Clone, Debug)]
pub struct AttractorTable {
    pub m: usize,
    pub digits: u32,
    pub roots: Vec<Complex>,
    pub source_poly: Vec<Float>,
}

#[derive(Serialize, Deserialize)]
struct RootJson {
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    m: usize,
    digits: u32,
    roots: Vec<RootJson>,
}

const HEADER: &str = "# zetainv-attractor";

impl AttractorTable {
    pub fn ctx(&self) -> PrecisionContext {
        PrecisionContext::with_guard(self.digits, PrecisionContext::DEFAULT_GUARD).expect("digits validated on construction")
    }

    /// Number of real roots.
    pub fn real_count(&self) -> usize {
        self.roots.iter().filter(|r| r.imag().is_zero()).count()
    }

    /// Text form: a header line, then one root per line (`re` or `re im`).
    pub fn to_text(&self) -> String {
        let mut out = format!("{HEADER} m={} digits={}\n", self.m, self.digits);
        let sig = self.digits as usize;
        for r in &self.roots {
            if r.imag().is_zero() {
                let _ = writeln!(out, "{}", format_sig(r.real(), sig));
            } else {
                let _ = writeln!(out, "{} {}", format_sig(r.real(), sig), format_sig(r.imag(), sig));
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Format("empty table".into()))?;
        let rest = header
            .strip_prefix(HEADER)
            .ok_or_else(|| Error::Format(format!("bad header: {header}")))?;
        let mut m = None;
        let mut digits = None;
        for field in rest.split_whitespace() {
            if let Some(v) = field.strip_prefix("m=") {
                m = v.parse::<usize>().ok();
            } else if let Some(v) = field.strip_prefix("digits=") {
                digits = v.parse::<u32>().ok();
            }
        }
        let m = m.ok_or_else(|| Error::Format("header lacks m=".into()))?;
        let digits = digits.ok_or_else(|| Error::Format("header lacks digits=".into()))?;
        let ctx = PrecisionContext::new(digits)?;
        let prec = ctx.bits();
        let mut roots = Vec::with_capacity(m);
        for line in lines {
            if line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let root = match parts.as_slice() {
                [re] => Complex::with_val(prec, (parse_decimal_prec(re, prec)?, 0)),
                [re, im] => Complex::with_val(prec, (parse_decimal_prec(re, prec)?, parse_decimal_prec(im, prec)?)),
                _ => return Err(Error::Format(format!("bad root line: {line}"))),
            };
            roots.push(root);
        }
        if roots.len() != m {
            return Err(Error::Format(format!("header says m={m} but {} roots follow", roots.len())));
        }
        Ok(AttractorTable { m, digits, roots, source_poly: Vec::new() })
    }

    pub fn to_json(&self) -> String {
        let sig = self.digits as usize;
        let t = TableJson {
            m: self.m,
            digits: self.digits,
            roots: self
                .roots
                .iter()
                .map(|r| RootJson { re: format_sig(r.real(), sig), im: format_sig(r.imag(), sig) })
                .collect(),
        };
        serde_json::to_string_pretty(&t).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let t: TableJson = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let prec = PrecisionContext::new(t.digits)?.bits();
        let roots = t
            .roots
            .iter()
            .map(|r| Ok(Complex::with_val(prec, (parse_decimal_prec(&r.re, prec)?, parse_decimal_prec(&r.im, prec)?))))
            .collect::<Result<Vec<_>>>()?;
        if roots.len() != t.m {
            return Err(Error::Format("root count differs from m".into()));
        }
        Ok(AttractorTable { m: t.m, digits: t.digits, roots, source_poly: Vec::new() })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        if text.trim_start().starts_with('{') {
            Self::from_json(&text)
        } else {
            Self::from_text(&text)
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let is_json = path.extension().is_some_and(|e| e == "json");
        std::fs::write(path, if is_json { self.to_json() } else { self.to_text() })?;
        Ok(())
    }

    /// The table for `m = 50` shipped with the library (200 digits).
    pub fn bundled_m50() -> Self {
        Self::from_text(include_str!("../../data/jx_singularities_m50.txt")).expect("bundled table parses")
    }

    /// The table for `m = 10` shipped with the library (200 digits).
    pub fn bundled_m10() -> Self {
        Self::from_text(include_str!("../../data/jx_singularities_m10.txt")).expect("bundled table parses")
    }
}

fn canonical_order(roots: Vec<Complex>, digits: u32) -> Vec<Complex> {
    let prec = roots[0].prec().0;
    let tol = -(digits as f64) / 2.0;
    let mut real = Vec::new();
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for r in roots {
        let im = Complex::with_val(prec, r.imag());
        if log10_abs(&im) < tol {
            real.push(Complex::with_val(prec, r.real()));
        } else if r.imag().is_sign_negative() {
            lower.push(r);
        } else {
            upper.push(r);
        }
    }
    real.sort_by(|a, b| a.real().partial_cmp(b.real()).expect("finite roots"));
    lower.sort_by(|a, b| {
        let ia = Float::with_val(prec, a.imag().abs_ref());
        let ib = Float::with_val(prec, b.imag().abs_ref());
        ia.partial_cmp(&ib).expect("finite roots")
    });
    let mut out = real;
    for lo in lower {
        // symmetrise with the nearest upper-half partner
        let idx = upper
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let da = Complex::with_val(prec, *a - Complex::with_val(prec, lo.conj_ref()));
                let db = Complex::with_val(prec, *b - Complex::with_val(prec, lo.conj_ref()));
                log10_abs(&da).partial_cmp(&log10_abs(&db)).expect("finite")
            })
            .map(|(i, _)| i);
        let (re, im) = match idx {
            Some(i) => {
                let up = upper.remove(i);
                let re = Float::with_val(prec, lo.real() + up.real()) / 2u32;
                let im = Float::with_val(prec, up.imag() - lo.imag()) / 2u32;
                (re, im)
            }
            None => (lo.real().clone(), Float::with_val(prec, -lo.imag())),
        };
        out.push(Complex::with_val(prec, (&re, Float::with_val(prec, -&im))));
        out.push(Complex::with_val(prec, (&re, &im)));
    }
    out.extend(upper);
    out
}

/// Expansion coefficients, their roots at twice the working precision, and
/// the canonical ordering.
pub fn attractor(m: usize, ctx: &PrecisionContext) -> Result<AttractorTable> {
    if m < 2 || m % 2 == 1 {
        return Err(Error::Domain("attractor needs an even m >= 2".into()));
    }
    let work = PrecisionContext::with_guard(2 * ctx.digits, ctx.guard)?;
    let coeffs = expansion_coeffs(m, &work)?;
    let c: Vec<Complex> = coeffs.iter().map(|v| Complex::with_val(work.bits(), v)).collect();
    let roots = polyroots(&c)?;
    let roots = canonical_order(roots, work.digits);
    let prec = ctx.bits();
    let roots = roots.into_iter().map(|r| Complex::with_val(prec, r)).collect();
    let source_poly = coeffs.into_iter().map(|v| Float::with_val(prec, v)).collect();
    Ok(AttractorTable { m, digits: ctx.digits, roots, source_poly })
}
