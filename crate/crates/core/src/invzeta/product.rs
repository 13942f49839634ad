use rayon::prelude::*;
use rug::{Complex, Float};
use serde::Serialize;

use super::attractor::AttractorTable;
use super::in_singular_strip;
use crate::error::{Error, Result};
use crate::mp::{log10_abs, root_branch, PrecisionContext};
use crate::specfun::{zeta, zeta_series};

/// A solution of `zeta(s) = w` on the `lambda`-th branch of the `m`-th root.
#[derive(Clone, Debug)]
pub struct BranchResult {
    pub s: Complex,
    pub lambda: u32,
    /// `E(w) = |zeta(s) - w|` recomputed at full precision.
    pub residual: Float,
    pub m: usize,
}

impl BranchResult {
    pub fn residual_log10(&self) -> f64 {
        log10_abs(&Complex::with_val(64, &self.residual))
    }
}

fn product_radicand(w: &Complex, table: &AttractorTable, prec: u32) -> Result<Complex> {
    let mut p = Complex::with_val(prec, 1);
    for j in &table.roots {
        let d = Complex::with_val(prec, w - j);
        if d.is_zero() {
            return Err(Error::Singularity);
        }
        p *= d;
    }
    Ok(p.recip())
}

/// `s = (w + 1/2) xroot(prod (w - j_n)^{-1}, m, lambda)` for the first
/// `lambda = 0, 1, ...` with `|zeta(s) - w| < threshold`.
pub fn izeta_product(w: &Complex, table: &AttractorTable, threshold: f64) -> Result<BranchResult> {
    let ctx = table.ctx();
    let prec = ctx.bits();
    let w = Complex::with_val(prec, w);
    let a = product_radicand(&w, table, prec)?;
    let u = Complex::with_val(prec, &w + 0.5f64);
    let coarse = PrecisionContext::new(PrecisionContext::MIN_DIGITS)?;
    let wc = Complex::with_val(coarse.bits(), &w);
    let mut best = f64::INFINITY;
    for lambda in 0..table.m as u32 {
        let s = Complex::with_val(prec, &u * root_branch(&a, table.m as u32, lambda));
        let sc = Complex::with_val(coarse.bits(), &s);
        let e = match zeta(&sc, &coarse) {
            Ok(z) => Complex::with_val(coarse.bits(), z - &wc).abs().real().to_f64(),
            Err(_) => f64::INFINITY,
        };
        best = best.min(e);
        if e < threshold {
            let z = zeta(&s, &ctx)?;
            let residual = Float::with_val(prec, Complex::with_val(prec, z - &w).abs_ref());
            return Ok(BranchResult { s, lambda, residual, m: table.m });
        }
    }
    Err(Error::BranchNotFound { best })
}

/// One point of an `E(w)` grid.
#[derive(Clone, Debug, Serialize)]
pub struct GridPoint {
    pub re: f64,
    pub im: f64,
    pub lambda: Option<u32>,
    /// `log10 E(w)`.
    pub log10_error: Option<f64>,
    pub in_strip: bool,
    pub failure: Option<String>,
}

/// `E(w)` over an `n x n` grid spanning the given ranges, computed on
/// `width` threads.
pub fn error_grid(
    re_range: (f64, f64),
    im_range: (f64, f64),
    n: usize,
    table: &AttractorTable,
    threshold: f64,
    width: usize,
) -> Result<Vec<GridPoint>> {
    if n < 1 {
        return Err(Error::Domain("grid needs at least one point per axis".into()));
    }
    let ctx = table.ctx();
    let step = |lo: f64, hi: f64, k: usize| if n == 1 { lo } else { lo + (hi - lo) * k as f64 / (n - 1) as f64 };
    let points: Vec<(f64, f64)> = (0..n)
        .flat_map(|i| (0..n).map(move |k| (i, k)))
        .map(|(i, k)| (step(re_range.0, re_range.1, k), step(im_range.0, im_range.1, i)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(width.max(1))
        .build()
        .map_err(|e| Error::Domain(e.to_string()))?;
    let out = pool.install(|| {
        points
            .par_iter()
            .map(|&(re, im)| {
                let w = Complex::with_val(ctx.bits(), (re, im));
                let in_strip = in_singular_strip(&w, &ctx);
                match izeta_product(&w, table, threshold) {
                    Ok(b) => GridPoint {
                        re,
                        im,
                        lambda: Some(b.lambda),
                        log10_error: Some(b.residual_log10()),
                        in_strip,
                        failure: None,
                    },
                    Err(e) => GridPoint { re, im, lambda: None, log10_error: None, in_strip, failure: Some(e.to_string()) },
                }
            })
            .collect()
    });
    Ok(out)
}

/// Both routes to `(zeta^{-1})'(w)`.
#[derive(Clone, Debug)]
pub struct DerivativeResult {
    /// `1 / zeta'(s)`.
    pub value: Complex,
    /// `s [1/(w + 1/2) - (1/m) sum 1/(w - j_n)]`.
    pub alternate: Complex,
    /// `log10` of the relative difference between the routes.
    pub agreement_log10: f64,
}

pub fn inverse_derivative(w: &Complex, table: &AttractorTable) -> Result<DerivativeResult> {
    let ctx = table.ctx();
    let prec = ctx.bits();
    let b = izeta_product(w, table, 1e-3)?;
    let j = zeta_series(&b.s, 1, &ctx)?;
    let d = j.coeff(1);
    if log10_abs(d) < -(ctx.digits as f64) / 2.0 {
        return Err(Error::Singularity);
    }
    let value = Complex::with_val(prec, d.recip_ref());
    let mut bracket = Complex::with_val(prec, Complex::with_val(prec, w + 0.5f64).recip());
    let mut sum = Complex::new(prec);
    for jn in &table.roots {
        sum += Complex::with_val(prec, w - jn).recip();
    }
    bracket -= sum / table.m as u32;
    let alternate = Complex::with_val(prec, &b.s * bracket);
    let diff = Complex::with_val(prec, &value - &alternate);
    let agreement_log10 = log10_abs(&diff) - log10_abs(&value);
    Ok(DerivativeResult { value, alternate, agreement_log10 })
}
