//! Euler-Maclaurin jets of the Hurwitz zeta function.
//!
//! With `z = N + a` and `s = c + x`,
//!
//! ```text
//! zeta(s, a) = sum_{n<N} (n+a)^{-s} + z^{-s} [ z/(s-1) + 1/2
//!              + sum_{j=1}^{K} B_{2j}/(2j)! (s)_{2j-1} z^{-(2j-1)} ] + R_K
//! ```
//!
//! Every piece is expanded as a jet in `x`. The cut `(N, K)` is chosen so
//! the remainder is below the target on the disk `|x| <= 1`, which by
//! Cauchy's estimate bounds the error of every coefficient.

use rayon::prelude::*;
use rug::{Complex, Float};

use crate::bernoulli::scaled_even_bernoulli;
use crate::error::{Error, Result};
use crate::mp::{bits_for_digits, PrecisionContext};
use crate::series::PowerSeries;
use crate::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct EmPlan {
    pub n: usize,
    pub k: usize,
}

const LOG10_2PI: f64 = 0.798_179_868_358_115;

/// Smallest-cost `(N, K)` keeping the remainder below `10^-target` for all
/// `s` with `|s| <= s_max` and `Re s >= sigma`.
pub(crate) fn em_plan(a: f64, s_max: f64, sigma: f64, target: f64, order: usize) -> EmPlan {
    let per_n = order as f64 + 40.0;
    let per_k = 2.0 * order as f64 + 10.0;
    let n_min = ((s_max / (2.0 * std::f64::consts::PI)).ceil() as usize + 2).max(2);
    let mut best: Option<(f64, EmPlan)> = None;
    let mut n = n_min;
    loop {
        let z = n as f64 + a;
        let lz = z.log10();
        // log10 of the first omitted term for K = 0 context, updated per K.
        let mut poch = s_max.max(1.0).log10();
        let mut found = None;
        let mut prev = f64::INFINITY;
        for k in 1..200_000usize {
            // (s)_{2k+1} grows by the two new factors.
            poch += (s_max + (2 * k - 1) as f64).log10() + (s_max + (2 * k) as f64).log10();
            let t = 0.302 - (2 * k + 2) as f64 * LOG10_2PI + poch
                - (sigma + (2 * k + 1) as f64) * lz
                + lz
                + ((s_max + 2.0 * k as f64 + 2.0) / (sigma + 2.0 * k as f64 + 1.0).max(1.0)).log10()
                + (s_max + 1.0).log10();
            if t <= -target {
                found = Some(k);
                break;
            }
            if t > prev && k > 4 {
                break;
            }
            prev = t;
        }
        if let Some(k) = found {
            let cost = n as f64 * per_n + k as f64 * per_k;
            if best.map_or(true, |(c, _)| cost < c) {
                best = Some((cost, EmPlan { n, k }));
            }
        }
        if let Some((c, _)) = best {
            if n as f64 * per_n > c {
                break;
            }
        }
        n = (n as f64 * 1.15).ceil() as usize + 1;
        if n > 50_000_000 {
            break;
        }
    }
    best.map(|(_, p)| p).expect("Euler-Maclaurin plan must exist")
}

fn abs_f64(c: &Complex) -> f64 {
    Float::with_val(53, c.abs_ref()).to_f64()
}

/// Jet of `sum_{n>=0} (n+a)^{-s}` about `s = c`, multiplied by `(s-1)` when
/// `pole_factor` is set.
pub(crate) fn hurwitz_jet(
    c: &Complex,
    a: &Float,
    order: usize,
    pole_factor: bool,
    ctx: &PrecisionContext,
) -> Result<Series> {
    if *a <= 0 {
        return Err(Error::Domain("Hurwitz parameter must be positive".into()));
    }
    let prec_out = ctx.bits();
    let target = (ctx.digits + ctx.guard) as f64;
    let radius = if order == 0 { 0.0 } else { 1.0 };
    let c_abs = abs_f64(c);
    let sigma = c.real().to_f64() - radius;
    let s_max = c_abs + radius;
    let a64 = a.to_f64();
    let plan = em_plan(a64, s_max, sigma, target, order);
    let z64 = plan.n as f64 + a64;
    let extra_digits = ((1.0 - sigma).max(0.0) + 1.0) * z64.log10() + 8.0;
    let prec = prec_out + bits_for_digits(extra_digits as u32) - 64 + 32;

    let c = Complex::with_val(prec, c);
    let a = Float::with_val(prec, a);
    let zero = Complex::new(prec);
    let m = order;

    // Direct sum in parallel chunks.
    let chunks: Vec<(usize, usize)> = {
        let nchunks = rayon::current_num_threads().max(1) * 2;
        let step = plan.n.div_ceil(nchunks).max(1);
        (0..plan.n).step_by(step).map(|lo| (lo, (lo + step).min(plan.n))).collect()
    };
    let partials: Vec<Vec<Complex>> = chunks
        .par_iter()
        .map(|&(lo, hi)| {
            let mut acc = vec![zero.clone(); m + 1];
            for n in lo..hi {
                let l = Float::with_val(prec, &a + n as u32).ln();
                let mut t = Complex::with_val(prec, &c * &l);
                t = -t;
                t.exp_mut();
                acc[0] += &t;
                let neg_l = -l;
                for (k, slot) in acc.iter_mut().enumerate().skip(1) {
                    t *= &neg_l;
                    t /= k as u32;
                    *slot += &t;
                }
            }
            acc
        })
        .collect();
    let mut direct = vec![zero.clone(); m + 1];
    for p in partials {
        for (d, v) in direct.iter_mut().zip(p) {
            *d += v;
        }
    }

    // z^{-s} = z^{-c} exp(-x log z)
    let z = Float::with_val(prec, &a + plan.n as u32);
    let lz = Float::with_val(prec, z.ln_ref());
    let mut e = Vec::with_capacity(m + 1);
    let mut t = Complex::with_val(prec, &c * &lz);
    t = -t;
    t.exp_mut();
    e.push(t.clone());
    for k in 1..=m {
        t *= -lz.clone();
        t /= k as u32;
        e.push(t.clone());
    }
    let center = c.clone();
    let e = PowerSeries::new(center.clone(), e);

    // G = 1/2 + sum_j B_{2j}/(2j)! (s)_{2j-1} z^{-(2j-1)}
    let beta = scaled_even_bernoulli(plan.k, prec);
    let z2 = Float::with_val(prec, &z * &z);
    let one = Complex::with_val(prec, 1);
    let mut poch = PowerSeries::new(center.clone(), {
        let mut v = vec![zero.clone(); m + 1];
        v[0] = Complex::with_val(prec, &c / &z);
        if m >= 1 {
            v[1] = Complex::with_val(prec, 1 / Float::with_val(prec, &z));
        }
        v
    });
    let mut g = vec![zero.clone(); m + 1];
    g[0] = Complex::with_val(prec, 0.5);
    for j in 1..=plan.k {
        let b = &beta[j - 1];
        for (gk, pk) in g.iter_mut().zip(poch.coeffs()) {
            *gk += Complex::with_val(prec, pk * b);
        }
        if j < plan.k {
            let s1 = Complex::with_val(prec, &c + (2 * j - 1) as u32);
            let s2 = Complex::with_val(prec, &c + (2 * j) as u32);
            poch = poch.mul_linear(&s1, &one).mul_linear(&s2, &one);
            let inv = Complex::with_val(prec, 1 / z2.clone());
            poch = poch.scale(&inv);
        }
    }
    let g = PowerSeries::new(center.clone(), g);

    let direct = PowerSeries::new(center.clone(), direct);
    let zc = Complex::with_val(prec, &z);
    let cm1 = Complex::with_val(prec, &c - 1u32);
    let out = if pole_factor {
        let inner = direct.add(&e.mul(&g)?)?;
        inner.mul_linear(&cm1, &one).add(&e.scale(&zc))?
    } else {
        if cm1.is_zero() {
            return Err(Error::Pole);
        }
        let lin = PowerSeries::new(center.clone(), {
            let mut v = vec![zero.clone(); m + 1];
            v[0] = cm1.clone();
            if m >= 1 {
                v[1] = one.clone();
            }
            v
        });
        let pole = PowerSeries::constant(center.clone(), zc, m).div(&lin)?;
        direct.add(&e.mul(&g.add(&pole)?)?)?
    };
    let coeffs = out.into_coeffs().into_iter().map(|v| Complex::with_val(prec_out, v)).collect();
    Ok(PowerSeries::new(Complex::with_val(prec_out, &center), coeffs))
}

/// `zeta(k, a)` for `k = 2..=kmax` (index `k - 2`), real `a > 0`.
pub(crate) fn hurwitz_integer_values(a: &Float, kmax: usize, ctx: &PrecisionContext) -> Vec<Float> {
    let prec_out = ctx.bits();
    let target = (ctx.digits + ctx.guard) as f64;
    let a64 = a.to_f64();
    // The tail bound is worst at one of the two ends.
    let p_lo = em_plan(a64, 2.0, 2.0, target, kmax);
    let p_hi = em_plan(a64, kmax as f64, kmax as f64, target, kmax);
    let plan = EmPlan { n: p_lo.n.max(p_hi.n), k: p_lo.k.max(p_hi.k) };
    let prec = prec_out + 32;
    let a = Float::with_val(prec, a);
    let count = kmax.saturating_sub(1);
    let zero = Float::new(prec);

    let chunks: Vec<(usize, usize)> = {
        let nchunks = rayon::current_num_threads().max(1) * 2;
        let step = plan.n.div_ceil(nchunks).max(1);
        (0..plan.n).step_by(step).map(|lo| (lo, (lo + step).min(plan.n))).collect()
    };
    let partials: Vec<Vec<Float>> = chunks
        .par_iter()
        .map(|&(lo, hi)| {
            let mut acc = vec![zero.clone(); count];
            for n in lo..hi {
                let inv = Float::with_val(prec, 1 / Float::with_val(prec, &a + n as u32));
                let mut p = Float::with_val(prec, &inv * &inv);
                for slot in acc.iter_mut() {
                    *slot += &p;
                    p *= &inv;
                }
            }
            acc
        })
        .collect();
    let mut out = vec![zero.clone(); count];
    for p in partials {
        for (o, v) in out.iter_mut().zip(p) {
            *o += v;
        }
    }
    let z = Float::with_val(prec, &a + plan.n as u32);
    let inv_z = Float::with_val(prec, 1 / z.clone());
    let inv_z2 = Float::with_val(prec, &inv_z * &inv_z);
    let beta = scaled_even_bernoulli(plan.k, prec);
    let mut zpow = Float::with_val(prec, &inv_z * &inv_z); // z^{-k} for k = 2
    for (idx, slot) in out.iter_mut().enumerate() {
        let k = idx + 2;
        // z^{1-k}/(k-1) + z^{-k}/2
        *slot += Float::with_val(prec, &zpow * &z) / (k as u32 - 1);
        *slot += Float::with_val(prec, &zpow / 2u32);
        // sum_j beta_j (k)_{2j-1} z^{-k-2j+1}
        let mut term = Float::with_val(prec, &zpow * &inv_z) * k as u32;
        for j in 1..=plan.k {
            *slot += Float::with_val(prec, &term * &beta[j - 1]);
            term *= (k + 2 * j - 1) as u32;
            term *= (k + 2 * j) as u32;
            term *= &inv_z2;
        }
        zpow *= &inv_z;
    }
    out.into_iter().map(|v| Float::with_val(prec_out, v)).collect()
}
