//! Stieltjes constants `gamma_n`, eta constants `eta_n` (Laurent coefficients
//! of `-zeta'/zeta` about `s = 1`) and Keiper-Li constants `lambda_n`.

use rug::{Complex, Float};

use crate::error::{Error, Result};
use crate::logderiv::{keiper_li, z_modsq_keiper_li};
use crate::mp::{bits_for_digits, two_pow, zeta_u, PrecisionContext};
use crate::specfun::{zeta_minus_pole_series, zeta_series, zeta_shifted_series};

/// Route used to fill a [`ConstantsTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstantsSource {
    Jet,
    Determinant,
    Recurrence,
}

/// Route for the eta constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EtaMethod {
    /// Laurent coefficients of `-zeta'/zeta - 1/(s-1)`.
    Jet,
    /// Coffey's recurrence from the Stieltjes constants.
    Coffey,
    /// Cramer's rule on values of `zeta'/zeta` at `2..=k+1`.
    Determinant { k: usize },
}

/// Route for the approximants of the first ordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum T1Route {
    /// `Z_nt` assembled from Stieltjes constants, fed to the modulus-squared formula.
    Stieltjes,
    /// Exact modulus-squared sum from Keiper-Li constants.
    KeiperLi,
}

/// `gamma_0..=gamma_K`, `eta_0..=eta_K`, `lambda_1..=lambda_K`.
#[derive(Clone, Debug)]
pub struct ConstantsTable {
    pub gammas: Vec<Float>,
    pub etas: Vec<Float>,
    pub lambdas: Vec<Float>,
    pub source: ConstantsSource,
    pub ctx: PrecisionContext,
}

impl ConstantsTable {
    /// Determinant sources use matrices of size `k`, rounded up to a multiple of 4
    /// and at least `n_max + 1`.
    pub fn compute(n_max: usize, source: ConstantsSource, k: usize, ctx: &PrecisionContext) -> Result<Self> {
        let gammas = match source {
            ConstantsSource::Determinant => {
                let k = k.max(n_max + 1).div_ceil(4) * 4;
                (0..=n_max).map(|n| stieltjes_determinant(n, k, ctx)).collect::<Result<Vec<_>>>()?
            }
            _ => stieltjes_jet(n_max, ctx)?,
        };
        let etas = match source {
            ConstantsSource::Jet => eta_constants(n_max, EtaMethod::Jet, ctx)?,
            ConstantsSource::Recurrence => coffey_from(&gammas),
            ConstantsSource::Determinant => {
                let k = k.max(n_max + 1).div_ceil(4) * 4;
                eta_constants(n_max, EtaMethod::Determinant { k }, ctx)?
            }
        };
        let lambdas = if n_max == 0 { Vec::new() } else { keiper_li(n_max, ctx)? };
        Ok(ConstantsTable { gammas, etas, lambdas, source, ctx: *ctx })
    }
}

/// `gamma_n = (-1)^n n! c_n` with `c_n` the jet of `zeta(s) - 1/(s-1)` at `1`.
pub fn stieltjes_jet(n_max: usize, ctx: &PrecisionContext) -> Result<Vec<Float>> {
    let prec = ctx.bits();
    let s = zeta_minus_pole_series(n_max, ctx)?;
    let mut fact = rug::Integer::from(1);
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n > 0 {
            fact *= n as u32;
        }
        let mut g = Float::with_val(prec, s.coeff(n).real() * &fact);
        if n % 2 == 1 {
            g = -g;
        }
        out.push(g);
    }
    Ok(out)
}

/// The `k x k` system matrix with rows `(-i)^j / j!`, `i = 1..=k`, `j = 0..k`.
pub fn vandermonde_matrix(k: usize, prec: u32) -> Vec<Vec<Float>> {
    (1..=k)
        .map(|i| {
            let mut row = Vec::with_capacity(k);
            let mut v = Float::with_val(prec, 1);
            for j in 0..k {
                row.push(v.clone());
                v *= -(i as i64);
                v /= (j + 1) as u32;
            }
            row
        })
        .collect()
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant(mut a: Vec<Vec<Float>>) -> Float {
    let n = a.len();
    let prec = a.first().and_then(|r| r.first()).map_or(64, |x| x.prec());
    let mut det = Float::with_val(prec, 1);
    for c in 0..n {
        let p = (c..n)
            .max_by(|&x, &y| a[x][c].clone().abs().partial_cmp(&a[y][c].clone().abs()).unwrap())
            .unwrap();
        if a[p][c].is_zero() {
            return Float::new(prec);
        }
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let (top, rest) = a.split_at_mut(c + 1);
        let pivot = &top[c];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = Float::with_val(prec, &row[c] / &pivot[c]);
            for j in (c + 1)..n {
                let t = Float::with_val(prec, &f * &pivot[j]);
                row[j] -= t;
            }
        }
    }
    det
}

fn check_size(n: usize, k: usize) -> Result<()> {
    if k == 0 || k % 4 != 0 {
        return Err(Error::Domain(format!("matrix size must be a positive multiple of 4, got {k}")));
    }
    if n >= k {
        return Err(Error::Domain(format!("index {n} needs a matrix larger than {k}")));
    }
    Ok(())
}

fn determinant_prec(k: usize, ctx: &PrecisionContext) -> u32 {
    ctx.bits() + bits_for_digits(2 * k as u32)
}

fn replaced_column_det(n: usize, k: usize, rhs: Vec<Float>, prec: u32) -> Float {
    let mut a = vandermonde_matrix(k, prec);
    for (row, b) in a.iter_mut().zip(rhs) {
        row[n] = b;
    }
    determinant(a)
}

/// `gamma_n` as the determinant of the system matrix with column `n`
/// replaced by `zeta(i+1) - 1/i`. The system matrix has unit determinant
/// when `k` is a multiple of 4.
pub fn stieltjes_determinant(n: usize, k: usize, ctx: &PrecisionContext) -> Result<Float> {
    check_size(n, k)?;
    let prec = determinant_prec(k, ctx);
    let rhs = (1..=k)
        .map(|i| zeta_u(i as u32 + 1, prec) - Float::with_val(prec, 1) / i as u32)
        .map(|x| Float::with_val(prec, x))
        .collect();
    Ok(Float::with_val(ctx.bits(), replaced_column_det(n, k, rhs, prec)))
}

/// `det` of the `k x k` system matrix.
pub fn system_determinant(k: usize, ctx: &PrecisionContext) -> Float {
    let prec = determinant_prec(k, ctx);
    Float::with_val(ctx.bits(), determinant(vandermonde_matrix(k, prec)))
}

/// `eta_0..=eta_n_max` by the chosen route.
pub fn eta_constants(n_max: usize, method: EtaMethod, ctx: &PrecisionContext) -> Result<Vec<Float>> {
    match method {
        EtaMethod::Jet => {
            // (s-1) zeta(s) = F(x), -zeta'/zeta = 1/x - F'/F
            let f = zeta_shifted_series(&ctx.complex(1), n_max + 1, ctx)?;
            let l = f.log_normalized()?;
            Ok((0..=n_max)
                .map(|n| Float::with_val(ctx.bits(), l.coeff(n + 1).real() * (n as i64 + 1)) * -1i32)
                .map(|x| Float::with_val(ctx.bits(), x))
                .collect())
        }
        EtaMethod::Coffey => Ok(coffey_from(&stieltjes_jet(n_max, ctx)?)),
        EtaMethod::Determinant { k } => {
            check_size(n_max, k)?;
            let prec = determinant_prec(k, ctx);
            let wctx = PrecisionContext { digits: ctx.digits + 2 * k as u32, guard: ctx.guard };
            let mut rhs = Vec::with_capacity(k);
            for i in 1..=k {
                let z = zeta_series(&Complex::with_val(prec, i + 1), 1, &wctx)?;
                let ld = Complex::with_val(prec, z.coeff(1) / z.coeff(0));
                let recip = Float::with_val(prec, 1) / i as u32;
                rhs.push(Float::with_val(prec, -ld.real().clone() - recip));
            }
            let mut out = Vec::with_capacity(n_max + 1);
            let mut fact = rug::Integer::from(1);
            for n in 0..=n_max {
                if n > 0 {
                    fact *= n as u32;
                }
                let d = replaced_column_det(n, k, rhs.clone(), prec);
                let mut e = Float::with_val(ctx.bits(), d / &fact);
                if n % 2 == 1 {
                    e = -e;
                }
                out.push(e);
            }
            Ok(out)
        }
    }
}

/// `eta_n = (-1)^{n+1} [ (n+1)/n! gamma_n + sum_{k<n} (-1)^{k-1}/(n-k-1)! eta_k gamma_{n-k-1} ]`.
pub fn coffey_from(gammas: &[Float]) -> Vec<Float> {
    let Some(first) = gammas.first() else {
        return Vec::new();
    };
    let prec = first.prec();
    let mut fact = vec![rug::Integer::from(1)];
    for n in 1..gammas.len() {
        let f = rug::Integer::from(&fact[n - 1] * n as u32);
        fact.push(f);
    }
    let mut etas: Vec<Float> = Vec::with_capacity(gammas.len());
    for n in 0..gammas.len() {
        let mut acc = Float::with_val(prec, &gammas[n] * (n as u32 + 1));
        acc /= &fact[n];
        for k in 0..n {
            let mut t = Float::with_val(prec, &etas[k] * &gammas[n - k - 1]);
            t /= &fact[n - k - 1];
            if k % 2 == 0 {
                acc -= t;
            } else {
                acc += t;
            }
        }
        if n % 2 == 0 {
            acc = -acc;
        }
        etas.push(acc);
    }
    etas
}

/// `Z_nt(m) = 1 - (1 - 2^{-m}) zeta(m) + (-1)^m eta_{m-1}` for `m >= 2`.
pub fn z_nt_from_eta(m: usize, etas: &[Float]) -> Result<Float> {
    if m < 2 || etas.len() < m {
        return Err(Error::Domain(format!("need m >= 2 and eta_0..eta_{}", m.saturating_sub(1))));
    }
    let prec = etas[0].prec();
    let c = Float::with_val(prec, 1) - two_pow(-(m as i32), prec);
    let mut v = Float::with_val(prec, 1) - c * zeta_u(m as u32, prec);
    if m % 2 == 0 {
        v += &etas[m - 1];
    } else {
        v -= &etas[m - 1];
    }
    Ok(v)
}

/// `[S^{-1/m} - 1/4]^{1/2}`.
fn ordinate_from_modsq(s: &Float, m: usize) -> Result<Float> {
    let prec = s.prec();
    if *s <= 0 {
        return Err(Error::NoRoot);
    }
    let r = Float::with_val(prec, s.ln_ref()) / m as u32;
    let mut v = Float::with_val(prec, (-r).exp());
    v -= Float::with_val(prec, 0.25);
    if v < 0 {
        return Err(Error::NoRoot);
    }
    Ok(v.sqrt())
}

/// Order-`m` approximant of the first nontrivial ordinate.
pub fn t1_expansion_demo(m: usize, route: T1Route, ctx: &PrecisionContext) -> Result<Float> {
    if m < 1 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    let s = match route {
        T1Route::Stieltjes => {
            if m < 2 {
                return Err(Error::Domain("the Stieltjes route needs m >= 2".into()));
            }
            let etas = coffey_from(&stieltjes_jet(2 * m - 1, ctx)?);
            let a = z_nt_from_eta(m, &etas)?;
            let b = z_nt_from_eta(2 * m, &etas)?;
            Float::with_val(ctx.bits(), Float::with_val(ctx.bits(), &a * &a) - b) / 2u32
        }
        T1Route::KeiperLi => z_modsq_keiper_li(m, &keiper_li(m, ctx)?)?,
    };
    ordinate_from_modsq(&s, m)
}

/// Partial sum `(-1)^n/n! [ sum_{l<=k} Lambda(l) log^n(l)/l - log^{n+1}(k)/(n+1) ]`,
/// accurate to a couple of digits only.
pub fn eta_von_mangoldt_demo(n: u32, k_terms: usize, ctx: &PrecisionContext) -> Result<Float> {
    if k_terms < 2 {
        return Err(Error::Domain("need at least two terms".into()));
    }
    let mut composite = vec![false; k_terms + 1];
    let mut sum = 0f64;
    let mut comp = 0f64;
    for p in 2..=k_terms {
        if composite[p] {
            continue;
        }
        let mut q = p * p;
        while q <= k_terms {
            composite[q] = true;
            q += p;
        }
        let lp = (p as f64).ln();
        let mut pk = p;
        loop {
            let l = (pk as f64).ln();
            let term = lp * l.powi(n as i32) / pk as f64 - comp;
            let t = sum + term;
            comp = (t - sum) - term;
            sum = t;
            match pk.checked_mul(p) {
                Some(v) if v <= k_terms => pk = v,
                _ => break,
            }
        }
    }
    let lk = (k_terms as f64).ln();
    let mut v = sum - lk.powi(n as i32 + 1) / (n as f64 + 1.0);
    let fact: f64 = (1..=n).map(f64::from).product();
    v /= fact;
    if n % 2 == 1 {
        v = -v;
    }
    Ok(Float::with_val(ctx.bits(), v))
}
