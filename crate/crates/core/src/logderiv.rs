//! Generalized zeta values from log-derivatives of jets,
//! `Z(m) = sum rho^{-m} - sum p^{-m} = -m [x^m] log f`.

use rug::{Complex, Float};

use crate::error::{Error, Result};
use crate::mp::{two_pow, zeta_u, PrecisionContext};
use crate::scalar::Scalar;
use crate::specfun::{dirichlet_beta, zeta_series, FunctionSpec, Parity, TableMeaning};
use crate::Series;

/// `Z(m)` for `m = 1..=m_max`.
#[derive(Clone, Debug)]
pub struct GenZetaTable {
    pub meaning: TableMeaning,
    pub parity: Parity,
    pub ctx: PrecisionContext,
    values: Vec<Complex>,
}

impl GenZetaTable {
    pub fn new(meaning: TableMeaning, parity: Parity, ctx: PrecisionContext, values: Vec<Complex>) -> Self {
        GenZetaTable { meaning, parity, ctx, values }
    }

    pub fn m_max(&self) -> usize {
        self.values.len()
    }

    /// `Z(m)` for `1 <= m <= m_max`.
    pub fn get(&self, m: usize) -> Option<&Complex> {
        if m == 0 {
            None
        } else {
            self.values.get(m - 1)
        }
    }

    pub fn value(&self, m: usize) -> Result<&Complex> {
        self.get(m).ok_or_else(|| Error::Domain(format!("table holds m <= {}, asked {m}", self.m_max())))
    }
}

/// `-m [x^m] log f` for `m = 1..=order`, halved when requested.
pub fn log_derivative_of_series<T: Scalar>(series: &crate::PowerSeries<T>, halve: bool) -> Result<Vec<T>> {
    let l = series.log_normalized()?;
    Ok((1..=series.order())
        .map(|m| {
            let v = l.coeff(m).mul_i64(-(m as i64));
            if halve {
                v.div_i64(2)
            } else {
                v
            }
        })
        .collect())
}

/// Log-derivative table of a target function.
pub fn log_derivative_zeta(spec: &FunctionSpec, m_max: usize, ctx: &PrecisionContext) -> Result<GenZetaTable> {
    if m_max < 1 {
        return Err(Error::Domain("m_max must be at least 1".into()));
    }
    let s = spec.series(m_max, ctx)?;
    let values = log_derivative_of_series(&s, spec.halved())?;
    Ok(GenZetaTable::new(spec.meaning(), spec.parity, *ctx, values))
}

/// `Z_nt(m)` over nontrivial zeros from the jet of `xi` (all `m <= m_max`).
pub fn z_nt_table(m_max: usize, ctx: &PrecisionContext) -> Result<GenZetaTable> {
    log_derivative_zeta(&FunctionSpec::xi(), m_max, ctx)
}

/// `Z_1(m)` over positive ordinates from the jet of `Xi(t)`.
pub fn z1_table(m_max: usize, ctx: &PrecisionContext) -> Result<GenZetaTable> {
    log_derivative_zeta(&FunctionSpec::big_xi_critical_line(), m_max, ctx)
}

/// `Z_nt(m) = 1 - (-1)^m 2^{-m} zeta(m) - (log|zeta|)^{(m)}(0)/(m-1)!`.
pub fn z_nt_closed_form(m: usize, ctx: &PrecisionContext) -> Result<Float> {
    if m < 2 {
        return Err(Error::Domain("closed form needs m >= 2".into()));
    }
    let prec = ctx.bits();
    let zs = zeta_series(&Complex::new(prec), m, ctx)?;
    let l = zs.log_normalized()?;
    let mut c1 = Float::with_val(prec, zeta_u(m as u32, prec) * two_pow(-(m as i32), prec));
    if m % 2 == 0 {
        c1 = -c1;
    }
    c1 += 1u32;
    let deriv = Float::with_val(prec, l.coeff(m).real() * m as u32);
    Ok(c1 - deriv)
}

/// `(1/2)(Z_nt(m)^2 - Z_nt(2m))`, the modulus-squared sum up to cross terms.
pub fn z_modsq_asymptotic(m: usize, z_nt: &GenZetaTable) -> Result<Complex> {
    let a = z_nt.value(m)?;
    let b = z_nt.value(2 * m)?;
    let prec = a.prec().0;
    let sq = Complex::with_val(prec, a * a);
    Ok(Complex::with_val(prec, sq - b) / 2u32)
}

/// `sum_{n=1}^{m} C(2m-n-1, m-1) Z_nt(n)`.
pub fn z_modsq_bologna(m: usize, z_nt: &GenZetaTable) -> Result<Complex> {
    if m < 1 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    let prec = z_nt.ctx.bits();
    let mut acc = Complex::new(prec);
    for n in 1..=m {
        let c = rug::Integer::from(rug::Integer::binomial_u((2 * m - n - 1) as u32, (m - 1) as u32));
        acc += Complex::with_val(prec, z_nt.value(n)? * &c);
    }
    Ok(acc)
}

/// Keiper-Li coefficients `lambda_1..=lambda_n_max` (index `n - 1`),
/// `lambda_n = n [x^n] (1+x)^{n-1} log xi(1 - x)`.
pub fn keiper_li(n_max: usize, ctx: &PrecisionContext) -> Result<Vec<Float>> {
    let prec = ctx.bits();
    let xi = crate::specfun::xi_series(n_max, ctx)?;
    let l = xi.log_normalized()?;
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut acc = Float::new(prec);
        for j in 1..=n {
            let c = rug::Integer::from(rug::Integer::binomial_u((n - 1) as u32, (n - j) as u32));
            let mut t = Float::with_val(prec, l.coeff(j).real() * &c);
            if j % 2 == 1 {
                t = -t;
            }
            acc += t;
        }
        out.push(acc * n as u32);
    }
    Ok(out)
}

/// `sum_{n=1}^{m} (-1)^{n+1} C(2m, m-n) lambda_n`.
pub fn z_modsq_keiper_li(m: usize, lambdas: &[Float]) -> Result<Float> {
    if m < 1 || lambdas.len() < m {
        return Err(Error::Domain(format!("need lambda_1..lambda_{m}")));
    }
    let prec = lambdas[0].prec();
    let mut acc = Float::new(prec);
    for n in 1..=m {
        let c = rug::Integer::from(rug::Integer::binomial_u((2 * m) as u32, (m - n) as u32));
        let t = Float::with_val(prec, &lambdas[n - 1] * &c);
        if n % 2 == 1 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    Ok(acc)
}

/// `Z_1(m)` for even `m` from values at `1/2`:
/// `(-1)^k [ -(log|zeta|)^{(2k)}(1/2) / (2 (2k-1)!) - ((4^k-1) zeta(2k) + 4^k beta(2k))/4 + 4^k ]`
/// with `m = 2k`.
pub fn z1_voros(m: usize, ctx: &PrecisionContext) -> Result<Float> {
    if m < 2 || m % 2 == 1 {
        return Err(Error::Domain("Voros formula holds for even m >= 2 only".into()));
    }
    let prec = ctx.bits();
    let k = m / 2;
    let half = Complex::with_val(prec, 0.5);
    let zs = zeta_series(&half, m, ctx)?;
    let l = zs.log_normalized()?;
    // (log|zeta|)^{(m)}(1/2) / (m-1)! = m Re l_m
    let d = Float::with_val(prec, l.coeff(m).real() * m as u32);
    let four_k = two_pow(m as i32, prec);
    let z = zeta_u(m as u32, prec);
    let beta = dirichlet_beta(&Complex::with_val(prec, m), ctx)?;
    let mut bracket = -(d / 2u32);
    bracket -= (Float::with_val(prec, &four_k - 1u32) * &z + Float::with_val(prec, &four_k * beta.real())) / 4u32;
    bracket += &four_k;
    if k % 2 == 1 {
        bracket = -bracket;
    }
    Ok(bracket)
}

/// Rayleigh sums `Z_nu(2m)` of Bessel zeros through Sneddon's recurrence,
/// returned for `m = 1..=m_max` (index `m - 1`). Exact for rational `nu`.
pub fn sneddon_bessel_z<T: Scalar>(nu: &T, m_max: usize) -> Vec<T> {
    let k_coef = |r: usize, m: usize| -> T {
        let mut v = nu.one_like();
        for i in (m - r + 1)..=m {
            let f = nu.from_i64_like(i as i64).add_ref(nu).mul_i64(i as i64);
            v = v.mul_ref(&f).mul_i64(-4);
        }
        v
    };
    let mut z: Vec<T> = Vec::with_capacity(m_max);
    for m in 0..m_max {
        // Z(2m+2)
        let mut rhs = nu.from_i64_like(m as i64 + 1).add_ref(nu).mul_i64(4);
        rhs = nu.one_like().div_ref(&rhs);
        for r in 1..=m {
            let t = k_coef(r - 1, m).mul_ref(&z[r - 1]);
            rhs = rhs.sub_ref(&t);
        }
        z.push(rhs.div_ref(&k_coef(m, m)));
    }
    z
}

/// Convenience: the `m`-th raw log-derivative coefficient of any series.
pub fn z_of_series(series: &Series, m: usize) -> Result<Complex> {
    let v = log_derivative_of_series(&series.truncate(m), false)?;
    Ok(v[m - 1].clone())
}
