use rug::ops::Pow;
use rug::{Complex, Float};
use serde::Serialize;

use super::attractor::AttractorTable;
use super::product::izeta_product;
use super::singular::j1_limit;
use crate::error::{Error, Result};
use crate::mp::{decimal_places, format_sig, ln2, log_sqrt_2pi, pi, significant_digits, zeta_u};

/// One identity: measured value, expected value and digits of agreement.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub value: String,
    pub expected: String,
    /// Decimal places (or significant digits, see `name`) of agreement.
    pub digits: f64,
    pub required: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub m: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check(name: &str, value: &Complex, expected: &Complex, required: f64, significant: bool) -> IdentityCheck {
    let digits = if significant { significant_digits(value, expected) } else { decimal_places(value, expected) };
    IdentityCheck {
        name: name.to_string(),
        value: format_sig(value.real(), 30),
        expected: format_sig(expected.real(), 30),
        digits,
        required,
        pass: digits >= required,
    }
}

fn unreached(name: &str, expected: &Float, required: f64) -> IdentityCheck {
    IdentityCheck {
        name: name.to_string(),
        value: "no branch found".to_string(),
        expected: format_sig(expected, 30),
        digits: 0.0,
        required,
        pass: false,
    }
}

/// Evaluates the identities satisfied by the attractor. Thresholds are the
/// ones met at `m = 50` and 200 digits; smaller tables report failures.
pub fn identity_suite(table: &AttractorTable) -> Result<IdentityReport> {
    let ctx = table.ctx();
    let prec = ctx.bits();
    let m = table.m as u32;
    let c = |v: &Float| Complex::with_val(prec, v);
    let mut checks = Vec::new();

    let mut sum = Complex::new(prec);
    let mut log_sum = Complex::new(prec);
    let mut recip_sum = Complex::new(prec);
    let mut var_sum = Complex::new(prec);
    let mut prod_half = Complex::with_val(prec, 1);
    for j in &table.roots {
        sum += j;
        log_sum += Complex::with_val(prec, j.ln_ref());
        recip_sum += Complex::with_val(prec, j.recip_ref());
        let d = Complex::with_val(prec, j - 0.5f64);
        var_sum += Complex::with_val(prec, d.square_ref());
        let t = Complex::with_val(prec, j.recip_ref()) / 2u32 + 1u32;
        prod_half *= t;
    }
    let mean = Complex::with_val(prec, &sum / m);
    checks.push(check("mean", &mean, &ctx.complex(0.5), 60.0, false));

    let log_mean = Complex::with_val(prec, &log_sum / m);
    let two_log2 = -(ln2(prec) * 2u32);
    checks.push(check("log_mean", &log_mean, &c(&two_log2), 15.0, false));

    let prod = Complex::with_val(prec, -&log_mean).exp();
    checks.push(check("product_inverse_root", &prod, &ctx.complex(4), 14.0, false));

    let var = Complex::with_val(prec, &var_sum / m);
    let var_ref = crate::mp::parse_decimal("0.15443132980306572121", &ctx)?;
    checks.push(check("variance_m50", &var, &c(&var_ref), if m == 50 { 19.0 } else { 0.0 }, false));

    let recip_mean = Complex::with_val(prec, &recip_sum / m);
    let z3 = zeta_u(3, prec);
    let p2 = Float::with_val(prec, pi(prec).square_ref());
    let recip_ref = (Float::with_val(prec, &p2 / &z3) - 1u32) * 2u32;
    checks.push(check("reciprocal_mean", &recip_mean, &c(&recip_ref), 12.0, false));

    let apery = Complex::with_val(prec, &p2 / (Complex::with_val(prec, &recip_mean / 2u32) + 1u32));
    checks.push(check("apery", &apery, &c(&z3), 12.0, false));

    let root_prod = (Complex::with_val(prec, prod_half.ln_ref()) / m).exp();
    let four_ls = log_sqrt_2pi(prec) * 4u32;
    checks.push(check("product_one_plus_half_reciprocal", &root_prod, &c(&four_ls), 15.0, false));

    if !table.source_poly.is_empty() {
        let mut acc = Float::new(prec);
        let mut p = Float::with_val(prec, 1);
        for coef in &table.source_poly {
            acc += Float::with_val(prec, coef * &p);
            p /= -2i32;
        }
        let r = Complex::with_val(prec, acc.ln() / m).exp();
        checks.push(check("expansion_at_minus_half", &r, &c(&log_sqrt_2pi(prec)), 30.0, false));
    }

    // gamma from zeta^{-1}(s) at s = 10^12
    let s = Float::with_val(prec, 10u32).pow(12u32);
    let euler = Float::with_val(prec, rug::float::Constant::Euler);
    let half_gamma = Float::with_val(prec, -&euler) / 2u32;
    match izeta_product(&c(&s), table, 1e-3) {
        Ok(b) => {
            let s2 = Float::with_val(prec, s.square_ref());
            let tail = Float::with_val(prec, 1u32 + Float::with_val(prec, s.recip_ref()));
            let gamma = Complex::with_val(prec, (b.s.clone() - &tail) * &s2);
            checks.push(check("gamma_at_1e12", &gamma, &c(&euler), 11.0, true));

            // sum_{n<=k} n - k^2 zeta^{-1}(k)/2 -> -gamma/2
            let naturals = Float::with_val(prec, &s * Float::with_val(prec, &s + 1u32)) / 2u32;
            let nat = Complex::with_val(prec, c(&naturals) - Complex::with_val(prec, &b.s * &s2) / 2u32);
            checks.push(check("naturals_at_1e12", &nat, &c(&half_gamma), 11.0, true));
        }
        Err(Error::BranchNotFound { .. }) => {
            checks.push(unreached("gamma_at_1e12", &euler, 11.0));
            checks.push(unreached("naturals_at_1e12", &half_gamma, 11.0));
        }
        Err(e) => return Err(e),
    }

    // j_1 against zeta(-e)
    let lim = j1_limit(&ctx)?;
    let e = Float::with_val(prec, 1u32).exp();
    let ze = crate::specfun::zeta(&Complex::with_val(prec, -e), &ctx)?;
    checks.push(check("j1_vs_zeta_minus_e", &c(&lim.j1), &ze, 7.0, false));

    Ok(IdentityReport { m: table.m, checks })
}
