use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rug::{Complex, Float};
use zetainv_core::mp::PrecisionContext;
use zetainv_core::{Error, PowerSeries, RationalSeries, Series, Series64};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rseries(c: &[(i64, i64)]) -> RationalSeries {
    PowerSeries::new(q(0, 1), c.iter().map(|&(n, d)| q(n, d)).collect())
}

fn exp_series(ctx: &PrecisionContext, order: usize, sign: i32) -> Series {
    let prec = ctx.bits();
    let mut c = Float::with_val(prec, 1);
    let mut coeffs = Vec::new();
    for k in 0..=order {
        if k > 0 {
            c /= k as u32;
            c *= sign;
        }
        coeffs.push(Complex::with_val(prec, &c));
    }
    PowerSeries::new(Complex::new(prec), coeffs)
}

#[test]
fn product_of_conjugate_linears() {
    let a = rseries(&[(1, 1), (1, 1), (0, 1)]);
    let b = rseries(&[(1, 1), (-1, 1), (0, 1)]);
    assert_eq!(a.mul(&b).unwrap(), rseries(&[(1, 1), (0, 1), (-1, 1)]));
}

#[test]
fn exp_times_exp_minus_is_one() {
    let ctx = PrecisionContext::new(60).unwrap();
    let p = exp_series(&ctx, 8, 1).mul(&exp_series(&ctx, 8, -1)).unwrap();
    assert!(Complex::with_val(ctx.bits(), p.coeff(0) - 1u32).abs().real().to_f64() < 1e-56);
    for k in 1..=8 {
        assert!(p.coeff(k).clone().abs().real().to_f64() < 1e-56, "k = {k}");
    }
}

#[test]
fn truncation_drops_high_terms() {
    let x = PowerSeries::variable(q(0, 1), 1);
    assert_eq!(x.mul(&x).unwrap(), rseries(&[(0, 1), (0, 1)]));
}

#[test]
fn geometric_series_by_division() {
    let one = rseries(&[(1, 1), (0, 1), (0, 1), (0, 1)]);
    let d = rseries(&[(1, 1), (-1, 1), (0, 1), (0, 1)]);
    assert_eq!(one.div(&d).unwrap(), rseries(&[(1, 1), (1, 1), (1, 1), (1, 1)]));
}

#[test]
fn sine_over_x_is_sinc() {
    let sin = rseries(&[(0, 1), (1, 1), (0, 1), (-1, 6), (0, 1), (1, 120)]);
    let x = rseries(&[(0, 1), (1, 1), (0, 1), (0, 1), (0, 1), (0, 1)]);
    let s = sin.div(&x).unwrap();
    assert_eq!(s, rseries(&[(1, 1), (0, 1), (-1, 6), (0, 1), (1, 120)]));
}

#[test]
fn reciprocal_of_exp() {
    let ctx = PrecisionContext::new(50).unwrap();
    let r = exp_series(&ctx, 5, 1).recip().unwrap();
    let e = exp_series(&ctx, 5, -1);
    for k in 0..=5 {
        let d = Complex::with_val(ctx.bits(), r.coeff(k) - e.coeff(k));
        assert!(d.abs().real().to_f64() < 1e-48);
    }
}

#[test]
fn log_of_one_plus_x() {
    let a = rseries(&[(1, 1), (1, 1), (0, 1), (0, 1), (0, 1)]);
    let l = a.log_normalized().unwrap();
    assert_eq!(l, rseries(&[(0, 1), (1, 1), (-1, 2), (1, 3), (-1, 4)]));
}

#[test]
fn exp_of_x_in_doubles() {
    let x = PowerSeries::variable(0.0f64, 3);
    let e = x.exp();
    let want = [1.0, 1.0, 0.5, 1.0 / 6.0];
    for (k, w) in want.iter().enumerate() {
        assert!((e.coeff(k) - w).abs() < 1e-15);
    }
}

#[test]
fn square_root_of_one_plus_x() {
    let a: Series64 = PowerSeries::new(Complex64::new(0.0, 0.0), vec![Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]);
    let r = a.pow(&Complex64::new(0.5, 0.0)).unwrap();
    let want = [1.0, 0.5, -0.125];
    for (k, w) in want.iter().enumerate() {
        assert!((r.coeff(k) - Complex64::new(*w, 0.0)).norm() < 1e-15);
    }
}

#[test]
fn division_errors() {
    let a = rseries(&[(1, 1), (0, 1)]);
    let b = rseries(&[(0, 1), (1, 1)]);
    assert_eq!(a.div(&b), Err(Error::ZeroConstantTerm));
    let c = PowerSeries::new(q(1, 1), vec![q(1, 1), q(0, 1)]);
    assert_eq!(a.add(&c), Err(Error::CenterMismatch));
}
