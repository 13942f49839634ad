//! Coefficient traits for truncated power series.
//!
//! `rug` values carry their own precision, so constructors are relative to
//! an existing value (`zero_like`, `from_i64_like`) instead of the
//! context-free `num_traits::Zero`. Machine and exact types are wired up
//! through `num_traits`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rug::{Complex, Float};

/// A field element usable as a series coefficient.
pub trait Scalar: Clone + Debug + PartialEq + Send + Sync {
    fn zero_like(&self) -> Self;
    fn from_i64_like(&self, n: i64) -> Self;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn div_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul_i64(&self, n: i64) -> Self;
    fn div_i64(&self, n: i64) -> Self;
    /// `log10 |x|`, negative infinity for zero.
    fn log10_abs(&self) -> f64;
    /// `log10` of the relative rounding unit; negative infinity when exact.
    fn eps_log10(&self) -> f64;

    fn one_like(&self) -> Self {
        self.from_i64_like(1)
    }
    fn from_ratio_like(&self, n: i64, d: i64) -> Self {
        self.from_i64_like(n).div_i64(d)
    }
    fn is_zero_value(&self) -> bool {
        self.log10_abs() == f64::NEG_INFINITY
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self = self.add_ref(o);
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self = self.sub_ref(o);
    }
    /// `self += a * b`.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        self.add_assign_ref(&p);
    }
}

/// Scalars with logarithm, exponential and powers.
pub trait Transcendental: Scalar {
    fn ln(&self) -> Self;
    fn exp(&self) -> Self;
    fn pow_ref(&self, p: &Self) -> Self;
}

impl Scalar for f64 {
    fn zero_like(&self) -> Self {
        0.0
    }
    fn from_i64_like(&self, n: i64) -> Self {
        n as f64
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn div_ref(&self, o: &Self) -> Self {
        self / o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_i64(&self, n: i64) -> Self {
        self * n as f64
    }
    fn div_i64(&self, n: i64) -> Self {
        self / n as f64
    }
    fn log10_abs(&self) -> f64 {
        self.abs().log10()
    }
    fn eps_log10(&self) -> f64 {
        f64::EPSILON.log10()
    }
}

impl Transcendental for f64 {
    fn ln(&self) -> Self {
        f64::ln(*self)
    }
    fn exp(&self) -> Self {
        f64::exp(*self)
    }
    fn pow_ref(&self, p: &Self) -> Self {
        self.powf(*p)
    }
}

impl Scalar for Complex64 {
    fn zero_like(&self) -> Self {
        Complex64::zero()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn div_ref(&self, o: &Self) -> Self {
        self / o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_i64(&self, n: i64) -> Self {
        self * n as f64
    }
    fn div_i64(&self, n: i64) -> Self {
        self / n as f64
    }
    fn log10_abs(&self) -> f64 {
        self.norm().log10()
    }
    fn eps_log10(&self) -> f64 {
        f64::EPSILON.log10()
    }
}

impl Transcendental for Complex64 {
    fn ln(&self) -> Self {
        Complex64::ln(*self)
    }
    fn exp(&self) -> Self {
        Complex64::exp(*self)
    }
    fn pow_ref(&self, p: &Self) -> Self {
        self.powc(*p)
    }
}

impl Scalar for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn div_ref(&self, o: &Self) -> Self {
        self / o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_i64(&self, n: i64) -> Self {
        self * BigInt::from(n)
    }
    fn div_i64(&self, n: i64) -> Self {
        self / BigInt::from(n)
    }
    fn log10_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let n = self.numer().bits() as f64;
        let d = self.denom().bits() as f64;
        if n < 1000.0 && d < 1000.0 {
            self.to_f64().map(|v| v.abs().log10()).unwrap_or((n - d) * std::f64::consts::LOG10_2)
        } else {
            (n - d) * std::f64::consts::LOG10_2
        }
    }
    fn eps_log10(&self) -> f64 {
        f64::NEG_INFINITY
    }
}

impl Scalar for Float {
    fn zero_like(&self) -> Self {
        Float::new(self.prec())
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Float::with_val(self.prec(), n)
    }
    fn add_ref(&self, o: &Self) -> Self {
        Float::with_val(self.prec(), self + o)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        Float::with_val(self.prec(), self - o)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        Float::with_val(self.prec(), self * o)
    }
    fn div_ref(&self, o: &Self) -> Self {
        Float::with_val(self.prec(), self / o)
    }
    fn neg_ref(&self) -> Self {
        Float::with_val(self.prec(), -self)
    }
    fn mul_i64(&self, n: i64) -> Self {
        Float::with_val(self.prec(), self * n)
    }
    fn div_i64(&self, n: i64) -> Self {
        Float::with_val(self.prec(), self / n)
    }
    fn log10_abs(&self) -> f64 {
        crate::mp::log10_float(self)
    }
    fn eps_log10(&self) -> f64 {
        -(self.prec() as f64) * std::f64::consts::LOG10_2
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self -= o;
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

impl Transcendental for Float {
    fn ln(&self) -> Self {
        Float::with_val(self.prec(), self.ln_ref())
    }
    fn exp(&self) -> Self {
        Float::with_val(self.prec(), self.exp_ref())
    }
    fn pow_ref(&self, p: &Self) -> Self {
        use rug::ops::Pow;
        Float::with_val(self.prec(), self.pow(p))
    }
}

impl Scalar for Complex {
    fn zero_like(&self) -> Self {
        Complex::new(self.prec())
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Complex::with_val(self.prec(), n)
    }
    fn add_ref(&self, o: &Self) -> Self {
        Complex::with_val(self.prec(), self + o)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        Complex::with_val(self.prec(), self - o)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        Complex::with_val(self.prec(), self * o)
    }
    fn div_ref(&self, o: &Self) -> Self {
        Complex::with_val(self.prec(), self / o)
    }
    fn neg_ref(&self) -> Self {
        Complex::with_val(self.prec(), -self)
    }
    fn mul_i64(&self, n: i64) -> Self {
        Complex::with_val(self.prec(), self * n)
    }
    fn div_i64(&self, n: i64) -> Self {
        Complex::with_val(self.prec(), self / n)
    }
    fn log10_abs(&self) -> f64 {
        crate::mp::log10_abs(self)
    }
    fn eps_log10(&self) -> f64 {
        -(self.prec().0 as f64) * std::f64::consts::LOG10_2
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self -= o;
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

impl Transcendental for Complex {
    fn ln(&self) -> Self {
        Complex::with_val(self.prec(), self.ln_ref())
    }
    fn exp(&self) -> Self {
        Complex::with_val(self.prec(), self.exp_ref())
    }
    fn pow_ref(&self, p: &Self) -> Self {
        use rug::ops::Pow;
        Complex::with_val(self.prec(), self.pow(p))
    }
}
