//! Truncated Taylor series ("jets") about a fixed center.

use crate::error::{Error, Result};
use crate::scalar::{Scalar, Transcendental};

/// `sum_{k=0}^{M} c_k (s - center)^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<T> {
    center: T,
    coeffs: Vec<T>,
}

impl<T: Scalar> PowerSeries<T> {
    pub fn new(center: T, coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        PowerSeries { center, coeffs }
    }

    pub fn constant(center: T, c: T, order: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); order + 1];
        coeffs[0] = c;
        PowerSeries { center, coeffs }
    }

    /// The identity `x = s - center`.
    pub fn variable(center: T, order: usize) -> Self {
        let z = center.zero_like();
        let mut coeffs = vec![z; order + 1];
        if order >= 1 {
            coeffs[1] = center.one_like();
        }
        PowerSeries { center, coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn center(&self) -> &T {
        &self.center
    }

    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// `k! c_k`, the `k`-th derivative at the center.
    pub fn derivative_at(&self, k: usize) -> T {
        let mut v = self.coeffs[k].clone();
        for j in 2..=k {
            v = v.mul_i64(j as i64);
        }
        v
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        PowerSeries { center: self.center.clone(), coeffs: self.coeffs[..=n].to_vec() }
    }

    /// Same coefficients, relabelled center.
    pub fn with_center(mut self, center: T) -> Self {
        self.center = center;
        self
    }

    fn check_center(&self, o: &Self) -> Result<usize> {
        if self.center != o.center {
            return Err(Error::CenterMismatch);
        }
        Ok(self.order().min(o.order()))
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        let n = self.check_center(o)?;
        let coeffs = (0..=n).map(|k| self.coeffs[k].add_ref(&o.coeffs[k])).collect();
        Ok(PowerSeries { center: self.center.clone(), coeffs })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        let n = self.check_center(o)?;
        let coeffs = (0..=n).map(|k| self.coeffs[k].sub_ref(&o.coeffs[k])).collect();
        Ok(PowerSeries { center: self.center.clone(), coeffs })
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        let n = self.check_center(o)?;
        Ok(PowerSeries { center: self.center.clone(), coeffs: mul_coeffs(&self.coeffs, &o.coeffs, n) })
    }

    /// Quotient truncated to the smaller order. A power `x^v` dividing both
    /// operands exactly is cancelled first, lowering the order by `v`.
    pub fn div(&self, o: &Self) -> Result<Self> {
        let n = self.check_center(o)?;
        let v = (0..n)
            .take_while(|&k| o.coeffs[k].is_zero_value() && self.coeffs[k].is_zero_value())
            .count();
        if v > 0 {
            let a = PowerSeries { center: self.center.clone(), coeffs: self.coeffs[v..=n].to_vec() };
            let b = PowerSeries { center: o.center.clone(), coeffs: o.coeffs[v..=n].to_vec() };
            return a.div(&b);
        }
        o.check_invertible()?;
        Ok(PowerSeries { center: self.center.clone(), coeffs: div_coeffs(&self.coeffs, &o.coeffs, n) })
    }

    pub fn recip(&self) -> Result<Self> {
        let one = PowerSeries::constant(self.center.clone(), self.center.one_like(), self.order());
        one.div(self)
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg_ref())
    }

    pub fn scale(&self, f: &T) -> Self {
        self.map(|c| c.mul_ref(f))
    }

    pub fn add_scalar(&self, f: &T) -> Self {
        let mut out = self.clone();
        out.coeffs[0] = out.coeffs[0].add_ref(f);
        out
    }

    /// Coefficients `c_k f^k`: substitution `x -> f x`.
    pub fn scale_variable(&self, f: &T) -> Self {
        let mut p = f.one_like();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c.mul_ref(&p));
            p = p.mul_ref(f);
        }
        PowerSeries { center: self.center.clone(), coeffs }
    }

    /// `self * (a0 + a1 x)` in linear time.
    pub fn mul_linear(&self, a0: &T, a1: &T) -> Self {
        let n = self.order();
        let mut coeffs = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut v = self.coeffs[k].mul_ref(a0);
            if k >= 1 {
                v.add_mul_assign(&self.coeffs[k - 1], a1);
            }
            coeffs.push(v);
        }
        PowerSeries { center: self.center.clone(), coeffs }
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return PowerSeries::constant(self.center.clone(), self.center.zero_like(), 0);
        }
        let coeffs = (1..=n).map(|k| self.coeffs[k].mul_i64(k as i64)).collect();
        PowerSeries { center: self.center.clone(), coeffs }
    }

    pub fn integral(&self, c0: T) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(c0);
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.div_i64(k as i64 + 1));
        }
        PowerSeries { center: self.center.clone(), coeffs }
    }

    /// `log(a / a_0)`: the logarithm with its constant term dropped. Only
    /// field operations are used, so exact coefficient types qualify.
    pub fn log_normalized(&self) -> Result<Self> {
        self.check_invertible()?;
        let n = self.order();
        let d = self.derivative();
        let q = div_coeffs(d.coeffs(), &self.coeffs, n.saturating_sub(1));
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(self.center.zero_like());
        for k in 1..=n {
            coeffs.push(q[k - 1].div_i64(k as i64));
        }
        Ok(PowerSeries { center: self.center.clone(), coeffs })
    }

    /// `exp(a)` for a series with zero constant term.
    pub fn exp_zero_constant(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero_value() {
            return Err(Error::Domain("exp_zero_constant needs a_0 = 0".into()));
        }
        Ok(self.exp_with(self.center.one_like()))
    }

    fn exp_with(&self, y0: T) -> Self {
        let n = self.order();
        let da: Vec<T> = (1..=n).map(|j| self.coeffs[j].mul_i64(j as i64)).collect();
        let mut y = Vec::with_capacity(n + 1);
        y.push(y0);
        for k in 1..=n {
            let mut acc = self.center.zero_like();
            for j in 1..=k {
                acc.add_mul_assign(&da[j - 1], &y[k - j]);
            }
            y.push(acc.div_i64(k as i64));
        }
        PowerSeries { center: self.center.clone(), coeffs: y }
    }

    /// Whether `a_0` is numerically zero relative to the largest coefficient.
    pub fn constant_term_vanishes(&self) -> bool {
        let c0 = self.coeffs[0].log10_abs();
        if c0 == f64::NEG_INFINITY {
            return true;
        }
        let eps = self.coeffs[0].eps_log10();
        if eps == f64::NEG_INFINITY {
            return false;
        }
        let big = self.coeffs.iter().map(|c| c.log10_abs()).fold(f64::NEG_INFINITY, f64::max);
        c0 < big + eps / 2.0
    }

    fn check_invertible(&self) -> Result<()> {
        if self.constant_term_vanishes() {
            Err(Error::ZeroConstantTerm)
        } else {
            Ok(())
        }
    }

    fn map(&self, f: impl Fn(&T) -> T) -> Self {
        PowerSeries { center: self.center.clone(), coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl<T: Transcendental> PowerSeries<T> {
    pub fn log(&self) -> Result<Self> {
        let mut l = self.log_normalized()?;
        l.coeffs[0] = self.coeffs[0].ln();
        Ok(l)
    }

    pub fn exp(&self) -> Self {
        let y0 = self.coeffs[0].exp();
        self.exp_with(y0)
    }

    /// `a^p` through the power recurrence `a y' = p a' y`.
    pub fn pow(&self, p: &T) -> Result<Self> {
        self.check_invertible()?;
        let n = self.order();
        let a = &self.coeffs;
        let mut y = Vec::with_capacity(n + 1);
        y.push(a[0].pow_ref(p));
        for k in 1..=n {
            let mut acc = a[0].zero_like();
            for j in 1..=k {
                // ((p + 1) j - k) a_j y_{k-j}
                let w = p.mul_i64(j as i64).add_ref(&p.from_i64_like(j as i64 - k as i64));
                let t = w.mul_ref(&a[j]);
                acc.add_mul_assign(&t, &y[k - j]);
            }
            y.push(acc.div_ref(&a[0]).div_i64(k as i64));
        }
        Ok(PowerSeries { center: self.center.clone(), coeffs: y })
    }
}

pub(crate) fn mul_coeffs<T: Scalar>(a: &[T], b: &[T], n: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = a[0].zero_like();
        for j in 0..=k {
            if j < a.len() && k - j < b.len() {
                acc.add_mul_assign(&a[j], &b[k - j]);
            }
        }
        out.push(acc);
    }
    out
}

pub(crate) fn div_coeffs<T: Scalar>(a: &[T], b: &[T], n: usize) -> Vec<T> {
    let mut q: Vec<T> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = if k < a.len() { a[k].clone() } else { b[0].zero_like() };
        for j in 1..=k.min(b.len() - 1) {
            let p = b[j].mul_ref(&q[k - j]);
            acc.sub_assign_ref(&p);
        }
        q.push(acc.div_ref(&b[0]));
    }
    q
}
