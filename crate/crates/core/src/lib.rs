//! Zeros and functional inverses from log-derivative jets.

pub mod bernoulli;
pub mod constants;
pub mod error;
pub mod invzeta;
pub mod logderiv;
pub mod mp;
pub mod rootrec;
pub mod scalar;
pub mod series;
pub mod specfun;

pub use error::{Error, Result};
pub use mp::{BigComplex, BigReal, PrecisionContext};
pub use scalar::{Scalar, Transcendental};
pub use series::PowerSeries;

/// Multiprecision complex jets, the workhorse type.
pub type Series = PowerSeries<BigComplex>;
/// Exact rational jets.
pub type RationalSeries = PowerSeries<num_rational::BigRational>;
/// Double-precision complex jets.
pub type Series64 = PowerSeries<num_complex::Complex64>;
