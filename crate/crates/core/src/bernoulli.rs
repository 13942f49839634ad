//! Exact Bernoulli numbers through the tangent-number recurrence, with a
//! process-wide cache and per-precision float tables.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rug::{Float, Integer, Rational};

static EXACT: OnceLock<RwLock<Vec<BigRational>>> = OnceLock::new();
static SCALED: OnceLock<Mutex<HashMap<u32, Arc<Vec<Float>>>>> = OnceLock::new();

fn exact_table() -> &'static RwLock<Vec<BigRational>> {
    EXACT.get_or_init(|| RwLock::new(Vec::new()))
}

/// `B_{2k}` for `k = 1..=n` from tangent numbers.
fn even_bernoulli_upto(n: usize) -> Vec<BigRational> {
    let mut t: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    if n >= 1 {
        t[1] = BigInt::one();
    }
    for k in 2..=n {
        t[k] = &t[k - 1] * BigInt::from(k - 1);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * BigInt::from(j - k) + &t[j] * BigInt::from(j - k + 2);
        }
    }
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let four_k: BigInt = BigInt::one() << (2 * k);
        let den = &four_k * (&four_k - BigInt::one());
        let mut num = BigInt::from(2 * k) * &t[k];
        if k % 2 == 0 {
            num = -num;
        }
        out.push(BigRational::new(num, den));
    }
    out
}

/// `B_{2k}` for `k >= 1`, extending the cache when needed.
pub fn even_bernoulli(k: usize) -> BigRational {
    assert!(k >= 1);
    {
        let table = exact_table().read().unwrap();
        if k <= table.len() {
            return table[k - 1].clone();
        }
    }
    let mut table = exact_table().write().unwrap();
    if k > table.len() {
        let target = k.max(2 * table.len()).max(32);
        *table = even_bernoulli_upto(target);
    }
    table[k - 1].clone()
}

/// Bernoulli number `B_k` with `B_1 = -1/2`.
pub fn bernoulli(k: usize) -> BigRational {
    match k {
        0 => BigRational::one(),
        1 => BigRational::new(BigInt::from(-1), BigInt::from(2)),
        _ if k % 2 == 1 => BigRational::zero(),
        _ => even_bernoulli(k / 2),
    }
}

pub(crate) fn bigint_to_integer(b: &BigInt) -> Integer {
    let (sign, bytes) = b.to_bytes_le();
    let mut i = Integer::from_digits(&bytes, rug::integer::Order::Lsf);
    if sign == Sign::Minus {
        i = -i;
    }
    i
}

pub(crate) fn to_rug_rational(r: &BigRational) -> Rational {
    Rational::from((bigint_to_integer(r.numer()), bigint_to_integer(r.denom())))
}

/// `B_{2j}/(2j)!` for `j = 1..=count` at the given precision (index `j-1`).
pub fn scaled_even_bernoulli(count: usize, prec: u32) -> Arc<Vec<Float>> {
    let cache = SCALED.get_or_init(|| Mutex::new(HashMap::new()));
    {
        let c = cache.lock().unwrap();
        if let Some(v) = c.get(&prec) {
            if v.len() >= count {
                return v.clone();
            }
        }
    }
    let target = count.max(16);
    even_bernoulli(target);
    let table = exact_table().read().unwrap();
    let mut out = Vec::with_capacity(target);
    let mut fact = Integer::from(1);
    for j in 1..=target {
        fact *= (2 * j - 1) as u32;
        fact *= (2 * j) as u32;
        let r = to_rug_rational(&table[j - 1]) / &fact;
        out.push(Float::with_val(prec, &r));
    }
    drop(table);
    let arc = Arc::new(out);
    cache.lock().unwrap().insert(prec, arc.clone());
    arc
}
