//! Extended binomial coefficients and Catalan numbers.
//!
//! `binomial(n, k)` is total on `i64 x i64`: the factorial formula for
//! `0 <= k <= n`, `(-1)^k C(-n+k-1, k)` for `n < 0 <= k` (the coefficient of
//! `x^k` in the series of `(1+x)^n`), and zero everywhere else.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

static FACTORIALS: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());
static SEGNER: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// `n!`, memoized. Entries are appended in order and never change.
pub fn factorial(n: u64) -> BigInt {
    let n = n as usize;
    {
        let table = FACTORIALS.read().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = FACTORIALS.write().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= n {
        let next = table.last().unwrap() * BigInt::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

/// Integer-valued extended binomial coefficient.
pub fn binomial_int(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 {
        if k > n {
            return BigInt::zero();
        }
        let (n, k) = (n as u64, k as u64);
        return factorial(n) / (factorial(k) * factorial(n - k));
    }
    let magnitude = binomial_int(-n + k - 1, k);
    if k % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}

/// Extended binomial coefficient as a [`Scalar`] (always an integer).
pub fn binomial(n: i64, k: i64) -> Scalar {
    Scalar::from_integer(binomial_int(n, k))
}

/// Catalan numbers by Segner's recurrence `C_{t+1} = sum C_i C_{t-i}`,
/// memoized.
pub fn catalan_segner(t: u64) -> BigInt {
    let t = t as usize;
    {
        let table = SEGNER.read().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = table.get(t) {
            return v.clone();
        }
    }
    let mut table = SEGNER.write().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(BigInt::one());
    }
    while table.len() <= t {
        let n = table.len() - 1;
        let next: BigInt = (0..=n).map(|i| &table[i] * &table[n - i]).sum();
        table.push(next);
    }
    table[t].clone()
}

/// `C_t = (1/t) C(2t, t+1)` for `t >= 1`, and `C_0 = 1`.
pub fn catalan_closed_form(t: u64) -> Scalar {
    if t == 0 {
        return Scalar::one();
    }
    let t = t as i64;
    binomial(2 * t, t + 1) / Scalar::from(t)
}

/// The `t`-th Catalan number.
pub fn catalan(t: u64) -> Scalar {
    let value = Scalar::from_integer(catalan_segner(t));
    debug_assert_eq!(value, catalan_closed_form(t));
    value
}
