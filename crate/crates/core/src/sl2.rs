//! The space `V(n)` with basis `phi, f phi, ..., f^n phi`.
//!
//! `f` lowers by one basis step and kills `f^n phi`. Coordinates of a vector
//! are the coefficients of a polynomial in `f` applied to `phi`, so `B_f = 1+f`
//! acts on coordinates exactly as the binomial transform acts on a sequence
//! truncated at index `n`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::transform::SeqVec;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepVector {
    n: usize,
    coeffs: Vec<Scalar>,
}

impl RepVector {
    pub fn new(n: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != n + 1 {
            return Err(Error::Dimension { expected: n, actual: coeffs.len().saturating_sub(1) });
        }
        Ok(RepVector { n, coeffs })
    }

    pub fn zero(n: usize) -> Self {
        RepVector { n, coeffs: vec![Scalar::zero(); n + 1] }
    }

    /// `f^k phi`.
    pub fn basis(n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::range(format!("f^{k} phi is zero in V({n})")));
        }
        let mut v = Self::zero(n);
        v.coeffs[k] = Scalar::one();
        Ok(v)
    }

    /// `p(f) phi` for a polynomial `p` of degree at most `n`.
    pub fn from_polynomial(n: usize, p: &[Scalar]) -> Result<Self> {
        let last = p.iter().rposition(|c| !c.is_zero());
        if last.is_some_and(|d| d > n) {
            return Err(Error::range(format!("degree {} exceeds n = {n}", last.unwrap_or(0))));
        }
        let coeffs = (0..=n).map(|k| p.get(k).cloned().unwrap_or_else(Scalar::zero)).collect();
        Ok(RepVector { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    fn map(&self, f: impl Fn(usize, &Scalar) -> Scalar) -> Self {
        RepVector { n: self.n, coeffs: self.coeffs.iter().enumerate().map(|(k, c)| f(k, c)).collect() }
    }
}

pub fn f_action(v: &RepVector) -> RepVector {
    v.map(|k, _| if k == 0 { Scalar::zero() } else { v.coeffs[k - 1].clone() })
}

pub fn s_involution(v: &RepVector) -> RepVector {
    v.map(|k, c| Scalar::sign_power(k as i64) * c)
}

fn same_space(u: &RepVector, v: &RepVector) -> Result<usize> {
    if u.n != v.n {
        return Err(Error::Dimension { expected: u.n, actual: v.n });
    }
    Ok(u.n)
}

/// `<f^l phi, f^k phi> = (-1)^k` if `l = n - k`, else 0.
pub fn invariant_form(u: &RepVector, v: &RepVector) -> Result<Scalar> {
    let n = same_space(u, v)?;
    Ok((0..=n).map(|k| Scalar::sign_power(k as i64) * &u.coeffs[n - k] * &v.coeffs[k]).sum())
}

/// `<u, S v>`: 1 on the anti-diagonal.
pub fn primed_form(u: &RepVector, v: &RepVector) -> Result<Scalar> {
    let n = same_space(u, v)?;
    Ok((0..=n).map(|k| &u.coeffs[n - k] * &v.coeffs[k]).sum())
}

/// `(1 + f) v`.
pub fn b_f(v: &RepVector) -> RepVector {
    let fv = f_action(v);
    v.map(|k, c| c + &fv.coeffs[k])
}

/// `(1 - f + f^2 - ... + (-f)^n) v`.
pub fn b_f_inverse(v: &RepVector) -> RepVector {
    let mut out = RepVector::zero(v.n);
    let mut term = v.clone();
    for i in 0..=v.n {
        let sign = Scalar::sign_power(i as i64);
        for (o, t) in out.coeffs.iter_mut().zip(&term.coeffs) {
            *o += &sign * t;
        }
        term = f_action(&term);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairingCheck {
    pub lhs: Scalar,
    pub mid: Scalar,
    pub rhs: Scalar,
    pub equal: bool,
}

/// `<B_f p(f)phi, B_f^{-1} q(f)phi>'`, `<p(f)phi, q(f)phi>'` and the
/// coefficient of `X^n` in `p q`.
pub fn pairing_check(p: &SeqVec, q: &SeqVec, n: usize) -> Result<PairingCheck> {
    let u = RepVector::from_polynomial(n, p.as_slice())?;
    let v = RepVector::from_polynomial(n, q.as_slice())?;
    let lhs = primed_form(&b_f(&u), &b_f_inverse(&v))?;
    let mid = primed_form(&u, &v)?;
    let rhs = (0..=n)
        .map(|i| {
            let a = p.as_slice().get(i).cloned().unwrap_or_else(Scalar::zero);
            let b = q.as_slice().get(n - i).cloned().unwrap_or_else(Scalar::zero);
            a * b
        })
        .sum();
    let equal = lhs == mid && mid == rhs;
    Ok(PairingCheck { lhs, mid, rhs, equal })
}
