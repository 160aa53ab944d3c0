//! Zero loci, palindromic initial conditions and near-zero progressions.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use num_integer::Integer;
use serde::Serialize;

use crate::array::BinomialArray;
use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sequence::InitialSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LocusFamily {
    /// `B(r - s x)` with `r, s > 0`: zeros right of column 0.
    RightHand { r: i64, s: i64 },
    /// `B(r + s x)` with `r, s > 0`: zeros left of column 0.
    LeftHand { r: i64, s: i64 },
    /// Skew-palindromic initial condition of degree `m`.
    SkewDiagonal { m: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroLocus {
    pub family: LocusFamily,
    pub positions: Vec<(u64, i64)>,
}

impl ZeroLocus {
    /// True when every listed position holds a zero of `array`.
    pub fn verify(&self, array: &BinomialArray) -> bool {
        self.positions.iter().all(|&(k, n)| array.entry(k as i64, n).is_zero())
    }
}

/// Predicted and scanned zeros of a degree-one array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroScan {
    pub predicted: ZeroLocus,
    pub scanned: ZeroLocus,
    /// For the left-hand family, the positions `(lr, l(r-s)+1)`, `l <= -1`,
    /// read literally; they fall above row 0.
    pub literal: Vec<(i64, i64)>,
    pub agree: bool,
}

/// Cells of a degree-`m` array that are not forced by the borders: row
/// `k >= 1`, outside the right zero triangle and its diagonal border, and
/// outside the constant tail of column -1.
pub fn is_proper(k: i64, n: i64, m: i64) -> bool {
    k >= 1 && !(n >= 0 && k >= n + m) && !(n == -1 && k >= m)
}

/// Zeros of `B(r - s x)`, predicted and found by scanning rows
/// `1..=k_max` over `n_range`.
///
/// Both signs of `s` are accepted; `s < 0` is the array `B(|s| x + r)`.
/// A common factor of `r` and `s` does not move the zeros, and neither does
/// negating both.
pub fn proper_zeros(r: i64, s: i64, k_max: u64, n_range: RangeInclusive<i64>) -> Result<ZeroScan> {
    if r == 0 || s == 0 {
        return Err(Error::range("r and s must be nonzero"));
    }
    let array = BinomialArray::from_ints(&[r, -s]);
    let (r, s) = if r < 0 { (-r, -s) } else { (r, s) };
    let g = r.gcd(&s);
    let (r, s) = (r / g, s / g);
    let in_scope = |k: i64, n: i64| k <= k_max as i64 && n_range.contains(&n) && is_proper(k, n, 1);

    let (family, predicted, literal) = if s > 0 {
        let pts: Vec<(u64, i64)> = (1..)
            .map(|l| (l * r, l * (r + s) - 1))
            .take_while(|&(k, _)| k <= k_max as i64)
            .filter(|&(k, n)| in_scope(k, n))
            .map(|(k, n)| (k as u64, n))
            .collect();
        (LocusFamily::RightHand { r, s }, pts, Vec::new())
    } else {
        let s = -s;
        let pts = if r < s {
            (1..)
                .map(|l| (l * r, l * (r - s) - 1))
                .take_while(|&(k, _)| k <= k_max as i64)
                .filter(|&(k, n)| in_scope(k, n))
                .map(|(k, n)| (k as u64, n))
                .collect()
        } else {
            Vec::new()
        };
        let literal = (1..=(k_max as i64 / r).max(1)).map(|l| (-l * r, -l * (r - s) + 1)).collect();
        (LocusFamily::LeftHand { r, s }, pts, literal)
    };

    let mut found = Vec::new();
    for k in 1..=k_max as i64 {
        for n in n_range.clone() {
            if is_proper(k, n, 1) && array.entry(k, n).is_zero() {
                found.push((k as u64, n));
            }
        }
    }
    let agree = predicted.iter().collect::<BTreeSet<_>>() == found.iter().collect::<BTreeSet<_>>();
    Ok(ZeroScan {
        predicted: ZeroLocus { family, positions: predicted },
        scanned: ZeroLocus { family, positions: found },
        literal,
        agree,
    })
}

/// `C_t^{(r,s)} = (1/t) C(rt+st, rt+1)`, checked against
/// `(r+s)/(rt+1) C(rt+st-1, rt)`.
pub fn generalized_catalan(r: i64, s: i64, t: i64) -> Result<Scalar> {
    if r < 1 || s < 1 || t < 1 {
        return Err(Error::range("r, s and t must be positive"));
    }
    let first = binomial(r * t + s * t, r * t + 1) / Scalar::from(t);
    let second = Scalar::from(r + s) / Scalar::from(r * t + 1) * binomial(r * t + s * t - 1, r * t);
    debug_assert_eq!(first, second);
    Ok(first)
}

/// Same as [`generalized_catalan`] but reports both forms.
pub fn generalized_catalan_forms(r: i64, s: i64, t: i64) -> Result<(Scalar, Scalar)> {
    let first = generalized_catalan(r, s, t)?;
    let second = Scalar::from(r + s) / Scalar::from(r * t + 1) * binomial(r * t + s * t - 1, r * t);
    Ok((first, second))
}

/// `a_k = a_{m-k}`. The zero polynomial counts as palindromic.
pub fn is_palindromic(p: &InitialSequence) -> bool {
    let c = p.coefficients();
    c.iter().eq(c.iter().rev())
}

/// `a_k = -a_{m-k}`. The zero polynomial counts as skew-palindromic.
pub fn is_skew_palindromic(p: &InitialSequence) -> bool {
    let c = p.coefficients();
    c.iter().zip(c.iter().rev()).all(|(x, y)| x == &-y)
}

/// Diagonal zeros forced by a skew-palindromic initial condition, for
/// `k = 0..=t_max`: `(l+k, 2k)` when `m = 2l`, `(l+k+1, 2k+1)` when `m = 2l+1`.
pub fn skew_diagonal_zeros(p: &InitialSequence, t_max: u64) -> Result<ZeroLocus> {
    let m = match p.degree() {
        Some(m) if is_skew_palindromic(p) => m,
        _ => return Err(Error::not_applicable("diagonal zeros", "nonzero skew-palindromic initial condition")),
    };
    let l = (m / 2) as u64;
    let positions =
        (0..=t_max).map(|k| if m % 2 == 0 { (l + k, 2 * k as i64) } else { (l + k + 1, 2 * k as i64 + 1) }).collect();
    Ok(ZeroLocus { family: LocusFamily::SkewDiagonal { m }, positions })
}

/// Top row of the hexagon `M(m, m, k)`:
/// `a_i = (-1)^i C(m-i, k-i) C(m-k+i, i)` for `i = 0..=k`.
pub fn cg_initial_condition(m: i64, k: i64) -> Result<InitialSequence> {
    if !(0 < k && k < m) {
        return Err(Error::range(format!("need 0 < k < m, got m = {m}, k = {k}")));
    }
    Ok(InitialSequence::new(
        (0..=k).map(|i| Scalar::sign_power(i) * binomial(m - i, k - i) * binomial(m - k + i, i)).collect(),
    ))
}

/// Coefficients of `(1 - x^r)^s`.
pub fn aeration(r: i64, s: i64) -> Result<InitialSequence> {
    if r < 1 || s < 1 {
        return Err(Error::range("r and s must be positive"));
    }
    let mut c = vec![Scalar::zero(); (r * s + 1) as usize];
    for j in 0..=s {
        c[(r * j) as usize] = Scalar::sign_power(j) * binomial(s, j);
    }
    Ok(InitialSequence::new(c))
}

/// Placement of a progression `c_t = a_{u+tv, w+tv'}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NearZeroAnchor {
    pub u: i64,
    pub w: i64,
    pub v: i64,
    pub v_prime: i64,
}

impl NearZeroAnchor {
    pub fn position(&self, t: i64) -> (i64, i64) {
        (self.u + t * self.v, self.w + t * self.v_prime)
    }

    /// Whether a zero progression of the same type starting at `(u*, w*)`
    /// sits next to this one.
    pub fn is_adjacent_to(&self, zero_u: i64, zero_w: i64) -> bool {
        (self.u - zero_u).abs().max((self.w - zero_w).abs()) == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NearZeroSeq {
    pub anchor: NearZeroAnchor,
    pub t_start: i64,
    pub values: Vec<Scalar>,
}

pub fn near_zero_sequence(array: &BinomialArray, anchor: NearZeroAnchor, ts: RangeInclusive<i64>) -> NearZeroSeq {
    let t_start = *ts.start();
    let values = ts
        .map(|t| {
            let (k, n) = anchor.position(t);
            array.entry(k, n)
        })
        .collect();
    NearZeroSeq { anchor, t_start, values }
}
