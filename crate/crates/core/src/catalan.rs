//! Catalan-family closed forms and the named-sequence registry.

use std::collections::BTreeMap;

use crate::array::BinomialArray;
use crate::binomial::{binomial, catalan};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sequence::InitialSequence;
use crate::zeros::{aeration, cg_initial_condition, generalized_catalan, is_skew_palindromic};

/// Shapiro's Catalan triangle `B_{n,k} = (k/n) C(2n, n-k)` for `1 <= k <= n`.
pub fn shapiro_entry(n: i64, k: i64) -> Result<Scalar> {
    if !(1 <= k && k <= n) {
        return Err(Error::range(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok(Scalar::from(k) / Scalar::from(n) * binomial(2 * n, n - k))
}

/// Row `n` of the triangle, `k = 1..=n`.
pub fn shapiro_row(n: i64) -> Result<Vec<Scalar>> {
    (1..=n).map(|k| shapiro_entry(n, k)).collect()
}

fn odd_k(m: i64, k: i64) -> Result<i64> {
    if !(1 <= k && k < m && k % 2 == 1) {
        return Err(Error::range(format!("need odd k with 1 <= k < m, got m = {m}, k = {k}")));
    }
    Ok((k - 1) / 2)
}

/// `C_t(m, k)`: the entry right of the `t`-th diagonal zero of `B(M(m,m,k))`,
/// `(m-k') C(m-k'-1, k') C(t+2k'-m, k') / C(t+k'+1, k') * C_t`.
pub fn near_zero_cg(m: i64, k: i64, t: i64) -> Result<Scalar> {
    let kp = odd_k(m, k)?;
    if t < 1 {
        return Err(Error::range("t must be positive"));
    }
    let num = Scalar::from(m - kp) * binomial(m - kp - 1, kp) * binomial(t + 2 * kp - m, kp);
    Ok(num / binomial(t + kp + 1, kp) * catalan(t as u64))
}

/// `C_1(m, k) = (-1)^{k'} 2/(k'+2) C(m-k'-2, k') C(m-k', k'+1)`.
pub fn near_zero_cg_first(m: i64, k: i64) -> Result<Scalar> {
    let kp = odd_k(m, k)?;
    Ok(Scalar::sign_power(kp) * Scalar::from(2) / Scalar::from(kp + 2)
        * binomial(m - kp - 2, kp)
        * binomial(m - kp, kp + 1))
}

/// `sum_l (-1)^l C(2t, k'+t-l) C(m-l, k-l) C(m-k+l, l)`.
pub fn near_zero_cg_alternating(m: i64, k: i64, t: i64) -> Result<Scalar> {
    let kp = odd_k(m, k)?;
    Ok((0..=k)
        .map(|l| Scalar::sign_power(l) * binomial(2 * t, kp + t - l) * binomial(m - l, k - l) * binomial(m - k + l, l))
        .sum())
}

/// Ratio `C_{t+1}(m,k) / C_t(m,k) = 2(2t+1)(m-t-k) / ((t+k'+2)(m-t-k'-1))`,
/// as (numerator, denominator).
pub fn near_zero_cg_ratio(m: i64, k: i64, t: i64) -> Result<(Scalar, Scalar)> {
    let kp = odd_k(m, k)?;
    Ok((Scalar::from(2 * (2 * t + 1) * (m - t - k)), Scalar::from((t + kp + 2) * (m - t - kp - 1))))
}

/// Entry `(k'+t, 2t)` of `B(M(m,m,k))`, read from the array.
pub fn near_zero_cg_scan(m: i64, k: i64, t: i64) -> Result<Scalar> {
    let kp = odd_k(m, k)?;
    Ok(BinomialArray::new(cg_initial_condition(m, k)?).entry(kp + t, 2 * t))
}

/// `(r+1)/(r+l+1) C(r+2l, l)`: entry `(l, r+2l)` of `B(1-x)`.
pub fn ballot_diagonal(r: i64, l: i64) -> Result<Scalar> {
    if r < 0 || l < 0 {
        return Err(Error::range("r and l must be nonnegative"));
    }
    Ok(Scalar::from(r + 1) / Scalar::from(r + l + 1) * binomial(r + 2 * l, l))
}

/// `c_j(t)`: the entry right of the diagonal zero of `B(1 - x^j)` in column
/// `2t-1` (odd `j`, `t >= 1`) or column `2t` (even `j`, `t >= 0`).
pub fn c_sequence(j: i64, t: i64) -> Result<Scalar> {
    if j < 1 {
        return Err(Error::range("j must be positive"));
    }
    if j % 2 == 1 {
        if t < 1 {
            return Err(Error::range("odd j needs t >= 1"));
        }
        let i = (j - 1) / 2;
        if i == 0 {
            return Ok(catalan(t as u64));
        }
        Ok(Scalar::from(2 * i + 1) / Scalar::from(t + i + 1) * binomial(2 * t, t - i))
    } else {
        if t < 0 {
            return Err(Error::range("even j needs t >= 0"));
        }
        let i = j / 2;
        Ok(Scalar::from(2 * i) / Scalar::from(t + i + 1) * binomial(2 * t + 1, t - i + 1))
    }
}

/// Array position of `c_j(t)` in `B(1 - x^j)`.
pub fn c_sequence_position(j: i64, t: i64) -> (i64, i64) {
    if j % 2 == 1 {
        ((j - 1) / 2 + t, 2 * t)
    } else {
        (j / 2 + t, 2 * t + 1)
    }
}

/// `D_t = sum_{i<=m'} d_i c_{m-2i}(t)` for skew-palindromic `d` of odd
/// degree `m = 2m'+1`.
pub fn skew_near_zero(d: &InitialSequence, t: i64) -> Result<Scalar> {
    let m = match d.degree() {
        Some(m) if m % 2 == 1 && is_skew_palindromic(d) => m as i64,
        _ => {
            return Err(Error::not_applicable(
                "near-zero decomposition",
                "skew-palindromic initial condition of odd degree",
            ))
        }
    };
    let mp = (m - 1) / 2;
    (0..=mp).map(|i| Ok(d.term(i as usize) * c_sequence(m - 2 * i, t)?)).sum::<Result<Scalar>>()
}

/// A registered sequence family for the command line.
pub struct Family {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub about: &'static str,
}

pub const FAMILIES: &[Family] = &[
    Family { name: "catalan", params: &[], about: "C_0, C_1, ..." },
    Family { name: "shapiro-row", params: &["n"], about: "B_{n,k} for k = 1..n (count ignored beyond n)" },
    Family { name: "crs", params: &["r", "s"], about: "generalized Catalan C_t^(r,s), t = 1, 2, ..." },
    Family { name: "c-seq", params: &["j"], about: "c_j(t) from t = 1 (odd j) or t = 0 (even j)" },
    Family { name: "aeration", params: &["r", "s"], about: "coefficients of (1 - x^r)^s" },
    Family { name: "cg", params: &["m", "k"], about: "top row of the hexagon M(m,m,k)" },
    Family { name: "near-zero-cg", params: &["m", "k"], about: "C_t(m,k), t = 1, 2, ..." },
    Family { name: "ballot", params: &["r"], about: "(r+1)/(r+l+1) C(r+2l, l), l = 0, 1, ..." },
];

/// First `count` terms of a registered family.
pub fn sequence(name: &str, params: &BTreeMap<String, i64>, count: usize) -> Result<Vec<Scalar>> {
    let family = FAMILIES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::Unknown { kind: "family", name: name.to_string() })?;
    if let Some(extra) = params.keys().find(|k| !family.params.contains(&k.as_str())) {
        return Err(Error::Unknown { kind: "parameter", name: format!("{name}: {extra}") });
    }
    let get = |key: &str| -> Result<i64> {
        params.get(key).copied().ok_or_else(|| Error::Parse(format!("family {name} needs parameter {key}")))
    };
    let count = count as i64;
    match name {
        "catalan" => Ok((0..count).map(|t| catalan(t as u64)).collect()),
        "shapiro-row" => {
            let row = shapiro_row(get("n")?)?;
            Ok(row.into_iter().take(count as usize).collect())
        }
        "crs" => {
            let (r, s) = (get("r")?, get("s")?);
            (1..=count).map(|t| generalized_catalan(r, s, t)).collect()
        }
        "c-seq" => {
            let j = get("j")?;
            let start = if j % 2 == 1 { 1 } else { 0 };
            (start..start + count).map(|t| c_sequence(j, t)).collect()
        }
        "aeration" => Ok(aeration(get("r")?, get("s")?)?.prefix(count as usize)),
        "cg" => Ok(cg_initial_condition(get("m")?, get("k")?)?.prefix(count as usize)),
        "near-zero-cg" => {
            let (m, k) = (get("m")?, get("k")?);
            (1..=count).map(|t| near_zero_cg(m, k, t)).collect()
        }
        "ballot" => {
            let r = get("r")?;
            (0..count).map(|l| ballot_diagonal(r, l)).collect()
        }
        _ => unreachable!("registered family without generator"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ints;
    use crate::transform::{convolve, SeqVec};
    use proptest::prelude::*;

    fn params(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn shapiro_table_values() {
        assert_eq!(shapiro_entry(4, 2).unwrap(), Scalar::from(14));
        assert_eq!(shapiro_entry(5, 3).unwrap(), Scalar::from(27));
        assert_eq!(shapiro_entry(6, 3).unwrap(), Scalar::from(110));
        assert_eq!(shapiro_entry(6, 1).unwrap(), Scalar::from(132));
        assert_eq!(shapiro_entry(5, 2).unwrap(), Scalar::from(48));
        assert_eq!(shapiro_entry(5, 1).unwrap(), Scalar::from(42));
        for n in 1..10 {
            assert_eq!(shapiro_entry(n, n).unwrap(), Scalar::one());
        }
        assert_eq!(shapiro_row(4).unwrap(), ints(&[14, 14, 6, 1]));
        assert!(shapiro_entry(3, 4).is_err());
        assert!(shapiro_entry(3, 0).is_err());
    }

    #[test]
    fn shapiro_square_recurrence() {
        let e = |n: i64, k: i64| if k >= 1 && k <= n { shapiro_entry(n, k).unwrap() } else { Scalar::zero() };
        for n in 2..14 {
            for k in 1..=n {
                assert_eq!(e(n, k), e(n - 1, k - 1) + Scalar::from(2) * e(n - 1, k) + e(n - 1, k + 1), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn shapiro_row_products() {
        for n in 1..=8 {
            for p in 1..=8 {
                let dot: Scalar =
                    (1..=n.min(p)).map(|k| shapiro_entry(n, k).unwrap() * shapiro_entry(p, k).unwrap()).sum();
                assert_eq!(dot, catalan((n + p - 1) as u64), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn near_zero_cg_examples() {
        for m in 2..10 {
            for t in 1..8 {
                assert_eq!(near_zero_cg(m, 1, t).unwrap(), Scalar::from(m) * catalan(t as u64));
            }
        }
        assert_eq!(near_zero_cg(5, 3, 1).unwrap(), Scalar::from(-8));
        assert_eq!(near_zero_cg_first(5, 3).unwrap(), Scalar::from(-8));
        assert_eq!(near_zero_cg_scan(5, 3, 1).unwrap(), Scalar::from(-8));
        assert!(near_zero_cg(5, 2, 1).is_err());
        assert!(near_zero_cg(5, 5, 1).is_err());
    }

    #[test]
    fn near_zero_cg_vanishing_band() {
        for m in 3..=12 {
            for k in (3..m).step_by(2) {
                let kp = (k - 1) / 2;
                for t in (m - 2 * kp).max(1)..=m - kp - 1 {
                    assert!(near_zero_cg(m, k, t).unwrap().is_zero(), "m={m} k={k} t={t}");
                }
            }
        }
    }

    #[test]
    fn near_zero_cg_routes_agree() {
        for m in 2..=12 {
            for k in (1..m).step_by(2) {
                let kp = (k - 1) / 2;
                let a = BinomialArray::new(cg_initial_condition(m, k).unwrap());
                for t in 1..=8 {
                    let f = near_zero_cg(m, k, t).unwrap();
                    assert_eq!(f, near_zero_cg_scan(m, k, t).unwrap(), "m={m} k={k} t={t}");
                    assert_eq!(f, near_zero_cg_alternating(m, k, t).unwrap());
                    assert!(a.entry(kp + t, 2 * t - 1).is_zero());
                    let (num, den) = near_zero_cg_ratio(m, k, t).unwrap();
                    if !den.is_zero() {
                        assert_eq!(near_zero_cg(m, k, t + 1).unwrap() * den, f * num);
                    }
                }
                if k > 1 {
                    assert_eq!(near_zero_cg_first(m, k).unwrap(), near_zero_cg(m, k, 1).unwrap());
                }
            }
        }
    }

    #[test]
    fn ballot_examples() {
        for l in 0..12 {
            assert_eq!(ballot_diagonal(0, l).unwrap(), catalan(l as u64));
        }
        assert_eq!(ballot_diagonal(2, 1).unwrap(), Scalar::from(3));
        let cat = SeqVec::new((0..12).map(|t| catalan(t as u64)).collect());
        let mut power = cat.clone();
        for r in 0..5 {
            let row: Vec<Scalar> = (0..12).map(|l| ballot_diagonal(r, l).unwrap()).collect();
            assert_eq!(row, power.as_slice());
            let a = BinomialArray::from_ints(&[1, -1]);
            for l in 0..8 {
                assert_eq!(ballot_diagonal(r, l).unwrap(), a.entry(l, r + 2 * l));
            }
            power = convolve(&power, &cat);
        }
    }

    #[test]
    fn c_sequence_examples() {
        for t in 1..10 {
            assert_eq!(c_sequence(1, t).unwrap(), catalan(t as u64));
        }
        for t in 0..10 {
            assert_eq!(c_sequence(2, t).unwrap(), catalan(t as u64 + 1));
        }
        assert_eq!(c_sequence(3, 2).unwrap(), Scalar::from(3));
        assert_eq!(c_sequence(2, 1).unwrap(), Scalar::from(2));
        assert!(c_sequence(3, 0).is_err());
        assert!(c_sequence(0, 1).is_err());
    }

    #[test]
    fn c_sequence_matches_scan() {
        for j in 1..=9 {
            let a = BinomialArray::new(aeration(j, 1).unwrap());
            let start = if j % 2 == 1 { 1 } else { 0 };
            for t in start..10 {
                let (k, n) = c_sequence_position(j, t);
                assert_eq!(c_sequence(j, t).unwrap(), a.entry(k, n), "j={j} t={t}");
                assert!(a.entry(k, n - 1).is_zero(), "zero left of c_{j}({t})");
            }
        }
    }

    #[test]
    fn skew_near_zero_examples() {
        let d = InitialSequence::from_ints;
        for t in 1..10 {
            assert_eq!(skew_near_zero(&d(&[1, -1]), t).unwrap(), catalan(t as u64));
            assert_eq!(skew_near_zero(&d(&[1, 0, 0, -1]), t).unwrap(), c_sequence(3, t).unwrap());
            let v = skew_near_zero(&d(&[1, -1, 1, -1]), t).unwrap();
            assert_eq!(v, c_sequence(3, t).unwrap() - c_sequence(1, t).unwrap());
            assert_eq!(v, BinomialArray::from_ints(&[1, -1, 1, -1]).entry(1 + t, 2 * t));
        }
        assert!(skew_near_zero(&d(&[1, 0, -1]), 1).is_err());
        assert!(skew_near_zero(&d(&[1, 2]), 1).is_err());
    }

    #[test]
    fn registry() {
        assert_eq!(sequence("catalan", &params(&[]), 5).unwrap(), ints(&[1, 1, 2, 5, 14]));
        assert_eq!(sequence("shapiro-row", &params(&[("n", 4)]), 10).unwrap(), ints(&[14, 14, 6, 1]));
        assert_eq!(sequence("crs", &params(&[("r", 1), ("s", 1)]), 4).unwrap(), ints(&[1, 2, 5, 14]));
        assert_eq!(sequence("aeration", &params(&[("r", 2), ("s", 3)]), 7).unwrap(), ints(&[1, 0, -3, 0, 3, 0, -1]));
        assert_eq!(sequence("cg", &params(&[("m", 5), ("k", 3)]), 4).unwrap(), ints(&[10, -18, 18, -10]));
        assert_eq!(sequence("ballot", &params(&[("r", 0)]), 4).unwrap(), ints(&[1, 1, 2, 5]));
        assert_eq!(sequence("c-seq", &params(&[("j", 2)]), 3).unwrap(), ints(&[1, 2, 5]));
        assert!(matches!(sequence("nope", &params(&[]), 3), Err(Error::Unknown { .. })));
        assert!(matches!(sequence("catalan", &params(&[("q", 1)]), 3), Err(Error::Unknown { .. })));
        assert!(sequence("crs", &params(&[("r", 1)]), 3).is_err());
    }

    proptest! {
        #[test]
        fn skew_decomposition_matches_scan(half in prop::collection::vec(-9i64..=9, 1..=6), t in 1i64..=10) {
            let m = 2 * half.len() - 1;
            let mut d = vec![0i64; m + 1];
            for (i, v) in half.iter().enumerate() {
                d[i] = *v;
                d[m - i] = -*v;
            }
            prop_assume!(d[m] != 0);
            let p = InitialSequence::from_ints(&d);
            let mp = (m as i64 - 1) / 2;
            prop_assert_eq!(skew_near_zero(&p, t)?, BinomialArray::new(p).entry(mp + t, 2 * t));
        }
    }
}
