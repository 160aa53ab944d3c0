//! Hockey-stick rules: one entry as a sum along a row, column or diagonal.
//!
//! Hypotheses are the exact conditions under which each sum telescopes.
//! A call outside them returns [`Error::NotApplicable`] instead of a
//! failed comparison, so a sweep can tell "identity false" from "not claimed".

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::array::BinomialArray;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    /// `(k, n)`: `sum_{i<=k} (-1)^{k-i} a_{i,n} = a_{k,n-1}`.
    TopLine,
    /// `(k1, k2, n)`: `sum_{i=k1}^{k2} (-1)^{k2-i} a_{i,n} + (-1)^{k2-k1+1} a_{k1-1,n-1} = a_{k2,n-1}`.
    TopLineShort,
    /// `(k, n)`: `sum_{j<=k} a_{j,n+j} = a_{k,n+k+1}`.
    LowerRight,
    /// `(k1, k2, n)`: `a_{k1-1,n+k1} + sum_{j=k1}^{k2} a_{j,n+j} = a_{k2,n+k2+1}`.
    LowerRightShort,
    /// `(k, n)`: `a_{k,1} + ... + a_{k,n} = a_{k+1,n+1}`.
    RhsRow,
    /// `(k, n)`: `sum_{i=k}^{m+n} (-1)^{i-k} a_{i,n} = a_{k-1,n-1}`.
    RhsColumn,
    /// `(k, n)`: `a_{k,-1} + ... + a_{k,-n} = -a_{k+1,-n}`.
    LhsRow,
    /// `(k, n)`: `a_{k,-1} + a_{k-1,-2} + ... + a_{k-n+1,-n} = -a_{k-n,-n}`.
    LhsDiagonal,
    /// `(k, n1, n2)`: `a_{k+1,n1} + a_{k,n1} + ... + a_{k,n2} = a_{k+1,n2+1}`.
    ThirdShort,
}

impl RuleId {
    pub const ALL: [RuleId; 9] = [
        RuleId::TopLine,
        RuleId::TopLineShort,
        RuleId::LowerRight,
        RuleId::LowerRightShort,
        RuleId::RhsRow,
        RuleId::RhsColumn,
        RuleId::LhsRow,
        RuleId::LhsDiagonal,
        RuleId::ThirdShort,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::TopLine => "top-line",
            RuleId::TopLineShort => "top-line-short",
            RuleId::LowerRight => "lower-right",
            RuleId::LowerRightShort => "lower-right-short",
            RuleId::RhsRow => "rhs-row",
            RuleId::RhsColumn => "rhs-column",
            RuleId::LhsRow => "lhs-row",
            RuleId::LhsDiagonal => "lhs-diagonal",
            RuleId::ThirdShort => "third-short",
        }
    }

    pub fn params(self) -> &'static [&'static str] {
        match self {
            RuleId::TopLine
            | RuleId::LowerRight
            | RuleId::RhsRow
            | RuleId::RhsColumn
            | RuleId::LhsRow
            | RuleId::LhsDiagonal => &["k", "n"],
            RuleId::TopLineShort | RuleId::LowerRightShort => &["k1", "k2", "n"],
            RuleId::ThirdShort => &["k", "n1", "n2"],
        }
    }

    /// Rules that need a polynomial initial condition.
    pub fn needs_degree(self) -> bool {
        matches!(self, RuleId::RhsRow | RuleId::RhsColumn | RuleId::LhsRow | RuleId::LhsDiagonal)
    }

    fn check(self, ok: bool, hypothesis: &str) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::not_applicable(self.name(), hypothesis))
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "rule", name: s.to_string() })
    }
}

impl Serialize for RuleId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleOutcome {
    pub sum: Scalar,
    pub target: Scalar,
    pub equal: bool,
}

fn alternating(terms: impl Iterator<Item = (i64, Scalar)>) -> Scalar {
    terms.map(|(sign, v)| Scalar::sign_power(sign) * v).sum()
}

pub fn rule_sum(a: &BinomialArray, rule: RuleId, params: &[i64]) -> Result<RuleOutcome> {
    if params.len() != rule.params().len() {
        return Err(Error::not_applicable(rule.name(), format!("parameters ({})", rule.params().join(", "))));
    }
    let m = if rule.needs_degree() {
        let degree = a.degree().map_err(|_| Error::not_applicable(rule.name(), "polynomial initial condition"))?;
        degree as i64
    } else {
        0
    };
    let e = |k: i64, n: i64| a.entry(k, n);
    let (sum, target) = match (rule, params) {
        (RuleId::TopLine, &[k, n]) => {
            rule.check(k >= 0, "k >= 0")?;
            (alternating((0..=k).map(|i| (k - i, e(i, n)))), e(k, n - 1))
        }
        (RuleId::TopLineShort, &[k1, k2, n]) => {
            rule.check(0 < k1 && k1 < k2, "0 < k1 < k2")?;
            let body = alternating((k1..=k2).map(|i| (k2 - i, e(i, n))));
            let tail = Scalar::sign_power(k2 - k1 + 1) * e(k1 - 1, n - 1);
            (body + tail, e(k2, n - 1))
        }
        (RuleId::LowerRight, &[k, n]) => {
            rule.check(k >= 0, "k >= 0")?;
            ((0..=k).map(|j| e(j, n + j)).sum(), e(k, n + k + 1))
        }
        (RuleId::LowerRightShort, &[k1, k2, n]) => {
            rule.check(0 < k1 && k1 < k2, "0 < k1 < k2")?;
            let body: Scalar = (k1..=k2).map(|j| e(j, n + j)).sum();
            (e(k1 - 1, n + k1) + body, e(k2, n + k2 + 1))
        }
        (RuleId::RhsRow, &[k, n]) => {
            rule.check(n > 0 && k > m, "n > 0 and k > m")?;
            ((1..=n).map(|j| e(k, j)).sum(), e(k + 1, n + 1))
        }
        (RuleId::RhsColumn, &[k, n]) => {
            rule.check(n >= 1 && 0 <= k && k <= m + n, "n >= 1 and 0 <= k <= m + n")?;
            (alternating((k..=m + n).map(|i| (i - k, e(i, n)))), e(k - 1, n - 1))
        }
        (RuleId::LhsRow, &[k, n]) => {
            rule.check(n > 0 && k >= m, "n > 0 and k >= m")?;
            ((1..=n).map(|j| e(k, -j)).sum(), -e(k + 1, -n))
        }
        (RuleId::LhsDiagonal, &[k, n]) => {
            rule.check(n > 0 && k > m, "n > 0 and k > m")?;
            ((1..=n).map(|j| e(k - j + 1, -j)).sum(), -e(k - n, -n))
        }
        (RuleId::ThirdShort, &[k, n1, n2]) => {
            rule.check(k >= 0 && n1 < n2, "k >= 0 and n1 < n2")?;
            let body: Scalar = (n1..=n2).map(|n| e(k, n)).sum();
            (e(k + 1, n1) + body, e(k + 1, n2 + 1))
        }
        _ => unreachable!("arity checked above"),
    };
    let equal = sum == target;
    Ok(RuleOutcome { sum, target, equal })
}
