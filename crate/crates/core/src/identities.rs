//! Identity families checked by the verification harness.
//!
//! A family is a parameter generator plus an evaluator that returns the two
//! sides of one identity. Parameters are plain integers and integer lists,
//! so every case can be printed, stored and replayed with [`check_identity`].
//! Families marked non-normative record a literal reading that is expected
//! to be refuted; they are reported but never decide the exit status.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng as _;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::array::{linear_combination, pascal_basis, BinomialArray};
use crate::binomial::{binomial, catalan, catalan_closed_form, catalan_segner};
use crate::catalan::{
    ballot_diagonal, c_sequence, c_sequence_position, near_zero_cg, near_zero_cg_alternating, near_zero_cg_first,
    near_zero_cg_ratio, near_zero_cg_scan, shapiro_entry, skew_near_zero,
};
use crate::error::{Error, Result};
use crate::hockey::{rule_sum, RuleId};
use crate::scalar::Scalar;
use crate::sequence::InitialSequence;
use crate::sl2::{b_f, b_f_inverse, f_action, invariant_form, pairing_check, primed_form, RepVector};
use crate::symmetry::{border_profile, diff_table, reverse_involution, taylor_at_minus_one, trapezoid_interchange};
use crate::transform::{
    cauchy_product, convolve, dwyer_frankel_check, forward_transform, inverse_transform, split_power_check, t_sequence,
    transform, vandermonde_expand, SeqVec,
};
use crate::zeros::{generalized_catalan_forms, is_proper, skew_diagonal_zeros};

pub type Rng = ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Seq(Vec<i64>),
}

/// Named integer parameters of one case, kept in key order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params(BTreeMap<String, ParamValue>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn int(mut self, key: &str, value: i64) -> Self {
        self.0.insert(key.to_string(), ParamValue::Int(value));
        self
    }

    pub fn seq(mut self, key: &str, value: Vec<i64>) -> Self {
        self.0.insert(key.to_string(), ParamValue::Seq(value));
        self
    }

    pub fn get_int(&self, key: &str) -> Result<i64> {
        match self.0.get(key) {
            Some(ParamValue::Int(v)) => Ok(*v),
            _ => Err(Error::Parse(format!("missing integer parameter {key}"))),
        }
    }

    pub fn get_seq(&self, key: &str) -> Result<&[i64]> {
        match self.0.get(key) {
            Some(ParamValue::Seq(v)) => Ok(v),
            _ => Err(Error::Parse(format!("missing list parameter {key}"))),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}

/// One side of an identity: a scalar or a whole prefix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Scalar(Scalar),
    List(Vec<Scalar>),
}

impl From<Scalar> for Value {
    fn from(v: Scalar) -> Self {
        Value::Scalar(v)
    }
}

impl From<Vec<Scalar>> for Value {
    fn from(v: Vec<Scalar>) -> Self {
        Value::List(v)
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Scalar(Scalar::from(v))
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::from(i64::from(v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Outcome {
    Checked { lhs: Value, rhs: Value },
    Skipped { reason: String },
}

impl Outcome {
    pub fn passed(&self) -> Option<bool> {
        match self {
            Outcome::Checked { lhs, rhs } => Some(lhs == rhs),
            Outcome::Skipped { .. } => None,
        }
    }
}

fn check(lhs: impl Into<Value>, rhs: impl Into<Value>) -> Result<Outcome> {
    Ok(Outcome::Checked { lhs: lhs.into(), rhs: rhs.into() })
}

fn skip(reason: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome::Skipped { reason: reason.into() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Core,
    Hockey,
    Convolution,
    Catalan,
    Sl2,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["core", "hockey", "convolution", "catalan", "sl2", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Hockey => "hockey",
            Suite::Convolution => "convolution",
            Suite::Catalan => "catalan",
            Suite::Sl2 => "sl2",
            Suite::All => "all",
        }
    }

    pub fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [Suite::Core, Suite::Hockey, Suite::Convolution, Suite::Catalan, Suite::Sl2, Suite::All]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "suite", name: s.to_string() })
    }
}

type Generate = fn(&mut Rng, usize) -> Vec<Params>;
type Evaluate = fn(&Params) -> Result<Outcome>;

pub struct FamilyDef {
    pub name: &'static str,
    pub suite: Suite,
    pub normative: bool,
    pub grid: &'static str,
    pub generate: Generate,
    pub evaluate: Evaluate,
}

pub fn family(name: &str) -> Result<&'static FamilyDef> {
    FAMILIES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::Unknown { kind: "identity family", name: name.to_string() })
}

/// Evaluates one case of a named family.
pub fn check_identity(name: &str, params: &Params) -> Result<Outcome> {
    (family(name)?.evaluate)(params)
}

// ---- generation helpers ----

/// Fixed initial conditions always included where a family samples arrays.
pub const CORPUS: &[&[i64]] = &[
    &[1],
    &[1, -1],
    &[1, 2],
    &[3, -6, 6],
    &[1, 6, 15, 20, 29],
    &[2, 5, 1, -6],
    &[3, 4, -1, -2],
    &[2, 2, -1, -1],
    &[10, -18, 18, -10],
    &[1, 0, -3, 0, 3, 0, -1],
    &[0, 0, 1],
    &[5, -3, 0, 7, -2, 1],
];

fn coeff(rng: &mut Rng) -> i64 {
    rng.gen_range(-9..=9)
}

fn nonzero(rng: &mut Rng) -> i64 {
    let v = rng.gen_range(1..=9);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

fn seq_of(rng: &mut Rng, len: usize) -> Vec<i64> {
    (0..len).map(|_| coeff(rng)).collect()
}

/// Degree exactly `m`.
fn poly(rng: &mut Rng, m: usize) -> Vec<i64> {
    let mut v = seq_of(rng, m);
    v.push(nonzero(rng));
    v
}

fn random_poly(rng: &mut Rng, max_degree: usize) -> Vec<i64> {
    let m = rng.gen_range(0..=max_degree);
    poly(rng, m)
}

/// Palindromic (or skew-palindromic) of degree exactly `m`.
fn symmetric(rng: &mut Rng, m: usize, skew: bool) -> Vec<i64> {
    let mut v = vec![0; m + 1];
    for k in 0..=m / 2 {
        let x = if k == 0 { nonzero(rng) } else { coeff(rng) };
        v[k] = x;
        v[m - k] = if skew { -x } else { x };
    }
    if skew && m.is_multiple_of(2) {
        v[m / 2] = 0;
    }
    v
}

fn corpus_or_random(rng: &mut Rng, i: usize, max_degree: usize) -> Vec<i64> {
    CORPUS.get(i).map_or_else(|| random_poly(rng, max_degree), |c| c.to_vec())
}

fn arr(v: &[i64]) -> BinomialArray {
    BinomialArray::from_ints(v)
}

fn degree_of(v: &[i64]) -> Option<usize> {
    v.iter().rposition(|&x| x != 0)
}

fn sv(v: &[i64]) -> SeqVec {
    SeqVec::from_ints(v)
}

fn grid1(key: &str, range: std::ops::RangeInclusive<i64>) -> Vec<Params> {
    range.map(|v| Params::new().int(key, v)).collect()
}

fn grid2(k1: &str, r1: std::ops::RangeInclusive<i64>, k2: &str, r2: std::ops::RangeInclusive<i64>) -> Vec<Params> {
    r1.flat_map(|a| r2.clone().map(move |b| (a, b))).map(|(a, b)| Params::new().int(k1, a).int(k2, b)).collect()
}

fn flag(b: bool) -> Scalar {
    if b {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

fn sum_range(range: std::ops::RangeInclusive<i64>, f: impl Fn(i64) -> Scalar) -> Scalar {
    range.map(f).sum()
}

/// Coefficients of `(1+x)^n` by repeated multiplication or long division,
/// in machine integers; independent of the factorial route.
fn series_power(n: i64, len: usize) -> Vec<i128> {
    let mut c = vec![0i128; len];
    c[0] = 1;
    for _ in 0..n.unsigned_abs() {
        if n > 0 {
            for k in (1..len).rev() {
                c[k] += c[k - 1];
            }
        } else {
            for k in 1..len {
                c[k] -= c[k - 1];
            }
        }
    }
    c
}

fn shift_series(a: &[i64], n: i64, len: usize) -> Vec<i128> {
    let mut c: Vec<i128> = (0..len).map(|i| a.get(i).copied().unwrap_or(0) as i128).collect();
    for _ in 0..n.unsigned_abs() {
        if n > 0 {
            for k in (1..len).rev() {
                c[k] += c[k - 1];
            }
        } else {
            for k in 1..len {
                c[k] -= c[k - 1];
            }
        }
    }
    c
}

fn big(v: i128) -> Scalar {
    Scalar::from_integer(v.into())
}

// ---- core ----

fn gen_binomial_pascal(_: &mut Rng, _: usize) -> Vec<Params> {
    grid2("n", -20..=20, "k", 0..=40)
}

fn eval_binomial_pascal(p: &Params) -> Result<Outcome> {
    let (n, k) = (p.get_int("n")?, p.get_int("k")?);
    check(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k))
}

fn gen_binomial_negation(_: &mut Rng, _: usize) -> Vec<Params> {
    grid2("n", 1..=15, "k", 0..=15)
}

fn eval_binomial_negation(p: &Params) -> Result<Outcome> {
    let (n, k) = (p.get_int("n")?, p.get_int("k")?);
    check(binomial(-n, k), Scalar::sign_power(k) * binomial(n + k - 1, k))
}

fn gen_binomial_series(_: &mut Rng, _: usize) -> Vec<Params> {
    grid2("n", -12..=12, "k", 0..=16)
}

fn eval_binomial_series(p: &Params) -> Result<Outcome> {
    let (n, k) = (p.get_int("n")?, p.get_int("k")?);
    check(binomial(n, k), big(series_power(n, k as usize + 1)[k as usize]))
}

fn gen_catalan_routes(_: &mut Rng, _: usize) -> Vec<Params> {
    grid1("t", 0..=30)
}

fn eval_catalan_routes(p: &Params) -> Result<Outcome> {
    let t = p.get_int("t")? as u64;
    check(Scalar::from_integer(catalan_segner(t)), catalan_closed_form(t))
}

fn gen_array_cell(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases)
        .map(|i| {
            Params::new()
                .seq("a", corpus_or_random(rng, i, 6))
                .int("k", rng.gen_range(0..=24))
                .int("n", rng.gen_range(-12..=12))
        })
        .collect()
}

fn eval_entry_fill(p: &Params) -> Result<Outcome> {
    let a = arr(p.get_seq("a")?);
    let (k, n) = (p.get_int("k")?, p.get_int("n")?);
    let w = a.window(0, 24, -12, 12)?;
    check(a.entry(k, n), w.get(k as u64, n).clone())
}

fn eval_pascal_recurrence(p: &Params) -> Result<Outcome> {
    let a = arr(p.get_seq("a")?);
    let (k, n) = (p.get_int("k")?, p.get_int("n")?);
    check(a.entry(k, n + 1), a.entry(k - 1, n) + a.entry(k, n))
}

fn gen_shift(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases)
        .map(|i| {
            Params::new()
                .seq("a", corpus_or_random(rng, i, 6))
                .int("t1", rng.gen_range(-6..=6))
                .int("t2", rng.gen_range(-6..=6))
                .int("k", rng.gen_range(0..=12))
                .int("n", rng.gen_range(-8..=8))
        })
        .collect()
}

fn eval_shift_composition(p: &Params) -> Result<Outcome> {
    let a = arr(p.get_seq("a")?);
    let (t1, t2, k, n) = (p.get_int("t1")?, p.get_int("t2")?, p.get_int("k")?, p.get_int("n")?);
    let once = a.shift_origin(t1 + t2);
    let twice = a.shift_origin(t1).shift_origin(t2);
    check(once.entry(k, n), twice.entry(k, n))
}

fn eval_shift_entry(p: &Params) -> Result<Outcome> {
    let a = arr(p.get_seq("a")?);
    let (t1, k, n) = (p.get_int("t1")?, p.get_int("k")?, p.get_int("n")?);
    check(a.shift_origin(t1).entry(k, n), a.entry(k, n + t1))
}

fn eval_pascal_decomposition(p: &Params) -> Result<Outcome> {
    let seq = p.get_seq("a")?;
    let a = arr(seq);
    let (k, n) = (p.get_int("k")?, p.get_int("n")?);
    let decomposed = seq
        .iter()
        .enumerate()
        .take(k.max(-1).saturating_add(1) as usize)
        .map(|(i, &c)| Scalar::from(c) * pascal_basis(i).entry(k, n))
        .sum::<Scalar>();
    check(a.entry(k, n), decomposed)
}

fn gen_linear(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases)
        .map(|_| {
            Params::new()
                .seq("a", random_poly(rng, 5))
                .seq("b", random_poly(rng, 5))
                .int("r", coeff(rng))
                .int("s", coeff(rng))
                .int("t", rng.gen_range(-3..=0))
                .int("k", rng.gen_range(0..=12))
                .int("n", rng.gen_range(-8..=8))
        })
        .collect()
}

fn eval_linear_combination(p: &Params) -> Result<Outcome> {
    let a = arr(p.get_seq("a")?);
    let b = arr(p.get_seq("b")?).shift_origin(p.get_int("t")?);
    let (r, s) = (Scalar::from(p.get_int("r")?), Scalar::from(p.get_int("s")?));
    let (k, n) = (p.get_int("k")?, p.get_int("n")?);
    let c = linear_combination(&[(r.clone(), &a), (s.clone(), &b)])?;
    check(c.entry(k, n), r * a.entry(k, n) + s * b.entry(k, n))
}

fn gen_poly_index(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases)
        .map(|i| {
            let a = corpus_or_random(rng, i, 6);
            let m = degree_of(&a).unwrap_or(0) as i64;
            Params::new().seq("a", a).int("j", rng.gen_range(0..=m))
        })
        .collect()
}

fn eval_diff_table_reconstruction(p: &Params) -> Result<Outcome> {
    let seq = p.get_seq("a")?;
    let j = p.get_int("j")? as usize;
    let t = diff_table(&arr(seq))?;
    let m = t.degree;
    check(t.reconstruct()[j].clone(), Scalar::from(seq[m - j]))
}

fn eval_diff_table_array(p: &Params) -> Result<Outcome> {
    let a = arr(p.get_seq("a")?);
    let t = diff_table(&a)?;
    let j = p.get_int("j")? as usize;
    let col: Vec<Scalar> = (0..t.columns[j].len()).map(|k| a.entry(k as i64, -(j as i64))).collect();
    check(t.columns[j].clone(), col)
}

fn eval_taylor(p: &Params) -> Result<Outcome> {
    let seq = p.get_seq("a")?;
    if seq[0] == 0 {
        return skip("a_0 = 0 lowers the degree of p*");
    }
    let j = p.get_int("j")?;
    let taylor = taylor_at_minus_one(&InitialSequence::from_ints(seq))?;
    let star: Vec<i64> = seq[..=degree_of(seq).unwrap_or(0)].iter().rev().copied().collect();
    let m = star.len() as i64 - 1;
    check(taylor[j as usize].clone(), arr(&star).entry(m - j, -j - 1))
}

fn gen_poly_cell(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases)
        .map(|i| {
            Params::new()
                .seq("a", corpus_or_random(rng, i, 6))
                .int("k", rng.gen_range(0..=12))
                .int("n", rng.gen_range(-10..=10))
        })
        .collect()
}

fn eval_reverse_involution(p: &Params) -> Result<Outcome> {
    let seq = p.get_seq("a")?;
    if seq[0] == 0 {
        return skip("a_0 = 0");
    }
    let a = arr(seq);
    let (k, n) = (p.get_int("k")?, p.get_int("n")?);
    check(reverse_involution(&reverse_involution(&a)?)?.entry(k, n), a.entry(k, n))
}

fn eval_reverse_columns(p: &Params) -> Result<Outcome> {
    let a = arr(p.get_seq("a")?);
    let m = a.degree()? as i64;
    let (k, n) = (p.get_int("k")?, p.get_int("n")?.abs());
    if k > n + m {
        return skip("row below the column's support");
    }
    check(reverse_involution(&a)?.entry(k, n), a.entry(n + m - k, n))
}

fn eval_trapezoid_involution(p: &Params) -> Result<Outcome> {
    let seq = p.get_seq("a")?;
    if InitialSequence::from_ints(seq).eval(&Scalar::from(-1)).is_zero() {
        return skip("p(-1) = 0");
    }
    let a = arr(seq);
    let (k, n) = (p.get_int("k")?, p.get_int("n")?);
    let twice = trapezoid_interchange(&trapezoid_interchange(&a)?)?;
    check(twice.entry(k, n), a.entry(k, n))
}

fn eval_trapezoid_reflection(p: &Params) -> Result<Outcome> {
    let a = arr(p.get_seq("a")?);
    let m = a.degree()? as i64;
    let (k, n) = (p.get_int("k")?, p.get_int("n")?);
    let (k, n) = (k.rem_euclid(m + 2), -1 - n.rem_euclid(m + 1));
    let t = trapezoid_interchange(&a)?;
    check(t.entry(k, k - n - m - 1), Scalar::sign_power(k) * a.entry(k, n))
}

fn eval_border(p: &Params) -> Result<Outcome> {
    let a = arr(p.get_seq("a")?);
    let m = a.degree()? as i64;
    let b = border_profile(&a)?;
    let j = p.get_int("k")?;
    let n = p.get_int("n")?;
    check(vec![a.entry(0, n), a.entry(m + j, j), a.entry(m + j, -1).abs()], vec![b.top, b.diag, b.col_minus_one_abs])
}

// ---- hockey ----

/// `0` selects a random polynomial array, `1` the Catalan prefix.
const CATALAN_PREFIX: usize = 40;

fn hockey_array(p: &Params) -> Result<BinomialArray> {
    if p.get_int("catalan_prefix").is_ok() {
        let c: Vec<Scalar> = (0..CATALAN_PREFIX as u64).map(catalan).collect();
        return Ok(BinomialArray::new(InitialSequence::new(c)));
    }
    Ok(arr(p.get_seq("a")?))
}

fn gen_hockey(rng: &mut Rng, cases: usize, rule: RuleId) -> Vec<Params> {
    (0..cases)
        .map(|i| {
            let non_poly = !rule.needs_degree() && i % 5 == 4;
            let a = corpus_or_random(rng, if non_poly { usize::MAX } else { i }, 4);
            let m = degree_of(&a).unwrap_or(0) as i64;
            let base = if non_poly { Params::new().int("catalan_prefix", 1) } else { Params::new().seq("a", a) };
            let n = rng.gen_range(-10..=10);
            let npos = rng.gen_range(1..=10);
            let k = rng.gen_range(0..=12);
            let k1 = rng.gen_range(1..=6);
            let k2 = k1 + rng.gen_range(1..=6);
            match rule {
                RuleId::TopLine | RuleId::LowerRight => base.int("k", k).int("n", n),
                RuleId::TopLineShort | RuleId::LowerRightShort => base.int("k1", k1).int("k2", k2).int("n", n),
                RuleId::RhsRow | RuleId::LhsDiagonal => base.int("k", m + rng.gen_range(1..=8)).int("n", npos),
                RuleId::LhsRow => base.int("k", m + rng.gen_range(0..=8)).int("n", npos),
                RuleId::RhsColumn => base.int("k", rng.gen_range(0..=m + npos)).int("n", npos),
                RuleId::ThirdShort => base.int("k", k.min(10)).int("n1", n).int("n2", n + rng.gen_range(1..=8)),
            }
        })
        .collect()
}

fn eval_hockey(p: &Params, rule: RuleId) -> Result<Outcome> {
    let a = hockey_array(p)?;
    let params = rule.params().iter().map(|k| p.get_int(k)).collect::<Result<Vec<_>>>()?;
    match rule_sum(&a, rule, &params) {
        Ok(out) => check(out.sum, out.target),
        Err(Error::NotApplicable { hypothesis, .. }) => skip(hypothesis),
        Err(e) => Err(e),
    }
}

macro_rules! hockey_family {
    ($gen:ident, $eval:ident, $rule:expr) => {
        fn $gen(rng: &mut Rng, cases: usize) -> Vec<Params> {
            gen_hockey(rng, cases, $rule)
        }
        fn $eval(p: &Params) -> Result<Outcome> {
            eval_hockey(p, $rule)
        }
    };
}

hockey_family!(gen_h_top, eval_h_top, RuleId::TopLine);
hockey_family!(gen_h_top_short, eval_h_top_short, RuleId::TopLineShort);
hockey_family!(gen_h_lower, eval_h_lower, RuleId::LowerRight);
hockey_family!(gen_h_lower_short, eval_h_lower_short, RuleId::LowerRightShort);
hockey_family!(gen_h_rhs_row, eval_h_rhs_row, RuleId::RhsRow);
hockey_family!(gen_h_rhs_col, eval_h_rhs_col, RuleId::RhsColumn);
hockey_family!(gen_h_lhs_row, eval_h_lhs_row, RuleId::LhsRow);
hockey_family!(gen_h_lhs_diag, eval_h_lhs_diag, RuleId::LhsDiagonal);
hockey_family!(gen_h_third, eval_h_third, RuleId::ThirdShort);

fn gen_top_line_iteration(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases).map(|i| Params::new().seq("a", corpus_or_random(rng, i, 4)).int("n", rng.gen_range(-8..=8))).collect()
}

fn eval_top_line_iteration(p: &Params) -> Result<Outcome> {
    let a = arr(p.get_seq("a")?);
    let n = p.get_int("n")?;
    let rebuilt =
        (0..=12).map(|k| rule_sum(&a, RuleId::TopLine, &[k, n]).map(|o| o.sum)).collect::<Result<Vec<_>>>()?;
    let inverse = inverse_transform(&SeqVec::new(a.column(n, 13)), 1);
    check(rebuilt, inverse.into_vec())
}

// ---- convolution ----

fn gen_pairs(rng: &mut Rng, cases: usize, max_m: usize, max_shift: i64) -> Vec<Params> {
    (0..cases)
        .map(|_| {
            let m = rng.gen_range(0..=max_m);
            Params::new()
                .seq("a", seq_of(rng, m + 1))
                .seq("b", seq_of(rng, m + 1))
                .int("m", m as i64)
                .int("n", rng.gen_range(-max_shift..=max_shift))
        })
        .collect()
}

fn gen_dwyer_frankel(rng: &mut Rng, cases: usize) -> Vec<Params> {
    gen_pairs(rng, cases, 24, 8)
}

fn eval_dwyer_frankel(p: &Params) -> Result<Outcome> {
    let c = dwyer_frankel_check(&sv(p.get_seq("a")?), &sv(p.get_seq("b")?), p.get_int("n")?, p.get_int("m")? as usize)?;
    check(c.lhs, c.rhs)
}

fn eval_dwyer_frankel_oracle(p: &Params) -> Result<Outcome> {
    let (a, b) = (p.get_seq("a")?, p.get_seq("b")?);
    let (n, m) = (p.get_int("n")?, p.get_int("m")? as usize);
    let (x, y) = (shift_series(a, n, m + 1), shift_series(b, -n, m + 1));
    let oracle: i128 = (0..=m).map(|i| x[i] * y[m - i]).sum();
    let c = dwyer_frankel_check(&sv(a), &sv(b), n, m)?;
    check(c.lhs, big(oracle))
}

fn gen_triples(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases)
        .map(|_| {
            let m = rng.gen_range(0..=16);
            Params::new()
                .seq("a", seq_of(rng, m + 1))
                .seq("b", seq_of(rng, m + 1))
                .seq("c", seq_of(rng, m + 1))
                .int("m", m as i64)
                .int("r", coeff(rng))
        })
        .collect()
}

fn eval_cauchy_commutative(p: &Params) -> Result<Outcome> {
    let (a, b, m) = (sv(p.get_seq("a")?), sv(p.get_seq("b")?), p.get_int("m")? as usize);
    check(cauchy_product(&a, &b, m)?, cauchy_product(&b, &a, m)?)
}

fn eval_cauchy_associative(p: &Params) -> Result<Outcome> {
    let (a, b, c) = (sv(p.get_seq("a")?), sv(p.get_seq("b")?), sv(p.get_seq("c")?));
    let m = p.get_int("m")? as usize;
    check(cauchy_product(&convolve(&a, &b), &c, m)?, cauchy_product(&a, &convolve(&b, &c), m)?)
}

fn eval_cauchy_bilinear(p: &Params) -> Result<Outcome> {
    let (a, b, c) = (sv(p.get_seq("a")?), sv(p.get_seq("b")?), sv(p.get_seq("c")?));
    let (m, r) = (p.get_int("m")? as usize, Scalar::from(p.get_int("r")?));
    let combo = SeqVec::new(a.as_slice().iter().zip(b.as_slice()).map(|(x, y)| &r * x + y).collect());
    check(cauchy_product(&combo, &c, m)?, r.clone() * cauchy_product(&a, &c, m)? + cauchy_product(&b, &c, m)?)
}

fn eval_cauchy_unit(p: &Params) -> Result<Outcome> {
    let (b, m) = (sv(p.get_seq("b")?), p.get_int("m")? as usize);
    check(cauchy_product(&SeqVec::unit(0, m + 1), &b, m)?, b[m].clone())
}

fn gen_t_powers(_: &mut Rng, _: usize) -> Vec<Params> {
    let mut out = Vec::new();
    for n1 in -6..=6 {
        for n2 in -6..=6 {
            for k in 0..=11 {
                out.push(Params::new().int("n1", n1).int("n2", n2).int("k", k));
            }
        }
    }
    out
}

fn eval_t_powers(p: &Params) -> Result<Outcome> {
    let (n1, n2, k) = (p.get_int("n1")?, p.get_int("n2")?, p.get_int("k")? as usize);
    check(cauchy_product(&t_sequence(n1, k + 1), &t_sequence(n2, k + 1), k)?, t_sequence(n1 + n2, k + 1)[k].clone())
}

fn gen_prefix_shift(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases)
        .map(|_| {
            let len = rng.gen_range(1..=14);
            Params::new().seq("a", seq_of(rng, len)).int("n", rng.gen_range(0..=8))
        })
        .collect()
}

fn eval_inverse_forward(p: &Params) -> Result<Outcome> {
    let (a, n) = (sv(p.get_seq("a")?), p.get_int("n")? as u64);
    check(inverse_transform(&forward_transform(&a, n), n).into_vec(), a.into_vec())
}

fn eval_forward_inverse(p: &Params) -> Result<Outcome> {
    let (a, n) = (sv(p.get_seq("a")?), p.get_int("n")? as u64);
    check(forward_transform(&inverse_transform(&a, n), n).into_vec(), a.into_vec())
}

fn eval_transform_oracle(p: &Params) -> Result<Outcome> {
    let a = p.get_seq("a")?;
    let n = p.get_int("n")?;
    let n = if n % 2 == 0 { n } else { -n };
    let oracle = shift_series(a, n, a.len()).into_iter().map(big).collect::<Vec<_>>();
    check(transform(&sv(a), n).into_vec(), oracle)
}

fn gen_vandermonde(rng: &mut Rng, cases: usize) -> Vec<Params> {
    gen_pairs(rng, cases, 10, 6)
}

fn eval_vandermonde(p: &Params) -> Result<Outcome> {
    let (a, b) = (sv(p.get_seq("a")?), sv(p.get_seq("b")?));
    let (m, n) = (p.get_int("m")? as usize, p.get_int("n")?);
    let cols = vandermonde_expand(&a, &b, m, n..=n)?;
    check(cols[0].dot.clone(), cauchy_product(&a, &b, m)?)
}

fn gen_multi(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases)
        .map(|_| {
            let m = rng.gen_range(0..=12);
            Params::new()
                .seq("a", seq_of(rng, m + 1))
                .seq("b", seq_of(rng, m + 1))
                .seq("c", seq_of(rng, m + 1))
                .seq("shifts", (0..3).map(|_| rng.gen_range(-4..=4)).collect())
                .int("m", m as i64)
        })
        .collect()
}

fn eval_multi(p: &Params) -> Result<Outcome> {
    let seqs = [sv(p.get_seq("a")?), sv(p.get_seq("b")?), sv(p.get_seq("c")?)];
    let shifts = p.get_seq("shifts")?;
    let m = p.get_int("m")? as usize;
    let shifted =
        seqs.iter().zip(shifts).map(|(s, &n)| transform(s, n)).reduce(|x, y| convolve(&x, &y)).expect("three factors");
    let product = seqs.iter().cloned().reduce(|x, y| convolve(&x, &y)).expect("three factors");
    check(shifted[m].clone(), transform(&product, shifts.iter().sum())[m].clone())
}

fn gen_zero_product(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases)
        .map(|_| {
            let m = rng.gen_range(1..=10);
            let mut a = seq_of(rng, m + 1);
            a[m] = 1;
            let mut b = seq_of(rng, m + 1);
            // b_0 chosen so that (a*b)_m = 0
            b[0] = -(0..m).map(|i| a[i] * b[m - i]).sum::<i64>();
            Params::new().seq("a", a).seq("b", b).int("m", m as i64).int("n", rng.gen_range(-8..=8))
        })
        .collect()
}

fn eval_zero_propagation(p: &Params) -> Result<Outcome> {
    let (a, b) = (sv(p.get_seq("a")?), sv(p.get_seq("b")?));
    let (m, n) = (p.get_int("m")? as usize, p.get_int("n")?);
    if !cauchy_product(&a, &b, m)?.is_zero() {
        return skip("(a*b)_m != 0");
    }
    check(dwyer_frankel_check(&a, &b, n, m)?.lhs, 0)
}

const ZERO_ARRAYS: &[&[i64]] = &[&[1, -1], &[1, 2], &[1, -2], &[2, -3], &[1, 0, 0, -1], &[10, -18, 18, -10]];

fn gen_entry_zero(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases)
        .map(|_| {
            let a = ZERO_ARRAYS[rng.gen_range(0..ZERO_ARRAYS.len())].to_vec();
            // scan for a proper zero of this array
            let array = arr(&a);
            let m = a.len() as i64 - 1;
            let zeros: Vec<(i64, i64)> = (1..=8)
                .flat_map(|k| (-12..=16).map(move |n| (k, n)))
                .filter(|&(k, n)| is_proper(k, n, m) && array.entry(k, n).is_zero())
                .collect();
            let (k, n) = zeros[rng.gen_range(0..zeros.len())];
            Params::new().seq("a", a).int("k", k).int("n", n).int("l", rng.gen_range(-6..=6))
        })
        .collect()
}

fn eval_entry_zero(p: &Params) -> Result<Outcome> {
    let a = arr(p.get_seq("a")?);
    let (k, n, l) = (p.get_int("k")?, p.get_int("n")?, p.get_int("l")?);
    if !a.entry(k, n).is_zero() {
        return skip("entry is not zero");
    }
    check(sum_range(0..=k, |i| binomial(l, i) * a.entry(k - i, n - l)), 0)
}

fn gen_diagonal(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases)
        .map(|_| {
            Params::new()
                .seq("a", random_poly(rng, 4))
                .seq("b", random_poly(rng, 4))
                .int("m", rng.gen_range(0..=6))
                .int("r", rng.gen_range(-5..=5))
                .int("s", rng.gen_range(-5..=5))
                .int("t", rng.gen_range(-5..=5))
        })
        .collect()
}

fn eval_diagonal(p: &Params) -> Result<Outcome> {
    let (a, b) = (arr(p.get_seq("a")?), arr(p.get_seq("b")?));
    let (base, shifted) = crate::transform::diagonal_convolution(
        &a,
        &b,
        p.get_int("m")? as usize,
        p.get_int("r")?,
        p.get_int("s")?,
        p.get_int("t")?,
    );
    check(base, shifted)
}

fn gen_split(rng: &mut Rng, cases: usize) -> Vec<Params> {
    gen_pairs(rng, cases, 12, 6)
}

fn eval_split_even(p: &Params) -> Result<Outcome> {
    let c = split_power_check(
        &sv(p.get_seq("a")?),
        &sv(p.get_seq("b")?),
        p.get_int("n")?,
        false,
        p.get_int("m")? as usize,
    )?;
    check(c.lhs, c.rhs)
}

fn eval_split_odd(p: &Params) -> Result<Outcome> {
    let c =
        split_power_check(&sv(p.get_seq("a")?), &sv(p.get_seq("b")?), p.get_int("n")?, true, p.get_int("m")? as usize)?;
    check(c.lhs, c.rhs)
}

// ---- catalan: classical and degree-one columns ----

fn gen_chu(_: &mut Rng, _: usize) -> Vec<Params> {
    let mut out = Vec::new();
    for m in -10..=10 {
        for n in -10..=10 {
            for k in 0..=12 {
                out.push(Params::new().int("m", m).int("n", n).int("k", k));
            }
        }
    }
    out
}

fn chu_sum(p: &Params) -> Result<(i64, i64, i64, Scalar)> {
    let (m, n, k) = (p.get_int("m")?, p.get_int("n")?, p.get_int("k")?);
    Ok((m, n, k, sum_range(0..=k, |i| binomial(m, i) * binomial(n, k - i))))
}

fn eval_chu_oracle(p: &Params) -> Result<Outcome> {
    let (m, n, k, sum) = chu_sum(p)?;
    let len = k as usize + 1;
    let (x, y) = (series_power(m, len), series_power(n, len));
    let oracle: i128 = (0..len).map(|i| x[i] * y[len - 1 - i]).sum();
    check(sum, big(oracle))
}

fn eval_chu_closed(p: &Params) -> Result<Outcome> {
    let (m, n, k, sum) = chu_sum(p)?;
    check(sum, binomial(m + n, k))
}

fn gen_n12(_: &mut Rng, _: usize) -> Vec<Params> {
    grid1("n", 0..=12)
}

fn eval_classical_squares(p: &Params) -> Result<Outcome> {
    let n = p.get_int("n")?;
    check(sum_range(0..=n, |i| binomial(n, i) * binomial(n, i)), binomial(2 * n, n))
}

fn eval_classical_adjacent(p: &Params) -> Result<Outcome> {
    let n = p.get_int("n")?;
    check(sum_range(0..=n, |i| binomial(n, i) * binomial(n + 1, i)), binomial(2 * n + 1, n))
}

fn gen_poly_column(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases).map(|i| Params::new().seq("a", corpus_or_random(rng, i, 5)).int("n", rng.gen_range(0..=8))).collect()
}

fn square_expansion(a: &[i64], top: i64, index: i64) -> Scalar {
    let m = a.len() as i64 - 1;
    let mut total = Scalar::zero();
    for i in 0..=m {
        for j in i..=m {
            let weight = if i == j { 1 } else { 2 };
            total += binomial(top, index - i - j) * Scalar::from(weight * a[i as usize] * a[j as usize]);
        }
    }
    total
}

fn eval_column_self_conv(p: &Params) -> Result<Outcome> {
    let seq = p.get_seq("a")?;
    let seq = &seq[..=degree_of(seq).unwrap_or(0)];
    let (a, m, n) = (arr(seq), seq.len() as i64 - 1, p.get_int("n")?);
    let lhs = sum_range(0..=n + m, |i| a.entry(i, n) * a.entry(n + m - i, n));
    check(lhs, square_expansion(seq, 2 * n, n + m))
}

fn eval_adjacent_conv(p: &Params) -> Result<Outcome> {
    let seq = p.get_seq("a")?;
    let seq = &seq[..=degree_of(seq).unwrap_or(0)];
    let (a, m, n) = (arr(seq), seq.len() as i64 - 1, p.get_int("n")?);
    let lhs = sum_range(0..=n + m + 1, |i| a.entry(i, n) * a.entry(n + m + 1 - i, n + 1));
    check(lhs, square_expansion(seq, 2 * n + 1, n + m + 1))
}

fn gen_degree_one(_: &mut Rng, _: usize) -> Vec<Params> {
    let mut out = Vec::new();
    for r in -4..=4 {
        for s in -4..=4 {
            if r == 0 || s == 0 {
                continue;
            }
            for n in 1..=12 {
                out.push(Params::new().int("r", r).int("s", s).int("n", n));
            }
        }
    }
    out
}

fn eval_degree_one_self(p: &Params) -> Result<Outcome> {
    let (r, s, n) = (p.get_int("r")?, p.get_int("s")?, p.get_int("n")?);
    let a = arr(&[r, s]);
    let lhs = sum_range(0..=n + 1, |i| a.entry(i, n) * a.entry(n + 1 - i, n));
    check(lhs, Scalar::from((r + s) * (r + s) * n + 2 * r * s) * catalan(n as u64))
}

fn eval_degree_one_adjacent(p: &Params) -> Result<Outcome> {
    let (r, s, n) = (p.get_int("r")?, p.get_int("s")?, p.get_int("n")?);
    let a = arr(&[r, s]);
    let lhs = sum_range(0..=n + 2, |i| a.entry(i, n) * a.entry(n + 2 - i, n + 1));
    let rhs = Scalar::from((r + s) * (r + s) * n + 4 * r * s + 2 * s * s) / Scalar::from(2) * catalan(n as u64 + 1);
    check(lhs, rhs)
}

fn gen_parity(_: &mut Rng, _: usize) -> Vec<Params> {
    grid1("n", 1..=64)
}

fn eval_parity(p: &Params) -> Result<Outcome> {
    let n = p.get_int("n")?;
    let odd = catalan(n as u64).numerator().bit(0);
    check(flag(odd), flag((n + 1).count_ones() == 1))
}

// ---- catalan: B(1-x) and B(1+2x) ----

fn catalan_array() -> BinomialArray {
    arr(&[1, -1])
}

fn reflected_array() -> BinomialArray {
    arr(&[1, 2])
}

fn gen_kn15(_: &mut Rng, _: usize) -> Vec<Params> {
    grid2("n", 1..=15, "k", 1..=15)
}

fn eval_b1minusx_difference(p: &Params) -> Result<Outcome> {
    let (n, k) = (p.get_int("n")?, p.get_int("k")?);
    let n = n - 8;
    check(catalan_array().entry(k, n), binomial(n, k) - binomial(n, k - 1))
}

fn eval_b1minusx_ratio(p: &Params) -> Result<Outcome> {
    let (n, k) = (p.get_int("n")?, p.get_int("k")?);
    if k > n {
        return skip("k > n");
    }
    check(catalan_array().entry(k, n), Scalar::from(n - 2 * k + 1) / Scalar::from(n - k + 1) * binomial(n, k))
}

fn b1minusx_negative_closed_form(n: i64, k: i64) -> Scalar {
    if n == 1 {
        Scalar::sign_power(k + 1) * Scalar::from(2)
    } else {
        Scalar::sign_power(k) * Scalar::from(-n - 2 * k + 1) / Scalar::from(n - 1) * binomial(n + k - 2, k)
    }
}

fn eval_b1minusx_negative_literal(p: &Params) -> Result<Outcome> {
    let (n, k) = (p.get_int("n")?, p.get_int("k")?);
    check(catalan_array().entry(k, -n), b1minusx_negative_closed_form(n, k))
}

fn eval_b1minusx_negative_flipped(p: &Params) -> Result<Outcome> {
    let (n, k) = (p.get_int("n")?, p.get_int("k")?);
    check(catalan_array().entry(k, -n), -b1minusx_negative_closed_form(n, k))
}

fn eval_b1plus2x_positive(p: &Params) -> Result<Outcome> {
    let (n, k) = (p.get_int("n")?, p.get_int("k")?);
    let b = reflected_array();
    let sum_form = binomial(n, k) + Scalar::from(2) * binomial(n, k - 1);
    if k > n {
        return check(b.entry(k, n), sum_form);
    }
    let ratio = Scalar::from(n + k + 1) / Scalar::from(n - k + 1) * binomial(n, k);
    check(vec![b.entry(k, n), b.entry(k, n)], vec![sum_form, ratio])
}

fn eval_b1plus2x_negative(p: &Params) -> Result<Outcome> {
    let (n, k) = (p.get_int("n")?, p.get_int("k")?);
    let b = reflected_array();
    let bracket = Scalar::sign_power(k) * (binomial(n + k - 1, k) - Scalar::from(2) * binomial(n + k - 2, k - 1));
    let ratio = Scalar::sign_power(k) * Scalar::from(n - k - 1) / Scalar::from(n + k - 1) * binomial(n + k - 1, k);
    check(vec![b.entry(k, -n), b.entry(k, -n)], vec![bracket, ratio])
}

fn gen_reflected_cells(_: &mut Rng, _: usize) -> Vec<Params> {
    grid2("k", 1..=15, "n", -18..=15)
}

fn eval_reflected_zeros(p: &Params) -> Result<Outcome> {
    let (k, n) = (p.get_int("k")?, p.get_int("n")?);
    if !is_proper(k, n, 1) {
        return skip("border cell");
    }
    check(flag(reflected_array().entry(k, n).is_zero()), flag(n == -k - 1))
}

fn gen_t15(_: &mut Rng, _: usize) -> Vec<Params> {
    grid1("t", 1..=15)
}

fn eval_reflected_left_of_zero(p: &Params) -> Result<Outcome> {
    let t = p.get_int("t")?;
    check(reflected_array().entry(t, -t - 2), Scalar::sign_power(t) * catalan(t as u64))
}

fn gen_t12(_: &mut Rng, _: usize) -> Vec<Params> {
    grid1("t", 1..=12)
}

fn eval_catalan_near_zero(p: &Params) -> Result<Outcome> {
    let t = p.get_int("t")?;
    check(catalan_array().entry(t, 2 * t), catalan(t as u64))
}

fn gen_nl(_: &mut Rng, _: usize) -> Vec<Params> {
    grid2("n", 0..=12, "l", -4..=4)
}

fn eval_column_squares(p: &Params) -> Result<Outcome> {
    let n = p.get_int("n")?;
    let a = catalan_array();
    check(sum_range(0..=n / 2, |i| a.entry(i, n) * a.entry(i, n)), catalan(n as u64))
}

fn eval_column_convolution(p: &Params) -> Result<Outcome> {
    let (n, l) = (p.get_int("n")?, p.get_int("l")?);
    let a = catalan_array();
    let s = sum_range(0..=n + 1, |i| a.entry(i, n - l) * a.entry(n + 1 - i, n + l));
    check(-s / Scalar::from(2), catalan(n as u64))
}

fn eval_adjacent_convolution(p: &Params) -> Result<Outcome> {
    let (n, l) = (p.get_int("n")?, p.get_int("l")?);
    let a = catalan_array();
    let s = sum_range(0..=n + 1, |i| a.entry(i, n - l) * a.entry(n + 1 - i, n + l + 1));
    check(-s, catalan(n as u64 + 1))
}

fn eval_b1plus2x_squares_literal(p: &Params) -> Result<Outcome> {
    let n = p.get_int("n")?;
    let b = reflected_array();
    check(sum_range(0..=n + 1, |i| b.entry(i, n) * b.entry(i, n)), Scalar::from(9 * n + 4) * catalan(n as u64))
}

fn eval_b1plus2x_convolution(p: &Params) -> Result<Outcome> {
    let (n, l) = (p.get_int("n")?, p.get_int("l")?);
    let b = reflected_array();
    let s = sum_range(0..=n + 1, |i| b.entry(i, n - l) * b.entry(n + 1 - i, n + l));
    check(s, Scalar::from(9 * n + 4) * catalan(n as u64))
}

fn b1plus2x_adjacent(p: &Params, top: i64) -> Result<Outcome> {
    let (n, l) = (p.get_int("n")?, p.get_int("l")?);
    let b = reflected_array();
    let index = n + top;
    let s = sum_range(0..=index, |i| b.entry(i, n - l) * b.entry(index - i, n + l + 1));
    check(Scalar::from(2) * s, Scalar::from(9 * n + 16) * catalan(n as u64 + 1))
}

fn eval_b1plus2x_adjacent_n1(p: &Params) -> Result<Outcome> {
    b1plus2x_adjacent(p, 1)
}

fn eval_b1plus2x_adjacent_n2(p: &Params) -> Result<Outcome> {
    b1plus2x_adjacent(p, 2)
}

fn gen_neg_catalan(_: &mut Rng, _: usize) -> Vec<Params> {
    grid2("n", 1..=12, "form", 1..=6)
}

fn eval_neg_catalan(p: &Params) -> Result<Outcome> {
    let (n, form) = (p.get_int("n")?, p.get_int("form")?);
    let b = reflected_array();
    let e = |k: i64, c: i64| b.entry(k, c);
    let half = Scalar::ratio(1, 2)?;
    let (value, target) = match form {
        1 => (-sum_range(0..=2 * n, |i| e(i, -n) * e(2 * n - i, -n)), 2 * n - 1),
        2 => (-(half * sum_range(0..=2 * n, |i| e(i, -n - 1) * e(2 * n - i, -n))), 2 * n - 1),
        3 => (sum_range(0..=2 * n - 1, |i| e(i, -n - 1) * e(2 * n - i - 1, -n)), 2 * n - 1),
        4 => (sum_range(0..=2 * n + 1, |i| e(i, -n) * e(2 * n - i + 1, -n - 1)), 2 * n),
        5 => (half * sum_range(0..=2 * n + 1, |i| e(i, -n - 1) * e(2 * n - i + 1, -n - 1)), 2 * n),
        6 => (-sum_range(0..=2 * n, |i| e(i, -n - 1) * e(2 * n - i, -n - 1)), 2 * n),
        _ => return Err(Error::range("form must be 1..=6")),
    };
    check(value, catalan(target as u64))
}

// ---- catalan: generalized families and zeros ----

fn gen_crs(_: &mut Rng, _: usize) -> Vec<Params> {
    let mut out = Vec::new();
    for r in 1..=5 {
        for s in 1..=5 {
            for t in 1..=8 {
                out.push(Params::new().int("r", r).int("s", s).int("t", t));
            }
        }
    }
    out
}

fn eval_crs_forms(p: &Params) -> Result<Outcome> {
    let (first, second) = generalized_catalan_forms(p.get_int("r")?, p.get_int("s")?, p.get_int("t")?)?;
    check(first, second)
}

fn eval_crs_diagonal(p: &Params) -> Result<Outcome> {
    let (r, t) = (p.get_int("r")?, p.get_int("t")?);
    let (value, _) = generalized_catalan_forms(r, r, t)?;
    check(value, Scalar::from(r) * catalan((r * t) as u64))
}

fn gen_zero_cells(_: &mut Rng, _: usize) -> Vec<Params> {
    let mut out = Vec::new();
    for r in 1..=4 {
        for s in 1..=4 {
            for k in 1..=10 {
                for n in -12..=25 {
                    out.push(Params::new().int("r", r).int("s", s).int("k", k).int("n", n));
                }
            }
        }
    }
    out
}

fn reduced(r: i64, s: i64) -> (i64, i64) {
    let g = num_integer::Integer::gcd(&r, &s);
    (r / g, s / g)
}

fn eval_zeros_right(p: &Params) -> Result<Outcome> {
    let (r, s, k, n) = (p.get_int("r")?, p.get_int("s")?, p.get_int("k")?, p.get_int("n")?);
    if !is_proper(k, n, 1) {
        return skip("border cell");
    }
    let (r0, s0) = reduced(r, s);
    let predicted = k % r0 == 0 && n == (k / r0) * (r0 + s0) - 1;
    check(flag(arr(&[r, -s]).entry(k, n).is_zero()), flag(predicted))
}

fn eval_zeros_left(p: &Params) -> Result<Outcome> {
    let (r, s, k, n) = (p.get_int("r")?, p.get_int("s")?, p.get_int("k")?, p.get_int("n")?);
    if !is_proper(k, n, 1) {
        return skip("border cell");
    }
    let (r0, s0) = reduced(r, s);
    let predicted = r0 < s0 && k % r0 == 0 && n == (k / r0) * (r0 - s0) - 1;
    check(flag(arr(&[r, s]).entry(k, n).is_zero()), flag(predicted))
}

fn gen_zeros_left_literal(_: &mut Rng, _: usize) -> Vec<Params> {
    let mut out = Vec::new();
    for (r, s) in [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4)] {
        for l in -4..=-1 {
            out.push(Params::new().int("r", r).int("s", s).int("l", l));
        }
    }
    out
}

fn eval_zeros_left_literal(p: &Params) -> Result<Outcome> {
    let (r, s, l) = (p.get_int("r")?, p.get_int("s")?, p.get_int("l")?);
    let (k, n) = (l * r, l * (r - s) + 1);
    let proper_zero = is_proper(k, n, 1) && arr(&[r, s]).entry(k, n).is_zero();
    check(flag(proper_zero), 1)
}

fn gen_skew(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases)
        .map(|_| {
            let m = rng.gen_range(1..=7);
            Params::new().seq("d", symmetric(rng, m, true)).int("t", rng.gen_range(0..=10))
        })
        .collect()
}

fn eval_skew_diagonal(p: &Params) -> Result<Outcome> {
    let d = InitialSequence::from_ints(p.get_seq("d")?);
    let t = p.get_int("t")? as u64;
    let locus = skew_diagonal_zeros(&d, t)?;
    let (k, n) = locus.positions[t as usize];
    check(BinomialArray::new(d).entry(k as i64, n), 0)
}

fn gen_skew_odd(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases)
        .map(|_| {
            let mp = rng.gen_range(0..=5);
            Params::new().seq("d", symmetric(rng, 2 * mp + 1, true)).int("t", rng.gen_range(1..=10))
        })
        .collect()
}

fn eval_skew_near_zero(p: &Params) -> Result<Outcome> {
    let seq = p.get_seq("d")?;
    let d = InitialSequence::from_ints(seq);
    let t = p.get_int("t")?;
    let mp = (seq.len() as i64 - 2) / 2;
    check(skew_near_zero(&d, t)?, BinomialArray::new(d).entry(mp + t, 2 * t))
}

fn gen_cg(_: &mut Rng, _: usize) -> Vec<Params> {
    let mut out = Vec::new();
    for m in 2..=12 {
        for k in (1..m).step_by(2) {
            for t in 1..=8 {
                out.push(Params::new().int("m", m).int("k", k).int("t", t));
            }
        }
    }
    out
}

fn cg_args(p: &Params) -> Result<(i64, i64, i64)> {
    Ok((p.get_int("m")?, p.get_int("k")?, p.get_int("t")?))
}

fn eval_cg_scan(p: &Params) -> Result<Outcome> {
    let (m, k, t) = cg_args(p)?;
    check(near_zero_cg(m, k, t)?, near_zero_cg_scan(m, k, t)?)
}

fn eval_cg_alternating(p: &Params) -> Result<Outcome> {
    let (m, k, t) = cg_args(p)?;
    check(near_zero_cg(m, k, t)?, near_zero_cg_alternating(m, k, t)?)
}

fn eval_cg_recurrence(p: &Params) -> Result<Outcome> {
    let (m, k, t) = cg_args(p)?;
    let (num, den) = near_zero_cg_ratio(m, k, t)?;
    if den.is_zero() {
        return skip("denominator vanishes");
    }
    check(near_zero_cg(m, k, t + 1)? * den, near_zero_cg(m, k, t)? * num)
}

fn eval_cg_first(p: &Params) -> Result<Outcome> {
    let (m, k, t) = cg_args(p)?;
    if k == 1 || t != 1 {
        return skip("initial value is stated for k > 1 at t = 1");
    }
    check(near_zero_cg_first(m, k)?, near_zero_cg(m, k, 1)?)
}

fn eval_cg_zero(p: &Params) -> Result<Outcome> {
    let (m, k, t) = cg_args(p)?;
    let a = BinomialArray::new(crate::zeros::cg_initial_condition(m, k)?);
    check(a.entry((k - 1) / 2 + t, 2 * t - 1), 0)
}

fn eval_cg_unit(p: &Params) -> Result<Outcome> {
    let (m, k, t) = cg_args(p)?;
    if k != 1 {
        return skip("k > 1");
    }
    check(near_zero_cg(m, 1, t)?, Scalar::from(m) * catalan(t as u64))
}

fn gen_c_seq(_: &mut Rng, _: usize) -> Vec<Params> {
    let mut out = Vec::new();
    for j in 1..=9 {
        for t in 0..=10 {
            out.push(Params::new().int("j", j).int("t", t));
        }
    }
    out
}

fn eval_c_seq_scan(p: &Params) -> Result<Outcome> {
    let (j, t) = (p.get_int("j")?, p.get_int("t")?);
    if j % 2 == 1 && t == 0 {
        return skip("odd j starts at t = 1");
    }
    let a = BinomialArray::new(crate::zeros::aeration(j, 1)?);
    let (k, n) = c_sequence_position(j, t);
    check(vec![c_sequence(j, t)?, Scalar::zero()], vec![a.entry(k, n), a.entry(k, n - 1)])
}

fn gen_ballot(_: &mut Rng, _: usize) -> Vec<Params> {
    grid2("r", 0..=6, "l", 0..=10)
}

fn eval_ballot_array(p: &Params) -> Result<Outcome> {
    let (r, l) = (p.get_int("r")?, p.get_int("l")?);
    check(ballot_diagonal(r, l)?, catalan_array().entry(l, r + 2 * l))
}

fn eval_ballot_power(p: &Params) -> Result<Outcome> {
    let (r, l) = (p.get_int("r")?, p.get_int("l")?);
    let cat = SeqVec::new((0..=l as u64).map(catalan).collect());
    let mut power = cat.clone();
    for _ in 0..r {
        power = convolve(&power, &cat);
    }
    check(ballot_diagonal(r, l)?, power[l as usize].clone())
}

fn gen_shapiro(_: &mut Rng, _: usize) -> Vec<Params> {
    grid2("n", 2..=12, "k", 1..=12)
}

fn eval_shapiro_recurrence(p: &Params) -> Result<Outcome> {
    let (n, k) = (p.get_int("n")?, p.get_int("k")?);
    if k > n {
        return skip("k > n");
    }
    let e = |n: i64, k: i64| shapiro_entry(n, k).unwrap_or_else(|_| Scalar::zero());
    check(e(n, k), e(n - 1, k - 1) + Scalar::from(2) * e(n - 1, k) + e(n - 1, k + 1))
}

fn gen_shapiro_dot(_: &mut Rng, _: usize) -> Vec<Params> {
    grid2("n", 1..=8, "p", 1..=8)
}

fn eval_shapiro_dot(p: &Params) -> Result<Outcome> {
    let (n, q) = (p.get_int("n")?, p.get_int("p")?);
    let dot =
        sum_range(1..=n.min(q), |k| shapiro_entry(n, k).unwrap_or_default() * shapiro_entry(q, k).unwrap_or_default());
    check(dot, catalan((n + q - 1) as u64))
}

fn gen_shapiro_table(_: &mut Rng, _: usize) -> Vec<Params> {
    [(4, 2, 14), (5, 3, 27), (5, 1, 42), (6, 1, 132), (4, 1, 14), (3, 3, 1)]
        .into_iter()
        .map(|(n, k, v)| Params::new().int("n", n).int("k", k).int("value", v))
        .collect()
}

fn eval_shapiro_table(p: &Params) -> Result<Outcome> {
    check(shapiro_entry(p.get_int("n")?, p.get_int("k")?)?, p.get_int("value")?)
}

fn gen_c_seq_recurrence(_: &mut Rng, _: usize) -> Vec<Params> {
    grid2("mp", 0..=5, "t", 1..=8)
}

fn alternating_c(m: i64, upto: i64, t: i64) -> Result<Scalar> {
    (0..=upto).map(|i| Ok(Scalar::sign_power(i) * c_sequence(m - 2 * i, t)?)).sum()
}

fn eval_c_seq_odd_literal(p: &Params) -> Result<Outcome> {
    let (mp, t) = (p.get_int("mp")?, p.get_int("t")?);
    let m = 2 * mp + 1;
    check(c_sequence(m + 1, t + 1)?, alternating_c(m, mp, t)?)
}

fn eval_c_seq_odd_offset(p: &Params) -> Result<Outcome> {
    let (mp, t) = (p.get_int("mp")?, p.get_int("t")?);
    let m = 2 * mp + 1;
    check(c_sequence(m + 1, t - 1)?, alternating_c(m, mp, t)?)
}

fn eval_c_seq_even(p: &Params) -> Result<Outcome> {
    let (mp, t) = (p.get_int("mp")?, p.get_int("t")?);
    if mp == 0 {
        return skip("needs m' >= 1");
    }
    let m = 2 * mp;
    let rhs = Scalar::sign_power(mp) * catalan(t as u64) + alternating_c(m, mp - 1, t)?;
    check(c_sequence(m + 1, t)?, rhs)
}

// ---- catalan: palindromic pairings ----

fn gen_pairing(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases)
        .map(|_| {
            let m = rng.gen_range(1..=6);
            let kind = rng.gen_range(0..=2);
            let (sp, sq) = [(false, false), (true, true), (false, true)][kind as usize];
            Params::new()
                .seq("a", symmetric(rng, m, sp))
                .seq("b", symmetric(rng, m, sq))
                .int("kind", kind)
                .int("l", rng.gen_range(-4..=4))
        })
        .collect()
}

fn eval_palindromic_pairing(p: &Params) -> Result<Outcome> {
    let (a, b) = (p.get_seq("a")?, p.get_seq("b")?);
    let (kind, l) = (p.get_int("kind")?, p.get_int("l")?);
    let m = a.len() as i64 - 1;
    let (aa, bb) = (arr(a), arr(b));
    let lhs = sum_range(0..=m, |k| aa.entry(k, -l) * bb.entry(m - k, l));
    let ab = |k: i64| Scalar::from(a[k as usize] * b[k as usize]);
    let rhs = match kind {
        0 if m % 2 == 1 => Scalar::from(2) * sum_range(0..=(m - 1) / 2, ab),
        0 => ab(m / 2) + Scalar::from(2) * sum_range(0..=(m - 2) / 2, ab),
        1 => -(Scalar::from(2) * sum_range(0..=m / 2, ab)),
        _ => Scalar::zero(),
    };
    check(lhs, rhs)
}

fn gen_palindromic_shift(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases)
        .map(|_| {
            let m = rng.gen_range(1..=6);
            let skew = rng.gen_bool(0.5);
            Params::new()
                .seq("a", symmetric(rng, m, skew))
                .seq("b", poly(rng, m + 1))
                .int("skew", i64::from(skew))
                .int("l", rng.gen_range(-4..=4))
        })
        .collect()
}

fn palindromic_shift_rhs(a: &[i64], b: &[i64], skew: bool) -> Scalar {
    let s: i64 = a.iter().enumerate().map(|(k, x)| x * b[k + 1]).sum();
    Scalar::from(if skew { -s } else { s })
}

fn eval_palindromic_shift_full(p: &Params) -> Result<Outcome> {
    let (a, b) = (p.get_seq("a")?, p.get_seq("b")?);
    let (skew, l) = (p.get_int("skew")? == 1, p.get_int("l")?);
    let m = a.len() as i64 - 1;
    let (aa, bb) = (arr(a), arr(b));
    let lhs = sum_range(0..=m + 1, |k| aa.entry(k, -l) * bb.entry(m + 1 - k, l));
    check(lhs, palindromic_shift_rhs(a, b, skew))
}

fn eval_palindromic_shift_literal(p: &Params) -> Result<Outcome> {
    let (a, b) = (p.get_seq("a")?, p.get_seq("b")?);
    let (skew, l) = (p.get_int("skew")? == 1, p.get_int("l")?);
    let m = a.len() as i64 - 1;
    let (aa, bb) = (arr(a), arr(b));
    let lhs = sum_range(0..=m, |k| aa.entry(k, -l) * bb.entry(m - k + 1, l + 1));
    check(lhs, palindromic_shift_rhs(a, b, skew))
}

fn palindromic_ba(p: &Params) -> Result<(Scalar, Scalar, Scalar)> {
    let a = p.get_seq("a")?;
    let l = p.get_int("l")?;
    let m = a.len() - 1;
    let s = sv(&(0..m + 3).map(|i| a.get(i).copied().unwrap_or(0)).collect::<Vec<_>>());
    let lhs = cauchy_product(&transform(&s, -l), &transform(&s, l + 1), m + 1)?;
    let at = |i: usize| cauchy_product(&s, &s, i);
    let prev = if m == 0 { Scalar::zero() } else { at(m - 1)? };
    Ok((lhs, at(m)?, prev))
}

fn eval_palindromic_ba(p: &Params) -> Result<Outcome> {
    let (lhs, cur, prev) = palindromic_ba(p)?;
    check(lhs, cur + prev)
}

fn eval_palindromic_ba_skew_literal(p: &Params) -> Result<Outcome> {
    if p.get_int("skew")? != 1 {
        return skip("palindromic case");
    }
    let (lhs, cur, prev) = palindromic_ba(p)?;
    check(lhs, -cur + prev)
}

// ---- sl2 ----

fn gen_reps(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases)
        .map(|_| {
            let n = rng.gen_range(0..=12);
            Params::new().seq("u", seq_of(rng, n + 1)).seq("v", seq_of(rng, n + 1))
        })
        .collect()
}

fn reps(p: &Params) -> Result<(RepVector, RepVector)> {
    let (u, v) = (p.get_seq("u")?, p.get_seq("v")?);
    Ok((RepVector::new(u.len() - 1, crate::scalar::ints(u))?, RepVector::new(v.len() - 1, crate::scalar::ints(v))?))
}

fn eval_sl2_invariance(p: &Params) -> Result<Outcome> {
    let (u, v) = reps(p)?;
    check(invariant_form(&f_action(&u), &v)?, -invariant_form(&u, &f_action(&v))?)
}

fn eval_sl2_primed_symmetric(p: &Params) -> Result<Outcome> {
    let (u, v) = reps(p)?;
    check(primed_form(&f_action(&u), &v)?, primed_form(&u, &f_action(&v))?)
}

fn eval_sl2_bf_pairing(p: &Params) -> Result<Outcome> {
    let (u, v) = reps(p)?;
    check(primed_form(&b_f(&u), &b_f_inverse(&v))?, primed_form(&u, &v)?)
}

fn eval_sl2_parity(p: &Params) -> Result<Outcome> {
    let (u, v) = reps(p)?;
    check(invariant_form(&u, &v)?, Scalar::sign_power(u.n() as i64) * invariant_form(&v, &u)?)
}

fn eval_sl2_round_trip(p: &Params) -> Result<Outcome> {
    let (u, _) = reps(p)?;
    check(b_f_inverse(&b_f(&u)).coeffs().to_vec(), u.coeffs().to_vec())
}

fn gen_pairing_polys(rng: &mut Rng, cases: usize) -> Vec<Params> {
    (0..cases)
        .map(|_| {
            let n = rng.gen_range(0..=10);
            let dp = rng.gen_range(0..=n);
            let dq = rng.gen_range(0..=n);
            Params::new().seq("p", seq_of(rng, dp + 1)).seq("q", seq_of(rng, dq + 1)).int("n", n as i64)
        })
        .collect()
}

fn eval_sl2_pairing(p: &Params) -> Result<Outcome> {
    let c = pairing_check(&sv(p.get_seq("p")?), &sv(p.get_seq("q")?), p.get_int("n")? as usize)?;
    check(vec![c.lhs, c.mid], vec![c.rhs.clone(), c.rhs])
}

fn eval_sl2_pairing_df(p: &Params) -> Result<Outcome> {
    let n = p.get_int("n")? as usize;
    let pad = |v: &[i64]| sv(&(0..=n).map(|i| v.get(i).copied().unwrap_or(0)).collect::<Vec<_>>());
    let (a, b) = (pad(p.get_seq("p")?), pad(p.get_seq("q")?));
    let c = pairing_check(&a, &b, n)?;
    let df = dwyer_frankel_check(&a, &b, 1, n)?;
    check(vec![c.lhs, c.rhs], vec![df.lhs, df.rhs])
}

macro_rules! fam {
    ($name:expr, $suite:ident, $normative:expr, $grid:expr, $gen:expr, $eval:expr) => {
        FamilyDef {
            name: $name,
            suite: Suite::$suite,
            normative: $normative,
            grid: $grid,
            generate: $gen,
            evaluate: $eval,
        }
    };
}

pub static FAMILIES: &[FamilyDef] = &[
    // core
    fam!("binomial-pascal", Core, true, "n in [-20,20], k in [0,40]", gen_binomial_pascal, eval_binomial_pascal),
    fam!("binomial-negation", Core, true, "n in [1,15], k in [0,15]", gen_binomial_negation, eval_binomial_negation),
    fam!(
        "binomial-series",
        Core,
        true,
        "n in [-12,12], k in [0,16] against (1+x)^n expanded",
        gen_binomial_series,
        eval_binomial_series
    ),
    fam!("catalan-routes", Core, true, "t in [0,30]: Segner vs closed form", gen_catalan_routes, eval_catalan_routes),
    fam!(
        "entry-fill",
        Core,
        true,
        "corpus + random a, window k in [0,24], n in [-12,12]",
        gen_array_cell,
        eval_entry_fill
    ),
    fam!(
        "pascal-recurrence",
        Core,
        true,
        "corpus + random a, k in [0,24], n in [-12,12]",
        gen_array_cell,
        eval_pascal_recurrence
    ),
    fam!("shift-composition", Core, true, "random a, t1, t2 in [-6,6]", gen_shift, eval_shift_composition),
    fam!("shift-entry", Core, true, "random a, t in [-6,6]", gen_shift, eval_shift_entry),
    fam!(
        "pascal-decomposition",
        Core,
        true,
        "corpus + random a, k in [0,12], n in [-10,10]",
        gen_poly_cell,
        eval_pascal_decomposition
    ),
    fam!(
        "linear-combination",
        Core,
        true,
        "random a, b, r, s in [-9,9], origin shift in [-3,0]",
        gen_linear,
        eval_linear_combination
    ),
    fam!(
        "diff-table-reconstruction",
        Core,
        true,
        "corpus + random p, degree <= 6",
        gen_poly_index,
        eval_diff_table_reconstruction
    ),
    fam!("diff-table-array", Core, true, "corpus + random p, degree <= 6", gen_poly_index, eval_diff_table_array),
    fam!("taylor-at-minus-one", Core, true, "corpus + random p, degree <= 6", gen_poly_index, eval_taylor),
    fam!("reverse-involution", Core, true, "corpus + random p", gen_poly_cell, eval_reverse_involution),
    fam!("reverse-columns", Core, true, "corpus + random p, n in [0,10]", gen_poly_cell, eval_reverse_columns),
    fam!(
        "trapezoid-involution",
        Core,
        true,
        "corpus + random p with p(-1) != 0",
        gen_poly_cell,
        eval_trapezoid_involution
    ),
    fam!(
        "trapezoid-reflection",
        Core,
        true,
        "corpus + random p, left trapezoid cells",
        gen_poly_cell,
        eval_trapezoid_reflection
    ),
    fam!("border-profile", Core, true, "corpus + random p", gen_poly_cell, eval_border),
    // hockey
    fam!("hockey-top-line", Hockey, true, "random arrays + Catalan prefix, k in [0,12]", gen_h_top, eval_h_top),
    fam!(
        "hockey-top-line-short",
        Hockey,
        true,
        "random arrays + Catalan prefix, 0 < k1 < k2",
        gen_h_top_short,
        eval_h_top_short
    ),
    fam!("hockey-lower-right", Hockey, true, "random arrays + Catalan prefix, k in [0,12]", gen_h_lower, eval_h_lower),
    fam!(
        "hockey-lower-right-short",
        Hockey,
        true,
        "random arrays + Catalan prefix, 0 < k1 < k2",
        gen_h_lower_short,
        eval_h_lower_short
    ),
    fam!("hockey-rhs-row", Hockey, true, "degree <= 4, k > m, n in [1,10]", gen_h_rhs_row, eval_h_rhs_row),
    fam!("hockey-rhs-column", Hockey, true, "degree <= 4, 0 <= k <= m+n, n in [1,10]", gen_h_rhs_col, eval_h_rhs_col),
    fam!("hockey-lhs-row", Hockey, true, "degree <= 4, k >= m, n in [1,10]", gen_h_lhs_row, eval_h_lhs_row),
    fam!("hockey-lhs-diagonal", Hockey, true, "degree <= 4, k > m, n in [1,10]", gen_h_lhs_diag, eval_h_lhs_diag),
    fam!("hockey-third-short", Hockey, true, "random arrays + Catalan prefix, n1 < n2", gen_h_third, eval_h_third),
    fam!(
        "hockey-top-line-iteration",
        Hockey,
        true,
        "corpus + random a, n in [-8,8], rows 0..=12",
        gen_top_line_iteration,
        eval_top_line_iteration
    ),
    // convolution
    fam!(
        "dwyer-frankel",
        Convolution,
        true,
        "random a, b in [-9,9], |n| <= 8, m <= 24",
        gen_dwyer_frankel,
        eval_dwyer_frankel
    ),
    fam!(
        "dwyer-frankel-oracle",
        Convolution,
        true,
        "as dwyer-frankel, lhs against machine-integer series",
        gen_dwyer_frankel,
        eval_dwyer_frankel_oracle
    ),
    fam!("cauchy-commutative", Convolution, true, "random a, b, m <= 16", gen_triples, eval_cauchy_commutative),
    fam!("cauchy-associative", Convolution, true, "random a, b, c, m <= 16", gen_triples, eval_cauchy_associative),
    fam!("cauchy-bilinear", Convolution, true, "random a, b, c, r, m <= 16", gen_triples, eval_cauchy_bilinear),
    fam!("cauchy-unit", Convolution, true, "random b, m <= 16", gen_triples, eval_cauchy_unit),
    fam!("t-power-composition", Convolution, true, "n1, n2 in [-6,6], k in [0,11]", gen_t_powers, eval_t_powers),
    fam!(
        "inverse-forward",
        Convolution,
        true,
        "random prefixes of length <= 14, n in [0,8]",
        gen_prefix_shift,
        eval_inverse_forward
    ),
    fam!(
        "forward-inverse",
        Convolution,
        true,
        "random prefixes of length <= 14, n in [0,8]",
        gen_prefix_shift,
        eval_forward_inverse
    ),
    fam!(
        "transform-oracle",
        Convolution,
        true,
        "random prefixes, n in [-8,8]",
        gen_prefix_shift,
        eval_transform_oracle
    ),
    fam!(
        "vandermonde-rotation",
        Convolution,
        true,
        "random a, b, m <= 10, n in [-6,6]",
        gen_vandermonde,
        eval_vandermonde
    ),
    fam!("multi-factor", Convolution, true, "three random sequences, shifts in [-4,4], m <= 12", gen_multi, eval_multi),
    fam!(
        "zero-propagation",
        Convolution,
        true,
        "random a, b with (a*b)_m = 0, n in [-8,8]",
        gen_zero_product,
        eval_zero_propagation
    ),
    fam!(
        "entry-zero-propagation",
        Convolution,
        true,
        "proper zeros of six arrays, l in [-6,6]",
        gen_entry_zero,
        eval_entry_zero
    ),
    fam!(
        "diagonal-convolution",
        Convolution,
        true,
        "random arrays of degree <= 4, m <= 6, r, s, t in [-5,5]",
        gen_diagonal,
        eval_diagonal
    ),
    fam!("split-power-even", Convolution, true, "random a, b, m <= 12, n in [-6,6]", gen_split, eval_split_even),
    fam!("split-power-odd", Convolution, true, "random a, b, m <= 12, n in [-6,6]", gen_split, eval_split_odd),
    // catalan
    fam!(
        "chu-vandermonde",
        Catalan,
        true,
        "m, n in [-10,10], k in [0,12] against series product",
        gen_chu,
        eval_chu_oracle
    ),
    fam!(
        "chu-vandermonde-closed",
        Catalan,
        true,
        "m, n in [-10,10], k in [0,12] against C(m+n,k)",
        gen_chu,
        eval_chu_closed
    ),
    fam!("classical-squares", Catalan, true, "n in [0,12]", gen_n12, eval_classical_squares),
    fam!("classical-adjacent", Catalan, true, "n in [0,12]", gen_n12, eval_classical_adjacent),
    fam!(
        "column-self-conv",
        Catalan,
        true,
        "corpus + random p of degree <= 5, n in [0,8]",
        gen_poly_column,
        eval_column_self_conv
    ),
    fam!(
        "adjacent-conv",
        Catalan,
        true,
        "corpus + random p of degree <= 5, n in [0,8]",
        gen_poly_column,
        eval_adjacent_conv
    ),
    fam!("degree-one-self", Catalan, true, "r, s in [-4,4] nonzero, n in [1,12]", gen_degree_one, eval_degree_one_self),
    fam!(
        "degree-one-adjacent",
        Catalan,
        true,
        "r, s in [-4,4] nonzero, n in [1,12]",
        gen_degree_one,
        eval_degree_one_adjacent
    ),
    fam!("parity-remark", Catalan, true, "n in [1,64]: C_n odd iff n+1 is a power of 2", gen_parity, eval_parity),
    fam!("catalan-near-zero", Catalan, true, "t in [1,12]: entry (t, 2t) of B(1-x)", gen_t12, eval_catalan_near_zero),
    fam!("b1minusx-difference", Catalan, true, "B(1-x), k in [1,15], n in [-7,7]", gen_kn15, eval_b1minusx_difference),
    fam!("b1minusx-ratio", Catalan, true, "B(1-x), 0 < k <= n <= 15", gen_kn15, eval_b1minusx_ratio),
    fam!(
        "b1minusx-negative-literal",
        Catalan,
        false,
        "B(1-x) columns -15..-1 against the printed closed form",
        gen_kn15,
        eval_b1minusx_negative_literal
    ),
    fam!(
        "b1minusx-negative-flipped",
        Catalan,
        false,
        "B(1-x) columns -15..-1 against the negated closed form",
        gen_kn15,
        eval_b1minusx_negative_flipped
    ),
    fam!("b1plus2x-positive", Catalan, true, "B(1+2x), k, n in [1,15]", gen_kn15, eval_b1plus2x_positive),
    fam!("b1plus2x-negative", Catalan, true, "B(1+2x), k, n in [1,15]", gen_kn15, eval_b1plus2x_negative),
    fam!(
        "b1plus2x-zeros",
        Catalan,
        true,
        "B(1+2x) proper cells k in [1,15], n in [-18,15]",
        gen_reflected_cells,
        eval_reflected_zeros
    ),
    fam!(
        "b1plus2x-left-of-zero",
        Catalan,
        true,
        "t in [1,15]: b_{t,-t-2} = (-1)^t C_t",
        gen_t15,
        eval_reflected_left_of_zero
    ),
    fam!("b1minusx-column-squares", Catalan, true, "n in [0,12]", gen_nl, eval_column_squares),
    fam!("b1minusx-column-convolution", Catalan, true, "n in [0,12], l in [-4,4]", gen_nl, eval_column_convolution),
    fam!("b1minusx-adjacent-convolution", Catalan, true, "n in [0,12], l in [-4,4]", gen_nl, eval_adjacent_convolution),
    fam!(
        "b1plus2x-column-squares-literal",
        Catalan,
        false,
        "n in [0,12]: plain sum of squares",
        gen_n12,
        eval_b1plus2x_squares_literal
    ),
    fam!("b1plus2x-column-convolution", Catalan, true, "n in [0,12], l in [-4,4]", gen_nl, eval_b1plus2x_convolution),
    fam!(
        "b1plus2x-adjacent-bound-n1",
        Catalan,
        false,
        "n in [0,12], l in [-4,4], sum to n+1",
        gen_nl,
        eval_b1plus2x_adjacent_n1
    ),
    fam!(
        "b1plus2x-adjacent-bound-n2",
        Catalan,
        true,
        "n in [0,12], l in [-4,4], sum to n+2",
        gen_nl,
        eval_b1plus2x_adjacent_n2
    ),
    fam!(
        "neg-column-catalan",
        Catalan,
        true,
        "n in [1,12], six expressions in B(1+2x)",
        gen_neg_catalan,
        eval_neg_catalan
    ),
    fam!("crs-forms", Catalan, true, "r, s in [1,5], t in [1,8]", gen_crs, eval_crs_forms),
    fam!("crs-diagonal", Catalan, true, "r in [1,5], t in [1,8]: C_t^(r,r) = r C_rt", gen_crs, eval_crs_diagonal),
    fam!(
        "proper-zeros-right",
        Catalan,
        true,
        "B(r-sx), r, s in [1,4], k in [1,10], n in [-12,25]",
        gen_zero_cells,
        eval_zeros_right
    ),
    fam!(
        "proper-zeros-left",
        Catalan,
        true,
        "B(r+sx), r, s in [1,4], fitted (lr, l(r-s)-1)",
        gen_zero_cells,
        eval_zeros_left
    ),
    fam!(
        "proper-zeros-left-literal",
        Catalan,
        false,
        "B(r+sx), r < s, (lr, l(r-s)+1) for l <= -1",
        gen_zeros_left_literal,
        eval_zeros_left_literal
    ),
    fam!("skew-diagonal-zeros", Catalan, true, "random skew-palindromic p, degree <= 7", gen_skew, eval_skew_diagonal),
    fam!(
        "skew-near-zero",
        Catalan,
        true,
        "random skew-palindromic d of degree 2m'+1, m' <= 5, t <= 10",
        gen_skew_odd,
        eval_skew_near_zero
    ),
    fam!("near-zero-cg-scan", Catalan, true, "odd k < m <= 12, t in [1,8]", gen_cg, eval_cg_scan),
    fam!("near-zero-cg-alternating", Catalan, true, "odd k < m <= 12, t in [1,8]", gen_cg, eval_cg_alternating),
    fam!(
        "near-zero-cg-recurrence",
        Catalan,
        true,
        "odd k < m <= 12, t in [1,8], nonzero denominator",
        gen_cg,
        eval_cg_recurrence
    ),
    fam!("near-zero-cg-first", Catalan, true, "odd 1 < k < m <= 12", gen_cg, eval_cg_first),
    fam!("near-zero-cg-zero", Catalan, true, "odd k < m <= 12: zero at (k'+t, 2t-1)", gen_cg, eval_cg_zero),
    fam!("near-zero-cg-unit", Catalan, true, "k = 1: C_t(m,1) = m C_t", gen_cg, eval_cg_unit),
    fam!("c-sequence-scan", Catalan, true, "j in [1,9], t in [0,10]", gen_c_seq, eval_c_seq_scan),
    fam!("ballot-diagonal", Catalan, true, "r in [0,6], l in [0,10]", gen_ballot, eval_ballot_array),
    fam!("ballot-convolution-power", Catalan, true, "r in [0,6], l in [0,10]", gen_ballot, eval_ballot_power),
    fam!("shapiro-recurrence", Catalan, true, "2 <= n <= 12, 1 <= k <= n", gen_shapiro, eval_shapiro_recurrence),
    fam!(
        "shapiro-row-dot",
        Catalan,
        true,
        "n, p in [1,8]: row dot product = C_{n+p-1}",
        gen_shapiro_dot,
        eval_shapiro_dot
    ),
    fam!("shapiro-table", Catalan, true, "table entries 14, 27, 42, 132", gen_shapiro_table, eval_shapiro_table),
    fam!(
        "c-seq-odd-recurrence-literal",
        Catalan,
        false,
        "m = 2m'+1, m' in [0,5], t in [1,8]: c_{m+1}(t+1)",
        gen_c_seq_recurrence,
        eval_c_seq_odd_literal
    ),
    fam!(
        "c-seq-odd-recurrence-offset",
        Catalan,
        false,
        "m = 2m'+1, m' in [0,5], t in [1,8]: c_{m+1}(t-1)",
        gen_c_seq_recurrence,
        eval_c_seq_odd_offset
    ),
    fam!(
        "c-seq-even-recurrence",
        Catalan,
        false,
        "m = 2m', m' in [1,5], t in [1,8]",
        gen_c_seq_recurrence,
        eval_c_seq_even
    ),
    fam!(
        "palindromic-pairing",
        Catalan,
        true,
        "random (skew-)palindromic p, q of degree <= 6, l in [-4,4]",
        gen_pairing,
        eval_palindromic_pairing
    ),
    fam!(
        "palindromic-shift-full",
        Catalan,
        true,
        "random p of degree <= 6, q of degree m+1, sum to m+1",
        gen_palindromic_shift,
        eval_palindromic_shift_full
    ),
    fam!(
        "palindromic-shift-literal",
        Catalan,
        false,
        "random p of degree <= 6, q of degree m+1, sum to m",
        gen_palindromic_shift,
        eval_palindromic_shift_literal
    ),
    fam!(
        "palindromic-shift-ba",
        Catalan,
        true,
        "(B^-l a * B^(l+1) a)_(m+1) = (a*a)_m + (a*a)_(m-1)",
        gen_palindromic_shift,
        eval_palindromic_ba
    ),
    fam!(
        "palindromic-shift-ba-skew-literal",
        Catalan,
        false,
        "skew a: against -(a*a)_m + (a*a)_(m-1)",
        gen_palindromic_shift,
        eval_palindromic_ba_skew_literal
    ),
    // sl2
    fam!("sl2-invariance", Sl2, true, "random u, v in V(n), n <= 12", gen_reps, eval_sl2_invariance),
    fam!("sl2-primed-symmetry", Sl2, true, "random u, v in V(n), n <= 12", gen_reps, eval_sl2_primed_symmetric),
    fam!("sl2-bf-pairing", Sl2, true, "random u, v in V(n), n <= 12", gen_reps, eval_sl2_bf_pairing),
    fam!("sl2-form-parity", Sl2, true, "random u, v in V(n), n <= 12", gen_reps, eval_sl2_parity),
    fam!("sl2-bf-round-trip", Sl2, true, "random u in V(n), n <= 12", gen_reps, eval_sl2_round_trip),
    fam!("sl2-pairing", Sl2, true, "random p, q of degree <= n <= 10", gen_pairing_polys, eval_sl2_pairing),
    fam!(
        "sl2-pairing-dwyer-frankel",
        Sl2,
        true,
        "random p, q of degree <= n <= 10",
        gen_pairing_polys,
        eval_sl2_pairing_df
    ),
];

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn names_are_unique() {
        let mut names: Vec<&str> = FAMILIES.iter().map(|f| f.name).collect();
        names.sort_unstable();
        let before = names.len();
        names.dedup();
        assert_eq!(before, names.len());
    }

    #[test]
    fn params_json_round_trip() {
        let p = Params::new().seq("a", vec![1, -1]).int("n", 3);
        let text = p.to_string();
        assert_eq!(text, r#"{"a":[1,-1],"n":3}"#);
        let back: Params = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn literal_readings_refuted_at_smallest_case() {
        let lit = check_identity("b1plus2x-column-squares-literal", &Params::new().int("n", 0)).unwrap();
        assert_eq!(lit, Outcome::Checked { lhs: 5.into(), rhs: 4.into() });
        let lit = check_identity("b1plus2x-column-squares-literal", &Params::new().int("n", 1)).unwrap();
        assert_eq!(lit, Outcome::Checked { lhs: 14.into(), rhs: 13.into() });
        let bound = check_identity("b1plus2x-adjacent-bound-n1", &Params::new().int("n", 0).int("l", 0)).unwrap();
        assert_eq!(bound, Outcome::Checked { lhs: 10.into(), rhs: 16.into() });
        let sign = check_identity("b1minusx-negative-literal", &Params::new().int("n", 1).int("k", 1)).unwrap();
        assert_eq!(sign.passed(), Some(false));
        let a = check_identity("c-seq-odd-recurrence-literal", &Params::new().int("mp", 0).int("t", 1)).unwrap();
        assert_eq!(a, Outcome::Checked { lhs: 5.into(), rhs: 1.into() });
    }

    #[test]
    fn every_family_generates_and_evaluates() {
        for f in FAMILIES {
            let mut rng = Rng::seed_from_u64(7);
            let cases = (f.generate)(&mut rng, 6);
            assert!(!cases.is_empty(), "{}", f.name);
            for p in cases.iter().take(40) {
                let out = (f.evaluate)(p).unwrap_or_else(|e| panic!("{} {p}: {e}", f.name));
                if f.normative {
                    assert_ne!(out.passed(), Some(false), "{} {p}: {out:?}", f.name);
                }
            }
        }
    }
}
