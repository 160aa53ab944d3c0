//! Binomial transforms and the Cauchy-product algebra on sequence prefixes.
//!
//! `B^n a` has generating function `(1+x)^n a(x)` for every integer `n`.
//! Index `m` of a product or transform only reads indices `0..=m` of its
//! inputs, so finite prefixes suffice; each operation checks that the prefix
//! it was given is long enough.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::array::BinomialArray;
use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sequence::InitialSequence;

/// A finite prefix `a_0..=a_M` of a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct SeqVec(Vec<Scalar>);

impl SeqVec {
    pub fn new(values: Vec<Scalar>) -> Self {
        SeqVec(values)
    }

    pub fn from_ints(values: &[i64]) -> Self {
        SeqVec(crate::scalar::ints(values))
    }

    /// `e^j` of the given length.
    pub fn unit(j: usize, len: usize) -> Self {
        SeqVec((0..len).map(|i| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Scalar> {
        self.0
    }

    /// Fails unless index `m` is covered.
    pub fn require(&self, m: usize) -> Result<()> {
        if self.0.len() > m {
            Ok(())
        } else {
            Err(Error::range(format!("prefix of length {} does not cover index {m}", self.0.len())))
        }
    }

    /// First `len` terms; errors if shorter.
    pub fn truncate(&self, len: usize) -> Result<SeqVec> {
        if len > 0 {
            self.require(len - 1)?;
        }
        Ok(SeqVec(self.0[..len].to_vec()))
    }

    pub fn to_initial(&self) -> InitialSequence {
        InitialSequence::new(self.0.clone())
    }
}

impl From<Vec<Scalar>> for SeqVec {
    fn from(values: Vec<Scalar>) -> Self {
        SeqVec(values)
    }
}

impl std::ops::Index<usize> for SeqVec {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

/// `B^n a` for any integer `n`, same length as `a`.
pub fn transform(a: &SeqVec, n: i64) -> SeqVec {
    SeqVec(
        (0..a.len())
            .map(|k| (0..=k).filter(|&i| !a[k - i].is_zero()).map(|i| binomial(n, i as i64) * &a[k - i]).sum())
            .collect(),
    )
}

/// `result_k = sum_{i=0}^{n} C(n,i) a_{k-i}`.
pub fn forward_transform(a: &SeqVec, n: u64) -> SeqVec {
    transform(a, n as i64)
}

/// `result_k = sum_{i=0}^{k} (-1)^i C(n+i-1, i) a_{k-i}`.
pub fn inverse_transform(a: &SeqVec, n: u64) -> SeqVec {
    let n = n as i64;
    SeqVec(
        (0..a.len())
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        let j = i as i64;
                        Scalar::sign_power(j) * binomial(n + j - 1, j) * &a[k - i]
                    })
                    .sum()
            })
            .collect(),
    )
}

/// `(a*b)_m`.
pub fn cauchy_product(a: &SeqVec, b: &SeqVec, m: usize) -> Result<Scalar> {
    a.require(m)?;
    b.require(m)?;
    Ok((0..=m).map(|i| &a[i] * &b[m - i]).sum())
}

/// `(a*b)_k` for every `k` both prefixes cover.
pub fn convolve(a: &SeqVec, b: &SeqVec) -> SeqVec {
    let len = a.len().min(b.len());
    SeqVec((0..len).map(|m| (0..=m).map(|i| &a[i] * &b[m - i]).sum()).collect())
}

/// Prefix of `t^n = B^n e`: the coefficients of `(1+x)^n`.
pub fn t_sequence(n: i64, len: usize) -> SeqVec {
    SeqVec((0..len).map(|k| binomial(n, k as i64)).collect())
}

/// Two evaluations of one identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub equal: bool,
}

impl Comparison {
    pub fn new(lhs: Scalar, rhs: Scalar) -> Self {
        let equal = lhs == rhs;
        Comparison { lhs, rhs, equal }
    }
}

/// `(B^n a * B^{-n} b)_m` against `(a*b)_m`.
pub fn dwyer_frankel_check(a: &SeqVec, b: &SeqVec, n: i64, m: usize) -> Result<Comparison> {
    let a = a.truncate(m + 1)?;
    let b = b.truncate(m + 1)?;
    let lhs = cauchy_product(&transform(&a, n), &transform(&b, -n), m)?;
    let rhs = cauchy_product(&a, &b, m)?;
    Ok(Comparison::new(lhs, rhs))
}

/// One matched column pair of the rotated expansion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VandermondeColumn {
    pub n: i64,
    /// `a_{0,n}, ..., a_{m,n}`.
    pub lhs: Vec<Scalar>,
    /// `b_{m,-n}, ..., b_{0,-n}`: column `-n` of `B(b)` turned upside down.
    pub rhs: Vec<Scalar>,
    pub dot: Scalar,
}

/// Restricts `B(a)` and `B(b)` to rows `0..=m`, rotates the second by 180
/// degrees about column 0 and pairs columns in the same position.
pub fn vandermonde_expand(
    a: &SeqVec,
    b: &SeqVec,
    m: usize,
    n_range: RangeInclusive<i64>,
) -> Result<Vec<VandermondeColumn>> {
    let (n_min, n_max) = (*n_range.start(), *n_range.end());
    let left = BinomialArray::new(a.truncate(m + 1)?.to_initial());
    let right = BinomialArray::new(b.truncate(m + 1)?.to_initial());
    let lw = left.window(0, m as u64, n_min, n_max)?;
    let rw = right.window(0, m as u64, -n_max, -n_min)?;
    Ok(n_range
        .map(|n| {
            let lhs = lw.column(n);
            let mut rhs = rw.column(-n);
            rhs.reverse();
            let dot = lhs.iter().zip(&rhs).map(|(x, y)| x * y).sum();
            VandermondeColumn { n, lhs, rhs, dot }
        })
        .collect())
}

/// `(B^{n_1} a^1 * ... * B^{n_k} a^k)_m = B^{n_1+...+n_k}(a^1 * ... * a^k)_m`.
pub fn multi_factor_check(seqs: &[SeqVec], shifts: &[i64], m: usize) -> Result<bool> {
    if seqs.len() != shifts.len() || seqs.len() < 2 {
        return Err(Error::range("need at least two sequences and one shift per sequence"));
    }
    let len = m + 1;
    let prefixes = seqs.iter().map(|s| s.truncate(len)).collect::<Result<Vec<_>>>()?;
    let shifted = prefixes
        .iter()
        .zip(shifts)
        .map(|(s, &n)| transform(s, n))
        .reduce(|acc, s| convolve(&acc, &s))
        .expect("nonempty");
    let product = prefixes.into_iter().reduce(|acc, s| convolve(&acc, &s)).expect("nonempty");
    let total = transform(&product, shifts.iter().sum());
    Ok(shifted[m] == total[m])
}

/// If `(a*b)_m = 0`, then `(B^n a * B^{-n} b)_m = 0` for every `n` in range.
pub fn zero_propagation_check(a: &SeqVec, b: &SeqVec, m: usize, n_range: RangeInclusive<i64>) -> Result<bool> {
    if !cauchy_product(a, b, m)?.is_zero() {
        return Err(Error::not_applicable("zero propagation", "(a*b)_m = 0"));
    }
    for n in n_range {
        if !dwyer_frankel_check(a, b, n, m)?.lhs.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// If `a_{k,n} = 0`, then `sum_i C(l,i) a_{k-i,n-l} = 0` for every `l` in range.
pub fn entry_zero_propagation(array: &BinomialArray, k: i64, n: i64, l_range: RangeInclusive<i64>) -> Result<bool> {
    if !array.entry(k, n).is_zero() {
        return Err(Error::not_applicable("zero propagation", format!("a_{{{k},{n}}} = 0")));
    }
    Ok(l_range.into_iter().all(|l| {
        let sum: Scalar = (0..=k).map(|i| binomial(l, i) * array.entry(k - i, n - l)).sum();
        sum.is_zero()
    }))
}

/// `sum_{i=0}^{m} a_{i,r+i} b_{m-i,s-i}` and the same sum with the columns
/// moved `t` steps apart (`r -> r+t`, `s -> s-t`).
pub fn diagonal_convolution(
    a: &BinomialArray,
    b: &BinomialArray,
    m: usize,
    r: i64,
    s: i64,
    t: i64,
) -> (Scalar, Scalar) {
    let sum =
        |r: i64, s: i64| -> Scalar { (0..=m as i64).map(|i| a.entry(i, r + i) * b.entry(m as i64 - i, s - i)).sum() };
    (sum(r, s), sum(r + t, s - t))
}

/// `(B^n a * B^{n+e} b)_m = (a * B^{2n+e} b)_m` with `e` 0 or 1.
pub fn split_power_check(a: &SeqVec, b: &SeqVec, n: i64, odd: bool, m: usize) -> Result<Comparison> {
    let e = i64::from(odd);
    let a = a.truncate(m + 1)?;
    let b = b.truncate(m + 1)?;
    let lhs = cauchy_product(&transform(&a, n), &transform(&b, n + e), m)?;
    let rhs = cauchy_product(&a, &transform(&b, 2 * n + e), m)?;
    Ok(Comparison::new(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::pascal_basis;
    use crate::scalar::ints;
    use proptest::prelude::*;

    fn s(v: &[i64]) -> SeqVec {
        SeqVec::from_ints(v)
    }

    /// Polynomial product and (1+x)^n multiplication with plain i128
    /// arithmetic; shares no code with the transform sums above.
    fn oracle_shift(a: &[i64], n: i64, len: usize) -> Vec<i128> {
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

    fn oracle_product(a: &[i128], b: &[i128], m: usize) -> i128 {
        (0..=m).map(|i| a[i] * b[m - i]).sum()
    }

    #[test]
    fn forward_examples() {
        assert_eq!(forward_transform(&s(&[1, 6, 15, 20, 29]), 1), s(&[1, 7, 21, 35, 49]));
        assert_eq!(forward_transform(&s(&[4, -2, 9]), 0), s(&[4, -2, 9]));
        assert_eq!(forward_transform(&s(&[1, -1, 0, 0]), 2), s(&[1, 1, -1, -1]));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse_transform(&s(&[1, 10, 45, 120, 224]), 1), s(&[1, 9, 36, 84, 140]));
        assert_eq!(inverse_transform(&s(&[4, -2, 9]), 0), s(&[4, -2, 9]));
        assert_eq!(inverse_transform(&s(&[1, -1, 0, 0, 0]), 2), s(&[1, -3, 5, -7, 9]));
    }

    #[test]
    fn cauchy_examples() {
        let a = s(&[3, 4, -1, -2]);
        let b = s(&[2, 2, -1, -1]);
        assert_eq!(cauchy_product(&a, &b, 3).unwrap(), Scalar::from(-13));
        assert_eq!(cauchy_product(&SeqVec::unit(0, 4), &b, 2).unwrap(), Scalar::from(-1));
        assert_eq!(cauchy_product(&s(&[1, 1]), &s(&[1, 1]), 1).unwrap(), Scalar::from(2));
        assert!(matches!(cauchy_product(&a, &b, 4), Err(Error::Range(_))));
    }

    #[test]
    fn t_sequence_examples() {
        assert_eq!(t_sequence(2, 4), s(&[1, 2, 1, 0]));
        assert_eq!(t_sequence(-1, 4), s(&[1, -1, 1, -1]));
        let prod = convolve(&t_sequence(3, 7), &t_sequence(-3, 7));
        assert_eq!(prod, SeqVec::unit(0, 7));
    }

    #[test]
    fn dwyer_frankel_example() {
        let c = dwyer_frankel_check(&s(&[3, 4, -1, -2]), &s(&[2, 2, -1, -1]), 2, 3).unwrap();
        assert_eq!(c, Comparison::new(Scalar::from(-13), Scalar::from(-13)));
        let c = dwyer_frankel_check(&s(&[5, 1]), &s(&[2, 7]), 0, 1).unwrap();
        assert!(c.equal);
    }

    #[test]
    fn vandermonde_example() {
        let cols = vandermonde_expand(&s(&[3, 4, -1, -2]), &s(&[2, 2, -1, -1]), 3, -2..=2).unwrap();
        assert_eq!(cols.len(), 5);
        assert!(cols.iter().all(|c| c.dot == Scalar::from(-13)));
        let c2 = &cols[4];
        assert_eq!(c2.lhs, ints(&[3, 10, 10, 0]));
        assert_eq!(c2.rhs, ints(&[-1, 1, -2, 2]));
        assert_eq!(cols[2].lhs, ints(&[3, 4, -1, -2]));

        let e = SeqVec::unit(0, 4);
        for c in vandermonde_expand(&e, &e, 3, -3..=3).unwrap() {
            assert!(c.dot.is_zero());
        }
        let cols = vandermonde_expand(&t_sequence(1, 3), &t_sequence(1, 3), 2, 3..=3).unwrap();
        assert_eq!(cols[0].dot, Scalar::one());
    }

    #[test]
    fn multi_factor_examples() {
        let a = s(&[1, 2, -3, 4]);
        let b = s(&[0, 5, 1, 1]);
        let c = s(&[2, -1, 0, 7]);
        assert!(multi_factor_check(&[a.clone(), b.clone()], &[3, 0], 3).unwrap());
        assert!(multi_factor_check(&[a.clone(), b.clone(), c.clone()], &[1, -2, 1], 3).unwrap());
        assert!(multi_factor_check(&[a, b, c], &[0, 0, 0], 2).unwrap());
        assert!(multi_factor_check(&[s(&[1])], &[0], 0).is_err());
    }

    #[test]
    fn zero_propagation_examples() {
        assert!(zero_propagation_check(&s(&[1, -1]), &s(&[1, 1]), 1, -6..=6).unwrap());
        let e = SeqVec::unit(0, 2);
        assert!(zero_propagation_check(&e, &e, 1, -4..=4).unwrap());
        assert!(matches!(zero_propagation_check(&s(&[1, 1]), &s(&[1, 1]), 1, 0..=2), Err(Error::NotApplicable { .. })));
        let catalan = BinomialArray::from_ints(&[1, -1]);
        assert!(entry_zero_propagation(&catalan, 1, 1, -5..=5).unwrap());
        assert!(entry_zero_propagation(&catalan, 3, 5, -5..=5).unwrap());
        assert!(entry_zero_propagation(&catalan, 2, 2, 0..=1).is_err());
    }

    #[test]
    fn diagonal_convolution_examples() {
        let p = pascal_basis(0);
        let (base, shifted) = diagonal_convolution(&p, &p, 2, 0, 0, 0);
        assert_eq!(base, shifted);
        assert_eq!(diagonal_convolution(&p, &p, 2, 0, 0, 1), (Scalar::zero(), Scalar::zero()));
        let a = BinomialArray::from_ints(&[1, -1]);
        let b = BinomialArray::from_ints(&[1, 2]);
        assert_eq!(diagonal_convolution(&a, &b, 3, 1, 2, 2), (Scalar::from(2), Scalar::from(2)));
    }

    fn seq(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-9i64..=9, 1..=max_len)
    }

    proptest! {
        #[test]
        fn ring_laws(a in seq(17), b in seq(17), c in seq(17), m in 0usize..=16) {
            let len = m + 1;
            let pad = |v: &[i64]| s(&(0..len).map(|i| v.get(i).copied().unwrap_or(0)).collect::<Vec<_>>());
            let (a, b, c) = (pad(&a), pad(&b), pad(&c));
            prop_assert_eq!(cauchy_product(&a, &b, m)?, cauchy_product(&b, &a, m)?);
            prop_assert_eq!(
                cauchy_product(&convolve(&a, &b), &c, m)?,
                cauchy_product(&a, &convolve(&b, &c), m)?
            );
            let sum = SeqVec::new(a.as_slice().iter().zip(b.as_slice()).map(|(x, y)| x + &(y * Scalar::from(3))).collect());
            prop_assert_eq!(
                cauchy_product(&sum, &c, m)?,
                cauchy_product(&a, &c, m)? + Scalar::from(3) * cauchy_product(&b, &c, m)?
            );
        }

        #[test]
        fn t_powers_compose(n1 in -6i64..=6, n2 in -6i64..=6) {
            prop_assert_eq!(convolve(&t_sequence(n1, 12), &t_sequence(n2, 12)), t_sequence(n1 + n2, 12));
        }

        #[test]
        fn inverse_undoes_forward(a in seq(14), n in 0u64..=8) {
            let a = s(&a);
            prop_assert_eq!(inverse_transform(&forward_transform(&a, n), n), a.clone());
            prop_assert_eq!(forward_transform(&inverse_transform(&a, n), n), a);
        }

        #[test]
        fn transform_matches_oracle(a in seq(12), n in -8i64..=8) {
            let got = transform(&s(&a), n);
            let want = oracle_shift(&a, n, a.len());
            for (g, w) in got.as_slice().iter().zip(want) {
                prop_assert_eq!(g.to_string(), w.to_string());
            }
        }

        #[test]
        fn dwyer_frankel_random(a in seq(25), b in seq(25), n in -8i64..=8, m in 0usize..=24) {
            let len = m + 1;
            let pad = |v: &[i64]| (0..len).map(|i| v.get(i).copied().unwrap_or(0)).collect::<Vec<_>>();
            let (a, b) = (pad(&a), pad(&b));
            let c = dwyer_frankel_check(&s(&a), &s(&b), n, m)?;
            prop_assert!(c.equal);
            let lhs = oracle_product(&oracle_shift(&a, n, len), &oracle_shift(&b, -n, len), m);
            prop_assert_eq!(c.lhs.to_string(), lhs.to_string());
        }

        #[test]
        fn split_powers(a in seq(10), b in seq(10), n in -5i64..=5, m in 0usize..=9, odd in any::<bool>()) {
            let len = m + 1;
            let pad = |v: &[i64]| s(&(0..len).map(|i| v.get(i).copied().unwrap_or(0)).collect::<Vec<_>>());
            prop_assert!(split_power_check(&pad(&a), &pad(&b), n, odd, m)?.equal);
        }

        #[test]
        fn diagonal_shift_invariance(a in seq(5), b in seq(5), m in 0usize..=6, r in -4i64..=4, s_ in -4i64..=4, t in -4i64..=4) {
            let (x, y) = diagonal_convolution(&BinomialArray::from_ints(&a), &BinomialArray::from_ints(&b), m, r, s_, t);
            prop_assert_eq!(x, y);
        }
    }
}
