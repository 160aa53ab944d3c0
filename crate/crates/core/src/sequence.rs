use std::fmt;

use crate::scalar::Scalar;

/// Rule for indices past the stored coefficient list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Tail {
    /// Every index past the list is zero.
    #[default]
    Zero,
}

/// Column-0 data `a_0, a_1, ...` of a binomial array.
///
/// Trailing zeros are dropped on construction, so two sequences with the
/// same terms compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct InitialSequence {
    coefficients: Vec<Scalar>,
    tail: Tail,
}

impl InitialSequence {
    pub fn new(mut coefficients: Vec<Scalar>) -> Self {
        while coefficients.last().is_some_and(Scalar::is_zero) {
            coefficients.pop();
        }
        InitialSequence { coefficients, tail: Tail::Zero }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(crate::scalar::ints(values))
    }

    /// The zero sequence.
    pub fn zero() -> Self {
        Self::default()
    }

    /// `e^j`: a single 1 at index `j`.
    pub fn unit(j: usize) -> Self {
        let mut c = vec![Scalar::zero(); j + 1];
        c[j] = Scalar::one();
        Self::new(c)
    }

    /// `a_i`, with the tail rule applied past the stored list.
    pub fn term(&self, i: usize) -> Scalar {
        match self.tail {
            Tail::Zero => self.coefficients.get(i).cloned().unwrap_or_else(Scalar::zero),
        }
    }

    /// Index of the last nonzero coefficient; `None` for the zero sequence.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    /// Stored coefficients `a_0..=a_degree`.
    pub fn coefficients(&self) -> &[Scalar] {
        &self.coefficients
    }

    /// First `len` terms.
    pub fn prefix(&self, len: usize) -> Vec<Scalar> {
        (0..len).map(|i| self.term(i)).collect()
    }

    pub fn scale(&self, r: &Scalar) -> Self {
        Self::new(self.coefficients.iter().map(|a| a * r).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        Self::new((0..len).map(|i| self.term(i) + other.term(i)).collect())
    }

    /// Coefficients of `(1+x)^t p(x)` truncated to `len` terms; `t` may be
    /// negative, in which case the series of `(1+x)^t` is used.
    pub fn times_one_plus_x_pow(&self, t: i64, len: usize) -> Self {
        let mut c = self.prefix(len);
        for _ in 0..t.unsigned_abs() {
            if t > 0 {
                for k in (1..len).rev() {
                    let prev = c[k - 1].clone();
                    c[k] += prev;
                }
            } else {
                for k in 1..len {
                    let prev = c[k - 1].clone();
                    c[k] -= prev;
                }
            }
        }
        Self::new(c)
    }

    /// `p(x)` evaluated at `x`.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coefficients.iter().rev().fold(Scalar::zero(), |acc, a| acc * x + a)
    }
}

impl fmt::Debug for InitialSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InitialSequence({})", crate::scalar::format_list(&self.coefficients))
    }
}

impl From<Vec<Scalar>> for InitialSequence {
    fn from(value: Vec<Scalar>) -> Self {
        Self::new(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn term_examples() {
        let s = InitialSequence::from_ints(&[1, -1]);
        assert_eq!(s.term(1), Scalar::from(-1));
        assert_eq!(s.term(7), Scalar::zero());
        let s = InitialSequence::from_ints(&[3, 4, -1, -2]);
        assert_eq!(s.term(3), Scalar::from(-2));
    }

    #[test]
    fn degree_tracks_last_nonzero() {
        assert_eq!(InitialSequence::from_ints(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(InitialSequence::from_ints(&[0, 0]).degree(), None);
        assert_eq!(InitialSequence::unit(3).degree(), Some(3));
        let s = InitialSequence::from_ints(&[2, 0, 5]);
        let m = s.degree().unwrap();
        assert!(!s.coefficients()[m].is_zero());
        assert!((m + 1..m + 10).all(|i| s.term(i).is_zero()));
    }

    #[test]
    fn one_plus_x_powers() {
        let s = InitialSequence::from_ints(&[1, -1]);
        assert_eq!(s.times_one_plus_x_pow(1, 4), InitialSequence::from_ints(&[1, 0, -1]));
        assert_eq!(s.times_one_plus_x_pow(-2, 5), InitialSequence::from_ints(&[1, -3, 5, -7, 9]));
    }
}
