//! Difference tables and the two symmetries of polynomial arrays.
//!
//! For `p` of degree `m`, the left side of `B(p)` splits into a trapezoid of
//! proper values (columns `-1..=-(m+1)`) above a region of alternating
//! constants. The trapezoid is the difference table of `p*(x) = x^m p(1/x)`
//! read as repeated synthetic division by `x + 1`.

use crate::array::BinomialArray;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sequence::InitialSequence;

/// Repeated division of `p*` by `x + 1`.
///
/// `columns[j][k]` is the entry at row `k`, column `-j` of `B(p)`:
/// `columns[0]` is `a_0..a_m` followed by the zero in row `m+1`, and for
/// `j >= 1` `columns[j]` is the quotient of the previous division followed by
/// its remainder. `left_edge[i]` is the `i`-th remainder, i.e. the
/// coefficient of `(x+1)^i` in `p*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffTable {
    pub degree: usize,
    pub columns: Vec<Vec<Scalar>>,
    pub left_edge: Vec<Scalar>,
}

impl DiffTable {
    /// Coefficients (lowest first) of `sum_i left_edge[i] (x+1)^i`.
    pub fn reconstruct(&self) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.degree + 1];
        // Horner in the variable (x+1): out = out*(x+1) + c.
        for c in self.left_edge.iter().rev() {
            for k in (1..out.len()).rev() {
                let prev = out[k - 1].clone();
                out[k] += prev;
            }
            out[0] += c;
        }
        out
    }

    /// Row `k` of the table read left to right (column `-(m+1-k)` to 0).
    pub fn row(&self, k: usize) -> Vec<Scalar> {
        (0..self.columns.len()).rev().filter_map(|j| self.columns[j].get(k).cloned()).collect()
    }
}

fn polynomial(a: &BinomialArray) -> Result<(usize, &InitialSequence)> {
    Ok((a.degree()?, a.polynomial()?))
}

/// One synthetic division of `c_0 x^d + ... + c_d` by `x + 1`:
/// returns the quotient coefficients (highest first) and the remainder.
fn divide_by_x_plus_one(high_first: &[Scalar]) -> (Vec<Scalar>, Scalar) {
    let mut acc: Vec<Scalar> = Vec::with_capacity(high_first.len());
    for c in high_first {
        let v = match acc.last() {
            Some(prev) => c - prev,
            None => c.clone(),
        };
        acc.push(v);
    }
    let rem = acc.pop().unwrap_or_else(Scalar::zero);
    (acc, rem)
}

pub fn diff_table(a: &BinomialArray) -> Result<DiffTable> {
    let (m, p) = polynomial(a)?;
    let mut columns = Vec::with_capacity(m + 2);
    let mut first = p.coefficients().to_vec();
    first.push(Scalar::zero());
    columns.push(first);
    let mut left_edge = Vec::with_capacity(m + 1);
    // p* read highest power first is a_0, a_1, ..., a_m.
    let mut current = p.coefficients().to_vec();
    while !current.is_empty() {
        let (quotient, rem) = divide_by_x_plus_one(&current);
        let mut col = quotient.clone();
        col.push(rem.clone());
        columns.push(col);
        left_edge.push(rem);
        current = quotient;
    }
    Ok(DiffTable { degree: m, columns, left_edge })
}

/// Coefficients `c_j` (lowest first) with `p(x) = sum_j c_j (x+1)^j`.
pub fn taylor_at_minus_one(p: &InitialSequence) -> Result<Vec<Scalar>> {
    if p.degree().is_none() {
        return Err(Error::Unsupported("zero polynomial has no Taylor expansion of finite degree".into()));
    }
    let mut current: Vec<Scalar> = p.coefficients().iter().rev().cloned().collect();
    let mut out = Vec::with_capacity(current.len());
    while !current.is_empty() {
        let (quotient, rem) = divide_by_x_plus_one(&current);
        out.push(rem);
        current = quotient;
    }
    Ok(out)
}

/// `B(p) -> B(p*)`.
pub fn reverse_involution(a: &BinomialArray) -> Result<BinomialArray> {
    let (_, p) = polynomial(a)?;
    let reversed: Vec<Scalar> = p.coefficients().iter().rev().cloned().collect();
    Ok(BinomialArray::new(InitialSequence::new(reversed)))
}

/// Swaps the proper trapezoids on the two sides of a degree-`m` array.
///
/// The result is the binomial array with `b_{k,n} = (-1)^k a_{k, k-n-m-1}`;
/// its difference table is the row reflection of the original with sign
/// `(-1)^row`. When `p(-1) != 0` the map is an involution.
pub fn trapezoid_interchange(a: &BinomialArray) -> Result<BinomialArray> {
    let m = a.degree()? as i64;
    let initial = (0..=m + 1).map(|k| Scalar::sign_power(k) * a.entry(k, k - m - 1)).collect();
    Ok(BinomialArray::new(InitialSequence::new(initial)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderProfile {
    /// Row 0, constant across the whole array.
    pub top: Scalar,
    /// Constant along the diagonal `(m+j, j)`, `j >= 0`.
    pub diag: Scalar,
    /// `|a_{k,-1}|` for `k >= m`.
    pub col_minus_one_abs: Scalar,
}

pub fn border_profile(a: &BinomialArray) -> Result<BorderProfile> {
    let (m, p) = polynomial(a)?;
    let c = p.coefficients();
    let alternating: Scalar = c.iter().enumerate().map(|(i, v)| Scalar::sign_power(i as i64) * v).sum();
    Ok(BorderProfile { top: c[0].clone(), diag: c[m].clone(), col_minus_one_abs: alternating.abs() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::make_array;
    use crate::scalar::ints;
    use proptest::prelude::*;

    fn b(values: &[i64]) -> BinomialArray {
        BinomialArray::from_ints(values)
    }

    #[test]
    fn taylor_examples() {
        let p = InitialSequence::from_ints(&[2, 5, 1, -6]);
        assert_eq!(taylor_at_minus_one(&p).unwrap(), ints(&[4, -15, 19, -6]));
        let p = InitialSequence::from_ints(&[-6, 1, 5, 2]);
        assert_eq!(taylor_at_minus_one(&p).unwrap(), ints(&[-4, -3, -1, 2]));
        assert_eq!(taylor_at_minus_one(&InitialSequence::from_ints(&[1])).unwrap(), ints(&[1]));
        assert!(taylor_at_minus_one(&InitialSequence::zero()).is_err());
    }

    #[test]
    fn diff_table_left_edge_examples() {
        // p* = 2x^3 + 5x^2 + x - 6, so column 0 of the array reads 2, 5, 1, -6.
        let t = diff_table(&b(&[2, 5, 1, -6])).unwrap();
        assert_eq!(t.left_edge, ints(&[-4, -3, -1, 2]));
        assert_eq!(diff_table(&b(&[1])).unwrap().left_edge, ints(&[1]));
        assert_eq!(diff_table(&b(&[0, 1])).unwrap().left_edge, ints(&[1, 0]));
        assert!(matches!(diff_table(&make_array(InitialSequence::zero())), Err(Error::Unsupported(_))));
    }

    #[test]
    fn diff_table_rows_match_worked_table() {
        let t = diff_table(&b(&[2, 5, 1, -6])).unwrap();
        assert_eq!(t.row(0), ints(&[2, 2, 2, 2, 2]));
        assert_eq!(t.row(1), ints(&[-1, 1, 3, 5]));
        assert_eq!(t.row(2), ints(&[-3, -2, 1]));
        assert_eq!(t.row(3), ints(&[-4, -6]));
    }

    #[test]
    fn diff_table_is_the_left_trapezoid() {
        for init in [&[2, 5, 1, -6][..], &[3, -2, 0, 7, 1], &[1, -1], &[4]] {
            let a = b(init);
            let t = diff_table(&a).unwrap();
            for (j, col) in t.columns.iter().enumerate() {
                for (k, v) in col.iter().enumerate() {
                    assert_eq!(v, &a.entry(k as i64, -(j as i64)), "{init:?} k={k} j={j}");
                }
            }
            let m = t.degree;
            for i in 0..=m {
                assert_eq!(t.left_edge[i], a.entry((m - i) as i64, -(i as i64) - 1));
            }
        }
    }

    #[test]
    fn reverse_examples() {
        let r = reverse_involution(&b(&[2, 1, 5, -6])).unwrap();
        assert_eq!(r, b(&[-6, 5, 1, 2]));
        assert_eq!(reverse_involution(&b(&[1])).unwrap(), b(&[1]));
        assert_eq!(reverse_involution(&b(&[1, -1])).unwrap(), b(&[1, -1]).scale(&Scalar::from(-1)));
    }

    #[test]
    fn reverse_inverts_nonnegative_columns() {
        let a = b(&[2, 5, 1, -6]);
        let r = reverse_involution(&a).unwrap();
        for n in 0..6 {
            let rows = n + 4;
            let mut col = a.column(n as i64, rows);
            col.reverse();
            assert_eq!(r.column(n as i64, rows), col);
        }
    }

    #[test]
    fn trapezoid_examples() {
        assert_eq!(trapezoid_interchange(&b(&[1, -1])).unwrap(), b(&[1, 2]));
        assert_eq!(trapezoid_interchange(&b(&[1, -2])).unwrap(), b(&[1, 3]));
        let image = diff_table(&trapezoid_interchange(&b(&[2, 5, 1, -6])).unwrap()).unwrap();
        assert_eq!(image.row(0), ints(&[2, 2, 2, 2, 2]));
        assert_eq!(image.row(1), ints(&[-5, -3, -1, 1]));
        assert_eq!(image.row(2), ints(&[1, -2, -3]));
        assert_eq!(image.row(3), ints(&[6, 4]));
    }

    #[test]
    fn trapezoid_maps_left_entries_to_right() {
        let a = b(&[3, -1, 4, 1]);
        let m = 3;
        let t = trapezoid_interchange(&a).unwrap();
        for k in 0..=m + 1 {
            for n in -(m + 1)..=-1 {
                let right = k - n - m - 1;
                assert_eq!(t.entry(k, right), Scalar::sign_power(k) * a.entry(k, n));
            }
        }
    }

    #[test]
    fn border_examples() {
        let p = |top: i64, diag: i64, abs: i64| BorderProfile {
            top: Scalar::from(top),
            diag: Scalar::from(diag),
            col_minus_one_abs: Scalar::from(abs),
        };
        assert_eq!(border_profile(&b(&[1, -1])).unwrap(), p(1, -1, 2));
        assert_eq!(border_profile(&b(&[1])).unwrap(), p(1, 1, 1));
        assert_eq!(border_profile(&b(&[2, 1, 5, -6])).unwrap(), p(2, -6, 12));
        assert_eq!(border_profile(&b(&[2, 5, 1, -6])).unwrap(), p(2, -6, 4));
    }

    #[test]
    fn border_matches_array_fill() {
        for init in [&[2, 1, 5, -6][..], &[2, 5, 1, -6], &[1, -1], &[7, 0, -3]] {
            let a = b(init);
            let m = init.len() as i64 - 1;
            let bp = border_profile(&a).unwrap();
            let w = a.window(0, (m + 8) as u64, -1, 8).unwrap();
            for n in -1..=8 {
                assert_eq!(w.get(0, n), &bp.top);
            }
            for j in 0..=8 {
                assert_eq!(w.get((m + j) as u64, j), &bp.diag);
            }
            for k in m..=m + 8 {
                assert_eq!(w.get(k as u64, -1).abs(), bp.col_minus_one_abs);
            }
        }
    }

    fn poly() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-9i64..=9, 1..=7).prop_filter("nonzero leading", |v| *v.last().unwrap() != 0)
    }

    proptest! {
        #[test]
        fn reconstruction(c in poly()) {
            let a = b(&c);
            let t = diff_table(&a).unwrap();
            let star: Vec<Scalar> = ints(&c).into_iter().rev().collect();
            prop_assert_eq!(t.reconstruct(), star);
        }

        #[test]
        fn taylor_matches_reversed_table(c in poly().prop_filter("a_0 != 0", |v| v[0] != 0)) {
            let p = InitialSequence::from_ints(&c);
            let star = reverse_involution(&b(&c)).unwrap();
            prop_assert_eq!(taylor_at_minus_one(&p).unwrap(), diff_table(&star).unwrap().left_edge);
        }

        #[test]
        fn reverse_is_involution(c in poly().prop_filter("a_0 != 0", |v| v[0] != 0)) {
            let a = b(&c);
            prop_assert_eq!(reverse_involution(&reverse_involution(&a).unwrap()).unwrap(), a);
        }

        #[test]
        fn trapezoid_is_involution(c in poly()) {
            let p = InitialSequence::from_ints(&c);
            prop_assume!(!p.eval(&Scalar::from(-1)).is_zero());
            let a = b(&c);
            let twice = trapezoid_interchange(&trapezoid_interchange(&a).unwrap()).unwrap();
            for k in 0..10 {
                for n in -8..8 {
                    prop_assert_eq!(twice.entry(k, n), a.entry(k, n));
                }
            }
        }
    }
}
