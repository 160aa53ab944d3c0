//! Binomial arrays and materialized windows.
//!
//! A [`BinomialArray`] is determined by its column 0. Column `n` holds the
//! coefficients of `(1+x)^n p(x)`: positive columns follow Pascal's
//! recurrence to the right, negative columns are alternating partial sums
//! to the left. Rows above row 0 are zero.
//!
//! [`BinomialArray::entry`] evaluates the transform sums directly and is the
//! normative value source. Windows are filled column by column with the
//! recurrence and memoized; the two routes are cross-checked in tests.

use std::collections::HashMap;
use std::fmt;
use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::RwLock;

use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sequence::InitialSequence;

/// Columns farther than this from the stored origin are evaluated with the
/// closed form instead of a recurrence fill.
const FILL_LIMIT: i64 = 96;

pub struct BinomialArray {
    initial: InitialSequence,
    // Column `origin` of B(initial) is column 0 of this array. Always <= 0:
    // positive shifts are absorbed into `initial`.
    origin: i64,
    columns: RwLock<HashMap<i64, Vec<Scalar>>>,
}

impl BinomialArray {
    pub fn new(initial: InitialSequence) -> Self {
        Self::with_origin(initial, 0)
    }

    fn with_origin(initial: InitialSequence, origin: i64) -> Self {
        let (initial, origin) = if origin > 0 {
            let len = initial.degree().map_or(0, |m| m + 1 + origin as usize);
            (initial.times_one_plus_x_pow(origin, len), 0)
        } else {
            (initial, origin)
        };
        BinomialArray { initial, origin, columns: RwLock::new(HashMap::new()) }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(InitialSequence::from_ints(values))
    }

    /// The generating sequence. Column 0 equals it only when
    /// [`origin`](Self::origin) is 0.
    pub fn initial(&self) -> &InitialSequence {
        &self.initial
    }

    /// Column of `B(initial)` that serves as column 0 here (never positive).
    pub fn origin(&self) -> i64 {
        self.origin
    }

    /// Column 0 as an initial sequence, when it has finite support.
    pub fn polynomial(&self) -> Result<&InitialSequence> {
        if self.origin != 0 {
            return Err(Error::Unsupported(format!(
                "column 0 is an infinite series (origin shifted by {})",
                self.origin
            )));
        }
        Ok(&self.initial)
    }

    /// Degree `m` of column 0; errors unless column 0 is a nonzero polynomial.
    pub fn degree(&self) -> Result<usize> {
        self.polynomial()?
            .degree()
            .ok_or_else(|| Error::Unsupported("initial sequence has no degree (zero sequence)".into()))
    }

    /// `a_{k,n}` from the transform sums: `sum_i C(n, i) a_{k-i}`, which is the
    /// forward transform for `n >= 0` and the inverse transform
    /// `sum_i (-1)^i C(|n|+i-1, i) a_{k-i}` for `n < 0`.
    pub fn entry(&self, k: i64, n: i64) -> Scalar {
        if k < 0 {
            return Scalar::zero();
        }
        let n = n + self.origin;
        let top = if n >= 0 { k.min(n) } else { k };
        (0..=top)
            .map(|i| {
                let a = self.initial.term((k - i) as usize);
                if a.is_zero() {
                    a
                } else {
                    binomial(n, i) * a
                }
            })
            .sum()
    }

    /// Rows `0..rows` of column `n`, from the memoized recurrence fill.
    pub fn column(&self, n: i64, rows: usize) -> Vec<Scalar> {
        self.base_column(n + self.origin, rows)
    }

    fn base_column(&self, n: i64, rows: usize) -> Vec<Scalar> {
        if let Some(col) = self.columns.read().unwrap_or_else(|e| e.into_inner()).get(&n) {
            if col.len() >= rows {
                return col[..rows].to_vec();
            }
        }
        let col = if n == 0 {
            self.initial.prefix(rows)
        } else if n.abs() > FILL_LIMIT {
            (0..rows as i64).map(|k| self.entry(k, n - self.origin)).collect()
        } else if n > 0 {
            let prev = self.base_column(n - 1, rows);
            (0..rows).map(|k| if k == 0 { prev[0].clone() } else { &prev[k] + &prev[k - 1] }).collect()
        } else {
            let next = self.base_column(n + 1, rows);
            let mut col: Vec<Scalar> = Vec::with_capacity(rows);
            for (k, v) in next.iter().enumerate() {
                let value = if k == 0 { v.clone() } else { v - &col[k - 1] };
                col.push(value);
            }
            col
        };
        let mut memo = self.columns.write().unwrap_or_else(|e| e.into_inner());
        let slot = memo.entry(n).or_default();
        if slot.len() < col.len() {
            *slot = col.clone();
        }
        col
    }

    /// Materializes rows `k_min..=k_max`, columns `n_min..=n_max`.
    pub fn window(&self, k_min: u64, k_max: u64, n_min: i64, n_max: i64) -> Result<Window> {
        if k_min > k_max {
            return Err(Error::range(format!("row range {k_min}..{k_max} is empty")));
        }
        if n_min > n_max {
            return Err(Error::range(format!("column range {n_min}..{n_max} is empty")));
        }
        let rows = (k_max - k_min + 1) as usize;
        let cols = (n_max - n_min + 1) as usize;
        let columns: Vec<Vec<Scalar>> = (n_min..=n_max).map(|n| self.column(n, k_max as usize + 1)).collect();
        let mut values = Vec::with_capacity(rows * cols);
        for k in k_min..=k_max {
            for col in &columns {
                values.push(col[k as usize].clone());
            }
        }
        let window = Window { k_min, k_max, n_min, n_max, values };
        window.audit();
        Ok(window)
    }

    /// Same as [`window`](Self::window) with inclusive ranges.
    pub fn window_ranges(&self, rows: RangeInclusive<u64>, cols: RangeInclusive<i64>) -> Result<Window> {
        self.window(*rows.start(), *rows.end(), *cols.start(), *cols.end())
    }

    /// `entry(result, k, n) = entry(self, k, n + t)`.
    pub fn shift_origin(&self, t: i64) -> BinomialArray {
        BinomialArray::with_origin(self.initial.clone(), self.origin + t)
    }

    /// `r * B(a) = B(r a)`.
    pub fn scale(&self, r: &Scalar) -> BinomialArray {
        BinomialArray::with_origin(self.initial.scale(r), self.origin)
    }

    /// Generating sequence re-expressed at a lower origin `origin <= self.origin`.
    fn initial_at(&self, origin: i64) -> InitialSequence {
        let d = self.origin - origin;
        let len = self.initial.degree().map_or(0, |m| m + 1 + d as usize);
        self.initial.times_one_plus_x_pow(d, len)
    }
}

/// `B(a_i)` for a sequence.
pub fn make_array(initial: InitialSequence) -> BinomialArray {
    BinomialArray::new(initial)
}

/// `P(j) = B(e^j)`: Pascal's triangle with its top line moved down to row `j`.
pub fn pascal_basis(j: usize) -> BinomialArray {
    BinomialArray::new(InitialSequence::unit(j))
}

/// Entrywise linear combination; the result is again a binomial array.
pub fn linear_combination(terms: &[(Scalar, &BinomialArray)]) -> Result<BinomialArray> {
    let origin =
        terms.iter().map(|(_, a)| a.origin).min().ok_or_else(|| Error::range("linear combination of no arrays"))?;
    let initial = terms.iter().fold(InitialSequence::zero(), |acc, (r, a)| acc.add(&a.initial_at(origin).scale(r)));
    Ok(BinomialArray::with_origin(initial, origin))
}

impl Clone for BinomialArray {
    fn clone(&self) -> Self {
        BinomialArray::with_origin(self.initial.clone(), self.origin)
    }
}

impl PartialEq for BinomialArray {
    fn eq(&self, other: &Self) -> bool {
        let origin = self.origin.min(other.origin);
        self.initial_at(origin) == other.initial_at(origin)
    }
}

impl Eq for BinomialArray {}

impl fmt::Debug for BinomialArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BinomialArray").field("initial", &self.initial).field("origin", &self.origin).finish()
    }
}

static WINDOWS: AtomicU64 = AtomicU64::new(0);
static CELLS_CHECKED: AtomicU64 = AtomicU64::new(0);
static VIOLATIONS: AtomicU64 = AtomicU64::new(0);

/// Process-wide tally of the Pascal check run on every materialized window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowAudit {
    pub windows: u64,
    pub cells_checked: u64,
    pub violations: u64,
}

pub fn window_audit() -> WindowAudit {
    WindowAudit {
        windows: WINDOWS.load(Ordering::SeqCst),
        cells_checked: CELLS_CHECKED.load(Ordering::SeqCst),
        violations: VIOLATIONS.load(Ordering::SeqCst),
    }
}

/// A dense rectangular block of entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Window {
    k_min: u64,
    k_max: u64,
    n_min: i64,
    n_max: i64,
    values: Vec<Scalar>,
}

impl Window {
    /// Builds a window from explicit rows. Fails if the grid is ragged or an
    /// interior L-triple breaks Pascal's recurrence.
    pub fn from_rows(k_min: u64, n_min: i64, rows: Vec<Vec<Scalar>>) -> Result<Window> {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        if height == 0 || width == 0 {
            return Err(Error::range("window must have at least one cell"));
        }
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::range("ragged window rows"));
        }
        let window = Window {
            k_min,
            k_max: k_min + height as u64 - 1,
            n_min,
            n_max: n_min + width as i64 - 1,
            values: rows.into_iter().flatten().collect(),
        };
        if let Some((k, n)) = window.audit() {
            return Err(Error::range(format!("Pascal recurrence fails at row {k}, column {n}")));
        }
        Ok(window)
    }

    // Checks every interior L and records the result globally. Returns the
    // first violating cell.
    fn audit(&self) -> Option<(u64, i64)> {
        let mut first = None;
        let mut checked = 0u64;
        let mut bad = 0u64;
        for k in self.k_min + 1..=self.k_max {
            for n in self.n_min..self.n_max {
                checked += 1;
                if self.get(k, n + 1) != &(self.get(k - 1, n) + self.get(k, n)) {
                    bad += 1;
                    first.get_or_insert((k, n + 1));
                }
            }
        }
        WINDOWS.fetch_add(1, Ordering::SeqCst);
        CELLS_CHECKED.fetch_add(checked, Ordering::SeqCst);
        VIOLATIONS.fetch_add(bad, Ordering::SeqCst);
        first
    }

    pub fn rows(&self) -> RangeInclusive<u64> {
        self.k_min..=self.k_max
    }

    pub fn cols(&self) -> RangeInclusive<i64> {
        self.n_min..=self.n_max
    }

    pub fn height(&self) -> usize {
        (self.k_max - self.k_min + 1) as usize
    }

    pub fn width(&self) -> usize {
        (self.n_max - self.n_min + 1) as usize
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// Entry at row `k`, column `n`. Panics outside the window.
    pub fn get(&self, k: u64, n: i64) -> &Scalar {
        assert!(self.rows().contains(&k) && self.cols().contains(&n), "({k}, {n}) outside window");
        let r = (k - self.k_min) as usize;
        let c = (n - self.n_min) as usize;
        &self.values[r * self.width() + c]
    }

    pub fn column(&self, n: i64) -> Vec<Scalar> {
        self.rows().map(|k| self.get(k, n).clone()).collect()
    }

    pub fn row(&self, k: u64) -> Vec<Scalar> {
        self.cols().map(|n| self.get(k, n).clone()).collect()
    }

    /// CSV: header `k,<n_min>,...,<n_max>`, then one line per row with the
    /// row index followed by canonical scalars. LF endings, no padding.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k");
        for n in self.cols() {
            let _ = write!(out, ",{n}");
        }
        out.push('\n');
        for k in self.rows() {
            let _ = write!(out, "{k}");
            for n in self.cols() {
                let _ = write!(out, ",{}", self.get(k, n));
            }
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Window> {
        let bad = |msg: &str| Error::Parse(format!("window csv: {msg}"));
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad("empty input"))?;
        let mut fields = header.split(',');
        if fields.next() != Some("k") {
            return Err(bad("header must start with \"k\""));
        }
        let cols: Vec<i64> = fields.map(|f| f.parse().map_err(|_| bad("bad column index"))).collect::<Result<_>>()?;
        let n_min = *cols.first().ok_or_else(|| bad("no columns"))?;
        if cols.iter().enumerate().any(|(i, &n)| n != n_min + i as i64) {
            return Err(bad("column indices must be consecutive"));
        }
        let mut k_min = None;
        let mut rows = Vec::new();
        for (i, line) in lines.enumerate() {
            let mut fields = line.split(',');
            let k: u64 = fields.next().and_then(|f| f.parse().ok()).ok_or_else(|| bad("bad row index"))?;
            let k0 = *k_min.get_or_insert(k);
            if k != k0 + i as u64 {
                return Err(bad("row indices must be consecutive"));
            }
            let row: Vec<Scalar> = fields.map(str::parse).collect::<Result<_>>()?;
            if row.len() != cols.len() {
                return Err(bad("row width does not match header"));
            }
            rows.push(row);
        }
        Window::from_rows(k_min.ok_or_else(|| bad("no rows"))?, n_min, rows)
    }

    /// Fixed-width text table with right-aligned cells.
    pub fn to_ascii(&self) -> String {
        let cells: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        let header: Vec<String> = self.cols().map(|n| n.to_string()).collect();
        let width = cells.iter().chain(&header).map(String::len).max().unwrap_or(1);
        let label = self.k_max.to_string().len().max(3);
        let mut out = format!("{:>label$} |", "k\\n");
        for h in &header {
            let _ = write!(out, " {h:>width$}");
        }
        out.push('\n');
        out.push_str(&"-".repeat(label + 2 + (width + 1) * header.len()));
        out.push('\n');
        for (r, k) in self.rows().enumerate() {
            let _ = write!(out, "{k:>label$} |");
            for c in &cells[r * self.width()..(r + 1) * self.width()] {
                let _ = write!(out, " {c:>width$}");
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}
