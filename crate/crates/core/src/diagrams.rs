//! Young diagrams below the rational-slope diagonal and the statistics on them.
//!
//! Diagrams for the pair `(m, n)` live in a frame of width `n` and height `m`.
//! Rows are indexed from the long side (row 1 is the longest), and row `i`
//! fits when `n*i + m*rows[i] <= m*n`.

use std::fmt;
use std::str::FromStr;

use crate::algebra::BivariatePolynomial;
use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// A coprime pair `(m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frame {
    m: u32,
    n: u32,
}

impl Frame {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 || gcd(m as u64, n as u64) != 1 {
            return Err(Error::NotCoprime { m, n });
        }
        Ok(Frame { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The frame with the roles of `m` and `n` exchanged.
    pub fn swapped(&self) -> Frame {
        Frame { m: self.n, n: self.m }
    }

    /// `(m-1)(n-1)/2`, the number of gaps of the semigroup.
    pub fn delta(&self) -> u64 {
        (self.m as u64 - 1) * (self.n as u64 - 1) / 2
    }

    /// Largest integer outside the semigroup, `mn - m - n` (`-1` when it is all of N).
    pub fn frobenius(&self) -> i64 {
        self.m as i64 * self.n as i64 - self.m as i64 - self.n as i64
    }

    /// Membership in the semigroup generated by `m` and `n`.
    pub fn in_semigroup(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let (m, n) = (self.m as i64, self.n as i64);
        let mut rest = x;
        while rest >= 0 {
            if rest % n == 0 {
                return true;
            }
            rest -= m;
        }
        false
    }

    /// The generator complementary to `p` (which must be `m` or `n`).
    pub fn complement(&self, p: u32) -> u32 {
        assert!(p == self.m || p == self.n, "{p} is not a generator of {self}");
        if p == self.m {
            self.n
        } else {
            self.m
        }
    }

    /// Largest allowed length of row `i` (1-indexed).
    pub fn row_bound(&self, i: u32) -> u32 {
        if i >= self.m {
            return 0;
        }
        ((self.n as u64 * (self.m - i) as u64) / self.m as u64) as u32
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// `(m+n-1)! / (m! n!)`, computed as `binom(m+n, n) / (m+n)`.
pub fn rational_catalan_count(m: u32, n: u32) -> u128 {
    let total = (m + n) as u128;
    let mut binom: u128 = 1;
    for i in 0..n as u128 {
        binom = binom * (total - i) / (i + 1);
    }
    binom / total
}

/// A partition, stored as weakly decreasing positive row lengths.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    rows: Vec<u32>,
}

impl Partition {
    /// Trailing zero rows are dropped; rows must otherwise be weakly decreasing.
    pub fn new(mut rows: Vec<u32>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) || rows.contains(&0) {
            return Err(Error::InvalidDiagram(format!("rows {rows:?} are not weakly decreasing")));
        }
        Ok(Partition { rows })
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    /// The partition whose column heights are `cols` (weakly decreasing).
    pub fn from_columns(cols: &[u32]) -> Result<Self> {
        Ok(Partition::new(cols.to_vec())?.transpose())
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn area(&self) -> u64 {
        self.rows.iter().map(|&r| r as u64).sum()
    }

    /// Length of row `i` (0-indexed), zero past the end.
    pub fn row(&self, i: usize) -> u32 {
        self.rows.get(i).copied().unwrap_or(0)
    }

    /// The conjugate partition.
    pub fn transpose(&self) -> Partition {
        let width = self.row(0) as usize;
        let rows = (0..width)
            .map(|j| self.rows.iter().take_while(|&&r| r as usize > j).count() as u32)
            .collect();
        Partition { rows }
    }

    /// Column heights, i.e. the rows of the conjugate.
    pub fn columns(&self) -> Vec<u32> {
        self.transpose().rows
    }

    /// `(arm, leg)` of every box, row-major, 0-indexed positions.
    pub fn arms_and_legs(&self) -> Vec<((usize, usize), (u32, u32))> {
        let cols = self.columns();
        let mut out = Vec::with_capacity(self.area() as usize);
        for (i, &len) in self.rows.iter().enumerate() {
            for j in 0..len as usize {
                let arm = len - 1 - j as u32;
                let leg = cols[j] - 1 - i as u32;
                out.push(((i, j), (arm, leg)));
            }
        }
        out
    }

    /// Hook lengths of every box.
    pub fn hooks(&self) -> impl Iterator<Item = u32> {
        self.arms_and_legs().into_iter().map(|(_, (a, l))| a + l + 1)
    }

    /// Hook lengths of the first-column boxes, top to bottom.
    pub fn first_column_hooks(&self) -> Vec<u32> {
        let r = self.rows.len() as u32;
        self.rows.iter().enumerate().map(|(i, &len)| len + (r - 1 - i as u32)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let rows = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows)
    }
}

pub fn fits_below_diagonal(d: &Partition, f: &Frame) -> bool {
    let (m, n) = (f.m as u64, f.n as u64);
    d.num_rows() < f.m as usize
        && d.rows.iter().enumerate().all(|(i, &r)| n * (i as u64 + 1) + m * r as u64 <= m * n)
}

/// All diagrams below the diagonal, ordered by area and then by row vector,
/// longer rows first.
pub fn enumerate_below_diagonal(f: &Frame) -> Vec<Partition> {
    let bounds: Vec<u32> = (1..f.m).map(|i| f.row_bound(i)).collect();
    let mut out = Vec::new();
    let mut rows = Vec::new();
    extend_rows(&bounds, u32::MAX, &mut rows, &mut out);
    out.sort_by(|a, b| a.area().cmp(&b.area()).then_with(|| b.rows.cmp(&a.rows)));
    out
}

fn extend_rows(bounds: &[u32], cap: u32, rows: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition { rows: rows.clone() });
    let Some(&bound) = bounds.get(rows.len()) else {
        return;
    };
    for len in 1..=bound.min(cap) {
        rows.push(len);
        extend_rows(bounds, len, rows, out);
        rows.pop();
    }
}

/// Counts boxes with `a/(l+1) <= n/m < (a+1)/l`, where `l = 0` makes the
/// right inequality vacuous. Comparisons are cross-multiplied.
pub fn h_plus(d: &Partition, f: &Frame) -> u64 {
    let (m, n) = (f.m as u64, f.n as u64);
    d.arms_and_legs()
        .into_iter()
        .filter(|&(_, (a, l))| {
            let (a, l) = (a as u64, l as u64);
            a * m <= n * (l + 1) && (l == 0 || n * l < m * (a + 1))
        })
        .count() as u64
}

/// Sum over all diagrams of `q^(delta - |D|) t^(h+(D))`.
pub fn qt_catalan(f: &Frame) -> Result<BivariatePolynomial> {
    qt_catalan_with(f, h_plus)
}

/// [`qt_catalan`] with a caller-supplied `h+` statistic.
pub fn qt_catalan_with(
    f: &Frame,
    stat: impl Fn(&Partition, &Frame) -> u64,
) -> Result<BivariatePolynomial> {
    let delta = f.delta();
    let mut p = BivariatePolynomial::zero();
    for d in enumerate_below_diagonal(f) {
        let area = d.area();
        p.add_assign_term(
            exponent(delta.checked_sub(area))?,
            exponent(Some(stat(&d, f)))?,
            1,
        )?;
    }
    Ok(p)
}

fn exponent(e: Option<u64>) -> Result<u32> {
    e.and_then(|e| u32::try_from(e).ok()).ok_or(Error::Overflow)
}

/// The pair `(sum t^(2|D|), sum t^(2(delta - h+(D))))`, as `t`-only polynomials.
pub fn poincare_polynomials(f: &Frame) -> Result<(BivariatePolynomial, BivariatePolynomial)> {
    let delta = f.delta();
    let mut by_area = BivariatePolynomial::zero();
    let mut by_h = BivariatePolynomial::zero();
    for d in enumerate_below_diagonal(f) {
        by_area.add_assign_term(0, exponent(Some(2 * d.area()))?, 1)?;
        let dim = delta.checked_sub(h_plus(&d, f));
        by_h.add_assign_term(0, exponent(dim.map(|x| 2 * x))?, 1)?;
    }
    Ok((by_area, by_h))
}
