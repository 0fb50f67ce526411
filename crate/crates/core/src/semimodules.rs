//! Zero-normalized semimodules over the semigroup generated by `m` and `n`.
//!
//! A semimodule is stored by its finite gap set `Z>=0 \ Delta`. Negative
//! integers are never members and everything past the largest gap is.

use std::fmt;

use crate::diagrams::{fits_below_diagonal, Frame, Partition};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Semimodule {
    frame: Frame,
    gaps: Vec<u32>,
}

/// Checks normalization and closure of a candidate gap set.
pub fn is_semimodule(frame: &Frame, gaps: &[u32]) -> bool {
    check_gaps(frame, gaps).is_ok()
}

fn check_gaps(frame: &Frame, gaps: &[u32]) -> Result<()> {
    if gaps.contains(&0) {
        return Err(Error::NotSemimodule("0 must belong to the semimodule".into()));
    }
    for &g in gaps {
        for p in [frame.m(), frame.n()] {
            if g >= p && !gaps.contains(&(g - p)) {
                return Err(Error::NotSemimodule(format!(
                    "{g} is a gap but {} is not",
                    g - p
                )));
            }
        }
    }
    Ok(())
}

impl Semimodule {
    pub fn new(frame: Frame, gaps: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut gaps: Vec<u32> = gaps.into_iter().collect();
        gaps.sort_unstable();
        gaps.dedup();
        check_gaps(&frame, &gaps)?;
        Ok(Semimodule { frame, gaps })
    }

    /// `Delta = Z>=0`.
    pub fn full(frame: Frame) -> Self {
        Semimodule { frame, gaps: Vec::new() }
    }

    /// `Delta = Gamma`, whose gaps are exactly the gaps of the semigroup.
    pub fn semigroup(frame: Frame) -> Self {
        let gaps = (1..=frame.frobenius().max(0))
            .filter(|&x| !frame.in_semigroup(x))
            .map(|x| x as u32)
            .collect();
        Semimodule { frame, gaps }
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn max_gap(&self) -> Option<u32> {
        self.gaps.last().copied()
    }

    /// The same gap set viewed with `m` and `n` exchanged.
    pub fn with_frame(&self, frame: Frame) -> Result<Self> {
        Semimodule::new(frame, self.gaps.iter().copied())
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && u32::try_from(x).map_or(true, |x| self.gaps.binary_search(&x).is_err())
    }

    /// The `p`-generators `a` (`a` in Delta, `a - p` not), sorted. There is one
    /// per residue class modulo `p`.
    pub fn generators(&self, p: u32) -> Vec<i64> {
        let p = p as i64;
        let mut out: Vec<i64> = (0..p)
            .map(|r| {
                let mut x = r;
                while !self.contains(x) {
                    x += p;
                }
                x
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// The `p`-cogenerators `b` (`b` not in Delta, `b + p` in Delta) with `b >= -p`.
    pub fn cogenerators(&self, p: u32) -> Vec<i64> {
        let p = p as i64;
        let top = self.max_gap().map_or(-1, |g| g as i64);
        (-p..=top).filter(|&b| !self.contains(b) && self.contains(b + p)).collect()
    }

    /// Number of integers in `[x, x + len)` outside Delta.
    pub fn gap_count(&self, x: i64, len: u32) -> u64 {
        (x..x + len as i64).filter(|&y| !self.contains(y)).count() as u64
    }

    /// `g_p(x)`: non-members in the window of length complementary to `p`.
    pub fn g(&self, p: u32, x: i64) -> u64 {
        self.gap_count(x, self.frame.complement(p))
    }

    /// The diagram of boxes whose labels `mn - n*i - m*j` lie in `Delta \ Gamma`.
    pub fn to_diagram(&self) -> Partition {
        let f = self.frame;
        let rows = (1..f.m())
            .map(|i| {
                (1..=f.row_bound(i))
                    .filter(|&j| self.contains(box_label(&f, i, j)))
                    .count() as u32
            })
            .collect();
        Partition::new(rows).expect("D(Delta) is a Young diagram")
    }

    /// Inverse of [`Semimodule::to_diagram`].
    pub fn from_diagram(d: &Partition, frame: Frame) -> Result<Self> {
        if !fits_below_diagonal(d, &frame) {
            return Err(Error::NotBelowDiagonal(d.to_string()));
        }
        let marked: Vec<i64> = d
            .rows()
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| box_label(&frame, i as u32 + 1, j)))
            .collect();
        let gaps = Semimodule::semigroup(frame)
            .gaps
            .into_iter()
            .filter(|&g| !marked.contains(&(g as i64)));
        Semimodule::new(frame, gaps)
    }

    /// The normalized dual `max(Z \ Delta) - (Z \ Delta)`.
    pub fn dual(&self) -> Semimodule {
        let top = self.max_gap().map_or(-1, |g| g as i64);
        let gaps = (0..=top)
            .filter(|&x| self.contains(top - x))
            .map(|x| x as u32)
            .collect();
        Semimodule { frame: self.frame, gaps }
    }

    /// Cell dimension: the sum of `g_n` over the `n`-generators.
    pub fn cell_dimension(&self) -> u64 {
        let n = self.frame.n();
        self.generators(n).into_iter().map(|a| self.g(n, a)).sum()
    }

    /// Number of `p`-generators in `[x, x + q)`, `q` the complementary generator.
    pub fn count_generators_in_window(&self, p: u32, x: i64) -> u64 {
        let q = self.frame.complement(p) as i64;
        self.generators(p).into_iter().filter(|&a| a >= x && a < x + q).count() as u64
    }

    /// Number of `p`-cogenerators in `[x, x + q)`.
    pub fn count_cogenerators_in_window(&self, p: u32, x: i64) -> u64 {
        let q = self.frame.complement(p) as i64;
        (x..x + q).filter(|&b| !self.contains(b) && self.contains(b + p as i64)).count() as u64
    }

    pub fn gaps_string(&self) -> String {
        format_gaps(&self.gaps)
    }
}

/// Label of the box in row `i`, column `j` (both 1-indexed).
pub fn box_label(f: &Frame, i: u32, j: u32) -> i64 {
    f.m() as i64 * f.n() as i64 - f.n() as i64 * i as i64 - f.m() as i64 * j as i64
}

/// Labels of every box below the diagonal, keyed by 1-indexed `(row, col)`.
pub fn diagonal_labels(f: &Frame) -> Vec<((u32, u32), i64)> {
    (1..f.m())
        .flat_map(|i| (1..=f.row_bound(i)).map(move |j| ((i, j), box_label(f, i, j))))
        .collect()
}

pub fn format_gaps(gaps: &[u32]) -> String {
    if gaps.is_empty() {
        return "-".into();
    }
    gaps.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",")
}

/// Parses `1,2,3` (or `-` for the empty set).
pub fn parse_gaps(s: &str) -> Result<Vec<u32>> {
    parse_list(s)
}

/// Parses a comma-separated list of non-negative integers (`-` is empty).
pub fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s == "-" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
        .collect()
}

impl fmt::Display for Semimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} n={} gaps={}", self.frame.m(), self.frame.n(), self.gaps_string())
    }
}

/// All zero-normalized semimodules, most gaps first, then lexicographically.
///
/// Built by deciding the semigroup gaps in increasing order; a gap is only
/// kept when `g - m` and `g - n` are kept gaps or negative.
pub fn enumerate_semimodules(f: &Frame) -> Vec<Semimodule> {
    let candidates = Semimodule::semigroup(*f).gaps;
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    choose_gaps(f, &candidates, 0, &mut chosen, &mut out);
    out.sort_by(|a, b| b.gaps.len().cmp(&a.gaps.len()).then_with(|| a.gaps.cmp(&b.gaps)));
    out
}

fn choose_gaps(
    f: &Frame,
    candidates: &[u32],
    idx: usize,
    chosen: &mut Vec<u32>,
    out: &mut Vec<Semimodule>,
) {
    let Some(&g) = candidates.get(idx) else {
        out.push(Semimodule { frame: *f, gaps: chosen.clone() });
        return;
    };
    let closed = [f.m(), f.n()]
        .iter()
        .all(|&p| g < p || chosen.binary_search(&(g - p)).is_ok());
    if closed {
        chosen.push(g);
        choose_gaps(f, candidates, idx + 1, chosen, out);
        chosen.pop();
    }
    choose_gaps(f, candidates, idx + 1, chosen, out);
}
