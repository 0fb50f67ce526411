//! The involution exchanging `delta - |D|` and `h+` when `min(m, n) <= 3`.

use crate::diagrams::{fits_below_diagonal, h_plus, Frame, Partition};
use crate::error::{Error, Result};

/// `(delta - |D|, h+(D))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StatPair {
    pub a: u64,
    pub b: u64,
}

impl StatPair {
    pub fn of(d: &Partition, f: &Frame) -> StatPair {
        StatPair { a: f.delta() - d.area(), b: h_plus(d, f) }
    }

    pub fn swapped(self) -> StatPair {
        StatPair { a: self.b, b: self.a }
    }
}

/// Whether `(a, b)` satisfies `a + b <= delta`, `a + 2b >= delta`, `2a + b >= delta`.
pub fn in_triangle(sp: StatPair, delta: u64) -> bool {
    let (a, b) = (sp.a, sp.b);
    a + b <= delta && a + 2 * b >= delta && 2 * a + b >= delta
}

/// All lattice points of the triangle for `delta`.
pub fn triangle_points(delta: u64) -> Vec<StatPair> {
    (0..=delta)
        .flat_map(|a| (0..=delta - a).map(move |b| StatPair { a, b }))
        .filter(|&sp| in_triangle(sp, delta))
        .collect()
}

fn three_frame(big: u32) -> Result<Frame> {
    Frame::new(3, big)
}

/// The stat pair of a diagram with rows `(beta, alpha)` in the frame `(3, N)`,
/// by the closed case formulas.
pub fn phi(d: &Partition, big: u32) -> Result<StatPair> {
    let f = three_frame(big)?;
    if !fits_below_diagonal(d, &f) {
        return Err(Error::InvalidDiagram(format!("{d} does not fit in the frame {f}")));
    }
    let k = (big / 3) as u64;
    let delta = f.delta();
    let (beta, alpha) = (d.row(0) as u64, d.row(1) as u64);
    let h = if beta <= k {
        beta
    } else if beta - alpha <= k {
        2 * beta - k
    } else {
        2 * alpha + k + 1
    };
    Ok(StatPair { a: delta - alpha - beta, b: h })
}

pub fn phi_inverse(sp: StatPair, big: u32) -> Result<Partition> {
    let f = three_frame(big)?;
    let delta = f.delta();
    if !in_triangle(sp, delta) {
        return Err(Error::OutsideTriangle { a: sp.a as i64, b: sp.b as i64, delta: delta as i64 });
    }
    let k = (big / 3) as u64;
    let (a, b) = (sp.a, sp.b);
    let (beta, alpha) = if b <= k {
        (b, delta - a - b)
    } else if (b + k).is_multiple_of(2) {
        let beta = (b + k) / 2;
        (beta, delta - a - beta)
    } else {
        let alpha = (b - k - 1) / 2;
        (delta - a - alpha, alpha)
    };
    Partition::new(vec![beta as u32, alpha as u32])
}

/// A diagram with swapped statistics: `delta - |i(D)| = h+(D)` and
/// `h+(i(D)) = delta - |D|`.
pub fn involution(d: &Partition, f: &Frame) -> Result<Partition> {
    if !fits_below_diagonal(d, f) {
        return Err(Error::InvalidDiagram(format!("{d} does not fit in the frame {f}")));
    }
    if f.n() < f.m() {
        // h+ is unchanged by transposing the diagram together with the frame.
        return Ok(involution(&d.transpose(), &f.swapped())?.transpose());
    }
    match f.m() {
        1 => Ok(d.clone()),
        2 => {
            let k = f.n() / 2;
            Partition::new(vec![k - d.row(0)])
        }
        3 => phi_inverse(phi(d, f.n())?.swapped(), f.n()),
        _ => Err(Error::UnsupportedShape { m: f.m(), n: f.n() }),
    }
}
