//! The maps `G_m` and `G_n`: a semimodule goes to the diagram whose columns
//! are `g_p` evaluated at its sorted `p`-generators.

use crate::diagrams::{Frame, Partition};
use crate::error::{Error, Result};
use crate::semimodules::{enumerate_semimodules, Semimodule};

/// Column heights `g_p(a_0), g_p(a_1), ...` over the sorted `p`-generators.
pub fn g_columns(s: &Semimodule, p: u32) -> Vec<u32> {
    s.generators(p).into_iter().map(|a| s.g(p, a) as u32).collect()
}

/// `G_p(s)` in row form. It fits below the diagonal of the frame of width `p`.
pub fn g_map(s: &Semimodule, p: u32) -> Partition {
    let cols = g_columns(s, p);
    Partition::from_columns(&cols).expect("g_p is weakly decreasing along the generators")
}

/// The frame in which `G_p` images live (width `p`).
pub fn g_frame(f: &Frame, p: u32) -> Frame {
    if p == f.n() {
        *f
    } else {
        f.swapped()
    }
}

/// `G_n(s) == transpose(G_m(dual(s)))`.
pub fn check_transpose_duality(s: &Semimodule) -> bool {
    let f = s.frame();
    g_map(s, f.n()) == g_map(&s.dual(), f.m()).transpose()
}

/// For `m = n + 1`, checks `G_n == G_m` on every semimodule.
pub fn check_consecutive_coincidence(f: &Frame) -> Result<bool> {
    if f.m() != f.n() + 1 {
        return Err(Error::WrongShape { m: f.m(), n: f.n() });
    }
    Ok(enumerate_semimodules(f)
        .iter()
        .all(|s| g_map(s, f.n()) == g_map(s, f.m())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{fits_below_diagonal, h_plus};

    fn frame(m: u32, n: u32) -> Frame {
        Frame::new(m, n).unwrap()
    }

    #[test]
    fn columns_example_three_seven() {
        let s = Semimodule::new(frame(3, 7), [2, 5]).unwrap();
        assert_eq!(g_columns(&s, 3), [2, 2, 0]);
        assert_eq!(g_columns(&s, 7), [1, 1, 1, 1, 0, 0, 0]);
        let d = s.dual();
        assert_eq!(g_columns(&d, 3), [4, 0, 0]);
        assert_eq!(g_columns(&d, 7), [2, 2, 0, 0, 0, 0, 0]);
        assert!(check_transpose_duality(&s));
    }

    #[test]
    fn full_semimodule_maps_to_empty() {
        let s = Semimodule::full(frame(4, 7));
        assert!(g_map(&s, 4).is_empty());
        assert!(g_map(&s, 7).is_empty());
        assert!(check_transpose_duality(&s));
    }

    #[test]
    fn semigroup_transpose_duality() {
        for (m, n) in [(3, 4), (5, 7), (4, 9), (2, 5)] {
            assert!(check_transpose_duality(&Semimodule::semigroup(frame(m, n))));
        }
    }

    #[test]
    fn consecutive_coincidence() {
        assert!(check_consecutive_coincidence(&frame(4, 3)).unwrap());
        assert!(check_consecutive_coincidence(&frame(2, 1)).unwrap());
        assert!(check_consecutive_coincidence(&frame(5, 4)).unwrap());
        assert_eq!(enumerate_semimodules(&frame(5, 4)).len(), 14);
        assert_eq!(check_consecutive_coincidence(&frame(3, 5)), Err(Error::WrongShape { m: 3, n: 5 }));
    }

    #[test]
    fn images_fit_and_measure_the_cell() {
        let f = frame(5, 7);
        for s in enumerate_semimodules(&f) {
            let dim = f.delta() - h_plus(&s.to_diagram(), &f);
            for p in [5, 7] {
                let g = g_map(&s, p);
                assert!(fits_below_diagonal(&g, &g_frame(&f, p)), "{s} p={p}");
                assert_eq!(g.area(), dim);
            }
        }
    }
}
