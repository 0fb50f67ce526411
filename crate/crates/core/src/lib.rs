//! Combinatorics of rational-slope q,t-Catalan numbers.
//!
//! The crate works with a coprime pair `(m, n)` ([`Frame`]) and the objects
//! attached to it: Young diagrams below the diagonal, semimodules over the
//! semigroup generated by `m` and `n`, the maps `G_m` and `G_n`, bounce trees
//! and paths for `m = kn +- 1`, simultaneous `(m, n)`-cores, and the
//! area/`h+` exchanging involution when `min(m, n) <= 3`.

pub mod algebra;
pub mod bounce;
pub mod cores;
pub mod diagrams;
pub mod error;
pub mod gmaps;
pub mod semimodules;
pub mod smallsym;
pub mod verify;

pub use algebra::{BivariatePolynomial, Var};
pub use bounce::{
    bounce_path, bounce_statistic, bounce_tree, reconstruct, reconstruct_semimodule, BouncePath,
    BounceShape, BounceTree, Node, Reconstruction, Sign,
};
pub use diagrams::{
    enumerate_below_diagonal, fits_below_diagonal, h_plus, poincare_polynomials, qt_catalan,
    rational_catalan_count, Frame, Partition,
};
pub use error::{Error, Result};
pub use gmaps::{check_consecutive_coincidence, check_transpose_duality, g_columns, g_map};
pub use semimodules::{enumerate_semimodules, is_semimodule, Semimodule};
