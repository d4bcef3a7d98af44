//! Cluster combinatorics of double Bott-Samelson cells.
//!
//! The crate builds seeds from trapezoid triangulations, mutates them with
//! c- and g-matrix tracking, constructs maximal green sequences and
//! Donaldson-Thomas transformations, checks Zamolodchikov periodicity and
//! computes the point-count polynomials `f` and `g` over finite fields.

pub mod braid;
pub mod cartan_weyl;
pub mod coords;
pub mod counting;
pub mod diagram;
pub mod dt;
pub mod error;
pub mod exact_math;
pub mod oracle;
pub mod seed;

pub use braid::{apply_braid_move, braids_equal, parse_braid, BraidEquality, BraidWord};
pub use cartan_weyl::{BraidExponent, CartanData, WeylElement};
pub use error::{Error, Result};
pub use exact_math::{Matrix, Polynomial, Rational, RationalFunction};
pub use seed::{FramedSeed, MutationScript, Seed, VertexId};
