//! Biggs tree groups: permutation groups generated by the color involutions of
//! the radius-`R` ball of the `C`-regular properly edge-colored tree, with
//! mirrored half-edges at the boundary.
//!
//! The crate builds the colored tree, evaluates color words to exact
//! permutations, certifies group orders with a deterministic Schreier–Sims
//! chain, searches the Cayley graph for girth and diameter, and runs the
//! number-theoretic classification pipeline that identifies each group as
//! alternating, symmetric, or dihedral.

pub mod arith;
pub mod cayley;
pub mod checks;
pub mod classify;
pub mod error;
pub mod group;
pub mod perm;
pub mod reference;
pub mod tree;
pub mod word;

pub use error::{Error, Result};
pub use perm::Permutation;
pub use tree::{ColorId, ColoredTree};
pub use word::Word;
