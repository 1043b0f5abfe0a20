//! Computer algebra for abelian groups with operators and their skew
//! polynomial extensions: exhaustive identity checking, associativity
//! criteria, chain-condition analysis, and a gallery of worked structures.
//!
//! All carriers are finite and table-driven, so every check in this crate
//! is a complete enumeration (or an explicitly budgeted sample) rather than
//! a heuristic. Checkers return the least counterexample in a documented
//! scan order, which keeps runs reproducible regardless of thread count.

pub mod algebra;
pub mod check;
pub mod error;
pub mod format;
pub mod gallery;
pub mod noetherian;
pub mod ore;
pub mod rings;

pub use error::{Error, Result};
