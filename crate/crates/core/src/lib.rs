//! Finite-scale machinery for interpolation sets of topological dynamical systems.
//!
//! Sequences over a finite alphabet stand in for points of a shift space, and
//! subsets of `ℕ = {1, 2, …}` are modelled either by closed-form generators or
//! by explicit windows. Everything an infinitary statement would quantify over
//! is replaced by an explicit scale parameter, and every verdict carries that
//! scale.
//!
//! Position `i` of a [`SymbolWord`](words::SymbolWord) used as a sequence prefix
//! corresponds to the integer `i + 1`.

pub mod constructors;
pub mod entropy_count;
pub mod error;
pub mod intsets;
pub mod io;
pub mod rational;
pub mod recurrence;
pub mod words;

pub use error::{Error, Result};
