//! Exact computations with valuative invariants of matroids and polymatroids.
//!
//! Indicator functions of base polytopes are expanded in a canonical basis
//! of chain-scheme cones, from which the G-invariant, the Tutte polynomial,
//! Hopf-algebra operations and the rank tables of the valuation spaces all
//! follow in exact arithmetic.

pub mod chain;
pub mod decomposition;
pub mod error;
pub mod expansion;
pub mod grid;
pub mod hopf;
pub mod invariants;
pub mod lyndon;
pub mod matrix;
pub mod par;
pub mod rankfn;
pub mod series;
pub mod subset;
pub mod tables;
pub mod words;

pub use error::{Error, Result, Violation};
pub use rankfn::{Class, Point, RankFunction, INF};
pub use chain::ChainScheme;
pub use expansion::{expand, ExpansionVector, SymExpansionVector};
