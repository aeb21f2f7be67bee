//! Exact minimum-cost landmark sets (weighted metric dimension) of
//! two-dimensional grid graphs.
//!
//! Vertices are 1-based `(row, col)` pairs and distances are ℓ1. A set `L` is a
//! landmark set when every vertex has a distinct vector of distances to `L`.
//! [`solver::solve`] returns a cheapest one for any non-negative rational costs.

pub mod candidate;
pub mod cost;
pub mod error;
pub mod grid;
pub mod io;
pub mod minima;
pub mod oracle;
pub mod separation;
pub mod small_card;
pub mod solver;
pub mod svg;
pub mod weight;
pub mod zigzag;

pub use candidate::Category;
pub use cost::Cost;
pub use error::{Error, Result};
pub use grid::{Grid, Orientation, Vertex};
pub use solver::{solve, solve_with_report, LandmarkSolution, SolveReport};
