//! Exact linear algebra over the Gaussian rationals.

mod charpoly;
mod matrix;
mod numeric;
mod poly;
mod roots;
mod solve;

pub use charpoly::{char_poly, is_nilpotent_matrix};
pub use matrix::DenseMatrix;
pub use numeric::{numeric_roots, DEFAULT_TOL, MAX_ITERATIONS};
pub use poly::Poly;
pub use roots::{rational_roots, RootSplit};
pub use solve::{determinant, inverse, rank, rank_of_vectors, solve_linear, LinearSolution, SolutionKind};
