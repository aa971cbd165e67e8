//! Solution spaces of linear systems `A v = w` over max-blank algebras.
//!
//! Over a totally ordered complete lattice with a monotone, join-distributive
//! multiplication, `X(A, w) = {v | A v = w}` is a finite union of
//! quasi-intervals: boxes in `Vⁿ` whose coordinates may exclude their lower
//! or upper endpoint. [`solver::solve`] builds that union from per-row scalar
//! analysis and residuals; [`oracle`] provides independent ground truth for
//! testing it.
//!
//! ```
//! use maxblank_core::{solve, Algebra, Matrix, Vector};
//!
//! let alg = Algebra::MaxPlus;
//! let a = Matrix::parse(alg, &[vec!["inf"]]).unwrap();
//! let w = Vector::parse(alg, &["inf"]).unwrap();
//! let region = solve(&a, &w).unwrap();
//! assert_eq!(region.members()[0].to_string(), "(-inf, inf]");
//! ```

pub mod algebra;
pub mod error;
pub mod format;
pub mod oracle;
pub mod qinterval;
pub mod solver;
pub mod tensor;

pub use algebra::{Algebra, Element, ExtRational, ScalarSolution};
pub use error::{Error, Result};
pub use qinterval::{QuasiInterval, SolutionRegion};
pub use solver::{greatest_solution, solve, solve_with, verify, SolveOptions, SolveStats};
pub use tensor::{Matrix, Vector};
