//! Nonlinearity of Boolean functions computed from their sparse algebraic
//! normal form.
//!
//! The pipeline has two phases. [`coefficients::calc_coef`] folds the monomial
//! list into combined coefficients, one per distinct union of monomial
//! supports. [`solver`] then searches the feasible zero/nonzero column patterns
//! of the linear distance matrix with a depth-first distance tree and
//! branch-and-bound, which yields the maximum absolute Walsh value without
//! ever materializing a truth table. This keeps functions of up to 64
//! variables tractable as long as the monomial count stays moderate.
//!
//! [`oracle`] holds exhaustive reference implementations (fast Walsh
//! transform, the linear distance matrix in three constructions) for small
//! variable counts.

pub mod anf;
pub mod coefficients;
mod error;
pub mod mask;
pub mod oracle;
pub mod report;
pub mod solver;

pub use anf::{mobius_transform, AnfFunction, TruthTable};
pub use coefficients::{
    brute_force_coef, build_problem, calc_coef, expected_coefficient_count, CombinedCoefficient,
    DistanceProblem, Ordering, Term,
};
pub use error::{Error, Result};
pub use mask::BitMask;
pub use oracle::{fast_walsh, nonlinearity_oracle, LinearDistanceMatrix, WalshSpectrum};
pub use report::{AnalysisReport, NearestAffine, SearchStats, Witness};
pub use solver::{
    analyze_problem, branch0, branch1, enumerate_tree, nonlinearity, path_to_linear_functions,
    walsh_of_row, PathAssignment, SolveOptions, TreeStats,
};

/// Largest supported variable count; every mask fits one `u64`.
pub const MAX_VARS: u32 = 64;
