//! Matrix representations of braid groups: Burau in symmetric and integral
//! form, the SL₂ matrices of the q = −1 degeneration, local systems and
//! intertwiner search.

mod burau;
mod intertwiner;
mod matrix;
mod rep;
mod sl2;

pub use burau::{
    burau_integral, burau_integral_series, burau_paper, complex_series, default_tolerance, delta_exponents,
    q_pow, specialize,
};
pub use intertwiner::{find_intertwiner, find_series_intertwiner, LocalSystem};
pub use matrix::{solve_linear, LinearSolution, Matrix};
pub use rep::{unipotent_power, unipotent_power_exact, MatrixRep};
pub use sl2::{a_lambda, b_lambda, b_of, c_of, d_lambda, dot_lambda};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RepError {
    #[error("braid relations fail (residual {residual:e})")]
    BraidRelations { residual: f64 },
    #[error("expected {expected} strands, got {got}")]
    StrandMismatch { expected: usize, got: usize },
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("matrix is not ≡ 1 mod h (defect {defect:e})")]
    NotOneUnit { defect: f64 },
    #[error("representation needs at least 3 strands, got {0}")]
    TooFewStrands(usize),
    #[error("no intertwiner (failed at order {order})")]
    NoIntertwiner { order: usize },
    #[error("product of the tuple is not 1 (defect {defect:e})")]
    NotLocalSystem { defect: f64 },
}
