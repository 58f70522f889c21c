//! Representations B₃ → SL₂(A) with R(σ₁) = a_λ: their classification, the
//! conjugator character ρ extracted from rigidity, and its cocycle law.

mod classify;
mod ratfunc;
mod rho;

pub use classify::{
    b3_system, brute_force, enumerate_b3, parse_ring_lambda, solve_b3, B3Branch, B3Classification,
    B3SL2Solution, BruteForceLine, CoefficientRing, RingLambda,
};
pub use ratfunc::{Poly2, RatFunc};
pub use rho::{cocycle_check, nakamura_identity_check, nakamura_identity_symbolic, rho_extract, CocycleCheck, RhoValue};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RigidityError {
    #[error("ring {0} is not a domain and the classification could not be confirmed")]
    NonIntegral(String),
    #[error("matrix is not in the b_λ(u) family (defect {defect:e})")]
    NotInFamily { defect: f64 },
    #[error("λ is not invertible")]
    NotInvertible,
    #[error("{0}")]
    Ring(String),
}
