//! The KZ associator Φ_KZ = G₁⁻¹G₀ as a truncated series in A, B, and the
//! read-off of its low-weight coefficients.

mod analysis;
mod solve;
mod words;

pub use analysis::{
    duality_check, is_group_like_phi, log_phi, monotone_convergence, mzv_extract, pentagon_evidence, phi_bar, MzvEntry,
    PentagonRun,
};
pub use solve::{solve_kz, AssociatorSeries, KzParams};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum KzError {
    #[error("ε must lie in (0, 1/4), got {0}")]
    BadEps(f64),
    #[error("precision must be at least 128 bits, got {0}")]
    LowPrecision(u32),
    #[error("tolerance {target:e} not reached (error estimate {achieved:e})")]
    ToleranceNotReached { achieved: f64, target: f64 },
    #[error("degree {0} is too low")]
    Degree(usize),
    #[error("Φ is not group-like: {0}")]
    NotGroupLike(String),
}
