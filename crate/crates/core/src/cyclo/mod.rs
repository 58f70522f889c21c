//! Cyclotomic integers, the units ε_{m,n} and their total positivity, and
//! finite-level Kummer automorphisms of ℚ(ζ_n, 2^{1/n}).

mod cyclotomic;
mod kummer;
mod soule;

pub use cyclotomic::{real_embeddings, CyclotomicInt};
pub use kummer::{kummer_compose, KummerLevelElement};
pub use soule::{
    embedding_signs, epsilon, epsilon_capped, epsilon_consistency, epsilon_exponents, epsilon_norm,
    epsilon_product_ball, totally_positive, PositivityCertificate, DEFAULT_EXPONENT_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycloError {
    #[error("ℓ = {ell} must be prime and n = {n} positive")]
    BadLevel { ell: u64, n: u32 },
    #[error("ε needs ℓ odd and m odd ≥ 3, got ℓ = {ell}, n = {n}, m = {m}")]
    BadParameters { ell: u64, n: u32, m: u32 },
    #[error("exponent sum {total} exceeds the cap {cap}")]
    ExponentCap { total: u64, cap: u64 },
    #[error("element is not fixed by complex conjugation")]
    NotReal,
    #[error("signs not certified at {0} bits")]
    PrecisionCap(u32),
    #[error("levels {0} and {1} differ")]
    KummerLevel(u64, u64),
    #[error("{a} is not a unit modulo {n}")]
    NotAUnit { a: u64, n: u64 },
}
