//! Coefficient rings: exact rationals, residues modulo ℓ^k, multiprecision
//! reals and complexes, truncated power series and Laurent polynomials.

mod ball;
mod bigfloat;
mod complex;
mod laurent;
mod rational;
mod residue;
mod ring;
mod series;

pub use ball::Ball;
pub use bigfloat::BigFloat;
pub use complex::{parse_complex, BigComplex};
pub use laurent::LaurentPoly;
pub use rational::{format_rational, parse_rational, rat, rat_int, rational_to_f64, Rational};
pub use residue::{is_prime, residue_of, ResidueScalar};
pub use ring::{Ring, Scalar};
pub use series::{
    q_integer, q_power, series_exp, series_log, series_rescale, series_sqrt, SeriesDump,
    TruncSeries,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {ell}^{k} does not fit the residue representation")]
    ModulusTooLarge { ell: u64, k: u32 },
    #[error("denominator is divisible by {ell}")]
    DenominatorNotInvertible { ell: u64 },
    #[error("exp needs a series with zero constant term")]
    NonzeroConstantTerm,
    #[error("log needs a series with constant term 1")]
    ConstantTermNotOne,
    #[error("no square root in this ring")]
    NoSquareRoot,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("series is not divisible by the requested power of the variable")]
    NotDivisible,
}
