//! Grothendieck–Teichmüller pairs (λ, f) at finite degree: the relations
//! (I), (II), (III), Drinfeld's composition law, the action on braid
//! group representations and the characters χ_d.

mod action;
mod chi;
mod element;
mod p4;
mod rho;
mod solver;

pub use action::{act_on_rep, act_on_rep_unchecked, eval_f_on_matrices, max_word_distance};
pub use chi::{
    chi_closed_form, chi_extract, chi_from_reps, odd_zetas, q_poly, soule_shape_extract, ChiExtraction, ChiSeries, SouleFit,
};
pub use element::{check_i, check_ii, compose, invert, GTElement, RelationStatus};
pub use rho::{rho_via_sl2, WordGT};
pub use solver::{solve_gt, SolverReport};
pub use p4::{artin_derivation, check_iii, pentagon_t4, Derivation, ModelKind, P4Lie, P4Model};

use crate::freealg::FreeAlgError;
use crate::reps::RepError;
use crate::rigidity::RigidityError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GtError {
    #[error("λ must be invertible")]
    LambdaNotInvertible,
    #[error("f must be a series in two letters, got {0}")]
    Alphabet(usize),
    #[error("log f must start in degree ≥ 2")]
    LinearPart,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("no inverse (side {side}, residual {residual:e})")]
    NoInverse { side: usize, residual: f64 },
    #[error("relations have no solution at degree {degree}")]
    NoSolution { degree: usize },
    #[error("cannot parse GT element: {0}")]
    Parse(String),
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Rigidity(#[from] RigidityError),
    #[error("χ extraction: {0}")]
    Chi(String),
}
