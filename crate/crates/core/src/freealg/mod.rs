//! Truncated noncommutative series, the free Lie algebra in the Lyndon
//! basis, Baker–Campbell–Hausdorff, substitution and the Magnus expansion.

mod lie;
mod series;

pub use lie::{
    is_group_like, is_lie_element, is_lyndon, left_normed, lyndon_expansion, lyndon_words,
    standard_factorization, witt_dimension, IntPoly, LieSeries, LieTarget,
};
pub use series::{graded_key, NCSeries, Word};

use crate::groups::FreeWord;
use crate::scalars::{rat_int, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FreeAlgError {
    #[error("exp needs a series with zero constant term")]
    ExpConstantTerm,
    #[error("log needs a series with constant term 1")]
    LogConstantTerm,
    #[error("constant term is not invertible")]
    NotInvertible,
    #[error("series is not a Lie element (residual {residual:e})")]
    NotLie { residual: f64 },
    #[error("series is not group-like (residual {residual:e})")]
    NotGroupLike { residual: f64 },
    #[error("alphabet mismatch: expected {expected} images, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("cannot parse series data: {0}")]
    Parse(String),
}

/// The Baker–Campbell–Hausdorff series log(e^X e^Y) over ℚ, in the
/// Lyndon basis on the two letters X < Y.
pub fn bch_series(degree: usize) -> LieSeries<Rational> {
    let z = NCSeries::zero(&["X", "Y"], degree, &rat_int(0));
    let x = z.generator(0).exp().expect("generator");
    let y = z.generator(1).exp().expect("generator");
    let l = x.mul(&y).log().expect("product of exponentials");
    LieSeries::from_nc(&l, 0.0).expect("BCH is a Lie series")
}

/// log(exp L1 · exp L2).
pub fn bch<C: Scalar>(l1: &LieSeries<C>, l2: &LieSeries<C>) -> LieSeries<C> {
    let p = l1.exp().mul(&l2.exp());
    LieSeries::from_nc_with_residual(&p.log().expect("group-like product")).0
}

/// BCH evaluated in an arbitrary Lie algebra through a precomputed table.
pub fn bch_in<T: LieTarget>(
    x: &T,
    y: &T,
    table: &LieSeries<Rational>,
    scale: impl Fn(&T, &Rational) -> T,
) -> T {
    table.eval(&[x.clone(), y.clone()], scale)
}

/// Lie logarithm of a group-like series, checked within `tol`.
pub fn lie_log<C: Scalar>(f: &NCSeries<C>, tol: f64) -> Result<LieSeries<C>, FreeAlgError> {
    let l = f.log()?;
    let (lie, r) = LieSeries::from_nc_with_residual(&l);
    if r > tol {
        return Err(FreeAlgError::NotGroupLike { residual: r });
    }
    Ok(lie)
}

/// f(g₁, …, g_k) for group-like f and group-like images, computed as
/// exp(L(log g₁, …, log g_k)) with L = log f.
pub fn substitute<C: Scalar>(
    f: &NCSeries<C>,
    images: &[NCSeries<C>],
    tol: f64,
) -> Result<NCSeries<C>, FreeAlgError> {
    if images.len() != f.rank() {
        return Err(FreeAlgError::ArityMismatch { expected: f.rank(), got: images.len() });
    }
    let l = lie_log(f, tol)?;
    let logs: Result<Vec<_>, _> = images
        .iter()
        .map(|g| {
            let lg = g.log()?;
            if !is_lie_element(&lg, tol) {
                return Err(FreeAlgError::NotGroupLike { residual: f64::NAN });
            }
            Ok(lg)
        })
        .collect();
    let logs = logs?;
    Ok(l.eval(&logs, |t, c| t.scale(c)).exp()?)
}

/// Image of a free word under x_i ↦ exp(A_i), in the series algebra of `sample`.
pub fn magnus<C: Scalar>(w: &FreeWord, sample: &NCSeries<C>) -> NCSeries<C> {
    assert!(w.rank() <= sample.rank(), "word rank exceeds alphabet");
    let gens: Vec<(NCSeries<C>, NCSeries<C>)> = (0..w.rank())
        .map(|i| {
            let g = sample.generator(i);
            (g.exp().expect("generator"), g.neg().exp().expect("generator"))
        })
        .collect();
    let mut out = sample.one_like();
    for &(i, e) in w.letters() {
        out = out.mul(if e > 0 { &gens[i].0 } else { &gens[i].1 });
    }
    out
}
