use crate::groups::{delta, BraidWord};
use crate::reps::{unipotent_power, Matrix, MatrixRep};
use crate::scalars::{Scalar, TruncSeries};

use super::{GTElement, GtError};

type SeriesMatrix<C> = Matrix<TruncSeries<C>>;

/// f(X, Y) = exp(log f(log X, log Y)) for 1-units X, Y.
pub fn eval_f_on_matrices<C: Scalar>(
    g: &GTElement<C>,
    x: &SeriesMatrix<C>,
    y: &SeriesMatrix<C>,
    tol: f64,
) -> Result<SeriesMatrix<C>, GtError> {
    let lx = x.log_one_unit(tol)?;
    let ly = y.log_one_unit(tol)?;
    let l = g.log_f().eval(&[lx, ly], |m, c| m.map(|s| s.scale(c)));
    Ok(l.exp_topologically_nilpotent()?)
}

/// Generator images of R∘g without checking the braid relations:
/// σ₁ ↦ R(σ₁)R(σ₁²)^μ and σ_r ↦ M_r R(σ_r) R(σ_r²)^μ M_r⁻¹ with
/// M_r = f(R(σ_r²), R(δ_r)) and μ = (λ−1)/2.
pub fn act_on_rep_unchecked<C: Scalar>(
    g: &GTElement<C>,
    rep: &MatrixRep<TruncSeries<C>>,
    tol: f64,
) -> Result<MatrixRep<TruncSeries<C>>, GtError> {
    let n = rep.strands();
    let mu = g.mu();
    let mut gens = Vec::with_capacity(n - 1);
    for r in 1..n {
        let s = rep.generator(r);
        let sq = s.mul(s);
        let twisted = s.mul(&unipotent_power(&sq, &mu, tol)?);
        if r == 1 {
            gens.push(twisted);
            continue;
        }
        let d = rep.evaluate(&delta(r, n).expect("2 ≤ r ≤ n"))?;
        let m = eval_f_on_matrices(g, &sq, &d, tol)?;
        let m_inv = m.inverse().ok_or(crate::reps::RepError::NotInvertible)?;
        gens.push(m.mul(&twisted).mul(&m_inv));
    }
    Ok(MatrixRep::unchecked(n, gens)?)
}

/// R∘g, re-validated against the braid relations to `tol`.
pub fn act_on_rep<C: Scalar>(
    g: &GTElement<C>,
    rep: &MatrixRep<TruncSeries<C>>,
    tol: f64,
) -> Result<MatrixRep<TruncSeries<C>>, GtError> {
    let out = act_on_rep_unchecked(g, rep, tol)?;
    let r = out.braid_residual();
    if r > tol {
        return Err(crate::reps::RepError::BraidRelations { residual: r }.into());
    }
    Ok(out)
}

/// Largest distance between the images of `words` under two representations.
pub fn max_word_distance<S: Scalar>(a: &MatrixRep<S>, b: &MatrixRep<S>, words: &[BraidWord]) -> Result<f64, GtError> {
    let mut d = 0.0f64;
    for w in words {
        d = d.max(a.evaluate(w)?.distance(&b.evaluate(w)?));
    }
    Ok(d)
}
