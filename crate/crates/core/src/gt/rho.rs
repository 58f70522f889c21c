use crate::groups::FreeWord;
use crate::reps::{a_lambda, Matrix};
use crate::rigidity::{rho_extract, RhoValue};
use crate::scalars::{residue_of, ResidueScalar, Ring};

use super::GtError;

/// A pair (λ, f) with f an honest word in x, y, the form in which f(a², b²)
/// can be evaluated in SL₂(ℤ/ℓ^k).
#[derive(Clone, Debug, PartialEq)]
pub struct WordGT {
    pub lambda: i64,
    pub f: FreeWord,
}

impl WordGT {
    pub fn new(lambda: i64, f: FreeWord) -> Result<Self, GtError> {
        if f.rank() != 2 {
            return Err(GtError::Alphabet(f.rank()));
        }
        Ok(WordGT { lambda, f })
    }

    pub fn identity() -> Self {
        WordGT { lambda: 1, f: FreeWord::identity(2) }
    }

    /// (λ₁λ₂, f₁(f₂x^{λ₂}f₂⁻¹, y^{λ₂}) f₂).
    pub fn compose(&self, g2: &WordGT) -> WordGT {
        let x = FreeWord::generator(2, 0).pow(g2.lambda).conjugate_by(&g2.f);
        let y = FreeWord::generator(2, 1).pow(g2.lambda);
        WordGT { lambda: self.lambda * g2.lambda, f: self.f.substitute(&[x, y]).mul(&g2.f) }
    }
}

/// Unipotent matrices [[1, t], [0, 1]] and [[1, 0], [−t, 1]] are a^t and b^t
/// for every t in the ring.
fn upper(t: &ResidueScalar) -> Matrix<ResidueScalar> {
    a_lambda(t)
}

fn lower(t: &ResidueScalar) -> Matrix<ResidueScalar> {
    let (o, z) = (t.one_like(), t.zero_like());
    Matrix::from_rows(vec![vec![o.clone(), z], vec![t.negate(), o]])
}

/// R∘g(σ₂) = f(a², b²)⁻¹ b^λ f(a², b²) over ℤ/ℓ^k, with ρ(g) read off by
/// rigidity; R∘g(σ₁) = a^λ is checked against the braid relation first.
pub fn rho_via_sl2(g: &WordGT, ell: u64, k: u32) -> Result<RhoValue<ResidueScalar>, GtError> {
    let res = |v: i64| residue_of(ell, k, &v.into()).map_err(|e| GtError::Parse(e.to_string()));
    let lambda = res(g.lambda)?;
    if lambda.inverse().is_none() {
        return Err(GtError::LambdaNotInvertible);
    }
    let two = res(2)?;
    let images = [upper(&two), lower(&two)];
    let inverses = [upper(&two.negate()), lower(&two.negate())];
    let one = Matrix::identity(2, &lambda);
    let f = g.f.evaluate(&images, &inverses, one, |p, q| p.mul(q));
    let f_inv = f.inverse().ok_or(crate::reps::RepError::NotInvertible)?;
    let s1 = upper(&lambda);
    let s2 = f_inv.mul(&lower(&lambda)).mul(&f);
    let defect = s1.mul(&s2).mul(&s1).distance(&s2.mul(&s1).mul(&s2));
    if defect > 0.0 {
        return Err(crate::reps::RepError::BraidRelations { residual: defect }.into());
    }
    Ok(rho_extract(&s2, &lambda, 0.0)?)
}
