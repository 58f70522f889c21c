use crate::reps::{b_lambda, b_of, c_of, dot_lambda, Matrix};
use crate::scalars::Scalar;

use super::RigidityError;

/// The conjugator character: R∘g(σ) = c(ρ)⁻¹ (R(σ).λ) c(ρ).
#[derive(Clone, Debug, PartialEq)]
pub struct RhoValue<S> {
    pub rho: S,
    pub lambda: S,
}

impl<S: Scalar + PartialEq> RhoValue<S> {
    pub fn identity(sample: &S) -> Self {
        RhoValue { rho: sample.zero_like(), lambda: sample.one_like() }
    }

    /// c_g = c(ρ).
    pub fn conjugator(&self) -> Matrix<S> {
        c_of(&self.rho)
    }

    /// X ↦ c(ρ)⁻¹ (X.λ) c(ρ).
    pub fn twist(&self, x: &Matrix<S>) -> Result<Matrix<S>, RigidityError> {
        let c = self.conjugator();
        let ci = c.inverse().expect("unipotent");
        Ok(ci.mul(&dot_lambda(x, &self.lambda).map_err(|_| RigidityError::NotInvertible)?).mul(&c))
    }

    /// The value on g₁g₂: (λ₁λ₂, λ₂ρ(g₁) + ρ(g₂)).
    pub fn then(&self, g2: &RhoValue<S>) -> RhoValue<S> {
        RhoValue { rho: g2.lambda.times(&self.rho).plus(&g2.rho), lambda: self.lambda.times(&g2.lambda) }
    }
}

/// The unique ρ with c(ρ)⁻¹ (b(0).λ) c(ρ) = `r2`, for `r2` in the b_λ(u)
/// family. Since c(v) b_λ(0) c(v)⁻¹ = b_λ(v/λ), this is ρ = −λu.
pub fn rho_extract<S: Scalar + PartialEq>(r2: &Matrix<S>, lambda: &S, tol: f64) -> Result<RhoValue<S>, RigidityError> {
    let u = r2.get(0, 0).one_like().minus(r2.get(0, 0));
    let fam = b_lambda(lambda, &u).map_err(|_| RigidityError::NotInvertible)?;
    let defect = fam.distance(r2);
    if defect > tol {
        return Err(RigidityError::NotInFamily { defect });
    }
    let value = RhoValue { rho: lambda.times(&u).negate(), lambda: lambda.clone() };
    let check = value.twist(&b_of(&lambda.zero_like()))?.distance(r2);
    if check > tol {
        return Err(RigidityError::NotInFamily { defect: check });
    }
    Ok(value)
}

/// Outcome of the cocycle verification for one pair.
#[derive(Clone, Debug, PartialEq)]
pub struct CocycleCheck {
    /// c_{g₁g₂} = (c_{g₁}.λ₂) c_{g₂}.
    pub conjugators: bool,
    /// ρ extracted from the composite twist equals λ₂ρ(g₁) + ρ(g₂).
    pub extracted: bool,
}

impl CocycleCheck {
    pub fn holds(&self) -> bool {
        self.conjugators && self.extracted
    }
}

/// Verifies ρ(g₁g₂) = λ₂ρ(g₁) + ρ(g₂), with g₁g₂ acting as g₁ followed by g₂.
pub fn cocycle_check<S: Scalar + PartialEq>(g1: &RhoValue<S>, g2: &RhoValue<S>, tol: f64) -> Result<CocycleCheck, RigidityError> {
    let g12 = g1.then(g2);
    let c1 = dot_lambda(&g1.conjugator(), &g2.lambda).map_err(|_| RigidityError::NotInvertible)?;
    let conjugators = c1.mul(&g2.conjugator()).distance(&g12.conjugator()) <= tol;
    let b = b_of(&g1.rho.zero_like());
    let composite = g2.twist(&g1.twist(&b)?)?;
    let got = rho_extract(&composite, &g12.lambda, tol)?;
    let extracted = got.rho.minus(&g12.rho).norm() <= tol;
    Ok(CocycleCheck { conjugators, extracted })
}

/// b_λ(8ρ₂λ⁻¹) = c(−8ρ₂)⁻¹ (b.λ) c(−8ρ₂).
pub fn nakamura_identity_check<S: Scalar + PartialEq>(lambda: &S, rho2: &S) -> Result<bool, RigidityError> {
    let inv = lambda.inverse().ok_or(RigidityError::NotInvertible)?;
    let lhs = b_lambda(lambda, &rho2.scale_i64(8).times(&inv)).map_err(|_| RigidityError::NotInvertible)?;
    let g = RhoValue { rho: rho2.scale_i64(-8), lambda: lambda.clone() };
    let rhs = g.twist(&b_of(&lambda.zero_like()))?;
    Ok(lhs.entries().iter().zip(rhs.entries()).all(|(x, y)| x == y))
}

/// The identity over ℚ(λ, ρ₂) with λ and ρ₂ indeterminates.
pub fn nakamura_identity_symbolic() -> bool {
    use super::RatFunc;
    nakamura_identity_check(&RatFunc::var(0), &RatFunc::var(1)).unwrap_or(false)
}
