use crate::scalars::{rat, Scalar};

/// The point A^α B^β C^γ of the Heisenberg group, with product
/// (u,v,w) ⋆ (x,y,z) = (u+x, v+y, w − xv + z).
#[derive(Clone, Debug, PartialEq)]
pub struct HeisenbergPoint<C> {
    pub alpha: C,
    pub beta: C,
    pub gamma: C,
}

impl<C: Scalar + PartialEq> HeisenbergPoint<C> {
    pub fn new(alpha: C, beta: C, gamma: C) -> Self {
        HeisenbergPoint { alpha, beta, gamma }
    }

    pub fn identity_like(&self) -> Self {
        let z = self.alpha.zero_like();
        HeisenbergPoint { alpha: z.clone(), beta: z.clone(), gamma: z }
    }

    pub fn mul(&self, q: &Self) -> Self {
        HeisenbergPoint {
            alpha: self.alpha.plus(&q.alpha),
            beta: self.beta.plus(&q.beta),
            gamma: self.gamma.minus(&q.alpha.times(&self.beta)).plus(&q.gamma),
        }
    }

    pub fn inverse(&self) -> Self {
        HeisenbergPoint {
            alpha: self.alpha.negate(),
            beta: self.beta.negate(),
            gamma: self.gamma.negate().minus(&self.alpha.times(&self.beta)),
        }
    }

    /// p^t = (tα, tβ, tγ − t(t−1)/2·αβ); for integer t this is the iterated
    /// product, and for rational t it is the unique t-th power over a ℚ-algebra.
    pub fn pow(&self, num: i64, den: i64) -> Self {
        let t = self.alpha.rational(&rat(num, den));
        let binom = self.alpha.rational(&(rat(num, den) * (rat(num, den) - rat(1, 1)) / rat(2, 1)));
        HeisenbergPoint {
            alpha: self.alpha.times(&t),
            beta: self.beta.times(&t),
            gamma: self.gamma.times(&t).minus(&binom.times(&self.alpha).times(&self.beta)),
        }
    }

    /// The group commutator p q p⁻¹ q⁻¹.
    pub fn commutator(&self, q: &Self) -> Self {
        self.mul(q).mul(&self.inverse()).mul(&q.inverse())
    }
}
