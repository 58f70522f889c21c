use serde_json::json;

use crate::reps::{a_lambda, b_lambda, Matrix};
use crate::scalars::{Rational, ResidueScalar, Ring, Scalar};

use super::RigidityError;

/// Largest finite ring enumerated when a non-integral ring has to be
/// classified by exhaustion.
const ENUMERATION_CAP: u64 = 64;

/// Coefficient rings accepted by the B₃ classification.
pub trait CoefficientRing: Scalar + PartialEq {
    fn is_integral_domain(&self) -> bool;
    /// All elements, for finite rings of manageable size.
    fn elements(&self, cap: u64) -> Option<Vec<Self>>;
    fn describe(&self) -> String;
}

impl CoefficientRing for Rational {
    fn is_integral_domain(&self) -> bool {
        true
    }
    fn elements(&self, _cap: u64) -> Option<Vec<Self>> {
        None
    }
    fn describe(&self) -> String {
        "Q".into()
    }
}

impl CoefficientRing for ResidueScalar {
    fn is_integral_domain(&self) -> bool {
        self.k() == 1
    }
    fn elements(&self, cap: u64) -> Option<Vec<Self>> {
        (self.modulus() <= cap).then(|| (0..self.modulus() as i64).map(|v| self.from_i64_like(v)).collect())
    }
    fn describe(&self) -> String {
        if self.k() == 1 {
            format!("F{}", self.ell())
        } else {
            format!("Z{}^{}", self.ell(), self.k())
        }
    }
}

/// Which branch of the classification a solution lies on.
#[derive(Clone, Debug, PartialEq)]
pub enum B3Branch<S> {
    Equal,
    Family { u: S },
}

/// A trace-2, determinant-1 matrix b with a_λ b a_λ = b a_λ b, tagged by branch.
#[derive(Clone, Debug)]
pub struct B3SL2Solution<S: Scalar> {
    pub lambda: S,
    pub branch: B3Branch<S>,
    pub matrix: Matrix<S>,
}

/// All solutions for R(σ₁) = a_λ: b = a_λ, together with b_λ(u) for every
/// u when λ is a unit.
#[derive(Clone, Debug)]
pub struct B3Classification<S: Scalar> {
    pub ring: String,
    pub lambda: S,
    pub family: bool,
    /// Set when the ring is not a domain and the result was confirmed by
    /// exhaustive enumeration.
    pub by_enumeration: bool,
}

impl<S: CoefficientRing> B3Classification<S> {
    pub fn equal_solution(&self) -> B3SL2Solution<S> {
        B3SL2Solution { lambda: self.lambda.clone(), branch: B3Branch::Equal, matrix: a_lambda(&self.lambda) }
    }

    pub fn family_member(&self, u: &S) -> Option<B3SL2Solution<S>> {
        if !self.family {
            return None;
        }
        let matrix = b_lambda(&self.lambda, u).ok()?;
        Some(B3SL2Solution { lambda: self.lambda.clone(), branch: B3Branch::Family { u: u.clone() }, matrix })
    }

    /// Locates `b` in the classification.
    pub fn locate(&self, b: &Matrix<S>) -> Option<B3SL2Solution<S>> {
        let eq = self.equal_solution();
        if b.sub(&eq.matrix).is_zero() {
            return Some(eq);
        }
        let u = b.get(0, 0).one_like().minus(b.get(0, 0));
        self.family_member(&u).filter(|s| b.sub(&s.matrix).is_zero())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut branches = vec![json!({"tag": "equal", "matrix": a_lambda(&self.lambda).to_json()})];
        if self.family {
            branches.push(json!({
                "tag": "b-family",
                "parameter": "u",
                "matrix": [["1-u", "lambda*u^2"], ["-1/lambda", "1+u"]],
            }));
        }
        json!({
            "ring": self.ring,
            "lambda": self.lambda.to_string_repr(),
            "branches": branches,
            "by_enumeration": self.by_enumeration,
        })
    }
}

/// Residuals of the four equations obtained from aba = bab for
/// a = a_λ and b = [[1−u, v], [w, 1+u]] with vw = −u².
pub fn b3_system<S: Scalar>(lambda: &S, u: &S, v: &S, w: &S) -> [S; 4] {
    let one = lambda.one_like();
    let t = one.plus(&lambda.times(w));
    [
        u.times(&t),
        lambda.plus(&lambda.times(lambda).times(w)).minus(v).plus(&lambda.times(&u.times(u))),
        w.times(&t).negate(),
        u.times(&t).negate(),
    ]
}

/// Braid-relation solutions b = [[1−u, v], [w, 1+u]] of determinant 1
/// with a_λ b a_λ = b a_λ b, by exhaustion over a finite ring.
pub fn enumerate_b3<S: CoefficientRing>(lambda: &S, cap: u64) -> Option<Vec<Matrix<S>>> {
    let elems = lambda.elements(cap)?;
    let a = a_lambda(lambda);
    let one = lambda.one_like();
    let mut out = Vec::new();
    for u in &elems {
        for v in &elems {
            for w in &elems {
                if !v.times(w).plus(&u.times(u)).is_zero() {
                    continue;
                }
                let b = Matrix::from_rows(vec![vec![one.minus(u), v.clone()], vec![w.clone(), one.plus(u)]]);
                if a.mul(&b).mul(&a).sub(&b.mul(&a).mul(&b)).is_zero() {
                    out.push(b);
                }
            }
        }
    }
    Some(out)
}

/// Classification of R : B₃ → SL₂(A) with R(σ₁) = a_λ, by elimination:
/// the equation w(1 + λw) = 0 forces either w = 0 (then u = 0, v = λ and
/// b = a_λ) or λw = −1 (then λ is a unit and v = λu²).
///
/// The elimination uses that A is a domain. For small non-domains the
/// result is returned only if exhaustive enumeration confirms it.
pub fn solve_b3<S: CoefficientRing>(lambda: &S) -> Result<B3Classification<S>, RigidityError> {
    let mut cls = B3Classification {
        ring: lambda.describe(),
        lambda: lambda.clone(),
        family: lambda.inverse().is_some(),
        by_enumeration: false,
    };
    if !lambda.is_integral_domain() {
        let sols = enumerate_b3(lambda, ENUMERATION_CAP).ok_or_else(|| RigidityError::NonIntegral(cls.ring.clone()))?;
        if !matches_enumeration(&cls, &sols) {
            return Err(RigidityError::NonIntegral(cls.ring.clone()));
        }
        cls.by_enumeration = true;
    }
    Ok(cls)
}

fn matches_enumeration<S: CoefficientRing>(cls: &B3Classification<S>, sols: &[Matrix<S>]) -> bool {
    let Some(elems) = cls.lambda.elements(u64::MAX) else { return false };
    let expected = 1 + if cls.family { elems.len() } else { 0 };
    sols.len() == expected && sols.iter().all(|b| cls.locate(b).is_some())
}

/// Brute-force comparison over F_p for one λ.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct BruteForceLine {
    pub lambda: u64,
    pub solutions: usize,
    pub predicted: usize,
    pub agrees: bool,
}

/// Enumerates every trace-2, determinant-1 solution over F_p for each
/// λ ∈ F_p and compares it with `solve_b3`.
pub fn brute_force(p: u64) -> Result<Vec<BruteForceLine>, RigidityError> {
    let zero = ResidueScalar::new(p, 1, 0).map_err(|e| RigidityError::Ring(e.to_string()))?;
    let mut lines = Vec::new();
    for l in 0..p {
        let lambda = zero.from_i64_like(l as i64);
        let cls = solve_b3(&lambda)?;
        let sols = enumerate_b3(&lambda, u64::MAX).expect("finite field");
        let predicted = 1 + if cls.family { p as usize } else { 0 };
        lines.push(BruteForceLine {
            lambda: l,
            solutions: sols.len(),
            predicted,
            agrees: matches_enumeration(&cls, &sols),
        });
    }
    Ok(lines)
}

/// λ parsed in the ring designated by `ring`: "Q", "F<p>" or "Z<ℓ>^<k>".
pub enum RingLambda {
    Rational(Rational),
    Residue(ResidueScalar),
}

pub fn parse_ring_lambda(ring: &str, lambda: &str) -> Result<RingLambda, RigidityError> {
    let lam = crate::scalars::parse_rational(lambda).ok_or_else(|| RigidityError::Ring(format!("cannot parse λ = {lambda}")))?;
    let bad = || RigidityError::Ring(format!("unknown ring '{ring}' (expected Q, F<p> or Z<l>^<k>)"));
    if ring == "Q" {
        return Ok(RingLambda::Rational(lam));
    }
    let (ell, k) = if let Some(p) = ring.strip_prefix('F') {
        (p.parse::<u64>().map_err(|_| bad())?, 1)
    } else if let Some(rest) = ring.strip_prefix('Z') {
        let (l, k) = rest.split_once('^').ok_or_else(bad)?;
        (l.parse::<u64>().map_err(|_| bad())?, k.parse::<u32>().map_err(|_| bad())?)
    } else {
        return Err(bad());
    };
    let r = ResidueScalar::from_rational(ell, k, &lam).map_err(|e| RigidityError::Ring(e.to_string()))?;
    Ok(RingLambda::Residue(r))
}
