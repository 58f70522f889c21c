use crate::groups::BraidWord;
use crate::scalars::{Scalar, TruncSeries};

use super::{Matrix, RepError};

/// Generator images of a representation of B_n, with cached inverses.
#[derive(Clone, Debug)]
pub struct MatrixRep<S> {
    strands: usize,
    gens: Vec<Matrix<S>>,
    inverses: Vec<Matrix<S>>,
}

impl<S: Scalar> MatrixRep<S> {
    /// Validates the braid relations to `tol` (0 for exact rings).
    pub fn new(strands: usize, gens: Vec<Matrix<S>>, tol: f64) -> Result<Self, RepError> {
        let rep = Self::unchecked(strands, gens)?;
        let r = rep.braid_residual();
        if r > tol {
            return Err(RepError::BraidRelations { residual: r });
        }
        Ok(rep)
    }

    /// Builds without checking braid relations (used for candidate twists).
    pub fn unchecked(strands: usize, gens: Vec<Matrix<S>>) -> Result<Self, RepError> {
        if gens.len() + 1 != strands {
            return Err(RepError::StrandMismatch { expected: strands, got: gens.len() + 1 });
        }
        let inverses = gens.iter().map(|g| g.inverse().ok_or(RepError::NotInvertible)).collect::<Result<_, _>>()?;
        Ok(MatrixRep { strands, gens, inverses })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn dim(&self) -> usize {
        self.gens[0].dim()
    }

    pub fn generator(&self, i: usize) -> &Matrix<S> {
        &self.gens[i - 1]
    }

    pub fn generators(&self) -> &[Matrix<S>] {
        &self.gens
    }

    pub fn identity(&self) -> Matrix<S> {
        Matrix::identity(self.dim(), self.gens[0].sample())
    }

    /// R(b) = ∏ R(σ_{i_k})^{±1}, multiplicative in concatenation.
    pub fn evaluate(&self, b: &BraidWord) -> Result<Matrix<S>, RepError> {
        if b.strands() > self.strands {
            return Err(RepError::StrandMismatch { expected: self.strands, got: b.strands() });
        }
        let mut out = self.identity();
        for &(i, e) in b.letters() {
            out = out.mul(if e > 0 { &self.gens[i] } else { &self.inverses[i] });
        }
        Ok(out)
    }

    /// Largest defect among σ_iσ_{i+1}σ_i = σ_{i+1}σ_iσ_{i+1} and
    /// σ_iσ_j = σ_jσ_i (|i−j| ≥ 2).
    pub fn braid_residual(&self) -> f64 {
        let g = &self.gens;
        let mut r = 0.0f64;
        for i in 0..g.len() {
            for j in (i + 1)..g.len() {
                let d = if j == i + 1 {
                    g[i].mul(&g[j]).mul(&g[i]).distance(&g[j].mul(&g[i]).mul(&g[j]))
                } else {
                    g[i].mul(&g[j]).distance(&g[j].mul(&g[i]))
                };
                r = r.max(d);
            }
        }
        r
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> MatrixRep<T> {
        MatrixRep {
            strands: self.strands,
            gens: self.gens.iter().map(|m| m.map(&f)).collect(),
            inverses: self.inverses.iter().map(|m| m.map(&f)).collect(),
        }
    }

    /// Restriction to B_m ⊂ B_n (first m−1 generators).
    pub fn restrict(&self, m: usize) -> MatrixRep<S> {
        assert!(m >= 2 && m <= self.strands);
        MatrixRep {
            strands: m,
            gens: self.gens[..m - 1].to_vec(),
            inverses: self.inverses[..m - 1].to_vec(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "strands": self.strands,
            "generators": self.gens.iter().map(|g| g.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Matrices over truncated series in h.
impl<C: Scalar> Matrix<TruncSeries<C>> {
    /// The constant (h = 0) part.
    pub fn constant_part(&self) -> Matrix<C> {
        self.map(|s| s.coeff(0).clone())
    }

    /// Coefficient matrix of h^k.
    pub fn coefficient(&self, k: usize) -> Matrix<C> {
        self.map(|s| s.coeff(k).clone())
    }

    pub fn order(&self) -> usize {
        self.entries().iter().map(|s| s.order()).min().unwrap_or(0)
    }

    /// Reassembles Σ M_k h^k.
    pub fn from_coefficients(var: &str, coeffs: &[Matrix<C>]) -> Self {
        let (r, c) = (coeffs[0].rows(), coeffs[0].cols());
        let rows = (0..r)
            .map(|i| (0..c).map(|j| TruncSeries::new(var, coeffs.iter().map(|m| m.get(i, j).clone()).collect())).collect())
            .collect();
        Matrix::from_rows(rows)
    }

    /// Distance of the constant part from the identity.
    pub fn one_unit_defect(&self) -> f64 {
        self.constant_part().distance(&Matrix::identity(self.dim(), self.get(0, 0).coeff(0)))
    }

    /// M − 1 with its (numerically negligible) constant part set to exactly zero.
    fn nilpotent_part(&self, tol: f64) -> Result<Self, RepError> {
        let d = self.one_unit_defect();
        if d > tol {
            return Err(RepError::NotOneUnit { defect: d });
        }
        let x = self.sub(&Matrix::identity(self.dim(), self.sample()));
        Ok(x.map(|s| {
            let mut c = s.coeffs().to_vec();
            c[0] = c[0].zero_like();
            TruncSeries::new(s.var(), c)
        }))
    }

    /// log M for M ≡ 1 mod h (within `tol` at h = 0).
    pub fn log_one_unit(&self, tol: f64) -> Result<Self, RepError> {
        let x = self.nilpotent_part(tol)?;
        Matrix::log_one_plus_nilpotent(&x, self.order() + 2)
    }

    /// exp X for X ≡ 0 mod h.
    pub fn exp_topologically_nilpotent(&self) -> Result<Self, RepError> {
        Matrix::exp_nilpotent(self, self.order() + 2)
    }
}

/// M^λ = exp(λ log M) for a 1-unit M over series.
pub fn unipotent_power<C: Scalar>(
    m: &Matrix<TruncSeries<C>>,
    lambda: &C,
    tol: f64,
) -> Result<Matrix<TruncSeries<C>>, RepError> {
    let l = m.log_one_unit(tol)?;
    let scaled = l.map(|s| s.scale(lambda));
    scaled.exp_topologically_nilpotent()
}

/// M^λ for a unipotent matrix over an exact ring ((M − 1)^dim = 0).
pub fn unipotent_power_exact<S: Scalar>(m: &Matrix<S>, lambda: &S) -> Result<Matrix<S>, RepError> {
    let x = m.sub(&Matrix::identity(m.dim(), m.sample()));
    let l = Matrix::log_one_plus_nilpotent(&x, m.dim() + 1)?;
    Matrix::exp_nilpotent(&l.scale(lambda), m.dim() + 1)
}
