use crate::groups::{artin_images, BraidWord};
use crate::scalars::{Scalar, TruncSeries};

use super::{solve_linear, Matrix, RepError};

/// Coefficient matrix of P ↦ (P A_k − B_k P)_k in the entries of P (row-major).
fn intertwiner_system<S: Scalar>(t1: &[Matrix<S>], t2: &[Matrix<S>]) -> Matrix<S> {
    let d = t1[0].dim();
    let z = t1[0].sample().zero_like();
    let mut m = Matrix::zeros(t1.len() * d * d, d * d, &z);
    for (k, (a, b)) in t1.iter().zip(t2).enumerate() {
        for r in 0..d {
            for c in 0..d {
                let row = k * d * d + r * d + c;
                for j in 0..d {
                    // P[r][j] A[j][c]
                    let col = r * d + j;
                    let v = m.get(row, col).plus(a.get(j, c));
                    m.set(row, col, v);
                }
                for i in 0..d {
                    // − B[r][i] P[i][c]
                    let col = i * d + c;
                    let v = m.get(row, col).minus(b.get(r, i));
                    m.set(row, col, v);
                }
            }
        }
    }
    m
}

fn to_matrix<S: Scalar>(v: &[S], d: usize) -> Matrix<S> {
    Matrix::from_rows((0..d).map(|i| v[i * d..(i + 1) * d].to_vec()).collect())
}

/// An invertible P with P A_k = B_k P for all k, if one exists. When the
/// solution space has dimension > 1 a few integer combinations are tried.
pub fn find_intertwiner<S: Scalar>(t1: &[Matrix<S>], t2: &[Matrix<S>], tol: f64) -> Option<Matrix<S>> {
    assert_eq!(t1.len(), t2.len(), "tuples of different lengths");
    let d = t1[0].dim();
    let sys = intertwiner_system(t1, t2);
    let zero = vec![sys.sample().zero_like(); sys.rows()];
    let sol = solve_linear(&sys, &zero, tol);
    let candidates = sol.kernel.len();
    if candidates == 0 {
        return None;
    }
    for weights in 0..(candidates as i64 + 3) {
        let mut v = vec![sys.sample().zero_like(); d * d];
        for (j, kv) in sol.kernel.iter().enumerate() {
            let w = if weights < candidates as i64 {
                if j as i64 == weights { 1 } else { 0 }
            } else {
                1 + (j as i64 * (weights + 1)) % 7
            };
            for (x, y) in v.iter_mut().zip(kv) {
                *x = x.plus(&y.scale_i64(w));
            }
        }
        let p = to_matrix(&v, d);
        if let Some(inv) = p.inverse() {
            if tol == 0.0 || inv.max_norm() * p.max_norm() < 1.0 / tol.sqrt() {
                return Some(p);
            }
        }
    }
    None
}

/// Intertwiner P = Σ P_m h^m between tuples over ℂ[[h]] or ℚ[[h]], solved
/// order by order. P₀ spans the intertwiners of the constant parts (a
/// single invertible solution is chosen); higher corrections are taken
/// with the kernel coordinates set to zero.
pub fn find_series_intertwiner<C: Scalar>(
    t1: &[Matrix<TruncSeries<C>>],
    t2: &[Matrix<TruncSeries<C>>],
    tol: f64,
) -> Result<Matrix<TruncSeries<C>>, RepError> {
    let d = t1[0].dim();
    let order = t1.iter().chain(t2).map(|m| m.order()).min().unwrap_or(0);
    let c0: Vec<Matrix<C>> = t1.iter().map(|m| m.constant_part()).collect();
    let b0: Vec<Matrix<C>> = t2.iter().map(|m| m.constant_part()).collect();
    let p0 = find_intertwiner(&c0, &b0, tol).ok_or(RepError::NoIntertwiner { order: 0 })?;
    let sys = intertwiner_system(&c0, &b0);
    let a_coeffs: Vec<Vec<Matrix<C>>> = t1.iter().map(|m| (0..=order).map(|k| m.coefficient(k)).collect()).collect();
    let b_coeffs: Vec<Vec<Matrix<C>>> = t2.iter().map(|m| (0..=order).map(|k| m.coefficient(k)).collect()).collect();
    let mut ps = vec![p0];
    for m in 1..=order {
        // P_m A₀ − B₀ P_m = −Σ_{j<m} (P_j A_{m−j} − B_{m−j} P_j)
        let mut rhs = Vec::with_capacity(sys.rows());
        for k in 0..t1.len() {
            let mut acc = Matrix::zeros(d, d, c0[0].sample());
            for (j, pj) in ps.iter().enumerate() {
                acc = acc.add(&pj.mul(&a_coeffs[k][m - j])).sub(&b_coeffs[k][m - j].mul(pj));
            }
            let acc = acc.neg();
            rhs.extend(acc.entries().iter().cloned());
        }
        let sol = solve_linear(&sys, &rhs, tol);
        let x = sol.particular.ok_or(RepError::NoIntertwiner { order: m })?;
        ps.push(to_matrix(&x, d));
    }
    Ok(Matrix::from_coefficients("h", &ps))
}

/// A tuple (A₁, …, A_{n+1}) of invertible matrices with A₁⋯A_{n+1} = 1.
#[derive(Clone, Debug)]
pub struct LocalSystem<S> {
    mats: Vec<Matrix<S>>,
}

impl<S: Scalar> LocalSystem<S> {
    pub fn new(mats: Vec<Matrix<S>>, tol: f64) -> Result<Self, RepError> {
        let ls = LocalSystem { mats };
        let d = ls.product_defect();
        if d > tol {
            return Err(RepError::NotLocalSystem { defect: d });
        }
        Ok(ls)
    }

    pub fn matrices(&self) -> &[Matrix<S>] {
        &self.mats
    }

    pub fn len(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mats.is_empty()
    }

    fn product_defect(&self) -> f64 {
        let id = Matrix::identity(self.mats[0].dim(), self.mats[0].sample());
        self.mats.iter().fold(id.clone(), |acc, m| acc.mul(m)).distance(&id)
    }

    /// Composition with the Artin automorphism of `b`: A'_j is the image of
    /// φ_b(x_j) evaluated at the tuple.
    pub fn artin_twist(&self, b: &BraidWord, tol: f64) -> Result<Self, RepError> {
        if b.strands() > self.mats.len() {
            return Err(RepError::StrandMismatch { expected: self.mats.len(), got: b.strands() });
        }
        let b = b.embed(self.mats.len());
        let inverses: Vec<Matrix<S>> =
            self.mats.iter().map(|m| m.inverse().ok_or(RepError::NotInvertible)).collect::<Result<_, _>>()?;
        let id = Matrix::identity(self.mats[0].dim(), self.mats[0].sample());
        let mats = artin_images(&b)
            .iter()
            .map(|w| w.evaluate(&self.mats, &inverses, id.clone(), |x, y| x.mul(y)))
            .collect();
        let out = LocalSystem { mats };
        let d = out.product_defect();
        if d > tol {
            return Err(RepError::NotLocalSystem { defect: d });
        }
        Ok(out)
    }
}
