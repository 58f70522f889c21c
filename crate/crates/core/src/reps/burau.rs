use crate::scalars::{q_integer, q_power, BigComplex, BigFloat, LaurentPoly, Rational, Ring, TruncSeries};

use super::{Matrix, MatrixRep, RepError};

/// Default comparison tolerance for numeric data at `prec` bits: 10^(−prec/4).
pub fn default_tolerance(prec: u32) -> f64 {
    10f64.powf(-(prec as f64) / 4.0)
}

pub fn complex_series(s: &TruncSeries<Rational>, prec: u32) -> TruncSeries<BigComplex> {
    s.map(|r| BigComplex::from_real(BigFloat::from_rational(r, prec)))
}

/// q^k = e^{kh} with BigComplex coefficients.
pub fn q_pow(k: i64, order: usize, prec: u32) -> TruncSeries<BigComplex> {
    complex_series(&q_power(k, order), prec)
}

/// The (n−1)-dimensional Burau representation in symmetric form over
/// ℂ[[h]], q = e^h: σ₁ = diag(q, −q⁻¹, …, −q⁻¹), and σ_d (2 ≤ d ≤ n−1)
/// acts on the plane (e_{d−1}, e_d) by [d]⁻¹·[[−q^{−d}, s], [s, q^d]] with
/// s = √([d+1][d−1]) (principal branch), and by −q⁻¹ elsewhere.
pub fn burau_paper(n: usize, order: usize, prec: u32) -> Result<MatrixRep<TruncSeries<BigComplex>>, RepError> {
    if n < 3 {
        return Err(RepError::TooFewStrands(n));
    }
    let dim = n - 1;
    let zero = complex_series(&q_power(0, order), prec).zero_like();
    let minus_qinv = q_pow(-1, order, prec).negate();
    let mut gens = Vec::with_capacity(n - 1);
    let mut s1 = Matrix::zeros(dim, dim, &zero);
    s1.set(0, 0, q_pow(1, order, prec));
    for m in 1..dim {
        s1.set(m, m, minus_qinv.clone());
    }
    gens.push(s1);
    for d in 2..=dim {
        let qd = complex_series(&q_integer(d as i64, order), prec);
        let inv_qd = qd.inverse().ok_or(RepError::NotInvertible)?;
        let under = complex_series(&q_integer(d as i64 + 1, order).times(&q_integer(d as i64 - 1, order)), prec);
        let star = under.sqrt().map_err(|_| RepError::NotInvertible)?;
        let mut s = Matrix::zeros(dim, dim, &zero);
        for m in 0..dim {
            s.set(m, m, minus_qinv.clone());
        }
        let (i, j) = (d - 2, d - 1);
        s.set(i, i, q_pow(-(d as i64), order, prec).negate().times(&inv_qd));
        s.set(i, j, star.times(&inv_qd));
        s.set(j, i, star.times(&inv_qd));
        s.set(j, j, q_pow(d as i64, order, prec).times(&inv_qd));
        gens.push(s);
    }
    MatrixRep::new(n, gens, default_tolerance(prec))
}

/// Reduced Burau over ℤ[q, q⁻¹]: σ₁ has block [[−q, 1], [0, 1]], σ_{n−1}
/// has block [[1, 0], [q, −q]], and a middle σ_i acts on (e_{i−1}, e_i, e_{i+1})
/// by [[1, 0, 0], [q, −q, 1], [0, 0, 1]].
pub fn burau_integral(n: usize) -> Result<MatrixRep<LaurentPoly>, RepError> {
    if n < 3 {
        return Err(RepError::TooFewStrands(n));
    }
    let dim = n - 1;
    let one = LaurentPoly::q(0);
    let q = LaurentPoly::q(1);
    let mut gens = Vec::new();
    for i in 1..n {
        let mut m = Matrix::identity(dim, &one);
        let c = i - 1;
        m.set(c, c, q.negate());
        if c > 0 {
            m.set(c, c - 1, q.clone());
        }
        if c + 1 < dim {
            m.set(c, c + 1, one.clone());
        }
        gens.push(m);
    }
    MatrixRep::new(n, gens, 0.0)
}

/// The integral Burau form expanded exactly in ℚ[[h]] with q = e^h.
pub fn burau_integral_series(n: usize, order: usize) -> Result<MatrixRep<TruncSeries<Rational>>, RepError> {
    Ok(burau_integral(n)?.map(|p| p.to_series(order)))
}

/// Specialization q ↦ x of a Laurent representation.
pub fn specialize<R: crate::scalars::Scalar>(
    rep: &MatrixRep<LaurentPoly>,
    x: &R,
    embed: impl Fn(&Rational) -> R + Copy,
) -> Result<MatrixRep<R>, RepError> {
    let gens = rep.generators().iter().map(|g| g.map(|p| p.evaluate(x, embed))).collect();
    MatrixRep::new(rep.strands(), gens, 0.0)
}

/// Exponents of q on the diagonal of δ_r: 2 on e_{r−1}, −2(r−2) on e_s
/// for s < r−1 and −2(r−1) for s > r−1.
pub fn delta_exponents(r: usize, n: usize) -> Vec<i64> {
    (1..n)
        .map(|s| {
            if s == r - 1 {
                2
            } else if s < r - 1 {
                -2 * (r as i64 - 2)
            } else {
                -2 * (r as i64 - 1)
            }
        })
        .collect()
}
