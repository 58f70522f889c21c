use num_bigint::BigInt;

use crate::reps::{burau_paper, default_tolerance, find_series_intertwiner, MatrixRep};
use crate::scalars::{BigComplex, BigFloat, Rational, Ring, Scalar, TruncSeries};

use super::{act_on_rep, GTElement, GtError};

/// χ_d(g) as a series in h with constant term 1.
#[derive(Clone, Debug)]
pub struct ChiSeries {
    d: usize,
    value: TruncSeries<BigComplex>,
}

impl ChiSeries {
    pub fn new(d: usize, value: TruncSeries<BigComplex>, tol: f64) -> Result<Self, GtError> {
        let one = value.coeff(0).one_like();
        let defect = value.coeff(0).minus(&one).norm();
        if defect > tol {
            return Err(GtError::Chi(format!("χ_{d} has constant term off 1 by {defect:e}")));
        }
        let mut c = value.coeffs().to_vec();
        c[0] = one;
        Ok(ChiSeries { d, value: TruncSeries::new(value.var(), c) })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn value(&self) -> &TruncSeries<BigComplex> {
        &self.value
    }

    pub fn coeff(&self, k: usize) -> &BigComplex {
        self.value.coeff(k)
    }

    pub fn is_one(&self, tol: f64) -> bool {
        self.value.coeffs().iter().skip(1).all(|c| c.norm() <= tol)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "d": self.d, "value": self.value.to_json() })
    }
}

/// Characters read off a diagonal intertwiner C with C R C⁻¹ = R', scaled
/// so that C₁₁ = 1: C = diag(1, χ₂, χ₂χ₃, …).
pub fn chi_from_reps(
    rep: &MatrixRep<TruncSeries<BigComplex>>,
    twisted: &MatrixRep<TruncSeries<BigComplex>>,
    tol: f64,
) -> Result<Vec<ChiSeries>, GtError> {
    let c = find_series_intertwiner(rep.generators(), twisted.generators(), tol)?;
    let inv00 = c.get(0, 0).inverse().ok_or_else(|| GtError::Chi("intertwiner has C₁₁ = 0".into()))?;
    let c = c.map(|s| s.times(&inv00));
    let off = c.off_diagonal_norm();
    if off > tol {
        return Err(GtError::Chi(format!("intertwiner is not diagonal (off-diagonal {off:e})")));
    }
    let mut out = Vec::new();
    for d in 2..=rep.dim() {
        let prev = c.get(d - 2, d - 2).inverse().ok_or_else(|| GtError::Chi(format!("C_{d} is not a unit")))?;
        out.push(ChiSeries::new(d, c.get(d - 1, d - 1).times(&prev), tol)?);
    }
    Ok(out)
}

/// Result of [`chi_extract`]: χ₂ … χ_{n−1}, plus whether the relation
/// checkers had confirmed g before extraction.
#[derive(Clone, Debug)]
pub struct ChiExtraction {
    pub chi: Vec<ChiSeries>,
    pub relations_verified: bool,
}

/// χ_d(g) for 2 ≤ d ≤ n−1 from the Burau representation of B_n over ℂ[[h]]
/// truncated at h^order.
pub fn chi_extract(g: &GTElement<Rational>, n: usize, order: usize, prec: u32) -> Result<ChiExtraction, GtError> {
    if g.lambda() != &crate::scalars::rat_int(1) {
        return Err(GtError::Chi("χ_d is defined on elements with λ = 1".into()));
    }
    let tol = default_tolerance(prec);
    let rep = burau_paper(n, order, prec)?;
    let sample = BigComplex::zero(prec);
    let gc = g.convert(&sample, |r| sample.rational(r));
    let twisted = act_on_rep(&gc, &rep, tol)?;
    Ok(ChiExtraction { chi: chi_from_reps(&rep, &twisted, tol)?, relations_verified: g.status().holds(tol) })
}

/// Q_n(d) = (d+1)^{2n+1} + (d−1)^{2n+1} − 2d^{2n+1}.
pub fn q_poly(n: u32, d: i64) -> BigInt {
    let e = 2 * n + 1;
    BigInt::from(d + 1).pow(e) + BigInt::from(d - 1).pow(e) - BigInt::from(2) * BigInt::from(d).pow(e)
}

/// ζ(3), ζ(5), … up to weight `order`.
pub fn odd_zetas(order: usize, prec: u32) -> Vec<BigFloat> {
    (1..).map(|n| 2 * n + 1).take_while(|&w| w <= order).map(|w| BigFloat::zeta(w as u32, prec)).collect()
}

/// χ_d(g₀) = exp(2 Σ_n ζ(2n+1)/(2n+1) · Q_n(d) · ℏ^{2n+1}) with ℏ = h/iπ,
/// truncated at h^order; `zetas[k]` is ζ(2k+3).
pub fn chi_closed_form(d: usize, order: usize, zetas: &[BigFloat], prec: u32) -> Result<ChiSeries, GtError> {
    let zero = BigComplex::zero(prec);
    let mut log = vec![zero.clone(); order + 1];
    // 1/(iπ) = −i/π
    let hbar = BigComplex::new(BigFloat::zero(prec), BigFloat::pi(prec).recip().neg());
    for n in 1.. {
        let w = 2 * n + 1;
        if w > order {
            break;
        }
        let z = zetas
            .get(n - 1)
            .ok_or_else(|| GtError::Chi(format!("ζ({w}) needed at order {order}")))?;
        let q = BigFloat::from_bigint(q_poly(n as u32, d as i64), prec);
        let c = z.mul(&q).mul_i64(2).div_i64(w as i64);
        log[w] = hbar.pow_u(w as u64).times(&BigComplex::from_real(c));
    }
    let value = TruncSeries::new("h", log).exp().map_err(|e| GtError::Chi(e.to_string()))?;
    ChiSeries::new(d, value, 0.0)
}

/// Fit of χ_d = 1 − 8κ₃*·d·h³ − (8/3)κ₅*·d(1+2d²)·h⁵ + O(h⁶) across a family.
#[derive(Clone, Debug)]
pub struct SouleFit {
    pub kappa3: BigComplex,
    pub kappa5: BigComplex,
    /// Largest deviation from the fitted shape, including the h, h², h⁴
    /// coefficients that the shape forces to vanish.
    pub residual: f64,
}

impl SouleFit {
    pub fn to_json(&self) -> serde_json::Value {
        let c = |z: &BigComplex| {
            let (re, im) = z.to_f64_pair();
            serde_json::json!([re, im])
        };
        serde_json::json!({ "kappa3": c(&self.kappa3), "kappa5": c(&self.kappa5), "residual": self.residual })
    }
}

/// Least-squares κ with c(d) ≈ κ·w(d) over the family.
fn fit_line(samples: &[(BigComplex, BigComplex)]) -> (BigComplex, f64) {
    let zero = samples[0].0.zero_like();
    let (mut num, mut den) = (zero.clone(), zero);
    for (c, w) in samples {
        num = num.plus(&c.times(w));
        den = den.plus(&w.times(w));
    }
    let kappa = num.times(&den.inverse().expect("nonzero weights"));
    let res = samples.iter().map(|(c, w)| c.minus(&kappa.times(w)).norm()).fold(0.0, f64::max);
    (kappa, res)
}

pub fn soule_shape_extract(family: &[ChiSeries]) -> Result<SouleFit, GtError> {
    if family.len() < 3 {
        return Err(GtError::Chi(format!("the shape fit needs at least 3 values of d, got {}", family.len())));
    }
    if let Some(c) = family.iter().find(|c| c.value.order() < 5) {
        return Err(GtError::Chi(format!("χ_{} is truncated below h⁵", c.d)));
    }
    let prec = family[0].coeff(0).precision();
    let real = |x: BigFloat| BigComplex::from_real(x);
    let mut s3 = Vec::new();
    let mut s5 = Vec::new();
    let mut res = 0.0f64;
    for c in family {
        let d = c.d as i64;
        // weights already include −8 and −8/3
        let w3 = real(BigFloat::from_i64(-8 * d, prec));
        let w5 = real(BigFloat::from_i64(-8 * d * (1 + 2 * d * d), prec).div_i64(3));
        s3.push((c.coeff(3).clone(), w3));
        s5.push((c.coeff(5).clone(), w5));
        for k in [1, 2, 4] {
            res = res.max(c.coeff(k).norm());
        }
    }
    let (kappa3, r3) = fit_line(&s3);
    let (kappa5, r5) = fit_line(&s5);
    Ok(SouleFit { kappa3, kappa5, residual: res.max(r3).max(r5) })
}
