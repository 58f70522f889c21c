use crate::freealg::NCSeries;
use crate::scalars::{BigComplex, BigFloat, Ring};

use super::words::Dense;
use super::KzError;

const A: usize = 0;
const B: usize = 1;

/// Parameters of a KZ run.
#[derive(Clone, Debug)]
pub struct KzParams {
    pub degree: usize,
    pub precision: u32,
    pub eps: f64,
    pub richardson: usize,
    /// Number of terms of the holomorphic factors H₀, H₁ in
    /// G₀ = H₀(x)x^{A/2iπ}, G₁ = H₁(1−x)(1−x)^{B/2iπ}; `None` picks enough
    /// terms for the working precision.
    pub correction_order: Option<usize>,
}

impl KzParams {
    pub fn new(degree: usize, precision: u32) -> Self {
        KzParams { degree, precision, eps: 0.125, richardson: 1, correction_order: None }
    }

    /// Target accuracy 10^(−precision/4).
    pub fn tolerance(&self) -> f64 {
        crate::reps::default_tolerance(self.precision)
    }
}

/// Φ_KZ = G₁⁻¹G₀ truncated at degree N, with run metadata.
#[derive(Clone, Debug)]
pub struct AssociatorSeries {
    pub phi: NCSeries<BigComplex>,
    pub eps: f64,
    pub richardson: usize,
    pub correction_order: usize,
    pub precision: u32,
    /// Largest coefficient change between the last two ε-extrapolants.
    pub error_estimate: f64,
}

impl AssociatorSeries {
    pub fn degree(&self) -> usize {
        self.phi.degree()
    }

    pub fn coeff(&self, w: &[u8]) -> BigComplex {
        self.phi.coeff(w)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "series": self.phi.to_json(),
            "eps": self.eps,
            "richardson": self.richardson,
            "correction_order": self.correction_order,
            "precision": self.precision,
            "error_estimate": self.error_estimate,
        })
    }
}

/// (k − ad_a)⁻¹ R = Σ_m (ad_a)^m R / k^{m+1}; ad_a is nilpotent on truncated series.
fn solve_shifted(k: i64, a: usize, r: &Dense) -> Dense {
    let mut term = r.div_i64(k);
    let mut acc = term.clone();
    for _ in 0..r.degree() {
        term = term.left(a).sub(&term.right(a)).div_i64(k);
        acc = acc.add(&term);
    }
    acc
}

/// H(ε)·ε^{main} for the solution normalized at the singular point 0 of
/// G′ = (main/x + other/(x−1))G, with H(x) = Σ_{k ≤ order} H_k x^k:
/// k H_k − [main, H_k] = (k−1)H_{k−1} − [main, H_{k−1}] − other·H_{k−1}.
fn boundary(eps: &BigFloat, main: usize, other: usize, order: usize, degree: usize, prec: u32) -> Dense {
    let mut v = Dense::one(degree, prec);
    let mut h = v.clone();
    for k in 1..=order as i64 {
        let ad = v.left(main).sub(&v.right(main));
        let r = v.scale_i64(k - 1).sub(&ad).sub(&v.left(other)).scale(eps);
        v = solve_shifted(k, main, &r);
        if v.log2_max().is_none() {
            break;
        }
        h = h.add(&v);
    }
    h.mul(&Dense::exp_letter(main, &eps.ln(), degree, prec))
}

/// Transports G from x = `from` to x = `to` (0 < from < to < 1) along
/// G′ = (A/x + B/(x−1))G by Taylor steps of at most half the distance to
/// the nearest singularity, using
/// x(x−1)G′ = ((x−1)A + xB)G.
fn transport(g: &Dense, from: &BigFloat, to: &BigFloat, prec: u32) -> Dense {
    let one = BigFloat::one(prec);
    let threshold = -(prec as i64) - 8;
    let mut x = from.clone();
    let mut state = g.clone();
    while x.cmp_value(to).is_lt() {
        let r = if x.cmp_value(&one.sub(&x)).is_lt() { x.clone() } else { one.sub(&x) };
        let mut h = r.div_i64(2);
        let rest = to.sub(&x);
        if rest.cmp_value(&h).is_le() {
            h = rest;
        }
        let c = x.clone();
        let cm1 = c.sub(&one);
        let denom = c.mul(&cm1);
        let two_c_m1 = c.mul_i64(2).sub(&one);
        let mut prev = Dense::zero(g.degree(), prec);
        let mut cur = state.clone();
        let mut sum = state.clone();
        let mut small = 0;
        for m in 0i64.. {
            let t1 = cur.left(A).scale(&cm1).add(&cur.left(B).scale(&c)).sub(&cur.scale(&two_c_m1.mul_i64(m)));
            let t2 = prev.left(A).add(&prev.left(B)).sub(&prev.scale_i64(m - 1)).scale(&h);
            let next = t1.add(&t2).scale(&h.div(&denom)).div_i64(m + 1);
            sum = sum.add(&next);
            let tiny = next.log2_max().is_none_or(|e| e < threshold);
            small = if tiny { small + 1 } else { 0 };
            prev = cur;
            cur = next;
            if small >= 2 && m as usize > g.degree() {
                break;
            }
        }
        state = sum;
        x = x.add(&h);
    }
    state
}

/// Φ at a single ε, before the (2iπ)^{−|w|} rescaling.
fn phi_real(eps: &BigFloat, order: usize, degree: usize, prec: u32) -> Dense {
    let g0 = boundary(eps, A, B, order, degree, prec);
    let one = BigFloat::one(prec);
    let g0_end = transport(&g0, eps, &one.sub(eps), prec);
    let g1_end = boundary(eps, B, A, order, degree, prec);
    g1_end.inverse_unit().mul(&g0_end)
}

fn max_diff(a: &Dense, b: &Dense) -> f64 {
    a.sub(b).log2_max().map_or(0.0, |e| 2f64.powi(e as i32 + 1))
}

/// Φ_KZ(A, B) from G′(x) = (1/2iπ)(A/x + B/(x−1))G(x) with G₀ ~ x^{A/2iπ}
/// at 0 and G₁ ~ (1−x)^{B/2iπ} at 1, Richardson-extrapolated over ε/2^j.
pub fn solve_kz(params: &KzParams) -> Result<AssociatorSeries, KzError> {
    if !(params.eps > 0.0 && params.eps < 0.25) {
        return Err(KzError::BadEps(params.eps));
    }
    if params.precision < 128 {
        return Err(KzError::LowPrecision(params.precision));
    }
    let n = params.degree;
    let work = params.precision + 32 + 4 * n as u32;
    let log_inv_eps = -params.eps.log2();
    let order = params
        .correction_order
        .unwrap_or_else(|| ((work as f64 + 8.0 * n as f64) / log_inv_eps).ceil() as usize + 1);
    let runs = params.richardson + 1;
    let mut table: Vec<Vec<Dense>> = Vec::new();
    for j in 0..runs.max(2) {
        let eps = BigFloat::from_f64(params.eps, work).mul_pow2(-(j as i64));
        let mut row = vec![phi_real(&eps, order, n, work)];
        for i in 1..=j.min(params.richardson) {
            let p = (order + i) as i64;
            let f = BigFloat::one(work).mul_pow2(p);
            let num = row[i - 1].scale(&f).sub(&table[j - 1][i - 1]);
            row.push(num.scale(&f.sub(&BigFloat::one(work)).recip()));
        }
        table.push(row);
    }
    let last = table.last().unwrap();
    let best = last[last.len() - 1].clone();
    let error_estimate = if last.len() >= 2 {
        max_diff(&last[last.len() - 1], &last[last.len() - 2])
    } else {
        max_diff(&best, &table[table.len() - 2][0])
    };
    let target = params.tolerance();
    if error_estimate > target {
        return Err(KzError::ToleranceNotReached { achieved: error_estimate, target });
    }
    Ok(AssociatorSeries {
        phi: rescale(&best, params.precision),
        eps: params.eps,
        richardson: params.richardson,
        correction_order: order,
        precision: params.precision,
        error_estimate,
    })
}

/// Coefficient of w times (2iπ)^{−|w|}.
fn rescale(d: &Dense, prec: u32) -> NCSeries<BigComplex> {
    let zero = BigComplex::zero(prec);
    let two_i_pi = BigComplex::new(BigFloat::zero(prec), BigFloat::pi(prec + 16).mul_i64(2).with_precision(prec));
    let inv = two_i_pi.inverse().expect("nonzero");
    let mut out = NCSeries::zero(&["A", "B"], d.degree(), &zero);
    for (len, bits, c) in d.entries() {
        if c.is_zero() {
            continue;
        }
        let w: Vec<u8> = (0..len).map(|i| ((bits >> (len - 1 - i)) & 1) as u8).collect();
        let v = BigComplex::from_real(c.with_precision(prec)).times(&inv.pow_u(len as u64));
        out.add_term(w, v);
    }
    out
}
