use crate::freealg::{is_group_like, lie_log, LieSeries, NCSeries};
use crate::gt::{check_iii, pentagon_t4, P4Model};
use crate::scalars::{BigComplex, BigFloat, Ring};

use super::{solve_kz, AssociatorSeries, KzError, KzParams};

/// Φ̄(A, B) = Φ(−A, −B).
pub fn phi_bar(phi: &AssociatorSeries) -> AssociatorSeries {
    let mut out = phi.clone();
    let mut s = NCSeries::zero(&["A", "B"], phi.degree(), phi.phi.sample());
    for (w, c) in phi.phi.terms() {
        s.add_term(w.clone(), if w.len() % 2 == 1 { c.negate() } else { c.clone() });
    }
    out.phi = s;
    out
}

/// Φ(A, B)·Φ(B, A) − 1, largest coefficient.
pub fn duality_check(phi: &NCSeries<BigComplex>) -> f64 {
    let mut swapped = NCSeries::zero(&["A", "B"], phi.degree(), phi.sample());
    for (w, c) in phi.terms() {
        swapped.add_term(w.iter().map(|&l| 1 - l).collect(), c.clone());
    }
    let prod = phi.mul(&swapped);
    prod.sub(&prod.one_like()).terms().map(|(_, c)| c.norm()).fold(0.0, f64::max)
}

/// Group-likeness of Φ (log Φ is a Lie series) to `tol`.
pub fn is_group_like_phi(phi: &AssociatorSeries, tol: f64) -> bool {
    is_group_like(&phi.phi, tol)
}

/// A Lie coefficient of log Φ and its comparison with ±ζ(k)/(2iπ)^k.
#[derive(Clone, Debug)]
pub struct MzvEntry {
    pub word: String,
    pub value: BigComplex,
    pub candidate: String,
    pub candidate_value: BigComplex,
    /// min(|value − candidate|, |value + candidate|).
    pub residual: f64,
}

impl MzvEntry {
    pub fn to_json(&self) -> serde_json::Value {
        let (re, im) = self.value.to_f64_pair();
        serde_json::json!({
            "word": self.word,
            "value": [re, im],
            "magnitude": self.value.norm(),
            "candidate": self.candidate,
            "residual": self.residual,
        })
    }
}

/// Lie-basis coefficients of log Φ in degrees 1 to 3 with their ζ candidates.
pub fn mzv_extract(phi: &AssociatorSeries) -> Result<Vec<MzvEntry>, KzError> {
    if phi.degree() < 3 {
        return Err(KzError::Degree(phi.degree()));
    }
    let prec = phi.precision;
    let tol = crate::reps::default_tolerance(prec);
    let log = lie_log(&phi.phi.truncate(3), tol).map_err(|e| KzError::NotGroupLike(e.to_string()))?;
    let two_i_pi = BigComplex::new(BigFloat::zero(prec), BigFloat::pi(prec).mul_i64(2));
    let zero = BigComplex::zero(prec);
    let cand = |k: u32| BigComplex::from_real(BigFloat::zeta(k, prec)).times(&two_i_pi.pow_u(k as u64).inverse().unwrap());
    let entries: [(&[u8], &str, BigComplex); 5] = [
        (&[0], "0", zero.clone()),
        (&[1], "0", zero),
        (&[0, 1], "ζ(2)/(2iπ)²", cand(2)),
        (&[0, 0, 1], "ζ(3)/(2iπ)³", cand(3)),
        (&[0, 1, 1], "ζ(3)/(2iπ)³", cand(3)),
    ];
    Ok(entries
        .into_iter()
        .map(|(w, name, c)| {
            let v = log.coeff(w);
            let residual = v.minus(&c).norm().min(v.plus(&c).norm());
            let word = w.iter().map(|&l| if l == 0 { 'A' } else { 'B' }).collect();
            MzvEntry { word, value: v, candidate: name.to_string(), candidate_value: c, residual }
        })
        .collect())
}

/// log Φ_KZ as a Lie series.
pub fn log_phi(phi: &AssociatorSeries) -> Result<LieSeries<BigComplex>, KzError> {
    let tol = crate::reps::default_tolerance(phi.precision);
    lie_log(&phi.phi, tol.sqrt()).map_err(|e| KzError::NotGroupLike(e.to_string()))
}

/// One run of the pentagon evidence: residuals of Φ_KZ in the graded
/// model (pentagon) and in the Malcev model with ξ_{ij} ↦ e^{t_ij} read
/// verbatim (relation (III)).
#[derive(Clone, Debug)]
pub struct PentagonRun {
    pub precision: u32,
    pub tolerance: f64,
    pub pentagon: f64,
    pub malcev_iii: f64,
}

impl PentagonRun {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "precision": self.precision,
            "tolerance": self.tolerance,
            "pentagon_residual": self.pentagon,
            "malcev_iii_residual": self.malcev_iii,
        })
    }
}

/// Pentagon evidence for Φ_KZ at degree ≤ 4, at each of the given precisions.
pub fn pentagon_evidence(degree: usize, precisions: &[u32]) -> Result<Vec<PentagonRun>, KzError> {
    let mut out = Vec::new();
    for &p in precisions {
        let params = KzParams::new(degree, p);
        let phi = solve_kz(&params)?;
        let l = log_phi(&phi)?;
        let sample = BigComplex::zero(p);
        let graded = P4Model::graded(degree, &sample);
        let malcev = P4Model::malcev(degree, &sample);
        out.push(PentagonRun {
            precision: p,
            tolerance: params.tolerance(),
            pentagon: pentagon_t4(&l, &graded),
            malcev_iii: check_iii(&l, &malcev),
        });
    }
    Ok(out)
}

/// Whether the pentagon residuals decrease as the tolerance tightens.
pub fn monotone_convergence(runs: &[PentagonRun]) -> bool {
    runs.windows(2).all(|w| w[1].tolerance < w[0].tolerance && w[1].pentagon <= w[0].pentagon)
        && runs.last().is_some_and(|r| r.pentagon <= r.tolerance)
}
