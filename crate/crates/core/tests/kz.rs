use braid_gt::freealg::{LieSeries, NCSeries};
use braid_gt::kz::{duality_check, is_group_like_phi, solve_kz, KzParams};
use braid_gt::reps::default_tolerance;
use braid_gt::scalars::{BigComplex, BigFloat, Ring};

const ORACLE_PREC: u32 = 512;

/// ζ(3) from Apéry's series (5/2) Σ (−1)^{k+1} / (k³ C(2k, k)).
fn zeta3(prec: u32) -> BigFloat {
    let mut sum = BigFloat::zero(prec);
    let mut binom = BigFloat::one(prec);
    for k in 1..=(prec as i64 / 2 + 8) {
        binom = binom.mul_i64(2 * (2 * k - 1)).div_i64(k);
        let term = binom.mul_i64(k * k * k).recip();
        sum = if k % 2 == 1 { sum.add(&term) } else { sum.sub(&term) };
    }
    sum.mul_i64(5).div_i64(2)
}

/// Φ up to degree 3 from its closed form: log Φ = ζ(2)/(2π)² [A,B]
/// − ζ(3)/(2iπ)³ ([A,[A,B]] − [[A,B],B]) in the Lyndon basis.
fn oracle() -> NCSeries<BigComplex> {
    let p = ORACLE_PREC;
    let pi = BigFloat::pi(p);
    let four_pi2 = pi.mul(&pi).mul_i64(4);
    let zeta2 = pi.mul(&pi).div_i64(6);
    // (2iπ)³ = −8iπ³, so ζ(3)/(2iπ)³ = i ζ(3)/(8π³).
    let c3 = BigComplex::new(BigFloat::zero(p), zeta3(p).div(&pi.mul(&pi).mul(&pi).mul_i64(8)));
    let mut l = LieSeries::zero(&["A", "B"], 3, &BigComplex::zero(p));
    l.set(vec![0, 1], BigComplex::from_real(zeta2.div(&four_pi2)));
    l.set(vec![0, 0, 1], c3.negate());
    l.set(vec![0, 1, 1], c3);
    l.exp()
}

fn distance(a: &NCSeries<BigComplex>, b: &NCSeries<BigComplex>) -> f64 {
    a.sub(b).terms().map(|(_, c)| c.norm()).fold(0.0, f64::max)
}

fn solve(degree: usize, prec: u32, eps: f64) -> NCSeries<BigComplex> {
    let mut p = KzParams::new(degree, prec);
    p.eps = eps;
    let phi = solve_kz(&p).unwrap().phi;
    phi.convert(&BigComplex::zero(ORACLE_PREC), |c| c.clone())
}

#[test]
fn oracle_matches_frozen_values() {
    let o = oracle();
    assert!((o.coeff(&[0, 1]).to_f64_pair().0 - 1.0 / 24.0).abs() < 1e-15);
    assert!((o.coeff(&[0, 0, 1]).to_f64_pair().1 + 0.0048460224503646).abs() < 1e-15);
    assert!((o.coeff(&[0, 1, 0]).to_f64_pair().1 - 0.0096920449007292).abs() < 1e-15);
    assert!((zeta3(128).to_f64() - 1.2020569031595942).abs() < 1e-15);
}

#[test]
fn solver_agrees_with_closed_form() {
    let o = oracle();
    let e128 = distance(&solve(3, 128, 0.125), &o);
    let e256 = distance(&solve(3, 256, 0.125), &o);
    assert!(e128 <= default_tolerance(128), "128 bits: {e128:e}");
    assert!(e256 <= default_tolerance(256), "256 bits: {e256:e}");
    assert!(e256 <= e128);
}

#[test]
fn result_does_not_depend_on_the_base_point() {
    let a = solve(4, 192, 0.125);
    let b = solve(4, 192, 0.0625);
    assert!(distance(&a, &b) <= default_tolerance(192));
}

#[test]
fn phi_is_group_like_and_self_dual() {
    let phi = solve_kz(&KzParams::new(4, 192)).unwrap();
    assert!(is_group_like_phi(&phi, default_tolerance(192)));
    assert!(duality_check(&phi.phi) <= default_tolerance(192));
}
