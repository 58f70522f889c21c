use std::collections::BTreeMap;

use braid_gt::cyclo::{epsilon, epsilon_consistency, totally_positive};
use braid_gt::groups::{artin_images, braid_eq, delta, full_twist, xi, BraidWord, FreeWord};
use braid_gt::gt::{
    act_on_rep, check_i, check_ii, check_iii, chi_closed_form, chi_extract, compose, invert, odd_zetas, q_poly,
    soule_shape_extract, solve_gt, GTElement, P4Model,
};
use braid_gt::kz::{duality_check, is_group_like_phi, monotone_convergence, mzv_extract, pentagon_evidence, solve_kz, KzParams};
use braid_gt::reps::{burau_integral, burau_integral_series, burau_paper, delta_exponents, q_pow, unipotent_power, Matrix};
use braid_gt::rigidity::{brute_force, cocycle_check, nakamura_identity_symbolic, RhoValue};
use braid_gt::scalars::{rat, rat_int, Rational, ResidueScalar, Ring, Scalar};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Params;
use crate::report::{Check, ReportBuilder, VerificationReport};

pub const SUITES: [&str; 7] = ["braid", "burau", "rigidity", "gt-relations", "chi", "kz", "cyclo"];

/// Runs a suite (or "all", which runs every suite in the fixed order of
/// [`SUITES`]).
pub fn run_suite(name: &str, p: &Params) -> Result<VerificationReport, String> {
    let names: Vec<&str> = match name {
        "all" => SUITES.to_vec(),
        s if SUITES.contains(&s) => vec![s],
        s => return Err(format!("unknown suite '{s}' (expected one of {} or all)", SUITES.join(", "))),
    };
    if p.n < 3 {
        return Err(format!("n = {} needs at least 3 strands", p.n));
    }
    let mut report = ReportBuilder::new(format!("verify {name}"), p.to_json());
    for s in names {
        let checks = match s {
            "braid" => braid(p),
            "burau" => burau(p),
            "rigidity" => rigidity(p),
            "gt-relations" => gt_relations(p),
            "chi" => chi(p),
            "kz" => kz(p),
            "cyclo" => cyclo(p),
            _ => unreachable!(),
        };
        report.extend(checks.into_iter().map(|mut c| {
            c.name = format!("{s}/{}", c.name);
            c
        }));
    }
    Ok(report.finish())
}

fn sigma(n: usize, i: usize) -> BraidWord {
    BraidWord::sigma(n, i, 1)
}

fn random_braid(rng: &mut ChaCha8Rng, n: usize, len: usize) -> BraidWord {
    let letters: Vec<(usize, i8)> =
        (0..len).map(|_| (rng.gen_range(0..n - 1), if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
    BraidWord::from_letters(n, &letters).expect("indices in range")
}

fn braid(p: &Params) -> Vec<Check> {
    const PRES: &str = "braid group presentation";
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let max_len = if p.quick { 8 } else { 20 };
    for n in 3..=p.n.min(5) {
        let mut rel = true;
        for i in 1..n {
            for j in (i + 1)..n {
                let (a, b) = (sigma(n, i), sigma(n, j));
                rel &= if j == i + 1 {
                    braid_eq(&a.mul(&b).mul(&a), &b.mul(&a).mul(&b))
                } else {
                    braid_eq(&a.mul(&b), &b.mul(&a))
                };
            }
        }
        out.push(Check::exact(format!("relations B{n}"), PRES, rel));
        let pure = (1..=n).all(|j| (1..j).all(|i| xi(i, j, n).is_ok_and(|x| x.is_pure())));
        out.push(Check::exact(format!("xi pure B{n}"), "ξ_ij are pure braids", pure));
        let deltas: Vec<BraidWord> = (2..=n).map(|r| delta(r, n).expect("2 ≤ r ≤ n")).collect();
        let commute = deltas.iter().all(|a| deltas.iter().all(|b| braid_eq(&a.mul(b), &b.mul(a))));
        out.push(Check::exact(format!("delta commute B{n}"), "the δ_r commute", commute));
        let t = full_twist(n, n);
        let central = (1..n).all(|i| braid_eq(&t.mul(&sigma(n, i)), &sigma(n, i).mul(&t)));
        out.push(Check::exact(format!("full twist central B{n}"), "full twist is central", central));
        let boundary = FreeWord::boundary(n);
        let fixed = (0..20).all(|_| {
            let len = rng.gen_range(1..=max_len);
            let b = random_braid(&mut rng, n, len);
            let ok = boundary.substitute(&artin_images(&b)) == boundary;
            ok && braid_eq(&b.mul(&b.inverse()), &BraidWord::identity(n))
        });
        out.push(Check::exact(format!("Artin action on words B{n}"), "B_n ⊂ Aut(F_n) fixes x₁⋯x_n", fixed));
    }
    out
}

fn burau(p: &Params) -> Vec<Check> {
    const ANCHOR: &str = "Burau representation";
    let mut out = Vec::new();
    let order = p.degree;
    for n in 3..=p.n.min(6) {
        match burau_paper(n, order, p.precision) {
            Ok(rep) => {
                out.push(Check::residual(format!("symmetric form B{n}"), ANCHOR, rep.braid_residual(), p.tolerance));
                let mut worst: f64 = 0.0;
                for r in 2..=n {
                    let expect: Vec<_> = delta_exponents(r, n).iter().map(|e| q_pow(*e, order, p.precision)).collect();
                    match rep.evaluate(&delta(r, n).expect("2 ≤ r ≤ n")) {
                        Ok(m) => worst = worst.max(m.distance(&Matrix::diagonal(&expect))),
                        Err(_) => worst = f64::INFINITY,
                    }
                }
                out.push(
                    Check::residual(format!("delta diagonal B{n}"), "δ_r e_{r−1} = q² e_{r−1}", worst, p.tolerance)
                        .with_reference("diag(q^{−2(r−2)}, …, q², q^{−2(r−1)}, …)"),
                );
            }
            Err(e) => out.push(Check::error(format!("symmetric form B{n}"), ANCHOR, e)),
        }
        match burau_integral(n) {
            Ok(rep) => out.push(Check::exact(format!("integral form B{n}"), ANCHOR, rep.braid_residual() == 0.0)),
            Err(e) => out.push(Check::error(format!("integral form B{n}"), ANCHOR, e)),
        }
    }
    out
}

fn random_unit_rational(rng: &mut ChaCha8Rng) -> Rational {
    let mut v = 0;
    while v == 0 {
        v = rng.gen_range(-9..=9);
    }
    rat(v, rng.gen_range(1..=7))
}

fn random_unit_residue(rng: &mut ChaCha8Rng, ell: u64, k: u32) -> ResidueScalar {
    loop {
        let v = rng.gen_range(0..ell.pow(k) as i64);
        if v as u64 % ell != 0 {
            return ResidueScalar::new(ell, k, v).expect("prime ℓ");
        }
    }
}

/// ρ(g₁g₂) = λ₂ρ(g₁) + ρ(g₂) on both pairs of a triple, and associativity of
/// the composite.
fn cocycle_triples<S: Scalar + PartialEq>(triples: &[[RhoValue<S>; 3]]) -> bool {
    triples.iter().all(|[a, b, c]| {
        let ab = a.then(b);
        cocycle_check(a, b, 0.0).is_ok_and(|x| x.holds())
            && cocycle_check(&ab, c, 0.0).is_ok_and(|x| x.holds())
            && ab.then(c) == a.then(&b.then(c))
    })
}

fn rigidity(p: &Params) -> Vec<Check> {
    let mut out = Vec::new();
    let primes: &[u64] = if p.quick { &[3, 5] } else { &[3, 5, 7, 11] };
    for &q in primes {
        match brute_force(q) {
            Ok(lines) => {
                let ok = lines.iter().all(|l| l.agrees && l.solutions == l.predicted);
                let detail = serde_json::json!(lines
                    .iter()
                    .map(|l| serde_json::json!({"lambda": l.lambda, "solutions": l.solutions, "predicted": l.predicted}))
                    .collect::<Vec<_>>());
                out.push(Check::exact(format!("classification F{q}"), "B₃ → SL₂ rigidity", ok).with_detail(detail));
            }
            Err(e) => out.push(Check::error(format!("classification F{q}"), "B₃ → SL₂ rigidity", e)),
        }
    }
    let count = if p.quick { 20 } else { 100 };
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut q_triples = Vec::new();
    for _ in 0..count {
        q_triples.push(std::array::from_fn(|_| RhoValue {
            rho: rat(rng.gen_range(-20..=20), rng.gen_range(1..=9)),
            lambda: random_unit_rational(&mut rng),
        }));
    }
    out.push(Check::exact("cocycle over Q", "ρ(g₁g₂) = λ₂ρ(g₁) + ρ(g₂)", cocycle_triples(&q_triples)));
    match ResidueScalar::new(p.ell, p.k, 0) {
        Ok(zero) => {
            let mut r_triples = Vec::new();
            for _ in 0..count {
                r_triples.push(std::array::from_fn(|_| RhoValue {
                    rho: zero.from_i64_like(rng.gen_range(0..zero.modulus() as i64)),
                    lambda: random_unit_residue(&mut rng, p.ell, p.k),
                }));
            }
            out.push(Check::exact(
                format!("cocycle over Z/{}^{}", p.ell, p.k),
                "ρ(g₁g₂) = λ₂ρ(g₁) + ρ(g₂)",
                cocycle_triples(&r_triples),
            ));
        }
        Err(e) => out.push(Check::error("cocycle over residues", "ρ(g₁g₂) = λ₂ρ(g₁) + ρ(g₂)", e)),
    }
    out.push(Check::exact("Nakamura identity", "b_λ(8ρ₂λ⁻¹) = c(−8ρ₂)⁻¹ (b.λ) c(−8ρ₂)", nakamura_identity_symbolic()));
    out
}

fn solver_element(lambda: i64, degree: usize, s3: i64, s5: i64) -> Result<GTElement<Rational>, String> {
    let mut params = BTreeMap::new();
    params.insert(3, vec![rat_int(s3)]);
    params.insert(5, vec![rat_int(s5)]);
    solve_gt(&rat_int(lambda), degree, &params).map(|x| x.0).map_err(|e| e.to_string())
}

fn relation_residuals(g: &GTElement<Rational>) -> Result<[f64; 3], String> {
    let f = g.f();
    let ii = check_ii(g.lambda(), &f, 0.0).map_err(|e| e.to_string())?;
    let model = P4Model::malcev(g.degree(), &rat_int(0));
    Ok([check_i(&f), ii, check_iii(g.log_f(), &model)])
}

fn same_element(a: &GTElement<Rational>, b: &GTElement<Rational>) -> bool {
    a.lambda() == b.lambda() && a.log_f().sub(b.log_f()).is_zero()
}

fn gt_relations(p: &Params) -> Vec<Check> {
    const REL: &str = "relations (I), (II), (III)";
    const COMP: &str = "composition law of GT";
    let degree = p.degree.clamp(2, 6);
    let mut out = Vec::new();
    let zero = rat_int(0);
    let id = GTElement::identity(degree, &zero);
    match relation_residuals(&id) {
        Ok(r) => out.push(Check::exact("(1,1) relations", REL, r == [0.0; 3]).with_detail(serde_json::json!(r))),
        Err(e) => out.push(Check::error("(1,1) relations", REL, e)),
    }
    let seeds = [(1, 1, 0), (1, -2, 1), (3, 1, 2), (-1, 0, 1)];
    let elements: Result<Vec<_>, String> = seeds.iter().map(|&(l, a, b)| solver_element(l, degree, a, b)).collect();
    let elements = match elements {
        Ok(e) => e,
        Err(e) => {
            out.push(Check::error("solver elements", REL, e));
            return out;
        }
    };
    for (g, (l, a, b)) in elements.iter().zip(seeds) {
        let name = format!("solver element ({l}; {a}, {b})");
        match relation_residuals(g) {
            Ok(r) => out.push(Check::exact(name, REL, r == [0.0; 3]).with_detail(serde_json::json!(r))),
            Err(e) => out.push(Check::error(name, REL, e)),
        }
    }
    let assoc = (|| -> Result<bool, String> {
        let (a, b, c) = (&elements[0], &elements[1], &elements[2]);
        let e = |x| -> String { format!("{x}") };
        let left = compose(&compose(a, b, 0.0).map_err(e)?, c, 0.0).map_err(e)?;
        let right = compose(a, &compose(b, c, 0.0).map_err(e)?, 0.0).map_err(e)?;
        Ok(same_element(&left, &right))
    })();
    out.push(match assoc {
        Ok(ok) => Check::exact("associativity", COMP, ok),
        Err(e) => Check::error("associativity", COMP, e),
    });
    let inverses = elements.iter().all(|g| {
        invert(g, 0.0).is_ok_and(|h| {
            let one = GTElement::identity(degree, &zero);
            compose(g, &h, 0.0).is_ok_and(|x| same_element(&x, &one))
                && compose(&h, g, 0.0).is_ok_and(|x| same_element(&x, &one))
        })
    });
    out.push(Check::exact("two-sided inverses", COMP, inverses));
    let composite_ok = compose(&elements[1], &elements[2], 0.0)
        .map_err(|e| e.to_string())
        .and_then(|g| relation_residuals(&g))
        .is_ok_and(|r| r == [0.0; 3]);
    out.push(Check::exact("composite satisfies relations", COMP, composite_ok));
    let n = p.n.min(5);
    let delta_fixed = (|| -> Result<bool, String> {
        let rep = burau_integral_series(n, degree).map_err(|e| e.to_string())?;
        for g in &elements {
            let twisted = act_on_rep(g, &rep, 0.0).map_err(|e| e.to_string())?;
            for r in 2..=n {
                let d = delta(r, n).expect("2 ≤ r ≤ n");
                let original = rep.evaluate(&d).map_err(|e| e.to_string())?;
                let expect = unipotent_power(&original, g.lambda(), 0.0).map_err(|e| e.to_string())?;
                if twisted.evaluate(&d).map_err(|e| e.to_string())?.distance(&expect) != 0.0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    })();
    out.push(match delta_fixed {
        Ok(ok) => Check::exact(format!("delta_r to delta_r^lambda B{n}"), "g sends δ_r to δ_r^λ", ok),
        Err(e) => Check::error(format!("delta_r to delta_r^lambda B{n}"), "g sends δ_r to δ_r^λ", e),
    });
    out
}

fn chi(p: &Params) -> Vec<Check> {
    const CHAR: &str = "χ_d is a character";
    let prec = p.precision.max(128);
    let tol = p.tolerance;
    let order = 5;
    let mut out = Vec::new();
    let n = p.n.clamp(4, 5);
    let run = || -> Result<Vec<Check>, String> {
        let e = |x: braid_gt::gt::GtError| x.to_string();
        let mut cs = Vec::new();
        let id = GTElement::identity(order, &rat_int(0));
        let trivial = chi_extract(&id, n, order, prec).map_err(e)?;
        cs.push(Check::exact("identity gives 1", CHAR, trivial.chi.iter().all(|c| c.is_one(tol))));
        let g1 = solver_element(1, order, 1, -2)?;
        let g2 = solver_element(1, order, 3, 1)?;
        let g12 = compose(&g1, &g2, 0.0).map_err(e)?;
        let c1 = chi_extract(&g1, n, order, prec).map_err(e)?.chi;
        let c2 = chi_extract(&g2, n, order, prec).map_err(e)?.chi;
        let c12 = chi_extract(&g12, n, order, prec).map_err(e)?.chi;
        let mult = (0..c1.len()).map(|k| c1[k].value().times(c2[k].value()).max_abs_diff(c12[k].value())).fold(0.0, f64::max);
        cs.push(Check::residual("multiplicative", CHAR, mult, 1e-10f64.max(tol)));
        let bigger = chi_extract(&g1, n + 1, order, prec).map_err(e)?.chi;
        let stable = c1.iter().zip(&bigger).map(|(a, b)| a.value().max_abs_diff(b.value())).fold(0.0, f64::max);
        cs.push(Check::residual(format!("stable B{n} to B{}", n + 1), "B_n ⊂ B_{n+1}", stable, tol));
        let q_ok = (0..=20i64).all(|d| q_poly(1, d) == BigInt::from(6 * d) && q_poly(2, d) == BigInt::from(10 * d * (2 * d * d + 1)));
        cs.push(Check::exact("Q_1 and Q_2", "Q_n(d) = (d+1)^{2n+1} + (d−1)^{2n+1} − 2d^{2n+1}", q_ok).with_reference("6d, 10d(2d²+1)"));
        let zetas = odd_zetas(order, prec);
        let family: Result<Vec<_>, _> = (2..=6).map(|d| chi_closed_form(d, order, &zetas, prec)).collect();
        let fit = soule_shape_extract(&family.map_err(e)?).map_err(e)?;
        cs.push(
            Check::residual("closed form has the Soule shape", "1 − 8κ₃dh³ − (8/3)κ₅d(1+2d²)h⁵", fit.residual, tol)
                .with_detail(fit.to_json()),
        );
        let x = chi_extract(&g1, 6, order, prec).map_err(e)?;
        let fit = soule_shape_extract(&x.chi).map_err(e)?;
        cs.push(
            Check::residual("solver element has the Soule shape", "1 − 8κ₃dh³ − (8/3)κ₅d(1+2d²)h⁵", fit.residual, tol)
                .with_detail(fit.to_json()),
        );
        Ok(cs)
    };
    match run() {
        Ok(cs) => out.extend(cs),
        Err(e) => out.push(Check::error("chi pipeline", CHAR, e)),
    }
    out
}

fn kz(p: &Params) -> Vec<Check> {
    const ANCHOR: &str = "KZ associator";
    let mut out = Vec::new();
    let degree = if p.quick { 3 } else { p.degree.max(3) };
    let prec = if p.quick { 128 } else { p.precision.max(128) };
    let params = KzParams::new(degree, prec);
    let tol = params.tolerance().max(p.tolerance);
    let phi = match solve_kz(&params) {
        Ok(phi) => phi,
        Err(e) => {
            out.push(Check::error("solve", ANCHOR, e));
            return out;
        }
    };
    let ab = phi.coeff(&[0, 1]).norm();
    out.push(Check::residual("|coeff AB| = 1/24", "ζ(2)/(2π)²", (ab - 1.0 / 24.0).abs(), tol).with_reference("1/24"));
    match mzv_extract(&phi) {
        Ok(entries) => {
            for e in entries {
                out.push(
                    Check::residual(format!("log Phi coefficient {}", e.word), "coefficients are MZVs", e.residual, tol)
                        .with_reference(e.candidate.clone()),
                );
            }
        }
        Err(e) => out.push(Check::error("zeta values", "coefficients are MZVs", e)),
    }
    out.push(Check::residual("duality", "Φ(A,B)Φ(B,A) = 1", duality_check(&phi.phi), tol));
    out.push(Check::exact("group-like", "Φ_KZ is group-like", is_group_like_phi(&phi, tol)));
    let precisions: &[u32] = if p.quick { &[128, 192] } else { &[128, 192, 256] };
    match pentagon_evidence(4, precisions) {
        Ok(runs) => {
            let detail = serde_json::json!(runs.iter().map(|r| r.to_json()).collect::<Vec<_>>());
            out.push(
                Check::exact("pentagon converges", "pentagon for Φ_KZ", monotone_convergence(&runs)).with_detail(detail),
            );
        }
        Err(e) => out.push(Check::error("pentagon converges", "pentagon for Φ_KZ", e)),
    }
    out
}

fn cyclo(p: &Params) -> Vec<Check> {
    const UNITS: &str = "cyclotomic units ε_{m,n}";
    let mut out = Vec::new();
    for m in [3, 5] {
        let ok = epsilon(3, 1, m).is_ok_and(|e| e.as_integer() == Some(BigInt::from(3)));
        out.push(Check::exact(format!("epsilon(3,1,{m}) = 3"), UNITS, ok).with_reference("(ζ−1)(ζ²−1) = 3"));
    }
    let ells: &[u64] = if p.quick { &[3, 5] } else { &[3, 5, 7] };
    let levels: &[u32] = if p.quick { &[1] } else { &[1, 2] };
    for &ell in ells {
        for &n in levels {
            for m in [3, 5] {
                let name = format!("epsilon({ell},{n},{m})");
                match epsilon(ell, n, m) {
                    Ok(e) => {
                        out.push(Check::exact(format!("{name} real"), "totally real", e.is_real()));
                        let positive = totally_positive(&e, 128);
                        out.push(match positive {
                            Ok((pos, cert)) => {
                                Check::exact(format!("{name} positive"), "totally positive", pos).with_detail(cert.to_json())
                            }
                            Err(err) => Check::error(format!("{name} positive"), "totally positive", err),
                        });
                        let consistent = epsilon_consistency(ell, n, m, 256).unwrap_or(false);
                        out.push(Check::exact(format!("{name} product"), UNITS, consistent));
                    }
                    Err(err) => out.push(Check::error(name, UNITS, err)),
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{Overrides, Params};

    fn quick() -> Params {
        Params::resolve(&Overrides { quick: Some(true), precision: Some(128), ..Default::default() }, None).unwrap()
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &quick()).is_err());
    }

    #[test]
    fn fast_suites_pass() {
        for s in ["braid", "burau", "rigidity", "cyclo"] {
            let r = run_suite(s, &quick()).unwrap();
            assert!(r.passed(), "{s}: {}", r.table());
            assert!(r.checks.iter().all(|c| !c.anchor.is_empty()));
        }
    }
}
