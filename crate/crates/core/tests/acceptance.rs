//! End-to-end acceptance run: one pass/fail line per criterion.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use braid_gt::cyclo::{epsilon, epsilon_consistency, totally_positive};
use braid_gt::freealg::{lyndon_words, LieSeries};
use braid_gt::groups::{artin_images, braid_eq, delta, full_twist, xi, BraidWord, FreeWord};
use braid_gt::gt::{
    act_on_rep, check_i, check_ii, check_iii, chi_closed_form, chi_extract, compose, invert, odd_zetas, soule_shape_extract,
    solve_gt, GTElement, P4Model,
};
use braid_gt::kz::{duality_check, monotone_convergence, mzv_extract, pentagon_evidence, solve_kz, KzParams};
use braid_gt::reps::{burau_integral, burau_integral_series, burau_paper, delta_exponents, q_pow, unipotent_power, Matrix};
use braid_gt::rigidity::{brute_force, cocycle_check, nakamura_identity_symbolic, RhoValue};
use braid_gt::scalars::{rat, rat_int, BigComplex, BigFloat, Rational, ResidueScalar, Ring, Scalar};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn random_braid(rng: &mut ChaCha8Rng, n: usize, len: usize) -> BraidWord {
    let letters: Vec<(usize, i8)> =
        (0..len).map(|_| (rng.gen_range(0..n - 1), if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
    BraidWord::from_letters(n, &letters).unwrap()
}

fn braid_core() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut failures = Vec::new();
    for n in 3..=5 {
        let s = |i| BraidWord::sigma(n, i, 1);
        let relations = (1..n).all(|i| {
            ((i + 1)..n).all(|j| {
                if j == i + 1 {
                    braid_eq(&s(i).mul(&s(j)).mul(&s(i)), &s(j).mul(&s(i)).mul(&s(j)))
                } else {
                    braid_eq(&s(i).mul(&s(j)), &s(j).mul(&s(i)))
                }
            })
        });
        let pure = (2..=n).all(|j| (1..j).all(|i| xi(i, j, n).unwrap().is_pure()));
        let deltas: Vec<_> = (2..=n).map(|r| delta(r, n).unwrap()).collect();
        let commute = deltas.iter().all(|a| deltas.iter().all(|b| braid_eq(&a.mul(b), &b.mul(a))));
        let t = full_twist(n, n);
        let central = (0..50).all(|_| {
            let len = rng.gen_range(1..=20);
            let b = random_braid(&mut rng, n, len);
            braid_eq(&t.mul(&b), &b.mul(&t))
        });
        let boundary = FreeWord::boundary(n);
        let action = (0..50).all(|_| {
            let len = rng.gen_range(1..=20);
            let b = random_braid(&mut rng, n, len);
            boundary.substitute(&artin_images(&b)) == boundary && braid_eq(&b.mul(&b.inverse()), &BraidWord::identity(n))
        });
        for (name, ok) in [("relations", relations), ("xi pure", pure), ("deltas commute", commute), ("twist central", central), ("boundary", action)] {
            if !ok {
                failures.push(format!("{name} B{n}"));
            }
        }
    }
    outcome(failures.is_empty(), if failures.is_empty() { "n ≤ 5, words ≤ 20".into() } else { failures.join(", ") })
}

fn burau() -> Outcome {
    let (order, prec) = (8, 256);
    let mut worst: f64 = 0.0;
    let mut exact = true;
    for n in 3..=6 {
        let rep = match burau_paper(n, order, prec) {
            Ok(r) => r,
            Err(e) => return outcome(false, format!("B{n}: {e}")),
        };
        worst = worst.max(rep.braid_residual());
        for r in 2..=n {
            let expect: Vec<_> = delta_exponents(r, n).iter().map(|e| q_pow(*e, order, prec)).collect();
            let m = rep.evaluate(&delta(r, n).unwrap()).unwrap();
            worst = worst.max(m.distance(&Matrix::diagonal(&expect)));
        }
        exact &= burau_integral(n).is_ok_and(|r| r.braid_residual() == 0.0);
    }
    outcome(worst < 1e-20 && exact, format!("max residual {worst:.2e}, integral form exact: {exact}"))
}

fn cocycle_triples<S: Scalar + PartialEq>(triples: &[[RhoValue<S>; 3]]) -> bool {
    triples.iter().all(|[a, b, c]| {
        let ab = a.then(b);
        cocycle_check(a, b, 0.0).is_ok_and(|x| x.holds())
            && cocycle_check(&ab, c, 0.0).is_ok_and(|x| x.holds())
            && ab.then(c) == a.then(&b.then(c))
    })
}

fn rigidity() -> Outcome {
    let brute = [3, 5, 7, 11].iter().all(|&p| brute_force(p).is_ok_and(|ls| ls.iter().all(|l| l.agrees)));
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let unit_q = |rng: &mut ChaCha8Rng| {
        let v = [-9, -5, -2, -1, 1, 2, 3, 7][rng.gen_range(0..8)];
        rat(v, rng.gen_range(1..=7))
    };
    let q: Vec<[RhoValue<Rational>; 3]> = (0..100)
        .map(|_| std::array::from_fn(|_| RhoValue { rho: rat(rng.gen_range(-20..=20), rng.gen_range(1..=9)), lambda: unit_q(&mut rng) }))
        .collect();
    let res = |v: i64| ResidueScalar::new(5, 3, v).unwrap();
    let z: Vec<[RhoValue<ResidueScalar>; 3]> = (0..100)
        .map(|_| {
            std::array::from_fn(|_| {
                let l = 5 * rng.gen_range(0..25) + rng.gen_range(1..5);
                RhoValue { rho: res(rng.gen_range(0..125)), lambda: res(l) }
            })
        })
        .collect();
    let (cq, cz, nak) = (cocycle_triples(&q), cocycle_triples(&z), nakamura_identity_symbolic());
    outcome(
        brute && cq && cz && nak,
        format!("brute force {brute}, cocycle Q {cq}, cocycle Z/5^3 {cz}, Nakamura {nak}"),
    )
}

fn same(a: &GTElement<Rational>, b: &GTElement<Rational>) -> bool {
    a.lambda() == b.lambda() && a.log_f().sub(b.log_f()).is_zero()
}

fn random_element(rng: &mut ChaCha8Rng, degree: usize) -> GTElement<Rational> {
    let mut l = LieSeries::zero(&["A", "B"], degree, &rat_int(0));
    for w in lyndon_words(2, degree).into_iter().filter(|w| w.len() >= 2) {
        l.set(w, rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)));
    }
    let lambda = rat([-3, -1, 1, 2, 5][rng.gen_range(0..5)], rng.gen_range(1..=2));
    GTElement::new(lambda, l).unwrap()
}

fn gt_relations() -> Outcome {
    let zero = rat_int(0);
    let identity_ok = (2..=6).all(|k| {
        let g = GTElement::identity(k, &zero);
        let f = g.f();
        check_i(&f) == 0.0
            && check_ii(g.lambda(), &f, 0.0) == Ok(0.0)
            && check_iii(g.log_f(), &P4Model::malcev(k, &zero)) == 0.0
    });
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let one = GTElement::identity(6, &zero);
    let mut group_ok = true;
    for _ in 0..5 {
        let (a, b, c) = (random_element(&mut rng, 6), random_element(&mut rng, 6), random_element(&mut rng, 6));
        let l = compose(&compose(&a, &b, 0.0).unwrap(), &c, 0.0).unwrap();
        let r = compose(&a, &compose(&b, &c, 0.0).unwrap(), 0.0).unwrap();
        let h = invert(&a, 0.0).unwrap();
        group_ok &= same(&l, &r)
            && same(&compose(&a, &h, 0.0).unwrap(), &one)
            && same(&compose(&h, &a, 0.0).unwrap(), &one);
    }
    let mut delta_ok = true;
    let n = 5;
    let rep = burau_integral_series(n, 5).unwrap();
    for (lambda, s3, s5) in [(1, 1, 0), (1, -2, 1), (3, 1, 2), (-1, 0, 1)] {
        let params = BTreeMap::from([(3, vec![rat_int(s3)]), (5, vec![rat_int(s5)])]);
        let g = solve_gt(&rat_int(lambda), 5, &params).unwrap().0;
        let twisted = act_on_rep(&g, &rep, 0.0).unwrap();
        for r in 2..=n {
            let d = delta(r, n).unwrap();
            let expect = unipotent_power(&rep.evaluate(&d).unwrap(), g.lambda(), 0.0).unwrap();
            delta_ok &= twisted.evaluate(&d).unwrap().distance(&expect) == 0.0;
        }
    }
    outcome(
        identity_ok && group_ok && delta_ok,
        format!("(1,1) exact {identity_ok}, associative and invertible {group_ok}, δ_r ↦ δ_r^λ {delta_ok}"),
    )
}

fn kz() -> Outcome {
    let phi = solve_kz(&KzParams::new(3, 256)).unwrap();
    let ab = (phi.coeff(&[0, 1]).norm() - 1.0 / 24.0).abs();
    let pi = std::f64::consts::PI;
    let target = 1.2020569031595942 / (2.0 * pi).powi(3);
    let entries = mzv_extract(&phi).unwrap();
    let z3 = entries
        .iter()
        .filter(|e| e.word.len() == 3)
        .map(|e| (e.value.norm() - target).abs())
        .fold(0.0, f64::max);
    let dual = duality_check(&phi.phi);
    let start = Instant::now();
    let deg4 = solve_kz(&KzParams::new(4, 256)).is_ok();
    let t4 = start.elapsed();
    outcome(
        ab < 1e-6 && z3 < 1e-5 && dual < 1e-6 && deg4 && t4 < Duration::from_secs(300),
        format!("|AB − 1/24| {ab:.1e}, ζ(3) coefficients {z3:.1e}, duality {dual:.1e}, degree 4 at 256 bits in {:.1} s", t4.as_secs_f64()),
    )
}

fn chi() -> Outcome {
    let (order, prec, tol) = (5, 192, 1e-30);
    let solved = |s3: i64, s5: i64| {
        let params = BTreeMap::from([(3, vec![rat_int(s3)]), (5, vec![rat_int(s5)])]);
        solve_gt(&rat_int(1), order, &params).unwrap().0
    };
    let n = 5;
    let identity = chi_extract(&GTElement::identity(order, &rat_int(0)), n, order, prec).unwrap();
    let trivial = identity.chi.iter().all(|c| c.is_one(tol));
    let (g1, g2) = (solved(1, -2), solved(3, 1));
    let g12 = compose(&g1, &g2, 0.0).unwrap();
    let x = |g: &GTElement<Rational>, n| chi_extract(g, n, order, prec).unwrap().chi;
    let (c1, c2, c12) = (x(&g1, n), x(&g2, n), x(&g12, n));
    let mult = (0..c1.len()).map(|k| c1[k].value().times(c2[k].value()).max_abs_diff(c12[k].value())).fold(0.0, f64::max);
    let bigger = x(&g1, n + 1);
    let stable = c1.iter().zip(&bigger).map(|(a, b)| a.value().max_abs_diff(b.value())).fold(0.0, f64::max);

    // Read Q₁(d), Q₂(d) back off the h³, h⁵ coefficients 2ζ(w)/w · Q · (iπ)^{−w}.
    let zetas = odd_zetas(order, prec);
    let i_pi = BigComplex::new(BigFloat::zero(prec), BigFloat::pi(prec));
    let mut q_ok = true;
    let mut family = Vec::new();
    for d in 2..=6i64 {
        let c = chi_closed_form(d as usize, order, &zetas, prec).unwrap();
        for (w, z, expect) in [(3u64, &zetas[0], 6 * d), (5, &zetas[1], 10 * d * (2 * d * d + 1))] {
            let scale = BigComplex::from_real(z.mul_i64(2).div_i64(w as i64)).times(&i_pi.pow_u(w).inverse().unwrap());
            let q = c.coeff(w as usize).times(&scale.inverse().unwrap());
            let (re, im) = q.to_f64_pair();
            q_ok &= im.abs() < 1e-30 && BigInt::from(re.round() as i64) == BigInt::from(expect) && (re - expect as f64).abs() < 1e-20;
        }
        family.push(c);
    }
    let fit = soule_shape_extract(&family).unwrap();
    let ok = trivial && mult < 1e-10 && stable < tol && q_ok && fit.residual < tol;
    outcome(
        ok,
        format!("identity {trivial}, multiplicative {mult:.1e}, stable {stable:.1e}, Q₁ Q₂ {q_ok}, shape fit {:.1e}", fit.residual),
    )
}

/// (ζ − 1)(ζ² − 1) over ℤ[x]/(x² + x + 1), multiplied out by hand.
fn epsilon_direct_ell3() -> i64 {
    let mul = |a: [i64; 2], b: [i64; 2]| {
        let (c0, c1, c2) = (a[0] * b[0], a[0] * b[1] + a[1] * b[0], a[1] * b[1]);
        [c0 - c2, c1 - c2]
    };
    let p = mul([-1, 1], [-2, -1]);
    assert_eq!(p[1], 0);
    p[0]
}

fn cyclo() -> Outcome {
    let direct = epsilon_direct_ell3();
    let small = [3, 5].iter().all(|&m| epsilon(3, 1, m).is_ok_and(|e| e.as_integer() == Some(BigInt::from(direct))));
    let mut bad = Vec::new();
    for ell in [3, 5, 7] {
        for n in [1, 2] {
            for m in [3, 5] {
                let ok = epsilon(ell, n, m).is_ok_and(|e| {
                    e.is_real() && totally_positive(&e, 128).is_ok_and(|(p, _)| p)
                }) && epsilon_consistency(ell, n, m, 256).unwrap_or(false);
                if !ok {
                    bad.push(format!("({ell},{n},{m})"));
                }
            }
        }
    }
    outcome(
        small && direct == 3 && bad.is_empty(),
        format!("ε(3,1,m) = {direct}: {small}, grid failures: {}", if bad.is_empty() { "none".into() } else { bad.join(" ") }),
    )
}

fn pentagon() -> Outcome {
    match pentagon_evidence(4, &[128, 192, 256]) {
        Ok(runs) => {
            let residuals: Vec<String> = runs.iter().map(|r| format!("{}b {:.1e}", r.precision, r.pentagon)).collect();
            let malcev = runs.last().map(|r| r.malcev_iii).unwrap_or(f64::NAN);
            outcome(
                monotone_convergence(&runs),
                format!("pentagon residuals {}; Malcev (III) residual {malcev:.5}", residuals.join(", ")),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 8] = [
        ("braid core", braid_core, 10),
        ("Burau representations", burau, 60),
        ("B3 rigidity and the ρ cocycle", rigidity, 30),
        ("GT relations and composition", gt_relations, 600),
        ("KZ associator anchors", kz, 300),
        ("χ_d characters", chi, 600),
        ("cyclotomic units", cyclo, 60),
        ("pentagon evidence for Φ_KZ", pentagon, 600),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let secs = start.elapsed().as_secs_f64();
        let in_time = secs < *limit as f64;
        let pass = o.passed && in_time;
        if !pass {
            failed += 1;
        }
        let budget = if in_time { String::new() } else { format!(" (over the {limit} s budget)") };
        println!("{} criterion {} {name}: {} [{secs:.2} s{budget}]", if pass { "PASS" } else { "FAIL" }, k + 1, o.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
