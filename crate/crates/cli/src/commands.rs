use std::collections::BTreeMap;
use std::path::Path;

use braid_gt::cyclo::{epsilon, totally_positive};
use braid_gt::freealg::LieSeries;
use braid_gt::groups::FreeWord;
use braid_gt::gt::{
    act_on_rep, check_i, check_ii, check_iii, chi_closed_form, chi_extract, odd_zetas, rho_via_sl2, solve_gt, GTElement,
    P4Model, WordGT,
};
use braid_gt::kz::{mzv_extract, solve_kz, KzParams};
use braid_gt::reps::burau_integral_series;
use braid_gt::rigidity::{brute_force, parse_ring_lambda, solve_b3, RingLambda};
use braid_gt::scalars::{parse_rational, rat_int, Rational, Scalar};
use serde_json::{json, Value};

use crate::cli::{CycloCmd, ElementArgs, GtCmd, KzCmd, RigidityCmd};
use crate::config::{Overrides, Params};
use crate::report::{Check, ReportBuilder};

/// Outcome of a command: its JSON output and whether every check passed.
pub struct Output {
    pub json: Value,
    pub ok: bool,
}

/// Input errors (exit 2) versus failures of the computation itself (exit 1).
#[derive(Debug)]
pub enum CmdError {
    Usage(String),
    Failed(String),
}

fn usage(e: impl std::fmt::Display) -> CmdError {
    CmdError::Usage(e.to_string())
}

fn failed(e: impl std::fmt::Display) -> CmdError {
    CmdError::Failed(e.to_string())
}

fn ok(json: Value) -> Result<Output, CmdError> {
    Ok(Output { json, ok: true })
}

pub fn rigidity(cmd: &RigidityCmd) -> Result<Output, CmdError> {
    match cmd {
        RigidityCmd::Solve { lambda, ring } => {
            let v = match parse_ring_lambda(ring, lambda).map_err(usage)? {
                RingLambda::Rational(l) => solve_b3(&l).map_err(failed)?.to_json(),
                RingLambda::Residue(l) => solve_b3(&l).map_err(failed)?.to_json(),
            };
            ok(v)
        }
        RigidityCmd::Brute { p } => {
            let lines = brute_force(*p).map_err(usage)?;
            let all = lines.iter().all(|l| l.agrees);
            let rows: Vec<Value> = lines
                .iter()
                .map(|l| json!({"lambda": l.lambda, "solutions": l.solutions, "predicted": l.predicted, "agrees": l.agrees}))
                .collect();
            Ok(Output { json: json!({"p": p, "lines": rows, "agrees": all}), ok: all })
        }
    }
}

fn parse_lambda(s: &str) -> Result<Rational, CmdError> {
    parse_rational(s).ok_or_else(|| usage(format!("cannot parse λ = {s}")))
}

fn read_element(args: &ElementArgs, degree: Option<usize>) -> Result<GTElement<Rational>, CmdError> {
    let text = std::fs::read_to_string(&args.f_file).map_err(|e| usage(format!("{}: {e}", args.f_file.display())))?;
    let mut v: Value = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", args.f_file.display())))?;
    if let Some(inner) = v.get("element") {
        v = inner.clone();
    }
    let (lambda, log_f) = if v.get("log_f").is_some() {
        let l = v["lambda"].as_str().map(str::to_string).unwrap_or_else(|| "1".into());
        (l, v["log_f"].clone())
    } else {
        ("1".to_string(), v)
    };
    let lambda = parse_lambda(args.lambda.as_deref().unwrap_or(&lambda))?;
    let log_f = LieSeries::from_json(&log_f).map_err(usage)?;
    let g = GTElement::new(lambda, log_f).map_err(usage)?;
    Ok(match degree {
        Some(d) => g.with_degree(d),
        None => g,
    })
}

pub fn gt(cmd: &GtCmd, o: &Overrides, p: &Params) -> Result<Output, CmdError> {
    match cmd {
        GtCmd::Solve { lambda, params } => {
            let lambda = parse_lambda(lambda)?;
            let mut free: BTreeMap<usize, Vec<Rational>> = BTreeMap::new();
            for s in params {
                let (k, v) = s.split_once('=').ok_or_else(|| usage(format!("parameter '{s}' is not degree=value")))?;
                let k: usize = k.trim().parse().map_err(|_| usage(format!("bad degree in '{s}'")))?;
                free.entry(k).or_default().push(parse_lambda(v.trim())?);
            }
            let (g, report) = solve_gt(&lambda, p.degree, &free).map_err(failed)?;
            ok(json!({"element": g.to_json(), "free_parameters": report.free}))
        }
        GtCmd::Check { element } => {
            let g = read_element(element, o.degree)?;
            let f = g.f();
            let mut report = ReportBuilder::new("gt check", json!({"degree": g.degree(), "lambda": g.lambda().to_string_repr()}));
            report.push(Check::exact("(I)", "f(x,y)f(y,x) = 1", check_i(&f) == 0.0).with_detail(json!(check_i(&f))));
            match check_ii(g.lambda(), &f, 0.0) {
                Ok(r) => report.push(Check::exact("(II)", "y^μ f(x,y) x^μ f(z,x) z^μ f(y,z) = 1", r == 0.0).with_detail(json!(r))),
                Err(e) => report.push(Check::error("(II)", "y^μ f(x,y) x^μ f(z,x) z^μ f(y,z) = 1", e)),
            }
            let r3 = check_iii(g.log_f(), &P4Model::malcev(g.degree(), &rat_int(0)));
            report.push(Check::exact("(III)", "pentagon relation in P₄", r3 == 0.0).with_detail(json!(r3)));
            let r = report.finish();
            Ok(Output { ok: r.passed(), json: r.to_json() })
        }
        GtCmd::Act { element, rep } => {
            if rep != "burau" {
                return Err(usage(format!("unknown representation '{rep}' (only burau)")));
            }
            let g = read_element(element, o.degree)?;
            let n = p.n;
            let r = burau_integral_series(n, g.degree()).map_err(usage)?;
            match act_on_rep(&g, &r, 0.0) {
                Ok(t) => ok(json!({"strands": n, "order": g.degree(), "braid_residual": t.braid_residual(), "twisted": t.to_json()})),
                Err(e) => Ok(Output { json: json!({"strands": n, "error": e.to_string()}), ok: false }),
            }
        }
        GtCmd::Chi { element, d_max } => {
            if *d_max < 2 {
                return Err(usage("--d-max must be at least 2"));
            }
            let g = read_element(element, o.degree)?;
            let x = chi_extract(&g, d_max + 1, g.degree(), p.precision.max(128)).map_err(failed)?;
            ok(json!({
                "relations_verified": x.relations_verified,
                "chi": x.chi.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            }))
        }
        GtCmd::ChiClosedForm { d } => {
            let prec = p.precision.max(128);
            let z = odd_zetas(p.degree, prec);
            let c = chi_closed_form(*d, p.degree, &z, prec).map_err(usage)?;
            ok(c.to_json())
        }
        GtCmd::Rho { lambda, f } => {
            let word = FreeWord::parse(f, 2).map_err(usage)?;
            let g = WordGT::new(*lambda, word).map_err(usage)?;
            let r = rho_via_sl2(&g, p.ell, p.k).map_err(failed)?;
            ok(json!({
                "ring": format!("Z/{}^{}", p.ell, p.k),
                "lambda": r.lambda.to_string_repr(),
                "rho": r.rho.to_string_repr(),
            }))
        }
    }
}

pub fn kz(cmd: &KzCmd, p: &Params) -> Result<Output, CmdError> {
    let KzCmd::Solve { eps, richardson } = cmd;
    let mut params = KzParams::new(p.degree, p.precision);
    params.eps = *eps;
    params.richardson = *richardson;
    let phi = solve_kz(&params).map_err(|e| match e {
        braid_gt::kz::KzError::ToleranceNotReached { .. } => failed(e),
        _ => usage(e),
    })?;
    let mut v = phi.to_json();
    if phi.degree() >= 3 {
        let entries = mzv_extract(&phi).map_err(failed)?;
        v["zeta_table"] = json!(entries.iter().map(|e| e.to_json()).collect::<Vec<_>>());
    }
    ok(v)
}

pub fn cyclo(cmd: &CycloCmd, o: &Overrides, p: &Params) -> Result<Output, CmdError> {
    let CycloCmd::Epsilon { m, verify_positive } = cmd;
    let n = o.n.unwrap_or(1) as u32;
    let e = epsilon(p.ell, n, *m).map_err(usage)?;
    let mut v = json!({ "m": m, "epsilon": e.to_json(), "real": e.is_real() });
    let mut good = true;
    if *verify_positive {
        let (pos, cert) = totally_positive(&e, p.precision.min(128)).map_err(failed)?;
        v["signs"] = cert.to_json();
        good = pos;
    }
    Ok(Output { json: v, ok: good })
}

pub fn write_output(v: &Value, out: Option<&Path>) -> Result<(), String> {
    let text = serde_json::to_string_pretty(v).expect("JSON value");
    match out {
        Some(path) => std::fs::write(path, text + "\n").map_err(|e| format!("{}: {e}", path.display())),
        None => {
            use std::io::Write;
            match writeln!(std::io::stdout().lock(), "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.to_string()),
                _ => Ok(()),
            }
        }
    }
}
