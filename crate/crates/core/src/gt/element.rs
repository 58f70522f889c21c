use crate::freealg::{lie_log, substitute, LieSeries, NCSeries};
use crate::scalars::{rat, Rational, Scalar};

use super::GtError;

/// Residuals of the three defining relations, filled in by the checkers.
#[derive(Clone, Debug, Default, PartialEq, serde::Serialize)]
pub struct RelationStatus {
    pub i: Option<f64>,
    pub ii: Option<f64>,
    pub iii: Option<f64>,
}

impl RelationStatus {
    pub fn holds(&self, tol: f64) -> bool {
        [self.i, self.ii, self.iii].iter().all(|r| matches!(r, Some(x) if *x <= tol))
    }
}

/// A pair (λ, f) at truncation degree N, with f = exp(log f) and log f a
/// Lie series in A, B (x = e^A, y = e^B) without linear part.
#[derive(Clone, Debug)]
pub struct GTElement<C: Scalar> {
    lambda: C,
    log_f: LieSeries<C>,
    status: RelationStatus,
}

impl<C: Scalar> GTElement<C> {
    pub fn new(lambda: C, log_f: LieSeries<C>) -> Result<Self, GtError> {
        if lambda.inverse().is_none() {
            return Err(GtError::LambdaNotInvertible);
        }
        if log_f.alphabet().len() != 2 {
            return Err(GtError::Alphabet(log_f.alphabet().len()));
        }
        if !log_f.homogeneous(1).is_zero() {
            return Err(GtError::LinearPart);
        }
        Ok(GTElement { lambda, log_f, status: RelationStatus::default() })
    }

    /// The neutral element (1, 1).
    pub fn identity(degree: usize, sample: &C) -> Self {
        GTElement {
            lambda: sample.one_like(),
            log_f: LieSeries::zero(&["A", "B"], degree, sample),
            status: RelationStatus::default(),
        }
    }

    pub fn lambda(&self) -> &C {
        &self.lambda
    }

    pub fn log_f(&self) -> &LieSeries<C> {
        &self.log_f
    }

    pub fn f(&self) -> NCSeries<C> {
        self.log_f.exp()
    }

    pub fn degree(&self) -> usize {
        self.log_f.degree()
    }

    pub fn sample(&self) -> &C {
        self.log_f.sample()
    }

    /// μ = (λ − 1)/2.
    pub fn mu(&self) -> C {
        self.lambda.minus(&self.lambda.one_like()).times(&self.lambda.rational(&rat(1, 2)))
    }

    pub fn status(&self) -> &RelationStatus {
        &self.status
    }

    /// Runs the three relation checkers and records their residuals.
    pub fn verify(&mut self, tol: f64) -> Result<&RelationStatus, GtError> {
        let f = self.f();
        self.status.i = Some(check_i(&f));
        self.status.ii = Some(check_ii(&self.lambda, &f, tol)?);
        let model = super::P4Model::malcev(self.degree(), self.sample());
        self.status.iii = Some(super::check_iii(&self.log_f, &model));
        Ok(&self.status)
    }

    pub fn with_degree(&self, degree: usize) -> Self {
        GTElement { lambda: self.lambda.clone(), log_f: self.log_f.with_degree(degree), status: RelationStatus::default() }
    }

    pub fn convert<D: Scalar>(&self, sample: &D, f: impl Fn(&C) -> D) -> GTElement<D> {
        GTElement { lambda: f(&self.lambda), log_f: self.log_f.convert(sample, &f), status: self.status.clone() }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "lambda": self.lambda.to_string_repr(), "log_f": self.log_f.to_json() })
    }
}

impl GTElement<Rational> {
    /// Reads `{"lambda": "p/q", "log_f": <Lyndon-coefficient JSON>}`.
    pub fn from_json(v: &serde_json::Value) -> Result<Self, GtError> {
        let lambda = v["lambda"]
            .as_str()
            .and_then(crate::scalars::parse_rational)
            .ok_or_else(|| GtError::Parse("lambda".into()))?;
        let log_f = LieSeries::from_json(&v["log_f"]).map_err(|e| GtError::Parse(e.to_string()))?;
        GTElement::new(lambda, log_f)
    }
}

fn residual_from_one<C: Scalar>(s: &NCSeries<C>) -> f64 {
    s.sub(&s.one_like()).max_norm()
}

/// (I): max coefficient of f(A,B)·f(B,A) − 1.
pub fn check_i<C: Scalar>(f: &NCSeries<C>) -> f64 {
    residual_from_one(&f.mul(&f.permute_letters(&[1, 0])))
}

/// (II): max coefficient of y^μ f(x,y) x^μ f(z,x) z^μ f(y,z) − 1, with
/// μ = (λ − 1)/2 and z = (xy)⁻¹.
pub fn check_ii<C: Scalar>(lambda: &C, f: &NCSeries<C>, tol: f64) -> Result<f64, GtError> {
    let mu = lambda.minus(&lambda.one_like()).times(&lambda.rational(&rat(1, 2)));
    let (a, b) = (f.generator(0), f.generator(1));
    let x = a.exp()?;
    let y = b.exp()?;
    let z = x.mul(&y).inverse()?;
    let pw = |s: &NCSeries<C>| s.power(&mu);
    let word = pw(&y)?
        .mul(f)
        .mul(&pw(&x)?)
        .mul(&substitute(f, &[z.clone(), x.clone()], tol)?)
        .mul(&pw(&z)?)
        .mul(&substitute(f, &[y, z], tol)?);
    Ok(residual_from_one(&word))
}

/// Drinfeld's law (λ₁λ₂, f₁(f₂x^{λ₂}f₂⁻¹, y^{λ₂}) f₂).
pub fn compose<C: Scalar>(g1: &GTElement<C>, g2: &GTElement<C>, tol: f64) -> Result<GTElement<C>, GtError> {
    if g1.degree() != g2.degree() {
        return Err(GtError::DegreeMismatch(g1.degree(), g2.degree()));
    }
    let f2 = g2.f();
    let (a, b) = (f2.generator(0), f2.generator(1));
    let xl = a.scale(&g2.lambda).exp()?;
    let yl = b.scale(&g2.lambda).exp()?;
    let conj = f2.mul(&xl).mul(&f2.inverse()?);
    let f = substitute(&g1.f(), &[conj, yl], tol)?.mul(&f2);
    GTElement::new(g1.lambda.times(&g2.lambda), lie_log(&f, tol)?)
}

/// The two-sided inverse, by fixed-point iteration on
/// f_h = f(f_h x^{1/λ} f_h⁻¹, y^{1/λ})⁻¹ (one degree per step).
pub fn invert<C: Scalar>(g: &GTElement<C>, tol: f64) -> Result<GTElement<C>, GtError> {
    let li = g.lambda.inverse().ok_or(GtError::LambdaNotInvertible)?;
    let f = g.f();
    let (a, b) = (f.generator(0), f.generator(1));
    let xl = a.scale(&li).exp()?;
    let yl = b.scale(&li).exp()?;
    let mut fh = f.one_like();
    for _ in 0..=g.degree() {
        let conj = fh.mul(&xl).mul(&fh.inverse()?);
        fh = substitute(&f, &[conj, yl.clone()], tol)?.inverse()?;
    }
    let h = GTElement::new(li, lie_log(&fh, tol)?)?;
    let e1 = compose(g, &h, tol)?;
    let e2 = compose(&h, g, tol)?;
    for (k, e) in [(0, &e1), (1, &e2)] {
        let r = e.log_f.max_norm().max(e.lambda.minus(&e.lambda.one_like()).norm());
        if r > tol {
            return Err(GtError::NoInverse { side: k, residual: r });
        }
    }
    Ok(h)
}
