use serde::{Deserialize, Serialize};

use super::{format_rational, rat, rat_int, Rational, Ring, Scalar, ScalarError};

/// Power series c₀ + c₁h + … + c_N h^N, truncated at order N.
///
/// Binary operations on series of different orders truncate to the
/// smaller order.
#[derive(Clone, Debug)]
pub struct TruncSeries<C> {
    var: String,
    coeffs: Vec<C>,
}

impl<C: Scalar> TruncSeries<C> {
    pub fn new(var: &str, coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least the constant term");
        TruncSeries { var: var.to_string(), coeffs }
    }

    /// The constant `c` at order `order`.
    pub fn constant(var: &str, c: C, order: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); order + 1];
        coeffs[0] = c;
        TruncSeries::new(var, coeffs)
    }

    /// The variable itself (h) at order `order`, with coefficients shaped like `sample`.
    pub fn variable(var: &str, sample: &C, order: usize) -> Self {
        let mut coeffs = vec![sample.zero_like(); order + 1];
        if order >= 1 {
            coeffs[1] = sample.one_like();
        }
        TruncSeries::new(var, coeffs)
    }

    pub fn from_rationals(var: &str, sample: &C, rs: &[Rational]) -> Self {
        TruncSeries::new(var, rs.iter().map(|r| sample.rational(r)).collect())
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn sample(&self) -> &C {
        &self.coeffs[0]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        TruncSeries { var: self.var.clone(), coeffs: self.coeffs[..=n].to_vec() }
    }

    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> TruncSeries<D> {
        TruncSeries { var: self.var.clone(), coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncSeries { var: self.var.clone(), coeffs: self.coeffs.iter().map(|x| x.times(c)).collect() }
    }

    /// Lowest index with a nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplication by h^k (shift), keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let z = self.sample().zero_like();
        let mut coeffs = vec![z; n + 1];
        for i in 0..=n {
            if i + k <= n {
                coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        TruncSeries { var: self.var.clone(), coeffs }
    }

    /// Division by h^k; the lowest k coefficients must vanish. The order drops by k.
    pub fn shift_down(&self, k: usize) -> Result<Self, ScalarError> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) || k > self.order() {
            return Err(ScalarError::NotDivisible);
        }
        Ok(TruncSeries { var: self.var.clone(), coeffs: self.coeffs[k..].to_vec() })
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut coeffs: Vec<C> = (1..=n).map(|k| self.coeffs[k].scale_i64(k as i64)).collect();
        coeffs.push(self.sample().zero_like());
        TruncSeries { var: self.var.clone(), coeffs }
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        let n = self.order();
        let z = self.sample().zero_like();
        let mut coeffs = vec![z.clone(); n + 1];
        for k in 1..=n {
            let r = rat(1, k as i64);
            coeffs[k] = self.coeffs[k - 1].times(&z.rational(&r));
        }
        TruncSeries { var: self.var.clone(), coeffs }
    }

    /// exp(s); the constant term must vanish.
    pub fn exp(&self) -> Result<Self, ScalarError> {
        if !self.coeffs[0].is_zero() {
            return Err(ScalarError::NonzeroConstantTerm);
        }
        // E' = s' E, solved coefficient by coefficient.
        let n = self.order();
        let z = self.sample().zero_like();
        let mut e = vec![z.clone(); n + 1];
        e[0] = z.one_like();
        for k in 1..=n {
            let mut acc = z.clone();
            for j in 1..=k {
                acc = acc.plus(&self.coeffs[j].scale_i64(j as i64).times(&e[k - j]));
            }
            e[k] = acc.times(&z.rational(&rat(1, k as i64)));
        }
        Ok(TruncSeries { var: self.var.clone(), coeffs: e })
    }

    /// log(s); the constant term must be 1.
    pub fn log(&self) -> Result<Self, ScalarError> {
        let one = self.sample().one_like();
        if !self.coeffs[0].minus(&one).is_zero() {
            return Err(ScalarError::ConstantTermNotOne);
        }
        let inv = self.inverse().ok_or(ScalarError::NotInvertible)?;
        Ok(self.derivative().truncate(self.order()).times(&inv).integral())
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Result<Self, ScalarError> {
        let c0 = Scalar::sqrt(&self.coeffs[0]).ok_or(ScalarError::NoSquareRoot)?;
        let inv2c0 = c0.scale_i64(2).inverse().ok_or(ScalarError::NoSquareRoot)?;
        let n = self.order();
        let mut r = vec![c0.zero_like(); n + 1];
        r[0] = c0;
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                acc = acc.minus(&r[j].times(&r[k - j]));
            }
            r[k] = acc.times(&inv2c0);
        }
        Ok(TruncSeries { var: self.var.clone(), coeffs: r })
    }

    /// s(αh): the coefficient of h^k is multiplied by α^k.
    pub fn rescale(&self, alpha: &C) -> Self {
        let mut p = alpha.one_like();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let v = c.times(&p);
                p = p.times(alpha);
                v
            })
            .collect();
        TruncSeries { var: self.var.clone(), coeffs }
    }

    /// Evaluation of a polynomial truncation at a scalar point.
    pub fn evaluate(&self, x: &C) -> C {
        self.coeffs.iter().rev().fold(self.sample().zero_like(), |acc, c| acc.times(x).plus(c))
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        self.minus(rhs).norm()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs.iter().map(|c| serde_json::Value::String(c.to_string_repr())).collect(),
        )
    }
}

impl TruncSeries<Rational> {
    pub fn parse_json(var: &str, v: &serde_json::Value) -> Option<Self> {
        let arr = v.as_array()?;
        let coeffs: Option<Vec<Rational>> =
            arr.iter().map(|x| super::parse_rational(x.as_str()?)).collect();
        let coeffs = coeffs?;
        if coeffs.is_empty() {
            return None;
        }
        Some(TruncSeries::new(var, coeffs))
    }
}

impl<C: Scalar> Ring for TruncSeries<C> {
    fn zero_like(&self) -> Self {
        TruncSeries::constant(&self.var, self.sample().zero_like(), self.order())
    }
    fn one_like(&self) -> Self {
        TruncSeries::constant(&self.var, self.sample().one_like(), self.order())
    }
    fn plus(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        TruncSeries {
            var: self.var.clone(),
            coeffs: (0..=n).map(|k| self.coeffs[k].plus(&rhs.coeffs[k])).collect(),
        }
    }
    fn minus(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        TruncSeries {
            var: self.var.clone(),
            coeffs: (0..=n).map(|k| self.coeffs[k].minus(&rhs.coeffs[k])).collect(),
        }
    }
    fn times(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let z = self.sample().zero_like();
        let mut out = vec![z; n + 1];
        let lo_a = self.valuation().unwrap_or(n + 1);
        let lo_b = rhs.valuation().unwrap_or(n + 1);
        for i in lo_a..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in lo_b..=(n - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].plus(&self.coeffs[i].times(&rhs.coeffs[j]));
            }
        }
        TruncSeries { var: self.var.clone(), coeffs: out }
    }
    fn negate(&self) -> Self {
        TruncSeries { var: self.var.clone(), coeffs: self.coeffs.iter().map(|c| c.negate()).collect() }
    }
    fn inverse(&self) -> Option<Self> {
        let inv0 = self.coeffs[0].inverse()?;
        let n = self.order();
        let mut r = vec![inv0.zero_like(); n + 1];
        r[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = inv0.zero_like();
            for j in 1..=k {
                acc = acc.plus(&self.coeffs[j].times(&r[k - j]));
            }
            r[k] = acc.times(&inv0).negate();
        }
        Some(TruncSeries { var: self.var.clone(), coeffs: r })
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
    fn pivot_weight(&self) -> f64 {
        if self.coeffs[0].inverse().is_some() {
            self.coeffs[0].norm().max(f64::MIN_POSITIVE)
        } else {
            0.0
        }
    }
    fn from_i64_like(&self, n: i64) -> Self {
        TruncSeries::constant(&self.var, self.sample().from_i64_like(n), self.order())
    }
}

impl<C: Scalar> Scalar for TruncSeries<C> {
    fn from_rational_like(&self, r: &Rational) -> Option<Self> {
        Some(TruncSeries::constant(&self.var, self.sample().from_rational_like(r)?, self.order()))
    }
    fn is_exact() -> bool {
        C::is_exact()
    }
    fn sqrt(&self) -> Option<Self> {
        TruncSeries::sqrt(self).ok()
    }
    fn to_string_repr(&self) -> String {
        self.to_json().to_string()
    }
}

/// Exact exponential coefficients 1/k!.
fn exp_coeffs(alpha: i64, order: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(order + 1);
    let mut c = rat_int(1);
    for k in 0..=order {
        if k > 0 {
            c = c * rat(alpha, k as i64);
        }
        out.push(c.clone());
    }
    out
}

/// q^α = e^{αh} as an exact series.
pub fn q_power(alpha: i64, order: usize) -> TruncSeries<Rational> {
    TruncSeries::new("h", exp_coeffs(alpha, order))
}

/// The quantum integer [α]_q = (q^α − q^{−α})/(q − q^{−1}) with q = e^h.
pub fn q_integer(alpha: i64, order: usize) -> TruncSeries<Rational> {
    // Both numerator and denominator are odd in h; divide by h first.
    let num = q_power(alpha, order + 1).minus(&q_power(-alpha, order + 1));
    let den = q_power(1, order + 1).minus(&q_power(-1, order + 1));
    let num = num.shift_down(1).expect("odd series");
    let den = den.shift_down(1).expect("odd series");
    num.times(&den.inverse().expect("denominator starts with 2"))
}

pub fn series_exp<C: Scalar>(s: &TruncSeries<C>) -> Result<TruncSeries<C>, ScalarError> {
    s.exp()
}

pub fn series_log<C: Scalar>(s: &TruncSeries<C>) -> Result<TruncSeries<C>, ScalarError> {
    s.log()
}

pub fn series_sqrt<C: Scalar>(s: &TruncSeries<C>) -> Result<TruncSeries<C>, ScalarError> {
    s.sqrt()
}

pub fn series_rescale<C: Scalar>(s: &TruncSeries<C>, alpha: &C) -> TruncSeries<C> {
    s.rescale(alpha)
}

/// Serialized form of a rational series: the exact "p/q" strings.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct SeriesDump {
    pub var: String,
    pub coeffs: Vec<String>,
}

impl From<&TruncSeries<Rational>> for SeriesDump {
    fn from(s: &TruncSeries<Rational>) -> Self {
        SeriesDump { var: s.var.clone(), coeffs: s.coeffs.iter().map(format_rational).collect() }
    }
}
