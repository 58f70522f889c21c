use std::collections::BTreeMap;

use super::{format_rational, rat, rat_int, Rational, Ring, Scalar, TruncSeries};

/// Laurent polynomial Σ c_e q^e with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != rat_int(0) {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// q^e.
    pub fn q(e: i64) -> Self {
        Self::monomial(rat_int(1), e)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(|| rat_int(0))
    }

    fn add_term(&mut self, e: i64, c: Rational) {
        let v = self.terms.entry(e).or_insert_with(|| rat_int(0));
        *v += c;
        if *v == rat_int(0) {
            self.terms.remove(&e);
        }
    }

    /// Value at q = x.
    pub fn evaluate<R: Ring>(&self, x: &R, embed: impl Fn(&Rational) -> R) -> R {
        let xinv = if self.terms.keys().any(|e| *e < 0) {
            Some(x.inverse().expect("negative powers need an invertible point"))
        } else {
            None
        };
        let mut acc = x.zero_like();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                x.pow_u(*e as u64)
            } else {
                xinv.as_ref().unwrap().pow_u(e.unsigned_abs())
            };
            acc = acc.plus(&p.times(&embed(c)));
        }
        acc
    }

    /// Expansion in h with q = e^h, exact over ℚ.
    pub fn to_series(&self, order: usize) -> TruncSeries<Rational> {
        let mut coeffs = vec![rat_int(0); order + 1];
        for (e, c) in &self.terms {
            // e^{eh} = Σ e^k h^k / k!
            let mut t = c.clone();
            for (k, slot) in coeffs.iter_mut().enumerate() {
                if k > 0 {
                    t *= rat(*e, k as i64);
                }
                *slot += &t;
            }
        }
        TruncSeries::new("h", coeffs)
    }

    pub fn to_string_repr(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(e, c)| match e {
                0 => format_rational(c),
                _ => format!("{}*q^{}", format_rational(c), e),
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Ring for LaurentPoly {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::q(0)
    }
    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }
    fn times(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
    fn negate(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
    /// Only nonzero monomials are units.
    fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Some(Self::monomial(rat_int(1) / c, -e))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn norm(&self) -> f64 {
        self.terms.values().map(|c| super::rational_to_f64(c).abs()).fold(0.0, f64::max)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Self::constant(rat_int(n))
    }
}

impl Scalar for LaurentPoly {
    fn from_rational_like(&self, r: &Rational) -> Option<Self> {
        Some(Self::constant(r.clone()))
    }
    fn is_exact() -> bool {
        true
    }
    /// Only monomials c·q^{2e} with c a rational square have roots here.
    fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if e % 2 != 0 {
            return None;
        }
        Some(Self::monomial(Scalar::sqrt(c)?, e / 2))
    }
    fn to_string_repr(&self) -> String {
        LaurentPoly::to_string_repr(self)
    }
}
