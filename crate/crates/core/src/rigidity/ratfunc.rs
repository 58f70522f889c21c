use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::scalars::{rat_int, rational_to_f64, Rational, Ring, Scalar};

/// Polynomial in two commuting variables over ℚ, keyed by exponent pairs.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl Poly2 {
    pub fn constant(c: Rational) -> Self {
        let mut p = Poly2::default();
        p.add_term((0, 0), c);
        p
    }

    pub fn var(i: usize) -> Self {
        let mut p = Poly2::default();
        p.add_term(if i == 0 { (1, 0) } else { (0, 1) }, Rational::one());
        p
    }

    fn add_term(&mut self, e: (u32, u32), c: Rational) {
        let v = self.terms.entry(e).or_insert_with(Rational::zero);
        *v += c;
        if Zero::is_zero(v) {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Poly2 { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Poly2::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term((e1.0 + e2.0, e1.1 + e2.1), c1 * c2);
            }
        }
        out
    }

    fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    fn max_coeff(&self) -> f64 {
        self.terms.values().map(|c| rational_to_f64(&c.abs())).fold(0.0, f64::max)
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), c)| {
                let mut s = c.to_string();
                if *a > 0 {
                    s.push_str(&format!("*x^{a}"));
                }
                if *b > 0 {
                    s.push_str(&format!("*y^{b}"));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Element of ℚ(x, y) as an unreduced fraction; equality is tested by
/// cross-multiplication, so identities hold as rational-function identities.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: Poly2,
    den: Poly2,
}

impl RatFunc {
    pub fn new(num: Poly2, den: Poly2) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFunc { num, den }.normalized()
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc { num: Poly2::constant(c), den: Poly2::constant(Rational::one()) }
    }

    /// The indeterminate x (i = 0) or y (i = 1).
    pub fn var(i: usize) -> Self {
        RatFunc { num: Poly2::var(i), den: Poly2::constant(Rational::one()) }
    }

    pub fn numerator(&self) -> &Poly2 {
        &self.num
    }

    pub fn denominator(&self) -> &Poly2 {
        &self.den
    }

    fn normalized(self) -> Self {
        if self.num.is_zero() {
            return RatFunc::constant(Rational::zero());
        }
        match self.den.as_constant() {
            Some(c) if !c.is_one() => {
                let inv = Poly2::constant(c.recip());
                RatFunc { num: self.num.mul(&inv), den: Poly2::constant(Rational::one()) }
            }
            _ => self,
        }
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Ring for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::constant(Rational::zero())
    }
    fn one_like(&self) -> Self {
        RatFunc::constant(Rational::one())
    }
    fn plus(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RatFunc { num: self.num.add(&rhs.num), den: self.den.clone() }.normalized();
        }
        RatFunc::new(self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)), self.den.mul(&rhs.den))
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }
    fn times(&self, rhs: &Self) -> Self {
        RatFunc::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
    fn negate(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()))
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn norm(&self) -> f64 {
        self.num.max_coeff()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        RatFunc::constant(rat_int(n))
    }
}

impl Scalar for RatFunc {
    fn from_rational_like(&self, r: &Rational) -> Option<Self> {
        Some(RatFunc::constant(r.clone()))
    }
    fn is_exact() -> bool {
        true
    }
    fn sqrt(&self) -> Option<Self> {
        None
    }
    fn to_string_repr(&self) -> String {
        format!("({})/({})", self.num, self.den)
    }
}
