use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Ring, Scalar};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Formats as "p/q", or "p" for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64().filter(|v| v.is_finite()) {
        return v;
    }
    let ns = (r.numer().bits() as i64 - 64).max(0);
    let ds = (r.denom().bits() as i64 - 64).max(0);
    let n = (r.numer() >> ns as usize).to_f64().unwrap_or(0.0);
    let d = (r.denom() >> ds as usize).to_f64().unwrap_or(1.0);
    let e = (ns - ds).clamp(-2000, 2000) as i32;
    (n / d) * 2f64.powi(e)
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn norm(&self) -> f64 {
        rational_to_f64(self).abs()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        rat_int(n)
    }
}

impl Scalar for Rational {
    fn from_rational_like(&self, r: &Rational) -> Option<Self> {
        Some(r.clone())
    }
    fn is_exact() -> bool {
        true
    }
    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &n * &n == *self.numer() && &d * &d == *self.denom() {
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }
    fn to_string_repr(&self) -> String {
        format_rational(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_square_roots_only() {
        assert_eq!(Scalar::sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(Scalar::sqrt(&rat(3, 1)), None);
        assert_eq!(Scalar::sqrt(&rat(-4, 1)), None);
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-6/4"), Some(rat(-3, 2)));
        assert_eq!(format_rational(&rat(-3, 2)), "-3/2");
        assert_eq!(format_rational(&rat(8, 2)), "4");
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn huge_rational_to_f64() {
        let big = BigRational::new(BigInt::from(10).pow(400), BigInt::from(10).pow(399) * 4);
        assert!((rational_to_f64(&big) - 2.5).abs() < 1e-12);
    }
}
