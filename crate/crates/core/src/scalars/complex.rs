use std::fmt;

use super::{BigFloat, Rational, Ring, Scalar};

/// Complex number with arbitrary-precision real and imaginary parts.
///
/// Equality is never tested exactly; compare with [`BigComplex::approx_eq`].
#[derive(Clone)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        BigComplex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        BigComplex { re: BigFloat::zero(prec), im: BigFloat::zero(prec) }
    }

    pub fn one(prec: u32) -> Self {
        BigComplex { re: BigFloat::one(prec), im: BigFloat::zero(prec) }
    }

    pub fn i(prec: u32) -> Self {
        BigComplex { re: BigFloat::zero(prec), im: BigFloat::one(prec) }
    }

    pub fn from_real(re: BigFloat) -> Self {
        let p = re.precision();
        BigComplex { re, im: BigFloat::zero(p) }
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        BigComplex { re: BigFloat::from_f64(re, prec), im: BigFloat::from_f64(im, prec) }
    }

    pub fn precision(&self) -> u32 {
        self.re.precision().max(self.im.precision())
    }

    pub fn conj(&self) -> Self {
        BigComplex { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn abs_sqr(&self) -> BigFloat {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn abs(&self) -> BigFloat {
        self.abs_sqr().sqrt()
    }

    pub fn scale(&self, s: &BigFloat) -> Self {
        BigComplex { re: self.re.mul(s), im: self.im.mul(s) }
    }

    pub fn mul_i(&self) -> Self {
        BigComplex { re: self.im.neg(), im: self.re.clone() }
    }

    /// e^{iθ} for real θ.
    pub fn cis(theta: &BigFloat) -> Self {
        let (c, s) = theta.cos_sin();
        BigComplex { re: c, im: s }
    }

    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        self.minus(rhs).norm() <= tol
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}i)", self.re, self.im)
    }
}

impl Ring for BigComplex {
    fn zero_like(&self) -> Self {
        BigComplex::zero(self.precision())
    }
    fn one_like(&self) -> Self {
        BigComplex::one(self.precision())
    }
    fn plus(&self, rhs: &Self) -> Self {
        BigComplex { re: self.re.add(&rhs.re), im: self.im.add(&rhs.im) }
    }
    fn minus(&self, rhs: &Self) -> Self {
        BigComplex { re: self.re.sub(&rhs.re), im: self.im.sub(&rhs.im) }
    }
    fn times(&self, rhs: &Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            let p = self.precision().max(rhs.precision());
            return BigComplex { re: self.re.mul(&rhs.re), im: BigFloat::zero(p) };
        }
        BigComplex {
            re: self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            im: self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        }
    }
    fn negate(&self) -> Self {
        BigComplex { re: self.re.neg(), im: self.im.neg() }
    }
    fn inverse(&self) -> Option<Self> {
        if self.re.is_zero() && self.im.is_zero() {
            return None;
        }
        let d = self.abs_sqr();
        Some(BigComplex { re: self.re.div(&d), im: self.im.neg().div(&d) })
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn norm(&self) -> f64 {
        let (a, b) = self.to_f64_pair();
        a.hypot(b)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        BigComplex::from_real(BigFloat::from_i64(n, self.precision()))
    }
    fn scale_i64(&self, n: i64) -> Self {
        BigComplex { re: self.re.mul_i64(n), im: self.im.mul_i64(n) }
    }
}

impl Scalar for BigComplex {
    fn from_rational_like(&self, r: &Rational) -> Option<Self> {
        Some(BigComplex::from_real(BigFloat::from_rational(r, self.precision())))
    }
    fn is_exact() -> bool {
        false
    }
    /// Principal branch: non-negative real part, and the cut along the
    /// negative real axis maps to the positive imaginary axis.
    fn sqrt(&self) -> Option<Self> {
        let p = self.precision();
        if self.is_zero() {
            return Some(self.clone());
        }
        let m = self.abs();
        let two = BigFloat::from_i64(2, p);
        let a = m.add(&self.re).div(&two);
        let a = if a.is_negative() { BigFloat::zero(p) } else { a };
        let b = m.sub(&self.re).div(&two);
        let b = if b.is_negative() { BigFloat::zero(p) } else { b };
        let re = a.sqrt();
        let mut im = b.sqrt();
        if self.im.is_negative() {
            im = im.neg();
        }
        Some(BigComplex { re, im })
    }
    fn to_string_repr(&self) -> String {
        let digits = ((self.precision() as f64) * std::f64::consts::LOG10_2) as usize;
        if self.im.is_zero() {
            self.re.to_decimal_string(digits)
        } else {
            format!("{}{:+}i", self.re.to_decimal_string(digits), DecimalSigned(&self.im, digits))
        }
    }
}

struct DecimalSigned<'a>(&'a BigFloat, usize);

impl fmt::Display for DecimalSigned<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.0.to_decimal_string(self.1);
        if f.sign_plus() && !s.starts_with('-') {
            write!(f, "+{s}")
        } else {
            write!(f, "{s}")
        }
    }
}

/// Parses "re", "re+imi" or "re-imi" decimal forms.
pub fn parse_complex(s: &str, prec: u32) -> Option<BigComplex> {
    let s = s.trim();
    if let Some(body) = s.strip_suffix('i') {
        // Find the split between real and imaginary parts: last sign not after 'e'.
        let bytes = body.as_bytes();
        let mut split = None;
        for i in (1..bytes.len()).rev() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'e' && bytes[i - 1] != b'E' {
                split = Some(i);
                break;
            }
        }
        let (re, im) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        Some(BigComplex {
            re: BigFloat::parse_decimal(re, prec)?,
            im: BigFloat::parse_decimal(im.trim_start_matches('+'), prec)?,
        })
    } else {
        Some(BigComplex::from_real(BigFloat::parse_decimal(s, prec)?))
    }
}
