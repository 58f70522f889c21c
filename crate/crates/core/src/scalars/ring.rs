use std::fmt;

use super::Rational;

/// A commutative ring element that carries its own context (precision,
/// modulus, truncation order), so neutral elements are produced from an
/// existing value rather than from a global.
pub trait Ring: Clone + fmt::Debug + Send + Sync + 'static {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Multiplicative inverse, if it exists in the ring.
    fn inverse(&self) -> Option<Self>;
    /// Exact zero test (no tolerance).
    fn is_zero(&self) -> bool;
    /// Size used for residual reporting: |x| for numbers, max coefficient
    /// size for series and polynomials, 0/1 for residues.
    fn norm(&self) -> f64;
    /// Preference for choosing Gaussian-elimination pivots; 0 means the
    /// element is not usable as a pivot.
    fn pivot_weight(&self) -> f64 {
        if self.inverse().is_some() {
            self.norm().max(f64::MIN_POSITIVE)
        } else {
            0.0
        }
    }
    fn from_i64_like(&self, n: i64) -> Self;

    fn scale_i64(&self, n: i64) -> Self {
        self.times(&self.from_i64_like(n))
    }

    fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

/// Coefficient rings: rings that receive rational constants and know
/// whether their equality is exact.
pub trait Scalar: Ring {
    /// Image of a rational number, `None` when its denominator is not
    /// invertible in the ring.
    fn from_rational_like(&self, r: &Rational) -> Option<Self>;
    /// Whether equality tests on this ring are exact.
    fn is_exact() -> bool;
    /// Principal square root when it exists in the ring.
    fn sqrt(&self) -> Option<Self>;
    /// Human-readable serialization used by the JSON dump formats.
    fn to_string_repr(&self) -> String;

    fn rational(&self, r: &Rational) -> Self {
        self.from_rational_like(r)
            .unwrap_or_else(|| panic!("rational {r} is not representable in this ring"))
    }
}
