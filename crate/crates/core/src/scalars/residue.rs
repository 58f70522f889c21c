use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::{Rational, Ring, Scalar, ScalarError};

/// Element of ℤ/ℓ^k, the finite-level stand-in for the ℓ-adic integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidueScalar {
    ell: u64,
    k: u32,
    modulus: u64,
    value: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl ResidueScalar {
    pub fn new(ell: u64, k: u32, value: i64) -> Result<Self, ScalarError> {
        if !is_prime(ell) {
            return Err(ScalarError::NotPrime(ell));
        }
        let modulus = ell
            .checked_pow(k)
            .filter(|m| *m < (1u64 << 62) && k >= 1)
            .ok_or(ScalarError::ModulusTooLarge { ell, k })?;
        Ok(Self::with_modulus(ell, k, modulus, value))
    }

    fn with_modulus(ell: u64, k: u32, modulus: u64, value: i64) -> Self {
        let m = modulus as i128;
        let v = ((value as i128 % m) + m) % m;
        ResidueScalar { ell, k, modulus, value: v as u64 }
    }

    fn same(&self, value: u64) -> Self {
        ResidueScalar { ell: self.ell, k: self.k, modulus: self.modulus, value }
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }
    pub fn k(&self) -> u32 {
        self.k
    }
    pub fn modulus(&self) -> u64 {
        self.modulus
    }
    pub fn value(&self) -> u64 {
        self.value
    }

    /// Reduction of a rational whose denominator is prime to ℓ.
    pub fn from_rational(ell: u64, k: u32, r: &Rational) -> Result<Self, ScalarError> {
        let base = Self::new(ell, k, 0)?;
        base.from_rational_like(r).ok_or(ScalarError::DenominatorNotInvertible { ell })
    }

    /// Symmetric representative in (−m/2, m/2].
    pub fn signed_value(&self) -> i64 {
        if self.value > self.modulus / 2 {
            self.value as i64 - self.modulus as i64
        } else {
            self.value as i64
        }
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(self.modulus, rhs.modulus, "mixing residue rings");
    }
}

impl Ring for ResidueScalar {
    fn zero_like(&self) -> Self {
        self.same(0)
    }
    fn one_like(&self) -> Self {
        self.same(1 % self.modulus)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.check(rhs);
        self.same(((self.value as u128 + rhs.value as u128) % self.modulus as u128) as u64)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.check(rhs);
        self.same(
            ((self.value as u128 + self.modulus as u128 - rhs.value as u128) % self.modulus as u128)
                as u64,
        )
    }
    fn times(&self, rhs: &Self) -> Self {
        self.check(rhs);
        self.same(((self.value as u128 * rhs.value as u128) % self.modulus as u128) as u64)
    }
    fn negate(&self) -> Self {
        self.same((self.modulus - self.value) % self.modulus)
    }
    fn inverse(&self) -> Option<Self> {
        let g = (self.value as i128).extended_gcd(&(self.modulus as i128));
        if g.gcd != 1 {
            return None;
        }
        let m = self.modulus as i128;
        Some(self.same((((g.x % m) + m) % m) as u64))
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn norm(&self) -> f64 {
        if self.value == 0 {
            0.0
        } else {
            1.0
        }
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Self::with_modulus(self.ell, self.k, self.modulus, n)
    }
}

impl Scalar for ResidueScalar {
    fn from_rational_like(&self, r: &Rational) -> Option<Self> {
        let m = BigInt::from(self.modulus);
        let num = (r.numer().mod_floor(&m)).to_i64()?;
        let den = (r.denom().mod_floor(&m)).to_i64()?;
        let d = self.from_i64_like(den).inverse()?;
        Some(self.from_i64_like(num).times(&d))
    }
    fn is_exact() -> bool {
        true
    }
    fn sqrt(&self) -> Option<Self> {
        // Brute force; moduli here are small.
        if self.modulus > 1 << 24 {
            return None;
        }
        (0..self.modulus)
            .map(|v| self.same(v))
            .find(|c| c.times(c) == *self)
    }
    fn to_string_repr(&self) -> String {
        format!("{} mod {}^{}", self.value, self.ell, self.k)
    }
}

/// Interprets an integer as an ℓ-adic residue; negative values wrap.
pub fn residue_of(ell: u64, k: u32, v: &BigInt) -> Result<ResidueScalar, ScalarError> {
    let base = ResidueScalar::new(ell, k, 0)?;
    let m = BigInt::from(base.modulus);
    let mut r = v.mod_floor(&m);
    if r.is_negative() {
        r += &m;
    }
    Ok(base.from_i64_like(r.to_i64().unwrap_or(0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn inverse_mod_125() {
        let x = ResidueScalar::new(5, 3, 7).unwrap();
        let inv = x.inverse().unwrap();
        assert_eq!(x.times(&inv).value(), 1);
        assert!(ResidueScalar::new(5, 3, 10).unwrap().inverse().is_none());
    }

    #[test]
    fn rational_reduction() {
        let r = ResidueScalar::from_rational(5, 3, &rat(1, 3)).unwrap();
        assert_eq!(r.times(&r.from_i64_like(3)).value(), 1);
        assert!(ResidueScalar::from_rational(5, 3, &rat(1, 5)).is_err());
    }

    #[test]
    fn rejects_composite_base() {
        assert!(ResidueScalar::new(4, 2, 1).is_err());
    }
}
