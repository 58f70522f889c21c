use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::scalars::{is_prime, Ball, BigComplex, BigFloat, Ring};

use super::CycloError;

/// An element of ℤ[ζ] with ζ a primitive ℓⁿ-th root of 1, stored as its
/// coefficients on 1, ζ, …, ζ^{φ(ℓⁿ)−1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicInt {
    ell: u64,
    n: u32,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    pub fn zero(ell: u64, n: u32) -> Result<Self, CycloError> {
        if !is_prime(ell) || n == 0 {
            return Err(CycloError::BadLevel { ell, n });
        }
        let phi = ((ell - 1) * ell.pow(n - 1)) as usize;
        Ok(CyclotomicInt { ell, n, coeffs: vec![BigInt::zero(); phi] })
    }

    pub fn integer(ell: u64, n: u32, v: i64) -> Result<Self, CycloError> {
        let mut z = Self::zero(ell, n)?;
        z.coeffs[0] = BigInt::from(v);
        Ok(z)
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(ell: u64, n: u32, k: i64) -> Result<Self, CycloError> {
        let mut z = Self::zero(ell, n)?;
        let m = z.modulus() as i64;
        let mut full = vec![BigInt::zero(); m as usize];
        full[k.rem_euclid(m) as usize] = BigInt::one();
        z.coeffs = z.reduce(full);
        Ok(z)
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn level(&self) -> u32 {
        self.n
    }

    /// ℓⁿ.
    pub fn modulus(&self) -> u64 {
        self.ell.pow(self.n)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The rational integer this is, if it lies in ℤ.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.coeffs[1..].iter().all(|c| c.is_zero()).then(|| self.coeffs[0].clone())
    }

    /// Reduction modulo Φ_{ℓⁿ}(x) = Σ_{j<ℓ} x^{j·ℓ^{n−1}}.
    fn reduce(&self, mut full: Vec<BigInt>) -> Vec<BigInt> {
        let phi = self.coeffs.len();
        let step = self.ell.pow(self.n - 1) as usize;
        for d in (phi..full.len()).rev() {
            let c = std::mem::take(&mut full[d]);
            if c.is_zero() {
                continue;
            }
            // x^d = x^{d−φ}·x^φ and x^φ = −Σ_{j<ℓ−1} x^{j·step}
            let base = d - phi;
            for j in 0..(self.ell as usize - 1) {
                full[base + j * step] -= &c;
            }
        }
        full.truncate(phi);
        full.resize(phi, BigInt::zero());
        full
    }

    fn same_field(&self, rhs: &Self) {
        assert!(self.ell == rhs.ell && self.n == rhs.n, "cyclotomic elements of different levels");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        CyclotomicInt { coeffs, ..self.clone() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        CyclotomicInt { coeffs, ..self.clone() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        let phi = self.coeffs.len();
        let mut full = vec![BigInt::zero(); 2 * phi];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    full[i + j] += a * b;
                }
            }
        }
        CyclotomicInt { coeffs: self.reduce(full), ..self.clone() }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::integer(self.ell, self.n, 1).expect("valid level");
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// The Galois automorphism ζ ↦ ζ^a (a prime to ℓ).
    pub fn galois(&self, a: i64) -> Self {
        let m = self.modulus() as i64;
        let mut full = vec![BigInt::zero(); m as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            full[(a * k as i64).rem_euclid(m) as usize] += c;
        }
        CyclotomicInt { coeffs: self.reduce(full), ..self.clone() }
    }

    /// Complex conjugation ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Value at ζ = e^{2iπa/ℓⁿ} in floating point (no certification).
    pub fn evaluate(&self, a: i64, prec: u32) -> BigComplex {
        let m = self.modulus() as i64;
        let two_pi = BigFloat::pi(prec + 16).mul_i64(2);
        let mut acc = BigComplex::zero(prec + 16);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let j = (a * k as i64).rem_euclid(m);
            let z = BigComplex::cis(&two_pi.mul_i64(j).div_i64(m));
            acc = acc.plus(&z.times(&BigComplex::from_real(BigFloat::from_bigint(c.clone(), prec + 16))));
        }
        acc
    }

    /// Σ c_k cos(2πak/ℓⁿ) as a ball, the value of a real element at the
    /// embedding ζ ↦ e^{2iπa/ℓⁿ}.
    pub fn real_ball(&self, a: i64, prec: u32) -> Ball {
        let m = self.modulus() as i64;
        let pi = Ball::pi(prec);
        let mut acc = Ball::exact(BigFloat::zero(prec));
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let j = (a * k as i64).rem_euclid(m);
            let cos = pi.mul_i64(2 * j).div_i64(m).cos();
            let coeff = Ball::exact(BigFloat::from_bigint(c.clone(), prec.max(c.bits() as u32 + 8)));
            acc = acc.add(&coeff.mul(&cos));
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "ell": self.ell,
            "n": self.n,
            "coefficients": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    /// Largest coefficient size in bits.
    pub fn height_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.abs().bits()).max().unwrap_or(0)
    }
}

/// Representatives 0 < a < ℓⁿ/2 prime to ℓ: one embedding per complex
/// conjugate pair.
pub fn real_embeddings(ell: u64, n: u32) -> Vec<i64> {
    let m = ell.pow(n) as i64;
    (1..m).filter(|a| a % ell as i64 != 0 && 2 * a < m).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_relations() {
        for (ell, n) in [(3, 1), (5, 1), (3, 2), (7, 1)] {
            let m = (ell as i64).pow(n);
            let z = CyclotomicInt::zeta_pow(ell, n, 1).unwrap();
            assert_eq!(z.pow(m as u64), CyclotomicInt::integer(ell, n, 1).unwrap());
            assert_ne!(z.pow((m / ell as i64) as u64), CyclotomicInt::integer(ell, n, 1).unwrap());
            // Σ_{k<ℓ} ζ^{k m/ℓ} = 0
            let mut s = CyclotomicInt::zero(ell, n).unwrap();
            for k in 0..ell as i64 {
                s = s.add(&CyclotomicInt::zeta_pow(ell, n, k * m / ell as i64).unwrap());
            }
            assert_eq!(s, CyclotomicInt::zero(ell, n).unwrap());
            assert_eq!(z.mul(&z.conj()), CyclotomicInt::integer(ell, n, 1).unwrap());
        }
        assert!(CyclotomicInt::zero(4, 1).is_err());
    }

    #[test]
    fn evaluation_agrees_with_balls() {
        let z = CyclotomicInt::zeta_pow(5, 1, 1).unwrap();
        let x = z.add(&z.conj());
        for a in real_embeddings(5, 1) {
            let b = x.real_ball(a, 128);
            let v = x.evaluate(a, 128);
            assert!(b.contains(&v.re.with_precision(128)));
            assert!(v.im.to_f64().abs() < 1e-30);
        }
        assert_eq!(real_embeddings(5, 1), vec![1, 2]);
        assert_eq!(real_embeddings(9, 1).len(), 4);
    }
}
