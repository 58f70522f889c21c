//! Binary floating point with arbitrary precision, built on `BigInt`.
//!
//! A value is `mant · 2^exp` with `|mant| < 2^prec`. Results of binary
//! operations carry the larger of the operand precisions. Rounding is
//! to nearest (ties away from zero); every operation is correct to within
//! one unit in the last place of its result, except the transcendental
//! functions, which compute with guard bits and are correct to within a
//! few units.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

pub const MIN_PRECISION: u32 = 64;

#[derive(Clone)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

fn bits(n: &BigInt) -> i64 {
    n.bits() as i64
}

/// Rounds `n · 2^-shift` to nearest (ties away from zero).
fn shr_round(n: &BigInt, shift: i64) -> BigInt {
    if shift <= 0 {
        return n << (-shift) as usize;
    }
    let neg = n.is_negative();
    let mag = n.magnitude();
    let half = num_bigint::BigUint::one() << (shift - 1) as usize;
    let r = (mag + half) >> shift as usize;
    let r = BigInt::from_biguint(Sign::Plus, r);
    if neg {
        -r
    } else {
        r
    }
}

impl BigFloat {
    pub fn zero(prec: u32) -> Self {
        BigFloat { mant: BigInt::zero(), exp: 0, prec: prec.max(MIN_PRECISION) }
    }

    pub fn one(prec: u32) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Self::from_parts(BigInt::from(v), 0, prec)
    }

    pub fn from_bigint(v: BigInt, prec: u32) -> Self {
        Self::from_parts(v, 0, prec)
    }

    /// `mant · 2^exp`, rounded to `prec` bits.
    pub fn from_parts(mant: BigInt, exp: i64, prec: u32) -> Self {
        let mut x = BigFloat { mant, exp, prec: prec.max(MIN_PRECISION) };
        x.normalize();
        x
    }

    pub fn from_f64(v: f64, prec: u32) -> Self {
        assert!(v.is_finite(), "non-finite f64");
        if v == 0.0 {
            return Self::zero(prec);
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let e = ((bits >> 52) & 0x7ff) as i64;
        let frac = (bits & ((1u64 << 52) - 1)) as i64;
        let (m, ex) = if e == 0 { (frac, -1074) } else { (frac | (1 << 52), e - 1075) };
        Self::from_parts(BigInt::from(sign * m), ex, prec)
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        let prec = prec.max(MIN_PRECISION);
        if r.is_zero() {
            return Self::zero(prec);
        }
        let n = r.numer();
        let d = r.denom();
        let shift = prec as i64 + 2 + bits(d) - bits(n);
        let shift = shift.max(0);
        let q = (n << shift as usize) / d;
        // A sticky bit keeps round-to-nearest honest when the division is inexact.
        let q = if &q * d != (n << shift as usize) { (q << 1usize) + q_sign_one(n, d) } else { q << 1usize };
        Self::from_parts(q, -shift - 1, prec)
    }

    fn normalize(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        let b = bits(&self.mant);
        let p = self.prec as i64;
        if b > p {
            let s = b - p;
            self.mant = shr_round(&self.mant, s);
            self.exp += s;
            if bits(&self.mant) > p {
                self.mant = shr_round(&self.mant, 1);
                self.exp += 1;
            }
        }
        // Strip trailing zeros so equal values have equal representations.
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz as usize;
            self.exp += tz as i64;
        }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        Self::from_parts(self.mant.clone(), self.exp, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// floor(log2 |x|), or `i64::MIN` for zero.
    pub fn log2_floor(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exp + bits(&self.mant) - 1
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let b = bits(&self.mant);
        let s = (b - 60).max(0);
        let m = shr_round(&self.mant, s).to_f64().unwrap_or(0.0);
        let e = self.exp + s;
        if e > 2000 {
            return if m > 0.0 { f64::INFINITY } else { f64::NEG_INFINITY };
        }
        if e < -2200 {
            return 0.0;
        }
        // Split the scaling so intermediate powers stay finite.
        let half = (e / 2) as i32;
        m * 2f64.powi(half) * 2f64.powi(e as i32 - half)
    }

    pub fn abs(&self) -> Self {
        BigFloat { mant: self.mant.abs(), exp: self.exp, prec: self.prec }
    }

    pub fn neg(&self) -> Self {
        BigFloat { mant: -&self.mant, exp: self.exp, prec: self.prec }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let prec = self.prec.max(rhs.prec);
        if rhs.is_zero() {
            return self.with_precision(prec);
        }
        if self.is_zero() {
            return rhs.with_precision(prec);
        }
        let (big, small) = if self.log2_floor() >= rhs.log2_floor() { (self, rhs) } else { (rhs, self) };
        // If `small` lies far below the last place of `big`, it only affects rounding.
        if small.log2_floor() < big.log2_floor() - prec as i64 - 4 {
            let shift = (prec as i64 + 4 - bits(&big.mant)).max(0);
            let mut m = &big.mant << shift as usize;
            if small.is_negative() {
                m -= 1;
            } else {
                m += 1;
            }
            return Self::from_parts(m, big.exp - shift, prec);
        }
        let e = self.exp.min(rhs.exp);
        let a = &self.mant << (self.exp - e) as usize;
        let b = &rhs.mant << (rhs.exp - e) as usize;
        Self::from_parts(a + b, e, prec)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let prec = self.prec.max(rhs.prec);
        Self::from_parts(&self.mant * &rhs.mant, self.exp + rhs.exp, prec)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        Self::from_parts(&self.mant * k, self.exp, self.prec)
    }

    /// Multiplication by 2^k (exact).
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        BigFloat { mant: self.mant.clone(), exp: self.exp + k, prec: self.prec }
    }

    pub fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "BigFloat division by zero");
        let prec = self.prec.max(rhs.prec);
        if self.is_zero() {
            return Self::zero(prec);
        }
        let shift = (prec as i64 + 2 + bits(&rhs.mant) - bits(&self.mant)).max(0);
        let n = &self.mant << shift as usize;
        let (q, r) = num_integer::Integer::div_rem(&n, &rhs.mant);
        let q = if r.is_zero() { q << 1usize } else { (q << 1usize) + q_sign_one(&self.mant, &rhs.mant) };
        Self::from_parts(q, self.exp - rhs.exp - shift - 1, prec)
    }

    pub fn div_i64(&self, k: i64) -> Self {
        self.div(&BigFloat::from_i64(k, self.prec))
    }

    pub fn recip(&self) -> Self {
        BigFloat::one(self.prec).div(self)
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "square root of a negative BigFloat");
        if self.is_zero() {
            return self.clone();
        }
        let prec = self.prec as i64;
        // Scale so the integer square root has prec+2 bits and the exponent is even.
        let mut shift = (2 * (prec + 2) - bits(&self.mant)).max(0);
        if (self.exp - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let n = &self.mant << shift as usize;
        let r = n.sqrt();
        let r2 = if &r * &r == n { r << 1usize } else { (r << 1usize) + 1 };
        Self::from_parts(r2, (self.exp - shift) / 2 - 1, self.prec)
    }

    pub fn cmp_value(&self, rhs: &Self) -> Ordering {
        let d = self.sub(rhs);
        d.signum().cmp(&0)
    }

    pub fn floor_to_bigint(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as usize
        } else {
            let q = &self.mant >> (-self.exp) as usize; // arithmetic shift floors
            q
        }
    }

    pub fn round_to_bigint(&self) -> BigInt {
        self.add(&BigFloat::from_parts(BigInt::one(), -1, self.prec.max(bits(&self.mant) as u32 + 8)))
            .floor_to_bigint()
    }

    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(&self.mant << self.exp as usize)
        } else {
            Rational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    // ---- constants ----

    /// π via Machin's formula in fixed point.
    pub fn pi(prec: u32) -> Self {
        let work = prec as u64 + 32;
        let one = BigInt::one() << work as usize;
        let atan_inv = |k: i64| -> BigInt {
            // atan(1/k) = Σ (-1)^j / ((2j+1) k^(2j+1))
            let k2 = BigInt::from(k * k);
            let mut term = &one / k;
            let mut sum = term.clone();
            let mut j = 1i64;
            loop {
                term = &term / &k2;
                if term.is_zero() {
                    break;
                }
                let t = &term / (2 * j + 1);
                if j % 2 == 1 {
                    sum -= t;
                } else {
                    sum += t;
                }
                j += 1;
            }
            sum
        };
        let v = atan_inv(5) * 16 - atan_inv(239) * 4;
        Self::from_parts(v, -(work as i64), prec)
    }

    /// ln 2 = Σ 1/(k 2^k).
    pub fn ln2(prec: u32) -> Self {
        let work = prec as u64 + 32;
        let one = BigInt::one() << work as usize;
        let mut sum = BigInt::zero();
        let mut k = 1i64;
        loop {
            let t = (&one >> k as usize) / k;
            if t.is_zero() {
                break;
            }
            sum += t;
            k += 1;
        }
        Self::from_parts(sum, -(work as i64), prec)
    }

    /// ζ(s) for integer s ≥ 2, from Borwein's accelerated alternating series
    /// η(s) = −d_n⁻¹ Σ_{k<n} (−1)^k (d_k − d_n)/(k+1)^s and ζ(s) = η(s)/(1 − 2^{1−s}).
    pub fn zeta(s: u32, prec: u32) -> Self {
        assert!(s >= 2, "ζ(s) needs s ≥ 2");
        let work = prec as usize + 32;
        // the error is below 3·(3+√8)^{−n} ≈ 2^{−2.54 n}
        let n = (work as f64 / 2.5) as i64 + 2;
        let mut d = Vec::with_capacity(n as usize + 1);
        // d_k = Σ_{i≤k} n·(n+i−1)!·4^i/((n−i)!(2i)!), each summand an integer
        let mut term = BigInt::one();
        let mut acc = BigInt::zero();
        for i in 0..=n {
            if i > 0 {
                term = term * (n + i - 1) * (n - i + 1) * 4 / ((2 * i - 1) * (2 * i));
            }
            acc += &term;
            d.push(acc.clone());
        }
        let dn = d[n as usize].clone();
        let one = BigInt::one() << work;
        let mut sum = BigInt::zero();
        for k in 0..n {
            let t = ((&d[k as usize] - &dn) * &one) / BigInt::from(k + 1).pow(s);
            if k % 2 == 0 {
                sum += t;
            } else {
                sum -= t;
            }
        }
        let eta = Self::from_parts(-sum, -(work as i64), prec + 16).div(&Self::from_bigint(dn, prec + 16));
        let factor = Self::one(prec + 16).sub(&Self::one(prec + 16).mul_pow2(1 - s as i64));
        eta.div(&factor).with_precision(prec)
    }

    // ---- elementary functions ----

    pub fn exp(&self) -> Self {
        let prec = self.prec;
        if self.is_zero() {
            return BigFloat::one(prec);
        }
        let xf = self.to_f64();
        assert!(xf.abs() < 1e12, "exp argument out of range");
        let guard = 24 + (prec as f64).sqrt() as u32;
        let wp = prec + guard;
        let x = self.with_precision(wp);
        let ln2 = BigFloat::ln2(wp + 16);
        let k = (xf / std::f64::consts::LN_2).round() as i64;
        let r = x.sub(&ln2.mul_i64(k));
        // Reduce further by 2^-s, sum the Taylor series, then square back.
        let s = (wp as f64).sqrt() as i64 / 2 + 2;
        let r = r.mul_pow2(-s);
        let mut sum = BigFloat::one(wp);
        let mut term = BigFloat::one(wp);
        let mut n = 1i64;
        loop {
            term = term.mul(&r).div_i64(n);
            if term.is_zero() || term.log2_floor() < -(wp as i64) - 4 {
                break;
            }
            sum = sum.add(&term);
            n += 1;
        }
        for _ in 0..s {
            sum = sum.mul(&sum);
        }
        sum.mul_pow2(k).with_precision(prec)
    }

    /// Natural logarithm of a positive number.
    pub fn ln(&self) -> Self {
        assert!(self.signum() > 0, "logarithm of a non-positive BigFloat");
        let prec = self.prec;
        let wp = prec + 32;
        // x = m 2^e with m in [1/2, 1)
        let e = self.log2_floor() + 1;
        let m = self.with_precision(wp).mul_pow2(-e);
        // ln m = 2 atanh(t), t = (m-1)/(m+1) in [-1/3, 0)
        let one = BigFloat::one(wp);
        let t = m.sub(&one).div(&m.add(&one));
        let t2 = t.mul(&t);
        let mut power = t.clone();
        let mut sum = t.clone();
        let mut j = 1i64;
        loop {
            power = power.mul(&t2);
            if power.is_zero() || power.log2_floor() < -(wp as i64) - 4 {
                break;
            }
            sum = sum.add(&power.div_i64(2 * j + 1));
            j += 1;
        }
        sum.mul_i64(2).add(&BigFloat::ln2(wp).mul_i64(e)).with_precision(prec)
    }

    /// (cos x, sin x).
    pub fn cos_sin(&self) -> (Self, Self) {
        let prec = self.prec;
        let s = 8i64;
        let wp = prec + 40 + s as u32;
        let x = self.with_precision(wp);
        let two_pi = BigFloat::pi(wp + 16).mul_i64(2);
        let k = x.div(&two_pi).round_to_bigint();
        let r = x.sub(&two_pi.mul(&BigFloat::from_bigint(k, wp))).mul_pow2(-s);
        let r2 = r.mul(&r);
        let mut c = BigFloat::one(wp);
        let mut sn = r.clone();
        let mut term_c = BigFloat::one(wp);
        let mut term_s = r.clone();
        let mut n = 1i64;
        loop {
            term_c = term_c.mul(&r2).div_i64((2 * n - 1) * (2 * n)).neg();
            term_s = term_s.mul(&r2).div_i64((2 * n) * (2 * n + 1)).neg();
            let small = |t: &BigFloat| t.is_zero() || t.log2_floor() < -(wp as i64) - 4;
            if small(&term_c) && small(&term_s) {
                break;
            }
            c = c.add(&term_c);
            sn = sn.add(&term_s);
            n += 1;
        }
        let one = BigFloat::one(wp);
        for _ in 0..s {
            let c2 = c.mul(&c).mul_i64(2).sub(&one);
            let s2 = sn.mul(&c).mul_i64(2);
            c = c2;
            sn = s2;
        }
        (c.with_precision(prec), sn.with_precision(prec))
    }

    pub fn to_decimal_string(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let neg = self.is_negative();
        let a = self.abs();
        // Scale to an integer with `digits` significant decimal digits.
        let lg10 = (a.log2_floor() as f64 * std::f64::consts::LOG10_2).floor() as i64;
        let scale_pow = digits as i64 - 1 - lg10;
        let ten = BigFloat::from_i64(10, self.prec + 16);
        let mut scaled = a.with_precision(self.prec + 16);
        let p = pow_i(&ten, scale_pow.unsigned_abs());
        scaled = if scale_pow >= 0 { scaled.mul(&p) } else { scaled.div(&p) };
        let n = scaled.round_to_bigint();
        let s = n.to_string();
        let (s, exp10) = if s.len() > digits { (s[..digits].to_string(), -scale_pow + 1) } else { (s, -scale_pow) };
        let mantissa = if s.len() > 1 { format!("{}.{}", &s[..1], s[1..].trim_end_matches('0')) } else { s.clone() };
        let mantissa = mantissa.trim_end_matches('.').to_string();
        let e = exp10 + s.len() as i64 - 1;
        format!("{}{}e{}", if neg { "-" } else { "" }, mantissa, e)
    }

    /// Parses a decimal string such as "-1.25e-3".
    pub fn parse_decimal(s: &str, prec: u32) -> Option<Self> {
        let s = s.trim();
        let (mant, exp) = match s.find(['e', 'E']) {
            Some(i) => (&s[..i], s[i + 1..].parse::<i64>().ok()?),
            None => (s, 0),
        };
        let neg = mant.starts_with('-');
        let mant = mant.trim_start_matches(['-', '+']);
        let (ip, fp) = mant.split_once('.').unwrap_or((mant, ""));
        let digits = format!("{ip}{fp}");
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let n: BigInt = digits.parse().ok()?;
        let e10 = exp - fp.len() as i64;
        let ten = BigInt::from(10);
        let r = if e10 >= 0 {
            Rational::from_integer(n * num_traits::pow(ten, e10 as usize))
        } else {
            Rational::new(n, num_traits::pow(ten, (-e10) as usize))
        };
        let v = BigFloat::from_rational(&r, prec);
        Some(if neg { v.neg() } else { v })
    }
}

fn q_sign_one(a: &BigInt, b: &BigInt) -> BigInt {
    // Sticky bit with the sign of the quotient.
    if a.is_negative() != b.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    }
}

fn pow_i(x: &BigFloat, mut e: u64) -> BigFloat {
    let mut acc = BigFloat::one(x.prec);
    let mut b = x.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b);
        }
        e >>= 1;
        if e > 0 {
            b = b.mul(&b);
        }
    }
    acc
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string(20))
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.prec as f64) * std::f64::consts::LOG10_2) as usize;
        write!(f, "{}", self.to_decimal_string(digits.max(1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn close(a: &BigFloat, b: &BigFloat, bits: i64) -> bool {
        let d = a.sub(b);
        d.is_zero() || d.log2_floor() < -bits
    }

    #[test]
    fn pi_digits() {
        let pi = BigFloat::pi(256);
        let s = pi.to_decimal_string(40);
        assert!(s.starts_with("3.14159265358979323846264338327950288419"), "{s}");
    }

    #[test]
    fn zeta_values() {
        let z2 = BigFloat::zeta(2, 256);
        let pi = BigFloat::pi(256);
        assert!(close(&z2, &pi.mul(&pi).div_i64(6), 240));
        let z4 = BigFloat::zeta(4, 256);
        let pi4 = pi.mul(&pi).mul(&pi).mul(&pi);
        assert!(close(&z4, &pi4.div_i64(90), 240));
        let z3 = BigFloat::parse_decimal("1.2020569031595942853997381615114499907649862923405", 256).unwrap();
        assert!(close(&BigFloat::zeta(3, 256), &z3, 160));
        let z5 = BigFloat::parse_decimal("1.0369277551433699263313654864570341680570809195019", 256).unwrap();
        assert!(close(&BigFloat::zeta(5, 256), &z5, 160));
    }

    #[test]
    fn exp_ln_roundtrip() {
        for v in [0.5f64, 1.0, 2.75, -3.25, 10.0, 1e-5] {
            let x = BigFloat::from_f64(v, 256);
            let y = x.exp().ln();
            assert!(close(&x, &y, 240), "{v}: {:?}", y);
        }
        let e = BigFloat::one(256).exp();
        assert!(e.to_decimal_string(30).starts_with("2.71828182845904523536028747135"));
    }

    #[test]
    fn ln_of_two() {
        let l = BigFloat::from_i64(2, 200).ln();
        assert!(close(&l, &BigFloat::ln2(200), 195));
    }

    #[test]
    fn cos_sin_identities() {
        let pi = BigFloat::pi(256);
        let (c, s) = pi.div_i64(3).cos_sin();
        assert!(close(&c, &BigFloat::from_rational(&rat(1, 2), 256), 245));
        let three = BigFloat::from_i64(3, 256).sqrt().div_i64(2);
        assert!(close(&s, &three, 245));
        let x = BigFloat::from_f64(7.3, 256);
        let (c, s) = x.cos_sin();
        assert!(close(&c.mul(&c).add(&s.mul(&s)), &BigFloat::one(256), 245));
    }

    #[test]
    fn sqrt_and_division() {
        let two = BigFloat::from_i64(2, 128);
        let r = two.sqrt();
        assert!(close(&r.mul(&r), &two, 124));
        let third = BigFloat::from_rational(&rat(1, 3), 128);
        assert!(close(&third.mul_i64(3), &BigFloat::one(128), 125));
        assert!(close(&BigFloat::one(128).div_i64(3), &third, 126));
    }

    #[test]
    fn decimal_roundtrip() {
        let x = BigFloat::parse_decimal("-1.25e-3", 128).unwrap();
        assert_eq!(x.to_f64(), -1.25e-3);
        assert_eq!(BigFloat::from_f64(0.1, 64).to_f64(), 0.1);
    }

    #[test]
    fn precision_never_decreases() {
        let a = BigFloat::from_i64(1, 64);
        let b = BigFloat::from_i64(3, 300);
        assert_eq!(a.div(&b).precision(), 300);
    }
}
