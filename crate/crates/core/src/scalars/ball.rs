//! Midpoint-radius (ball) arithmetic over [`BigFloat`], used to certify
//! signs of real numbers.

use super::BigFloat;

const RAD_PREC: u32 = 64;

/// The real interval `[mid − rad, mid + rad]`.
#[derive(Clone, Debug)]
pub struct Ball {
    pub mid: BigFloat,
    pub rad: BigFloat,
}

/// Upper bound on the rounding error of a result `x` at precision `p`.
fn ulp_bound(x: &BigFloat, p: u32) -> BigFloat {
    if x.is_zero() {
        return BigFloat::zero(RAD_PREC);
    }
    BigFloat::one(RAD_PREC).mul_pow2(x.log2_floor() + 1 - p as i64 + 1)
}

/// Radius arithmetic rounds toward +∞ by inflating with a relative margin.
fn inflate(r: BigFloat) -> BigFloat {
    if r.is_zero() {
        return r;
    }
    let margin = BigFloat::one(RAD_PREC).mul_pow2(r.log2_floor() + 2 - RAD_PREC as i64);
    r.abs().add(&margin)
}

impl Ball {
    pub fn exact(mid: BigFloat) -> Self {
        Ball { mid, rad: BigFloat::zero(RAD_PREC) }
    }

    pub fn with_radius(mid: BigFloat, rad: BigFloat) -> Self {
        Ball { mid, rad: inflate(rad.with_precision(RAD_PREC)) }
    }

    pub fn precision(&self) -> u32 {
        self.mid.precision()
    }

    pub fn add(&self, rhs: &Ball) -> Ball {
        let mid = self.mid.add(&rhs.mid);
        let p = mid.precision();
        let rad = inflate(self.rad.add(&rhs.rad).add(&ulp_bound(&mid, p)));
        Ball { mid, rad }
    }

    pub fn neg(&self) -> Ball {
        Ball { mid: self.mid.neg(), rad: self.rad.clone() }
    }

    pub fn sub(&self, rhs: &Ball) -> Ball {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Ball) -> Ball {
        let mid = self.mid.mul(&rhs.mid);
        let p = mid.precision();
        let a = self.mid.abs().with_precision(RAD_PREC);
        let b = rhs.mid.abs().with_precision(RAD_PREC);
        let rad = a
            .add(&BigFloat::one(RAD_PREC).mul_pow2(a.log2_floor().max(-100000) - 60))
            .mul(&rhs.rad)
            .add(&b.add(&BigFloat::one(RAD_PREC).mul_pow2(b.log2_floor().max(-100000) - 60)).mul(&self.rad))
            .add(&self.rad.mul(&rhs.rad))
            .add(&ulp_bound(&mid, p));
        Ball { mid, rad: inflate(rad) }
    }

    pub fn mul_i64(&self, k: i64) -> Ball {
        let mid = self.mid.mul_i64(k);
        let p = mid.precision();
        let rad = inflate(self.rad.mul_i64(k.abs()).add(&ulp_bound(&mid, p)));
        Ball { mid, rad }
    }

    pub fn div_i64(&self, k: i64) -> Ball {
        assert!(k != 0);
        let mid = self.mid.div_i64(k);
        let p = mid.precision();
        let rad = inflate(self.rad.div_i64(k.abs()).add(&ulp_bound(&mid, p)));
        Ball { mid, rad }
    }

    /// π with a rigorous error radius.
    pub fn pi(prec: u32) -> Ball {
        // Machin evaluation in fixed point carries 32 guard bits; the
        // accumulated truncation error is far below 2^-prec.
        let mid = BigFloat::pi(prec);
        Ball::with_radius(mid, BigFloat::one(RAD_PREC).mul_pow2(-(prec as i64) + 1))
    }

    /// cos x by its alternating Taylor series with an explicit tail bound.
    pub fn cos(&self) -> Ball {
        let p = self.precision();
        let x2 = self.mul(self);
        let bound = self.mid.abs().to_f64() + self.rad.to_f64();
        let mut sum = Ball::exact(BigFloat::one(p));
        let mut term = Ball::exact(BigFloat::one(p));
        let mut n = 1i64;
        // log2 of |x|^(2n)/(2n)! tracked in f64 to decide when to stop.
        let mut log_term = 0f64;
        loop {
            term = term.mul(&x2).div_i64((2 * n - 1) * (2 * n)).neg();
            sum = sum.add(&term);
            log_term += 2.0 * bound.max(1e-300).log2() - (((2 * n - 1) * (2 * n)) as f64).log2();
            n += 1;
            if (2 * n) as f64 > bound && log_term < -(p as f64) - 8.0 {
                break;
            }
        }
        // Tail of an alternating series with decreasing terms is bounded by the next term.
        let tail = BigFloat::one(RAD_PREC).mul_pow2(log_term.ceil() as i64 + 1);
        Ball { rad: inflate(sum.rad.add(&tail)), mid: sum.mid }
    }

    /// Sign if the ball excludes zero.
    pub fn certified_sign(&self) -> Option<i32> {
        let lo = self.mid.sub(&self.rad);
        let hi = self.mid.add(&self.rad);
        if lo.signum() > 0 {
            Some(1)
        } else if hi.signum() < 0 {
            Some(-1)
        } else {
            None
        }
    }

    pub fn contains(&self, x: &BigFloat) -> bool {
        let d = self.mid.sub(x).abs();
        d.cmp_value(&self.rad) != std::cmp::Ordering::Greater
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn cos_ball_contains_true_value() {
        let pi = Ball::pi(128);
        let c = pi.mul_i64(2).div_i64(3).cos();
        assert!(c.contains(&BigFloat::from_rational(&rat(-1, 2), 256)));
        assert_eq!(c.certified_sign(), Some(-1));
        assert!(c.rad.to_f64() < 1e-30);
    }

    #[test]
    fn undecidable_sign() {
        let b = Ball::with_radius(BigFloat::from_f64(1e-10, 64), BigFloat::from_f64(1e-9, 64));
        assert_eq!(b.certified_sign(), None);
    }
}
