use num_bigint::BigInt;
use num_traits::Signed;

use crate::scalars::{Ball, BigFloat};

use super::cyclotomic::{real_embeddings, CyclotomicInt};
use super::CycloError;

/// Default cap on Σ [a^{m−1}] in [`epsilon`].
pub const DEFAULT_EXPONENT_CAP: u64 = 1 << 20;

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % m;
        }
        a = a * a % m;
        e >>= 1;
    }
    acc
}

/// The exponents [a^{m−1}] for 0 < a < ℓⁿ prime to ℓ, as (a, exponent).
pub fn epsilon_exponents(ell: u64, n: u32, m: u32) -> Vec<(u64, u64)> {
    let big = ell.pow(n);
    (1..big).filter(|a| a % ell != 0).map(|a| (a, pow_mod(a, (m - 1) as u64, big))).collect()
}

/// ε_{m,n} = ∏_{0<a<ℓⁿ, (a,ℓ)=1} (ζ^a − 1)^{[a^{m−1}]}.
pub fn epsilon(ell: u64, n: u32, m: u32) -> Result<CyclotomicInt, CycloError> {
    epsilon_capped(ell, n, m, DEFAULT_EXPONENT_CAP)
}

pub fn epsilon_capped(ell: u64, n: u32, m: u32, cap: u64) -> Result<CyclotomicInt, CycloError> {
    if ell == 2 || m < 3 || m % 2 == 0 {
        return Err(CycloError::BadParameters { ell, n, m });
    }
    let one = CyclotomicInt::integer(ell, n, 1)?;
    let exps = epsilon_exponents(ell, n, m);
    let total: u64 = exps.iter().map(|&(_, e)| e).sum();
    if total > cap {
        return Err(CycloError::ExponentCap { total, cap });
    }
    let mut acc = one.clone();
    for (a, e) in exps {
        if e == 0 {
            continue;
        }
        let factor = CyclotomicInt::zeta_pow(ell, n, a as i64)?.sub(&one);
        acc = acc.mul(&factor.pow(e));
    }
    Ok(acc)
}

/// Signs of a real cyclotomic integer at its real embeddings, with the
/// precision at which they were certified.
#[derive(Clone, Debug, PartialEq)]
pub struct PositivityCertificate {
    /// (a, sign of x at ζ ↦ e^{2iπa/ℓⁿ}) for 0 < a < ℓⁿ/2 prime to ℓ.
    pub signs: Vec<(i64, i32)>,
    pub precision: u32,
}

impl PositivityCertificate {
    pub fn totally_positive(&self) -> bool {
        self.signs.iter().all(|&(_, s)| s > 0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "embeddings": self.signs.iter().map(|&(a, s)| serde_json::json!({"a": a, "sign": s})).collect::<Vec<_>>(),
            "precision": self.precision,
            "totally_positive": self.totally_positive(),
        })
    }
}

/// Certified signs of x at every real embedding, doubling the working
/// precision from `precision` up to `cap` until each sign is decided.
pub fn embedding_signs(x: &CyclotomicInt, precision: u32, cap: u32) -> Result<PositivityCertificate, CycloError> {
    if !x.is_real() {
        return Err(CycloError::NotReal);
    }
    let embeddings = real_embeddings(x.ell(), x.level());
    let mut prec = precision.max(32);
    loop {
        let signs: Option<Vec<(i64, i32)>> =
            embeddings.iter().map(|&a| x.real_ball(a, prec).certified_sign().map(|s| (a, s))).collect();
        if let Some(signs) = signs {
            return Ok(PositivityCertificate { signs, precision: prec });
        }
        if prec >= cap {
            return Err(CycloError::PrecisionCap(cap));
        }
        prec = (prec * 2).min(cap);
    }
}

/// Whether x is totally positive, with its sign certificate. A zero
/// embedding value cannot be certified and ends in the precision-cap error.
pub fn totally_positive(x: &CyclotomicInt, precision: u32) -> Result<(bool, PositivityCertificate), CycloError> {
    let cert = embedding_signs(x, precision, precision.max(32) << 6)?;
    Ok((cert.totally_positive(), cert))
}

/// ε_{m,n} at ζ ↦ e^{2iπa₀/ℓⁿ} computed factor by factor as
/// ∏_{0<a<ℓⁿ/2} |ζ^{a a₀} − 1|^{2[a^{m−1}]}, using that a and −a carry the
/// same exponent.
pub fn epsilon_product_ball(ell: u64, n: u32, m: u32, a0: i64, prec: u32) -> Ball {
    let big = ell.pow(n) as i64;
    let pi = Ball::pi(prec);
    let two = Ball::exact(BigFloat::from_i64(2, prec));
    let mut acc = Ball::exact(BigFloat::one(prec));
    for (a, e) in epsilon_exponents(ell, n, m) {
        if 2 * a as i64 > big || e == 0 {
            continue;
        }
        let j = (a as i64 * a0).rem_euclid(big);
        let cos = pi.mul_i64(2 * j).div_i64(big).cos();
        let sq = two.sub(&cos.mul_i64(2));
        for _ in 0..e {
            acc = acc.mul(&sq);
        }
    }
    acc
}

fn overlap(a: &Ball, b: &Ball) -> bool {
    let d = a.mid.sub(&b.mid).abs();
    d.cmp_value(&a.rad.add(&b.rad)).is_le()
}

/// Whether the exact ε and its factor-by-factor product agree, as balls, at
/// every real embedding.
pub fn epsilon_consistency(ell: u64, n: u32, m: u32, prec: u32) -> Result<bool, CycloError> {
    let eps = epsilon(ell, n, m)?;
    Ok(real_embeddings(ell, n).into_iter().all(|a| {
        let exact = eps.real_ball(a, prec);
        let product = epsilon_product_ball(ell, n, m, a, prec);
        overlap(&exact, &product)
    }))
}

/// Norm of ε over ℚ as the product of its conjugates, rounded.
pub fn epsilon_norm(eps: &CyclotomicInt, prec: u32) -> BigInt {
    let mut acc = Ball::exact(BigFloat::one(prec));
    for a in real_embeddings(eps.ell(), eps.level()) {
        let v = eps.real_ball(a, prec);
        acc = acc.mul(&v).mul(&v);
    }
    acc.mid.round_to_bigint().abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn small_cases_are_three() {
        for m in [3, 5] {
            let e = epsilon(3, 1, m).unwrap();
            assert_eq!(e.as_integer(), Some(BigInt::from(3)));
        }
        assert_eq!(epsilon_exponents(3, 1, 3), vec![(1, 1), (2, 1)]);
        assert!(epsilon(3, 1, 4).is_err());
        assert!(epsilon(2, 3, 3).is_err());
        assert!(matches!(epsilon_capped(7, 2, 3, 10), Err(CycloError::ExponentCap { .. })));
    }

    #[test]
    fn positivity_examples() {
        let three = CyclotomicInt::integer(5, 1, 3).unwrap();
        assert!(totally_positive(&three, 64).unwrap().0);

        let (pos, cert) = totally_positive(&epsilon(5, 1, 3).unwrap(), 64).unwrap();
        assert!(pos);
        assert_eq!(cert.signs.len(), 2);

        let z = CyclotomicInt::zeta_pow(5, 1, 1).unwrap();
        let (pos, cert) = totally_positive(&z.add(&z.conj()), 64).unwrap();
        assert!(!pos);
        assert_eq!(cert.signs, vec![(1, 1), (2, -1)]);

        assert!(matches!(totally_positive(&z, 64), Err(CycloError::NotReal)));
        let zero = CyclotomicInt::zero(5, 1).unwrap();
        assert!(matches!(embedding_signs(&zero, 32, 128), Err(CycloError::PrecisionCap(128))));
    }

    #[test]
    fn grid() {
        for ell in [3, 5, 7] {
            for n in [1, 2] {
                for m in [3, 5] {
                    let e = epsilon(ell, n, m).unwrap();
                    assert!(e.is_real(), "{ell} {n} {m}");
                    assert!(totally_positive(&e, 128).unwrap().0, "{ell} {n} {m}");
                    assert!(epsilon_consistency(ell, n, m, 256).unwrap(), "{ell} {n} {m}");
                }
            }
        }
    }

    #[test]
    fn conjugates_multiply_to_a_power_of_ell() {
        // ζ^a − 1 has norm ℓ at level 1, so N(ε) = ℓ^{Σ exponents}
        let e = epsilon(5, 1, 3).unwrap();
        let total: u64 = epsilon_exponents(5, 1, 3).iter().map(|&(_, x)| x).sum();
        assert_eq!(epsilon_norm(&e, 256), BigInt::from(5u32).pow(total as u32));
        assert!(BigInt::one() < epsilon_norm(&e, 256));
    }
}
