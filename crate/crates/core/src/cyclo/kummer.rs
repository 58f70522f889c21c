use num_integer::Integer;

use super::CycloError;

/// The automorphism of ℚ(ζ_n, 2^{1/n}) with ζ_n ↦ ζ_n^a and
/// 2^{1/n} ↦ ζ_n^b·2^{1/n}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KummerLevelElement {
    n: u64,
    a: u64,
    b: u64,
}

impl KummerLevelElement {
    pub fn new(n: u64, a: i64, b: i64) -> Result<Self, CycloError> {
        if n == 0 {
            return Err(CycloError::KummerLevel(n, n));
        }
        let a = a.rem_euclid(n as i64) as u64;
        if a.gcd(&n) != 1 {
            return Err(CycloError::NotAUnit { a, n });
        }
        Ok(KummerLevelElement { n, a, b: b.rem_euclid(n as i64) as u64 })
    }

    pub fn identity(n: u64) -> Result<Self, CycloError> {
        Self::new(n, 1, 0)
    }

    pub fn level(&self) -> u64 {
        self.n
    }

    /// Cyclotomic component.
    pub fn a(&self) -> u64 {
        self.a
    }

    /// Kummer component ρ₂ at level n.
    pub fn b(&self) -> u64 {
        self.b
    }

    /// The image of ζ_n^k·2^{j/n}, as (exponent of ζ_n, j), for j ≥ 0.
    pub fn apply(&self, k: u64, j: u64) -> (u64, u64) {
        ((self.a * k + j * self.b) % self.n, j)
    }
}

/// s∘t: (a, b) = (a_s a_t, b_s + a_s b_t) mod n.
pub fn kummer_compose(s: &KummerLevelElement, t: &KummerLevelElement) -> Result<KummerLevelElement, CycloError> {
    if s.n != t.n {
        return Err(CycloError::KummerLevel(s.n, t.n));
    }
    let n = s.n;
    Ok(KummerLevelElement { n, a: s.a * t.a % n, b: (s.b + s.a * t.b) % n })
}
