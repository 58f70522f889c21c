use std::fmt;

use super::{format_tokens, parse_tokens, FreeWord, GroupError};

/// Word in the Artin generators σ₁, …, σ_{n−1} of B_n. Letters are
/// (0-based index i for σ_{i+1}, ±1).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1);
        BraidWord { strands, letters: Vec::new() }
    }

    /// σ_i^{±1} with 1-based `i`.
    pub fn sigma(strands: usize, i: usize, sign: i8) -> Self {
        assert!(i >= 1 && i < strands, "σ_{i} is not a generator of B_{strands}");
        BraidWord { strands, letters: vec![(i - 1, sign.signum())] }
    }

    pub fn from_letters(strands: usize, letters: &[(usize, i8)]) -> Result<Self, GroupError> {
        let mut b = BraidWord::identity(strands);
        for &(i, e) in letters {
            if i + 1 >= strands {
                return Err(GroupError::IndexOutOfRange { index: i + 1, bound: strands });
            }
            b.push(i, e);
        }
        Ok(b)
    }

    /// "s1 s2^-1 s1" with 1-based indices.
    pub fn parse(s: &str, strands: usize) -> Result<Self, GroupError> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(BraidWord::identity(strands));
        }
        Self::from_letters(strands, &parse_tokens(s, 's')?)
    }

    fn push(&mut self, i: usize, e: i8) {
        if let Some(&(j, f)) = self.letters.last() {
            if j == i && f == -e {
                self.letters.pop();
                return;
            }
        }
        self.letters.push((i, e));
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, rhs: &BraidWord) -> BraidWord {
        let mut out = self.clone();
        out.strands = self.strands.max(rhs.strands);
        for &(i, e) in &rhs.letters {
            out.push(i, e);
        }
        out
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect() }
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(BraidWord::identity(self.strands), |acc, _| acc.mul(&base))
    }

    pub fn conjugate_by(&self, g: &BraidWord) -> BraidWord {
        g.mul(self).mul(&g.inverse())
    }

    /// The same word viewed in B_m for m ≥ n.
    pub fn embed(&self, m: usize) -> BraidWord {
        assert!(m >= self.strands);
        BraidWord { strands: m, letters: self.letters.clone() }
    }

    /// Shifts every index by `k` (σ_i ↦ σ_{i+k}) inside B_m.
    pub fn shift(&self, k: usize, m: usize) -> BraidWord {
        assert!(m >= self.strands + k);
        BraidWord { strands: m, letters: self.letters.iter().map(|&(i, e)| (i + k, e)).collect() }
    }

    pub fn is_pure(&self) -> bool {
        permutation(self).is_identity()
    }

    /// Image of a free word under the Artin automorphism of this braid.
    pub fn act(&self, w: &FreeWord) -> Result<FreeWord, GroupError> {
        if w.rank() != self.strands {
            return Err(GroupError::RankMismatch(self.strands, w.rank()));
        }
        Ok(w.substitute(&artin_images(self)))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_tokens(&self.letters, 's'))
    }
}

/// Images φ_b(x₁), …, φ_b(x_n) of the Artin automorphism, with
/// σ_i: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i and φ_{b₁b₂} = φ_{b₁}∘φ_{b₂}.
pub fn artin_images(b: &BraidWord) -> Vec<FreeWord> {
    let n = b.strands();
    let mut g: Vec<FreeWord> = (0..n).map(|i| FreeWord::generator(n, i)).collect();
    for &(i, e) in b.letters() {
        // φ_{b σ} = φ_b ∘ φ_σ: only the images of x_i, x_{i+1} change.
        let (gi, gj) = (g[i].clone(), g[i + 1].clone());
        if e > 0 {
            g[i] = gi.mul(&gj).mul(&gi.inverse());
            g[i + 1] = gi;
        } else {
            g[i] = gj.clone();
            g[i + 1] = gj.inverse().mul(&gi).mul(&gj);
        }
    }
    g
}

/// Equality in B_n, decided through the faithful Artin action.
pub fn braid_eq(b1: &BraidWord, b2: &BraidWord) -> bool {
    b1.strands() == b2.strands() && artin_images(b1) == artin_images(b2)
}

/// A permutation of {0, …, n−1}, stored as the image list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, p)| i == *p)
    }

    /// Cycle lengths greater than one, sorted.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            if len > 1 {
                out.push(len);
            }
        }
        out.sort();
        out
    }
}

/// The permutation of the punctures; perm(b₁b₂) = perm(b₁)∘perm(b₂).
pub fn permutation(b: &BraidWord) -> Permutation {
    let n = b.strands();
    let mut p: Vec<usize> = (0..n).collect();
    for &(i, _) in b.letters() {
        // p ∘ (i i+1)
        p.swap(i, i + 1);
    }
    Permutation(p)
}

/// ξ_{i,j} = (σ_{j−1}…σ_{i+1}) σ_i² (σ_{j−1}…σ_{i+1})⁻¹ in B_n, 1-based.
pub fn xi(i: usize, j: usize, n: usize) -> Result<BraidWord, GroupError> {
    if !(1 <= i && i < j && j <= n) {
        return Err(GroupError::BadXi { i, j, n });
    }
    let mut c = BraidWord::identity(n);
    for k in ((i + 1)..j).rev() {
        c = c.mul(&BraidWord::sigma(n, k, 1));
    }
    Ok(BraidWord::sigma(n, i, 1).pow(2).conjugate_by(&c))
}

/// Full twist (σ₁…σ_{r−1})^r on the first r strands of B_n.
pub fn full_twist(r: usize, n: usize) -> BraidWord {
    assert!(r <= n);
    let mut c = BraidWord::identity(n);
    for k in 1..r {
        c = c.mul(&BraidWord::sigma(n, k, 1));
    }
    c.pow(r as i64)
}

/// δ_r = T_{r−1}⁻¹ T_r with T_r the full twist on the first r strands.
pub fn delta(r: usize, n: usize) -> Result<BraidWord, GroupError> {
    if !(2 <= r && r <= n) {
        return Err(GroupError::BadDelta { r, n });
    }
    Ok(full_twist(r - 1, n).inverse().mul(&full_twist(r, n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str, n: usize) -> BraidWord {
        BraidWord::parse(s, n).unwrap()
    }

    #[test]
    fn artin_convention() {
        let x1 = FreeWord::generator(3, 0);
        assert_eq!(b("s1", 3).act(&x1).unwrap().to_string(), "x1 x2 x1^-1");
        assert_eq!(b("", 3).act(&x1).unwrap(), x1);
        assert!(b("s1", 3).act(&FreeWord::generator(2, 0)).is_err());
    }

    #[test]
    fn braid_relations() {
        assert!(braid_eq(&b("s1 s2 s1", 3), &b("s2 s1 s2", 3)));
        assert!(braid_eq(&b("s1 s3", 4), &b("s3 s1", 4)));
        assert!(!braid_eq(&b("s1", 3), &b("s2", 3)));
        assert!(braid_eq(&b("s1 s1^-1", 3), &b("", 3)));
    }

    #[test]
    fn xi_words() {
        assert_eq!(xi(1, 2, 4).unwrap(), b("s1^2", 4));
        assert_eq!(xi(1, 3, 4).unwrap().to_string(), "s2 s1 s1 s2^-1");
        for i in 1..5 {
            for j in (i + 1)..=5 {
                assert!(xi(i, j, 5).unwrap().is_pure());
            }
        }
        assert!(xi(2, 2, 4).is_err());
        assert!(xi(1, 5, 4).is_err());
    }

    #[test]
    fn xi_are_conjugate() {
        // Search short conjugators c with c ξ_{1,2} c⁻¹ = ξ_{i,j}.
        let n = 4;
        let base = xi(1, 2, n).unwrap();
        let gens: Vec<BraidWord> = (1..n)
            .flat_map(|i| [BraidWord::sigma(n, i, 1), BraidWord::sigma(n, i, -1)])
            .collect();
        let mut words = vec![BraidWord::identity(n)];
        for _ in 0..4 {
            let next: Vec<BraidWord> =
                words.iter().flat_map(|w| gens.iter().map(move |g| w.mul(g))).collect();
            words.extend(next);
        }
        for i in 1..n {
            for j in (i + 1)..=n {
                let target = xi(i, j, n).unwrap();
                let found = words.iter().find(|c| braid_eq(&base.conjugate_by(c), &target));
                assert!(found.is_some(), "no conjugator for ξ_{i}{j}");
            }
        }
    }

    #[test]
    fn deltas_commute_and_start_with_sigma_squared() {
        assert!(braid_eq(&delta(2, 4).unwrap(), &b("s1^2", 4)));
        for n in 2..=5 {
            for r in 2..=n {
                for s in 2..=n {
                    let (dr, ds) = (delta(r, n).unwrap(), delta(s, n).unwrap());
                    assert!(braid_eq(&dr.mul(&ds), &ds.mul(&dr)));
                }
            }
        }
        assert!(delta(1, 4).is_err());
    }

    #[test]
    fn permutations() {
        assert_eq!(permutation(&b("s1", 3)).cycle_type(), vec![2]);
        assert!(permutation(&b("s1^2", 3)).is_identity());
        assert_eq!(permutation(&b("s1 s2", 3)).cycle_type(), vec![3]);
    }

    #[test]
    fn full_twist_is_central() {
        for n in 2..=5 {
            let t = full_twist(n, n);
            for i in 1..n {
                let s = BraidWord::sigma(n, i, 1);
                assert!(braid_eq(&t.mul(&s), &s.mul(&t)));
            }
            // It acts on F_n by conjugation by the boundary word.
            let bnd = FreeWord::boundary(n);
            for (k, img) in artin_images(&t).iter().enumerate() {
                assert_eq!(*img, FreeWord::generator(n, k).conjugate_by(&bnd));
            }
        }
    }
}
