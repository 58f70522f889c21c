use std::fmt;

use super::{format_tokens, parse_tokens, GroupError};

/// Freely reduced word in the free group on x₁, …, x_n. Letters are
/// (0-based generator index, ±1).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<(usize, i8)>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, letters: Vec::new() }
    }

    pub fn generator(rank: usize, i: usize) -> Self {
        assert!(i < rank, "generator index out of range");
        FreeWord { rank, letters: vec![(i, 1)] }
    }

    pub fn from_letters(rank: usize, letters: &[(usize, i8)]) -> Result<Self, GroupError> {
        let mut w = FreeWord::identity(rank);
        for &(i, e) in letters {
            if i >= rank {
                return Err(GroupError::IndexOutOfRange { index: i + 1, bound: rank });
            }
            w.push(i, e);
        }
        Ok(w)
    }

    /// "x1 x2^-1 x1" with 1-based indices; "1" or "" is the identity.
    pub fn parse(s: &str, rank: usize) -> Result<Self, GroupError> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(FreeWord::identity(rank));
        }
        Self::from_letters(rank, &parse_tokens(s, 'x')?)
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

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, rhs: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        out.rank = self.rank.max(rhs.rank);
        for &(i, e) in &rhs.letters {
            out.push(i, e);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { rank: self.rank, letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect() }
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(FreeWord::identity(self.rank), |acc, _| acc.mul(&base))
    }

    pub fn conjugate_by(&self, g: &FreeWord) -> FreeWord {
        g.mul(self).mul(&g.inverse())
    }

    /// Image under the homomorphism x_i ↦ images[i].
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let rank = images.first().map(|w| w.rank).unwrap_or(self.rank);
        let mut out = FreeWord::identity(rank);
        for &(i, e) in &self.letters {
            out = out.mul(&if e > 0 { images[i].clone() } else { images[i].inverse() });
        }
        out
    }

    /// The boundary word x₁x₂…x_n.
    pub fn boundary(rank: usize) -> FreeWord {
        FreeWord { rank, letters: (0..rank).map(|i| (i, 1)).collect() }
    }

    /// Exponent sum of each generator (abelianization).
    pub fn abelianization(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        for &(i, e) in &self.letters {
            v[i] += e as i64;
        }
        v
    }

    /// Evaluation in any group given by multiplication, inverse and unit.
    pub fn evaluate<G: Clone>(&self, images: &[G], inverses: &[G], one: G, mul: impl Fn(&G, &G) -> G) -> G {
        self.letters.iter().fold(one, |acc, &(i, e)| mul(&acc, if e > 0 { &images[i] } else { &inverses[i] }))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_tokens(&self.letters, 'x'))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction() {
        let w = FreeWord::parse("x1 x2 x2^-1 x1^-1 x3", 3).unwrap();
        assert_eq!(w.to_string(), "x3");
        assert!(w.mul(&w.inverse()).is_identity());
        assert_eq!(FreeWord::parse("x2^3", 2).unwrap().len(), 3);
        assert!(FreeWord::parse("x4", 3).is_err());
        assert!(FreeWord::parse("y1", 3).is_err());
    }

    #[test]
    fn substitution_is_homomorphic() {
        let w = FreeWord::parse("x1 x2^-1", 2).unwrap();
        let imgs = vec![FreeWord::parse("x2 x1", 2).unwrap(), FreeWord::parse("x1", 2).unwrap()];
        assert_eq!(w.substitute(&imgs).to_string(), "x2");
        assert_eq!(w.pow(-2).to_string(), "x2 x1^-1 x2 x1^-1");
    }
}
