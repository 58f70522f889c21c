use std::collections::BTreeMap;
use std::sync::Arc;

use crate::scalars::{rat, Scalar};

use super::FreeAlgError;

/// A word in the generators, letters being alphabet indices.
pub type Word = Vec<u8>;

/// Sort key ordering words by degree, then lexicographically.
pub fn graded_key(w: &Word) -> (usize, &[u8]) {
    (w.len(), w.as_slice())
}

/// Truncated noncommutative power series Σ c_w w over words of length ≤ N.
#[derive(Clone, Debug)]
pub struct NCSeries<C> {
    alphabet: Arc<Vec<String>>,
    degree: usize,
    sample: C,
    terms: BTreeMap<Word, C>,
}

impl<C: Scalar> NCSeries<C> {
    pub fn zero(alphabet: &[&str], degree: usize, sample: &C) -> Self {
        NCSeries {
            alphabet: Arc::new(alphabet.iter().map(|s| s.to_string()).collect()),
            degree,
            sample: sample.zero_like(),
            terms: BTreeMap::new(),
        }
    }

    /// Empty series sharing alphabet, degree and coefficient context with `self`.
    pub fn zero_like(&self) -> Self {
        NCSeries {
            alphabet: self.alphabet.clone(),
            degree: self.degree,
            sample: self.sample.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one_like(&self) -> Self {
        self.monomial(Vec::new(), self.sample.one_like())
    }

    pub fn monomial(&self, w: Word, c: C) -> Self {
        let mut s = self.zero_like();
        s.add_term(w, c);
        s
    }

    /// The generator with index `i`.
    pub fn generator(&self, i: usize) -> Self {
        assert!(i < self.alphabet.len(), "generator index out of range");
        self.monomial(vec![i as u8], self.sample.one_like())
    }

    pub fn generators(&self) -> Vec<Self> {
        (0..self.alphabet.len()).map(|i| self.generator(i)).collect()
    }

    pub fn scalar(&self, c: C) -> Self {
        self.monomial(Vec::new(), c)
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn rank(&self) -> usize {
        self.alphabet.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn sample(&self) -> &C {
        &self.sample
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[u8]) -> C {
        self.terms.get(w).cloned().unwrap_or_else(|| self.sample.clone())
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&[])
    }

    /// Adds `c·w`, dropping words beyond the truncation degree.
    pub fn add_term(&mut self, w: Word, c: C) {
        if w.len() > self.degree || c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v = v.plus(&c);
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    /// Re-truncates at a (smaller) degree.
    pub fn truncate(&self, degree: usize) -> Self {
        let mut out = self.zero_like();
        out.degree = degree.min(self.degree);
        for (w, c) in &self.terms {
            if w.len() <= out.degree {
                out.terms.insert(w.clone(), c.clone());
            }
        }
        out
    }

    /// Same series viewed at a different truncation degree (no new terms appear).
    pub fn with_degree(&self, degree: usize) -> Self {
        let mut out = self.truncate(degree);
        out.degree = degree;
        out
    }

    pub fn homogeneous(&self, k: usize) -> Self {
        let mut out = self.zero_like();
        for (w, c) in &self.terms {
            if w.len() == k {
                out.terms.insert(w.clone(), c.clone());
            }
        }
        out
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).min()
    }

    fn check_compatible(&self, rhs: &Self) {
        debug_assert!(
            self.alphabet == rhs.alphabet || *self.alphabet == *rhs.alphabet,
            "mixing series over different alphabets"
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_compatible(rhs);
        let mut out = self.clone();
        out.degree = self.degree.min(rhs.degree);
        if out.degree < self.degree {
            out = out.truncate(out.degree);
        }
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.negate())
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return self.zero_like();
        }
        self.map_coeffs(|c| c.times(s))
    }

    pub fn scale_rational(&self, num: i64, den: i64) -> Self {
        let s = self.sample.rational(&rat(num, den));
        self.scale(&s)
    }

    pub fn map_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        let mut out = self.zero_like();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Coefficient change of ring, keeping alphabet and degree.
    pub fn convert<D: Scalar>(&self, sample: &D, f: impl Fn(&C) -> D) -> NCSeries<D> {
        let mut out = NCSeries {
            alphabet: self.alphabet.clone(),
            degree: self.degree,
            sample: sample.zero_like(),
            terms: BTreeMap::new(),
        };
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Graded-truncated product.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_compatible(rhs);
        let degree = self.degree.min(rhs.degree);
        let mut out = self.zero_like();
        out.degree = degree;
        if self.terms.is_empty() || rhs.terms.is_empty() {
            return out;
        }
        // Bucket the right factor by length so the inner loop skips words that overflow.
        let mut by_len: Vec<Vec<(&Word, &C)>> = vec![Vec::new(); degree + 1];
        for (w, c) in &rhs.terms {
            if w.len() <= degree {
                by_len[w.len()].push((w, c));
            }
        }
        let mut acc: BTreeMap<Word, C> = BTreeMap::new();
        for (w1, c1) in &self.terms {
            if w1.len() > degree {
                continue;
            }
            for bucket in by_len.iter().take(degree - w1.len() + 1) {
                for (w2, c2) in bucket {
                    let mut w = Vec::with_capacity(w1.len() + w2.len());
                    w.extend_from_slice(w1);
                    w.extend_from_slice(w2);
                    let p = c1.times(c2);
                    match acc.get_mut(&w) {
                        Some(v) => *v = v.plus(&p),
                        None => {
                            acc.insert(w, p);
                        }
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        out.terms = acc;
        out
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// exp(S); S must have zero constant term.
    pub fn exp(&self) -> Result<Self, FreeAlgError> {
        if !self.constant_term().is_zero() {
            return Err(FreeAlgError::ExpConstantTerm);
        }
        let mut out = self.one_like();
        let mut term = self.one_like();
        let v = self.valuation().unwrap_or(self.degree + 1).max(1);
        for k in 1..=(self.degree / v) {
            term = term.mul(self).scale_rational(1, k as i64);
            if term.is_empty() {
                break;
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// log(S); S must have constant term 1.
    pub fn log(&self) -> Result<Self, FreeAlgError> {
        let one = self.sample.one_like();
        if !self.constant_term().minus(&one).is_zero() {
            return Err(FreeAlgError::LogConstantTerm);
        }
        let x = self.sub(&self.one_like());
        let mut out = self.zero_like();
        let mut power = self.one_like();
        let v = x.valuation().unwrap_or(self.degree + 1).max(1);
        for k in 1..=(self.degree / v) {
            power = power.mul(&x);
            if power.is_empty() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale_rational(sign, k as i64));
        }
        Ok(out)
    }

    /// Inverse of a series with invertible constant term.
    pub fn inverse(&self) -> Result<Self, FreeAlgError> {
        let c0 = self.constant_term().inverse().ok_or(FreeAlgError::NotInvertible)?;
        // S = c0⁻¹(1 − X) ⇒ S⁻¹ = (1 + X + X² + …) c0
        let normalized = self.scale(&c0);
        let x = self.one_like().sub(&normalized);
        let mut out = self.one_like();
        let mut power = self.one_like();
        for _ in 0..self.degree {
            power = power.mul(&x);
            if power.is_empty() {
                break;
            }
            out = out.add(&power);
        }
        Ok(out.scale(&c0))
    }

    /// S^λ = exp(λ log S) for a 1-unit S.
    pub fn power(&self, lambda: &C) -> Result<Self, FreeAlgError> {
        self.log()?.scale(lambda).exp()
    }

    /// Algebra homomorphism sending generator i to `images[i]`.
    pub fn substitute_letters(&self, images: &[Self]) -> Self {
        assert_eq!(images.len(), self.rank(), "one image per generator");
        let target = &images[0];
        let mut out = target.zero_like();
        // Horner-like reuse: cache products of prefixes.
        let mut cache: BTreeMap<Word, Self> = BTreeMap::new();
        cache.insert(Vec::new(), target.one_like());
        for (w, c) in &self.terms {
            let img = prefix_image(&mut cache, w, images);
            out = out.add(&img.scale(c));
        }
        out
    }

    /// Exchanges letters according to `perm` (letter i becomes perm[i]).
    pub fn permute_letters(&self, perm: &[u8]) -> Self {
        let mut out = self.zero_like();
        for (w, c) in &self.terms {
            out.add_term(w.iter().map(|l| perm[*l as usize]).collect(), c.clone());
        }
        out
    }

    /// Maximal coefficient norm.
    pub fn max_norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// max |coefficient| of self − rhs.
    pub fn distance(&self, rhs: &Self) -> f64 {
        self.sub(rhs).max_norm()
    }

    /// Words rendered with alphabet names, e.g. "AAB"; the empty word is "1".
    pub fn word_string(&self, w: &[u8]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.iter().map(|l| self.alphabet[*l as usize].as_str()).collect()
    }

    /// Parses a word written with single-character letter names.
    pub fn parse_word(&self, s: &str) -> Option<Word> {
        if s == "1" {
            return Some(Vec::new());
        }
        let mut w = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let (i, name) = self
                .alphabet
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len())?;
            w.push(i as u8);
            rest = &rest[name.len()..];
        }
        Some(w)
    }

    /// (word, coefficient) pairs sorted by degree, then lexicographically.
    pub fn dump(&self) -> Vec<(String, String)> {
        let mut entries: Vec<(&Word, &C)> = self.terms.iter().collect();
        entries.sort_by(|a, b| graded_key(a.0).cmp(&graded_key(b.0)));
        entries.into_iter().map(|(w, c)| (self.word_string(w), c.to_string_repr())).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "alphabet": *self.alphabet,
            "degree": self.degree,
            "terms": self.dump(),
        })
    }
}

fn prefix_image<C: Scalar>(
    cache: &mut BTreeMap<Word, NCSeries<C>>,
    w: &[u8],
    images: &[NCSeries<C>],
) -> NCSeries<C> {
    if let Some(s) = cache.get(w) {
        return s.clone();
    }
    let (head, last) = w.split_at(w.len() - 1);
    let p = prefix_image(cache, head, images).mul(&images[last[0] as usize]);
    cache.insert(w.to_vec(), p.clone());
    p
}
