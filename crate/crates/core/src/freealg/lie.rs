use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::scalars::{rat_int, Rational, Scalar};

use super::{FreeAlgError, NCSeries, Word};

/// Lyndon words over `rank` letters of length 1..=max_len, ordered by
/// length and then lexicographically (letter 0 < letter 1 < …).
pub fn lyndon_words(rank: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if rank == 0 || max_len == 0 {
        return out;
    }
    // Duval's generation in lexicographic order.
    let mut w: Vec<usize> = vec![0];
    loop {
        out.push(w.iter().map(|l| *l as u8).collect::<Word>());
        let m = w.len();
        while w.len() < max_len {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&last) = w.last() {
            if last == rank - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            None => break,
            Some(l) => *l += 1,
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w[i..].iter().chain(w[..i].iter()).cmp(w.iter()).is_gt())
}

/// Standard factorization w = uv, v the longest proper Lyndon suffix.
pub fn standard_factorization(w: &[u8]) -> (&[u8], &[u8]) {
    assert!(w.len() >= 2, "letters have no factorization");
    for i in 1..w.len() {
        if is_lyndon(&w[i..]) {
            return (&w[..i], &w[i..]);
        }
    }
    unreachable!("a one-letter suffix is always Lyndon")
}

/// Integer polynomial in the free algebra, used for bracket expansions.
pub type IntPoly = BTreeMap<Word, i64>;

fn int_commutator(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = IntPoly::new();
    for (w1, c1) in a {
        for (w2, c2) in b {
            let mut w = w1.clone();
            w.extend_from_slice(w2);
            *out.entry(w).or_insert(0) += c1 * c2;
            let mut w = w2.clone();
            w.extend_from_slice(w1);
            *out.entry(w).or_insert(0) -= c1 * c2;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Expansion of the bracketed Lyndon word P_w into words; its
/// lexicographically smallest word is w itself, with coefficient 1.
pub fn lyndon_expansion(w: &[u8], cache: &mut HashMap<Word, IntPoly>) -> IntPoly {
    if let Some(p) = cache.get(w) {
        return p.clone();
    }
    let p = if w.len() == 1 {
        IntPoly::from([(w.to_vec(), 1)])
    } else {
        let (u, v) = standard_factorization(w);
        let pu = lyndon_expansion(u, cache);
        let pv = lyndon_expansion(v, cache);
        int_commutator(&pu, &pv)
    };
    cache.insert(w.to_vec(), p.clone());
    p
}

/// Left-normed bracketing θ(w) = [...[w₁, w₂], …, w_k].
pub fn left_normed(w: &[u8]) -> IntPoly {
    let mut p = IntPoly::from([(vec![w[0]], 1)]);
    for l in &w[1..] {
        p = int_commutator(&p, &IntPoly::from([(vec![*l], 1)]));
    }
    p
}

/// Any Lie algebra in which Lie series can be evaluated.
pub trait LieTarget: Clone {
    fn lie_bracket(&self, rhs: &Self) -> Self;
    fn lie_add(&self, rhs: &Self) -> Self;
    fn lie_zero(&self) -> Self;
}

impl<C: Scalar> LieTarget for NCSeries<C> {
    fn lie_bracket(&self, rhs: &Self) -> Self {
        self.commutator(rhs)
    }
    fn lie_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn lie_zero(&self) -> Self {
        self.zero_like()
    }
}

/// Lie series Σ c_w P_w in the Lyndon basis, truncated at degree N.
#[derive(Clone, Debug)]
pub struct LieSeries<C> {
    alphabet: Arc<Vec<String>>,
    degree: usize,
    sample: C,
    coords: BTreeMap<Word, C>,
}

impl<C: Scalar> LieSeries<C> {
    pub fn zero(alphabet: &[&str], degree: usize, sample: &C) -> Self {
        LieSeries {
            alphabet: Arc::new(alphabet.iter().map(|s| s.to_string()).collect()),
            degree,
            sample: sample.zero_like(),
            coords: BTreeMap::new(),
        }
    }

    pub fn zero_like(&self) -> Self {
        LieSeries {
            alphabet: self.alphabet.clone(),
            degree: self.degree,
            sample: self.sample.clone(),
            coords: BTreeMap::new(),
        }
    }

    pub fn generator(&self, i: usize) -> Self {
        let mut s = self.zero_like();
        s.set(vec![i as u8], self.sample.one_like());
        s
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn alphabet_refs(&self) -> Vec<&str> {
        self.alphabet.iter().map(|s| s.as_str()).collect()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn sample(&self) -> &C {
        &self.sample
    }

    pub fn coords(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.coords.iter()
    }

    pub fn coeff(&self, w: &[u8]) -> C {
        self.coords.get(w).cloned().unwrap_or_else(|| self.sample.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Sets the coordinate of a Lyndon word.
    pub fn set(&mut self, w: Word, c: C) {
        assert!(is_lyndon(&w), "coordinates are indexed by Lyndon words");
        if w.len() > self.degree || c.is_zero() {
            self.coords.remove(&w);
        } else {
            self.coords.insert(w, c);
        }
    }

    /// Lowest degree present.
    pub fn valuation(&self) -> Option<usize> {
        self.coords.keys().map(|w| w.len()).min()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &rhs.coords {
            let v = out.coeff(w).plus(c);
            out.set(w.clone(), v);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.negate())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, s: &C) -> Self {
        self.map_coeffs(|c| c.times(s))
    }

    pub fn map_coeffs(&self, f: impl Fn(&C) -> C) -> Self {
        let mut out = self.zero_like();
        for (w, c) in &self.coords {
            out.set(w.clone(), f(c));
        }
        out
    }

    pub fn convert<D: Scalar>(&self, sample: &D, f: impl Fn(&C) -> D) -> LieSeries<D> {
        let mut out = LieSeries {
            alphabet: self.alphabet.clone(),
            degree: self.degree,
            sample: sample.zero_like(),
            coords: BTreeMap::new(),
        };
        for (w, c) in &self.coords {
            out.set(w.clone(), f(c));
        }
        out
    }

    pub fn truncate(&self, degree: usize) -> Self {
        let mut out = self.zero_like();
        out.degree = degree.min(self.degree);
        for (w, c) in &self.coords {
            out.set(w.clone(), c.clone());
        }
        out
    }

    pub fn with_degree(&self, degree: usize) -> Self {
        let mut out = self.truncate(degree);
        out.degree = degree;
        out
    }

    pub fn homogeneous(&self, k: usize) -> Self {
        let mut out = self.zero_like();
        for (w, c) in &self.coords {
            if w.len() == k {
                out.set(w.clone(), c.clone());
            }
        }
        out
    }

    pub fn max_norm(&self) -> f64 {
        self.coords.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Expansion into the free associative algebra.
    pub fn to_nc(&self) -> NCSeries<C> {
        let names = self.alphabet_refs();
        let mut out = NCSeries::zero(&names, self.degree, &self.sample);
        let mut cache = HashMap::new();
        for (w, c) in &self.coords {
            for (word, k) in lyndon_expansion(w, &mut cache) {
                out.add_term(word, c.times(&c.from_i64_like(k)));
            }
        }
        out
    }

    /// Lyndon coordinates of a Lie element given in the free associative
    /// algebra. Words are peeled off in increasing lexicographic order;
    /// the norm of what remains measures the failure to be Lie.
    pub fn from_nc_with_residual(s: &NCSeries<C>) -> (Self, f64) {
        let names: Vec<&str> = s.alphabet().iter().map(|x| x.as_str()).collect();
        let mut out = LieSeries::zero(&names, s.degree(), s.sample());
        let mut rest = s.clone();
        let mut cache = HashMap::new();
        let constant = rest.constant_term().norm();
        rest = rest.sub(&rest.scalar(rest.constant_term()));
        for w in lyndon_words(s.rank(), s.degree()) {
            let c = rest.coeff(&w);
            if c.is_zero() {
                continue;
            }
            for (word, k) in lyndon_expansion(&w, &mut cache) {
                rest.add_term(word, c.times(&c.from_i64_like(-k)));
            }
            out.set(w, c);
        }
        (out, rest.max_norm().max(constant))
    }

    /// Exact extraction: fails when the input is not Lie beyond `tol`.
    pub fn from_nc(s: &NCSeries<C>, tol: f64) -> Result<Self, FreeAlgError> {
        let (l, r) = Self::from_nc_with_residual(s);
        if r > tol {
            return Err(FreeAlgError::NotLie { residual: r });
        }
        Ok(l)
    }

    /// Evaluation at the given generator images, with `scale` realizing
    /// the coefficient action on the target.
    pub fn eval<T: LieTarget>(&self, gens: &[T], scale: impl Fn(&T, &C) -> T) -> T {
        assert_eq!(gens.len(), self.alphabet.len(), "one image per generator");
        let mut memo: HashMap<Word, T> = HashMap::new();
        let mut out = gens[0].lie_zero();
        for (w, c) in &self.coords {
            let v = eval_lyndon(w, gens, &mut memo);
            out = out.lie_add(&scale(&v, c));
        }
        out
    }

    /// exp of the series in the free associative algebra.
    pub fn exp(&self) -> NCSeries<C> {
        self.to_nc().exp().expect("Lie series have no constant term")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let nc = NCSeries::zero(&self.alphabet_refs(), self.degree, &self.sample);
        let coords: Vec<(String, String)> =
            self.coords.iter().map(|(w, c)| (nc.word_string(w), c.to_string_repr())).collect();
        serde_json::json!({ "alphabet": *self.alphabet, "degree": self.degree, "lyndon": coords })
    }
}

impl LieSeries<Rational> {
    /// Reads the JSON produced by [`LieSeries::to_json`] (exact coefficients).
    pub fn from_json(v: &serde_json::Value) -> Result<Self, FreeAlgError> {
        let bad = || FreeAlgError::Parse(v.to_string());
        let alphabet: Vec<String> = serde_json::from_value(v["alphabet"].clone()).map_err(|_| bad())?;
        let degree = v["degree"].as_u64().ok_or_else(bad)? as usize;
        let names: Vec<&str> = alphabet.iter().map(|s| s.as_str()).collect();
        let mut out = LieSeries::zero(&names, degree, &rat_int(0));
        let nc = NCSeries::zero(&names, degree, &rat_int(0));
        let coords: Vec<(String, String)> = serde_json::from_value(v["lyndon"].clone()).map_err(|_| bad())?;
        for (w, c) in coords {
            let word = nc.parse_word(&w).filter(|x| is_lyndon(x)).ok_or_else(bad)?;
            let r = crate::scalars::parse_rational(&c).ok_or_else(bad)?;
            out.set(word, r);
        }
        Ok(out)
    }
}

impl<C: Scalar> LieTarget for LieSeries<C> {
    fn lie_bracket(&self, rhs: &Self) -> Self {
        Self::from_nc_with_residual(&self.to_nc().commutator(&rhs.to_nc())).0
    }
    fn lie_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn lie_zero(&self) -> Self {
        self.zero_like()
    }
}

fn eval_lyndon<T: LieTarget>(w: &[u8], gens: &[T], memo: &mut HashMap<Word, T>) -> T {
    if w.len() == 1 {
        return gens[w[0] as usize].clone();
    }
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let (u, v) = standard_factorization(w);
    let x = eval_lyndon(u, gens, memo);
    let y = eval_lyndon(v, gens, memo);
    let r = x.lie_bracket(&y);
    memo.insert(w.to_vec(), r.clone());
    r
}

/// Dynkin primitivity test: θ(S_k)/k = S_k in every degree k.
pub fn is_lie_element<C: Scalar>(s: &NCSeries<C>, tol: f64) -> bool {
    if s.constant_term().norm() > tol {
        return false;
    }
    let mut projected = s.zero_like();
    let mut cache: HashMap<Word, IntPoly> = HashMap::new();
    for (w, c) in s.terms() {
        let k = w.len() as i64;
        let theta = cache.entry(w.clone()).or_insert_with(|| left_normed(w));
        let ck = c.rational(&crate::scalars::rat(1, k));
        let ck = c.times(&ck);
        for (word, m) in theta.iter() {
            projected.add_term(word.clone(), ck.times(&ck.from_i64_like(*m)));
        }
    }
    projected.distance(s) <= tol
}

/// Group-likeness: constant term 1 and a Lie logarithm.
pub fn is_group_like<C: Scalar>(s: &NCSeries<C>, tol: f64) -> bool {
    let one = s.sample().one_like();
    if s.constant_term().minus(&one).norm() > tol {
        return false;
    }
    let shifted = s.add(&s.scalar(one.minus(&s.constant_term())));
    match shifted.log() {
        Ok(l) => is_lie_element(&l, tol),
        Err(_) => false,
    }
}

/// Number of Lyndon words of each length 1..=n over `rank` letters
/// (Witt's necklace formula).
pub fn witt_dimension(rank: u64, k: u64) -> u64 {
    let mut total: i64 = 0;
    for d in 1..=k {
        if k % d == 0 {
            total += mobius(d) * (rank as i64).pow((k / d) as u32);
        }
    }
    (total / k as i64) as u64
}

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}
