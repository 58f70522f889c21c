//! Dense truncated series in two letters with real coefficients, indexed by
//! (length, bits) with the first letter as the most significant bit.

use crate::scalars::BigFloat;

#[derive(Clone, Debug)]
pub(crate) struct Dense {
    degree: usize,
    prec: u32,
    c: Vec<BigFloat>,
}

pub(crate) fn index(len: usize, bits: usize) -> usize {
    (1 << len) - 1 + bits
}

impl Dense {
    pub fn zero(degree: usize, prec: u32) -> Self {
        Dense { degree, prec, c: vec![BigFloat::zero(prec); (1 << (degree + 1)) - 1] }
    }

    pub fn one(degree: usize, prec: u32) -> Self {
        let mut d = Self::zero(degree, prec);
        d.c[0] = BigFloat::one(prec);
        d
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, len: usize, bits: usize) -> &BigFloat {
        &self.c[index(len, bits)]
    }

    pub fn set(&mut self, len: usize, bits: usize, v: BigFloat) {
        self.c[index(len, bits)] = v;
    }

    /// Iterates (length, bits, coefficient).
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigFloat)> {
        (0..=self.degree).flat_map(move |len| (0..1usize << len).map(move |b| (len, b, self.get(len, b))))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Dense { degree: self.degree, prec: self.prec, c: self.c.iter().zip(&rhs.c).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Dense { degree: self.degree, prec: self.prec, c: self.c.iter().zip(&rhs.c).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, s: &BigFloat) -> Self {
        Dense { degree: self.degree, prec: self.prec, c: self.c.iter().map(|a| a.mul(s)).collect() }
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        Dense { degree: self.degree, prec: self.prec, c: self.c.iter().map(|a| a.mul_i64(k)).collect() }
    }

    pub fn div_i64(&self, k: i64) -> Self {
        Dense { degree: self.degree, prec: self.prec, c: self.c.iter().map(|a| a.div_i64(k)).collect() }
    }

    /// letter · self.
    pub fn left(&self, letter: usize) -> Self {
        let mut out = Self::zero(self.degree, self.prec);
        for len in 0..self.degree {
            for b in 0..1usize << len {
                out.set(len + 1, (letter << len) | b, self.get(len, b).clone());
            }
        }
        out
    }

    /// self · letter.
    pub fn right(&self, letter: usize) -> Self {
        let mut out = Self::zero(self.degree, self.prec);
        for len in 0..self.degree {
            for b in 0..1usize << len {
                out.set(len + 1, (b << 1) | letter, self.get(len, b).clone());
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.degree, self.prec);
        for l1 in 0..=self.degree {
            for b1 in 0..1usize << l1 {
                let x = self.get(l1, b1);
                if x.is_zero() {
                    continue;
                }
                for l2 in 0..=(self.degree - l1) {
                    for b2 in 0..1usize << l2 {
                        let y = rhs.get(l2, b2);
                        if y.is_zero() {
                            continue;
                        }
                        let i = index(l1 + l2, (b1 << l2) | b2);
                        out.c[i] = out.c[i].add(&x.mul(y));
                    }
                }
            }
        }
        out
    }

    /// Inverse of a series with constant term 1.
    pub fn inverse_unit(&self) -> Self {
        let one = Self::one(self.degree, self.prec);
        let t = one.sub(self);
        let mut acc = one.clone();
        let mut pow = one;
        for _ in 0..self.degree {
            pow = pow.mul(&t);
            acc = acc.add(&pow);
        }
        acc
    }

    /// exp(s·letter) = Σ sʲ letterʲ / j!.
    pub fn exp_letter(letter: usize, s: &BigFloat, degree: usize, prec: u32) -> Self {
        let mut out = Self::zero(degree, prec);
        let mut term = BigFloat::one(prec);
        let mut bits = 0usize;
        for j in 0..=degree {
            out.set(j, bits, term.clone());
            term = term.mul(s).div_i64(j as i64 + 1);
            bits = (bits << 1) | letter;
        }
        out
    }

    /// Largest |coefficient| as a binary exponent bound (None for 0).
    pub fn log2_max(&self) -> Option<i64> {
        self.c.iter().filter(|x| !x.is_zero()).map(|x| x.log2_floor()).max()
    }
}
