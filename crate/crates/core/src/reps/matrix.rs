use crate::freealg::LieTarget;
use crate::scalars::{rat, Scalar};

use super::RepError;

/// Dense matrix over a coefficient ring.
#[derive(Clone, Debug)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        assert!(r > 0, "empty matrix");
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn filled(rows: usize, cols: usize, value: &S) -> Self {
        Matrix { rows, cols, data: vec![value.clone(); rows * cols] }
    }

    pub fn zeros(rows: usize, cols: usize, sample: &S) -> Self {
        Self::filled(rows, cols, &sample.zero_like())
    }

    pub fn identity(n: usize, sample: &S) -> Self {
        let mut m = Self::zeros(n, n, sample);
        for i in 0..n {
            m.set(i, i, sample.one_like());
        }
        m
    }

    pub fn diagonal(entries: &[S]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len(), &entries[0]);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dim(&self) -> usize {
        assert_eq!(self.rows, self.cols, "not square");
        self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn sample(&self) -> &S {
        &self.data[0]
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.minus(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.negate())
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|x| x.times(s))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let z = self.sample().zero_like();
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = z.clone();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc = acc.plus(&a.times(b));
                }
                data.push(acc);
            }
        }
        Matrix { rows: self.rows, cols: rhs.cols, data }
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn pow_u(&self, e: u64) -> Self {
        let mut acc = Self::identity(self.dim(), self.sample());
        let mut base = self.clone();
        let mut e = e;
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

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Largest entry norm.
    pub fn max_norm(&self) -> f64 {
        self.data.iter().map(|x| x.norm()).fold(0.0, f64::max)
    }

    pub fn distance(&self, rhs: &Self) -> f64 {
        self.sub(rhs).max_norm()
    }

    /// Largest off-diagonal entry norm.
    pub fn off_diagonal_norm(&self) -> f64 {
        let mut m = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j {
                    m = m.max(self.get(i, j).norm());
                }
            }
        }
        m
    }

    /// Gauss–Jordan inverse; pivots are chosen by largest pivot weight.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.dim();
        let mut a = self.clone();
        let mut inv = Self::identity(n, self.sample());
        for col in 0..n {
            let (best, w) = (col..n)
                .map(|r| (r, a.get(r, col).pivot_weight()))
                .fold((col, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if w == 0.0 {
                return None;
            }
            a.swap_rows(col, best);
            inv.swap_rows(col, best);
            let p = a.get(col, col).inverse()?;
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r != col && !a.get(r, col).is_zero() {
                    let f = a.get(r, col).clone();
                    a.add_row_multiple(r, col, &f.negate());
                    inv.add_row_multiple(r, col, &f.negate());
                }
            }
        }
        Some(inv)
    }

    /// Determinant by fraction-free expansion along elimination (needs inverses of pivots).
    pub fn det(&self) -> Option<S> {
        let n = self.dim();
        let mut a = self.clone();
        let mut det = self.sample().one_like();
        for col in 0..n {
            let (best, w) = (col..n)
                .map(|r| (r, a.get(r, col).pivot_weight()))
                .fold((col, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if w == 0.0 {
                if (col..n).all(|r| a.get(r, col).is_zero()) {
                    return Some(self.sample().zero_like());
                }
                return None;
            }
            if best != col {
                a.swap_rows(col, best);
                det = det.negate();
            }
            let pivot = a.get(col, col).clone();
            det = det.times(&pivot);
            let p = pivot.inverse()?;
            for r in (col + 1)..n {
                if !a.get(r, col).is_zero() {
                    let f = a.get(r, col).times(&p);
                    a.add_row_multiple(r, col, &f.negate());
                }
            }
        }
        Some(det)
    }

    pub fn trace(&self) -> S {
        (0..self.dim()).fold(self.sample().zero_like(), |acc, i| acc.plus(self.get(i, i)))
    }

    pub(crate) fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn scale_row(&mut self, i: usize, s: &S) {
        for c in 0..self.cols {
            let v = self.get(i, c).times(s);
            self.set(i, c, v);
        }
    }

    /// row_i += f · row_j
    fn add_row_multiple(&mut self, i: usize, j: usize, f: &S) {
        for c in 0..self.cols {
            let b = self.get(j, c);
            if b.is_zero() {
                continue;
            }
            let v = self.get(i, c).plus(&f.times(b));
            self.set(i, c, v);
        }
    }

    /// log(1 + X) for X whose powers vanish exactly; fails if they do not within `cap` steps.
    pub fn log_one_plus_nilpotent(x: &Self, cap: usize) -> Result<Self, RepError> {
        let mut out = Self::zeros(x.rows, x.cols, x.sample());
        let mut power = x.clone();
        for k in 1..=cap {
            if power.is_zero() {
                return Ok(out);
            }
            let c = x.sample().rational(&rat(if k % 2 == 1 { 1 } else { -1 }, k as i64));
            out = out.add(&power.scale(&c));
            power = power.mul(x);
        }
        if power.is_zero() {
            Ok(out)
        } else {
            Err(RepError::NotUnipotent)
        }
    }

    /// exp(X) for nilpotent X.
    pub fn exp_nilpotent(x: &Self, cap: usize) -> Result<Self, RepError> {
        let mut out = Self::identity(x.dim(), x.sample());
        let mut term = out.clone();
        for k in 1..=cap {
            term = term.mul(x);
            if term.is_zero() {
                return Ok(out);
            }
            term = term.scale(&x.sample().rational(&rat(1, k as i64)));
            out = out.add(&term);
        }
        Err(RepError::NotUnipotent)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| {
                    serde_json::Value::Array(
                        (0..self.cols)
                            .map(|j| match serde_json::from_str(&self.get(i, j).to_string_repr()) {
                                Ok(v @ serde_json::Value::Array(_)) => v,
                                _ => serde_json::Value::String(self.get(i, j).to_string_repr()),
                            })
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

impl<S: Scalar> LieTarget for Matrix<S> {
    fn lie_bracket(&self, rhs: &Self) -> Self {
        self.commutator(rhs)
    }
    fn lie_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn lie_zero(&self) -> Self {
        Self::zeros(self.rows, self.cols, self.sample())
    }
}

/// Solution set of a linear system: a particular solution (if consistent)
/// and a basis of the kernel.
#[derive(Clone, Debug)]
pub struct LinearSolution<S> {
    pub particular: Option<Vec<S>>,
    pub kernel: Vec<Vec<S>>,
    /// Largest residual among rows eliminated to zero (inconsistency measure).
    pub inconsistency: f64,
}

/// Solves A x = b by Gaussian elimination over a field; entries of norm
/// ≤ `tol` count as zero (use 0 for exact rings).
pub fn solve_linear<S: Scalar>(a: &Matrix<S>, b: &[S], tol: f64) -> LinearSolution<S> {
    let (rows, cols) = (a.rows(), a.cols());
    assert_eq!(b.len(), rows);
    let z = a.sample().zero_like();
    // Augmented matrix.
    let mut m = Matrix::zeros(rows, cols + 1, a.sample());
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, a.get(i, j).clone());
        }
        m.set(i, cols, b[i].clone());
    }
    let negligible = |x: &S| x.is_zero() || (tol > 0.0 && x.norm() <= tol);
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let (best, w) = (r..rows)
            .map(|i| (i, if negligible(m.get(i, c)) { 0.0 } else { m.get(i, c).pivot_weight() }))
            .fold((r, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if w == 0.0 {
            continue;
        }
        m.swap_rows(r, best);
        let p = m.get(r, c).inverse().expect("pivot invertible");
        m.scale_row(r, &p);
        for i in 0..rows {
            if i != r && !m.get(i, c).is_zero() {
                let f = m.get(i, c).negate();
                m.add_row_multiple(i, r, &f);
                m.set(i, c, z.clone());
            }
        }
        pivots.push(c);
        r += 1;
    }
    let inconsistency = (r..rows).map(|i| m.get(i, cols).norm()).fold(0.0, f64::max);
    let consistent = (r..rows).all(|i| negligible(m.get(i, cols)));
    let particular = consistent.then(|| {
        let mut x = vec![z.clone(); cols];
        for (k, &c) in pivots.iter().enumerate() {
            x[c] = m.get(k, cols).clone();
        }
        x
    });
    let mut kernel = Vec::new();
    for f in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![z.clone(); cols];
        v[f] = z.one_like();
        for (k, &c) in pivots.iter().enumerate() {
            v[c] = m.get(k, f).negate();
        }
        kernel.push(v);
    }
    LinearSolution { particular, kernel, inconsistency }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat_int, Rational};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|x| rat_int(*x)).collect()).collect())
    }

    #[test]
    fn inverse_and_det() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).distance(&Matrix::identity(3, &rat_int(0))) == 0.0);
        assert_eq!(a.det().unwrap(), rat_int(18));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det().unwrap(), rat_int(0));
    }

    #[test]
    fn linear_solver() {
        let a = m(&[&[1, 1, 0], &[0, 1, 1]]);
        let sol = solve_linear(&a, &[rat_int(2), rat_int(3)], 0.0);
        let x = sol.particular.unwrap();
        assert_eq!(x[0].clone() + x[1].clone(), rat_int(2));
        assert_eq!(sol.kernel.len(), 1);
        let bad = solve_linear(&m(&[&[1, 1], &[2, 2]]), &[rat_int(1), rat_int(3)], 0.0);
        assert!(bad.particular.is_none());
    }

    #[test]
    fn nilpotent_log_exp() {
        let x = m(&[&[0, 1, 2], &[0, 0, 3], &[0, 0, 0]]);
        let l = Matrix::log_one_plus_nilpotent(&x, 10).unwrap();
        let back = Matrix::exp_nilpotent(&l, 10).unwrap();
        assert_eq!(back.distance(&x.add(&Matrix::identity(3, &rat_int(0)))), 0.0);
        assert!(Matrix::log_one_plus_nilpotent(&m(&[&[1, 0], &[0, 0]]), 10).is_err());
    }
}
