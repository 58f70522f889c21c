use std::collections::BTreeMap;

use crate::freealg::{bch_series, magnus, LieSeries, LieTarget, NCSeries, Word};
use crate::groups::{artin_images, full_twist, xi, BraidWord};
use crate::scalars::Scalar;

/// Derivation of a truncated free algebra, stored as the images of the
/// generators.
#[derive(Clone, Debug)]
pub struct Derivation<C: Scalar> {
    images: Vec<NCSeries<C>>,
}

impl<C: Scalar> Derivation<C> {
    pub fn zero(sample: &NCSeries<C>) -> Self {
        Derivation { images: vec![sample.zero_like(); sample.rank()] }
    }

    pub fn from_images(images: Vec<NCSeries<C>>) -> Self {
        Derivation { images }
    }

    pub fn images(&self) -> &[NCSeries<C>] {
        &self.images
    }

    /// D(w₁⋯w_k) = Σ w₁⋯D(w_i)⋯w_k.
    pub fn apply(&self, s: &NCSeries<C>) -> NCSeries<C> {
        let degree = s.degree();
        let mut acc: BTreeMap<Word, C> = BTreeMap::new();
        for (w, c) in s.terms() {
            for (pos, &l) in w.iter().enumerate() {
                for (v, d) in self.images[l as usize].terms() {
                    if w.len() - 1 + v.len() > degree {
                        continue;
                    }
                    let mut word = Vec::with_capacity(w.len() - 1 + v.len());
                    word.extend_from_slice(&w[..pos]);
                    word.extend_from_slice(v);
                    word.extend_from_slice(&w[pos + 1..]);
                    let p = c.times(d);
                    match acc.get_mut(&word) {
                        Some(x) => *x = x.plus(&p),
                        None => {
                            acc.insert(word, p);
                        }
                    }
                }
            }
        }
        let mut out = s.zero_like();
        for (w, c) in acc {
            out.add_term(w, c);
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Derivation { images: self.images.iter().zip(&rhs.images).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        Derivation { images: self.images.iter().map(|a| a.scale(c)).collect() }
    }

    /// [D₁, D₂] = D₁D₂ − D₂D₁.
    pub fn bracket(&self, rhs: &Self) -> Self {
        Derivation {
            images: self.images.iter().zip(&rhs.images).map(|(a, b)| self.apply(b).sub(&rhs.apply(a))).collect(),
        }
    }

    /// log Θ for an automorphism Θ ≡ id modulo higher degree, given by
    /// Θ(u_i); computed as Σ (−1)^{k+1}(Θ − 1)^k/k.
    pub fn log_of_automorphism(theta: &[NCSeries<C>]) -> Self {
        let gens = theta[0].generators();
        let images = gens
            .iter()
            .map(|u| {
                let mut out = u.zero_like();
                let mut term = u.clone();
                for k in 1..=u.degree() {
                    term = term.substitute_letters(theta).sub(&term);
                    if term.is_empty() {
                        break;
                    }
                    let sign = if k % 2 == 1 { 1 } else { -1 };
                    out = out.add(&term.scale_rational(sign, k as i64));
                }
                out
            })
            .collect();
        Derivation { images }
    }

    pub fn max_norm(&self) -> f64 {
        self.images.iter().map(|s| s.max_norm()).fold(0.0, f64::max)
    }
}

impl<C: Scalar> LieTarget for Derivation<C> {
    fn lie_bracket(&self, rhs: &Self) -> Self {
        self.bracket(rhs)
    }
    fn lie_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn lie_zero(&self) -> Self {
        Derivation { images: self.images.iter().map(|s| s.zero_like()).collect() }
    }
}

/// log of the Artin automorphism of F_n for a pure braid, as a derivation
/// of the free Lie algebra on x_i = exp(u_i).
pub fn artin_derivation<C: Scalar>(b: &BraidWord, degree: usize, sample: &C) -> Derivation<C> {
    let names: Vec<String> = (1..=b.strands()).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let z = NCSeries::zero(&refs, degree, sample);
    let theta: Vec<NCSeries<C>> =
        artin_images(b).iter().map(|w| magnus(w, &z).log().expect("group-like")).collect();
    Derivation::log_of_automorphism(&theta)
}

/// Element of the Lie algebra 𝔣₃ ⋊ (𝔣₂ ⊕ k·c) modelling P₄: the fiber
/// 𝔣₃ on u₁, u₂, u₃ (the ξ_{i4}), the base 𝔣₂ on a, b (ξ₁₃, ξ₂₃) and the
/// central c (the full twist of the first three strands). The derivation
/// by which the base part acts on the fiber travels with the element.
#[derive(Clone, Debug)]
pub struct P4Lie<C: Scalar> {
    pub fiber: NCSeries<C>,
    pub base: NCSeries<C>,
    pub center: C,
    pub action: Derivation<C>,
}

impl<C: Scalar> P4Lie<C> {
    pub fn sub(&self, rhs: &Self) -> Self {
        self.lie_add(&rhs.scale(&rhs.center.from_i64_like(-1)))
    }

    pub fn scale(&self, c: &C) -> Self {
        P4Lie {
            fiber: self.fiber.scale(c),
            base: self.base.scale(c),
            center: self.center.times(c),
            action: self.action.scale(c),
        }
    }

    pub fn max_norm(&self) -> f64 {
        self.fiber.max_norm().max(self.base.max_norm()).max(self.center.norm())
    }

    pub fn homogeneous(&self, k: usize) -> (NCSeries<C>, NCSeries<C>, C) {
        let c = if k == 1 { self.center.clone() } else { self.center.zero_like() };
        (self.fiber.homogeneous(k), self.base.homogeneous(k), c)
    }
}

impl<C: Scalar> LieTarget for P4Lie<C> {
    fn lie_bracket(&self, rhs: &Self) -> Self {
        let fiber = self.fiber.commutator(&rhs.fiber).add(&self.action.apply(&rhs.fiber)).sub(&rhs.action.apply(&self.fiber));
        P4Lie {
            fiber,
            base: self.base.commutator(&rhs.base),
            center: self.center.zero_like(),
            action: self.action.bracket(&rhs.action),
        }
    }
    fn lie_add(&self, rhs: &Self) -> Self {
        P4Lie {
            fiber: self.fiber.add(&rhs.fiber),
            base: self.base.add(&rhs.base),
            center: self.center.plus(&rhs.center),
            action: self.action.add(&rhs.action),
        }
    }
    fn lie_zero(&self) -> Self {
        P4Lie {
            fiber: self.fiber.zero_like(),
            base: self.base.zero_like(),
            center: self.center.zero_like(),
            action: self.action.lie_zero(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum ModelKind {
    /// Malcev Lie algebra of P₄, base action from the Artin action.
    Malcev,
    /// The graded Drinfeld–Kohno algebra 𝔱₄ with ξ_{ij} ↦ t_{ij}.
    Graded,
}

/// Truncated Lie model of P₄ in which relation (III) is evaluated.
#[derive(Clone, Debug)]
pub struct P4Model<C: Scalar> {
    kind: ModelKind,
    degree: usize,
    fiber0: NCSeries<C>,
    base0: NCSeries<C>,
    da: Derivation<C>,
    db: Derivation<C>,
    dc: Derivation<C>,
    bch: LieSeries<C>,
}

fn mirror(b: &BraidWord) -> BraidWord {
    let l: Vec<(usize, i8)> = b.letters().iter().map(|&(i, e)| (i, -e)).collect();
    BraidWord::from_letters(b.strands(), &l).expect("same strands")
}

impl<C: Scalar> P4Model<C> {
    /// The Malcev model. For β ∈ P₃, β ξ_{i4} β⁻¹ is the image of x_i under
    /// the Artin automorphism of the mirror braid (σ_i ↦ σ_i⁻¹), read with
    /// x_j ↦ ξ_{j4}; its logarithm gives the action on the fiber.
    pub fn malcev(degree: usize, sample: &C) -> Self {
        let fiber0 = NCSeries::zero(&["u1", "u2", "u3"], degree, sample);
        let base0 = NCSeries::zero(&["a", "b"], degree, sample);
        let act = |beta: BraidWord| {
            let theta: Vec<NCSeries<C>> =
                artin_images(&mirror(&beta)).iter().map(|w| magnus(w, &fiber0).log().expect("group-like")).collect();
            Derivation::log_of_automorphism(&theta)
        };
        let da = act(xi(1, 3, 3).expect("valid"));
        let db = act(xi(2, 3, 3).expect("valid"));
        let dc = act(full_twist(3, 3));
        let bch = bch_series(degree).convert(sample, |r| sample.rational(r));
        P4Model { kind: ModelKind::Malcev, degree, fiber0, base0, da, db, dc, bch }
    }

    /// The graded model: [t_{ij}, t_{i4}] = [t_{i4}, t_{j4}] for i, j ≤ 3,
    /// and c = t₁₂ + t₁₃ + t₂₃ central in the base.
    pub fn graded(degree: usize, sample: &C) -> Self {
        let fiber0 = NCSeries::zero(&["u1", "u2", "u3"], degree, sample);
        let base0 = NCSeries::zero(&["a", "b"], degree, sample);
        let u = fiber0.generators();
        let t = |i: usize, j: usize| {
            let mut images = vec![fiber0.zero_like(); 3];
            images[i] = u[i].commutator(&u[j]);
            images[j] = u[j].commutator(&u[i]);
            Derivation::from_images(images)
        };
        let da = t(0, 2);
        let db = t(1, 2);
        let dc = t(0, 1).add(&da).add(&db);
        let bch = bch_series(degree).convert(sample, |r| sample.rational(r));
        P4Model { kind: ModelKind::Graded, degree, fiber0, base0, da, db, dc, bch }
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn zero(&self) -> P4Lie<C> {
        P4Lie {
            fiber: self.fiber0.zero_like(),
            base: self.base0.zero_like(),
            center: self.fiber0.sample().zero_like(),
            action: Derivation::zero(&self.fiber0),
        }
    }

    fn fiber_gen(&self, i: usize) -> P4Lie<C> {
        P4Lie { fiber: self.fiber0.generator(i), ..self.zero() }
    }

    pub fn a(&self) -> P4Lie<C> {
        P4Lie { base: self.base0.generator(0), action: self.da.clone(), ..self.zero() }
    }

    pub fn b(&self) -> P4Lie<C> {
        P4Lie { base: self.base0.generator(1), action: self.db.clone(), ..self.zero() }
    }

    pub fn c(&self) -> P4Lie<C> {
        P4Lie { center: self.fiber0.sample().one_like(), action: self.dc.clone(), ..self.zero() }
    }

    /// log ξ_{ij} (Malcev) or t_{ij} (graded), 1 ≤ i < j ≤ 4.
    pub fn xi(&self, i: usize, j: usize) -> P4Lie<C> {
        match (i, j) {
            (_, 4) => self.fiber_gen(i - 1),
            (1, 3) => self.a(),
            (2, 3) => self.b(),
            (1, 2) => {
                let ab = match self.kind {
                    ModelKind::Malcev => self.product(&self.a(), &self.b()),
                    ModelKind::Graded => self.a().lie_add(&self.b()),
                };
                self.c().sub(&ab)
            }
            _ => panic!("ξ_{{{i},{j}}} is not a generator of P₄"),
        }
    }

    /// log(e^x e^y).
    pub fn product(&self, x: &P4Lie<C>, y: &P4Lie<C>) -> P4Lie<C> {
        self.bch.eval(&[x.clone(), y.clone()], |t, c| t.scale(c))
    }

    /// log f(e^x, e^y) = (log f)(x, y).
    pub fn eval_f(&self, log_f: &LieSeries<C>, x: &P4Lie<C>, y: &P4Lie<C>) -> P4Lie<C> {
        log_f.eval(&[x.clone(), y.clone()], |t, c| t.scale(c))
    }
}

/// (III): residual of
/// f(ξ₁₂, ξ₂₃ξ₂₄) f(ξ₁₃ξ₂₃, ξ₃₄) = f(ξ₂₃, ξ₃₄) f(ξ₁₂ξ₁₃, ξ₂₄ξ₃₄) f(ξ₁₂, ξ₂₃)
/// in the model.
pub fn check_iii<C: Scalar>(log_f: &LieSeries<C>, model: &P4Model<C>) -> f64 {
    let log_f = log_f.truncate(model.degree());
    let x = |i, j| model.xi(i, j);
    let m = |p: &P4Lie<C>, q: &P4Lie<C>| model.product(p, q);
    let f = |p: &P4Lie<C>, q: &P4Lie<C>| model.eval_f(&log_f, p, q);
    let (x12, x13, x23, x24, x34) = (x(1, 2), x(1, 3), x(2, 3), x(2, 4), x(3, 4));
    let lhs = m(&f(&x12, &m(&x23, &x24)), &f(&m(&x13, &x23), &x34));
    let rhs = m(&m(&f(&x23, &x34), &f(&m(&x12, &x13), &m(&x24, &x34))), &f(&x12, &x23));
    lhs.sub(&rhs).max_norm()
}

/// The associator pentagon in 𝔱₄:
/// Φ(t₁₂, t₂₃+t₂₄) Φ(t₁₃+t₂₃, t₃₄) = Φ(t₂₃, t₃₄) Φ(t₁₂+t₁₃, t₂₄+t₃₄) Φ(t₁₂, t₂₃).
pub fn pentagon_t4<C: Scalar>(log_phi: &LieSeries<C>, model: &P4Model<C>) -> f64 {
    assert_eq!(model.kind(), ModelKind::Graded, "the pentagon lives in the graded model");
    let log_phi = log_phi.truncate(model.degree());
    let t = |i, j| model.xi(i, j);
    let s = |p: &P4Lie<C>, q: &P4Lie<C>| p.lie_add(q);
    let m = |p: &P4Lie<C>, q: &P4Lie<C>| model.product(p, q);
    let f = |p: &P4Lie<C>, q: &P4Lie<C>| model.eval_f(&log_phi, p, q);
    let (t12, t13, t23, t24, t34) = (t(1, 2), t(1, 3), t(2, 3), t(2, 4), t(3, 4));
    let lhs = m(&f(&t12, &s(&t23, &t24)), &f(&s(&t13, &t23), &t34));
    let rhs = m(&m(&f(&t23, &t34), &f(&s(&t12, &t13), &s(&t24, &t34))), &f(&t12, &t23));
    lhs.sub(&rhs).max_norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::braid_eq;
    use crate::scalars::{rat, rat_int, Rational, Ring};

    fn q() -> Rational {
        rat_int(0)
    }

    #[test]
    fn disjoint_generators_commute() {
        let m = P4Model::malcev(5, &q());
        assert_eq!(m.xi(1, 2).lie_bracket(&m.xi(3, 4)).max_norm(), 0.0);
        assert!(m.xi(1, 3).lie_bracket(&m.xi(2, 4)).max_norm() > 0.0);
        assert_eq!(m.dc.bracket(&m.da).max_norm(), 0.0);
        assert_eq!(m.dc.bracket(&m.db).max_norm(), 0.0);
    }

    #[test]
    fn full_twist_is_central() {
        let x = |i, j| xi(i, j, 4).unwrap();
        let word = x(1, 2).mul(&x(1, 3)).mul(&x(2, 3)).mul(&x(1, 4)).mul(&x(2, 4)).mul(&x(3, 4));
        assert!(braid_eq(&word, &full_twist(4, 4)));
        for kind in [ModelKind::Malcev, ModelKind::Graded] {
            let m = if kind == ModelKind::Malcev { P4Model::malcev(5, &q()) } else { P4Model::graded(5, &q()) };
            let gens = [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)].map(|(i, j)| m.xi(i, j));
            let d = gens.iter().skip(1).fold(gens[0].clone(), |acc, g| {
                if kind == ModelKind::Malcev { m.product(&acc, g) } else { acc.lie_add(g) }
            });
            for g in &gens {
                assert_eq!(d.lie_bracket(g).max_norm(), 0.0, "{kind:?}");
            }
        }
    }

    #[test]
    fn degree_one_rank() {
        let m = P4Model::malcev(3, &q());
        let mut rows = Vec::new();
        for (i, j) in [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)] {
            let (f, b, c) = m.xi(i, j).homogeneous(1);
            let mut v = vec![c];
            v.extend((0..2).map(|k| b.coeff(&[k])));
            v.extend((0..3).map(|k| f.coeff(&[k])));
            rows.push(crate::reps::Matrix::from_rows(vec![v]));
        }
        let mat = crate::reps::Matrix::from_rows(rows.iter().map(|r| r.entries().to_vec()).collect());
        assert!(mat.det().map(|d| !d.is_zero()).unwrap_or(false));
    }

    #[test]
    fn fiber_action_matches_artin_action_on_f4() {
        let n = 4;
        let m = P4Model::malcev(n, &q());
        let phi = |i: usize, j: usize| artin_derivation(&xi(i, j, 4).unwrap(), n, &q());
        let fib: Vec<Derivation<Rational>> = (1..=3).map(|i| phi(i, 4)).collect();
        for (g, dg) in [((1, 3), &m.da), ((2, 3), &m.db)] {
            let pg = phi(g.0, g.1);
            for (i, fi) in fib.iter().enumerate() {
                let image = dg.apply(&m.fiber0.generator(i));
                let lie = LieSeries::from_nc(&image, 0.0).unwrap();
                let lhs = lie.eval(&fib, |t, c| t.scale(c));
                assert_eq!(lhs.add(&pg.bracket(fi).scale(&rat_int(-1))).max_norm(), 0.0, "{g:?} on u{}", i + 1);
            }
        }
    }

    #[test]
    fn graded_infinitesimal_braid_relations() {
        let m = P4Model::graded(4, &q());
        let t = |i, j| m.xi(i, j);
        for (x, y, z) in [((1, 2), (1, 3), (2, 3)), ((1, 2), (1, 4), (2, 4)), ((1, 3), (1, 4), (3, 4)), ((2, 3), (2, 4), (3, 4))] {
            let s = t(y.0, y.1).lie_add(&t(z.0, z.1));
            assert_eq!(t(x.0, x.1).lie_bracket(&s).max_norm(), 0.0);
        }
        assert_eq!(t(1, 3).lie_bracket(&t(2, 4)).max_norm(), 0.0);
        assert_eq!(t(1, 4).lie_bracket(&t(2, 3)).max_norm(), 0.0);
    }

    #[test]
    fn relation_iii_examples() {
        let m = P4Model::malcev(6, &q());
        let zero = LieSeries::zero(&["A", "B"], 6, &q());
        assert_eq!(check_iii(&zero, &m), 0.0);
        let mut l = zero.clone();
        l.set(vec![0, 1], rat(1, 5));
        let first = (2..=4).find(|&d| check_iii(&l.truncate(d), &P4Model::malcev(d, &q())) > 0.0);
        assert_eq!(first, Some(FIRST_FAILURE_DEGREE));
    }

    const FIRST_FAILURE_DEGREE: usize = 4;
}
