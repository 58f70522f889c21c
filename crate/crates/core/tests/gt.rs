mod common;

use std::collections::BTreeMap;

use braid_gt::groups::FreeWord;
use braid_gt::gt::{compose, invert, rho_via_sl2, solve_gt, GTElement, WordGT};
use braid_gt::scalars::{rat, rat_int, Rational, Ring};
use common::{free_word, lie_series_on, small_rational};
use proptest::prelude::*;

fn unit() -> impl Strategy<Value = Rational> {
    (prop_oneof![-3i64..=-1, 1i64..=3], 1i64..=2).prop_map(|(n, d)| rat(n, d))
}

fn element(degree: usize) -> impl Strategy<Value = GTElement<Rational>> {
    (unit(), lie_series_on(["A", "B"], degree, 2)).prop_map(|(l, f)| GTElement::new(l, f).unwrap())
}

fn same(a: &GTElement<Rational>, b: &GTElement<Rational>) -> bool {
    a.lambda() == b.lambda() && a.log_f().sub(b.log_f()).is_zero()
}

fn solved(lambda: &Rational, degree: usize, p3: &Rational, p5: &Rational) -> GTElement<Rational> {
    let params = BTreeMap::from([(3, vec![p3.clone()]), (5, vec![p5.clone()])]);
    solve_gt(lambda, degree, &params).unwrap().0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn composition_is_associative(a in element(5), b in element(5), c in element(5)) {
        let l = compose(&compose(&a, &b, 0.0).unwrap(), &c, 0.0).unwrap();
        let r = compose(&a, &compose(&b, &c, 0.0).unwrap(), 0.0).unwrap();
        prop_assert!(same(&l, &r));
    }

    #[test]
    fn identity_is_neutral(a in element(5)) {
        let e = GTElement::identity(5, &rat_int(0));
        prop_assert!(same(&compose(&a, &e, 0.0).unwrap(), &a));
        prop_assert!(same(&compose(&e, &a, 0.0).unwrap(), &a));
    }

    #[test]
    fn inverse_is_two_sided(a in element(5)) {
        let h = invert(&a, 0.0).unwrap();
        let e = GTElement::identity(5, &rat_int(0));
        prop_assert!(same(&compose(&a, &h, 0.0).unwrap(), &e));
        prop_assert!(same(&compose(&h, &a, 0.0).unwrap(), &e));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn solutions_satisfy_the_relations(lambda in unit(), p3 in small_rational(), p5 in small_rational()) {
        let mut g = solved(&lambda, 5, &p3, &p5);
        prop_assert!(g.verify(0.0).unwrap().holds(0.0));
    }

    #[test]
    fn solutions_form_a_group(l1 in unit(), l2 in unit(), p in small_rational(), q in small_rational()) {
        let g1 = solved(&l1, 5, &p, &q);
        let g2 = solved(&l2, 5, &q, &p);
        let mut g = compose(&g1, &g2, 0.0).unwrap();
        prop_assert!(g.verify(0.0).unwrap().holds(0.0));
        let mut h = invert(&g1, 0.0).unwrap();
        prop_assert!(h.verify(0.0).unwrap().holds(0.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn rho_is_a_cocycle(f1 in free_word(2, 6), f2 in free_word(2, 6), l1 in prop_oneof![Just(1i64), Just(2), Just(-3)], l2 in prop_oneof![Just(1i64), Just(3), Just(-2)]) {
        let g1 = WordGT::new(l1, f1).unwrap();
        let g2 = WordGT::new(l2, f2).unwrap();
        let r = |g: &WordGT| rho_via_sl2(g, 5, 3);
        let (Ok(r1), Ok(r2), Ok(r12)) = (r(&g1), r(&g2), r(&g1.compose(&g2))) else { return Ok(()) };
        prop_assert_eq!(r12, r1.then(&r2));
    }
}

#[test]
fn rho_of_the_identity_vanishes() {
    let r = rho_via_sl2(&WordGT::new(1, FreeWord::identity(2)).unwrap(), 5, 3).unwrap();
    assert!(r.rho.is_zero());
}
