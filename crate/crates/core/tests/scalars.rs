use braid_gt::scalars::{
    q_power, rat, series_exp, series_log, series_rescale, LaurentPoly, Rational, ResidueScalar, Ring, TruncSeries,
};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn series(order: usize) -> impl Strategy<Value = TruncSeries<Rational>> {
    prop::collection::vec(rational(), order + 1).prop_map(|c| TruncSeries::new("h", c))
}

fn residue() -> impl Strategy<Value = ResidueScalar> {
    (0i64..125).prop_map(|v| ResidueScalar::new(5, 3, v).unwrap())
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((rational(), -3i64..=3), 0..4).prop_map(|ts| {
        ts.into_iter().fold(LaurentPoly::zero(), |acc, (c, e)| acc.plus(&LaurentPoly::monomial(c, e)))
    })
}

fn same<R: Ring>(a: &R, b: &R) -> bool {
    a.minus(b).is_zero()
}

fn ring_axioms<R: Ring>(a: &R, b: &R, c: &R) {
    assert!(same(&a.plus(b).plus(c), &a.plus(&b.plus(c))));
    assert!(same(&a.times(b).times(c), &a.times(&b.times(c))));
    assert!(same(&a.times(&b.plus(c)), &a.times(b).plus(&a.times(c))));
    assert!(same(&a.plus(b).times(c), &a.times(c).plus(&b.times(c))));
    assert!(same(&a.times(b), &b.times(a)));
    assert!(a.plus(&a.negate()).is_zero());
    assert!(same(&a.times(&a.one_like()), a));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_ring(a in rational(), b in rational(), c in rational()) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn residue_ring(a in residue(), b in residue(), c in residue()) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn series_ring(a in series(6), b in series(6), c in series(6)) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn laurent_ring(a in laurent(), b in laurent(), c in laurent()) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn residue_matches_reduced_rationals(a in rational(), b in rational()) {
        let red = |r: &Rational| ResidueScalar::from_rational(5, 3, r);
        let (Ok(ra), Ok(rb)) = (red(&a), red(&b)) else { return Ok(()) };
        prop_assert!(same(&red(&a.plus(&b)).unwrap(), &ra.plus(&rb)));
        prop_assert!(same(&red(&a.times(&b)).unwrap(), &ra.times(&rb)));
        if let (Some(inv), Some(rinv)) = (b.inverse(), rb.inverse()) {
            prop_assert!(same(&red(&inv).unwrap(), &rinv));
        }
    }

    #[test]
    fn exp_log_inverse(order in 1usize..=16, seed in prop::collection::vec(rational(), 16)) {
        let mut c = vec![rat(0, 1)];
        c.extend(seed.into_iter().take(order));
        let s = TruncSeries::new("h", c);
        let e = series_exp(&s).unwrap();
        prop_assert!(same(&series_log(&e).unwrap(), &s));
        let one_plus = s.plus(&s.one_like());
        prop_assert!(same(&series_exp(&series_log(&one_plus).unwrap()).unwrap(), &one_plus));
    }

    #[test]
    fn rescale_is_a_homomorphism_and_action(a in series(6), b in series(6), x in rational(), y in rational()) {
        let r = |s: &TruncSeries<Rational>, t: &Rational| series_rescale(s, t);
        prop_assert!(same(&r(&a.times(&b), &x), &r(&a, &x).times(&r(&b, &x))));
        prop_assert!(same(&r(&a.plus(&b), &x), &r(&a, &x).plus(&r(&b, &x))));
        prop_assert!(same(&r(&r(&a, &x), &y), &r(&a, &x.times(&y))));
    }
}

#[test]
fn q_power_is_multiplicative() {
    for (a, b) in [(1, 2), (-3, 5), (0, 4)] {
        assert!(same(&q_power(a, 8).times(&q_power(b, 8)), &q_power(a + b, 8)));
    }
}
