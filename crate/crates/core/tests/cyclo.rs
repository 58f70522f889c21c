use braid_gt::cyclo::{epsilon, kummer_compose, real_embeddings, CyclotomicInt, KummerLevelElement};
use proptest::prelude::*;

fn level() -> impl Strategy<Value = (u64, u32)> {
    prop_oneof![Just((3u64, 1u32)), Just((3, 2)), Just((5, 1)), Just((5, 2)), Just((7, 1))]
}

fn element(ell: u64, n: u32) -> impl Strategy<Value = CyclotomicInt> {
    let q = ell.pow(n) as i64;
    prop::collection::vec((-4i64..=4, 0..q), 1..5).prop_map(move |terms| {
        terms.into_iter().fold(CyclotomicInt::zero(ell, n).unwrap(), |acc, (c, k)| {
            acc.add(&CyclotomicInt::zeta_pow(ell, n, k).unwrap().mul(&CyclotomicInt::integer(ell, n, c).unwrap()))
        })
    })
}

fn unit_mod(q: u64) -> impl Strategy<Value = i64> {
    (1..q as i64).prop_filter("a unit", move |a| num_integer::Integer::gcd(a, &(q as i64)) == 1)
}

fn kummer(n: u64) -> impl Strategy<Value = KummerLevelElement> {
    (unit_mod(n), 0..n as i64).prop_map(move |(a, b)| KummerLevelElement::new(n, a, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn galois_action_is_a_ring_homomorphism(
        (x, y, a) in level().prop_flat_map(|(l, n)| (element(l, n), element(l, n), unit_mod(l.pow(n))))
    ) {
        prop_assert_eq!(x.add(&y).galois(a), x.galois(a).add(&y.galois(a)));
        prop_assert_eq!(x.mul(&y).galois(a), x.galois(a).mul(&y.galois(a)));
        prop_assert_eq!(x.galois(a).galois(-1), x.galois(-a));
    }

    #[test]
    fn conjugation_fixes_exactly_the_real_elements((x, a) in level().prop_flat_map(|(l, n)| (element(l, n), unit_mod(l.pow(n))))) {
        let r = x.add(&x.conj());
        prop_assert!(r.is_real());
        prop_assert!(r.galois(a).is_real());
        prop_assert_eq!(x.mul(&x.conj()).conj(), x.mul(&x.conj()));
    }

    #[test]
    fn kummer_composition_is_associative(s in kummer(25), t in kummer(25), u in kummer(25)) {
        let l = kummer_compose(&kummer_compose(&s, &t).unwrap(), &u).unwrap();
        let r = kummer_compose(&s, &kummer_compose(&t, &u).unwrap()).unwrap();
        prop_assert_eq!(l, r);
        let e = KummerLevelElement::identity(25).unwrap();
        prop_assert_eq!(kummer_compose(&s, &e).unwrap(), s);
        prop_assert_eq!(kummer_compose(&e, &s).unwrap(), s);
    }

    #[test]
    fn kummer_cyclotomic_part_is_a_homomorphism(s in kummer(27), t in kummer(27), k in 0u64..27, j in 0u64..5) {
        let st = kummer_compose(&s, &t).unwrap();
        prop_assert_eq!(st.a(), s.a() * t.a() % 27);
        let (k1, j1) = t.apply(k, j);
        prop_assert_eq!(st.apply(k, j), s.apply(k1, j1));
    }
}

#[test]
fn epsilons_are_real_and_galois_stable() {
    for (ell, n) in [(3, 1), (5, 1), (5, 2), (7, 1)] {
        let e = epsilon(ell, n, 3).unwrap();
        assert!(e.is_real());
        for a in real_embeddings(ell, n) {
            assert!(e.galois(a).is_real());
        }
    }
}
