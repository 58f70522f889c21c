mod common;

use braid_gt::freealg::{bch, is_group_like, lyndon_words, magnus, substitute, witt_dimension, NCSeries};
use braid_gt::scalars::{rat_int, Rational};
use common::{free_word, lie_series};
use proptest::prelude::*;

fn algebra(degree: usize) -> NCSeries<Rational> {
    NCSeries::zero(&["x", "y"], degree, &rat_int(0))
}

#[test]
fn lyndon_counts() {
    let expected = [2, 1, 2, 3, 6, 9, 18, 30];
    let words = lyndon_words(2, 8);
    for (k, &e) in expected.iter().enumerate() {
        let len = k + 1;
        assert_eq!(words.iter().filter(|w| w.len() == len).count(), e, "length {len}");
        assert_eq!(witt_dimension(2, len as u64), e as u64);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn magnus_is_a_homomorphism(degree in 1usize..=8, u in free_word(2, 6), v in free_word(2, 6)) {
        let a = algebra(degree);
        let lhs = magnus(&u.mul(&v), &a);
        let rhs = magnus(&u, &a).mul(&magnus(&v, &a));
        prop_assert_eq!(lhs.distance(&rhs), 0.0);
        prop_assert_eq!(magnus(&u.inverse(), &a).distance(&magnus(&u, &a).inverse().unwrap()), 0.0);
    }

    #[test]
    fn magnus_images_are_group_like(u in free_word(2, 8)) {
        prop_assert!(is_group_like(&magnus(&u, &algebra(5)), 0.0));
    }

    #[test]
    fn substitution_matches_words(w in free_word(2, 5), g in free_word(2, 3), h in free_word(2, 3)) {
        let a = algebra(5);
        let direct = magnus(&w.substitute(&[g.clone(), h.clone()]), &a);
        let via = substitute(&magnus(&w, &a), &[magnus(&g, &a), magnus(&h, &a)], 0.0).unwrap();
        prop_assert_eq!(direct.distance(&via), 0.0);
    }

    #[test]
    fn substitution_composes(w in free_word(2, 4), g in free_word(2, 3), h in free_word(2, 3), k in free_word(2, 3)) {
        let a = algebra(4);
        let m = |u: &braid_gt::groups::FreeWord| magnus(u, &a);
        let inner = [m(&h), m(&k)];
        let step = substitute(&substitute(&m(&w), &[m(&g), m(&h)], 0.0).unwrap(), &inner, 0.0).unwrap();
        let images = [substitute(&m(&g), &inner, 0.0).unwrap(), substitute(&m(&h), &inner, 0.0).unwrap()];
        let once = substitute(&m(&w), &images, 0.0).unwrap();
        prop_assert_eq!(step.distance(&once), 0.0);
    }

    #[test]
    fn group_like_closed_under_products(a in lie_series(5, 1), b in lie_series(5, 1)) {
        let p = a.exp().mul(&b.exp());
        prop_assert!(is_group_like(&p, 0.0));
        prop_assert!(is_group_like(&p.inverse().unwrap(), 0.0));
    }

    #[test]
    fn bch_is_associative(a in lie_series(4, 1), b in lie_series(4, 1), c in lie_series(4, 1)) {
        let l = bch(&bch(&a, &b), &c);
        let r = bch(&a, &bch(&b, &c));
        prop_assert_eq!(l.sub(&r).max_norm(), 0.0);
    }
}
