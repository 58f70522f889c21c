mod common;

use braid_gt::groups::{delta, xi, BraidWord};
use braid_gt::reps::{
    burau_integral, burau_integral_series, burau_paper, default_tolerance, find_intertwiner, specialize, Matrix,
};
use braid_gt::scalars::{rat, rat_int, Rational};
use common::{braid_word, small_rational};
use proptest::prelude::*;

fn pure_braid(n: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n, 0usize..n, any::<bool>(), braid_word(n, 4)), 1..4).prop_map(move |gs| {
        gs.into_iter().fold(BraidWord::identity(n), |acc, (i, dj, inv, c)| {
            let j = i + 1 + dj % (n - i);
            let x = xi(i, j, n).unwrap().conjugate_by(&c);
            acc.mul(&if inv { x.inverse() } else { x })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn evaluate_is_a_homomorphism(a in braid_word(4, 8), b in braid_word(4, 8)) {
        let r = burau_integral(4).unwrap();
        let ab = r.evaluate(&a.mul(&b)).unwrap();
        prop_assert!(ab.sub(&r.evaluate(&a).unwrap().mul(&r.evaluate(&b).unwrap())).is_zero());
        let back = r.evaluate(&a).unwrap().mul(&r.evaluate(&a.inverse()).unwrap());
        prop_assert!(back.sub(&r.identity()).is_zero());
    }

    #[test]
    fn pure_braids_are_one_mod_h(b in pure_braid(4)) {
        prop_assert!(b.is_pure());
        let r = burau_integral_series(4, 3).unwrap();
        let m = r.evaluate(&b).unwrap();
        let constant = m.map(|s| s.truncate(0));
        prop_assert!(constant.sub(&r.identity().map(|s| s.truncate(0))).is_zero());
    }

    #[test]
    fn intertwiner_recovers_a_conjugation(lower in small_rational(), upper in small_rational(), corner in small_rational(), x in 2i64..6) {
        let rep = specialize(&burau_integral(4).unwrap(), &rat(x, 3), |c| c.clone()).unwrap();
        let one = rat_int(1);
        let z = rat_int(0);
        let p = Matrix::from_rows(vec![
            vec![one.clone(), upper.clone(), corner.clone()],
            vec![z.clone(), one.clone(), upper.clone()],
            vec![lower.clone(), z, one],
        ]);
        let Some(pi) = p.inverse() else { return Ok(()) };
        let t1: Vec<Matrix<Rational>> = rep.generators().to_vec();
        let t2: Vec<Matrix<Rational>> = t1.iter().map(|g| p.mul(g).mul(&pi)).collect();
        let q = find_intertwiner(&t1, &t2, 0.0).expect("conjugate tuples are intertwined");
        for (a, b) in t1.iter().zip(&t2) {
            prop_assert!(q.mul(a).sub(&b.mul(&q)).is_zero());
        }
    }
}

#[test]
fn deltas_are_diagonal_in_the_symmetric_form() {
    for n in 3..=5 {
        let r = burau_paper(n, 4, 128).unwrap();
        for k in 2..=n {
            let m = r.evaluate(&delta(k, n).unwrap()).unwrap();
            assert!(m.off_diagonal_norm() < default_tolerance(128), "δ_{k} in B_{n}");
        }
    }
}
