#![allow(dead_code)]

use braid_gt::freealg::{lyndon_words, LieSeries};
use braid_gt::groups::{BraidWord, FreeWord};
use braid_gt::scalars::{rat, rat_int, Rational};
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

pub fn free_word(rank: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((0..rank, prop::bool::ANY), 0..=max_len).prop_map(move |ls| {
        let letters: Vec<(usize, i8)> = ls.into_iter().map(|(i, s)| (i, if s { 1 } else { -1 })).collect();
        FreeWord::from_letters(rank, &letters).unwrap()
    })
}

pub fn braid_word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((0..strands - 1, prop::bool::ANY), 0..=max_len).prop_map(move |ls| {
        let letters: Vec<(usize, i8)> = ls.into_iter().map(|(i, s)| (i, if s { 1 } else { -1 })).collect();
        BraidWord::from_letters(strands, &letters).unwrap()
    })
}

/// A Lie series on two letters with random rational coordinates on the
/// Lyndon words of length between `min_len` and `degree`.
pub fn lie_series(degree: usize, min_len: usize) -> impl Strategy<Value = LieSeries<Rational>> {
    lie_series_on(["x", "y"], degree, min_len)
}

pub fn lie_series_on(
    names: [&'static str; 2],
    degree: usize,
    min_len: usize,
) -> impl Strategy<Value = LieSeries<Rational>> {
    let words: Vec<_> = lyndon_words(2, degree).into_iter().filter(|w| w.len() >= min_len).collect();
    prop::collection::vec(small_rational(), words.len()).prop_map(move |cs| {
        let mut l = LieSeries::zero(&names, degree, &rat_int(0));
        for (w, c) in words.iter().zip(cs) {
            l.set(w.clone(), c);
        }
        l
    })
}
