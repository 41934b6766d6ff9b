use affinv_core::AffinePermutation;
use proptest::prelude::*;

fn perm() -> impl Strategy<Value = AffinePermutation> {
    (2usize..=5).prop_flat_map(|n| {
        prop::collection::vec(1..=n as i64, 0..=8).prop_map(move |w| AffinePermutation::from_word(n, &w).unwrap())
    })
}

fn pair() -> impl Strategy<Value = (AffinePermutation, AffinePermutation)> {
    (2usize..=4).prop_flat_map(|n| {
        let word = prop::collection::vec(1..=n as i64, 0..=6);
        (word.clone(), word).prop_map(move |(a, b)| {
            (AffinePermutation::from_word(n, &a).unwrap(), AffinePermutation::from_word(n, &b).unwrap())
        })
    })
}

/// Elements expressible by some subword of `word`.
fn subword_products(n: usize, word: &[i64]) -> Vec<AffinePermutation> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << word.len()) {
        let sub: Vec<i64> = word.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &s)| s).collect();
        out.push(AffinePermutation::from_word(n, &sub).unwrap());
    }
    out
}

proptest! {
    #[test]
    fn inverse_and_star_are_involutive(w in perm()) {
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert_eq!(w.star().star(), w.clone());
        prop_assert_eq!(w.inverse().length(), w.length());
        prop_assert_eq!(w.star().length(), w.length());
        prop_assert!(w.compose(&w.inverse()).unwrap().is_identity());
    }

    #[test]
    fn reduced_word_is_reduced(w in perm()) {
        let word = w.reduced_word();
        prop_assert_eq!(word.len() as u64, w.length());
        prop_assert_eq!(AffinePermutation::from_word(w.n(), &word).unwrap(), w);
    }

    #[test]
    fn descents_lower_length(w in perm()) {
        for i in 1..=w.n() as i64 {
            let ws = w.mul_simple_right(i);
            let delta = if w.has_right_descent(i) { -1 } else { 1 };
            prop_assert_eq!(ws.length() as i64, w.length() as i64 + delta);
            let sw = w.mul_simple_left(i);
            let delta = if w.has_left_descent(i) { -1 } else { 1 };
            prop_assert_eq!(sw.length() as i64, w.length() as i64 + delta);
        }
    }

    #[test]
    fn demazure_is_associative_and_dominates((u, v) in pair(), extra in prop::collection::vec(1i64..=4, 0..=3)) {
        let n = u.n();
        let x = AffinePermutation::from_word(n, &extra.iter().map(|&i| (i - 1) % n as i64 + 1).collect::<Vec<_>>()).unwrap();
        let left = u.demazure(&v).unwrap().demazure(&x).unwrap();
        let right = u.demazure(&v.demazure(&x).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let d = u.demazure(&v).unwrap();
        prop_assert!(d.length() >= u.length().max(v.length()));
        prop_assert!(d.length() <= u.length() + v.length());
    }

    #[test]
    fn bruhat_matches_subword_property((u, w) in pair()) {
        let subs = subword_products(w.n(), &w.reduced_word());
        prop_assert_eq!(u.bruhat_leq(&w).unwrap(), subs.contains(&u));
    }

    #[test]
    fn bruhat_covers_are_covers(w in perm()) {
        for (v, t) in w.bruhat_covers_up() {
            prop_assert_eq!(v.length(), w.length() + 1);
            prop_assert_eq!(w.compose(&t.to_perm()).unwrap(), v.clone());
            prop_assert!(w.bruhat_leq(&v).unwrap());
        }
    }

    #[test]
    fn window_serde_round_trip(w in perm()) {
        let s = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<AffinePermutation>(&s).unwrap(), w.clone());
        prop_assert_eq!(AffinePermutation::from_window(w.n(), w.window()).unwrap(), w);
    }
}
