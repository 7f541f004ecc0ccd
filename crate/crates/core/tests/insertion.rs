use proptest::prelude::*;
use tord::vogan::t_ab_word_by_pattern;
use tord::{rs, rs_inverse, t_ab_word, AdjacentPair, Word};

fn word(max_n: usize) -> impl Strategy<Value = Word> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Word::new(v).unwrap())
}

fn bar(w: &Word, a: usize) -> Vec<usize> {
    w.letters().iter().map(|&x| if x < a { x } else { x + 1 }).collect()
}

proptest! {
    #[test]
    fn insertion_matches_shifted_words(w in word(9), k in 0usize..10) {
        let n = w.n();
        let a = k % (n + 1) + 1;
        let p = rs(&w).0;
        let shifted = p.shift_entries(a).unwrap();
        let mut after = bar(&w, a);
        after.push(a);
        let mut before = vec![a];
        before.extend(bar(&w, a));
        prop_assert_eq!(shifted.row_insert(a).unwrap(), rs(&Word::new(after).unwrap()).0);
        prop_assert_eq!(shifted.col_insert(a).unwrap(), rs(&Word::new(before).unwrap()).0);
    }

    #[test]
    fn rs_round_trips(w in word(10)) {
        let (p, q) = rs(&w);
        prop_assert_eq!(rs_inverse(&p, &q).unwrap(), w.clone());
        prop_assert_eq!(rs(&w.inverse()), (q, p));
    }

    #[test]
    fn word_operator_agrees_with_pattern_rule(w in word(9), i in 1usize..8, up in any::<bool>()) {
        let n = w.n();
        prop_assume!(n >= 3 && i + 2 <= n);
        let pair = if up { AdjacentPair::up(i) } else { AdjacentPair::down(i) };
        match t_ab_word(&w, pair) {
            Ok(x) => prop_assert_eq!(t_ab_word_by_pattern(&w, pair).unwrap(), x),
            Err(_) => prop_assert!(t_ab_word_by_pattern(&w, pair).is_err()),
        }
    }
}
