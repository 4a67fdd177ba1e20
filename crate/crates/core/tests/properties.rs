use std::collections::HashMap;

use proptest::prelude::*;

use vstring::enumerate::{nanowords, orbit_representatives_up_to};
use vstring::invariants::{
    based_matrix, bm_isomorphic, cable_reduced_based_matrix, distinguish, n_values,
    primitive_based_matrix, reduce_to_primitive, rho, u_polynomial, Verdict,
};
use vstring::moves::{apply_move, find_sites_capped, inverse_site, MoveKind};
use vstring::ops::{cable, compose, covering, is_fixed, r_dot, uncover_preimage};
use vstring::search::{connect_with_moves, SearchBudget, BASIC_MOVES};
use vstring::{Letter, LetterType, Nanoword};

fn word_of_rank(max_rank: usize) -> impl Strategy<Value = Nanoword> {
    (0..=max_rank)
        .prop_flat_map(|rank| {
            let pairs: Vec<usize> = (0..rank).flat_map(|i| [i, i]).collect();
            (Just(pairs).prop_shuffle(), prop::collection::vec(any::<bool>(), rank))
        })
        .prop_map(|(seq, bits)| {
            let letters: Vec<Letter> = seq.iter().map(|&i| Letter::canonical(i)).collect();
            let types: HashMap<Letter, LetterType> = bits
                .iter()
                .enumerate()
                .map(|(i, &b)| (Letter::canonical(i), if b { LetterType::B } else { LetterType::A }))
                .collect();
            Nanoword::new(&letters, &types).unwrap().canonical_relabel()
        })
}

fn lcm(a: u32, b: u32) -> u32 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn print_parse_round_trip(word in word_of_rank(8)) {
        let text = word.to_string();
        let back: Nanoword = text.parse().unwrap();
        prop_assert_eq!(&back, &word);
        prop_assert!(word.canonical_relabel().is_canonical());
    }

    #[test]
    fn shifts_are_inverse(word in word_of_rank(6)) {
        prop_assert_eq!(word.shift().shift_inv(), word.clone());
        prop_assert_eq!(word.shift_inv().shift(), word.clone());
        prop_assert_eq!(word.shift().orbit_canonical(), word.orbit_canonical());
    }

    #[test]
    fn moves_undo_exactly(word in word_of_rank(5)) {
        for kind in MoveKind::ALL {
            for site in find_sites_capped(&word, kind, 40) {
                let next = apply_move(&word, &site).unwrap();
                let expected = word.rank() as i64 + kind.rank_delta() as i64;
                prop_assert_eq!(next.rank() as i64, expected);
                let back = inverse_site(&word, &site).unwrap();
                prop_assert_eq!(apply_move(&next, &back).unwrap(), word.clone());
            }
        }
    }

    #[test]
    fn n_values_are_bounded(word in word_of_rank(7)) {
        let n = n_values(&word);
        prop_assert_eq!(n.values().sum::<i64>(), 0);
        prop_assert!(n.values().all(|v| v.unsigned_abs() < word.rank().max(1) as u64));
    }

    #[test]
    fn covering_distributes_over_composition(a in word_of_rank(4), b in word_of_rank(4), r in 0u32..5) {
        let lhs = covering(&compose(&a, &b), r).canonical_relabel();
        let rhs = compose(&covering(&a, r), &covering(&b, r)).canonical_relabel();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn r_dot_is_fixed(word in word_of_rank(4), r in 2usize..4) {
        let dotted = r_dot(&word, r).unwrap();
        prop_assert!(is_fixed(&dotted, r as u32));
        let n = n_values(&word);
        for (letter, v) in n_values(&dotted) {
            let base = Letter::new(letter.as_str().split('.').next().unwrap()).unwrap();
            prop_assert_eq!(v, r as i64 * n[&base]);
        }
    }

    #[test]
    fn preimages_cover_back(word in word_of_rank(4), r in prop::sample::select(vec![0u32, 2, 3, 4])) {
        let beta = uncover_preimage(&word, r).unwrap();
        prop_assert!(u_polynomial(&beta).is_zero());
        prop_assert_eq!(covering(&beta, r).canonical_relabel(), word.canonical_relabel());
    }

    #[test]
    fn fixedness_transfers_to_cables(word in word_of_rank(3), r in 0u32..4, n in 2usize..4) {
        let c = cable(&word, n).unwrap();
        prop_assert_eq!(is_fixed(&word, r), is_fixed(&c, r * n as u32));
    }

    #[test]
    fn fixed_point_sets_nest(word in word_of_rank(5), p in 2u32..5, q in 2u32..5, k in 2u32..4) {
        if is_fixed(&word, k * p) {
            prop_assert!(is_fixed(&word, p));
        }
        if is_fixed(&word, 0) {
            prop_assert!(is_fixed(&word, p));
        }
        prop_assert_eq!(is_fixed(&word, p) && is_fixed(&word, q), is_fixed(&word, lcm(p, q)));
    }

    #[test]
    fn cable_matrix_formula(word in word_of_rank(3), n in 2usize..4) {
        let direct = based_matrix(&cable(&word, n).unwrap());
        let formula = cable_reduced_based_matrix(&based_matrix(&word), n).unwrap();
        prop_assert!(bm_isomorphic(&direct, &formula));
        let from_p = cable_reduced_based_matrix(&primitive_based_matrix(&word), n).unwrap();
        let p_cable = primitive_based_matrix(&cable(&word, n).unwrap());
        prop_assert!(bm_isomorphic(&reduce_to_primitive(&from_p).primitive, &p_cable));
    }

    #[test]
    fn shift_never_distinguishes(word in word_of_rank(5)) {
        let r = distinguish(&word, &word.shift(), 2);
        prop_assert_ne!(r.verdict, Verdict::Distinct);
    }
}

#[test]
fn rho_is_superadditive_on_same_type_words() {
    let words: Vec<Nanoword> = (0..=3).flat_map(nanowords).collect();
    for ty in [LetterType::A, LetterType::B] {
        let group: Vec<&Nanoword> = words.iter().filter(|w| w.types().iter().all(|&t| t == ty)).collect();
        for a in &group {
            for b in &group {
                assert!(rho(&compose(a, b)) >= rho(a) + rho(b), "{a} {b}");
            }
        }
    }
}

#[test]
fn derived_moves_are_sound() {
    // derived moves on rank ≤ 4 words are reachable with H1/H2/H3 and shifts
    let budget = SearchBudget {
        max_states: 50_000,
        ..SearchBudget::default()
    };
    let derived = [MoveKind::H2aMinus, MoveKind::H3a, MoveKind::H3b, MoveKind::H3c];
    let mut checked = 0;
    let mut words: Vec<Nanoword> = orbit_representatives_up_to(3);
    words.push("ABCBDCAD|aabb".parse().unwrap());
    words.push("BACDBCDA|aabb".parse().unwrap());
    for word in &words {
        for kind in derived {
            for site in find_sites_capped(word, kind, 2) {
                let next = apply_move(word, &site).unwrap();
                let trace = connect_with_moves(word, &next, budget, &BASIC_MOVES);
                assert!(trace.is_some(), "{word} -> {next} via {site}");
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn reduction_never_removes_special() {
    for word in orbit_representatives_up_to(3) {
        let red = reduce_to_primitive(&based_matrix(&word));
        assert_eq!(red.primitive.elements()[0].name(), "s");
        assert_eq!(red.primitive.size() - 1, rho(&word));
    }
}
