//! Exhaustive enumeration of Gauss words and nanowords.

use std::collections::BTreeSet;

use crate::nanoword::{LetterType, Nanoword};

/// All Gauss words of the given rank with letters numbered by first
/// occurrence, in lexicographic order. There are `(2n-1)!!` of them.
pub fn gauss_words(rank: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(2 * rank);
    let mut seen = vec![0u8; rank];
    extend(rank, 0, &mut seen, &mut current, &mut out);
    out
}

fn extend(
    rank: usize,
    introduced: usize,
    seen: &mut [u8],
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if current.len() == 2 * rank {
        out.push(current.clone());
        return;
    }
    // close an open letter, or open the next one
    for id in 0..introduced {
        if seen[id] == 1 {
            seen[id] = 2;
            current.push(id as u32);
            extend(rank, introduced, seen, current, out);
            current.pop();
            seen[id] = 1;
        }
    }
    if introduced < rank {
        seen[introduced] = 1;
        current.push(introduced as u32);
        extend(rank, introduced + 1, seen, current, out);
        current.pop();
        seen[introduced] = 0;
    }
}

/// Every type assignment on a letter count, as bit patterns (bit `i` set means type b).
pub fn type_assignments(rank: usize) -> impl Iterator<Item = Vec<LetterType>> {
    (0u64..(1u64 << rank)).map(move |bits| {
        (0..rank)
            .map(|i| {
                if bits >> i & 1 == 1 {
                    LetterType::B
                } else {
                    LetterType::A
                }
            })
            .collect()
    })
}

/// All canonically labelled nanowords of the given rank.
pub fn nanowords(rank: usize) -> impl Iterator<Item = Nanoword> {
    gauss_words(rank).into_iter().flat_map(move |seq| {
        type_assignments(rank).map(move |types| Nanoword::from_canonical_parts(seq.clone(), types))
    })
}

/// Shift-orbit representatives of all nanowords of the given rank, sorted.
pub fn orbit_representatives(rank: usize) -> BTreeSet<Nanoword> {
    nanowords(rank).map(|w| w.orbit_canonical()).collect()
}

/// Shift-orbit representatives of every rank up to `max_rank`, sorted by rank then word.
pub fn orbit_representatives_up_to(max_rank: usize) -> Vec<Nanoword> {
    (0..=max_rank)
        .flat_map(|r| orbit_representatives(r).into_iter())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_factorial_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| gauss_words(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 15, 105, 945]);
    }

    #[test]
    fn words_are_canonical_and_sorted() {
        let words = gauss_words(3);
        assert!(words.windows(2).all(|p| p[0] < p[1]));
        for w in &words {
            let n = Nanoword::from_canonical_parts(w.clone(), vec![LetterType::A; 3]);
            assert!(n.is_canonical());
        }
    }

    #[test]
    fn orbit_representatives_are_fixed() {
        for w in orbit_representatives_up_to(3) {
            assert_eq!(w.orbit_canonical(), w);
        }
        assert_eq!(orbit_representatives(0).len(), 1);
        // AA|a and AA|b lie in one orbit
        assert_eq!(orbit_representatives(1).len(), 1);
    }
}
