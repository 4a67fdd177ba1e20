//! Tail and head matrices.
//!
//! The arrow of a type-a letter runs from its first occurrence to its
//! second; a type-b arrow runs the other way. `t(X, Y)` records whether the
//! tail of `Y` is passed when walking (cyclically) from the tail of `X` to
//! its head, `h(X, Y)` likewise for the head of `Y`.

use crate::enumerate::{gauss_words, type_assignments};
use crate::error::{Error, Result};
use crate::nanoword::{Letter, LetterType, Nanoword};

pub type BitMatrix = Vec<Vec<u8>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeadTailMatrices {
    pub order: Vec<Letter>,
    pub tail: BitMatrix,
    pub head: BitMatrix,
}

impl HeadTailMatrices {
    pub fn size(&self) -> usize {
        self.order.len()
    }

    /// `T - H`, which equals the linking-number matrix.
    pub fn difference(&self) -> Vec<Vec<i64>> {
        self.tail
            .iter()
            .zip(&self.head)
            .map(|(t, h)| t.iter().zip(h).map(|(&t, &h)| t as i64 - h as i64).collect())
            .collect()
    }
}

fn arrow_ends(word: &Nanoword, x: usize) -> (usize, usize) {
    let (first, second) = word.occurrences(x);
    match word.types()[x] {
        LetterType::A => (first, second),
        LetterType::B => (second, first),
    }
}

/// `(t, h)` indexed by letter index (first-occurrence order).
pub(crate) fn tail_head_by_index(word: &Nanoword) -> (BitMatrix, BitMatrix) {
    let rank = word.rank();
    let len = word.len();
    let ends: Vec<(usize, usize)> = (0..rank).map(|x| arrow_ends(word, x)).collect();
    let mut t = vec![vec![0u8; rank]; rank];
    let mut h = vec![vec![0u8; rank]; rank];
    for x in 0..rank {
        let (tail, head) = ends[x];
        let mut pos = (tail + 1) % len;
        while pos != head {
            let y = word.index_at(pos);
            if y != x {
                if ends[y].0 == pos {
                    t[x][y] = 1;
                } else {
                    h[x][y] = 1;
                }
            }
            pos = (pos + 1) % len;
        }
    }
    (t, h)
}

/// Tail and head matrices with letters in alphabetical order.
pub fn head_tail_matrices(word: &Nanoword) -> HeadTailMatrices {
    let (t, h) = tail_head_by_index(word);
    let order = word.alphabetical_order();
    let permute = |m: &BitMatrix| -> BitMatrix {
        order
            .iter()
            .map(|&i| order.iter().map(|&j| m[i][j]).collect())
            .collect()
    };
    HeadTailMatrices {
        order: order.iter().map(|&i| word.letters()[i].clone()).collect(),
        tail: permute(&t),
        head: permute(&h),
    }
}

pub const TH_REALIZABLE_CAP: usize = 5;

/// Searches for a nanoword whose tail/head matrices are `(tail, head)` for
/// some naming of its letters. The returned word names letter `k` of the
/// matrix order with the `k`-th canonical name, so its alphabetical
/// matrices equal the input exactly.
pub fn th_realizable(tail: &BitMatrix, head: &BitMatrix, cap: usize) -> Result<Option<Nanoword>> {
    let n = tail.len();
    let square = |m: &BitMatrix| m.len() == n && m.iter().all(|row| row.len() == n);
    if !square(tail) || !square(head) {
        return Err(Error::MalformedMatrix("tail/head matrices must be square and equal-sized".into()));
    }
    let zero_diag = (0..n).all(|i| tail[i][i] == 0 && head[i][i] == 0);
    let binary = tail.iter().chain(head).flatten().all(|&v| v <= 1);
    if !zero_diag || !binary {
        return Err(Error::MalformedMatrix("entries must be 0/1 with zero diagonal".into()));
    }
    if n > cap {
        return Err(Error::CapExceeded { rank: n, cap });
    }
    for seq in gauss_words(n) {
        for types in type_assignments(n) {
            let word = Nanoword::from_canonical_parts(seq.clone(), types);
            let (t, h) = tail_head_by_index(&word);
            // assignment[k] = letter index placed at matrix position k
            let mut assignment = Vec::with_capacity(n);
            let mut used = vec![false; n];
            if match_permutation(tail, head, &t, &h, &mut assignment, &mut used) {
                let mut names = vec![Letter::canonical(0); n];
                for (k, &letter) in assignment.iter().enumerate() {
                    names[letter] = Letter::canonical(k);
                }
                let rename = word
                    .letters()
                    .iter()
                    .cloned()
                    .zip(names)
                    .collect();
                return Ok(Some(word.renamed(&rename)?));
            }
        }
    }
    Ok(None)
}

fn match_permutation(
    tail: &BitMatrix,
    head: &BitMatrix,
    t: &BitMatrix,
    h: &BitMatrix,
    assignment: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let k = assignment.len();
    if k == tail.len() {
        return true;
    }
    for cand in 0..used.len() {
        if used[cand] {
            continue;
        }
        let consistent = assignment.iter().enumerate().all(|(j, &other)| {
            tail[k][j] == t[cand][other]
                && tail[j][k] == t[other][cand]
                && head[k][j] == h[cand][other]
                && head[j][k] == h[other][cand]
        });
        if !consistent {
            continue;
        }
        used[cand] = true;
        assignment.push(cand);
        if match_permutation(tail, head, t, h, assignment, used) {
            return true;
        }
        assignment.pop();
        used[cand] = false;
    }
    false
}
