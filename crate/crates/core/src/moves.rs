//! Shift and homotopy moves on nanowords, located by position.
//!
//! Sites are positional, so a site (and a whole [`MoveTrace`]) found on one
//! word replays unchanged on any isomorphic word.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::nanoword::{FreshNames, Letter, LetterType, Nanoword};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    Shift,
    ShiftInv,
    H1Minus,
    H1Plus,
    H2Minus,
    H2Plus,
    H2aMinus,
    H2aPlus,
    H3,
    H3a,
    H3b,
    H3c,
}

impl MoveKind {
    pub const ALL: [MoveKind; 12] = [
        MoveKind::Shift,
        MoveKind::ShiftInv,
        MoveKind::H1Minus,
        MoveKind::H1Plus,
        MoveKind::H2Minus,
        MoveKind::H2Plus,
        MoveKind::H2aMinus,
        MoveKind::H2aPlus,
        MoveKind::H3,
        MoveKind::H3a,
        MoveKind::H3b,
        MoveKind::H3c,
    ];

    /// Moves that never increase the rank.
    pub const NON_INCREASING: [MoveKind; 9] = [
        MoveKind::Shift,
        MoveKind::ShiftInv,
        MoveKind::H1Minus,
        MoveKind::H2Minus,
        MoveKind::H2aMinus,
        MoveKind::H3,
        MoveKind::H3a,
        MoveKind::H3b,
        MoveKind::H3c,
    ];

    pub const ADDING: [MoveKind; 3] = [MoveKind::H1Plus, MoveKind::H2Plus, MoveKind::H2aPlus];

    pub const TRIPLE: [MoveKind; 4] = [MoveKind::H3, MoveKind::H3a, MoveKind::H3b, MoveKind::H3c];

    pub fn rank_delta(self) -> i32 {
        match self {
            MoveKind::H1Minus => -1,
            MoveKind::H2Minus | MoveKind::H2aMinus => -2,
            MoveKind::H1Plus => 1,
            MoveKind::H2Plus | MoveKind::H2aPlus => 2,
            _ => 0,
        }
    }

    pub fn is_adding(self) -> bool {
        matches!(self, MoveKind::H1Plus | MoveKind::H2Plus | MoveKind::H2aPlus)
    }

    pub fn is_shift(self) -> bool {
        matches!(self, MoveKind::Shift | MoveKind::ShiftInv)
    }

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Shift => "shift",
            MoveKind::ShiftInv => "shift-inv",
            MoveKind::H1Minus => "H1-",
            MoveKind::H1Plus => "H1+",
            MoveKind::H2Minus => "H2-",
            MoveKind::H2Plus => "H2+",
            MoveKind::H2aMinus => "H2a-",
            MoveKind::H2aPlus => "H2a+",
            MoveKind::H3 => "H3",
            MoveKind::H3a => "H3a",
            MoveKind::H3b => "H3b",
            MoveKind::H3c => "H3c",
        }
    }

    /// The three adjacent pairs of the left-hand side of a triple move,
    /// over symbols A = 0, B = 1, C = 2. The right-hand side swaps each pair.
    fn triple_pattern(self) -> [(usize, usize); 3] {
        const A: usize = 0;
        const B: usize = 1;
        const C: usize = 2;
        match self {
            MoveKind::H3 => [(A, B), (A, C), (B, C)],
            MoveKind::H3a => [(A, B), (C, A), (B, C)],
            MoveKind::H3b => [(A, B), (C, A), (C, B)],
            MoveKind::H3c => [(A, B), (A, C), (C, B)],
            _ => unreachable!("not a triple move"),
        }
    }

    fn triple_types_ok(self, t: [LetterType; 3]) -> bool {
        let [a, b, c] = t;
        match self {
            MoveKind::H3 => a == b && b == c,
            MoveKind::H3a => a == c && a != b,
            MoveKind::H3b => a == b && a != c,
            MoveKind::H3c => b == c && b != a,
            _ => false,
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MoveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MoveKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownMoveKind(s.to_string()))
    }
}

/// A letter introduced by a letter-adding move. Without a name a fresh one is allocated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreshLetter {
    pub name: Option<Letter>,
    pub ty: LetterType,
}

impl FreshLetter {
    pub fn unnamed(ty: LetterType) -> Self {
        FreshLetter { name: None, ty }
    }
}

/// Where a move applies.
///
/// `positions` are the rewritten positions for shifts and letter-removing or
/// rank-preserving moves (`H1-`: 2, `H2-`/`H2a-`: 4, `H3*`: 6). For
/// letter-adding moves they are insertion points into the current word:
/// one for `H1+`, two (`i <= j`) for `H2+`/`H2a+`, with `fresh` giving the
/// new letters in the order `A, B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MoveSite {
    pub kind: MoveKind,
    pub positions: Vec<usize>,
    pub fresh: Vec<FreshLetter>,
}

impl MoveSite {
    pub fn new(kind: MoveKind, positions: Vec<usize>) -> Self {
        MoveSite {
            kind,
            positions,
            fresh: Vec::new(),
        }
    }

    pub fn adding(kind: MoveKind, positions: Vec<usize>, fresh: Vec<FreshLetter>) -> Self {
        MoveSite {
            kind,
            positions,
            fresh,
        }
    }

    fn invalid(&self) -> Error {
        Error::InvalidSite {
            kind: self.kind,
            positions: self.positions.clone(),
        }
    }
}

impl fmt::Display for MoveSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ {:?}", self.kind, self.positions)?;
        if !self.fresh.is_empty() {
            let tys: String = self.fresh.iter().map(|l| l.ty.as_char()).collect();
            write!(f, " [{tys}]")?;
        }
        Ok(())
    }
}

/// All sites of `kind` in `word`, letter-adding kinds included.
pub fn find_sites(word: &Nanoword, kind: MoveKind) -> Vec<MoveSite> {
    find_sites_capped(word, kind, usize::MAX)
}

/// Like [`find_sites`] but stops after `cap` sites.
pub fn find_sites_capped(word: &Nanoword, kind: MoveKind, cap: usize) -> Vec<MoveSite> {
    let mut out = Vec::new();
    let len = word.len();
    let push = |out: &mut Vec<MoveSite>, site: MoveSite| {
        if out.len() < cap {
            out.push(site);
        }
    };
    match kind {
        MoveKind::Shift => {
            if len > 0 {
                push(&mut out, MoveSite::new(kind, vec![0]));
            }
        }
        MoveKind::ShiftInv => {
            if len > 0 {
                push(&mut out, MoveSite::new(kind, vec![len - 1]));
            }
        }
        MoveKind::H1Minus => {
            for p in 0..len.saturating_sub(1) {
                if word.index_at(p) == word.index_at(p + 1) {
                    push(&mut out, MoveSite::new(kind, vec![p, p + 1]));
                }
            }
        }
        MoveKind::H2Minus | MoveKind::H2aMinus => {
            for p in 0..len.saturating_sub(1) {
                let (a, b) = (word.index_at(p), word.index_at(p + 1));
                if a == b || word.types()[a] == word.types()[b] {
                    continue;
                }
                for q in p + 2..len - 1 {
                    let site = vec![p, p + 1, q, q + 1];
                    if pair_match(word, kind, &site) {
                        push(&mut out, MoveSite::new(kind, site));
                    }
                }
            }
        }
        MoveKind::H3 | MoveKind::H3a | MoveKind::H3b | MoveKind::H3c => {
            for p in 0..len.saturating_sub(1) {
                if word.index_at(p) == word.index_at(p + 1) {
                    continue;
                }
                for q in p + 2..len.saturating_sub(1) {
                    for r in q + 2..len - 1 {
                        let site = vec![p, p + 1, q, q + 1, r, r + 1];
                        if triple_binding(word, kind, &site).is_some() {
                            push(&mut out, MoveSite::new(kind, site));
                        }
                    }
                }
            }
        }
        MoveKind::H1Plus => {
            for i in 0..=len {
                for ty in [LetterType::A, LetterType::B] {
                    push(
                        &mut out,
                        MoveSite::adding(kind, vec![i], vec![FreshLetter::unnamed(ty)]),
                    );
                }
            }
        }
        MoveKind::H2Plus | MoveKind::H2aPlus => {
            for i in 0..=len {
                for j in i..=len {
                    for (ta, tb) in [(LetterType::A, LetterType::B), (LetterType::B, LetterType::A)] {
                        push(
                            &mut out,
                            MoveSite::adding(
                                kind,
                                vec![i, j],
                                vec![FreshLetter::unnamed(ta), FreshLetter::unnamed(tb)],
                            ),
                        );
                    }
                }
            }
        }
    }
    out
}

/// Checks `xAByBAz` (H2) or `xAByABz` (H2a) with `|A| != |B|` at four positions.
fn pair_match(word: &Nanoword, kind: MoveKind, pos: &[usize]) -> bool {
    let [p, p1, q, q1] = [pos[0], pos[1], pos[2], pos[3]];
    if p1 != p + 1 || q1 != q + 1 || q < p + 2 || q1 >= word.len() {
        return false;
    }
    let (a, b) = (word.index_at(p), word.index_at(p1));
    if a == b || word.types()[a] == word.types()[b] {
        return false;
    }
    match kind {
        MoveKind::H2Minus => word.index_at(q) == b && word.index_at(q1) == a,
        MoveKind::H2aMinus => word.index_at(q) == a && word.index_at(q1) == b,
        _ => false,
    }
}

/// Binds A, B, C for a triple move at six positions (either side of the move).
fn triple_binding(word: &Nanoword, kind: MoveKind, pos: &[usize]) -> Option<[usize; 3]> {
    if pos.len() != 6 {
        return None;
    }
    let (p, q, r) = (pos[0], pos[2], pos[4]);
    if pos[1] != p + 1 || pos[3] != q + 1 || pos[5] != r + 1 || q < p + 2 || r < q + 2 {
        return None;
    }
    if pos[5] >= word.len() {
        return None;
    }
    let letters: Vec<usize> = pos.iter().map(|&i| word.index_at(i)).collect();
    let pattern = kind.triple_pattern();
    for swapped in [false, true] {
        let mut bind = [usize::MAX; 3];
        let mut ok = true;
        for (k, &(x, y)) in pattern.iter().enumerate() {
            let (x, y) = if swapped { (y, x) } else { (x, y) };
            for (sym, letter) in [(x, letters[2 * k]), (y, letters[2 * k + 1])] {
                if bind[sym] == usize::MAX {
                    bind[sym] = letter;
                } else if bind[sym] != letter {
                    ok = false;
                }
            }
        }
        if !ok || bind[0] == bind[1] || bind[1] == bind[2] || bind[0] == bind[2] {
            continue;
        }
        let t = bind.map(|l| word.types()[l]);
        if kind.triple_types_ok(t) {
            return Some(bind);
        }
    }
    None
}

/// Is `site` a valid site of its kind in `word`?
pub fn is_valid_site(word: &Nanoword, site: &MoveSite) -> bool {
    let len = word.len();
    let pos = &site.positions;
    match site.kind {
        MoveKind::Shift => len > 0 && pos.as_slice() == [0],
        MoveKind::ShiftInv => len > 0 && pos.as_slice() == [len - 1],
        MoveKind::H1Minus => {
            pos.len() == 2
                && pos[1] == pos[0] + 1
                && pos[1] < len
                && word.index_at(pos[0]) == word.index_at(pos[1])
        }
        MoveKind::H2Minus | MoveKind::H2aMinus => {
            pos.len() == 4 && pair_match(word, site.kind, pos)
        }
        MoveKind::H3 | MoveKind::H3a | MoveKind::H3b | MoveKind::H3c => {
            triple_binding(word, site.kind, pos).is_some()
        }
        MoveKind::H1Plus => pos.len() == 1 && pos[0] <= len && site.fresh.len() == 1,
        MoveKind::H2Plus | MoveKind::H2aPlus => {
            pos.len() == 2
                && pos[0] <= pos[1]
                && pos[1] <= len
                && site.fresh.len() == 2
                && site.fresh[0].ty != site.fresh[1].ty
                && fresh_names_ok(word, &site.fresh)
        }
    }
}

fn fresh_names_ok(word: &Nanoword, fresh: &[FreshLetter]) -> bool {
    let names: Vec<&Letter> = fresh.iter().filter_map(|f| f.name.as_ref()).collect();
    let clash = names.iter().any(|n| word.index_of(n).is_some());
    let dup = names.len() == 2 && names[0] == names[1];
    !clash && !dup
}

/// Applies a move; fails if `site` is not a valid site of `word`.
pub fn apply_move(word: &Nanoword, site: &MoveSite) -> Result<Nanoword> {
    if !is_valid_site(word, site) {
        return Err(site.invalid());
    }
    if site.kind == MoveKind::H1Plus && !fresh_names_ok(word, &site.fresh) {
        return Err(site.invalid());
    }
    let pos = &site.positions;
    let seq = word.indices();
    let out = match site.kind {
        MoveKind::Shift => word.shift(),
        MoveKind::ShiftInv => word.shift_inv(),
        MoveKind::H1Minus | MoveKind::H2Minus | MoveKind::H2aMinus => {
            let raw: Vec<u32> = seq
                .iter()
                .enumerate()
                .filter(|(i, _)| !pos.contains(i))
                .map(|(_, &id)| id)
                .collect();
            Nanoword::from_raw(&raw, word.letters(), word.types())
        }
        MoveKind::H3 | MoveKind::H3a | MoveKind::H3b | MoveKind::H3c => {
            let mut raw = seq.to_vec();
            for k in 0..3 {
                raw.swap(pos[2 * k], pos[2 * k + 1]);
            }
            Nanoword::from_raw(&raw, word.letters(), word.types())
        }
        MoveKind::H1Plus | MoveKind::H2Plus | MoveKind::H2aPlus => {
            let mut names = word.letters().to_vec();
            let mut types = word.types().to_vec();
            let mut alloc = FreshNames::after(word.letters());
            let mut ids = Vec::with_capacity(site.fresh.len());
            for f in &site.fresh {
                let name = match &f.name {
                    Some(n) => n.clone(),
                    None => alloc.next_name(),
                };
                ids.push(names.len() as u32);
                names.push(name);
                types.push(f.ty);
            }
            let mut raw = Vec::with_capacity(seq.len() + 2 * ids.len());
            match site.kind {
                MoveKind::H1Plus => {
                    raw.extend_from_slice(&seq[..pos[0]]);
                    raw.extend([ids[0], ids[0]]);
                    raw.extend_from_slice(&seq[pos[0]..]);
                }
                _ => {
                    let (a, b) = (ids[0], ids[1]);
                    raw.extend_from_slice(&seq[..pos[0]]);
                    raw.extend([a, b]);
                    raw.extend_from_slice(&seq[pos[0]..pos[1]]);
                    if site.kind == MoveKind::H2Plus {
                        raw.extend([b, a]);
                    } else {
                        raw.extend([a, b]);
                    }
                    raw.extend_from_slice(&seq[pos[1]..]);
                }
            }
            Nanoword::from_raw(&raw, &names, &types)
        }
    };
    Ok(out)
}

/// The site in `apply_move(word, site)` whose application restores `word` exactly.
pub fn inverse_site(word: &Nanoword, site: &MoveSite) -> Result<MoveSite> {
    if !is_valid_site(word, site) {
        return Err(site.invalid());
    }
    let pos = &site.positions;
    let named = |p: usize| FreshLetter {
        name: Some(word.letter_at(p).clone()),
        ty: word.type_at(p),
    };
    let inv = match site.kind {
        MoveKind::Shift => MoveSite::new(MoveKind::ShiftInv, vec![word.len() - 1]),
        MoveKind::ShiftInv => MoveSite::new(MoveKind::Shift, vec![0]),
        MoveKind::H1Minus => MoveSite::adding(MoveKind::H1Plus, vec![pos[0]], vec![named(pos[0])]),
        MoveKind::H1Plus => MoveSite::new(MoveKind::H1Minus, vec![pos[0], pos[0] + 1]),
        MoveKind::H2Minus | MoveKind::H2aMinus => {
            let kind = if site.kind == MoveKind::H2Minus {
                MoveKind::H2Plus
            } else {
                MoveKind::H2aPlus
            };
            MoveSite::adding(
                kind,
                vec![pos[0], pos[2] - 2],
                vec![named(pos[0]), named(pos[1])],
            )
        }
        MoveKind::H2Plus | MoveKind::H2aPlus => {
            let kind = if site.kind == MoveKind::H2Plus {
                MoveKind::H2Minus
            } else {
                MoveKind::H2aMinus
            };
            let (i, j) = (pos[0], pos[1]);
            MoveSite::new(kind, vec![i, i + 1, j + 2, j + 3])
        }
        MoveKind::H3 | MoveKind::H3a | MoveKind::H3b | MoveKind::H3c => site.clone(),
    };
    Ok(inv)
}

/// A start word and a sequence of moves witnessing a homotopy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveTrace {
    pub start: Nanoword,
    pub steps: Vec<MoveSite>,
}

impl MoveTrace {
    pub fn new(start: Nanoword) -> Self {
        MoveTrace {
            start,
            steps: Vec::new(),
        }
    }

    /// Every intermediate word, starting with `start`.
    pub fn replay(&self) -> Result<Vec<Nanoword>> {
        let mut words = Vec::with_capacity(self.steps.len() + 1);
        let mut current = self.start.clone();
        for step in &self.steps {
            let next = apply_move(&current, step)?;
            words.push(std::mem::replace(&mut current, next));
        }
        words.push(current);
        Ok(words)
    }

    pub fn end(&self) -> Result<Nanoword> {
        let mut current = self.start.clone();
        for step in &self.steps {
            current = apply_move(&current, step)?;
        }
        Ok(current)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of steps that are not shifts.
    pub fn homotopy_steps(&self) -> usize {
        self.steps.iter().filter(|s| !s.kind.is_shift()).count()
    }
}
