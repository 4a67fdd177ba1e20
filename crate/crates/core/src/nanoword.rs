//! Nanowords over `{a, b}`: Gauss words with a type attached to every letter.
//!
//! A [`Nanoword`] keeps its letters in order of first occurrence, so two
//! nanowords are isomorphic exactly when their index sequences and type
//! vectors agree. Names only matter for printing and for provenance.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use once_cell::sync::Lazy;

use crate::error::{Error, Result};

/// A letter name: `[A-Z][0-9._]*`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(Arc<str>);

const NAME_CACHE: usize = 26 * 64;

static CANONICAL_NAMES: Lazy<Vec<Letter>> =
    Lazy::new(|| (0..NAME_CACHE).map(make_canonical_name).collect());

fn make_canonical_name(i: usize) -> Letter {
    let head = (b'A' + (i % 26) as u8) as char;
    if i < 26 {
        Letter(Arc::from(head.to_string()))
    } else {
        Letter(Arc::from(format!("{}{}", head, i / 26)))
    }
}

impl Letter {
    pub fn new(name: &str) -> Result<Self> {
        if Self::is_valid_name(name) {
            Ok(Letter(Arc::from(name)))
        } else {
            Err(Error::InvalidLetter(name.to_string()))
        }
    }

    pub fn is_valid_name(name: &str) -> bool {
        let mut chars = name.chars();
        match chars.next() {
            Some(c) if c.is_ascii_uppercase() => {}
            _ => return false,
        }
        chars.all(|c| c.is_ascii_digit() || c == '.' || c == '_')
    }

    /// The `i`-th name of the canonical sequence `A, B, …, Z, A1, B1, …`.
    pub fn canonical(i: usize) -> Self {
        if i < NAME_CACHE {
            CANONICAL_NAMES[i].clone()
        } else {
            make_canonical_name(i)
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn is_single_char(&self) -> bool {
        self.0.len() == 1
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Produces names that do not clash with a set of names already in use.
pub(crate) struct FreshNames {
    used: HashSet<Letter>,
    next: usize,
}

impl FreshNames {
    /// Continues the canonical sequence after the highest canonical name in use.
    pub(crate) fn after<'a>(used: impl IntoIterator<Item = &'a Letter>) -> Self {
        let used: HashSet<Letter> = used.into_iter().cloned().collect();
        let next = used
            .iter()
            .filter_map(canonical_index)
            .map(|i| i + 1)
            .max()
            .unwrap_or(0);
        FreshNames { used, next }
    }

    pub(crate) fn next_name(&mut self) -> Letter {
        loop {
            let candidate = Letter::canonical(self.next);
            self.next += 1;
            if self.used.insert(candidate.clone()) {
                return candidate;
            }
        }
    }

    /// `base` itself if free, otherwise `base` with `_` appended until it is.
    pub(crate) fn derived(&mut self, base: String) -> Letter {
        let mut name = base;
        loop {
            let candidate = Letter(Arc::from(name.as_str()));
            if self.used.insert(candidate.clone()) {
                return candidate;
            }
            name.push('_');
        }
    }
}

fn canonical_index(letter: &Letter) -> Option<usize> {
    let s = letter.as_str();
    let head = s.as_bytes()[0];
    let offset = (head - b'A') as usize;
    if s.len() == 1 {
        return Some(offset);
    }
    let tail = &s[1..];
    if tail.starts_with('0') || !tail.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    tail.parse::<usize>().ok().map(|k| k * 26 + offset)
}

/// Crossing type of a letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterType {
    A,
    B,
}

impl LetterType {
    pub fn flip(self) -> Self {
        match self {
            LetterType::A => LetterType::B,
            LetterType::B => LetterType::A,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            LetterType::A => 'a',
            LetterType::B => 'b',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'a' => Some(LetterType::A),
            'b' => Some(LetterType::B),
            _ => None,
        }
    }
}

impl fmt::Display for LetterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A Gauss word together with a type for each of its letters.
///
/// Letters are indexed by order of first occurrence; `seq` holds those
/// indices and `occ[i]` the two positions of letter `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Nanoword {
    names: Vec<Letter>,
    types: Vec<LetterType>,
    seq: Vec<u32>,
    occ: Vec<(u32, u32)>,
}

impl Nanoword {
    pub fn empty() -> Self {
        Nanoword {
            names: Vec::new(),
            types: Vec::new(),
            seq: Vec::new(),
            occ: Vec::new(),
        }
    }

    /// Builds a nanoword from a sequence of letters and a type for each letter.
    pub fn new(word: &[Letter], types: &HashMap<Letter, LetterType>) -> Result<Self> {
        let mut ids: HashMap<&Letter, u32> = HashMap::new();
        let mut names = Vec::new();
        let mut seq = Vec::with_capacity(word.len());
        for letter in word {
            let next = ids.len() as u32;
            let id = *ids.entry(letter).or_insert_with(|| {
                names.push(letter.clone());
                next
            });
            seq.push(id);
        }
        let mut counts = vec![0usize; names.len()];
        for &id in &seq {
            counts[id as usize] += 1;
        }
        if let Some((i, &count)) = counts.iter().enumerate().find(|(_, &c)| c != 2) {
            return Err(Error::NotGauss {
                letter: names[i].to_string(),
                count,
            });
        }
        for bound in types.keys() {
            if !ids.contains_key(bound) {
                return Err(Error::UnboundType(bound.to_string()));
            }
        }
        let mut tys = Vec::with_capacity(names.len());
        for name in &names {
            match types.get(name) {
                Some(t) => tys.push(*t),
                None => return Err(Error::MissingType(name.to_string())),
            }
        }
        Ok(Self::from_normalized(names, tys, seq))
    }

    /// Assembles a nanoword whose `seq` already lists letters in first-occurrence order.
    fn from_normalized(names: Vec<Letter>, types: Vec<LetterType>, seq: Vec<u32>) -> Self {
        let mut occ = vec![(u32::MAX, u32::MAX); names.len()];
        for (pos, &id) in seq.iter().enumerate() {
            let slot = &mut occ[id as usize];
            if slot.0 == u32::MAX {
                slot.0 = pos as u32;
            } else {
                slot.1 = pos as u32;
            }
        }
        Nanoword {
            names,
            types,
            seq,
            occ,
        }
    }

    /// Builds from arbitrary letter ids; `names[id]`/`types[id]` describe letter `id`.
    ///
    /// The caller guarantees that every id occurring in `raw` occurs exactly twice.
    pub(crate) fn from_raw(raw: &[u32], names: &[Letter], types: &[LetterType]) -> Self {
        let mut remap = vec![u32::MAX; names.len()];
        let mut out_names = Vec::with_capacity(raw.len() / 2);
        let mut out_types = Vec::with_capacity(raw.len() / 2);
        let mut seq = Vec::with_capacity(raw.len());
        for &id in raw {
            let slot = &mut remap[id as usize];
            if *slot == u32::MAX {
                *slot = out_names.len() as u32;
                out_names.push(names[id as usize].clone());
                out_types.push(types[id as usize]);
            }
            seq.push(*slot);
        }
        debug_assert!(is_gauss(&seq, out_names.len()));
        Self::from_normalized(out_names, out_types, seq)
    }

    /// Builds a word with canonical names from an index sequence in first-occurrence order.
    pub(crate) fn from_canonical_parts(seq: Vec<u32>, types: Vec<LetterType>) -> Self {
        let names = (0..types.len()).map(Letter::canonical).collect();
        Self::from_normalized(names, types, seq)
    }

    pub fn parse(text: &str) -> Result<Self> {
        text.parse()
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Letters in order of first occurrence.
    pub fn letters(&self) -> &[Letter] {
        &self.names
    }

    pub fn types(&self) -> &[LetterType] {
        &self.types
    }

    /// Letter indices along the word.
    pub fn indices(&self) -> &[u32] {
        &self.seq
    }

    /// Positions of the two occurrences of letter `index`.
    pub fn occurrences(&self, index: usize) -> (usize, usize) {
        let (a, b) = self.occ[index];
        (a as usize, b as usize)
    }

    pub fn index_at(&self, pos: usize) -> usize {
        self.seq[pos] as usize
    }

    pub fn letter_at(&self, pos: usize) -> &Letter {
        &self.names[self.seq[pos] as usize]
    }

    pub fn type_at(&self, pos: usize) -> LetterType {
        self.types[self.seq[pos] as usize]
    }

    pub fn index_of(&self, letter: &Letter) -> Option<usize> {
        self.names.iter().position(|l| l == letter)
    }

    pub fn type_of(&self, letter: &Letter) -> Option<LetterType> {
        self.index_of(letter).map(|i| self.types[i])
    }

    /// The word as a sequence of letters.
    pub fn word(&self) -> impl Iterator<Item = &Letter> + '_ {
        self.seq.iter().map(move |&i| &self.names[i as usize])
    }

    /// Letter indices sorted by letter name.
    pub fn alphabetical_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.rank()).collect();
        order.sort_by(|&a, &b| self.names[a].cmp(&self.names[b]));
        order
    }

    /// Renames letters `A, B, C, …` in order of first occurrence.
    pub fn canonical_relabel(&self) -> Nanoword {
        Self::from_canonical_parts(self.seq.clone(), self.types.clone())
    }

    pub fn is_canonical(&self) -> bool {
        self.names
            .iter()
            .enumerate()
            .all(|(i, n)| *n == Letter::canonical(i))
    }

    pub fn isomorphic(&self, other: &Nanoword) -> bool {
        self.seq == other.seq && self.types == other.types
    }

    /// Renames letters through `rename`; names not in the map are kept.
    pub fn renamed(&self, rename: &HashMap<Letter, Letter>) -> Result<Nanoword> {
        let names: Vec<Letter> = self
            .names
            .iter()
            .map(|n| rename.get(n).cloned().unwrap_or_else(|| n.clone()))
            .collect();
        let distinct: HashSet<&Letter> = names.iter().collect();
        if distinct.len() != names.len() {
            return Err(Error::InvalidLetter("renaming is not injective".into()));
        }
        Ok(Self::from_normalized(names, self.types.clone(), self.seq.clone()))
    }

    /// Moves the first letter to the end and flips its type.
    pub fn shift(&self) -> Nanoword {
        if self.is_empty() {
            return self.clone();
        }
        let moved = self.seq[0] as usize;
        let mut raw = self.seq[1..].to_vec();
        raw.push(moved as u32);
        let mut types = self.types.clone();
        types[moved] = types[moved].flip();
        Self::from_raw(&raw, &self.names, &types)
    }

    /// Moves the last letter to the front and flips its type.
    pub fn shift_inv(&self) -> Nanoword {
        if self.is_empty() {
            return self.clone();
        }
        let last = self.seq.len() - 1;
        let moved = self.seq[last] as usize;
        let mut raw = Vec::with_capacity(self.seq.len());
        raw.push(moved as u32);
        raw.extend_from_slice(&self.seq[..last]);
        let mut types = self.types.clone();
        types[moved] = types[moved].flip();
        Self::from_raw(&raw, &self.names, &types)
    }

    /// `shift` applied `k` times (k taken modulo the word length).
    pub fn rotated(&self, k: usize) -> Nanoword {
        let len = self.len();
        if len == 0 {
            return self.clone();
        }
        let k = k % len;
        let mut raw = Vec::with_capacity(len);
        raw.extend_from_slice(&self.seq[k..]);
        raw.extend_from_slice(&self.seq[..k]);
        let mut types = self.types.clone();
        for &id in &self.seq[..k] {
            types[id as usize] = types[id as usize].flip();
        }
        Self::from_raw(&raw, &self.names, &types)
    }

    /// Canonical (seq, types) key of `rotated(k)` without building names.
    fn rotation_key(&self, k: usize, seq_out: &mut Vec<u32>, types_out: &mut Vec<LetterType>) {
        let len = self.len();
        let rank = self.rank();
        let mut remap = vec![u32::MAX; rank];
        seq_out.clear();
        types_out.clear();
        for step in 0..len {
            let pos = (k + step) % len;
            let id = self.seq[pos] as usize;
            if remap[id] == u32::MAX {
                remap[id] = types_out.len() as u32;
                // letters whose first occurrence lies in the rotated-out prefix
                // were shifted once; both occurrences there means twice.
                let (first, second) = self.occ[id];
                let shifted = (first as usize) < k;
                let shifted_twice = (second as usize) < k;
                let t = self.types[id];
                types_out.push(if shifted && !shifted_twice { t.flip() } else { t });
            }
            seq_out.push(remap[id]);
        }
    }

    /// The least canonical relabeling over the shift orbit, and the number of
    /// shifts taking `self` to a word isomorphic to it.
    pub fn orbit_canonical_with_rotation(&self) -> (Nanoword, usize) {
        let len = self.len();
        if len == 0 {
            return (self.canonical_relabel(), 0);
        }
        let mut best_seq = Vec::new();
        let mut best_types = Vec::new();
        self.rotation_key(0, &mut best_seq, &mut best_types);
        let mut best_k = 0;
        let mut seq = Vec::with_capacity(len);
        let mut types = Vec::with_capacity(len / 2);
        for k in 1..len {
            self.rotation_key(k, &mut seq, &mut types);
            if (&seq, &types) < (&best_seq, &best_types) {
                std::mem::swap(&mut seq, &mut best_seq);
                std::mem::swap(&mut types, &mut best_types);
                best_k = k;
            }
        }
        (Self::from_canonical_parts(best_seq, best_types), best_k)
    }

    /// Representative of the shift orbit used for equality up to base point.
    pub fn orbit_canonical(&self) -> Nanoword {
        self.orbit_canonical_with_rotation().0
    }

    /// Subword on the letters selected by `keep` (indexed by letter index).
    pub fn subword(&self, keep: &[bool]) -> Nanoword {
        let raw: Vec<u32> = self
            .seq
            .iter()
            .copied()
            .filter(|&id| keep[id as usize])
            .collect();
        Self::from_raw(&raw, &self.names, &self.types)
    }

    /// The word as `(seq, types)` for ordering purposes.
    fn key(&self) -> (usize, &[u32], &[LetterType]) {
        (self.seq.len(), &self.seq, &self.types)
    }

    fn compact_printable(&self) -> bool {
        self.names.iter().all(Letter::is_single_char)
    }
}

fn is_gauss(seq: &[u32], rank: usize) -> bool {
    let mut counts = vec![0u8; rank];
    for &id in seq {
        match counts.get_mut(id as usize) {
            Some(c) => *c += 1,
            None => return false,
        }
    }
    counts.iter().all(|&c| c == 2)
}

impl Ord for Nanoword {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key()
            .cmp(&other.key())
            .then_with(|| self.names.cmp(&other.names))
    }
}

impl PartialOrd for Nanoword {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Nanoword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let order = self.alphabetical_order();
        if self.compact_printable() {
            for letter in self.word() {
                f.write_str(letter.as_str())?;
            }
            f.write_str("|")?;
            for i in order {
                write!(f, "{}", self.types[i])?;
            }
            Ok(())
        } else {
            let tokens: Vec<&str> = self.word().map(Letter::as_str).collect();
            f.write_str(&tokens.join(" "))?;
            f.write_str(" |")?;
            for i in order {
                write!(f, " {}={}", self.names[i], self.types[i])?;
            }
            Ok(())
        }
    }
}

impl fmt::Debug for Nanoword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Nanoword({self})")
    }
}

impl FromStr for Nanoword {
    type Err = Error;

    /// Compact `ABAB|ab`, extended `X.1 Y X.1 Y | X.1=a Y=b`, or `0`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::EmptyInput);
        }
        if text == "0" {
            return Ok(Nanoword::empty());
        }
        let (left, right) = text.split_once('|').ok_or(Error::MissingSeparator)?;
        if right.contains('=') {
            parse_extended(left, right)
        } else {
            parse_compact(left.trim(), right.trim())
        }
    }
}

fn parse_compact(left: &str, right: &str) -> Result<Nanoword> {
    let mut word = Vec::with_capacity(left.len());
    for c in left.chars() {
        if !c.is_ascii_uppercase() {
            return Err(Error::UnknownCharacter(c));
        }
        word.push(Letter(Arc::from(c.to_string())));
    }
    let mut type_chars = Vec::with_capacity(right.len());
    for c in right.chars() {
        type_chars.push(LetterType::from_char(c).ok_or(Error::UnknownCharacter(c))?);
    }
    let mut counts: BTreeMap<&Letter, usize> = BTreeMap::new();
    for l in &word {
        *counts.entry(l).or_default() += 1;
    }
    if let Some((l, &count)) = counts.iter().find(|(_, &c)| c != 2) {
        return Err(Error::NotGauss {
            letter: l.to_string(),
            count,
        });
    }
    if counts.len() != type_chars.len() {
        return Err(Error::TypeCountMismatch {
            expected: counts.len(),
            found: type_chars.len(),
        });
    }
    let types: HashMap<Letter, LetterType> = counts
        .keys()
        .map(|l| (*l).clone())
        .zip(type_chars)
        .collect();
    Nanoword::new(&word, &types)
}

fn parse_extended(left: &str, right: &str) -> Result<Nanoword> {
    let word = left
        .split_whitespace()
        .map(Letter::new)
        .collect::<Result<Vec<_>>>()?;
    let mut types = HashMap::new();
    for binding in right.split_whitespace() {
        let (name, ty) = binding
            .split_once('=')
            .ok_or_else(|| Error::InvalidBinding(binding.to_string()))?;
        let letter = Letter::new(name)?;
        let ty = match ty {
            "a" => LetterType::A,
            "b" => LetterType::B,
            _ => return Err(Error::InvalidBinding(binding.to_string())),
        };
        if types.insert(letter, ty).is_some() {
            return Err(Error::DuplicateBinding(name.to_string()));
        }
    }
    Nanoword::new(&word, &types)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Nanoword {
        s.parse().unwrap()
    }

    #[test]
    fn parses_compact_form() {
        let t = w("ABCABC|aba");
        let names: Vec<&str> = t.word().map(Letter::as_str).collect();
        assert_eq!(names, ["A", "B", "C", "A", "B", "C"]);
        assert_eq!(t.types(), &[LetterType::A, LetterType::B, LetterType::A]);
        assert_eq!(t.rank(), 3);
        assert_eq!(t.to_string(), "ABCABC|aba");
    }

    #[test]
    fn compact_types_follow_alphabetical_order() {
        let t = w("BABA|ab");
        assert_eq!(t.type_of(&Letter::new("A").unwrap()), Some(LetterType::A));
        assert_eq!(t.type_of(&Letter::new("B").unwrap()), Some(LetterType::B));
        assert_eq!(t.to_string(), "BABA|ab");
    }

    #[test]
    fn empty_word() {
        let e = w("0");
        assert_eq!(e.rank(), 0);
        assert_eq!(e.to_string(), "0");
        assert_eq!(w(" 0 "), e);
    }

    #[test]
    fn rejects_non_gauss() {
        assert_eq!(
            Nanoword::parse("ABA|aa"),
            Err(Error::NotGauss {
                letter: "B".into(),
                count: 1
            })
        );
        assert!(matches!(
            Nanoword::parse("AAAA|a"),
            Err(Error::NotGauss { count: 4, .. })
        ));
    }

    #[test]
    fn rejects_bad_type_strings() {
        assert_eq!(
            Nanoword::parse("ABAB|a"),
            Err(Error::TypeCountMismatch {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(Nanoword::parse("ABAB|ac"), Err(Error::UnknownCharacter('c')));
        assert_eq!(Nanoword::parse("AbAb|aa"), Err(Error::UnknownCharacter('b')));
        assert_eq!(Nanoword::parse("ABAB"), Err(Error::MissingSeparator));
        assert_eq!(Nanoword::parse(""), Err(Error::EmptyInput));
    }

    #[test]
    fn extended_form() {
        let x = w("X.1 Y X.1 Y | X.1=a Y=b");
        assert_eq!(x.rank(), 2);
        assert_eq!(x.to_string(), "X.1 Y X.1 Y | X.1=a Y=b");
        assert_eq!(x.canonical_relabel().to_string(), "ABAB|ab");
        // single-letter names print compactly
        assert_eq!(w("X Y X Y | X=a Y=a").to_string(), "XYXY|aa");
        assert!(matches!(
            Nanoword::parse("X Y X Y | X=a"),
            Err(Error::MissingType(_))
        ));
        assert!(matches!(
            Nanoword::parse("X X | X=a Y=b"),
            Err(Error::UnboundType(_))
        ));
        assert!(matches!(
            Nanoword::parse("X X | X=a X=b"),
            Err(Error::DuplicateBinding(_))
        ));
        assert!(matches!(
            Nanoword::parse("x x | x=a"),
            Err(Error::InvalidLetter(_))
        ));
        assert!(matches!(
            Nanoword::parse("X X | X=c"),
            Err(Error::InvalidBinding(_))
        ));
    }

    #[test]
    fn canonical_relabel_by_first_occurrence() {
        let x = w("X Y X Y | X=a Y=a");
        assert_eq!(x.canonical_relabel().to_string(), "ABAB|aa");
        let t = w("ABCABC|aba");
        assert_eq!(t.canonical_relabel(), t);
        let z = w("CACBBA|aab");
        let c = z.canonical_relabel();
        assert_eq!(c.canonical_relabel(), c);
        assert!(c.isomorphic(&z));
    }

    #[test]
    fn isomorphism() {
        assert!(w("ABAB|aa").isomorphic(&w("X Y X Y | X=a Y=a")));
        assert!(!w("ABAB|aa").isomorphic(&w("ABAB|ab")));
        assert!(!w("ABBA|ab").isomorphic(&w("ABBA|ba")));
    }

    #[test]
    fn shift_moves() {
        assert_eq!(w("ABAB|aa").shift().to_string(), "BABA|ba");
        let t = w("ABCABC|aba");
        assert_eq!(t.shift().shift_inv(), t);
        assert_eq!(t.shift_inv().shift(), t);
        assert_eq!(w("0").shift(), w("0"));
        assert_eq!(w("0").shift_inv(), w("0"));
    }

    #[test]
    fn rotation_matches_repeated_shift() {
        let t = w("ABCBDCAD|aabb");
        let mut s = t.clone();
        for k in 0..=t.len() {
            assert_eq!(t.rotated(k), s, "k = {k}");
            s = s.shift();
        }
        assert_eq!(t.rotated(t.len()), t);
    }

    #[test]
    fn orbit_canonical_is_shift_invariant() {
        let t = w("ABCBDCAD|aabb");
        let c = t.orbit_canonical();
        let (c2, k) = t.orbit_canonical_with_rotation();
        assert_eq!(c, c2);
        assert!(t.rotated(k).isomorphic(&c));
        let mut s = t.clone();
        for _ in 0..t.len() {
            s = s.shift();
            assert_eq!(s.orbit_canonical(), c);
        }
    }

    #[test]
    fn canonical_names_past_z() {
        assert_eq!(Letter::canonical(0).as_str(), "A");
        assert_eq!(Letter::canonical(25).as_str(), "Z");
        assert_eq!(Letter::canonical(26).as_str(), "A1");
        assert_eq!(Letter::canonical(53).as_str(), "B2");
        for i in [0, 7, 25, 26, 27, 51, 52, 600, 5000] {
            assert_eq!(canonical_index(&Letter::canonical(i)), Some(i));
        }
    }

    #[test]
    fn fresh_names_skip_used() {
        let t = w("ABACDBDC|abbb");
        let mut fresh = FreshNames::after(t.letters());
        assert_eq!(fresh.next_name().as_str(), "E");
        assert_eq!(fresh.next_name().as_str(), "F");
        assert_eq!(fresh.derived("A".into()).as_str(), "A_");
    }
}
