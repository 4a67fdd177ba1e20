//! Coverings, composition, cabling, `r·α`, and the generated families.

use crate::error::{Error, Result};
use crate::invariants::linking::n_vector;
use crate::nanoword::{FreshNames, Letter, LetterType, Nanoword};

/// Whether a letter with linking sum `n` survives the `r`-covering.
fn survives(n: i64, r: u32) -> bool {
    if r == 0 {
        n == 0
    } else {
        n % r as i64 == 0
    }
}

/// The `r`-covering: the subword on letters `X` with `r | n(X)`
/// (for `r = 0`, the letters with `n(X) = 0`).
pub fn covering(word: &Nanoword, r: u32) -> Nanoword {
    if r == 1 {
        return word.clone();
    }
    let keep: Vec<bool> = n_vector(word).into_iter().map(|n| survives(n, r)).collect();
    word.subword(&keep)
}

/// Number of letters the `r`-covering deletes.
pub fn covering_deletions(word: &Nanoword, r: u32) -> usize {
    word.rank() - covering(word, r).rank()
}

/// Builds a word from `(name, type)` letters and a sequence of letter ids.
fn assemble(letters: Vec<(Letter, LetterType)>, raw: &[u32]) -> Nanoword {
    let (names, types): (Vec<Letter>, Vec<LetterType>) = letters.into_iter().unzip();
    Nanoword::from_raw(raw, &names, &types)
}

/// `αβ`: concatenation after renaming `β` with names continuing past `α`'s.
pub fn compose(alpha: &Nanoword, beta: &Nanoword) -> Nanoword {
    let mut fresh = FreshNames::after(alpha.letters());
    let mut letters: Vec<(Letter, LetterType)> = alpha
        .letters()
        .iter()
        .cloned()
        .zip(alpha.types().iter().copied())
        .collect();
    let offset = letters.len() as u32;
    letters.extend(beta.types().iter().map(|&t| (fresh.next_name(), t)));
    let raw: Vec<u32> = alpha
        .indices()
        .iter()
        .copied()
        .chain(beta.indices().iter().map(|&i| i + offset))
        .collect();
    assemble(letters, &raw)
}

/// The `n`-cable. Letter `A` of `α` becomes `A.i.j` for `0 ≤ i, j < n`,
/// joined by `C.0 … C.(n-2)`.
pub fn cable(alpha: &Nanoword, n: usize) -> Result<Nanoword> {
    if n == 0 {
        return Err(Error::OutOfRange("cable needs n >= 1".into()));
    }
    if n == 1 {
        return Ok(alpha.clone());
    }
    let rank = alpha.rank();
    let mut fresh = FreshNames::after(std::iter::empty());
    let mut letters = Vec::with_capacity(rank * n * n + n - 1);
    // id of A_{i,j} is (a * n + i) * n + j
    for (a, name) in alpha.letters().iter().enumerate() {
        let ty = alpha.types()[a];
        for i in 0..n {
            for j in 0..n {
                let is_a = match ty {
                    LetterType::A => i <= j,
                    LetterType::B => j > (i + n - 1) % n,
                };
                let t = if is_a { LetterType::A } else { LetterType::B };
                letters.push((fresh.derived(format!("{name}.{i}.{j}")), t));
            }
        }
    }
    let join_base = (rank * n * n) as u32;
    for k in 0..n - 1 {
        letters.push((fresh.derived(format!("C.{k}")), LetterType::A));
    }
    let id = |a: usize, i: usize, j: usize| ((a * n + i) * n + j) as u32;
    let strand = |i: usize, raw: &mut Vec<u32>| {
        for pos in 0..alpha.len() {
            let a = alpha.index_at(pos);
            let first = alpha.occurrences(a).0 == pos;
            match (alpha.types()[a], first) {
                (LetterType::A, true) => raw.extend((0..n).map(|j| id(a, i, j))),
                (LetterType::A, false) => raw.extend((0..n).rev().map(|j| id(a, j, i))),
                (LetterType::B, true) => {
                    raw.push(id(a, 0, i));
                    raw.extend((1..n).rev().map(|j| id(a, j, i)));
                }
                (LetterType::B, false) => {
                    let row = (i + 1) % n;
                    raw.extend((0..n).map(|j| id(a, row, j)));
                }
            }
        }
    };
    let mut raw = Vec::with_capacity(2 * letters.len());
    for i in 0..n {
        strand(i, &mut raw);
        if i + 1 < n {
            raw.push(join_base + i as u32);
        }
    }
    raw.extend((0..n - 1).rev().map(|k| join_base + k as u32));
    Ok(assemble(letters, &raw))
}

/// `r·α`: each first occurrence of `A` becomes `A.1 … A.r`, each second
/// occurrence `A.r … A.1`; every copy keeps `A`'s type.
pub fn r_dot(alpha: &Nanoword, r: usize) -> Result<Nanoword> {
    if r == 0 {
        return Err(Error::OutOfRange("r·α needs r >= 1".into()));
    }
    if r == 1 {
        return Ok(alpha.clone());
    }
    let mut fresh = FreshNames::after(std::iter::empty());
    let mut letters = Vec::with_capacity(alpha.rank() * r);
    for (a, name) in alpha.letters().iter().enumerate() {
        for c in 1..=r {
            letters.push((fresh.derived(format!("{name}.{c}")), alpha.types()[a]));
        }
    }
    let mut raw = Vec::with_capacity(alpha.len() * r);
    for pos in 0..alpha.len() {
        let a = alpha.index_at(pos);
        let base = (a * r) as u32;
        if alpha.occurrences(a).0 == pos {
            raw.extend((0..r as u32).map(|c| base + c));
        } else {
            raw.extend((0..r as u32).rev().map(|c| base + c));
        }
    }
    Ok(assemble(letters, &raw))
}

fn indexed(prefix: &str, i: usize) -> Letter {
    Letter::new(&format!("{prefix}{i}")).expect("indexed names are valid")
}

/// `X1 … Xp Y1 … Yq Xp … X1 Yq … Y1`, all letters of type a.
pub fn gen_gamma_pq(p: usize, q: usize) -> Result<Nanoword> {
    if p == 0 || q == 0 {
        return Err(Error::OutOfRange("Γ(p, q) needs p, q >= 1".into()));
    }
    let mut letters: Vec<(Letter, LetterType)> =
        (1..=p).map(|i| (indexed("X", i), LetterType::A)).collect();
    letters.extend((1..=q).map(|j| (indexed("Y", j), LetterType::A)));
    let xs = 0..p as u32;
    let ys = p as u32..(p + q) as u32;
    let raw: Vec<u32> = xs
        .clone()
        .chain(ys.clone())
        .chain(xs.rev())
        .chain(ys.rev())
        .collect();
    Ok(assemble(letters, &raw))
}

/// `X0 X(n-1) X1 X0 X2 X1 … X(n-1) X(n-2)` with only `X(n-1)` of type b.
pub fn gen_alpha_n(n: usize) -> Result<Nanoword> {
    if n < 3 {
        return Err(Error::OutOfRange("α_n needs n >= 3".into()));
    }
    let letters = (0..n)
        .map(|i| {
            let t = if i == n - 1 { LetterType::B } else { LetterType::A };
            (indexed("X", i), t)
        })
        .collect();
    let raw: Vec<u32> = (0..n)
        .flat_map(|k| [k as u32, ((k + n - 1) % n) as u32])
        .collect();
    Ok(assemble(letters, &raw))
}

/// A word whose `r`-covering is `α` and whose u-polynomial vanishes.
///
/// Before the second occurrence of every letter `X` with `n(X) ≠ 0` we insert
/// `A1 … Ak X Ak … A1` (`k = |n(X)|`), the `Ai` taking `X`'s type when
/// `n(X) < 0` and the other type otherwise.
pub fn uncover_preimage(alpha: &Nanoword, r: u32) -> Result<Nanoword> {
    if r == 1 {
        return Err(Error::OutOfRange("the 1-covering is the identity; r must not be 1".into()));
    }
    let n = n_vector(alpha);
    let mut fresh = FreshNames::after(alpha.letters());
    let mut letters: Vec<(Letter, LetterType)> = alpha
        .letters()
        .iter()
        .cloned()
        .zip(alpha.types().iter().copied())
        .collect();
    let mut pads: Vec<Vec<u32>> = vec![Vec::new(); alpha.rank()];
    for x in 0..alpha.rank() {
        let ty = if n[x] < 0 { alpha.types()[x] } else { alpha.types()[x].flip() };
        for c in 1..=n[x].unsigned_abs() {
            pads[x].push(letters.len() as u32);
            letters.push((fresh.derived(format!("{}.{c}", alpha.letters()[x])), ty));
        }
    }
    let mut raw = Vec::with_capacity(alpha.len() + 4 * letters.len());
    for pos in 0..alpha.len() {
        let x = alpha.index_at(pos);
        if alpha.occurrences(x).1 == pos {
            raw.extend_from_slice(&pads[x]);
            raw.push(x as u32);
            raw.extend(pads[x].iter().rev());
        } else {
            raw.push(x as u32);
        }
    }
    Ok(assemble(letters, &raw))
}

/// `1 + max |n(X)|`, lowered while the smaller covering still equals the
/// 0-covering word for word (up to shifts); 0 when every `n(X)` vanishes.
pub fn m_upper(alpha: &Nanoword) -> u32 {
    let n = n_vector(alpha);
    let Some(max) = n.iter().map(|v| v.unsigned_abs() as u32).max().filter(|&m| m > 0) else {
        return 0;
    };
    let zero = covering(alpha, 0).orbit_canonical();
    let mut m = max + 1;
    while m > 1 && covering(alpha, m - 1).orbit_canonical() == zero {
        m -= 1;
    }
    m
}

/// The iterated coverings `α, cover(α), cover(cover(α)), …` up to the first
/// repeat (compared up to shifts); the last entry equals its own covering.
pub fn covering_chain(alpha: &Nanoword, r: u32) -> Vec<Nanoword> {
    let mut chain = vec![alpha.clone()];
    loop {
        let last = chain.last().expect("chain is nonempty");
        let next = covering(last, r);
        if next.orbit_canonical() == last.orbit_canonical() {
            return chain;
        }
        chain.push(next);
    }
}

/// Whether `α` is fixed by the `r`-covering, letter for letter.
pub fn is_fixed(alpha: &Nanoword, r: u32) -> bool {
    covering(alpha, r) == *alpha
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::linking::{n_values, u_polynomial};

    fn w(s: &str) -> Nanoword {
        s.parse().unwrap()
    }

    fn canon(s: &str) -> String {
        w(s).canonical_relabel().to_string()
    }

    #[test]
    fn covering_examples() {
        assert_eq!(covering(&w("ABCACB|aaa"), 2).to_string(), "AA|a");
        let c = covering(&w("ABCDBEDEAC|baaaa"), 2).canonical_relabel();
        assert_eq!(c.to_string(), canon("BCDBDC|aaa"));
        let word = w("ABACDBDC|abbb");
        assert_eq!(covering(&word, 1), word);
        assert_eq!(covering(&w("ABCACB|aaa"), 0).to_string(), "0");
    }

    #[test]
    fn compose_examples() {
        let ab = compose(&w("ABACDBDC|abbb"), &w("ABACBC|abb"));
        assert_eq!(ab.to_string(), "ABACDBDCEFEGFG|abbbabb");
        assert_eq!(compose(&w("ABAB|aa"), &w("ABAB|aa")).to_string(), "ABABCDCD|aaaa");
        assert_eq!(compose(&w("0"), &w("ABAB|ab")).to_string(), "ABAB|ab");
    }

    #[test]
    fn two_cable_matches_worked_example() {
        let c = cable(&w("XYXZYZ|abb"), 2).unwrap();
        let tokens: Vec<&str> = c.word().map(Letter::as_str).collect();
        let w0 = "X.0.0 X.0.1 Y.0.0 Y.1.0 X.1.0 X.0.0 Z.0.0 Z.1.0 Y.1.0 Y.1.1 Z.1.0 Z.1.1";
        let w1 = "X.1.0 X.1.1 Y.0.1 Y.1.1 X.1.1 X.0.1 Z.0.1 Z.1.1 Y.0.0 Y.0.1 Z.0.0 Z.0.1";
        let expected = format!("{w0} C.0 {w1} C.0");
        assert_eq!(tokens.join(" "), expected);
        let mut type_a: Vec<&str> = c
            .letters()
            .iter()
            .zip(c.types())
            .filter(|(_, t)| **t == LetterType::A)
            .map(|(l, _)| l.as_str())
            .collect();
        type_a.sort();
        assert_eq!(type_a, vec!["C.0", "X.0.0", "X.0.1", "X.1.1", "Y.1.1", "Z.1.1"]);
        assert_eq!(c.rank(), 3 * 4 + 1);
    }

    #[test]
    fn cable_edge_cases() {
        let word = w("ABAB|ab");
        assert_eq!(cable(&word, 1).unwrap(), word);
        assert!(cable(&word, 0).is_err());
        let c = cable(&w("0"), 3).unwrap();
        assert_eq!(c.canonical_relabel().to_string(), "ABBA|aa");
        assert_eq!(cable(&w("ABCACB|aaa"), 3).unwrap().rank(), 3 * 9 + 2);
    }

    #[test]
    fn cable_u_polynomial_example() {
        let c = cable(&w("ABCACB|aaa"), 2).unwrap();
        assert_eq!(u_polynomial(&c).to_string(), "4t^4 - 8t^2");
    }

    #[test]
    fn r_dot_example() {
        let d = r_dot(&w("ABACBC|aab"), 2).unwrap();
        let tokens: Vec<&str> = d.word().map(Letter::as_str).collect();
        assert_eq!(
            tokens.join(" "),
            "A.1 A.2 B.1 B.2 A.2 A.1 C.1 C.2 B.2 B.1 C.2 C.1"
        );
        assert_eq!(d.type_of(&Letter::new("C.2").unwrap()), Some(LetterType::B));
        assert_eq!(d.type_of(&Letter::new("B.1").unwrap()), Some(LetterType::A));
        assert!(is_fixed(&d, 2));
        assert_eq!(r_dot(&w("ABAB|ab"), 1).unwrap(), w("ABAB|ab"));
    }

    #[test]
    fn families() {
        let g = gen_gamma_pq(1, 1).unwrap();
        assert_eq!(g.canonical_relabel().to_string(), "ABAB|aa");
        assert_eq!(gen_gamma_pq(1, 2).unwrap().canonical_relabel().to_string(), "ABCACB|aaa");
        assert_eq!(u_polynomial(&gen_gamma_pq(2, 3).unwrap()).to_string(), "2t^3 - 3t^2");
        let a = gen_alpha_n(5).unwrap();
        assert_eq!(a.to_string(), "X0 X4 X1 X0 X2 X1 X3 X2 X4 X3 | X0=a X1=a X2=a X3=a X4=b");
        assert!(n_values(&a).values().all(|&v| v == 0));
        assert!(gen_alpha_n(2).is_err());
        assert!(gen_gamma_pq(0, 1).is_err());
    }

    #[test]
    fn preimages_cover_back() {
        assert_eq!(uncover_preimage(&w("0"), 2).unwrap().to_string(), "0");
        for (word, r) in [("ABAB|aa", 2), ("ABCACB|aaa", 0), ("ABCACB|aaa", 3)] {
            let alpha = w(word);
            let beta = uncover_preimage(&alpha, r).unwrap();
            assert!(u_polynomial(&beta).is_zero(), "{beta}");
            assert_eq!(covering(&beta, r), alpha);
        }
        assert_eq!(uncover_preimage(&w("ABAB|aa"), 2).unwrap().rank(), 4);
        assert!(uncover_preimage(&w("ABAB|aa"), 1).is_err());
    }

    #[test]
    fn m_bound_and_chain() {
        assert_eq!(m_upper(&w("0")), 0);
        assert_eq!(m_upper(&w("ABCACB|aaa")), 3);
        assert_eq!(m_upper(&gen_gamma_pq(2, 4).unwrap()), 5);
        assert_eq!(m_upper(&compose(&w("AA|a"), &gen_gamma_pq(1, 1).unwrap())), 2);
        let chain = covering_chain(&w("ABCACB|aaa"), 2);
        let texts: Vec<String> = chain.iter().map(|c| c.to_string()).collect();
        assert_eq!(texts, vec!["ABCACB|aaa", "AA|a"]);
    }
}
