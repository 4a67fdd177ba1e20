//! Based matrices of composites and cables computed from their factors.

use crate::error::{Error, Result};
use crate::invariants::based::{BasedMatrix, Element};
use crate::nanoword::LetterType;

/// Block form of `M(αβ)` from `M(α)` and `M(β)`. `types_alpha[i]` is the
/// type of element `i + 1` of `m_alpha`, likewise for `β`.
///
/// The off-diagonal block `D(W, X)` is `0`, `-n(X)`, `n(W)` or `n(W) - n(X)`
/// for the type pairs `(a,a)`, `(b,a)`, `(a,b)`, `(b,b)`.
pub fn composite_based_matrix(
    m_alpha: &BasedMatrix,
    types_alpha: &[LetterType],
    m_beta: &BasedMatrix,
    types_beta: &[LetterType],
) -> Result<BasedMatrix> {
    let ka = m_alpha.size() - 1;
    let kb = m_beta.size() - 1;
    if types_alpha.len() < ka {
        return Err(Error::MissingTypeData(types_alpha.len() + 1));
    }
    if types_beta.len() < kb {
        return Err(Error::MissingTypeData(ka + types_beta.len() + 1));
    }
    let size = 1 + ka + kb;
    let mut b = vec![vec![0i64; size]; size];
    for g in 0..=ka {
        for h in 0..=ka {
            b[g][h] = m_alpha.entry(g, h);
        }
    }
    for g in 0..=kb {
        for h in 0..=kb {
            let (gg, hh) = (if g == 0 { 0 } else { ka + g }, if h == 0 { 0 } else { ka + h });
            b[gg][hh] = m_beta.entry(g, h);
        }
    }
    for w in 1..=ka {
        let nw = m_alpha.entry(w, 0);
        for x in 1..=kb {
            let nx = m_beta.entry(x, 0);
            let d = match (types_alpha[w - 1], types_beta[x - 1]) {
                (LetterType::A, LetterType::A) => 0,
                (LetterType::B, LetterType::A) => -nx,
                (LetterType::A, LetterType::B) => nw,
                (LetterType::B, LetterType::B) => nw - nx,
            };
            b[w][ka + x] = d;
            b[ka + x][w] = -d;
        }
    }
    let mut elements: Vec<Element> = m_alpha.elements().to_vec();
    for e in &m_beta.elements()[1..] {
        let mut name = e.name().to_string();
        while elements.iter().any(|f| f.name() == name) {
            name.push('\'');
        }
        elements.push(match e {
            Element::Letter(l) if l.as_str() == name => e.clone(),
            _ => Element::Synthetic(name),
        });
    }
    BasedMatrix::new(elements, b)
}

/// The `n`-cable based matrix built from `P`: `n²` elements `X.i.j` per
/// non-special `X` and `n - 1` elements `C.k`, with
///
/// * `b(C.i, C.j) = 0`,
/// * `b(A.i.j, C.k) = (n - 1 - k) n(A)`,
/// * `b(A.i.j, B.k.l) = b(A, B) + (l - k) n(A) - (j - i) n(B)`, differences read in `0..n`,
/// * `n(A.i.j) = n·n(A)` and `n(C.k) = 0`.
pub fn cable_reduced_based_matrix(p: &BasedMatrix, n: usize) -> Result<BasedMatrix> {
    if n == 0 {
        return Err(Error::OutOfRange("cable needs n >= 1".into()));
    }
    let k = p.size() - 1;
    let nn = n as i64;
    let size = 1 + k * n * n + (n - 1);
    let idx = |a: usize, i: usize, j: usize| 1 + (a * n + i) * n + j;
    let join = |c: usize| 1 + k * n * n + c;
    let diff = |from: usize, to: usize| ((to + n - from) % n) as i64;
    let border = |a: usize| p.entry(a + 1, 0);
    let mut b = vec![vec![0i64; size]; size];
    let mut elements = vec![Element::Special];
    for a in 0..k {
        for i in 0..n {
            for j in 0..n {
                elements.push(Element::Synthetic(format!("{}.{i}.{j}", p.elements()[a + 1])));
                let g = idx(a, i, j);
                b[g][0] = nn * border(a);
                b[0][g] = -b[g][0];
                for c in 0..n - 1 {
                    let v = (nn - 1 - c as i64) * border(a);
                    b[g][join(c)] = v;
                    b[join(c)][g] = -v;
                }
                for bl in 0..k {
                    for kk in 0..n {
                        for l in 0..n {
                            b[g][idx(bl, kk, l)] = p.entry(a + 1, bl + 1)
                                + diff(kk, l) * border(a)
                                - diff(i, j) * border(bl);
                        }
                    }
                }
            }
        }
    }
    elements.extend((0..n - 1).map(|c| Element::Synthetic(format!("C.{c}"))));
    BasedMatrix::new(elements, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::nanowords;
    use crate::invariants::based::{based_matrix, bm_isomorphic, reduce_to_primitive};
    use crate::nanoword::Nanoword;
    use crate::ops::{cable, compose};

    fn w(s: &str) -> Nanoword {
        s.parse().unwrap()
    }

    fn types_in_order(word: &Nanoword) -> Vec<LetterType> {
        word.alphabetical_order().iter().map(|&i| word.types()[i]).collect()
    }

    fn composite_of(a: &Nanoword, b: &Nanoword) -> BasedMatrix {
        composite_based_matrix(
            &based_matrix(a),
            &types_in_order(a),
            &based_matrix(b),
            &types_in_order(b),
        )
        .unwrap()
    }

    #[test]
    fn kishino_composite() {
        let d = w("ABAB|aa");
        let c = composite_of(&d, &d);
        assert_eq!(c.rows(), based_matrix(&w("ABABCDCD|aaaa")).rows());
    }

    #[test]
    fn composite_agrees_with_composition() {
        let small: Vec<Nanoword> = (0..=2).flat_map(nanowords).collect();
        for a in &small {
            for b in &small {
                let composed = based_matrix(&compose(a, b));
                assert_eq!(composite_of(a, b).rows(), composed.rows(), "{a} {b}");
            }
        }
    }

    #[test]
    fn trivial_factor() {
        let b = w("ABCACB|aaa");
        let c = composite_of(&w("0"), &b);
        assert_eq!(c.rows(), based_matrix(&b).rows());
        let missing = composite_based_matrix(&based_matrix(&b), &[], &BasedMatrix::trivial(), &[]);
        assert_eq!(missing, Err(Error::MissingTypeData(1)));
    }

    #[test]
    fn cable_formula_matches_cable_words() {
        for word in (1..=2).flat_map(nanowords) {
            for n in 2..=3 {
                let direct = based_matrix(&cable(&word, n).unwrap());
                let formula = cable_reduced_based_matrix(&based_matrix(&word), n).unwrap();
                assert!(bm_isomorphic(&direct, &formula), "{word} n={n}");
            }
        }
    }

    #[test]
    fn cable_of_trivial_matrix_reduces_away() {
        for n in 1..=4 {
            let q = cable_reduced_based_matrix(&BasedMatrix::trivial(), n).unwrap();
            assert_eq!(q.size(), n);
            assert_eq!(reduce_to_primitive(&q).primitive.size(), 1);
        }
        let p = based_matrix(&w("ABAB|ab"));
        assert_eq!(cable_reduced_based_matrix(&p, 1).unwrap().rows(), p.rows());
        assert!(cable_reduced_based_matrix(&p, 0).is_err());
    }
}
