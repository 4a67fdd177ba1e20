use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nanoword::{Letter, Nanoword};

/// Linking number of the letters with indices `x` and `y`.
pub(crate) fn link_indices(word: &Nanoword, x: usize, y: usize) -> i64 {
    if x == y {
        return 0;
    }
    let (x1, x2) = word.occurrences(x);
    let (y1, y2) = word.occurrences(y);
    let y1_inside = x1 < y1 && y1 < x2;
    let y2_inside = x1 < y2 && y2 < x2;
    if y1_inside == y2_inside {
        return 0;
    }
    let same = word.types()[x] == word.types()[y];
    // x first: pattern XYXY; otherwise YXYX
    match (x1 < y1, same) {
        (true, true) | (false, false) => 1,
        (true, false) | (false, true) => -1,
    }
}

pub fn linking_number(word: &Nanoword, a: &Letter, b: &Letter) -> Result<i64> {
    let x = word
        .index_of(a)
        .ok_or_else(|| Error::UnknownLetter(a.to_string()))?;
    let y = word
        .index_of(b)
        .ok_or_else(|| Error::UnknownLetter(b.to_string()))?;
    Ok(link_indices(word, x, y))
}

/// `n(X)` for every letter, indexed like [`Nanoword::letters`].
pub fn n_vector(word: &Nanoword) -> Vec<i64> {
    let rank = word.rank();
    let mut n = vec![0i64; rank];
    for x in 0..rank {
        for y in x + 1..rank {
            let l = link_indices(word, x, y);
            n[x] += l;
            n[y] -= l;
        }
    }
    n
}

pub fn n_values(word: &Nanoword) -> BTreeMap<Letter, i64> {
    word.letters()
        .iter()
        .cloned()
        .zip(n_vector(word))
        .collect()
}

/// Sparse integer polynomial `Σ_{k≥1} u_k t^k`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<(u32, i64)>", try_from = "Vec<(u32, i64)>")]
pub struct UPolynomial {
    coeffs: BTreeMap<u32, i64>,
}

impl UPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds from `(exponent, coefficient)` pairs; exponents must be at least 1.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, i64)>) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (k, c) in terms {
            if k == 0 {
                return Err(Error::OutOfRange("u-polynomial exponent 0".into()));
            }
            *coeffs.entry(k).or_insert(0) += c;
        }
        coeffs.retain(|_, c| *c != 0);
        Ok(UPolynomial { coeffs })
    }

    pub fn from_n_values(n: &[i64]) -> Self {
        let mut coeffs: BTreeMap<u32, i64> = BTreeMap::new();
        for &v in n {
            if v != 0 {
                *coeffs.entry(v.unsigned_abs() as u32).or_insert(0) += v.signum();
            }
        }
        coeffs.retain(|_, c| *c != 0);
        UPolynomial { coeffs }
    }

    pub fn coefficient(&self, k: u32) -> i64 {
        self.coeffs.get(&k).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> Vec<(u32, i64)> {
        self.coeffs.iter().map(|(&k, &c)| (k, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    /// `u'(1) = Σ k u_k`.
    pub fn derivative_at_one(&self) -> i64 {
        self.coeffs.iter().map(|(&k, &c)| k as i64 * c).sum()
    }

    pub fn scaled(&self, factor: i64) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(&k, &c)| (k, c * factor)))
            .expect("exponents stay positive")
    }

    /// `u(t^n)`.
    pub fn substitute_power(&self, n: u32) -> Self {
        UPolynomial {
            coeffs: self.coeffs.iter().map(|(&k, &c)| (k * n, c)).collect(),
        }
    }
}

impl Add for &UPolynomial {
    type Output = UPolynomial;

    fn add(self, rhs: &UPolynomial) -> UPolynomial {
        UPolynomial::from_terms(self.terms().into_iter().chain(rhs.terms()))
            .expect("exponents stay positive")
    }
}

impl From<UPolynomial> for Vec<(u32, i64)> {
    fn from(u: UPolynomial) -> Self {
        u.terms()
    }
}

impl TryFrom<Vec<(u32, i64)>> for UPolynomial {
    type Error = Error;

    fn try_from(terms: Vec<(u32, i64)>) -> Result<Self> {
        UPolynomial::from_terms(terms)
    }
}

impl fmt::Display for UPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&k, &c)) in self.coeffs.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.unsigned_abs();
            if abs != 1 {
                write!(f, "{abs}")?;
            }
            f.write_str("t")?;
            if k != 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

pub fn u_polynomial(word: &Nanoword) -> UPolynomial {
    UPolynomial::from_n_values(&n_vector(word))
}

/// Whether `u` is the u-polynomial of some virtual string: `u(0) = u'(1) = 0`.
pub fn u_realizable(u: &UPolynomial) -> bool {
    u.derivative_at_one() == 0
}
