//! Separating two words by their invariants, recursively through coverings.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::invariants::based::{
    based_matrix, find_isomorphism, primitive_based_matrix, BasedMatrix, MatrixView,
};
use crate::invariants::linking::{n_values, u_polynomial, UPolynomial};
use crate::nanoword::Nanoword;
use crate::ops::covering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Distinct,
    SameWordClass,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Distinct => "distinct",
            Verdict::SameWordClass => "same-word-class",
            Verdict::Unknown => "unknown",
        })
    }
}

/// One compared invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub invariant: String,
    pub alpha: String,
    pub beta: String,
    pub differs: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistinguishReport {
    pub verdict: Verdict,
    pub evidence: Vec<Evidence>,
}

impl DistinguishReport {
    /// The first invariant that separates the words, if any.
    pub fn witness(&self) -> Option<&Evidence> {
        self.evidence.iter().find(|e| e.differs)
    }
}

fn rows_text(m: &BasedMatrix) -> String {
    let rows: Vec<String> = m
        .rows()
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

/// Compares u-polynomials, `ρ` and primitive based matrices, then the same
/// for `r`-coverings (`r ∈ {0, 2, …, max rank}`) down to `depth` levels.
pub fn distinguish(alpha: &Nanoword, beta: &Nanoword, depth: usize) -> DistinguishReport {
    let (ca, cb) = (alpha.orbit_canonical(), beta.orbit_canonical());
    if ca == cb {
        return DistinguishReport {
            verdict: Verdict::SameWordClass,
            evidence: vec![Evidence {
                invariant: "orbit-canonical".into(),
                alpha: ca.to_string(),
                beta: cb.to_string(),
                differs: false,
            }],
        };
    }
    let mut evidence = Vec::new();
    let differs = compare(&ca, &cb, "", depth, &mut evidence);
    DistinguishReport {
        verdict: if differs { Verdict::Distinct } else { Verdict::Unknown },
        evidence,
    }
}

fn compare(
    alpha: &Nanoword,
    beta: &Nanoword,
    prefix: &str,
    depth: usize,
    evidence: &mut Vec<Evidence>,
) -> bool {
    let mut record = |name: &str, a: String, b: String, differs: bool| {
        evidence.push(Evidence {
            invariant: format!("{prefix}{name}"),
            alpha: a,
            beta: b,
            differs,
        });
        differs
    };
    let (ua, ub) = (u_polynomial(alpha), u_polynomial(beta));
    if record("u", ua.to_string(), ub.to_string(), ua != ub) {
        return true;
    }
    let (pa, pb) = (primitive_based_matrix(alpha), primitive_based_matrix(beta));
    let (ra, rb) = (pa.size() - 1, pb.size() - 1);
    if record("rho", ra.to_string(), rb.to_string(), ra != rb) {
        return true;
    }
    match find_isomorphism(&pa, &pb) {
        Some(f) => {
            // β's matrix listed in the order matched to α's elements
            let aligned = pb.reordered(&f);
            record("primitive", rows_text(&pa), rows_text(&aligned), false);
        }
        None => {
            record("primitive", rows_text(&pa), rows_text(&pb), true);
            return true;
        }
    }
    if depth == 0 {
        return false;
    }
    let max_rank = alpha.rank().max(beta.rank()) as u32;
    let radii = std::iter::once(0).chain(2..=max_rank);
    for r in radii {
        let (ca, cb) = (covering(alpha, r).orbit_canonical(), covering(beta, r).orbit_canonical());
        if ca == *alpha && cb == *beta {
            continue;
        }
        if ca == cb {
            continue;
        }
        if compare(&ca, &cb, &format!("{prefix}cover{r}."), depth - 1, evidence) {
            return true;
        }
    }
    false
}

/// Everything `compute` reports for one word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    pub word: String,
    pub rank: usize,
    pub n_values: BTreeMap<String, i64>,
    pub u_polynomial: UPolynomial,
    pub based_matrix: MatrixView,
    pub primitive: MatrixView,
    pub rho: usize,
}

impl InvariantBundle {
    pub fn of(word: &Nanoword) -> Self {
        let m = based_matrix(word);
        let p = crate::invariants::based::reduce_to_primitive(&m).primitive;
        InvariantBundle {
            word: word.to_string(),
            rank: word.rank(),
            n_values: n_values(word)
                .into_iter()
                .map(|(l, v)| (l.to_string(), v))
                .collect(),
            u_polynomial: u_polynomial(word),
            based_matrix: m.view(),
            rho: p.size() - 1,
            primitive: p.view(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::{gen_gamma_pq, r_dot};

    fn w(s: &str) -> Nanoword {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_versus_gamma() {
        let r = distinguish(&w("0"), &gen_gamma_pq(2, 3).unwrap(), 1);
        assert_eq!(r.verdict, Verdict::Distinct);
        assert_eq!(r.witness().unwrap().invariant, "u");
    }

    #[test]
    fn kishino_is_nontrivial() {
        let r = distinguish(&w("0"), &w("ABABCDCD|aaaa"), 2);
        assert_eq!(r.verdict, Verdict::Distinct);
        assert!(["rho", "primitive"].contains(&r.witness().unwrap().invariant.as_str()));
    }

    #[test]
    fn gamma_pp_are_separated() {
        let r = distinguish(&gen_gamma_pq(2, 2).unwrap(), &gen_gamma_pq(3, 3).unwrap(), 2);
        assert_eq!(r.verdict, Verdict::Distinct);
        let z = distinguish(&w("0"), &gen_gamma_pq(2, 2).unwrap(), 2);
        assert_eq!(z.verdict, Verdict::Distinct);
    }

    #[test]
    fn doubled_h3b_pair() {
        let a = r_dot(&w("ABCBDCAD|aabb"), 2).unwrap();
        let b = r_dot(&w("BACDBCDA|aabb"), 2).unwrap();
        let r = distinguish(&a, &b, 0);
        assert_eq!(r.verdict, Verdict::Distinct);
        assert_eq!(r.witness().unwrap().invariant, "primitive");
    }

    #[test]
    fn shifts_are_never_distinct() {
        for word in crate::enumerate::nanowords(3) {
            let r = distinguish(&word, &word.shift(), 2);
            assert_eq!(r.verdict, Verdict::SameWordClass);
        }
        let r = distinguish(&w("ABAB|aa"), &w("0"), 1);
        assert_ne!(r.verdict, Verdict::SameWordClass);
    }

    #[test]
    fn bundle_json_shape() {
        let b = InvariantBundle::of(&w("ABCACB|aaa"));
        let json = serde_json::to_value(&b).unwrap();
        assert_eq!(json["u_polynomial"], serde_json::json!([[1, -2], [2, 1]]));
        assert_eq!(json["based_matrix"]["order"], serde_json::json!(["s", "A", "B", "C"]));
        assert_eq!(json["rank"], 3);
    }
}
