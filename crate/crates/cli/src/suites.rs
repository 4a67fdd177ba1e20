use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use vstring::enumerate::orbit_representatives_up_to;
use vstring::invariants::{
    based_matrix, bm_isomorphic, composite_based_matrix, primitive_based_matrix, rho,
    u_polynomial,
};
use vstring::moves::{apply_move, find_sites};
use vstring::ops::{cable, compose, covering};
use vstring::{Letter, LetterType, MoveKind, Nanoword};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    UCable,
    CoverCableCommute,
    CompositeBm,
    RhoBounds,
    MoveInvariance,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::UCable,
        Suite::CoverCableCommute,
        Suite::CompositeBm,
        Suite::RhoBounds,
        Suite::MoveInvariance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::UCable => "u-cable",
            Suite::CoverCableCommute => "cover-cable-commute",
            Suite::CompositeBm => "composite-bm",
            Suite::RhoBounds => "rho-bounds",
            Suite::MoveInvariance => "move-invariance",
        }
    }

    /// Failure descriptions for one word; `passed` counts the checks that held.
    fn check(self, word: &Nanoword, partners: &[Nanoword], passed: &mut usize) -> Vec<String> {
        let mut failures = Vec::new();
        let mut expect = |ok: bool, what: &dyn Fn() -> String| {
            if ok {
                *passed += 1;
            } else {
                failures.push(what());
            }
        };
        match self {
            Suite::UCable => {
                let u = u_polynomial(word);
                for n in [2usize, 3] {
                    let got = u_polynomial(&cable(word, n).expect("n >= 1"));
                    let want = u.substitute_power(n as u32).scaled((n * n) as i64);
                    expect(got == want, &|| format!("u(cable({word}, {n})) = {got}, expected {want}"));
                }
            }
            Suite::CoverCableCommute => {
                for (n, r) in [(2usize, 2u32), (2, 4), (3, 2), (3, 3), (2, 0), (3, 0)] {
                    let k = if r == 0 { 0 } else { r / gcd(n as u32, r) };
                    let lhs = covering(&cable(word, n).expect("n >= 1"), r).canonical_relabel();
                    let rhs = cable(&covering(word, k), n).expect("n >= 1").canonical_relabel();
                    expect(lhs == rhs, &|| format!("{word}: cover_{r}(cable_{n}) = {lhs}, cable_{n}(cover_{k}) = {rhs}"));
                }
            }
            Suite::CompositeBm => {
                for other in partners {
                    let ab = compose(word, other);
                    let block = composite_based_matrix(
                        &based_matrix(word),
                        &types_in_order(word),
                        &based_matrix(other),
                        &types_in_order(other),
                    )
                    .expect("types cover every element");
                    expect(block.rows() == based_matrix(&ab).rows(), &|| {
                        format!("composite block differs from M({word} · {other})")
                    });
                    let sum = &u_polynomial(word) + &u_polynomial(other);
                    expect(u_polynomial(&ab) == sum, &|| format!("u({word} · {other}) is not additive"));
                }
            }
            Suite::RhoBounds => {
                let r = rho(word);
                for n in [2usize, 3] {
                    let got = rho(&cable(word, n).expect("n >= 1"));
                    let bound = n * n * r + usize::from(n % 2 == 0);
                    expect(got <= bound, &|| format!("ρ(cable({word}, {n})) = {got} > {bound}"));
                }
                expect(r <= word.rank(), &|| format!("ρ({word}) = {r} exceeds the rank"));
            }
            Suite::MoveInvariance => {
                let u = u_polynomial(word);
                let p = primitive_based_matrix(word);
                for kind in MoveKind::ALL {
                    for site in find_sites(word, kind) {
                        let next = apply_move(word, &site).expect("found sites apply");
                        let ok = u_polynomial(&next) == u
                            && bm_isomorphic(&primitive_based_matrix(&next), &p);
                        expect(ok, &|| format!("{word} changes under {site}"));
                    }
                }
            }
        }
        failures
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("unknown suite `{s}` (expected one of {})", names.join(", "))
            })
    }
}

pub struct SuiteReport {
    pub words: usize,
    pub passed: usize,
    pub failures: Vec<String>,
}

/// Runs `suite` over every shift-canonical word of rank at most `max_rank`
/// and `samples` seeded random words of rank `max_rank + 1`.
pub fn run_suite(suite: Suite, max_rank: usize, seed: u64, samples: usize) -> SuiteReport {
    let mut words = orbit_representatives_up_to(max_rank);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    words.extend((0..samples).map(|_| random_word(&mut rng, max_rank + 1)));
    let partners = orbit_representatives_up_to(max_rank.min(2));
    let results: Vec<(usize, Vec<String>)> = words
        .par_iter()
        .map(|word| {
            let mut passed = 0;
            let failures = suite.check(word, &partners, &mut passed);
            (passed, failures)
        })
        .collect();
    SuiteReport {
        words: words.len(),
        passed: results.iter().map(|(p, _)| p).sum(),
        failures: results.into_iter().flat_map(|(_, f)| f).collect(),
    }
}

fn random_word(rng: &mut ChaCha8Rng, rank: usize) -> Nanoword {
    let mut seq: Vec<usize> = (0..rank).flat_map(|i| [i, i]).collect();
    seq.shuffle(rng);
    let letters: Vec<Letter> = seq.iter().map(|&i| Letter::canonical(i)).collect();
    let types: HashMap<Letter, LetterType> = (0..rank)
        .map(|i| {
            let ty = if rng.gen_bool(0.5) { LetterType::A } else { LetterType::B };
            (Letter::canonical(i), ty)
        })
        .collect();
    Nanoword::new(&letters, &types)
        .expect("shuffled pairs form a Gauss word")
        .canonical_relabel()
}

fn types_in_order(word: &Nanoword) -> Vec<LetterType> {
    word.alphabetical_order().iter().map(|&i| word.types()[i]).collect()
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
