//! Bounded homotopy search over shift-orbit classes of nanowords.
//!
//! States are orbit-canonical words. An edge records the rotation of the
//! parent at which a move was applied, so every path can be replayed on the
//! actual start word as shifts plus moves.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::distinguish::{distinguish, DistinguishReport, Verdict};
use crate::moves::{apply_move, find_sites, inverse_site, MoveKind, MoveSite, MoveTrace};
use crate::nanoword::Nanoword;
use crate::ops::{covering, covering_chain, is_fixed, m_upper};

/// Depth of covering recursion used when `equivalent_bounded` asks for invariants.
const DISTINGUISH_DEPTH: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SearchBudget {
    pub max_rank_increase: usize,
    pub max_states: usize,
    pub max_depth: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_rank_increase: 2,
            max_states: 200_000,
            max_depth: 64,
        }
    }
}

impl fmt::Display for SearchBudget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "inc={},states={},depth={}",
            self.max_rank_increase, self.max_states, self.max_depth
        )
    }
}

/// `inc=2,states=200000,depth=64`; any subset of the keys, the rest default.
impl FromStr for SearchBudget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut budget = SearchBudget::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let bad = || Error::InvalidBudget(part.to_string());
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            let value: usize = value.trim().parse().map_err(|_| bad())?;
            match key.trim() {
                "inc" | "max_rank_increase" => budget.max_rank_increase = value,
                "states" | "max_states" => budget.max_states = value,
                "depth" | "max_depth" => budget.max_depth = value,
                _ => return Err(bad()),
            }
        }
        Ok(budget)
    }
}

#[derive(Debug, Clone)]
struct Link {
    parent: Option<Nanoword>,
    rotation: usize,
    site: Option<MoveSite>,
}

type Frontier = BinaryHeap<Reverse<(usize, usize, Nanoword)>>;

/// Best-first exploration from one word, ordered by (rank, depth, word).
struct Explorer<'m> {
    budget: SearchBudget,
    moves: &'m [MoveKind],
    rank_limit: usize,
    visited: HashMap<Nanoword, Link>,
    frontier: Frontier,
}

impl<'m> Explorer<'m> {
    fn new(start: &Nanoword, budget: SearchBudget, moves: &'m [MoveKind]) -> Self {
        let root = start.orbit_canonical();
        let mut visited = HashMap::new();
        visited.insert(
            root.clone(),
            Link {
                parent: None,
                rotation: 0,
                site: None,
            },
        );
        let mut frontier = BinaryHeap::new();
        frontier.push(Reverse((root.rank(), 0, root)));
        Explorer {
            budget,
            moves,
            rank_limit: start.rank() + budget.max_rank_increase,
            visited,
            frontier,
        }
    }

    fn exhausted(&self) -> bool {
        self.frontier.is_empty() || self.visited.len() >= self.budget.max_states
    }

    /// Expands the best frontier state; returns the states discovered.
    fn step(&mut self) -> Vec<Nanoword> {
        let Some(Reverse((_, depth, state))) = self.frontier.pop() else {
            return Vec::new();
        };
        if depth >= self.budget.max_depth {
            return Vec::new();
        }
        let mut found = Vec::new();
        for (rotation, site, next) in successors(&state, self.moves, self.rank_limit) {
            if self.visited.len() >= self.budget.max_states {
                break;
            }
            if self.visited.contains_key(&next) {
                continue;
            }
            self.visited.insert(
                next.clone(),
                Link {
                    parent: Some(state.clone()),
                    rotation,
                    site: Some(site),
                },
            );
            self.frontier.push(Reverse((next.rank(), depth + 1, next.clone())));
            found.push(next);
        }
        found
    }

    /// The `(rotation, site)` edges from the root to `target`.
    fn path(&self, target: &Nanoword) -> Vec<(usize, MoveSite)> {
        let mut edges = Vec::new();
        let mut current = target.clone();
        while let Some(link) = self.visited.get(&current) {
            match (&link.parent, &link.site) {
                (Some(parent), Some(site)) => {
                    edges.push((link.rotation, site.clone()));
                    current = parent.clone();
                }
                _ => break,
            }
        }
        edges.reverse();
        edges
    }

    fn best(&self) -> Nanoword {
        self.visited
            .keys()
            .min_by(|a, b| (a.rank(), *a).cmp(&(b.rank(), *b)))
            .expect("the root is always visited")
            .clone()
    }
}

/// Every homotopy move, derived moves included (shifts are implicit in the states).
pub const ALL_MOVES: [MoveKind; 10] = [
    MoveKind::H1Minus,
    MoveKind::H2Minus,
    MoveKind::H2aMinus,
    MoveKind::H3,
    MoveKind::H3a,
    MoveKind::H3b,
    MoveKind::H3c,
    MoveKind::H1Plus,
    MoveKind::H2Plus,
    MoveKind::H2aPlus,
];

/// Only the defining moves H1, H2 and H3.
pub const BASIC_MOVES: [MoveKind; 5] = [
    MoveKind::H1Minus,
    MoveKind::H2Minus,
    MoveKind::H3,
    MoveKind::H1Plus,
    MoveKind::H2Plus,
];

/// Moves out of an orbit-canonical state: rank-lowering and rank-preserving
/// moves at every rotation, letter-adding moves (within `rank_limit`) at
/// rotation 0.
fn successors(
    state: &Nanoword,
    moves: &[MoveKind],
    rank_limit: usize,
) -> Vec<(usize, MoveSite, Nanoword)> {
    let mut out = Vec::new();
    let rotations = state.len().max(1);
    for rotation in 0..rotations {
        let rotated = state.rotated(rotation);
        for &kind in moves.iter().filter(|k| !k.is_adding() && !k.is_shift()) {
            for site in find_sites(&rotated, kind) {
                let next = apply_move(&rotated, &site).expect("found sites apply");
                out.push((rotation, site, next.orbit_canonical()));
            }
        }
    }
    for &kind in moves.iter().filter(|k| k.is_adding()) {
        if state.rank() + kind.rank_delta().unsigned_abs() as usize > rank_limit {
            continue;
        }
        for site in find_sites(state, kind) {
            let next = apply_move(state, &site).expect("found sites apply");
            out.push((0, site, next.orbit_canonical()));
        }
    }
    out
}

/// Appends shifts taking `current` to `rotated(k)`, using inverse shifts
/// when that is shorter.
fn push_rotation(trace: &mut MoveTrace, current: &mut Nanoword, k: usize) -> Result<()> {
    let len = current.len();
    if len == 0 || k.is_multiple_of(len) {
        return Ok(());
    }
    let k = k % len;
    let (kind, count) = if k <= len / 2 {
        (MoveKind::Shift, k)
    } else {
        (MoveKind::ShiftInv, len - k)
    };
    for _ in 0..count {
        let pos = if kind == MoveKind::Shift { 0 } else { len - 1 };
        push_step(trace, current, MoveSite::new(kind, vec![pos]))?;
    }
    Ok(())
}

fn push_step(trace: &mut MoveTrace, current: &mut Nanoword, site: MoveSite) -> Result<()> {
    *current = apply_move(current, &site)?;
    trace.steps.push(site);
    Ok(())
}

/// Normalizes `current` to its orbit-canonical rotation.
fn push_normalization(trace: &mut MoveTrace, current: &mut Nanoword) -> Result<()> {
    let (_, k) = current.orbit_canonical_with_rotation();
    push_rotation(trace, current, k)
}

/// Replays a search path on `start`; the final word is isomorphic to the
/// path's target state.
fn replay_path(start: &Nanoword, path: &[(usize, MoveSite)]) -> Result<(MoveTrace, Nanoword)> {
    let mut trace = MoveTrace::new(start.clone());
    let mut current = start.clone();
    push_normalization(&mut trace, &mut current)?;
    for (rotation, site) in path {
        push_rotation(&mut trace, &mut current, *rotation)?;
        push_step(&mut trace, &mut current, site.clone())?;
        push_normalization(&mut trace, &mut current)?;
    }
    Ok((trace, current))
}

/// Cuts every detour that returns to an identical word and merges each run
/// of shifts into the shortest equivalent rotation.
fn tidy(trace: MoveTrace) -> Result<MoveTrace> {
    let words = trace.replay()?;
    let mut last = HashMap::new();
    for (i, w) in words.iter().enumerate() {
        last.insert(w, i);
    }
    let mut kept = Vec::new();
    let mut i = last[&words[0]];
    while i < trace.steps.len() {
        kept.push(trace.steps[i].clone());
        i = last[&words[i + 1]];
    }
    let mut out = MoveTrace::new(trace.start.clone());
    let mut current = trace.start.clone();
    let mut pending = 0isize;
    for site in kept {
        if site.kind.is_shift() {
            pending += if site.kind == MoveKind::Shift { 1 } else { -1 };
            continue;
        }
        flush_rotation(&mut out, &mut current, &mut pending)?;
        push_step(&mut out, &mut current, site)?;
    }
    flush_rotation(&mut out, &mut current, &mut pending)?;
    Ok(out)
}

fn flush_rotation(trace: &mut MoveTrace, current: &mut Nanoword, pending: &mut isize) -> Result<()> {
    let len = current.len() as isize;
    if len > 0 {
        push_rotation(trace, current, pending.rem_euclid(len) as usize)?;
    }
    *pending = 0;
    Ok(())
}

/// Searches for a lowest-rank word homotopic to `α` within `budget`.
/// Returns the orbit-canonical word found and a trace from `α` to a word
/// isomorphic to it.
pub fn reduce_bounded(alpha: &Nanoword, budget: SearchBudget) -> (Nanoword, MoveTrace) {
    reduce_with_moves(alpha, budget, &ALL_MOVES)
}

/// [`reduce_bounded`] restricted to the given move kinds.
pub fn reduce_with_moves(
    alpha: &Nanoword,
    budget: SearchBudget,
    moves: &[MoveKind],
) -> (Nanoword, MoveTrace) {
    let mut explorer = Explorer::new(alpha, budget, moves);
    let mut best = explorer.best();
    while best.rank() > 0 && !explorer.exhausted() {
        for state in explorer.step() {
            if (state.rank(), &state) < (best.rank(), &best) {
                best = state;
            }
        }
    }
    let trace = replay_path(alpha, &explorer.path(&best))
        .and_then(|(trace, _)| tidy(trace))
        .expect("search paths replay");
    (best, trace)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    Homotopic(MoveTrace),
    Distinct(DistinguishReport),
    Unknown,
}

impl Equivalence {
    pub fn label(&self) -> &'static str {
        match self {
            Equivalence::Homotopic(_) => "homotopic",
            Equivalence::Distinct(_) => "distinct",
            Equivalence::Unknown => "unknown",
        }
    }
}

/// Whether `trace` starts at `α` and ends at a word isomorphic to `β`.
pub fn trace_connects(trace: &MoveTrace, alpha: &Nanoword, beta: &Nanoword) -> bool {
    trace.start == *alpha
        && trace
            .end()
            .map(|end| end.canonical_relabel() == beta.canonical_relabel())
            .unwrap_or(false)
}

/// Decides homotopy within `budget`: a verified trace, separating
/// invariants, or neither.
pub fn equivalent_bounded(alpha: &Nanoword, beta: &Nanoword, budget: SearchBudget) -> Equivalence {
    let report = distinguish(alpha, beta, DISTINGUISH_DEPTH);
    if report.verdict == Verdict::Distinct {
        return Equivalence::Distinct(report);
    }
    connect_with_moves(alpha, beta, budget, &ALL_MOVES)
        .map_or(Equivalence::Unknown, Equivalence::Homotopic)
}

/// Meet-in-the-middle search for a verified trace from `α` to `β` using only
/// `moves` (plus shifts). Invariants are not consulted.
pub fn connect_with_moves(
    alpha: &Nanoword,
    beta: &Nanoword,
    budget: SearchBudget,
    moves: &[MoveKind],
) -> Option<MoveTrace> {
    let verified = |trace: Result<MoveTrace>| match trace {
        Ok(trace) if trace_connects(&trace, alpha, beta) => Some(trace),
        _ => None,
    };
    if alpha.orbit_canonical() == beta.orbit_canonical() {
        return verified(meet_trace(alpha, beta, &[], &[]));
    }
    let half = SearchBudget {
        max_states: (budget.max_states / 2).max(1),
        ..budget
    };
    let mut from_alpha = Explorer::new(alpha, half, moves);
    let mut from_beta = Explorer::new(beta, half, moves);
    loop {
        let done_a = from_alpha.exhausted();
        let done_b = from_beta.exhausted();
        if done_a && done_b {
            return None;
        }
        // grow the smaller side first
        let grow_alpha = !done_a && (done_b || from_alpha.visited.len() <= from_beta.visited.len());
        let (grower, other) = if grow_alpha {
            (&mut from_alpha, &from_beta)
        } else {
            (&mut from_beta, &from_alpha)
        };
        let meet = grower
            .step()
            .into_iter()
            .find(|state| other.visited.contains_key(state));
        if let Some(meet) = meet {
            let trace = meet_trace(
                alpha,
                beta,
                &from_alpha.path(&meet),
                &from_beta.path(&meet),
            );
            return verified(trace);
        }
    }
}

/// Joins the path from `α` to the meeting state with the reversed path from `β`.
fn meet_trace(
    alpha: &Nanoword,
    beta: &Nanoword,
    path_alpha: &[(usize, MoveSite)],
    path_beta: &[(usize, MoveSite)],
) -> Result<MoveTrace> {
    let (mut trace, mut current) = replay_path(alpha, path_alpha)?;
    let (beta_trace, _) = replay_path(beta, path_beta)?;
    let words = beta_trace.replay()?;
    for (i, site) in beta_trace.steps.iter().enumerate().rev() {
        let mut inverse = inverse_site(&words[i], site)?;
        for fresh in &mut inverse.fresh {
            fresh.name = None;
        }
        push_step(&mut trace, &mut current, inverse)?;
    }
    tidy(trace)
}

/// The `r`-covering map on orbit-canonical words; `target[i]` is the node
/// that node `i` covers onto.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringGraph {
    pub r: u32,
    pub nodes: Vec<Nanoword>,
    pub target: Vec<usize>,
}

/// Builds the graph on the orbit classes of `words`, closed under covering.
pub fn covering_graph(words: impl IntoIterator<Item = Nanoword>, r: u32) -> CoveringGraph {
    let mut edges: BTreeMap<Nanoword, Nanoword> = BTreeMap::new();
    let mut pending: Vec<Nanoword> = words.into_iter().map(|w| w.orbit_canonical()).collect();
    while let Some(word) = pending.pop() {
        if edges.contains_key(&word) {
            continue;
        }
        let image = covering(&word, r).orbit_canonical();
        if !edges.contains_key(&image) {
            pending.push(image.clone());
        }
        edges.insert(word, image);
    }
    let nodes: Vec<Nanoword> = edges.keys().cloned().collect();
    let index: HashMap<&Nanoword, usize> = nodes.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let target = nodes.iter().map(|w| index[&edges[w]]).collect();
    CoveringGraph { r, nodes, target }
}

impl CoveringGraph {
    /// Nodes that cover onto themselves.
    pub fn roots(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.target[i] == i).collect()
    }

    /// Number of weakly connected components.
    pub fn components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.nodes.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, &t) in self.target.iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, t));
            parent[a] = b;
        }
        (0..self.nodes.len()).filter(|&i| find(&mut parent, i) == i).count()
    }

    /// Checks that every component is a tree whose only cycle is a loop at
    /// its root. Returns the offending node on failure.
    pub fn check_shape(&self) -> std::result::Result<(), Nanoword> {
        let n = self.nodes.len();
        for start in 0..n {
            // walk until a node repeats; the repeated node must be a fixed point
            let mut seen = vec![false; n];
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.target[x];
            }
            if self.target[x] != x {
                return Err(self.nodes[x].clone());
            }
        }
        if self.components() != self.roots().len() {
            return Err(self.nodes[0].clone());
        }
        Ok(())
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph covering {\n");
        for (i, node) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{node}\"];\n"));
        }
        for (i, &t) in self.target.iter().enumerate() {
            out.push_str(&format!("  n{i} -> n{t} [label=\"r={}\"];\n", self.r));
        }
        out.push_str("}\n");
        out
    }
}

/// Covering-derived quantities. Heights are bracketed: word-level iteration
/// gives the upper bound, invariant separations of consecutive coverings the
/// lower one, and a homotopy between consecutive coverings lowers the upper.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverStats {
    pub m_upper: u32,
    pub height_r_lower: usize,
    pub height_r_upper: usize,
    pub base_r_word: Nanoword,
    pub base_r_reduced: Nanoword,
    pub fixed: bool,
}

pub fn cover_stats(alpha: &Nanoword, r: u32, budget: SearchBudget) -> CoverStats {
    let chain = covering_chain(alpha, r);
    let mut upper = chain.len() - 1;
    let mut lower = 0;
    for k in 0..upper {
        match equivalent_bounded(&chain[k], &chain[k + 1], budget) {
            Equivalence::Homotopic(_) => {
                upper = k;
                break;
            }
            Equivalence::Distinct(_) => lower = k + 1,
            Equivalence::Unknown => {}
        }
    }
    let base = chain[upper].clone();
    let (reduced, _) = reduce_bounded(&base, budget);
    CoverStats {
        m_upper: m_upper(alpha),
        height_r_lower: lower,
        height_r_upper: upper,
        base_r_word: base,
        base_r_reduced: reduced,
        fixed: is_fixed(alpha, r),
    }
}
