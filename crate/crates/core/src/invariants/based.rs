//! Based matrices `(G, s, b)`, their reduction to primitive form, and isomorphism.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::linking::n_vector;
use crate::invariants::matrices::tail_head_by_index;
use crate::nanoword::{Letter, Nanoword};

/// An element of a based matrix. Element 0 is always [`Element::Special`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Special,
    Letter(Letter),
    Synthetic(String),
}

impl Element {
    pub fn name(&self) -> &str {
        match self {
            Element::Special => "s",
            Element::Letter(l) => l.as_str(),
            Element::Synthetic(s) => s,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite set with a special element and a skew-symmetric integer form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasedMatrix {
    elements: Vec<Element>,
    b: Vec<Vec<i64>>,
}

/// `{order, rows}` rendering used in JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixView {
    pub order: Vec<String>,
    pub rows: Vec<Vec<i64>>,
}

impl BasedMatrix {
    pub fn new(elements: Vec<Element>, b: Vec<Vec<i64>>) -> Result<Self> {
        let n = elements.len();
        if n == 0 || elements[0] != Element::Special {
            return Err(Error::MalformedMatrix("element 0 must be the special element".into()));
        }
        if elements[1..].contains(&Element::Special) {
            return Err(Error::MalformedMatrix("only one special element allowed".into()));
        }
        if b.len() != n || b.iter().any(|row| row.len() != n) {
            return Err(Error::MalformedMatrix(format!("expected a {n}x{n} matrix")));
        }
        for i in 0..n {
            for j in 0..n {
                if b[i][j] != -b[j][i] {
                    return Err(Error::MalformedMatrix(format!(
                        "not skew-symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(BasedMatrix { elements, b })
    }

    /// The based matrix `({s}, 0)`.
    pub fn trivial() -> Self {
        BasedMatrix {
            elements: vec![Element::Special],
            b: vec![vec![0]],
        }
    }

    /// Number of elements including `s`.
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.b
    }

    pub fn entry(&self, g: usize, h: usize) -> i64 {
        self.b[g][h]
    }

    /// `b(g, s)` for every non-special element.
    pub fn border(&self) -> Vec<i64> {
        self.b[1..].iter().map(|row| row[0]).collect()
    }

    pub fn position(&self, element: &Element) -> Option<usize> {
        self.elements.iter().position(|e| e == element)
    }

    /// The restriction to `keep` (which must start with 0).
    pub fn restrict(&self, keep: &[usize]) -> BasedMatrix {
        debug_assert_eq!(keep.first(), Some(&0));
        BasedMatrix {
            elements: keep.iter().map(|&i| self.elements[i].clone()).collect(),
            b: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.b[i][j]).collect())
                .collect(),
        }
    }

    /// Reorders elements; `order` is a permutation of `0..size` fixing 0.
    pub fn reordered(&self, order: &[usize]) -> BasedMatrix {
        self.restrict(order)
    }

    pub fn view(&self) -> MatrixView {
        MatrixView {
            order: self.elements.iter().map(|e| e.name().to_string()).collect(),
            rows: self.b.clone(),
        }
    }

    fn is_annihilating(&self, g: usize) -> bool {
        self.b[g].iter().all(|&v| v == 0)
    }

    fn is_core(&self, g: usize) -> bool {
        self.b[g] == self.b[0]
    }

    fn is_complementary(&self, g: usize, h: usize) -> bool {
        (0..self.size()).all(|k| self.b[g][k] + self.b[h][k] == self.b[0][k])
    }

    /// Non-special elements `g` with `2 b(g, ·) = b(s, ·)`.
    pub fn self_complementary(&self) -> Vec<usize> {
        (1..self.size())
            .filter(|&g| self.is_complementary(g, g))
            .collect()
    }

    /// Every reduction available right now: annihilating elements first,
    /// then core elements, then complementary pairs in lexicographic order.
    pub fn available_reductions(&self) -> Vec<ReductionStep> {
        let n = self.size();
        let mut out = Vec::new();
        for g in 1..n {
            if self.is_annihilating(g) {
                out.push(ReductionStep::single(ReductionKind::Annihilating, g));
            }
        }
        for g in 1..n {
            if self.is_core(g) {
                out.push(ReductionStep::single(ReductionKind::Core, g));
            }
        }
        for g in 1..n {
            for h in g + 1..n {
                if self.is_complementary(g, h) {
                    out.push(ReductionStep {
                        kind: ReductionKind::Complementary,
                        removed: vec![g, h],
                    });
                }
            }
        }
        out
    }

    /// The first reduction in the order of [`available_reductions`](Self::available_reductions).
    fn first_reduction(&self) -> Option<ReductionStep> {
        let n = self.size();
        if let Some(g) = (1..n).find(|&g| self.is_annihilating(g)) {
            return Some(ReductionStep::single(ReductionKind::Annihilating, g));
        }
        if let Some(g) = (1..n).find(|&g| self.is_core(g)) {
            return Some(ReductionStep::single(ReductionKind::Core, g));
        }
        for g in 1..n {
            for h in g + 1..n {
                if self.is_complementary(g, h) {
                    return Some(ReductionStep {
                        kind: ReductionKind::Complementary,
                        removed: vec![g, h],
                    });
                }
            }
        }
        None
    }

    pub fn is_primitive(&self) -> bool {
        self.first_reduction().is_none()
    }

    /// Removes the elements of `step` after checking its defining equations.
    pub fn apply_reduction(&self, step: &ReductionStep) -> Result<BasedMatrix> {
        let n = self.size();
        let in_range = step.removed.iter().all(|&g| g >= 1 && g < n);
        let valid = in_range
            && match (step.kind, step.removed.as_slice()) {
                (ReductionKind::Annihilating, &[g]) => self.is_annihilating(g),
                (ReductionKind::Core, &[g]) => self.is_core(g),
                (ReductionKind::Complementary, &[g, h]) => g != h && self.is_complementary(g, h),
                _ => false,
            };
        if !valid {
            return Err(Error::InvalidReduction);
        }
        let keep: Vec<usize> = (0..n).filter(|i| !step.removed.contains(i)).collect();
        Ok(self.restrict(&keep))
    }

    /// Isomorphism-invariant fingerprint: sorted `(b(g,s), sorted row)` keys.
    pub fn signature(&self) -> String {
        let mut keys: Vec<(i64, Vec<i64>)> = (1..self.size()).map(|g| self.row_key(g)).collect();
        keys.sort();
        let parts: Vec<String> = keys
            .iter()
            .map(|(n, row)| {
                let row: Vec<String> = row.iter().map(i64::to_string).collect();
                format!("{n}:{}", row.join(","))
            })
            .collect();
        format!("{}[{}]", self.size() - 1, parts.join(";"))
    }

    fn row_key(&self, g: usize) -> (i64, Vec<i64>) {
        let mut row = self.b[g].clone();
        row.sort_unstable();
        (self.b[g][0], row)
    }
}

impl fmt::Display for BasedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.elements.iter().map(Element::name).collect();
        writeln!(f, "[{}]", names.join(" "))?;
        for row in &self.b {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
            writeln!(f, "{}", cells.join(""))?;
        }
        Ok(())
    }
}

/// `M(α)`: elements `s` then the letters in alphabetical order,
/// `b(g, s) = n(g)` and `B = T - H + T Hᵗ - H Tᵗ`.
pub fn based_matrix(word: &Nanoword) -> BasedMatrix {
    let order = word.alphabetical_order();
    let rank = order.len();
    let (t, h) = tail_head_by_index(word);
    let n = n_vector(word);
    let size = rank + 1;
    let mut b = vec![vec![0i64; size]; size];
    for (gi, &g) in order.iter().enumerate() {
        b[gi + 1][0] = n[g];
        b[0][gi + 1] = -n[g];
        for (hi, &hh) in order.iter().enumerate() {
            let mut v = t[g][hh] as i64 - h[g][hh] as i64;
            for k in 0..rank {
                v += (t[g][k] * h[hh][k]) as i64 - (h[g][k] * t[hh][k]) as i64;
            }
            b[gi + 1][hi + 1] = v;
        }
    }
    let mut elements = Vec::with_capacity(size);
    elements.push(Element::Special);
    elements.extend(order.iter().map(|&i| Element::Letter(word.letters()[i].clone())));
    BasedMatrix { elements, b }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    Annihilating,
    Core,
    Complementary,
}

/// One reduction; `removed` indexes the matrix it is applied to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReductionStep {
    pub kind: ReductionKind,
    pub removed: Vec<usize>,
}

impl ReductionStep {
    fn single(kind: ReductionKind, g: usize) -> Self {
        ReductionStep {
            kind,
            removed: vec![g],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub primitive: BasedMatrix,
    pub steps: Vec<ReductionStep>,
    /// Self-complementary elements left in the result (never removed).
    pub self_complementary: Vec<Element>,
}

impl Reduction {
    /// Re-applies the steps to `start`.
    pub fn replay(&self, start: &BasedMatrix) -> Result<BasedMatrix> {
        self.steps
            .iter()
            .try_fold(start.clone(), |m, step| m.apply_reduction(step))
    }
}

/// Reduces with the deterministic strategy: first annihilating element,
/// else first core element, else the lexicographically first complementary pair.
pub fn reduce_to_primitive(matrix: &BasedMatrix) -> Reduction {
    let mut current = matrix.clone();
    let mut steps = Vec::new();
    while let Some(step) = current.first_reduction() {
        current = current.apply_reduction(&step).expect("step found on this matrix");
        steps.push(step);
    }
    finish(current, steps)
}

/// Reduces letting `choose` pick among all available reductions at each step.
pub fn reduce_with(
    matrix: &BasedMatrix,
    mut choose: impl FnMut(&[ReductionStep]) -> usize,
) -> Reduction {
    let mut current = matrix.clone();
    let mut steps = Vec::new();
    loop {
        let options = current.available_reductions();
        if options.is_empty() {
            break;
        }
        let step = options[choose(&options) % options.len()].clone();
        current = current.apply_reduction(&step).expect("step found on this matrix");
        steps.push(step);
    }
    finish(current, steps)
}

fn finish(primitive: BasedMatrix, steps: Vec<ReductionStep>) -> Reduction {
    let self_complementary = primitive
        .self_complementary()
        .into_iter()
        .map(|g| primitive.elements[g].clone())
        .collect();
    Reduction {
        primitive,
        steps,
        self_complementary,
    }
}

/// `P(α)`.
pub fn primitive_based_matrix(word: &Nanoword) -> BasedMatrix {
    reduce_to_primitive(&based_matrix(word)).primitive
}

/// `ρ(α)`: the number of non-special elements of `P(α)`.
pub fn rho(word: &Nanoword) -> usize {
    primitive_based_matrix(word).size() - 1
}

/// A bijection `f` with `f(s) = s` and `b2(f g, f h) = b1(g, h)`, as
/// `f[g]` for every index of `m1`.
pub fn find_isomorphism(m1: &BasedMatrix, m2: &BasedMatrix) -> Option<Vec<usize>> {
    let n = m1.size();
    if n != m2.size() {
        return None;
    }
    let keys1: Vec<(i64, Vec<i64>)> = (0..n).map(|g| m1.row_key(g)).collect();
    let keys2: Vec<(i64, Vec<i64>)> = (0..n).map(|g| m2.row_key(g)).collect();
    let mut sorted1 = keys1[1..].to_vec();
    let mut sorted2 = keys2[1..].to_vec();
    sorted1.sort();
    sorted2.sort();
    if sorted1 != sorted2 || m1.b[0][0] != m2.b[0][0] {
        return None;
    }
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|g| {
            if g == 0 {
                vec![0]
            } else {
                (1..n).filter(|&h| keys2[h] == keys1[g]).collect()
            }
        })
        .collect();
    // most constrained elements first
    let mut order: Vec<usize> = (1..n).collect();
    order.sort_by_key(|&g| candidates[g].len());
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut used = vec![false; n];
    used[0] = true;
    let mut assigned = vec![0usize];
    if extend_isomorphism(m1, m2, &order, 0, &candidates, &mut map, &mut used, &mut assigned) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend_isomorphism(
    m1: &BasedMatrix,
    m2: &BasedMatrix,
    order: &[usize],
    depth: usize,
    candidates: &[Vec<usize>],
    map: &mut [usize],
    used: &mut [bool],
    assigned: &mut Vec<usize>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let g = order[depth];
    for &h in &candidates[g] {
        if used[h] {
            continue;
        }
        let consistent = assigned
            .iter()
            .all(|&k| m1.b[g][k] == m2.b[h][map[k]]);
        if !consistent {
            continue;
        }
        map[g] = h;
        used[h] = true;
        assigned.push(g);
        if extend_isomorphism(m1, m2, order, depth + 1, candidates, map, used, assigned) {
            return true;
        }
        assigned.pop();
        used[h] = false;
        map[g] = usize::MAX;
    }
    false
}

pub fn bm_isomorphic(m1: &BasedMatrix, m2: &BasedMatrix) -> bool {
    find_isomorphism(m1, m2).is_some()
}
