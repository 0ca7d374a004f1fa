//! Representations, resolving-set checks and exact metric dimension.
//!
//! The search works on any [`DistanceMatrix`]; nothing here depends on the
//! ladder structure beyond vertex labelling.

use std::collections::{HashMap, HashSet};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ladder::{LadderSpec, Vertex};
use crate::metrics::{Distance, DistanceMatrix};

/// `r(v|W)`: distances from `vertex` to each landmark, in landmark order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    pub vertex: Vertex,
    pub coords: Vec<Distance>,
}

/// Two distinct vertices that share a representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollisionWitness {
    pub a: Vertex,
    pub b: Vertex,
    pub shared_coords: Vec<Distance>,
}

impl CollisionWitness {
    pub fn describe(&self, spec: &LadderSpec) -> String {
        format!("{} ≡ {} at {}", spec.label(self.a), spec.label(self.b), format_coords(&self.shared_coords))
    }
}

pub fn format_coords(coords: &[Distance]) -> String {
    format!("({})", coords.iter().map(|d| d.to_string()).join(","))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Resolution {
    Resolving,
    /// Lexicographically first colliding pair `(a, b)`, `a < b`.
    Collision(CollisionWitness),
}

impl Resolution {
    pub fn is_resolving(&self) -> bool {
        matches!(self, Resolution::Resolving)
    }

    pub fn witness(&self) -> Option<&CollisionWitness> {
        match self {
            Resolution::Resolving => None,
            Resolution::Collision(w) => Some(w),
        }
    }
}

fn check_landmarks(matrix: &DistanceMatrix, landmarks: &[Vertex]) -> Result<()> {
    if landmarks.is_empty() {
        return Err(Error::EmptyLandmarks);
    }
    let spec = matrix.spec();
    let mut seen = HashSet::with_capacity(landmarks.len());
    for &w in landmarks {
        if spec.vertex_at(w.idx)? != w {
            return Err(Error::LabelOutOfRange { m: spec.m(), n: spec.n(), i: w.i, q: w.q });
        }
        if !seen.insert(w.idx) {
            return Err(Error::DuplicateLandmark { label: spec.label(w) });
        }
    }
    Ok(())
}

fn coords_of(matrix: &DistanceMatrix, v: usize, landmarks: &[usize]) -> Vec<Distance> {
    landmarks.iter().map(|&w| matrix.at(v, w)).collect()
}

pub fn representation(matrix: &DistanceMatrix, v: Vertex, landmarks: &[Vertex]) -> Result<Representation> {
    check_landmarks(matrix, landmarks)?;
    let v = matrix.spec().vertex_at(v.idx)?;
    let idxs: Vec<usize> = landmarks.iter().map(|w| w.idx).collect();
    Ok(Representation { vertex: v, coords: coords_of(matrix, v.idx, &idxs) })
}

fn first_collision(matrix: &DistanceMatrix, landmarks: &[usize]) -> Option<(usize, usize)> {
    let mut first: HashMap<Vec<Distance>, (usize, Option<usize>)> = HashMap::new();
    for v in 0..matrix.side() {
        first
            .entry(coords_of(matrix, v, landmarks))
            .and_modify(|slot| {
                slot.1.get_or_insert(v);
            })
            .or_insert((v, None));
    }
    first.into_values().filter_map(|(a, b)| b.map(|b| (a, b))).min()
}

fn resolution_of(matrix: &DistanceMatrix, landmarks: &[usize]) -> Resolution {
    let spec = matrix.spec();
    match first_collision(matrix, landmarks) {
        None => Resolution::Resolving,
        Some((a, b)) => Resolution::Collision(CollisionWitness {
            a: spec.vertex_at(a).expect("index from matrix"),
            b: spec.vertex_at(b).expect("index from matrix"),
            shared_coords: coords_of(matrix, a, landmarks),
        }),
    }
}

/// Whether `landmarks` resolves the graph; on failure, the lexicographically
/// first colliding pair.
pub fn is_resolving(matrix: &DistanceMatrix, landmarks: &[Vertex]) -> Result<Resolution> {
    check_landmarks(matrix, landmarks)?;
    let idxs: Vec<usize> = landmarks.iter().map(|w| w.idx).collect();
    Ok(resolution_of(matrix, &idxs))
}

/// Early-abort injectivity test with packed keys.
struct Injectivity {
    bits: u32,
    packed: HashSet<u128>,
    wide: HashSet<Vec<Distance>>,
}

impl Injectivity {
    fn new(matrix: &DistanceMatrix) -> Self {
        let bits = (u32::BITS - (matrix.diameter() as u32).leading_zeros()).max(1);
        let side = matrix.side();
        Injectivity { bits, packed: HashSet::with_capacity(side), wide: HashSet::new() }
    }

    fn resolves(&mut self, matrix: &DistanceMatrix, landmarks: &[usize]) -> bool {
        let side = matrix.side();
        let columns: Vec<&[Distance]> = landmarks.iter().map(|&w| matrix.row(w)).collect();
        if self.bits as usize * landmarks.len() <= 128 {
            self.packed.clear();
            (0..side).all(|v| {
                let key = columns.iter().fold(0u128, |key, col| (key << self.bits) | col[v] as u128);
                self.packed.insert(key)
            })
        } else {
            self.wide.clear();
            (0..side).all(|v| self.wide.insert(columns.iter().map(|col| col[v]).collect()))
        }
    }
}

/// Greedy resolving set: repeatedly add the vertex that leaves the fewest
/// unresolved pairs, ties to the smallest index. An upper bound only.
pub fn greedy_upper_bound(matrix: &DistanceMatrix) -> Vec<Vertex> {
    let side = matrix.side();
    let spec = matrix.spec();
    let mut class = vec![0usize; side];
    let mut chosen: Vec<usize> = Vec::new();
    let unresolved = |class: &[usize]| -> usize {
        let mut sizes: HashMap<usize, usize> = HashMap::new();
        for &c in class {
            *sizes.entry(c).or_default() += 1;
        }
        sizes.values().map(|&s| s * (s - 1) / 2).sum()
    };
    let refine = |class: &[usize], w: usize| -> Vec<usize> {
        let mut ids: HashMap<(usize, Distance), usize> = HashMap::new();
        (0..side)
            .map(|v| {
                let next = ids.len();
                *ids.entry((class[v], matrix.at(v, w))).or_insert(next)
            })
            .collect()
    };
    let mut remaining = unresolved(&class);
    while remaining > 0 {
        let mut best: Option<(usize, usize, Vec<usize>)> = None;
        for w in (0..side).filter(|w| !chosen.contains(w)) {
            let next = refine(&class, w);
            let left = unresolved(&next);
            if best.as_ref().is_none_or(|b| left < b.1) {
                best = Some((w, left, next));
            }
        }
        let (w, left, next) = best.expect("every vertex chosen implies resolved");
        chosen.push(w);
        class = next;
        remaining = left;
    }
    chosen.sort_unstable();
    chosen.into_iter().map(|w| spec.vertex_at(w).expect("index from matrix")).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    /// Minimum found; every smaller cardinality was exhausted.
    Exact,
    /// No resolving set up to `budget`; dimension is larger than the budget.
    Undecided { budget: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub spec: LadderSpec,
    pub status: SearchStatus,
    /// Lexicographically smallest minimum resolving set (empty when undecided).
    pub basis: Vec<Vertex>,
    pub subsets_tested: u64,
    /// `tested_by_size[k - 1]` counts the `k`-subsets examined.
    pub tested_by_size: Vec<u64>,
    /// First collision of the first subset at each failing cardinality.
    pub witnesses: Vec<(usize, CollisionWitness)>,
    pub greedy_bound: usize,
}

impl DimensionReport {
    pub fn dimension(&self) -> Option<usize> {
        match self.status {
            SearchStatus::Exact => Some(self.basis.len()),
            SearchStatus::Undecided { .. } => None,
        }
    }

    /// Number of `k`-subsets examined; all of them failed when `k` is below
    /// the dimension.
    pub fn tested_at(&self, k: usize) -> u64 {
        k.checked_sub(1).and_then(|i| self.tested_by_size.get(i)).copied().unwrap_or(0)
    }

    /// Witness for the largest failing cardinality.
    pub fn largest_witness(&self) -> Option<&(usize, CollisionWitness)> {
        self.witnesses.last()
    }

    pub fn to_text(&self) -> String {
        let spec = &self.spec;
        let mut out = format!("ladder = {spec}\n");
        match self.status {
            SearchStatus::Exact => {
                out.push_str(&format!("dimension = {}\n", self.basis.len()));
                out.push_str(&format!("basis = {{{}}}\n", spec.labels(&self.basis).join(", ")));
            }
            SearchStatus::Undecided { budget } => {
                out.push_str(&format!("dimension = undecided (> {budget})\n"));
            }
        }
        out.push_str(&format!("greedy bound = {}\n", self.greedy_bound));
        out.push_str(&format!("subsets tested = {}\n", self.subsets_tested));
        for (k, count) in self.tested_by_size.iter().enumerate() {
            out.push_str(&format!("  size {}: {}\n", k + 1, count));
        }
        for (k, w) in &self.witnesses {
            out.push_str(&format!("  size {k} fails, e.g. {}\n", w.describe(spec)));
        }
        out
    }

    pub fn to_key_values(&self) -> String {
        let spec = &self.spec;
        let mut out = format!("m = {}\nn = {}\n", spec.m(), spec.n());
        match self.status {
            SearchStatus::Exact => {
                out.push_str("status = exact\n");
                out.push_str(&format!("dimension = {}\n", self.basis.len()));
            }
            SearchStatus::Undecided { budget } => {
                out.push_str("status = undecided\n");
                out.push_str(&format!("budget = {budget}\n"));
            }
        }
        out.push_str(&format!("basis = {}\n", spec.labels(&self.basis).join(",")));
        out.push_str(&format!("greedy_bound = {}\n", self.greedy_bound));
        out.push_str(&format!("subsets_tested = {}\n", self.subsets_tested));
        out.push_str(&format!("tested_by_size = {}\n", self.tested_by_size.iter().join(",")));
        if let Some((k, w)) = self.largest_witness() {
            out.push_str(&format!("witness_size = {k}\n"));
            out.push_str(&format!("witness = {},{}\n", spec.label(w.a), spec.label(w.b)));
            out.push_str(&format!("witness_coords = {}\n", w.shared_coords.iter().join(",")));
        }
        out
    }
}

impl fmt::Display for DimensionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Exact metric dimension by exhaustive search over cardinalities
/// `1, 2, ...` up to `min(budget, greedy bound)`.
///
/// At each cardinality the subsets are visited in lexicographic index order
/// and the first resolving one is returned, so the basis is the
/// lexicographic minimum among minimum resolving sets.
pub fn metric_dimension(matrix: &DistanceMatrix, budget: Option<usize>) -> Result<DimensionReport> {
    if budget == Some(0) {
        return Err(Error::ZeroBudget);
    }
    let spec = matrix.spec();
    let side = matrix.side();
    let greedy_bound = greedy_upper_bound(matrix).len();
    let cap = budget.map_or(greedy_bound, |b| b.min(greedy_bound));
    let mut checker = Injectivity::new(matrix);
    let mut tested_by_size = Vec::with_capacity(cap);
    let mut witnesses = Vec::new();

    for k in 1..=cap {
        let mut tested = 0u64;
        let mut found = None;
        let mut first_failure: Option<Vec<usize>> = None;
        for subset in (0..side).combinations(k) {
            tested += 1;
            if checker.resolves(matrix, &subset) {
                found = Some(subset);
                break;
            }
            if first_failure.is_none() {
                first_failure = Some(subset);
            }
        }
        tested_by_size.push(tested);
        if let Some(subset) = found {
            let basis = subset.into_iter().map(|w| spec.vertex_at(w).expect("index from matrix")).collect();
            return Ok(DimensionReport {
                spec,
                status: SearchStatus::Exact,
                basis,
                subsets_tested: tested_by_size.iter().sum(),
                tested_by_size,
                witnesses,
                greedy_bound,
            });
        }
        if let Some(subset) = first_failure {
            if let Resolution::Collision(w) = resolution_of(matrix, &subset) {
                witnesses.push((k, w));
            }
        }
    }
    Ok(DimensionReport {
        spec,
        status: SearchStatus::Undecided { budget: cap },
        basis: Vec::new(),
        subsets_tested: tested_by_size.iter().sum(),
        tested_by_size,
        witnesses,
        greedy_bound,
    })
}
