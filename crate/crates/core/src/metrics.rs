//! Exact unweighted shortest-path distances.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::ladder::{Ladder, LadderSpec, Vertex};

/// Distance in edges. Ladders at desk scale stay far below `u16::MAX`.
pub type Distance = u16;

const UNREACHED: Distance = Distance::MAX;

/// Single-source distances by breadth-first frontier expansion.
pub fn sssp(ladder: &Ladder, source: Vertex) -> Vec<Distance> {
    let mut dist = vec![UNREACHED; ladder.vertex_count()];
    let mut queue = VecDeque::with_capacity(ladder.vertex_count());
    dist[source.idx] = 0;
    queue.push_back(source.idx);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &w in ladder.neighbors(u) {
            if dist[w] == UNREACHED {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Symmetric all-pairs distance table of a ladder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    spec: LadderSpec,
    side: usize,
    dist: Vec<Distance>,
}

impl DistanceMatrix {
    /// Runs [`sssp`] from every vertex. Rows are computed in parallel; each
    /// row is owned by one worker, so the result equals the sequential one.
    pub fn all_pairs(ladder: &Ladder) -> DistanceMatrix {
        let spec = ladder.spec();
        let side = ladder.vertex_count();
        let rows: Vec<Vec<Distance>> =
            spec.vertices().collect::<Vec<_>>().into_par_iter().map(|v| sssp(ladder, v)).collect();
        DistanceMatrix { spec, side, dist: rows.concat() }
    }

    pub fn spec(&self) -> LadderSpec {
        self.spec
    }

    pub fn side(&self) -> usize {
        self.side
    }

    #[inline]
    pub fn at(&self, a: usize, b: usize) -> Distance {
        self.dist[a * self.side + b]
    }

    pub fn get(&self, a: Vertex, b: Vertex) -> Distance {
        self.at(a.idx, b.idx)
    }

    pub fn row(&self, idx: usize) -> &[Distance] {
        &self.dist[idx * self.side..(idx + 1) * self.side]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Distance]> {
        self.dist.chunks(self.side)
    }

    pub fn diameter(&self) -> Distance {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.side).all(|a| (a + 1..self.side).all(|b| self.at(a, b) == self.at(b, a)))
    }

    /// Label header row and column, then integer cells; linefeed endings.
    pub fn to_csv(&self) -> String {
        let labels: Vec<String> = self.spec.vertices().map(|v| self.spec.label(v)).collect();
        let mut out = String::new();
        out.push_str(&format!(",{}\n", labels.join(",")));
        for (label, row) in labels.iter().zip(self.rows()) {
            out.push_str(label);
            for d in row {
                out.push(',');
                out.push_str(&d.to_string());
            }
            out.push('\n');
        }
        out
    }
}
