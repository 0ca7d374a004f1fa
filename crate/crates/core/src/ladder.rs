//! Construction of the generalized Möbius ladder `M(m,n)`.
//!
//! The ladder is the grid `P_m × P_n` whose last column is glued onto the
//! first one after a half twist: grid vertex `(m, q)` becomes `(1, n+1-q)`.
//! Only columns `1..m-1` survive as distinct vertices, so the graph has
//! `(m-1)·n` vertices. Vertices are labelled `v_{i,q}` with column `i` and
//! row `q` (both 1-based) and carry a dense row-major index.

use std::fmt;

use crate::error::{Error, Result};

/// The two parameter classes for which a constant metric dimension is claimed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `m + n` odd and `m - n >= 3`; dimension 3.
    MixedParity,
    /// `m + n` even and `m - n >= 4`; dimension 4.
    EqualParity,
}

impl Family {
    pub fn predicted_dimension(self) -> usize {
        match self {
            Family::MixedParity => 3,
            Family::EqualParity => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::MixedParity => "mixed-parity",
            Family::EqualParity => "equal-parity",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters `(m, n)` of `M(m,n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LadderSpec {
    m: usize,
    n: usize,
}

impl LadderSpec {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidSpec { m, n, reason: "m must be at least 3" });
        }
        if n < 2 {
            return Err(Error::InvalidSpec { m, n, reason: "n must be at least 2" });
        }
        Ok(LadderSpec { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of surviving columns, `m - 1`.
    pub fn columns(&self) -> usize {
        self.m - 1
    }

    pub fn vertex_count(&self) -> usize {
        (self.m - 1) * self.n
    }

    pub fn edge_count(&self) -> usize {
        (self.m - 1) * (2 * self.n - 1)
    }

    pub fn mixed_parity(&self) -> bool {
        (self.m + self.n) % 2 == 1
    }

    /// `m - n` as a signed gap; negative when the ladder is taller than long.
    pub fn gap(&self) -> isize {
        self.m as isize - self.n as isize
    }

    pub fn mixed_parity_applies(&self) -> bool {
        self.mixed_parity() && self.gap() >= 3
    }

    pub fn equal_parity_applies(&self) -> bool {
        !self.mixed_parity() && self.gap() >= 4
    }

    pub fn family(&self) -> Option<Family> {
        if self.mixed_parity_applies() {
            Some(Family::MixedParity)
        } else if self.equal_parity_applies() {
            Some(Family::EqualParity)
        } else {
            None
        }
    }

    pub fn require(&self, family: Family) -> Result<()> {
        if self.family() == Some(family) {
            Ok(())
        } else {
            Err(Error::HypothesisViolated { m: self.m, n: self.n, family })
        }
    }

    pub fn vertex(&self, i: usize, q: usize) -> Result<Vertex> {
        if i == 0 || i >= self.m || q == 0 || q > self.n {
            return Err(Error::LabelOutOfRange { m: self.m, n: self.n, i, q });
        }
        Ok(Vertex { i, q, idx: (i - 1) * self.n + (q - 1) })
    }

    pub fn vertex_at(&self, idx: usize) -> Result<Vertex> {
        let count = self.vertex_count();
        if idx >= count {
            return Err(Error::IndexOutOfRange { m: self.m, n: self.n, idx, count });
        }
        Ok(Vertex { i: idx / self.n + 1, q: idx % self.n + 1, idx })
    }

    /// All vertices in dense-index order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertex_count()).map(move |idx| Vertex { i: idx / self.n + 1, q: idx % self.n + 1, idx })
    }

    /// Whether the two-digit `v13` shorthand is unambiguous for this ladder.
    pub fn allows_shorthand(&self) -> bool {
        self.m - 1 <= 9 && self.n <= 9
    }

    /// Display label: `v13` when the shorthand is unambiguous, `v12_3` otherwise.
    pub fn label(&self, v: Vertex) -> String {
        if self.allows_shorthand() {
            format!("v{}{}", v.i, v.q)
        } else {
            format!("v{}_{}", v.i, v.q)
        }
    }

    pub fn labels(&self, vs: &[Vertex]) -> Vec<String> {
        vs.iter().map(|&v| self.label(v)).collect()
    }

    /// Parses one vertex label. Accepted forms are `i:q`, `vi_q` and, when
    /// [`allows_shorthand`](Self::allows_shorthand) holds, `viq`.
    pub fn parse_label(&self, text: &str) -> Result<Vertex> {
        let s = text.trim();
        let bad = |reason: &str| Error::BadLabel { label: s.to_string(), reason: reason.to_string() };
        let body = s.strip_prefix('v').unwrap_or(s);
        let (i, q) = if let Some((a, b)) = body.split_once(':').or_else(|| body.split_once('_')) {
            let i = a.parse::<usize>().map_err(|_| bad("column is not a number"))?;
            let q = b.parse::<usize>().map_err(|_| bad("row is not a number"))?;
            (i, q)
        } else if s.starts_with('v') && body.len() == 2 && body.bytes().all(|b| b.is_ascii_digit()) {
            if !self.allows_shorthand() {
                return Err(bad("shorthand `viq` is ambiguous for this ladder; use `i:q`"));
            }
            let b = body.as_bytes();
            ((b[0] - b'0') as usize, (b[1] - b'0') as usize)
        } else {
            return Err(bad("expected `i:q`, `vi_q` or `viq`"));
        };
        self.vertex(i, q)
    }

    /// Parses a comma-separated list of labels.
    pub fn parse_set(&self, text: &str) -> Result<Vec<Vertex>> {
        text.split(',').filter(|t| !t.trim().is_empty()).map(|t| self.parse_label(t)).collect()
    }

    /// The shift `v_{i,q} -> v_{i+1,q}`, wrapping through the twist.
    pub fn rotate(&self, v: Vertex) -> Vertex {
        if v.i < self.m - 1 {
            Vertex { i: v.i + 1, q: v.q, idx: v.idx + self.n }
        } else {
            let q = self.n + 1 - v.q;
            Vertex { i: 1, q, idx: q - 1 }
        }
    }

    /// Reflection `v_{i,q} -> v_{i,n+1-q}`.
    pub fn flip_rows(&self, v: Vertex) -> Vertex {
        let q = self.n + 1 - v.q;
        Vertex { i: v.i, q, idx: (v.i - 1) * self.n + q - 1 }
    }
}

impl fmt::Display for LadderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.m, self.n)
    }
}

/// A vertex `v_{i,q}` together with its dense index `(i-1)·n + (q-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub i: usize,
    pub q: usize,
    pub idx: usize,
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v_{{{},{}}}", self.i, self.q)
    }
}

/// Immutable adjacency structure of `M(m,n)`.
///
/// For `m = 3` with `n` odd the middle twist edge coincides with a rung, so
/// the edge count drops one below `(m-1)(2n-1)`; parallel edges are merged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ladder {
    spec: LadderSpec,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Ladder {
    pub fn build(spec: LadderSpec) -> Ladder {
        let (m, n) = (spec.m, spec.n);
        let mut adjacency = vec![Vec::with_capacity(4); spec.vertex_count()];
        let idx = |i: usize, q: usize| (i - 1) * n + (q - 1);
        let mut edges = Vec::with_capacity(spec.edge_count());
        for i in 1..m {
            for q in 1..n {
                edges.push((idx(i, q), idx(i, q + 1)));
            }
        }
        for i in 1..m - 1 {
            for q in 1..=n {
                edges.push((idx(i, q), idx(i + 1, q)));
            }
        }
        for q in 1..=n {
            edges.push((idx(m - 1, q), idx(1, n + 1 - q)));
        }
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Ladder { spec, adjacency, edge_count }
    }

    pub fn spec(&self) -> LadderSpec {
        self.spec
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbour indices of the vertex with dense index `idx`.
    pub fn neighbors(&self, idx: usize) -> &[usize] {
        &self.adjacency[idx]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v.idx].len()
    }

    pub fn is_adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.adjacency[a.idx].binary_search(&b.idx).is_ok()
    }

    /// Each edge once as `(smaller, larger)` label, in ascending order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (a, list) in self.adjacency.iter().enumerate() {
            for &b in list.iter().filter(|&&b| b > a) {
                out.push((self.vertex(a), self.vertex(b)));
            }
        }
        out
    }

    fn vertex(&self, idx: usize) -> Vertex {
        let n = self.spec.n;
        Vertex { i: idx / n + 1, q: idx % n + 1, idx }
    }

    pub fn is_connected(&self) -> bool {
        let count = self.vertex_count();
        if count == 0 {
            return true;
        }
        let mut seen = vec![false; count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == count
    }

    /// `i1,q1 i2,q2` per line, one line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (a, b) in self.edges() {
            out.push_str(&format!("{},{} {},{}\n", a.i, a.q, b.i, b.q));
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("graph M_{}_{} {{\n", self.spec.m, self.spec.n);
        for v in self.spec.vertices() {
            out.push_str(&format!("    v_{}_{};\n", v.i, v.q));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("    v_{}_{} -- v_{}_{};\n", a.i, a.q, b.i, b.q));
        }
        out.push_str("}\n");
        out
    }
}
