// Shared by the integration tests; not every test target uses every item.
#![allow(dead_code)]

use mobius_core::{DistanceMatrix, Ladder, LadderSpec};

/// Specs `M(m,n)` with `n < m` and at most `max_vertices` vertices.
pub fn specs_up_to(max_vertices: usize) -> Vec<LadderSpec> {
    let mut out = Vec::new();
    for m in 3..=max_vertices + 1 {
        for n in 2..m {
            if (m - 1) * n <= max_vertices {
                out.push(LadderSpec::new(m, n).unwrap());
            }
        }
    }
    out
}

pub fn matrix(spec: LadderSpec) -> DistanceMatrix {
    DistanceMatrix::all_pairs(&Ladder::build(spec))
}

/// Cubic all-pairs oracle over the edge list, independent of the BFS path.
pub fn floyd_warshall(ladder: &Ladder) -> Vec<Vec<u32>> {
    const INF: u32 = u32::MAX / 4;
    let n = ladder.vertex_count();
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for (a, b) in ladder.edges() {
        d[a.idx][b.idx] = 1;
        d[b.idx][a.idx] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Unpruned brute force: every subset of every size, checked by sorting the
/// representation list. Returns the size and the lexicographically smallest
/// subset of that size.
pub fn brute_force_dimension(matrix: &DistanceMatrix) -> (usize, Vec<usize>) {
    let n = matrix.side();
    for k in 1..=n {
        let mut best: Option<Vec<usize>> = None;
        for mask in 0u64..(1u64 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if naive_resolves(matrix, &set) && best.as_ref().is_none_or(|b| set < *b) {
                best = Some(set);
            }
        }
        if let Some(b) = best {
            return (k, b);
        }
    }
    unreachable!("the full vertex set always resolves")
}

pub fn naive_resolves(matrix: &DistanceMatrix, set: &[usize]) -> bool {
    let mut reps: Vec<Vec<u16>> = (0..matrix.side()).map(|v| set.iter().map(|&w| matrix.at(v, w)).collect()).collect();
    reps.sort();
    reps.windows(2).all(|w| w[0] != w[1])
}
