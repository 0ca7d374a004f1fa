use std::collections::HashSet;

use mobius_core::{Ladder, LadderSpec};
use proptest::prelude::*;

fn check_structure(spec: LadderSpec) {
    let (m, n) = (spec.m(), spec.n());
    let g = Ladder::build(spec);
    assert_eq!(g.vertex_count(), (m - 1) * n);
    assert_eq!(g.edge_count(), (m - 1) * (2 * n - 1));
    assert!(g.is_connected());
    for v in spec.vertices() {
        let nb = g.neighbors(v.idx);
        assert!(!nb.contains(&v.idx), "self loop at {v}");
        assert!(nb.windows(2).all(|w| w[0] < w[1]), "unsorted or duplicate neighbours at {v}");
        for &w in nb {
            assert!(g.neighbors(w).contains(&v.idx), "asymmetric adjacency");
        }
        let expected = if v.q == 1 || v.q == n { 3 } else { 4 };
        assert_eq!(g.degree(v), expected, "{spec} {v}");
    }
}

fn check_rotation(spec: LadderSpec) {
    let g = Ladder::build(spec);
    for (a, b) in g.edges() {
        assert!(g.is_adjacent(spec.rotate(a), spec.rotate(b)), "{spec}: {a}-{b}");
    }
    let images: HashSet<usize> = spec.vertices().map(|v| spec.rotate(v).idx).collect();
    assert_eq!(images.len(), spec.vertex_count());
    for v in spec.vertices() {
        let mut w = v;
        for _ in 0..spec.columns() {
            w = spec.rotate(w);
        }
        assert_eq!(w, spec.flip_rows(v));
        for _ in 0..spec.columns() {
            w = spec.rotate(w);
        }
        assert_eq!(w, v);
    }
}

#[test]
fn structural_sweep() {
    for m in 3..=14 {
        for n in (2..=5).filter(|&n| n < m) {
            let spec = LadderSpec::new(m, n).unwrap();
            check_structure(spec);
            check_rotation(spec);
        }
    }
}

proptest! {
    #[test]
    fn label_index_round_trip(m in 3usize..40, n in 2usize..12, pick in any::<prop::sample::Index>()) {
        let spec = LadderSpec::new(m, n).unwrap();
        let idx = pick.index(spec.vertex_count());
        let v = spec.vertex_at(idx).unwrap();
        prop_assert_eq!(spec.vertex(v.i, v.q).unwrap(), v);
        prop_assert_eq!(v.idx, (v.i - 1) * n + (v.q - 1));
        prop_assert_eq!(spec.parse_label(&spec.label(v)).unwrap(), v);
        prop_assert_eq!(spec.parse_label(&format!("{}:{}", v.i, v.q)).unwrap(), v);
    }

    #[test]
    fn larger_ladders_keep_invariants(m in 4usize..60, n in 2usize..8) {
        prop_assume!(n < m);
        let spec = LadderSpec::new(m, n).unwrap();
        check_structure(spec);
        check_rotation(spec);
    }
}
