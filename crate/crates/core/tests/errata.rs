use mobius_core::{compare_fixture, load_fixture, shipped_fixture, DistanceMatrix, Ladder, LadderSpec};

fn matrix(spec: LadderSpec) -> DistanceMatrix {
    DistanceMatrix::all_pairs(&Ladder::build(spec))
}

/// Asymmetric pairs of the `M(7,4)` transcription as
/// `(u, v, printed in row u, printed in row v, computed)`, `u < v`.
const M74_ASYMMETRIC: [(&str, &str, u16, u16, u16); 19] = [
    ("v13", "v42", 3, 4, 3),
    ("v13", "v53", 4, 3, 3),
    ("v13", "v54", 2, 4, 4),
    ("v13", "v61", 1, 2, 2),
    ("v13", "v62", 2, 1, 1),
    ("v14", "v31", 5, 4, 4),
    ("v21", "v32", 2, 1, 2),
    ("v22", "v32", 1, 2, 1),
    ("v22", "v61", 4, 5, 4),
    ("v23", "v32", 2, 3, 2),
    ("v23", "v61", 3, 4, 3),
    ("v23", "v64", 3, 4, 4),
    ("v24", "v32", 3, 4, 3),
    ("v24", "v61", 2, 3, 2),
    ("v32", "v63", 4, 3, 3),
    ("v33", "v61", 4, 5, 4),
    ("v33", "v62", 4, 3, 3),
    ("v34", "v61", 3, 4, 3),
    ("v44", "v61", 4, 5, 4),
];

#[test]
fn m74_errata_are_pinned() {
    let spec = LadderSpec::new(7, 4).unwrap();
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/m7n4.csv");
    let fixture = load_fixture(path).unwrap();
    let shipped = shipped_fixture(spec).unwrap();
    assert_eq!((fixture.spec, &fixture.entries), (shipped.spec, &shipped.entries));
    let report = compare_fixture(&fixture, &matrix(spec)).unwrap();

    let pairs: Vec<_> = report
        .asymmetric_pairs()
        .map(|c| (spec.label(c.u), spec.label(c.v), c.printed_uv, c.printed_vu, c.oracle))
        .collect();
    let expected: Vec<_> =
        M74_ASYMMETRIC.iter().map(|&(u, v, a, b, c)| (u.to_string(), v.to_string(), a, b, c)).collect();
    assert_eq!(pairs, expected);

    assert_eq!(report.asymmetric_cells.len(), 38);
    assert_eq!(report.hard_mismatches.len(), 0);
    assert_eq!(report.oracle_mismatches.len(), 19);
    assert_eq!(report.flagged().count(), 0);
    assert_eq!(report.consistent_match_count, 514);
    assert_eq!(report.classified_cells(), 24 * 23);
    assert_eq!(report.diagonal_zeros, 24);
}

#[test]
fn m102_transcription_is_exact() {
    let spec = LadderSpec::new(10, 2).unwrap();
    let report = compare_fixture(&shipped_fixture(spec).unwrap(), &matrix(spec)).unwrap();
    assert!(report.asymmetric_cells.is_empty());
    assert!(report.oracle_mismatches.is_empty());
    assert_eq!(report.consistent_match_count, 18 * 17);
}

#[test]
fn truncated_fixture_names_missing_row() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/m7n4.csv");
    let text = std::fs::read_to_string(path).unwrap();
    let truncated: String = text.lines().take(24).map(|l| format!("{l}\n")).collect();
    let err = mobius_core::PaperTableFixture::from_csv(&truncated, "cut.csv").unwrap_err();
    assert!(err.to_string().contains("missing row for v64"), "{err}");
}
