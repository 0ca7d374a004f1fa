//! Transcribed published distance tables and their comparison against the
//! computed distances.
//!
//! The printed tables are not symmetric everywhere. Every off-diagonal cell
//! is classified as a match, an asymmetric print, or a hard mismatch
//! (symmetric print that disagrees with the computed distance).

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::ladder::{LadderSpec, Vertex};
use crate::metrics::{Distance, DistanceMatrix};
use crate::table::parse_table;

const M7N4: &str = include_str!("../../../fixtures/m7n4.csv");
const M10N2: &str = include_str!("../../../fixtures/m10n2.csv");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperTableFixture {
    pub spec: LadderSpec,
    pub entries: Vec<Vec<Distance>>,
    pub source: PathBuf,
}

impl PaperTableFixture {
    pub fn from_csv(text: &str, source: impl Into<PathBuf>) -> Result<Self> {
        let table = parse_table(text)?;
        for (r, row) in table.entries.iter().enumerate() {
            if row[r] != 0 {
                return Err(Error::Parse { row: r + 2, column: r + 2, message: "diagonal entry is not zero".into() });
            }
        }
        Ok(PaperTableFixture { spec: table.spec, entries: table.entries, source: source.into() })
    }

    pub fn printed(&self, a: Vertex, b: Vertex) -> Distance {
        self.entries[a.idx][b.idx]
    }
}

pub fn load_fixture(path: impl AsRef<Path>) -> Result<PaperTableFixture> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })?;
    PaperTableFixture::from_csv(&text, path)
}

/// The transcriptions shipped with the crate: `M(7,4)` and `M(10,2)`.
pub fn shipped_fixture(spec: LadderSpec) -> Option<PaperTableFixture> {
    let (text, name) = match (spec.m(), spec.n()) {
        (7, 4) => (M7N4, "fixtures/m7n4.csv"),
        (10, 2) => (M10N2, "fixtures/m10n2.csv"),
        _ => return None,
    };
    Some(PaperTableFixture::from_csv(text, name).expect("shipped fixtures parse"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AsymmetricCell {
    pub u: Vertex,
    pub v: Vertex,
    pub printed_uv: Distance,
    pub printed_vu: Distance,
    pub oracle: Distance,
}

impl AsymmetricCell {
    /// Neither printed value equals the computed distance.
    pub fn both_wrong(&self) -> bool {
        self.oracle != self.printed_uv && self.oracle != self.printed_vu
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellMismatch {
    pub u: Vertex,
    pub v: Vertex,
    pub printed: Distance,
    pub computed: Distance,
}

/// All lists hold ordered cells `(u, v)`, `u != v`, in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrataReport {
    pub spec: LadderSpec,
    pub asymmetric_cells: Vec<AsymmetricCell>,
    pub oracle_mismatches: Vec<CellMismatch>,
    pub hard_mismatches: Vec<CellMismatch>,
    pub consistent_match_count: usize,
    /// Diagonal cells that are zero, as they must be.
    pub diagonal_zeros: usize,
}

impl ErrataReport {
    pub fn classified_cells(&self) -> usize {
        self.consistent_match_count + self.asymmetric_cells.len() + self.hard_mismatches.len()
    }

    /// Asymmetric cells where neither printed value is right.
    pub fn flagged(&self) -> impl Iterator<Item = &AsymmetricCell> {
        self.asymmetric_cells.iter().filter(|c| c.both_wrong())
    }

    pub fn has_asymmetric(&self, u: Vertex, v: Vertex) -> bool {
        self.asymmetric_cells.iter().any(|c| c.u == u && c.v == v)
    }

    /// Unordered asymmetric pairs `u < v`.
    pub fn asymmetric_pairs(&self) -> impl Iterator<Item = &AsymmetricCell> {
        self.asymmetric_cells.iter().filter(|c| c.u < c.v)
    }

    pub fn to_text(&self) -> String {
        let s = &self.spec;
        let side = s.vertex_count();
        let mut out = format!("errata for {s}: {} off-diagonal cells\n", side * (side - 1));
        out.push_str(&format!("  matches: {}\n", self.consistent_match_count));
        out.push_str(&format!(
            "  asymmetric cells: {} ({} pairs)\n",
            self.asymmetric_cells.len(),
            self.asymmetric_pairs().count()
        ));
        out.push_str(&format!("  hard mismatches: {}\n", self.hard_mismatches.len()));
        out.push_str(&format!("  oracle mismatches: {}\n", self.oracle_mismatches.len()));
        for c in self.asymmetric_pairs() {
            let flag = if c.both_wrong() { "  FLAGGED: neither print matches" } else { "" };
            out.push_str(&format!(
                "  asymmetric {}/{}: printed {} and {}, computed {}{flag}\n",
                s.label(c.u),
                s.label(c.v),
                c.printed_uv,
                c.printed_vu,
                c.oracle
            ));
        }
        for c in &self.hard_mismatches {
            out.push_str(&format!(
                "  hard {}/{}: printed {}, computed {}\n",
                s.label(c.u),
                s.label(c.v),
                c.printed,
                c.computed
            ));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let s = &self.spec;
        let mut out = String::from("kind,u,v,printed_uv,printed_vu,computed\n");
        for c in &self.asymmetric_cells {
            let kind = if c.both_wrong() { "asymmetric-flagged" } else { "asymmetric" };
            out.push_str(&format!(
                "{kind},{},{},{},{},{}\n",
                s.label(c.u),
                s.label(c.v),
                c.printed_uv,
                c.printed_vu,
                c.oracle
            ));
        }
        for c in &self.hard_mismatches {
            out.push_str(&format!(
                "hard,{},{},{},{},{}\n",
                s.label(c.u),
                s.label(c.v),
                c.printed,
                c.printed,
                c.computed
            ));
        }
        out
    }
}

/// Classifies every off-diagonal cell of the fixture against `matrix`.
pub fn compare_fixture(fixture: &PaperTableFixture, matrix: &DistanceMatrix) -> Result<ErrataReport> {
    let spec = matrix.spec();
    if fixture.spec != spec {
        return Err(Error::SpecMismatch {
            got_m: fixture.spec.m(),
            got_n: fixture.spec.n(),
            want_m: spec.m(),
            want_n: spec.n(),
        });
    }
    let mut report = ErrataReport {
        spec,
        asymmetric_cells: Vec::new(),
        oracle_mismatches: Vec::new(),
        hard_mismatches: Vec::new(),
        consistent_match_count: 0,
        diagonal_zeros: 0,
    };
    for u in spec.vertices() {
        for v in spec.vertices() {
            let printed = fixture.printed(u, v);
            let computed = matrix.get(u, v);
            if u == v {
                report.diagonal_zeros += usize::from(printed == 0 && computed == 0);
                continue;
            }
            let mismatch = CellMismatch { u, v, printed, computed };
            let mirrored = fixture.printed(v, u);
            if printed != mirrored {
                report.asymmetric_cells.push(AsymmetricCell {
                    u,
                    v,
                    printed_uv: printed,
                    printed_vu: mirrored,
                    oracle: computed,
                });
                if printed != computed {
                    report.oracle_mismatches.push(mismatch);
                }
            } else if printed == computed {
                report.consistent_match_count += 1;
            } else {
                report.hard_mismatches.push(mismatch);
                report.oracle_mismatches.push(mismatch);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::Ladder;

    fn matrix(spec: LadderSpec) -> DistanceMatrix {
        DistanceMatrix::all_pairs(&Ladder::build(spec))
    }

    #[test]
    fn shipped_fixtures_have_expected_shape() {
        let s = LadderSpec::new(7, 4).unwrap();
        let f = shipped_fixture(s).unwrap();
        assert_eq!(f.entries.len(), 24);
        assert!(f.entries.iter().all(|r| r.len() == 24));
        assert!((0..24).all(|i| f.entries[i][i] == 0));
        let f = shipped_fixture(LadderSpec::new(10, 2).unwrap()).unwrap();
        assert_eq!(f.entries.len(), 18);
        assert!(shipped_fixture(LadderSpec::new(8, 3).unwrap()).is_none());
    }

    #[test]
    fn nonzero_diagonal_is_rejected() {
        let text = matrix(LadderSpec::new(3, 2).unwrap()).to_csv().replace("v11,0,", "v11,2,");
        let err = PaperTableFixture::from_csv(&text, "x.csv").unwrap_err();
        assert!(matches!(err, Error::Parse { row: 2, column: 2, .. }), "{err}");
    }

    #[test]
    fn computed_table_is_its_own_clean_fixture() {
        let d = matrix(LadderSpec::new(8, 3).unwrap());
        let f = PaperTableFixture::from_csv(&d.to_csv(), "computed").unwrap();
        let r = compare_fixture(&f, &d).unwrap();
        assert!(r.asymmetric_cells.is_empty() && r.oracle_mismatches.is_empty());
        assert_eq!(r.consistent_match_count, 21 * 20);
        assert_eq!(r.diagonal_zeros, 21);
    }

    #[test]
    fn hard_mismatch_and_flagged_classification() {
        let d = matrix(LadderSpec::new(3, 2).unwrap());
        let mut f = PaperTableFixture::from_csv(&d.to_csv(), "edited").unwrap();
        // symmetric misprint
        f.entries[0][1] = 2;
        f.entries[1][0] = 2;
        // asymmetric with neither side right
        f.entries[2][3] = 3;
        f.entries[3][2] = 2;
        let r = compare_fixture(&f, &d).unwrap();
        assert_eq!(r.hard_mismatches.len(), 2);
        assert_eq!(r.asymmetric_cells.len(), 2);
        assert_eq!(r.flagged().count(), 2);
        assert_eq!(r.oracle_mismatches.len(), 4);
        assert_eq!(r.classified_cells(), 12);
    }

    #[test]
    fn spec_mismatch_is_an_error() {
        let f = shipped_fixture(LadderSpec::new(7, 4).unwrap()).unwrap();
        let d = matrix(LadderSpec::new(10, 2).unwrap());
        assert!(matches!(compare_fixture(&f, &d), Err(Error::SpecMismatch { .. })));
    }
}
