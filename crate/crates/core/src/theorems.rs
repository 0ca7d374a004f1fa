//! Dimension claims for the two parameter families, the explicit collision
//! families that rule out smaller landmark sets, and parameter sweeps.

use std::collections::HashSet;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::formulas::{validate_against, Corner};
use crate::ladder::{Family, Ladder, LadderSpec, Vertex};
use crate::metrics::{Distance, DistanceMatrix};
use crate::resolver::{is_resolving, metric_dimension, representation, Resolution};

/// A reduced landmark set (the candidate with one corner dropped) and the
/// vertex pairs claimed to collide under it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PossibilityClaim {
    pub dropped: Corner,
    pub landmarks: Vec<Vertex>,
    pub pairs: Vec<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremClaim {
    pub spec: LadderSpec,
    pub family: Option<Family>,
    pub predicted_dimension: Option<usize>,
    pub candidate: Vec<Vertex>,
    pub possibilities: Vec<PossibilityClaim>,
}

fn corners(spec: &LadderSpec, which: &[Corner]) -> Vec<Vertex> {
    which.iter().map(|c| c.vertex(spec)).collect()
}

fn half(value: isize, what: &str) -> Result<usize> {
    if value % 2 != 0 || value <= 0 {
        return Err(Error::Domain(format!("collision index {what} = {value}/2 is not a positive integer")));
    }
    Ok((value / 2) as usize)
}

fn mixed_possibilities(spec: &LadderSpec) -> Result<Vec<PossibilityClaim>> {
    use Corner::*;
    let (m, n) = (spec.m(), spec.n());
    let v = |i: usize, q: usize| spec.vertex(i, q);

    let mut reflect = Vec::new();
    for i in 2..m {
        for j in 1..=n {
            reflect.push((v(i, j)?, v(m - i + 1, n - j + 1)?));
        }
    }
    let mut shifted = Vec::new();
    for i in 1..m {
        for j in 2..=n {
            shifted.push((v(i, j)?, v(m - i, n - j + 2)?));
        }
    }
    let mut diagonal = Vec::new();
    for i in 1..n {
        diagonal.push((v(i, i)?, v(i + 1, i + 1)?));
    }
    Ok(vec![
        PossibilityClaim { dropped: LastTop, landmarks: corners(spec, &[FirstTop, FirstBottom]), pairs: reflect },
        PossibilityClaim { dropped: FirstBottom, landmarks: corners(spec, &[FirstTop, LastTop]), pairs: shifted },
        PossibilityClaim { dropped: FirstTop, landmarks: corners(spec, &[FirstBottom, LastTop]), pairs: diagonal },
    ])
}

fn equal_possibilities(spec: &LadderSpec) -> Result<Vec<PossibilityClaim>> {
    use Corner::*;
    let (m, n) = (spec.m() as isize, spec.n() as isize);
    let v = |i: usize, q: usize| spec.vertex(i, q);
    let lo = half(m - n, "(m-n)")?;
    let lo1 = half(m - n + 2, "(m-n+2)")?;
    let lo2 = half(m - n + 4, "(m-n+4)")?;
    let hi = half(m + n, "(m+n)")?;
    let hi1 = half(m + n - 2, "(m+n-2)")?;
    let n = spec.n();
    Ok(vec![
        PossibilityClaim {
            dropped: LastBottom,
            landmarks: corners(spec, &[FirstTop, FirstBottom, LastTop]),
            pairs: vec![(v(lo1, 1)?, v(hi, n)?)],
        },
        PossibilityClaim {
            dropped: FirstTop,
            landmarks: corners(spec, &[FirstBottom, LastTop, LastBottom]),
            pairs: vec![(v(lo, 1)?, v(hi1, n)?)],
        },
        PossibilityClaim {
            dropped: FirstBottom,
            landmarks: corners(spec, &[FirstTop, LastTop, LastBottom]),
            pairs: vec![(v(lo, 2)?, v(lo1, 1)?)],
        },
        PossibilityClaim {
            dropped: LastTop,
            landmarks: corners(spec, &[FirstTop, FirstBottom, LastBottom]),
            pairs: vec![(v(lo1, 2)?, v(lo2, 1)?)],
        },
    ])
}

/// Classifies `spec` and materializes the claimed basis and collision pairs.
pub fn claim_for(spec: LadderSpec) -> Result<TheoremClaim> {
    use Corner::*;
    let family = spec.family();
    let (candidate, possibilities) = match family {
        Some(Family::MixedParity) => (corners(&spec, &[FirstTop, FirstBottom, LastTop]), mixed_possibilities(&spec)?),
        Some(Family::EqualParity) => {
            (corners(&spec, &[FirstTop, FirstBottom, LastTop, LastBottom]), equal_possibilities(&spec)?)
        }
        None => (Vec::new(), Vec::new()),
    };
    Ok(TheoremClaim {
        spec,
        family,
        predicted_dimension: family.map(Family::predicted_dimension),
        candidate,
        possibilities,
    })
}

/// A claimed pair whose representations differ (or which is not a pair of
/// distinct vertices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairFailure {
    pub a: Vertex,
    pub b: Vertex,
    pub coords_a: Vec<Distance>,
    pub coords_b: Vec<Distance>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PossibilityResult {
    pub claim: PossibilityClaim,
    pub failures: Vec<PairFailure>,
    pub resolution: Resolution,
    /// Colliding unordered pairs under the reduced set beyond the claimed ones.
    pub other_collisions: usize,
}

impl PossibilityResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && !self.resolution.is_resolving()
    }
}

fn check_claims(matrix: &DistanceMatrix, claims: Vec<PossibilityClaim>) -> Result<Vec<PossibilityResult>> {
    let side = matrix.side();
    claims
        .into_iter()
        .map(|claim| {
            let mut failures = Vec::new();
            let mut claimed = HashSet::new();
            for &(a, b) in &claim.pairs {
                let ra = representation(matrix, a, &claim.landmarks)?.coords;
                let rb = representation(matrix, b, &claim.landmarks)?.coords;
                if a == b || ra != rb {
                    failures.push(PairFailure { a, b, coords_a: ra, coords_b: rb });
                }
                claimed.insert((a.idx.min(b.idx), a.idx.max(b.idx)));
            }
            let resolution = is_resolving(matrix, &claim.landmarks)?;
            let coords: Vec<Vec<Distance>> =
                (0..side).map(|v| claim.landmarks.iter().map(|w| matrix.at(v, w.idx)).collect()).collect();
            let mut other_collisions = 0;
            for a in 0..side {
                for b in a + 1..side {
                    if coords[a] == coords[b] && !claimed.contains(&(a, b)) {
                        other_collisions += 1;
                    }
                }
            }
            Ok(PossibilityResult { claim, failures, resolution, other_collisions })
        })
        .collect()
}

/// Checks the three reduced sets of the mixed-parity family.
pub fn check_possibilities_mixed(matrix: &DistanceMatrix) -> Result<Vec<PossibilityResult>> {
    let spec = matrix.spec();
    spec.require(Family::MixedParity)?;
    check_claims(matrix, mixed_possibilities(&spec)?)
}

/// Checks the four reduced sets of the equal-parity family.
pub fn check_possibilities_equal(matrix: &DistanceMatrix) -> Result<Vec<PossibilityResult>> {
    let spec = matrix.spec();
    spec.require(Family::EqualParity)?;
    check_claims(matrix, equal_possibilities(&spec)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub claim: TheoremClaim,
    pub candidate_resolves: bool,
    pub exact_dimension: Option<usize>,
    pub basis: Vec<Vertex>,
    pub prediction_holds: bool,
    pub possibility_results: Vec<PossibilityResult>,
    /// `None` when no family applies.
    pub formula_mismatches: Option<usize>,
}

impl TheoremVerdict {
    pub fn possibilities_pass(&self) -> bool {
        self.possibility_results.iter().all(PossibilityResult::passed)
    }

    /// A family applies but some part of its claim failed.
    pub fn is_counterexample(&self) -> bool {
        self.claim.family.is_some()
            && (!self.prediction_holds || !self.possibilities_pass() || self.formula_mismatches != Some(0))
    }
}

/// Runs the full pipeline for one ladder.
pub fn verify(spec: LadderSpec) -> Result<TheoremVerdict> {
    let matrix = DistanceMatrix::all_pairs(&Ladder::build(spec));
    verify_with_matrix(&matrix)
}

pub fn verify_with_matrix(matrix: &DistanceMatrix) -> Result<TheoremVerdict> {
    let spec = matrix.spec();
    let claim = claim_for(spec)?;
    let report = metric_dimension(matrix, None)?;
    let exact_dimension = report.dimension();
    let candidate_resolves = !claim.candidate.is_empty() && is_resolving(matrix, &claim.candidate)?.is_resolving();
    let prediction_holds =
        candidate_resolves && claim.predicted_dimension.is_some() && exact_dimension == claim.predicted_dimension;
    let (possibility_results, formula_mismatches) = match claim.family {
        Some(family) => {
            let results = check_claims(matrix, claim.possibilities.clone())?;
            let formulas = validate_against(matrix)?;
            debug_assert_eq!(formulas.family, family);
            (results, Some(formulas.mismatches.len()))
        }
        None => (Vec::new(), None),
    };
    Ok(TheoremVerdict {
        claim,
        candidate_resolves,
        exact_dimension,
        basis: report.basis,
        prediction_holds,
        possibility_results,
        formula_mismatches,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub m: RangeInclusive<usize>,
    pub n: RangeInclusive<usize>,
    /// Largest vertex count `(m-1)·n` searched exhaustively.
    pub max_vertices: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { m: 3..=14, n: 2..=5, max_vertices: 40 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkippedSpec {
    pub m: usize,
    pub n: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    /// Sorted by `(m, n)`.
    pub verdicts: Vec<TheoremVerdict>,
    pub skipped: Vec<SkippedSpec>,
}

impl SweepReport {
    pub fn confirmed(&self) -> usize {
        self.verdicts.iter().filter(|v| v.claim.family.is_some() && !v.is_counterexample()).count()
    }

    pub fn counterexamples(&self) -> Vec<&TheoremVerdict> {
        self.verdicts.iter().filter(|v| v.is_counterexample()).collect()
    }

    pub fn unclaimed(&self) -> usize {
        self.verdicts.iter().filter(|v| v.claim.family.is_none()).count()
    }

    fn rows(&self) -> Vec<[String; 8]> {
        let opt = |x: Option<usize>| x.map_or("-".to_string(), |d| d.to_string());
        self.verdicts
            .iter()
            .map(|v| {
                let spec = v.claim.spec;
                let has_claim = v.claim.family.is_some();
                [
                    spec.m().to_string(),
                    spec.n().to_string(),
                    if spec.mixed_parity() { "mixed" } else { "equal" }.to_string(),
                    v.claim.family.map_or("-", Family::name).to_string(),
                    opt(v.claim.predicted_dimension),
                    opt(v.exact_dimension),
                    if has_claim { v.candidate_resolves.to_string() } else { "-".into() },
                    if has_claim { v.possibilities_pass().to_string() } else { "-".into() },
                ]
            })
            .collect()
    }

    const HEADER: [&'static str; 8] =
        ["m", "n", "parity", "theorem", "predicted", "exact", "candidate_resolves", "possibilities_pass"];

    pub fn to_csv(&self) -> String {
        let mut out = Self::HEADER.join(",");
        out.push('\n');
        for row in self.rows() {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let rows = self.rows();
        let widths: Vec<usize> =
            (0..8).map(|c| rows.iter().map(|r| r[c].len()).chain([Self::HEADER[c].len()]).max().unwrap_or(0)).collect();
        let line = |cells: Vec<&str>| -> String {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            format!("{}\n", padded.join("  ").trim_end())
        };
        let mut out = line(Self::HEADER.to_vec());
        for row in &rows {
            out.push_str(&line(row.iter().map(String::as_str).collect()));
        }
        out.push_str(&format!(
            "\nconfirmed: {}  counterexamples: {}  no claim: {}  skipped: {}\n",
            self.confirmed(),
            self.counterexamples().len(),
            self.unclaimed(),
            self.skipped.len()
        ));
        for v in self.counterexamples() {
            let spec = v.claim.spec;
            out.push_str(&format!(
                "COUNTEREXAMPLE {spec}: predicted {:?}, exact {:?}, basis {{{}}}, candidate resolves {}, possibilities pass {}, formula mismatches {:?}\n",
                v.claim.predicted_dimension,
                v.exact_dimension,
                spec.labels(&v.basis).join(", "),
                v.candidate_resolves,
                v.possibilities_pass(),
                v.formula_mismatches,
            ));
        }
        for s in &self.skipped {
            out.push_str(&format!("skipped M({},{}): {}\n", s.m, s.n, s.reason));
        }
        out
    }
}

/// Verifies every `(m, n)` in the configured ranges with `n < m` and at most
/// `max_vertices` vertices. Specs run in parallel; the report is sorted.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    let mut todo = Vec::new();
    let mut skipped = Vec::new();
    for m in config.m.clone() {
        for n in config.n.clone() {
            let skip = |reason: String| SkippedSpec { m, n, reason };
            match LadderSpec::new(m, n) {
                Err(e) => skipped.push(skip(e.to_string())),
                Ok(_) if n >= m => skipped.push(skip("n >= m".into())),
                Ok(spec) if spec.vertex_count() > config.max_vertices => skipped.push(skip(format!(
                    "{} vertices exceeds the cap of {}",
                    spec.vertex_count(),
                    config.max_vertices
                ))),
                Ok(spec) => todo.push(spec),
            }
        }
    }
    let mut verdicts = todo.into_par_iter().map(verify).collect::<Result<Vec<_>>>()?;
    verdicts.sort_by_key(|v| v.claim.spec);
    Ok(SweepReport { verdicts, skipped })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(m: usize, n: usize) -> LadderSpec {
        LadderSpec::new(m, n).unwrap()
    }

    fn matrix(m: usize, n: usize) -> DistanceMatrix {
        DistanceMatrix::all_pairs(&Ladder::build(spec(m, n)))
    }

    #[test]
    fn claims_for_examples() {
        let c = claim_for(spec(7, 4)).unwrap();
        assert_eq!(c.family, Some(Family::MixedParity));
        assert_eq!(c.predicted_dimension, Some(3));
        assert_eq!(c.spec.labels(&c.candidate), ["v11", "v14", "v61"]);
        assert_eq!(c.possibilities.len(), 3);

        let c = claim_for(spec(10, 2)).unwrap();
        assert_eq!(c.family, Some(Family::EqualParity));
        assert_eq!(c.predicted_dimension, Some(4));
        assert_eq!(c.spec.labels(&c.candidate), ["v11", "v12", "v91", "v92"]);
        assert_eq!(c.possibilities.len(), 4);

        let c = claim_for(spec(6, 4)).unwrap();
        assert_eq!(c.family, None);
        assert!(c.candidate.is_empty() && c.predicted_dimension.is_none());
    }

    #[test]
    fn mixed_possibilities_on_m74() {
        let d = matrix(7, 4);
        let results = check_possibilities_mixed(&d).unwrap();
        assert_eq!(results.iter().map(|r| r.claim.pairs.len()).collect::<Vec<_>>(), [20, 18, 3]);
        for r in &results {
            assert!(r.passed(), "{:?}", r.failures);
        }
        let first = &results[0];
        let (a, b) = first.claim.pairs[0];
        assert_eq!(d.spec().labels(&[a, b]), ["v21", "v64"]);
        assert_eq!(representation(&d, a, &first.claim.landmarks).unwrap().coords, vec![1, 4]);
    }

    #[test]
    fn equal_possibilities_on_m102() {
        let d = matrix(10, 2);
        let results = check_possibilities_equal(&d).unwrap();
        let s = d.spec();
        let pairs: Vec<Vec<String>> =
            results.iter().map(|r| s.labels(&[r.claim.pairs[0].0, r.claim.pairs[0].1])).collect();
        assert_eq!(pairs[0], ["v51", "v62"]);
        assert_eq!(pairs[1], ["v41", "v52"]);
        for r in &results {
            assert!(r.passed(), "{:?}", r.failures);
        }
        let w1 = &results[0].claim.landmarks;
        assert_eq!(s.labels(w1), ["v11", "v12", "v91"]);
        assert_eq!(representation(&d, s.vertex(5, 1).unwrap(), w1).unwrap().coords, vec![4, 5, 4]);
    }

    #[test]
    fn possibilities_require_family() {
        assert!(matches!(check_possibilities_mixed(&matrix(10, 2)), Err(Error::HypothesisViolated { .. })));
        assert!(matches!(check_possibilities_equal(&matrix(7, 4)), Err(Error::HypothesisViolated { .. })));
        assert!(check_possibilities_mixed(&matrix(7, 5)).is_err());
    }

    #[test]
    fn verdict_for_example() {
        let v = verify(spec(7, 4)).unwrap();
        assert!(v.prediction_holds && v.candidate_resolves);
        assert_eq!(v.exact_dimension, Some(3));
        assert_eq!(v.formula_mismatches, Some(0));
        assert!(!v.is_counterexample());

        let v = verify(spec(6, 4)).unwrap();
        assert!(!v.prediction_holds && !v.is_counterexample());
        assert_eq!(v.exact_dimension, Some(4));
    }

    #[test]
    fn wrong_prediction_is_reported_as_counterexample() {
        let mut v = verify(spec(7, 4)).unwrap();
        v.exact_dimension = Some(4);
        v.prediction_holds = false;
        assert!(v.is_counterexample());
        let report = SweepReport { verdicts: vec![v], skipped: Vec::new() };
        assert_eq!(report.counterexamples().len(), 1);
        assert!(report.to_text().contains("COUNTEREXAMPLE M(7,4)"));
        assert!(report.to_text().contains("basis {v11, v13, v42}"));

        let mut v = verify(spec(10, 2)).unwrap();
        v.formula_mismatches = Some(1);
        assert!(v.is_counterexample());
    }

    #[test]
    fn small_sweep_is_sorted_and_skips() {
        let cfg = SweepConfig { m: 3..=8, n: 2..=4, max_vertices: 21 };
        let r = run_sweep(&cfg).unwrap();
        let specs: Vec<_> = r.verdicts.iter().map(|v| (v.claim.spec.m(), v.claim.spec.n())).collect();
        let mut sorted = specs.clone();
        sorted.sort();
        assert_eq!(specs, sorted);
        assert!(r.skipped.iter().any(|s| (s.m, s.n) == (3, 3)));
        assert!(r.skipped.iter().any(|s| (s.m, s.n) == (8, 4) && s.reason.contains("exceeds")));
        assert!(r.counterexamples().is_empty());
        assert!(r.to_csv().starts_with("m,n,parity,theorem,predicted,exact,candidate_resolves,possibilities_pass\n"));
        assert!(r.to_text().contains("counterexamples: 0"));
    }
}
