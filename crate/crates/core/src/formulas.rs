//! Closed-form distances from the four corner landmarks.
//!
//! Every public evaluator checks the family hypothesis and the index range
//! before computing. Branch thresholds are half-integers in general, so they
//! are compared after doubling (`2i <= m+n-2q+1` rather than `i <= (m+n-2q+1)/2`).
//! The breadth-first distance table stays authoritative; these functions are
//! checked against it by [`validate_formulas`].

use std::fmt;

use crate::error::{Error, Result};
use crate::ladder::{Family, Ladder, LadderSpec, Vertex};
use crate::metrics::DistanceMatrix;

/// The corner vertices used as landmarks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corner {
    /// `v_{1,1}`
    FirstTop,
    /// `v_{1,n}`
    FirstBottom,
    /// `v_{m-1,1}`
    LastTop,
    /// `v_{m-1,n}`
    LastBottom,
}

impl Corner {
    pub fn vertex(self, spec: &LadderSpec) -> Vertex {
        let (i, q) = match self {
            Corner::FirstTop => (1, 1),
            Corner::FirstBottom => (1, spec.n()),
            Corner::LastTop => (spec.columns(), 1),
            Corner::LastBottom => (spec.columns(), spec.n()),
        };
        spec.vertex(i, q).expect("corners exist in every valid ladder")
    }
}

/// Which piece of the closed form is being evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaStep {
    /// Distances from `v_{1,1}`.
    FirstTop,
    /// Distances from `v_{1,n}`, by row reflection of `FirstTop`.
    FirstBottom,
    /// Distances from `v_{m-1,1}` to row 1.
    LastTopFirstRow,
    /// Distances from `v_{m-1,1}` to rows `2..=n`, by reflection of `FirstTop`.
    LastTopOtherRows,
    /// Distances from `v_{m-1,n}`; equal-parity family only.
    LastBottom,
}

impl FormulaStep {
    pub fn landmark(self) -> Corner {
        match self {
            FormulaStep::FirstTop => Corner::FirstTop,
            FormulaStep::FirstBottom => Corner::FirstBottom,
            FormulaStep::LastTopFirstRow | FormulaStep::LastTopOtherRows => Corner::LastTop,
            FormulaStep::LastBottom => Corner::LastBottom,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FormulaStep::FirstTop => "first-top",
            FormulaStep::FirstBottom => "first-bottom",
            FormulaStep::LastTopFirstRow => "last-top/row1",
            FormulaStep::LastTopOtherRows => "last-top/rows2+",
            FormulaStep::LastBottom => "last-bottom",
        }
    }

    fn covers_row(self, q: usize) -> bool {
        match self {
            FormulaStep::LastTopFirstRow => q == 1,
            FormulaStep::LastTopOtherRows => q >= 2,
            _ => true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormulaCase {
    pub family: Family,
    pub step: FormulaStep,
}

impl FormulaCase {
    /// Cases that exist for a family; `LastBottom` only for equal parity.
    pub fn all(family: Family) -> Vec<FormulaCase> {
        let mut steps = vec![
            FormulaStep::FirstTop,
            FormulaStep::FirstBottom,
            FormulaStep::LastTopFirstRow,
            FormulaStep::LastTopOtherRows,
        ];
        if family == Family::EqualParity {
            steps.push(FormulaStep::LastBottom);
        }
        steps.into_iter().map(|step| FormulaCase { family, step }).collect()
    }

    pub fn landmark(&self) -> Corner {
        self.step.landmark()
    }
}

impl fmt::Display for FormulaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family, self.step.name())
    }
}

fn check_cell(spec: &LadderSpec, i: usize, q: usize) -> Result<()> {
    spec.vertex(i, q).map(|_| ())
}

fn first_top_raw(spec: &LadderSpec, family: Family, i: usize, q: usize) -> usize {
    let (m, n, i, q) = (spec.m() as isize, spec.n() as isize, i as isize, q as isize);
    let slack = match family {
        Family::MixedParity => 1,
        Family::EqualParity => 2,
    };
    let d = if 2 * i <= m + n - 2 * q + slack { i + q - 2 } else { m + n - q - i };
    d as usize
}

fn last_top_first_row_raw(spec: &LadderSpec, family: Family, i: usize) -> usize {
    let (m, n, i) = (spec.m() as isize, spec.n() as isize, i as isize);
    let bound = match family {
        Family::MixedParity => m - n - 1,
        Family::EqualParity => m - n,
    };
    let d = if 2 * i <= bound { i + n - 1 } else { m - 1 - i };
    d as usize
}

/// `d(v_{1,1}, v_{i,q})` in the mixed-parity family.
pub fn first_top_mixed(spec: &LadderSpec, i: usize, q: usize) -> Result<usize> {
    spec.require(Family::MixedParity)?;
    check_cell(spec, i, q)?;
    Ok(first_top_raw(spec, Family::MixedParity, i, q))
}

/// `d(v_{1,1}, v_{i,q})` in the equal-parity family.
pub fn first_top_equal(spec: &LadderSpec, i: usize, q: usize) -> Result<usize> {
    spec.require(Family::EqualParity)?;
    check_cell(spec, i, q)?;
    Ok(first_top_raw(spec, Family::EqualParity, i, q))
}

pub fn first_top(spec: &LadderSpec, family: Family, i: usize, q: usize) -> Result<usize> {
    match family {
        Family::MixedParity => first_top_mixed(spec, i, q),
        Family::EqualParity => first_top_equal(spec, i, q),
    }
}

/// `d(v_{1,n}, v_{i,q}) = d(v_{1,1}, v_{i,n+1-q})`.
pub fn first_bottom(spec: &LadderSpec, family: Family, i: usize, q: usize) -> Result<usize> {
    check_cell(spec, i, q)?;
    first_top(spec, family, i, spec.n() + 1 - q)
}

/// `d(v_{m-1,1}, v_{i,1})` in the mixed-parity family.
pub fn last_top_first_row_mixed(spec: &LadderSpec, i: usize) -> Result<usize> {
    spec.require(Family::MixedParity)?;
    check_cell(spec, i, 1)?;
    Ok(last_top_first_row_raw(spec, Family::MixedParity, i))
}

/// `d(v_{m-1,1}, v_{i,1})` in the equal-parity family.
pub fn last_top_first_row_equal(spec: &LadderSpec, i: usize) -> Result<usize> {
    spec.require(Family::EqualParity)?;
    check_cell(spec, i, 1)?;
    Ok(last_top_first_row_raw(spec, Family::EqualParity, i))
}

pub fn last_top_first_row(spec: &LadderSpec, family: Family, i: usize) -> Result<usize> {
    match family {
        Family::MixedParity => last_top_first_row_mixed(spec, i),
        Family::EqualParity => last_top_first_row_equal(spec, i),
    }
}

/// `d(v_{m-1,1}, v_{i,q}) = d(v_{1,1}, v_{i,n+2-q})` for `q >= 2`.
pub fn last_top_other_rows(spec: &LadderSpec, family: Family, i: usize, q: usize) -> Result<usize> {
    check_cell(spec, i, q)?;
    if q == 1 {
        return Err(Error::Domain("row 1 is covered by the first-row formula".into()));
    }
    first_top(spec, family, i, spec.n() + 2 - q)
}

/// `d(v_{m-1,1}, v_{i,q})` for any row.
pub fn last_top(spec: &LadderSpec, family: Family, i: usize, q: usize) -> Result<usize> {
    if q == 1 {
        last_top_first_row(spec, family, i)
    } else {
        last_top_other_rows(spec, family, i, q)
    }
}

/// `d(v_{m-1,n}, v_{i,q}) = d(v_{m-1,1}, v_{i,n+1-q})`; equal-parity family.
pub fn last_bottom(spec: &LadderSpec, i: usize, q: usize) -> Result<usize> {
    spec.require(Family::EqualParity)?;
    check_cell(spec, i, q)?;
    last_top(spec, Family::EqualParity, i, spec.n() + 1 - q)
}

/// Evaluates a formula case at `(i, q)`. Errors if `q` lies outside the
/// rows the case covers.
pub fn evaluate(spec: &LadderSpec, case: FormulaCase, i: usize, q: usize) -> Result<usize> {
    let family = case.family;
    match case.step {
        FormulaStep::FirstTop => first_top(spec, family, i, q),
        FormulaStep::FirstBottom => first_bottom(spec, family, i, q),
        FormulaStep::LastTopFirstRow => {
            if q != 1 {
                return Err(Error::Domain("first-row formula needs q = 1".into()));
            }
            last_top_first_row(spec, family, i)
        }
        FormulaStep::LastTopOtherRows => last_top_other_rows(spec, family, i, q),
        FormulaStep::LastBottom => {
            if family != Family::EqualParity {
                return Err(Error::Domain("last-bottom formula exists only for equal parity".into()));
            }
            last_bottom(spec, i, q)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FormulaMismatch {
    pub case: FormulaCase,
    pub i: usize,
    pub q: usize,
    pub formula: usize,
    pub oracle: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaValidationReport {
    pub spec: LadderSpec,
    pub family: Family,
    /// `(case, cells checked, cells agreeing)` in case order.
    pub cases: Vec<(FormulaCase, usize, usize)>,
    /// Sorted by `(case, i, q)`.
    pub mismatches: Vec<FormulaMismatch>,
}

impl FormulaValidationReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn cells_checked(&self) -> usize {
        self.cases.iter().map(|c| c.1).sum()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("formula check for {} ({} family)\n", self.spec, self.family);
        for (case, checked, agreed) in &self.cases {
            out.push_str(&format!("  {:<32} {:>4}/{:<4} agree\n", case.to_string(), agreed, checked));
        }
        out.push_str(&format!("mismatches: {}\n", self.mismatches.len()));
        for mm in &self.mismatches {
            out.push_str(&format!(
                "  {} at i={} q={}: formula {} oracle {}\n",
                mm.case, mm.i, mm.q, mm.formula, mm.oracle
            ));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("case,i,q,formula_value,oracle_value\n");
        for mm in &self.mismatches {
            out.push_str(&format!("{},{},{},{},{}\n", mm.case, mm.i, mm.q, mm.formula, mm.oracle));
        }
        out
    }
}

/// Compares every applicable formula case at every cell against `matrix`.
pub fn validate_against(matrix: &DistanceMatrix) -> Result<FormulaValidationReport> {
    let spec = matrix.spec();
    let family = spec.family().ok_or(Error::NoApplicableFamily { m: spec.m(), n: spec.n() })?;
    let mut cases = Vec::new();
    let mut mismatches = Vec::new();
    for case in FormulaCase::all(family) {
        let landmark = case.landmark().vertex(&spec);
        let (mut checked, mut agreed) = (0, 0);
        for v in spec.vertices().filter(|v| case.step.covers_row(v.q)) {
            let formula = evaluate(&spec, case, v.i, v.q)?;
            let oracle = matrix.get(landmark, v) as usize;
            checked += 1;
            if formula == oracle {
                agreed += 1;
            } else {
                mismatches.push(FormulaMismatch { case, i: v.i, q: v.q, formula, oracle });
            }
        }
        cases.push((case, checked, agreed));
    }
    mismatches.sort();
    Ok(FormulaValidationReport { spec, family, cases, mismatches })
}

/// Builds `M(m,n)`, computes its distance table and runs [`validate_against`].
pub fn validate_formulas(spec: LadderSpec) -> Result<FormulaValidationReport> {
    if spec.family().is_none() {
        return Err(Error::NoApplicableFamily { m: spec.m(), n: spec.n() });
    }
    validate_against(&DistanceMatrix::all_pairs(&Ladder::build(spec)))
}
