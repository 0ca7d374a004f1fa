use thiserror::Error;

use crate::ladder::Family;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ladder M({m},{n}): {reason}")]
    InvalidSpec { m: usize, n: usize, reason: &'static str },

    #[error("label v({i},{q}) is outside M({m},{n}) (need 1 <= i <= {max_i}, 1 <= q <= {n})", max_i = m - 1)]
    LabelOutOfRange { m: usize, n: usize, i: usize, q: usize },

    #[error("index {idx} is outside M({m},{n}) with {count} vertices")]
    IndexOutOfRange { m: usize, n: usize, idx: usize, count: usize },

    #[error("cannot parse vertex label `{label}`: {reason}")]
    BadLabel { label: String, reason: String },

    #[error("M({m},{n}) does not satisfy the {family} hypothesis")]
    HypothesisViolated { m: usize, n: usize, family: Family },

    #[error("M({m},{n}) satisfies neither dimension-claim hypothesis")]
    NoApplicableFamily { m: usize, n: usize },

    #[error("{0}")]
    Domain(String),

    #[error("landmark set is empty")]
    EmptyLandmarks,

    #[error("landmark {label} appears more than once")]
    DuplicateLandmark { label: String },

    #[error("parse error at row {row}, column {column}: {message}")]
    Parse { row: usize, column: usize, message: String },

    #[error("table is for M({got_m},{got_n}) but the distance matrix is for M({want_m},{want_n})")]
    SpecMismatch { got_m: usize, got_n: usize, want_m: usize, want_n: usize },

    #[error("split width must be at least 1")]
    ZeroSplitWidth,

    #[error("search budget must be at least 1")]
    ZeroBudget,

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
