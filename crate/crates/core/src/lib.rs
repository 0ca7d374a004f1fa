//! Generalized Möbius ladders `M(m,n)`: construction, exact distances,
//! closed-form corner distances, and exact metric dimension.
//!
//! ```
//! use mobius_core::{DistanceMatrix, Ladder, LadderSpec, metric_dimension};
//!
//! let spec = LadderSpec::new(7, 4).unwrap();
//! let matrix = DistanceMatrix::all_pairs(&Ladder::build(spec));
//! let report = metric_dimension(&matrix, None).unwrap();
//! assert_eq!(report.dimension(), Some(3));
//! ```

pub mod error;
pub mod fixture;
pub mod formulas;
pub mod ladder;
pub mod metrics;
pub mod resolver;
pub mod table;
pub mod theorems;

pub use error::{Error, Result};
pub use fixture::{compare_fixture, load_fixture, shipped_fixture, ErrataReport, PaperTableFixture};
pub use formulas::{validate_formulas, Corner, FormulaCase, FormulaStep, FormulaValidationReport};
pub use ladder::{Family, Ladder, LadderSpec, Vertex};
pub use metrics::{sssp, Distance, DistanceMatrix};
pub use resolver::{
    greedy_upper_bound, is_resolving, metric_dimension, representation, CollisionWitness, DimensionReport,
    Representation, Resolution, SearchStatus,
};
pub use table::{emit_table, parse_table};
pub use theorems::{
    check_possibilities_equal, check_possibilities_mixed, claim_for, run_sweep, verify, verify_with_matrix,
    SweepConfig, SweepReport, TheoremClaim, TheoremVerdict,
};
