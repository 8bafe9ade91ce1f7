//! Intuitionistic fuzzy values, admissible orders and metrics, and TOPSIS
//! rankings that respect those orders.
//!
//! ```
//! use ifv_topsis::{datasets, topsis_proposed, MetricSpec};
//!
//! let problem = datasets::supplier_selection();
//! let ranking = topsis_proposed(&problem, &MetricSpec::xy(100.0).unwrap()).unwrap();
//! assert_eq!(ranking.preference_string(problem.alternatives()), "A2 ≻ A5 ≻ A4 ≻ A3 ≻ A1");
//! ```

pub mod datasets;
mod error;
pub mod harness;
pub mod ifv;
pub mod io;
pub mod measures;
pub mod orders;
pub mod sweep;
pub mod topsis;

pub use error::{Error, Result};
pub use ifv::{AggregationFn, AggregationPair, Ifv, IfvOp};
pub use measures::{MetricSpec, SimilarityKind};
pub use orders::OrderSpec;
pub use topsis::{
    topsis_chen, topsis_li, topsis_proposed, Attribute, AttributeKind, DecisionProblem, Method, RankingResult, Weights,
};
