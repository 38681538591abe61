//! Numerical companion to alternating-sign Hölder, Cauchy, and Minkowski
//! type inequalities.
//!
//! The crate evaluates the ratio functionals behind these inequalities,
//! computes their sharp constants, constructs the witness families that
//! approach (or nullify) each bound, verifies every inequality over seeded
//! sequence ensembles, evaluates the related alternating-series identities,
//! and searches for extremal sequences with a derivative-free optimizer.
//!
//! All operations are pure and stateless; values are immutable after
//! construction and safe for unrestricted concurrent use.

pub mod campaign;
pub mod classical;
pub mod error;
pub mod extremal;
pub mod ratios;
pub mod report;
pub mod series;
pub mod seqcore;

pub use error::{Error, Result};
pub use report::{RatioReport, TracePoint, WitnessTrace};
pub use seqcore::{alt_sum, BoundedMonotoneSeq, Direction, Distribution, GenSpec, Seq};
