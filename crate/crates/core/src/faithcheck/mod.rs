//! Hée's route to faithfulness: specialise `x -> 0`, read the nonnegative
//! matrices as binary relations on `Φ⁺`, and recover `I(b)` from `R_b(Φ⁺)`.
//! Also bounded-length experiments comparing `ψ` and `ψ^G` against the
//! rewriting oracle.
//!
//! Cancellativity of the image is not tested directly. [`criterion_report`]
//! checks the sufficient condition instead: every `f_{i,α}` lies in `x·R`
//! and `f_{i,α_i} ≠ 0`, so the images are invertible over `Q(x, y)`.

mod criterion;
mod experiment;
mod relation;

use serde::Serialize;
use thiserror::Error;

pub use criterion::{criterion_report, hee_properties, CriterionReport, HeeReport};
pub use experiment::{faithfulness_experiment, twisted_faithfulness_experiment, ExperimentConfig, FaithReport};
pub use relation::{recover_initial_set, relation_of_endo, RootRelation};

use crate::coxeter::CoxeterError;
use crate::laurent::LaurentError;
use crate::twisted::TwistedError;

/// Maximum number of witnesses kept per check.
pub const MAX_WITNESSES: usize = 20;

/// One named pass/fail line of a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Offending instances, truncated to [`MAX_WITNESSES`].
    pub witnesses: Vec<String>,
    /// Number of offending instances before truncation.
    pub failures: usize,
}

impl Check {
    pub fn from_failures(name: &str, failures: Vec<String>) -> Self {
        let n = failures.len();
        Check {
            name: name.into(),
            passed: n == 0,
            witnesses: failures.into_iter().take(MAX_WITNESSES).collect(),
            failures: n,
        }
    }
}

#[derive(Debug, Clone, Error)]
pub enum FaithError {
    #[error("coefficient of e_{beta} in the image of e_{alpha} is {value} < 0 after x -> 0")]
    NegativeEntry { beta: String, alpha: String, value: String },
    #[error("the faithfulness criterion does not hold for this family")]
    CriterionFailed(Box<CriterionReport>),
    #[error("enumeration cap {0} exceeded")]
    CapExceeded(usize),
    #[error("faithfulness violated: {}", .0.failed_checks().join(", "))]
    FaithfulnessViolation(Box<FaithReport>),
    #[error("experiment needs a complete root table: {0}")]
    Truncated(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Coxeter(CoxeterError),
    #[error(transparent)]
    Twisted(TwistedError),
}

impl From<CoxeterError> for FaithError {
    fn from(e: CoxeterError) -> Self {
        match e {
            CoxeterError::CapExceeded(c) => FaithError::CapExceeded(c),
            e => FaithError::Coxeter(e),
        }
    }
}

impl From<TwistedError> for FaithError {
    fn from(e: TwistedError) -> Self {
        match e {
            TwistedError::Coxeter(e) => e.into(),
            e => FaithError::Twisted(e),
        }
    }
}
