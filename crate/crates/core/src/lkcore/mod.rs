//! The maps `φ_i`, `ψ_i` on the free module with basis `(e_α)_{α ∈ Φ⁺}`,
//! LK-families and their characterisations, and determinants.
//!
//! Convention: `ψ(e_α)` is a column. The values `f_{i,α}` of a form `f_i`
//! fill the `α_i` row of `ψ_i`.

mod checks;
mod det;
mod endo;
mod family;
mod maps;

use thiserror::Error;

pub use checks::{
    check_family_conditions, check_table1, lemma_cool_check, relation5_redundancy_check, CheckReport, Violation,
};
pub use det::{det, det_dense};
pub use endo::SparseEndo;
pub use family::LkFamily;
pub use maps::{apply_word, apply_word_inverse, braid_check, phi, psi, psi_inverse, BraidCheck, WordEvaluator};

use crate::rootsys::RootError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LkError {
    #[error("f_{{{i},α_{i}}} is zero, ψ_{i} is not invertible")]
    NonUnitPivot { i: usize },
    #[error("determinant needs a complete root table")]
    TruncatedTable,
    #[error("graph has no triangle")]
    NoTriangle,
    #[error("f_{i}(e_α_{j}) = {value}, expected 0")]
    ConditionOne { i: usize, j: usize, value: String },
    #[error("bad family shape: {0}")]
    Shape(String),
    #[error(transparent)]
    Root(#[from] RootError),
}
