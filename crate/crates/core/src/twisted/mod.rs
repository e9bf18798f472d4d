//! Graph automorphisms, the fixed submodule `V^G` with its orbit basis
//! `(e_Θ)`, and the twisted representation `ψ^G` of the fixed submonoid.

mod closed;
mod group;
mod orbits;
mod restrict;
mod typeb;

use thiserror::Error;

pub use closed::closed_form_delta;
pub use group::{automorphisms, subgroup, GraphAutGroup};
pub use orbits::{alpha_theta, collision_scan, orbit_basis, OrbitBasis};
pub use restrict::{
    check_equivariance, equivariance_violations, restrict, twisted_endo, twisted_generators, twisted_inverse,
    TwistedGenerator, DEFAULT_CLASS_CAP,
};
pub use typeb::{nonequivalence_condition, nonequivalence_value, typeb_det_formula, typeb_suite, typeb_words, TypeBSuite};

use crate::coxeter::CoxeterError;
use crate::families::FamilyError;
use crate::lkcore::LkError;
use crate::rootsys::RootError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistedError {
    #[error("permutation {0:?} is not a graph automorphism")]
    NotAutomorphism(Vec<usize>),
    #[error("the family is not G-equivariant: f_{i} at {root} differs from its image under g = {perm:?}")]
    NotEquivariant { i: usize, root: String, perm: Vec<usize> },
    #[error("word {word} is not fixed by g = {perm:?}")]
    NotFixedWord { word: String, perm: Vec<usize> },
    #[error("image of e_Θ{orbit} is not G-invariant (coefficients differ on Θ{target})")]
    StabilizationFailure { orbit: usize, target: usize },
    #[error("{0:?} is not an orbit of I under G")]
    NotAnOrbit(Vec<usize>),
    #[error("no closed form for this orbit: {0}")]
    UnsupportedOrbit(String),
    #[error("type B needs n ≥ 3 and k ∈ {{1, 2, 3}}, got n = {n}, k = {k}")]
    BadRank { n: usize, k: usize },
    #[error("twisted generators fail the braid relation between Δ_{0} and Δ_{1}")]
    BraidFailure(usize, usize),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Lk(#[from] LkError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}
