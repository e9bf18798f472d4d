//! The scalar ring `Z[x^±1, y^±1]`, fractions over it, and the parameter
//! triple `(b, c, d)` of a Lawrence-Krammer representation.

mod frac;
mod params;
mod poly;

use std::fmt;

use thiserror::Error;

pub use frac::Frac;
pub use params::{make_params, LkParams, PositivityReport, Regime};
pub use poly::{Exps, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("not a unit of the Laurent ring: {0}")]
    NotAUnit(String),
    #[error("negative x-exponent, x -> 0 is undefined: {0}")]
    NegativeXExponent(String),
    #[error("a = 0 (2r = p + q); the positivity criterion does not apply")]
    ZeroA,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inconsistent parameters: {0}")]
    BadParams(String),
}

/// The operations a matrix entry needs. Implemented by [`LaurentPoly`] and by
/// [`Frac`], so the same sparse-matrix code serves the ring and its
/// localisation.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_poly(p: &LaurentPoly) -> Self;
}

impl Scalar for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_poly(p: &LaurentPoly) -> Self {
        p.clone()
    }
}

impl Scalar for Frac {
    fn zero() -> Self {
        Frac::from_poly(LaurentPoly::zero())
    }
    fn one() -> Self {
        Frac::from_poly(LaurentPoly::one())
    }
    fn is_zero(&self) -> bool {
        Frac::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Frac::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Frac::mul(self, o)
    }
    fn neg(&self) -> Self {
        Frac::neg(self)
    }
    fn from_poly(p: &LaurentPoly) -> Self {
        Frac::from_poly(p.clone())
    }
}
