use std::fmt;

use super::{LaurentError, LaurentPoly};

/// A fraction `num / den` over the Laurent ring.
///
/// Denominators are products of elements the caller has declared invertible
/// (typically `f_{i,α_i}`). Equality is by cross-multiplication, so no gcd
/// machinery is needed. Whenever the denominator divides the numerator, or is
/// itself a unit, the fraction is folded back into the ring.
#[derive(Clone)]
pub struct Frac {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Frac {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        Ok(Self { num, den }.reduced())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    /// The value as a ring element, if the denominator has cancelled.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<Self, LaurentError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    fn reduced(self) -> Self {
        if self.den.is_one() {
            return self;
        }
        if self.num.is_zero() {
            return Self::from_poly(LaurentPoly::zero());
        }
        if let Ok(inv) = self.den.unit_inverse() {
            return Self::from_poly(&self.num * &inv);
        }
        if let Some(q) = self.num.exact_div(&self.den) {
            return Self::from_poly(q);
        }
        self
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self { num: &self.num + &o.num, den: self.den.clone() }.reduced();
        }
        Self {
            num: &(&self.num * &o.den) + &(&o.num * &self.den),
            den: &self.den * &o.den,
        }
        .reduced()
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self { num: &self.num * &o.num, den: &self.den * &o.den }.reduced()
    }

    pub fn neg(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
}

impl PartialEq for Frac {
    fn eq(&self, o: &Self) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl From<LaurentPoly> for Frac {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Frac({self})")
    }
}
