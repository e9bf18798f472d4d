use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{LaurentError, LaurentPoly};

/// Which ordered specialisation of `y` is used to read off signs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    /// `0 < y < 1`, sampled at `y = 1/2`.
    #[serde(rename = "0<y<1")]
    SmallY,
    /// `y > 1`, sampled at `y = 2`.
    #[serde(rename = "y>1")]
    LargeY,
}

impl Regime {
    pub fn sample_point(self) -> BigRational {
        match self {
            Regime::SmallY => BigRational::new(BigInt::from(1), BigInt::from(2)),
            Regime::LargeY => BigRational::from_integer(BigInt::from(2)),
        }
    }

    /// Sign of `p` after `x -> 0` at this regime's sample point.
    pub fn sign(self, p: &LaurentPoly) -> Result<i8, LaurentError> {
        let v = p.eval_x0_at(&self.sample_point())?;
        Ok(if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        })
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::SmallY => "0<y<1",
            Regime::LargeY => "y>1",
        })
    }
}

impl FromStr for Regime {
    type Err = LaurentError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "0<y<1" | "small" | "small-y" => Ok(Regime::SmallY),
            "y>1" | "large" | "large-y" => Ok(Regime::LargeY),
            _ => Err(LaurentError::Parse(format!("unknown regime {s:?}"))),
        }
    }
}

/// The triple `(b, c, d)` of units together with `a = d - bc/d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LkParams {
    b: LaurentPoly,
    c: LaurentPoly,
    d: LaurentPoly,
    a: LaurentPoly,
    exponents: Option<(i64, i64, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    pub regime: Regime,
    pub a_pos: bool,
    pub b_pos: bool,
    pub c_pos: bool,
    pub d_pos: bool,
}

impl PositivityReport {
    pub fn all_positive(&self) -> bool {
        self.a_pos && self.b_pos && self.c_pos && self.d_pos
    }
}

/// `b = y^p`, `c = y^q`, `d = y^r`.
pub fn make_params(p: i64, q: i64, r: i64) -> LkParams {
    let y = |k: i64| LaurentPoly::y_pow(i32::try_from(k).expect("exponent out of range"));
    LkParams {
        b: y(p),
        c: y(q),
        d: y(r),
        a: &y(r) - &y(p + q - r),
        exponents: Some((p, q, r)),
    }
}

impl LkParams {
    /// General constructor; `b`, `c`, `d` must be units.
    pub fn new(b: LaurentPoly, c: LaurentPoly, d: LaurentPoly) -> Result<Self, LaurentError> {
        for u in [&b, &c, &d] {
            if !u.is_unit() {
                return Err(LaurentError::NotAUnit(u.to_string()));
            }
        }
        let a = &d - &(&b * &c).div_by_unit(&d)?;
        let out = Self { b, c, d, a, exponents: None };
        out.check_identity()?;
        Ok(out)
    }

    /// Checks `d·a = d² − b·c`.
    pub fn check_identity(&self) -> Result<(), LaurentError> {
        let lhs = &self.d * &self.a;
        let rhs = &(&self.d * &self.d) - &(&self.b * &self.c);
        if lhs == rhs {
            Ok(())
        } else {
            Err(LaurentError::BadParams(format!("d*a = {lhs} but d^2 - b*c = {rhs}")))
        }
    }

    pub fn a(&self) -> &LaurentPoly {
        &self.a
    }
    pub fn b(&self) -> &LaurentPoly {
        &self.b
    }
    pub fn c(&self) -> &LaurentPoly {
        &self.c
    }
    pub fn d(&self) -> &LaurentPoly {
        &self.d
    }
    pub fn exponents(&self) -> Option<(i64, i64, i64)> {
        self.exponents
    }

    pub fn inv_b(&self) -> LaurentPoly {
        self.b.unit_inverse().expect("b is a unit")
    }
    pub fn inv_c(&self) -> LaurentPoly {
        self.c.unit_inverse().expect("c is a unit")
    }
    pub fn inv_d(&self) -> LaurentPoly {
        self.d.unit_inverse().expect("d is a unit")
    }

    /// `(b/d)^k` for any integer `k`.
    pub fn b_over_d(&self, k: i64) -> LaurentPoly {
        (&self.b * &self.inv_d()).powi(k).expect("b/d is a unit")
    }

    pub fn positivity_report(&self, regime: Regime) -> Result<PositivityReport, LaurentError> {
        if self.a.is_zero() {
            return Err(LaurentError::ZeroA);
        }
        if let Some((p, q, r)) = self.exponents {
            let a_pos = match regime {
                Regime::SmallY => 2 * r < p + q,
                Regime::LargeY => 2 * r > p + q,
            };
            return Ok(PositivityReport { regime, a_pos, b_pos: true, c_pos: true, d_pos: true });
        }
        self.positivity_by_evaluation(regime)
    }

    /// Sign test by exact evaluation at the regime's sample point.
    pub fn positivity_by_evaluation(&self, regime: Regime) -> Result<PositivityReport, LaurentError> {
        if self.a.is_zero() {
            return Err(LaurentError::ZeroA);
        }
        let pos = |p: &LaurentPoly| regime.sign(p).map(|s| s > 0);
        Ok(PositivityReport {
            regime,
            a_pos: pos(&self.a)?,
            b_pos: pos(&self.b)?,
            c_pos: pos(&self.c)?,
            d_pos: pos(&self.d)?,
        })
    }
}

impl Serialize for LkParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        if let Some((p, q, r)) = self.exponents {
            m.serialize_entry("pqr", &[p, q, r])?;
        }
        for (k, v) in [("a", &self.a), ("b", &self.b), ("c", &self.c), ("d", &self.d)] {
            m.serialize_entry(k, &v.to_string())?;
        }
        m.end()
    }
}
