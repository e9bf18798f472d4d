use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::LaurentError;

/// Exponent pair `(x, y)`.
pub type Exps = (i32, i32);

/// An element of `Z[x^±1, y^±1]`.
///
/// Terms live in a `BTreeMap` keyed by `(x, y)` exponents, so equality and
/// hashing are canonical. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exps, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial<C: Into<BigInt>>(c: C, xe: i32, ye: i32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((xe, ye), c);
        }
        Self { terms }
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn y_pow(k: i32) -> Self {
        Self::monomial(1, 0, k)
    }

    /// Builds a polynomial from `(exps, coeff)` pairs, summing repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exps, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: Exps, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exps, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, xe: i32, ye: i32) -> BigInt {
        self.terms.get(&(xe, ye)).cloned().unwrap_or_default()
    }

    /// The single term, if this is a monomial.
    pub fn as_monomial(&self) -> Option<(&BigInt, Exps)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(e, c)| (c, *e))
    }

    /// Units of the Laurent ring are exactly the `±x^i y^j`.
    pub fn is_unit(&self) -> bool {
        self.as_monomial().is_some_and(|(c, _)| c.abs().is_one())
    }

    pub fn unit_inverse(&self) -> Result<Self, LaurentError> {
        match self.as_monomial() {
            Some((c, (xe, ye))) if c.abs().is_one() => Ok(Self::monomial(c.clone(), -xe, -ye)),
            _ => Err(LaurentError::NotAUnit(self.to_string())),
        }
    }

    pub fn div_by_unit(&self, u: &Self) -> Result<Self, LaurentError> {
        Ok(self * &u.unit_inverse()?)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn shift(&self, dx: i32, dy: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|((x, y), c)| ((x + dx, y + dy), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Integer power; negative exponents require a unit.
    pub fn powi(&self, k: i64) -> Result<Self, LaurentError> {
        let e = u32::try_from(k.unsigned_abs()).expect("exponent out of range");
        if k >= 0 {
            Ok(self.pow(e))
        } else {
            Ok(self.unit_inverse()?.pow(e))
        }
    }

    /// Componentwise minimum exponents. Zero maps to `(0, 0)`.
    pub fn min_exps(&self) -> Exps {
        let mx = self.terms.keys().map(|e| e.0).min().unwrap_or(0);
        let my = self.terms.keys().map(|e| e.1).min().unwrap_or(0);
        (mx, my)
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` if `d` does not divide.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((dc, (dx, dy))) = d.as_monomial() {
            let mut out = BTreeMap::new();
            for ((x, y), c) in &self.terms {
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                out.insert((x - dx, y - dy), q);
            }
            return Some(Self { terms: out });
        }
        // Strip monomial content from both sides, then run lex-order division
        // in the ordinary polynomial ring.
        let (dx, dy) = d.min_exps();
        let (nx, ny) = self.min_exps();
        let dn = d.shift(-dx, -dy);
        let mut r = self.shift(-nx, -ny);
        let (&(lx, ly), lc) = dn.terms.iter().next_back().expect("nonzero");
        let mut q = Self::zero();
        while let Some((&(rx, ry), rc)) = r.terms.iter().next_back() {
            if rx < lx || ry < ly {
                return None;
            }
            let (qc, rem) = rc.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            let t = Self::monomial(qc, rx - lx, ry - ly);
            r -= &(&t * &dn);
            q += &t;
        }
        Some(q.shift(nx - dx, ny - dy))
    }

    /// The `x -> 0` specialisation: keeps the `x`-degree-0 part.
    pub fn eval_x0(&self) -> Result<Self, LaurentError> {
        if self.terms.keys().any(|e| e.0 < 0) {
            return Err(LaurentError::NegativeXExponent(self.to_string()));
        }
        Ok(Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.0 == 0)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        })
    }

    /// True if every term carries a positive power of `x`.
    pub fn in_x_ideal(&self) -> bool {
        self.terms.keys().all(|e| e.0 >= 1)
    }

    /// Exact value at `x = 0` (after [`eval_x0`](Self::eval_x0)) and the given rational `y`.
    pub fn eval_x0_at(&self, y: &BigRational) -> Result<BigRational, LaurentError> {
        let p = self.eval_x0()?;
        let mut acc = BigRational::zero();
        for ((_, ye), c) in &p.terms {
            let yk = if *ye >= 0 {
                y.pow(*ye)
            } else {
                y.recip().pow(-*ye)
            };
            acc += yk * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Total degree of the highest term, used only for display ordering.
    fn display_order(&self) -> Vec<(Exps, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        v.sort_by_key(|((x, y), _)| (Reverse(*x as i64 + *y as i64), Reverse(*x)));
        v
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, ((xe, ye), c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts = Vec::new();
            for (v, e) in [("x", xe), ("y", ye)] {
                match e {
                    0 => {}
                    1 => parts.push(v.to_string()),
                    _ => parts.push(format!("{v}^{e}")),
                }
            }
            if parts.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", parts.join("*"))?;
            } else {
                write!(f, "{abs}*{}", parts.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl<'a> Add<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for ((ax, ay), ac) in &self.terms {
            for ((bx, by), bc) in &rhs.terms {
                out.add_term((ax + bx, ay + by), ac * bc);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

// ---------------------------------------------------------------------------
// Text form

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> LaurentError {
        LaurentError::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<BigInt, LaurentError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        txt.parse().map_err(|_| self.err("bad integer"))
    }

    fn signed_exp(&mut self) -> Result<i32, LaurentError> {
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let v = self.int()?.to_i32().ok_or_else(|| self.err("exponent too large"))?;
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<LaurentPoly, LaurentError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc += &self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, LaurentError> {
        let neg = self.eat(b'-');
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(if neg { -acc } else { acc })
    }

    fn factor(&mut self) -> Result<LaurentPoly, LaurentError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                if self.eat(b'^') {
                    let e = self.signed_exp()?;
                    return inner.powi(e as i64);
                }
                Ok(inner)
            }
            Some(v @ (b'x' | b'y')) => {
                self.pos += 1;
                let e = if self.eat(b'^') { self.signed_exp()? } else { 1 };
                Ok(if v == b'x' {
                    LaurentPoly::monomial(1, e, 0)
                } else {
                    LaurentPoly::monomial(1, 0, e)
                })
            }
            Some(b) if b.is_ascii_digit() => Ok(LaurentPoly::constant(self.int()?)),
            _ => Err(self.err("unexpected token")),
        }
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let out = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// JSON form: a list of [xe, ye, coeff] triples. Coefficients outside i64 are
// written as decimal strings.

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coeff {
    Small(i64),
    Big(String),
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let triples: Vec<(i32, i32, Coeff)> = self
            .terms
            .iter()
            .map(|((x, y), c)| {
                let c = c.to_i64().map(Coeff::Small).unwrap_or_else(|| Coeff::Big(c.to_string()));
                (*x, *y, c)
            })
            .collect();
        triples.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let triples: Vec<(i32, i32, Coeff)> = Vec::deserialize(d)?;
        let mut out = LaurentPoly::zero();
        for (x, y, c) in triples {
            let c = match c {
                Coeff::Small(v) => BigInt::from(v),
                Coeff::Big(s) => s.parse().map_err(D::Error::custom)?,
            };
            out.add_term((x, y), c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn unit_cancellation() {
        assert!((LaurentPoly::x() * LaurentPoly::monomial(1, -1, 0)).is_one());
        let y = LaurentPoly::y();
        assert!((&(&y - &y) * &p("3*x + 7")).is_zero());
        assert_eq!(LaurentPoly::y_pow(2) * LaurentPoly::y_pow(-5), LaurentPoly::y_pow(-3));
    }

    #[test]
    fn divide_by_units() {
        let y = LaurentPoly::y();
        assert_eq!(p("y^3").div_by_unit(&y).unwrap(), p("y^2"));
        assert_eq!(p("x*y^2 + y").div_by_unit(&y).unwrap(), p("x*y + 1"));
        assert_eq!(LaurentPoly::one().div_by_unit(&p("x^2")).unwrap(), p("x^-2"));
        assert!(matches!(p("1 + y").unit_inverse(), Err(LaurentError::NotAUnit(_))));
    }

    #[test]
    fn text_form() {
        let q = LaurentPoly::from_terms([((-1, 2), 3), ((0, 0), 1)]);
        assert_eq!(q.to_string(), "3*x^-1*y^2 + 1");
        assert_eq!(p("3*x^-1*y^2 + 1"), q);
        assert_eq!(p("-x - 2*y^-3").to_string(), "-x - 2*y^-3");
        assert_eq!(p("(1 - y)^2"), p("1 - 2*y + y^2"));
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert!("x +".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn exact_division() {
        let a = p("1 - y + x*y^-2");
        let b = p("x^-1 + 2*y");
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert!(p("1 + x").exact_div(&p("1 + y")).is_none());
        assert!(p("3").exact_div(&p("2")).is_none());
    }

    #[test]
    fn x0_evaluation() {
        assert!(p("x*y^2").eval_x0().unwrap().is_zero());
        assert_eq!(p("y + x").eval_x0().unwrap(), p("y"));
        assert!(matches!(p("x^-1").eval_x0(), Err(LaurentError::NegativeXExponent(_))));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(
            p("1 - y + x").eval_x0_at(&half).unwrap(),
            BigRational::new(1.into(), 2.into())
        );
    }

    #[test]
    fn json_triples() {
        let q = p("3*x^-1*y^2 - 5");
        let js = serde_json::to_string(&q).unwrap();
        assert_eq!(js, "[[-1,2,3],[0,0,-5]]");
        let back: LaurentPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, q);
        let big = LaurentPoly::constant(BigInt::from(10).pow(30));
        let back: LaurentPoly = serde_json::from_str(&serde_json::to_string(&big).unwrap()).unwrap();
        assert_eq!(back, big);
    }
}
