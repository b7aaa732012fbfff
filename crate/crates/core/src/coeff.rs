//! Exact coefficients in the Laurent ring ℚ[t, t⁻¹].
//!
//! The indeterminate `t` stands for `e^k`, so a weight such as `e^{k·m·n}` is the
//! monomial `t^{m·n}` and products of weights just add exponents. Coefficients
//! are kept canonical: exponents strictly increasing, no zero rationals stored.
//!
//! Text format: terms by descending exponent, `p/q*t^e`, with `/q` dropped when
//! `q = 1`, `*t^e` dropped when `e = 0`, a unit rational dropped in front of a
//! power of `t`, and `t^1` written `t`. Zero is `0`. Example: `3/2*t^6 - 2`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Coefficient {
    terms: Vec<(i64, Rational)>,
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(Rational::from_integer(BigInt::from(n)), 0)
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::monomial(r, 0)
    }

    /// `r · t^e`.
    pub fn monomial(r: Rational, e: i64) -> Self {
        if r.is_zero() {
            Self::zero()
        } else {
            Coefficient {
                terms: vec![(e, r)],
            }
        }
    }

    /// `t^e`.
    pub fn t_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(0, r)] if r.is_one())
    }

    /// `(exponent, rational)` pairs in increasing exponent order.
    pub fn terms(&self) -> &[(i64, Rational)] {
        &self.terms
    }

    /// The value when the coefficient is a plain rational (only exponent 0).
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(0, r)] => Some(r.clone()),
            _ => None,
        }
    }

    pub fn scale_int(&self, k: u64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        let k = Rational::from_integer(BigInt::from(k));
        Coefficient {
            terms: self.terms.iter().map(|(e, r)| (*e, r * &k)).collect(),
        }
    }

    /// Specializes `t ↦ value`. Returns `None` for `value = 0` when a negative
    /// exponent is present.
    pub fn eval_at(&self, value: &Rational) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (e, r) in &self.terms {
            let p = if *e >= 0 {
                num_traits::pow(value.clone(), *e as usize)
            } else {
                if value.is_zero() {
                    return None;
                }
                num_traits::pow(value.recip(), e.unsigned_abs() as usize)
            };
            acc += r * p;
        }
        Some(acc)
    }

    fn from_unsorted(mut raw: Vec<(i64, Rational)>) -> Self {
        raw.sort_by_key(|(e, _)| *e);
        let mut terms: Vec<(i64, Rational)> = Vec::with_capacity(raw.len());
        for (e, r) in raw {
            match terms.last_mut() {
                Some((le, lr)) if *le == e => *lr += r,
                _ => terms.push((e, r)),
            }
        }
        terms.retain(|(_, r)| !r.is_zero());
        Coefficient { terms }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |r: &Rational| if negate_other { -r } else { r.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, sign(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = if negate_other {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !s.is_zero() {
                        out.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(e, r)| (*e, sign(r))));
        Coefficient { terms: out }
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        self.merge(rhs, false)
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self.merge(rhs, true)
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        if self.is_zero() || rhs.is_zero() {
            return Coefficient::zero();
        }
        if let ([(ea, ra)], [(eb, rb)]) = (self.terms.as_slice(), rhs.terms.as_slice()) {
            return Coefficient::monomial(ra * rb, ea + eb);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ea, ra) in &self.terms {
            for (eb, rb) in &rhs.terms {
                raw.push((ea + eb, ra * rb));
            }
        }
        Coefficient::from_unsorted(raw)
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient {
            terms: self.terms.iter().map(|(e, r)| (*e, -r)).collect(),
        }
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        *self = &*self + rhs;
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Coefficient {
            type Output = Coefficient;
            fn $m(self, rhs: Coefficient) -> Coefficient {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::from_int(n)
    }
}

impl From<Rational> for Coefficient {
    fn from(r: Rational) -> Self {
        Coefficient::from_rational(r)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, r: &Rational, e: i64) -> fmt::Result {
    let abs = r.abs();
    if e == 0 {
        return write!(f, "{abs}");
    }
    if !abs.is_one() {
        write!(f, "{abs}*")?;
    }
    if e == 1 {
        write!(f, "t")
    } else {
        write!(f, "t^{e}")
    }
}

impl Coefficient {
    /// True when the text form is a single term (no top-level `+`/`-` separators).
    pub fn is_single_term(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when the leading printed term is negative.
    pub fn is_negative_leading(&self) -> bool {
        self.terms.last().is_some_and(|(_, r)| r.is_negative())
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, r)) in self.terms.iter().rev().enumerate() {
            match (i, r.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_term(f, r, *e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coefficient({self})")
    }
}

struct Cursor<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn err(&self, reason: impl Into<String>) -> Error {
        Error::parse("coefficient", self.src, reason)
    }

    fn term(&mut self) -> Result<(i64, Rational)> {
        let mut r = None;
        if let Some(num) = self.digits() {
            let num: BigInt = num.parse().map_err(|_| self.err("bad numerator"))?;
            let den = if self.eat('/') {
                let d = self
                    .digits()
                    .ok_or_else(|| self.err("missing denominator"))?;
                let d: BigInt = d.parse().map_err(|_| self.err("bad denominator"))?;
                if d.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                d
            } else {
                BigInt::one()
            };
            r = Some(Rational::new(num, den));
            let mark = self.pos;
            self.skip_ws();
            if !self.eat('*') {
                self.pos = mark;
                return Ok((0, r.unwrap()));
            }
            self.skip_ws();
        }
        if !self.eat('t') {
            return Err(self.err(format!("expected 't' at offset {}", self.pos)));
        }
        let e = if self.eat('^') {
            let neg = self.eat('-');
            let d = self.digits().ok_or_else(|| self.err("missing exponent"))?;
            let e: i64 = d.parse().map_err(|_| self.err("exponent out of range"))?;
            if neg {
                -e
            } else {
                e
            }
        } else {
            1
        };
        Ok((e, r.unwrap_or_else(Rational::one)))
    }
}

impl FromStr for Coefficient {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor {
            src: s,
            chars: s.chars().collect(),
            pos: 0,
        };
        cur.skip_ws();
        if cur.peek().is_none() {
            return Err(cur.err("empty"));
        }
        let mut raw = Vec::new();
        let mut first = true;
        while cur.peek().is_some() {
            let negative = if cur.eat('-') {
                true
            } else if cur.eat('+') || first {
                false
            } else {
                return Err(cur.err(format!("expected '+' or '-' at offset {}", cur.pos)));
            };
            cur.skip_ws();
            let (e, r) = cur.term()?;
            cur.skip_ws();
            raw.push((e, if negative { -r } else { r }));
            first = false;
        }
        Ok(Coefficient::from_unsorted(raw))
    }
}

impl Serialize for Coefficient {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Coefficient {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
