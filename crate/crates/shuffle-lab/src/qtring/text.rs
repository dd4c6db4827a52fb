//! Canonical text form for polynomials and fractions.
//!
//! Terms are listed in serialization order with explicit coefficients, e.g.
//! `1 - 1*q - 1*t + 1*q*t`; a fraction is `num | den`. Parsing round-trips
//! bit-exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{Exp, QtPoly};
use super::rat::QtRat;
use super::Coeff;
use crate::error::Error;

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_term(f, &c.abs(), e)?;
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &Coeff, e: &Exp) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())?;
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())?;
    }
    if e.q > 0 {
        write!(f, "*q")?;
        if e.q > 1 {
            write!(f, "^{}", e.q)?;
        }
    }
    if e.t > 0 {
        write!(f, "*t")?;
        if e.t > 1 {
            write!(f, "^{}", e.t)?;
        }
    }
    Ok(())
}

impl fmt::Display for QtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.num(), self.den())
    }
}

impl FromStr for QtPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        parse_poly(s)
    }
}

impl FromStr for QtRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.split_once('|') {
            Some((num, den)) => {
                let num = parse_poly(num)?;
                let den = parse_poly(den)?;
                QtRat::checked_new(num, den)
            }
            None => Ok(QtRat::from_poly(parse_poly(s)?)),
        }
    }
}

fn parse_poly(s: &str) -> Result<QtPoly, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut out = QtPoly::zero();
    let mut rest = s;
    let mut sign = BigInt::one();
    // Leading sign.
    if let Some(r) = rest.strip_prefix('-') {
        sign = -sign;
        rest = r.trim_start();
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r.trim_start();
    }
    loop {
        let (term, after) = split_term(rest);
        let (c, q, t) = parse_term(term)?;
        out += &QtPoly::monomial(c * Coeff::from_integer(sign.clone()), q, t);
        match after {
            None => break,
            Some((next_sign, r)) => {
                sign = if next_sign { -BigInt::one() } else { BigInt::one() };
                rest = r;
            }
        }
    }
    Ok(out)
}

/// Splits off one term; returns the remainder with the sign of the next term.
fn split_term(s: &str) -> (&str, Option<(bool, &str)>) {
    for (i, ch) in s.char_indices() {
        // A sign starts a new term only when surrounded by whitespace, which
        // keeps coefficients like `-1/2` intact inside the term.
        if (ch == '+' || ch == '-') && i > 0 && s[..i].ends_with(' ') {
            let term = s[..i].trim();
            let rest = s[i + 1..].trim_start();
            return (term, Some((ch == '-', rest)));
        }
    }
    (s.trim(), None)
}

fn parse_term(term: &str) -> Result<(Coeff, u32, u32), Error> {
    let mut coeff = Coeff::one();
    let mut q: u32 = 0;
    let mut t: u32 = 0;
    let mut saw_coeff = false;
    for factor in term.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{term}`")));
        }
        if let Some(rest) = factor.strip_prefix('q') {
            q += parse_exponent(rest, term)?;
        } else if let Some(rest) = factor.strip_prefix('t') {
            t += parse_exponent(rest, term)?;
        } else {
            if saw_coeff {
                return Err(Error::Parse(format!("two coefficients in `{term}`")));
            }
            saw_coeff = true;
            coeff = parse_coeff(factor)?;
        }
    }
    Ok((coeff, q, t))
}

fn parse_exponent(rest: &str, term: &str) -> Result<u32, Error> {
    if rest.is_empty() {
        Ok(1)
    } else if let Some(e) = rest.strip_prefix('^') {
        e.parse::<u32>()
            .map_err(|_| Error::Parse(format!("bad exponent in `{term}`")))
    } else {
        Err(Error::Parse(format!("bad factor in `{term}`")))
    }
}

fn parse_coeff(s: &str) -> Result<Coeff, Error> {
    let parse_int =
        |x: &str| BigInt::from_str(x.trim()).map_err(|_| Error::Parse(format!("bad integer `{x}`")));
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse("zero denominator in coefficient".into()));
            }
            Ok(Coeff::new(parse_int(n)?, d))
        }
        None => Ok(Coeff::from_integer(parse_int(s)?)),
    }
}

impl Serialize for QtPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QtPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for QtRat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QtRat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
