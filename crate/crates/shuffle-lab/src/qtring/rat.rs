use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::QtPoly;
use super::Coeff;
use crate::error::{Error, Result};

/// An element of the field Q(q,t), stored as a reduced fraction.
///
/// Canonical form: `gcd(num, den)` is a unit, the denominator is a primitive
/// integer polynomial, and its leading coefficient (in serialization order)
/// is positive. Structural equality is therefore mathematical equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QtRat {
    num: QtPoly,
    den: QtPoly,
}

impl QtRat {
    /// Build `num / den`. Panics if `den` is zero; use [`QtRat::checked_new`]
    /// for a recoverable error.
    pub fn new(num: QtPoly, den: QtPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in Q(q,t)");
        Self::reduced(num, den)
    }

    pub fn checked_new(num: QtPoly, den: QtPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: QtPoly, den: QtPoly) -> Self {
        if num.is_zero() {
            return QtRat { num: QtPoly::zero(), den: QtPoly::one() };
        }
        let (num, den) = if den.is_constant() || den.is_monomial() || num.is_monomial() {
            // gcd with a monomial is a monomial; handled inside QtPoly::gcd
            // cheaply, but skip entirely for constant denominators.
            if den.is_constant() {
                (num, den)
            } else {
                let g = QtPoly::gcd(&num, &den);
                if g.is_one() {
                    (num, den)
                } else {
                    (num.div_exact(&g), den.div_exact(&g))
                }
            }
        } else {
            let g = QtPoly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        // Normalize the scalar ambiguity: primitive integer denominator with
        // positive leading coefficient.
        let c = den.content_signed();
        let inv = c.recip();
        QtRat { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn zero() -> Self {
        QtRat { num: QtPoly::zero(), den: QtPoly::one() }
    }

    pub fn one() -> Self {
        QtRat { num: QtPoly::one(), den: QtPoly::one() }
    }

    pub fn from_poly(p: QtPoly) -> Self {
        QtRat { num: p, den: QtPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(QtPoly::from_int(n))
    }

    pub fn from_rational(c: Coeff) -> Self {
        Self::from_poly(QtPoly::constant(c))
    }

    pub fn var_q() -> Self {
        Self::from_poly(QtPoly::var_q())
    }

    pub fn var_t() -> Self {
        Self::from_poly(QtPoly::var_t())
    }

    /// `q^a t^b` with possibly negative exponents.
    pub fn monomial_pow(a: i64, b: i64) -> Self {
        let num = QtPoly::monomial(
            Coeff::one(),
            a.max(0) as u32,
            b.max(0) as u32,
        );
        let den = QtPoly::monomial(
            Coeff::one(),
            (-a).max(0) as u32,
            (-b).max(0) as u32,
        );
        QtRat { num, den }
    }

    pub fn num(&self) -> &QtPoly {
        &self.num
    }

    pub fn den(&self) -> &QtPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The underlying polynomial when the denominator is 1.
    pub fn as_poly(&self) -> Option<&QtPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Coeff> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in Q(q,t)");
        Self::reduced(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self / rhs)
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.recip() } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    pub fn swap_qt(&self) -> Self {
        Self::reduced(self.num.swap_qt(), self.den.swap_qt())
    }

    /// Exact substitution of rational values for `q` and/or `t` (`None`
    /// keeps the variable symbolic). Errors if the denominator vanishes
    /// under the substitution.
    pub fn specialize(&self, q0: Option<&Coeff>, t0: Option<&Coeff>) -> Result<Self> {
        let den = self.den.eval_partial(q0, t0);
        if den.is_zero() {
            return Err(Error::Pole);
        }
        let num = self.num.eval_partial(q0, t0);
        Ok(Self::reduced(num, den))
    }
}

impl Default for QtRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<QtPoly> for QtRat {
    fn from(p: QtPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for QtRat {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Add for &QtRat {
    type Output = QtRat;
    fn add(self, rhs: &QtRat) -> QtRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return QtRat::reduced(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        QtRat::reduced(num, den)
    }
}

impl Sub for &QtRat {
    type Output = QtRat;
    fn sub(self, rhs: &QtRat) -> QtRat {
        self + &(-rhs)
    }
}

impl Mul for &QtRat {
    type Output = QtRat;
    fn mul(self, rhs: &QtRat) -> QtRat {
        if self.is_zero() || rhs.is_zero() {
            return QtRat::zero();
        }
        QtRat::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &QtRat {
    type Output = QtRat;
    fn div(self, rhs: &QtRat) -> QtRat {
        assert!(!rhs.is_zero(), "division by zero in Q(q,t)");
        QtRat::reduced(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &QtRat {
    type Output = QtRat;
    fn neg(self) -> QtRat {
        QtRat { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for QtRat {
            type Output = QtRat;
            fn $m(self, rhs: QtRat) -> QtRat {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for QtRat {
    type Output = QtRat;
    fn neg(self) -> QtRat {
        -&self
    }
}

impl Zero for QtRat {
    fn zero() -> Self {
        QtRat::zero()
    }
    fn is_zero(&self) -> bool {
        QtRat::is_zero(self)
    }
}

impl One for QtRat {
    fn one() -> Self {
        QtRat::one()
    }
    fn is_one(&self) -> bool {
        QtRat::is_one(self)
    }
}

/// Convenience: exact integer-rational coefficient from a pair.
pub fn coeff(n: i64, d: i64) -> Coeff {
    Coeff::new(BigInt::from(n), BigInt::from(d))
}
