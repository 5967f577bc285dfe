//! The fraction field of Z[q,t], reduced by integer content only.
//!
//! Fractions are normalized so that the gcd of all coefficients across
//! numerator and denominator is 1 and the denominator's graded-lex leading
//! coefficient is positive. No polynomial gcd is ever computed; equality
//! is decided by cross-multiplication and the final conversion back to a
//! polynomial is an exact long division.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::poly::QtPoly;
use crate::{Error, Result};

/// Quotient of two polynomials in Z[q,t]; denominator always nonzero.
#[derive(Clone)]
pub struct QtFrac {
    num: QtPoly,
    den: QtPoly,
}

impl QtFrac {
    pub fn new(num: QtPoly, den: QtPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut f = QtFrac { num, den };
        f.reduce();
        Ok(f)
    }

    pub fn from_poly(p: QtPoly) -> Self {
        QtFrac { num: p, den: QtPoly::one() }
    }

    pub fn zero() -> Self {
        QtFrac::from_poly(QtPoly::zero())
    }

    pub fn one() -> Self {
        QtFrac::from_poly(QtPoly::one())
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

    fn reduce(&mut self) {
        let g = self.num.content().gcd(&self.den.content());
        if !g.is_one() && !g.is_zero() {
            self.num = self.num.div_scalar_exact(&g);
            self.den = self.den.div_scalar_exact(&g);
        }
        let (_, lead) = self.den.leading().expect("denominator is nonzero");
        if lead.is_negative() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }

    pub fn swap_qt(&self) -> Self {
        let mut f = QtFrac { num: self.num.swap_qt(), den: self.den.swap_qt() };
        f.reduce();
        f
    }

    /// F(q,t) + F(t,q), as a single reduced fraction.
    pub fn sigma(&self) -> Self {
        self + &self.swap_qt()
    }

    pub fn div(&self, rhs: &QtFrac) -> Result<QtFrac> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        QtFrac::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Exact conversion to a polynomial; `Err(NotPolynomial)` when the
    /// denominator does not divide the numerator.
    pub fn to_poly(&self) -> Result<QtPoly> {
        self.num.div_exact(&self.den)
    }
}

impl PartialEq for QtFrac {
    /// Cross-multiplication equality: a/b == c/d iff ad == cb.
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Add for &QtFrac {
    type Output = QtFrac;
    fn add(self, rhs: &QtFrac) -> QtFrac {
        QtFrac::new(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
        .expect("denominators are nonzero")
    }
}

impl Sub for &QtFrac {
    type Output = QtFrac;
    fn sub(self, rhs: &QtFrac) -> QtFrac {
        QtFrac::new(
            &self.num * &rhs.den - &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
        .expect("denominators are nonzero")
    }
}

impl Mul for &QtFrac {
    type Output = QtFrac;
    fn mul(self, rhs: &QtFrac) -> QtFrac {
        QtFrac::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("denominators are nonzero")
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident, $method:ident);*) => {$(
        impl $trait for QtFrac {
            type Output = QtFrac;
            fn $method(self, rhs: QtFrac) -> QtFrac { (&self).$method(&rhs) }
        }
        impl $trait<&QtFrac> for QtFrac {
            type Output = QtFrac;
            fn $method(self, rhs: &QtFrac) -> QtFrac { (&self).$method(rhs) }
        }
        impl $trait<QtFrac> for &QtFrac {
            type Output = QtFrac;
            fn $method(self, rhs: QtFrac) -> QtFrac { self.$method(&rhs) }
        }
    )*};
}
forward_owned_binop!(Add, add; Sub, sub; Mul, mul);

impl fmt::Display for QtFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for QtFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QtFrac({self})")
    }
}
