//! Real quadratic fields Q(sqrt d), with `d` fixed at the type level.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// `base + coeff * sqrt(D)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quad<const D: i64> {
    pub base: Rational,
    pub coeff: Rational,
}

impl<const D: i64> Quad<D> {
    pub fn new(base: Rational, coeff: Rational) -> Self {
        Quad { base, coeff }
    }

    pub fn from_rational(r: Rational) -> Self {
        Quad::new(r, Rational::zero())
    }

    /// `sqrt(D)` itself.
    pub fn sqrt_d() -> Self {
        Quad::new(Rational::zero(), Rational::one())
    }

    pub const fn discriminant() -> i64 {
        D
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.base.clone())
    }

    pub fn conjugate(&self) -> Self {
        Quad::new(self.base.clone(), -&self.coeff)
    }

    /// Field norm `base^2 - D coeff^2`.
    pub fn norm(&self) -> Rational {
        &self.base * &self.base - Rational::from_integer(D.into()) * &self.coeff * &self.coeff
    }

    /// Inverse as `conjugate / norm`.
    pub fn quad_invert(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            // D is not a square, so the norm vanishes only at zero
            return Err(Error::ZeroInversion);
        }
        Ok(Quad::new(&self.base / &n, -&self.coeff / &n))
    }

    /// Sign of the real number, decided exactly.
    pub fn signum(&self) -> Ordering {
        let sb = self.base.cmp(&Rational::zero());
        let sc = self.coeff.cmp(&Rational::zero());
        if sb == sc || sc == Ordering::Equal {
            return sb;
        }
        if sb == Ordering::Equal {
            return sc;
        }
        // opposite signs: compare base^2 with D coeff^2
        let b2 = &self.base * &self.base;
        let c2 = Rational::from_integer(D.into()) * &self.coeff * &self.coeff;
        match b2.cmp(&c2) {
            Ordering::Greater => sb,
            Ordering::Less => sc,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.base.to_f64().unwrap_or(f64::NAN)
            + self.coeff.to_f64().unwrap_or(f64::NAN) * (D as f64).sqrt()
    }
}

impl<const D: i64> PartialOrd for Quad<D> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<const D: i64> Ord for Quad<D> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum()
    }
}

impl<const D: i64> Add for Quad<D> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Quad::new(self.base + o.base, self.coeff + o.coeff)
    }
}

impl<const D: i64> Sub for Quad<D> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Quad::new(self.base - o.base, self.coeff - o.coeff)
    }
}

impl<const D: i64> Mul for Quad<D> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let d = Rational::from_integer(D.into());
        Quad::new(
            &self.base * &o.base + d * &self.coeff * &o.coeff,
            &self.base * &o.coeff + &self.coeff * &o.base,
        )
    }
}

impl<const D: i64> Neg for Quad<D> {
    type Output = Self;
    fn neg(self) -> Self {
        Quad::new(-self.base, -self.coeff)
    }
}

impl<const D: i64> Zero for Quad<D> {
    fn zero() -> Self {
        Quad::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.base.is_zero() && self.coeff.is_zero()
    }
}

impl<const D: i64> One for Quad<D> {
    fn one() -> Self {
        Quad::from_rational(Rational::one())
    }
}

impl<const D: i64> fmt::Display for Quad<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            return f.write_str(&format_rational(&self.base));
        }
        let mut s = String::new();
        if !self.base.is_zero() {
            s.push_str(&format_rational(&self.base));
            s.push_str(if self.coeff.is_negative() { " - " } else { " + " });
        } else if self.coeff.is_negative() {
            s.push('-');
        }
        let mag = self.coeff.abs();
        if !mag.is_one() {
            s.push_str(&format_rational(&mag));
            s.push('*');
        }
        s.push_str(&format!("sqrt({D})"));
        f.write_str(&s)
    }
}
