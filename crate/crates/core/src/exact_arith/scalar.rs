//! Scalar traits shared by the generic code, and the tagged [`FieldScalar`].

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::cyclo::CycloScalar;
use super::quad::Quad;
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Commutative ring operations. Implemented for floats and the exact fields.
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// `num/den` as a ring element; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;
}

impl Ring for f64 {
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
}

impl Ring for f32 {
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f32 / den as f32
    }
}

impl Ring for Rational {
    fn from_ratio(num: i64, den: i64) -> Self {
        super::rational::rat(num, den)
    }
}

impl<const D: i64> Ring for Quad<D> {
    fn from_ratio(num: i64, den: i64) -> Self {
        Quad::from_rational(super::rational::rat(num, den))
    }
}

/// An exact field with canonical representatives, so `Eq`/`Hash` are value equality.
pub trait ExactField: Ring + Eq + Hash + fmt::Display {
    fn try_inv(&self) -> Result<Self>;
    fn to_rational(&self) -> Option<Rational>;
    fn into_field_scalar(self) -> FieldScalar;
}

impl ExactField for Rational {
    fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::ZeroInversion)
        } else {
            Ok(self.recip())
        }
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn into_field_scalar(self) -> FieldScalar {
        FieldScalar::Rational(self)
    }
}

impl ExactField for Quad<2> {
    fn try_inv(&self) -> Result<Self> {
        self.quad_invert()
    }
    fn to_rational(&self) -> Option<Rational> {
        Quad::to_rational(self)
    }
    fn into_field_scalar(self) -> FieldScalar {
        FieldScalar::Sqrt2(self)
    }
}

impl ExactField for Quad<5> {
    fn try_inv(&self) -> Result<Self> {
        self.quad_invert()
    }
    fn to_rational(&self) -> Option<Rational> {
        Quad::to_rational(self)
    }
    fn into_field_scalar(self) -> FieldScalar {
        FieldScalar::Sqrt5(self)
    }
}

/// An exact number in one of the supported fields.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Rational(Rational),
    Sqrt2(Quad<2>),
    Sqrt5(Quad<5>),
    Cyclo(CycloScalar),
}

impl FieldScalar {
    pub fn to_rational(&self) -> Option<Rational> {
        match self {
            FieldScalar::Rational(r) => Some(r.clone()),
            FieldScalar::Sqrt2(q) => q.to_rational(),
            FieldScalar::Sqrt5(q) => q.to_rational(),
            FieldScalar::Cyclo(c) => c.cyclo_to_rational(),
        }
    }

    pub fn field_name(&self) -> String {
        match self {
            FieldScalar::Rational(_) => "Q".into(),
            FieldScalar::Sqrt2(_) => "Q(sqrt2)".into(),
            FieldScalar::Sqrt5(_) => "Q(sqrt5)".into(),
            FieldScalar::Cyclo(c) => format!("Q(zeta_{})", c.conductor()),
        }
    }

    /// Text used for sorting and display; equal values give equal strings.
    pub fn canonical_string(&self) -> String {
        match self {
            FieldScalar::Rational(r) => format_rational(r),
            FieldScalar::Sqrt2(q) => q.to_string(),
            FieldScalar::Sqrt5(q) => q.to_string(),
            FieldScalar::Cyclo(c) => c.canonical_string(),
        }
    }

    /// `2 - self`, in the same field.
    pub fn two_minus(&self) -> FieldScalar {
        let two = Rational::from_integer(2.into());
        match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(two - r),
            FieldScalar::Sqrt2(q) => FieldScalar::Sqrt2(Quad::from_rational(two) - q.clone()),
            FieldScalar::Sqrt5(q) => FieldScalar::Sqrt5(Quad::from_rational(two) - q.clone()),
            FieldScalar::Cyclo(c) => FieldScalar::Cyclo(
                CycloScalar::from_rational(c.conductor(), two)
                    .checked_sub(c)
                    .expect("same conductor"),
            ),
        }
    }

    /// Multiplicative inverse in the same field.
    pub fn inv(&self) -> Result<FieldScalar> {
        Ok(match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(r.try_inv()?),
            FieldScalar::Sqrt2(q) => FieldScalar::Sqrt2(q.quad_invert()?),
            FieldScalar::Sqrt5(q) => FieldScalar::Sqrt5(q.quad_invert()?),
            FieldScalar::Cyclo(c) => FieldScalar::Cyclo(c.cyclo_invert()?),
        })
    }

    pub fn scale(&self, r: &Rational) -> FieldScalar {
        match self {
            FieldScalar::Rational(x) => FieldScalar::Rational(x * r),
            FieldScalar::Sqrt2(q) => FieldScalar::Sqrt2(q.clone() * Quad::from_rational(r.clone())),
            FieldScalar::Sqrt5(q) => FieldScalar::Sqrt5(q.clone() * Quad::from_rational(r.clone())),
            FieldScalar::Cyclo(c) => FieldScalar::Cyclo(c.scale(r)),
        }
    }

    /// Sum; a rational operand is embedded into the other operand's field.
    pub fn checked_add(&self, other: &FieldScalar) -> Result<FieldScalar> {
        use FieldScalar::*;
        Ok(match (self, other) {
            (Rational(a), Rational(b)) => Rational(a + b),
            (Sqrt2(a), Sqrt2(b)) => Sqrt2(a.clone() + b.clone()),
            (Sqrt5(a), Sqrt5(b)) => Sqrt5(a.clone() + b.clone()),
            (Cyclo(a), Cyclo(b)) => Cyclo(a.checked_add(b)?),
            (Rational(r), x) | (x, Rational(r)) => match x {
                Sqrt2(q) => Sqrt2(q.clone() + Quad::from_rational(r.clone())),
                Sqrt5(q) => Sqrt5(q.clone() + Quad::from_rational(r.clone())),
                Cyclo(c) => Cyclo(
                    c.checked_add(&CycloScalar::from_rational(c.conductor(), r.clone()))?,
                ),
                Rational(_) => unreachable!(),
            },
            (a, b) => {
                return Err(Error::FieldMismatch {
                    left: a.field_name(),
                    right: b.field_name(),
                })
            }
        })
    }

    pub fn is_two(&self) -> bool {
        self.to_rational() == Some(Rational::from_integer(2.into()))
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}
