use std::fmt;

use super::quaternion::Quaternion;
use super::word::Word;
use crate::error::{Error, Result};
use crate::exact_arith::{ExactField, FieldScalar, Quad, Rational};

/// An element of a finite subgroup of SU(2): a literal unit quaternion over
/// one of the exact coefficient fields, or a word in the `Z_n` / `Dic_n` presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Rational(Quaternion<Rational>),
    Sqrt2(Quaternion<Quad<2>>),
    Sqrt5(Quaternion<Quad<5>>),
    Word(Word),
}

impl GroupElement {
    fn kind_name(&self) -> String {
        match self {
            GroupElement::Rational(_) => "quaternion over Q".into(),
            GroupElement::Sqrt2(_) => "quaternion over Q(sqrt2)".into(),
            GroupElement::Sqrt5(_) => "quaternion over Q(sqrt5)".into(),
            GroupElement::Word(w) => format!("word in {:?}", w.family),
        }
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        let mismatch = || {
            Error::MixedElements(format!("{} * {}", self.kind_name(), other.kind_name()))
        };
        Ok(match (self, other) {
            (GroupElement::Rational(a), GroupElement::Rational(b)) => GroupElement::Rational(a * b),
            (GroupElement::Sqrt2(a), GroupElement::Sqrt2(b)) => GroupElement::Sqrt2(a * b),
            (GroupElement::Sqrt5(a), GroupElement::Sqrt5(b)) => GroupElement::Sqrt5(a * b),
            (GroupElement::Word(a), GroupElement::Word(b)) => {
                GroupElement::Word(a.compose(b).ok_or_else(mismatch)?)
            }
            _ => return Err(mismatch()),
        })
    }

    /// Inverse, assuming unit norm for quaternions (the conjugate).
    pub fn inverse(&self) -> Self {
        match self {
            GroupElement::Rational(q) => GroupElement::Rational(q.conj()),
            GroupElement::Sqrt2(q) => GroupElement::Sqrt2(q.conj()),
            GroupElement::Sqrt5(q) => GroupElement::Sqrt5(q.conj()),
            GroupElement::Word(w) => GroupElement::Word(w.inverse()),
        }
    }

    /// The identity of the same kind.
    pub fn identity_like(&self) -> Self {
        match self {
            GroupElement::Rational(_) => GroupElement::Rational(Quaternion::one()),
            GroupElement::Sqrt2(_) => GroupElement::Sqrt2(Quaternion::one()),
            GroupElement::Sqrt5(_) => GroupElement::Sqrt5(Quaternion::one()),
            GroupElement::Word(w) => GroupElement::Word(Word::identity(w.family)),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }

    /// Whether a quaternion has norm exactly 1. Words are always units.
    pub fn is_unit(&self) -> bool {
        match self {
            GroupElement::Rational(q) => q.is_unit(),
            GroupElement::Sqrt2(q) => q.is_unit(),
            GroupElement::Sqrt5(q) => q.is_unit(),
            GroupElement::Word(_) => true,
        }
    }

    /// Trace of the 2x2 SU(2) matrix.
    pub fn trace(&self) -> FieldScalar {
        match self {
            GroupElement::Rational(q) => q.trace().into_field_scalar(),
            GroupElement::Sqrt2(q) => q.trace().into_field_scalar(),
            GroupElement::Sqrt5(q) => q.trace().into_field_scalar(),
            GroupElement::Word(w) => FieldScalar::Cyclo(w.trace()),
        }
    }

    /// Deterministic text key built from lowest-terms components.
    pub fn canonical_key(&self) -> String {
        fn q<T: ExactField>(q: &Quaternion<T>) -> String {
            format!("{}|{}|{}|{}", q.x, q.y, q.z, q.w)
        }
        match self {
            GroupElement::Rational(v) => q(v),
            GroupElement::Sqrt2(v) => q(v),
            GroupElement::Sqrt5(v) => q(v),
            GroupElement::Word(w) => format!("{:?}|{:?}|{}", w.family, w.kind, w.exponent),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Rational(q) => q.fmt(f),
            GroupElement::Sqrt2(q) => q.fmt(f),
            GroupElement::Sqrt5(q) => q.fmt(f),
            GroupElement::Word(w) => w.fmt(f),
        }
    }
}
