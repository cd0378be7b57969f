//! Normal-form words for the cyclic and binary dihedral families.
//!
//! `Dic_n = <a, x | a^{2n} = 1, x^2 = a^n, x^{-1} a x = a^{-1}>`; every element
//! is `a^k` or `x a^k` with `0 <= k < 2n`. The cyclic group `Z_n` uses `a^k`
//! with `0 <= k < n` only.

use std::fmt;

use crate::exact_arith::CycloScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WordFamily {
    /// `Z_n`, generated by `a` of order `n`.
    Cyclic(u32),
    /// `Dic_n`, order `4n`.
    BinaryDihedral(u32),
}

impl WordFamily {
    /// Order of the generator `a`.
    pub fn a_order(&self) -> u32 {
        match *self {
            WordFamily::Cyclic(n) => n,
            WordFamily::BinaryDihedral(n) => 2 * n,
        }
    }

    /// Conductor of the field holding traces: `ζ_n` for `Z_n`, `ζ_{2n}` for `Dic_n`.
    pub fn trace_conductor(&self) -> u32 {
        self.a_order()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WordKind {
    PowerOfA,
    XTimesPowerOfA,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub family: WordFamily,
    pub kind: WordKind,
    pub exponent: u32,
}

impl Word {
    fn norm(family: WordFamily, kind: WordKind, exponent: i64) -> Word {
        let m = i64::from(family.a_order());
        Word {
            family,
            kind,
            exponent: exponent.rem_euclid(m) as u32,
        }
    }

    pub fn identity(family: WordFamily) -> Word {
        Word::power(family, 0)
    }

    pub fn power(family: WordFamily, k: i64) -> Word {
        Word::norm(family, WordKind::PowerOfA, k)
    }

    /// `x a^k`; `None` for the cyclic family, which has no `x`.
    pub fn x_times_power(family: WordFamily, k: i64) -> Option<Word> {
        match family {
            WordFamily::Cyclic(_) => None,
            WordFamily::BinaryDihedral(_) => Some(Word::norm(family, WordKind::XTimesPowerOfA, k)),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.kind == WordKind::PowerOfA && self.exponent == 0
    }

    /// Product in the same family; `None` if families differ.
    pub fn compose(&self, o: &Word) -> Option<Word> {
        if self.family != o.family {
            return None;
        }
        let (j, k) = (i64::from(self.exponent), i64::from(o.exponent));
        let half = match self.family {
            WordFamily::BinaryDihedral(n) => i64::from(n),
            WordFamily::Cyclic(_) => 0,
        };
        use WordKind::*;
        let (kind, e) = match (self.kind, o.kind) {
            (PowerOfA, PowerOfA) => (PowerOfA, j + k),
            // a^j x = x a^{-j}
            (PowerOfA, XTimesPowerOfA) => (XTimesPowerOfA, k - j),
            (XTimesPowerOfA, PowerOfA) => (XTimesPowerOfA, j + k),
            // x a^j x a^k = x x a^{-j} a^k = a^{n + k - j}
            (XTimesPowerOfA, XTimesPowerOfA) => (PowerOfA, half + k - j),
        };
        Some(Word::norm(self.family, kind, e))
    }

    pub fn inverse(&self) -> Word {
        let k = i64::from(self.exponent);
        match (self.kind, self.family) {
            (WordKind::PowerOfA, _) => Word::power(self.family, -k),
            // (x a^k)^2 = a^n is central of order 2
            (WordKind::XTimesPowerOfA, WordFamily::BinaryDihedral(n)) => {
                Word::norm(self.family, WordKind::XTimesPowerOfA, k + i64::from(n))
            }
            (WordKind::XTimesPowerOfA, WordFamily::Cyclic(_)) => unreachable!("no x in Z_n"),
        }
    }

    /// `ζ^k + ζ^{-k}` for `a^k`, and 0 for `x a^k`.
    pub fn trace(&self) -> CycloScalar {
        let m = self.family.trace_conductor();
        match self.kind {
            WordKind::PowerOfA => CycloScalar::zeta_pow_sym(m, i64::from(self.exponent)),
            WordKind::XTimesPowerOfA => CycloScalar::zero(m),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.exponent) {
            (WordKind::PowerOfA, 0) => f.write_str("1"),
            (WordKind::PowerOfA, 1) => f.write_str("a"),
            (WordKind::PowerOfA, e) => write!(f, "a^{e}"),
            (WordKind::XTimesPowerOfA, 0) => f.write_str("x"),
            (WordKind::XTimesPowerOfA, 1) => f.write_str("x*a"),
            (WordKind::XTimesPowerOfA, e) => write!(f, "x*a^{e}"),
        }
    }
}
