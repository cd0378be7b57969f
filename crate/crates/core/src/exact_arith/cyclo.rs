//! Exact arithmetic in the cyclotomic field Q(zeta_m).
//!
//! Elements are residues modulo the m-th cyclotomic polynomial, stored as
//! exactly `phi(m)` rational coefficients in the power basis `1, z, ..., z^(d-1)`.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Signed, Zero};

use super::modular;
use super::poly::{cyclotomic_polynomial, qdiv_rem, qmul, qsub, trim};
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Shared per-conductor data: the modulus and reduced powers of zeta.
#[derive(Debug)]
pub struct CycloField {
    conductor: u32,
    modulus: Vec<Rational>,
    /// `powers[k]` is `zeta^k` reduced, for `k` in `0..conductor`.
    powers: Vec<Vec<Rational>>,
}

impl CycloField {
    fn build(m: u32) -> Self {
        let phi = cyclotomic_polynomial(m);
        let modulus: Vec<Rational> = phi
            .coeffs()
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let d = modulus.len() - 1;
        let mut powers = Vec::with_capacity(m as usize);
        let mut cur = vec![Rational::zero(); d];
        cur[0] = Rational::one();
        for _ in 0..m {
            powers.push(cur.clone());
            // multiply by zeta: shift up, fold the overflow back through the modulus
            let top = cur.pop().expect("degree >= 1");
            cur.insert(0, Rational::zero());
            if !top.is_zero() {
                for (j, c) in modulus[..d].iter().enumerate() {
                    if !c.is_zero() {
                        cur[j] -= &top * c;
                    }
                }
            }
        }
        CycloField {
            conductor: m,
            modulus,
            powers,
        }
    }

    /// Memoized lookup; concurrent readers, serialized insertion.
    pub fn get(m: u32) -> Arc<CycloField> {
        static TABLE: OnceLock<RwLock<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
        let table = TABLE.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(f) = table.read().expect("poisoned").get(&m) {
            return Arc::clone(f);
        }
        let built = Arc::new(CycloField::build(m));
        let mut w = table.write().expect("poisoned");
        Arc::clone(w.entry(m).or_insert(built))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Reduces an arbitrary-length coefficient vector to exactly `degree()` entries.
    fn reduce(&self, mut c: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        for i in (d..c.len()).rev() {
            if c[i].is_zero() {
                continue;
            }
            let top = std::mem::take(&mut c[i]);
            for (j, m) in self.modulus[..d].iter().enumerate() {
                if !m.is_zero() {
                    c[i - d + j] -= &top * m;
                }
            }
        }
        c.resize(d, Rational::zero());
        c
    }
}

/// An element of Q(zeta_m). Binary operations require equal conductors.
#[derive(Clone)]
pub struct CycloScalar {
    field: Arc<CycloField>,
    coeffs: Vec<Rational>,
}

impl CycloScalar {
    pub fn from_rational(m: u32, r: Rational) -> Self {
        let field = CycloField::get(m);
        let mut coeffs = vec![Rational::zero(); field.degree()];
        coeffs[0] = r;
        CycloScalar { field, coeffs }
    }

    pub fn zero(m: u32) -> Self {
        Self::from_rational(m, Rational::zero())
    }

    pub fn one(m: u32) -> Self {
        Self::from_rational(m, Rational::one())
    }

    /// `zeta_m^k` for any integer `k` (negative exponents allowed).
    pub fn zeta_pow(m: u32, k: i64) -> Self {
        let field = CycloField::get(m);
        let idx = k.rem_euclid(m as i64) as usize;
        let coeffs = field.powers[idx].clone();
        CycloScalar { field, coeffs }
    }

    /// `zeta_m^k + zeta_m^-k`, i.e. `2 cos(2 pi k / m)`.
    pub fn zeta_pow_sym(m: u32, k: i64) -> Self {
        Self::zeta_pow(m, k)
            .checked_add(&Self::zeta_pow(m, -k))
            .expect("same conductor")
    }

    /// Builds from coefficients in the power basis, reducing as needed.
    pub fn from_coeffs(m: u32, coeffs: Vec<Rational>) -> Self {
        let field = CycloField::get(m);
        let coeffs = field.reduce(coeffs);
        CycloScalar { field, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.conductor() == other.conductor() {
            Ok(())
        } else {
            Err(Error::ConductorMismatch {
                left: self.conductor(),
                right: other.conductor(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycloScalar {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let mut prod = qmul(&self.coeffs, &other.coeffs);
        if prod.is_empty() {
            prod.push(Rational::zero());
        }
        Ok(CycloScalar {
            field: Arc::clone(&self.field),
            coeffs: self.field.reduce(prod),
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycloScalar {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        CycloScalar {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiplicative inverse. Runs the extended Euclidean algorithm against
    /// the cyclotomic modulus over F_p for several primes, lifts by CRT and
    /// rational reconstruction, and accepts the lift only after checking
    /// `self * inverse == 1` exactly. Falls back to Euclid over Q.
    pub fn cyclo_invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInversion);
        }
        let mut a = self.coeffs.clone();
        trim(&mut a);
        if a.len() == 1 {
            return Ok(Self::from_rational(self.conductor(), a[0].recip()));
        }
        let (ints, scale) = modular::clear_denominators(&a);
        let modulus = cyclotomic_polynomial(self.conductor());
        match modular::invert_int_poly(&ints, modulus.coeffs()) {
            Some(inv) => {
                let scale = Rational::from_integer(scale);
                Ok(CycloScalar {
                    field: Arc::clone(&self.field),
                    coeffs: inv.into_iter().map(|c| c * &scale).collect(),
                })
            }
            None => self.invert_over_q(),
        }
    }

    /// Inverse by the extended Euclidean algorithm with exact rational
    /// coefficients throughout. Slow for large conductors.
    pub fn invert_over_q(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInversion);
        }
        let mut a = self.coeffs.clone();
        trim(&mut a);
        if a.len() == 1 {
            return Ok(Self::from_rational(self.conductor(), a[0].recip()));
        }
        // invariant: s_i * a == r_i  (mod modulus)
        let (mut r0, mut r1) = (self.field.modulus.clone(), a);
        let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (vec![], vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = qdiv_rem(&r0, &r1);
            let s = qsub(&s0, &qmul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // the modulus is irreducible, so the gcd is a nonzero constant
        debug_assert_eq!(r0.len(), 1);
        let g = r0[0].recip();
        let inv: Vec<Rational> = s0.iter().map(|c| c * &g).collect();
        Ok(CycloScalar {
            field: Arc::clone(&self.field),
            coeffs: self.field.reduce(inv),
        })
    }

    /// The rational value, if every non-constant coefficient vanishes.
    pub fn cyclo_to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Stable text form, e.g. `1 - z12^2 + 1/2*z12^3`.
    pub fn canonical_string(&self) -> String {
        let m = self.conductor();
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            match k {
                0 => out.push_str(&format_rational(&mag)),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&format_rational(&mag));
                        out.push('*');
                    }
                    out.push_str(&format!("z{m}"));
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        self.conductor() == other.conductor() && self.coeffs == other.coeffs
    }
}

impl Eq for CycloScalar {}

impl Hash for CycloScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.conductor().hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloScalar[{}]({})", self.conductor(), self.canonical_string())
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}
