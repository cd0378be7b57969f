//! Dense univariate polynomials, coefficients stored low degree first.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Integer polynomial `c[0] + c[1] x + ...`, trimmed so the last entry is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_monic(&self) -> bool {
        self.0.last().is_some_and(One::is_one)
    }

    /// `x^m - 1`.
    pub fn x_pow_minus_one(m: usize) -> Self {
        let mut c = vec![BigInt::zero(); m + 1];
        c[0] = BigInt::from(-1);
        c[m] = BigInt::one();
        IntPoly(c)
    }

    /// Division by a monic divisor. Returns `(quotient, remainder)`.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.degree();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (IntPoly(vec![]), IntPoly(trim_int(rem)));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let lead = rem[i + dd].clone();
            if lead.is_zero() {
                continue;
            }
            for (j, c) in divisor.0.iter().enumerate() {
                if !c.is_zero() {
                    rem[i + j] -= &lead * c;
                }
            }
            quot[i] = lead;
        }
        rem.truncate(dd);
        (IntPoly(trim_int(quot)), IntPoly(trim_int(rem)))
    }

    pub fn to_string_in(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&mono);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn trim_int(mut c: Vec<BigInt>) -> Vec<BigInt> {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    c
}

pub(crate) fn trim(c: &mut Vec<Rational>) {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
}

fn memo() -> &'static RwLock<HashMap<u32, Arc<IntPoly>>> {
    static TABLE: OnceLock<RwLock<HashMap<u32, Arc<IntPoly>>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The m-th cyclotomic polynomial, by exact division of `x^m - 1` by every
/// `Phi_d` with `d | m`, `d < m`. Results are memoized process-wide.
pub fn cyclotomic_polynomial(m: u32) -> Arc<IntPoly> {
    assert!(m >= 1, "cyclotomic_polynomial: m must be >= 1");
    if let Some(p) = memo().read().expect("poisoned").get(&m) {
        return Arc::clone(p);
    }
    let mut acc = IntPoly::x_pow_minus_one(m as usize);
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let (q, r) = acc.div_rem_monic(&cyclotomic_polynomial(d));
        debug_assert!(r.0.is_empty());
        acc = q;
    }
    let acc = Arc::new(acc);
    let mut w = memo().write().expect("poisoned");
    Arc::clone(w.entry(m).or_insert(acc))
}

/// Euler's totient.
pub fn totient(m: u32) -> u32 {
    let mut n = m;
    let mut out = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// Rational polynomial product.
pub(crate) fn qmul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

/// `(q, r)` with `a = q*b + r`, `deg r < deg b`. `b` must be nonzero and trimmed.
pub(crate) fn qdiv_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() <= db {
        return (vec![], rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        if rem[i + db].is_zero() {
            continue;
        }
        let f = &rem[i + db] * &lead_inv;
        for (j, c) in b.iter().enumerate() {
            if !c.is_zero() {
                rem[i + j] -= &f * c;
            }
        }
        quot[i] = f;
    }
    rem.truncate(db);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn qsub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> IntPoly {
        IntPoly(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn small_cases() {
        assert_eq!(*cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_105_has_a_coefficient_two() {
        let p = cyclotomic_polynomial(105);
        assert!(p.coeffs().iter().any(|c| c.abs() == BigInt::from(2)));
    }

    #[test]
    fn divides_x_pow_m_minus_one_up_to_200() {
        for m in 1..=200u32 {
            let phi = cyclotomic_polynomial(m);
            assert!(phi.is_monic());
            assert_eq!(phi.degree() as u32, totient(m), "m={m}");
            let (_, r) = IntPoly::x_pow_minus_one(m as usize).div_rem_monic(&phi);
            assert!(r.0.is_empty(), "m={m}");
        }
    }

    #[test]
    fn totient_values() {
        let want = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(totient(i as u32 + 1), *w);
        }
        assert_eq!(totient(200), 80);
    }

    #[test]
    fn display() {
        assert_eq!(cyclotomic_polynomial(12).to_string_in("x"), "x^4 - x^2 + 1");
        assert_eq!(cyclotomic_polynomial(1).to_string_in("x"), "x - 1");
    }
}
