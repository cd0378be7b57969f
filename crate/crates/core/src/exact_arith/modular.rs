//! Multi-modular inversion in Z[x]/(f): extended Euclid over F_p for a run of
//! large primes, CRT, rational reconstruction, then an exact product check.

use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;

const MAX_PRIMES: usize = 48;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(MAX_PRIMES);
        let mut n = (1u64 << 62) - 1;
        while out.len() < MAX_PRIMES {
            if is_prime_u64(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

fn reduce_mod(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

fn trim_u(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Inverse of `a` modulo `f` over F_p, or `None` if they are not coprime mod p.
fn invert_mod_p(a: &[u64], f: &[u64], p: u64) -> Option<Vec<u64>> {
    let mut r0 = f.to_vec();
    let mut r1 = a.to_vec();
    trim_u(&mut r0);
    trim_u(&mut r1);
    if r1.is_empty() || r0.is_empty() {
        return None;
    }
    let mut s0: Vec<u64> = vec![];
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        // r0 = q r1 + r
        let d1 = r1.len() - 1;
        let inv_lead = powmod(r1[d1], p - 2, p);
        let mut rem = r0.clone();
        let mut q = vec![0u64; rem.len().saturating_sub(d1)];
        if rem.len() > d1 {
            for i in (0..q.len()).rev() {
                let c = rem[i + d1];
                if c == 0 {
                    continue;
                }
                let f = mulmod(c, inv_lead, p);
                for (j, &b) in r1.iter().enumerate() {
                    if b != 0 {
                        rem[i + j] = (rem[i + j] + p - mulmod(f, b, p)) % p;
                    }
                }
                q[i] = f;
            }
            rem.truncate(d1);
        }
        trim_u(&mut rem);
        trim_u(&mut q);
        // s = s0 - q s1
        let mut s = s0.clone();
        if !q.is_empty() && !s1.is_empty() {
            let need = q.len() + s1.len() - 1;
            if s.len() < need {
                s.resize(need, 0);
            }
            for (i, &x) in q.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in s1.iter().enumerate() {
                    if y != 0 {
                        s[i + j] = (s[i + j] + p - mulmod(x, y, p)) % p;
                    }
                }
            }
        }
        trim_u(&mut s);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let g = powmod(r0[0], p - 2, p);
    let deg_f = f.len() - 1;
    let mut out: Vec<u64> = s0.iter().map(|&c| mulmod(c, g, p)).collect();
    out.resize(deg_f, 0);
    Some(out)
}

/// Wang's rational reconstruction of `a mod m` with numerator and denominator
/// bounded by `sqrt(m/2)`.
fn reconstruct(a: &BigInt, m: &BigInt, bound: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > *bound {
        let (q, r) = r0.div_rem(&r1);
        let t = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    if t1.is_zero() || t1.abs() > *bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

/// Checks `a * y == 1 (mod f)` exactly, where `y` is given as rationals.
fn verify(a: &[BigInt], f: &[BigInt], y: &[Rational]) -> bool {
    let den = y
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ynum: Vec<BigInt> = y.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let d = f.len() - 1;
    let mut prod = vec![BigInt::zero(); a.len() + ynum.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, v) in ynum.iter().enumerate() {
            if !v.is_zero() {
                prod[i + j] += x * v;
            }
        }
    }
    for i in (d..prod.len()).rev() {
        if prod[i].is_zero() {
            continue;
        }
        let top = std::mem::take(&mut prod[i]);
        for (j, c) in f[..d].iter().enumerate() {
            if !c.is_zero() {
                prod[i - d + j] -= &top * c;
            }
        }
    }
    prod.truncate(d);
    prod[0] == den && prod[1..].iter().all(Zero::is_zero)
}

/// Inverse of the integer polynomial `a` modulo the monic integer polynomial `f`,
/// as `deg f` rational coefficients. `None` if no prime run yields a verified inverse.
pub(crate) fn invert_int_poly(a: &[BigInt], f: &[BigInt]) -> Option<Vec<Rational>> {
    let deg_f = f.len() - 1;
    let mut residues: Vec<BigInt> = vec![BigInt::zero(); deg_f];
    let mut modulus = BigInt::one();
    for &p in primes() {
        let ap: Vec<u64> = a.iter().map(|c| reduce_mod(c, p)).collect();
        let fp: Vec<u64> = f.iter().map(|c| reduce_mod(c, p)).collect();
        let Some(inv) = invert_mod_p(&ap, &fp, p) else {
            continue;
        };
        // CRT: x = r (mod M), x = v (mod p)
        let pb = BigInt::from(p);
        let m_mod_p = reduce_mod(&modulus, p);
        let m_inv = powmod(m_mod_p, p - 2, p);
        for (r, &v) in residues.iter_mut().zip(&inv) {
            let rp = reduce_mod(r, p);
            let k = mulmod((v + p - rp) % p, m_inv, p);
            *r += &modulus * BigInt::from(k);
        }
        modulus *= &pb;
        let bound = (&modulus >> 1usize).sqrt();
        let cand: Option<Vec<Rational>> = residues
            .iter()
            .map(|r| reconstruct(r, &modulus, &bound))
            .collect();
        if let Some(y) = cand {
            if verify(a, f, &y) {
                return Some(y);
            }
        }
    }
    None
}

/// Splits rational coefficients into an integer polynomial and a positive scale,
/// `coeffs = ints / scale`.
pub(crate) fn clear_denominators(coeffs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = coeffs
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    debug_assert_eq!(den.sign(), Sign::Plus);
    (ints, den)
}
