//! Quaternions `x + y i + z j + w k` over any [`Ring`].

use std::fmt;
use std::ops::{Mul, Neg};


use crate::exact_arith::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quaternion<T> {
    pub x: T,
    pub y: T,
    pub z: T,
    pub w: T,
}

impl<T: Ring> Quaternion<T> {
    pub fn new(x: T, y: T, z: T, w: T) -> Self {
        Quaternion { x, y, z, w }
    }

    pub fn one() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::zero())
    }

    pub fn i() -> Self {
        Self::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn j() -> Self {
        Self::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn k() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    pub fn conj(&self) -> Self {
        Self::new(
            self.x.clone(),
            -self.y.clone(),
            -self.z.clone(),
            -self.w.clone(),
        )
    }

    /// `x^2 + y^2 + z^2 + w^2`, also the determinant of [`Self::su2_matrix`].
    pub fn norm(&self) -> T {
        self.x.clone() * self.x.clone()
            + self.y.clone() * self.y.clone()
            + self.z.clone() * self.z.clone()
            + self.w.clone() * self.w.clone()
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == T::one()
    }

    /// Matrix trace under the SU(2) identification, `2x`.
    pub fn trace(&self) -> T {
        self.x.clone() + self.x.clone()
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(
            self.x.clone() * s.clone(),
            self.y.clone() * s.clone(),
            self.z.clone() * s.clone(),
            self.w.clone() * s.clone(),
        )
    }

    /// `[[x + yi, z + wi], [-z + wi, x - yi]]`, complex entries as `(re, im)`.
    pub fn su2_matrix(&self) -> [[(T, T); 2]; 2] {
        [
            [
                (self.x.clone(), self.y.clone()),
                (self.z.clone(), self.w.clone()),
            ],
            [
                (-self.z.clone(), self.w.clone()),
                (self.x.clone(), -self.y.clone()),
            ],
        ]
    }
}

impl<T: Ring> Mul for &Quaternion<T> {
    type Output = Quaternion<T>;

    fn mul(self, o: &Quaternion<T>) -> Quaternion<T> {
        let (a1, b1, c1, d1) = (&self.x, &self.y, &self.z, &self.w);
        let (a2, b2, c2, d2) = (&o.x, &o.y, &o.z, &o.w);
        let m = |p: &T, q: &T| p.clone() * q.clone();
        Quaternion::new(
            m(a1, a2) - m(b1, b2) - m(c1, c2) - m(d1, d2),
            m(a1, b2) + m(b1, a2) + m(c1, d2) - m(d1, c2),
            m(a1, c2) - m(b1, d2) + m(c1, a2) + m(d1, b2),
            m(a1, d2) + m(b1, c2) - m(c1, b2) + m(d1, a2),
        )
    }
}

impl<T: Ring> Mul for Quaternion<T> {
    type Output = Quaternion<T>;

    fn mul(self, o: Quaternion<T>) -> Quaternion<T> {
        &self * &o
    }
}

impl<T: Ring> Neg for Quaternion<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z, -self.w)
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Quaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = [
            (&self.x, ""),
            (&self.y, "i"),
            (&self.z, "j"),
            (&self.w, "k"),
        ];
        let mut first = true;
        for (c, unit) in parts {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (neg, body) = if text.contains(' ') {
                (false, format!("({text})"))
            } else if let Some(rest) = text.strip_prefix('-') {
                (true, rest.to_string())
            } else {
                (false, text)
            };
            let body = if body == "1" && !unit.is_empty() { String::new() } else { body };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            write!(f, "{body}{unit}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{rat, Rational};

    type Q = Quaternion<Rational>;

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Q::i(), Q::j(), Q::k());
        let minus_one = -Q::one();
        assert_eq!(&i * &i, minus_one);
        assert_eq!(&j * &j, minus_one);
        assert_eq!(&k * &k, minus_one);
        assert_eq!(&(&i * &j) * &k, minus_one);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -Q::k());
    }

    #[test]
    fn unit_inverse_is_conjugate() {
        let h = rat(1, 2);
        let q = Q::new(h.clone(), h.clone(), h.clone(), h);
        assert!(q.is_unit());
        assert_eq!(&q * &q.conj(), Q::one());
        assert_eq!(q.trace(), rat(1, 1));
    }

    #[test]
    fn matrix_determinant_is_norm() {
        let q = Quaternion::<f64>::new(0.3, -0.2, 0.9, 0.1);
        let [[(ar, ai), (br, bi)], [(cr, ci), (dr, di)]] = q.su2_matrix();
        let det_re = (ar * dr - ai * di) - (br * cr - bi * ci);
        let det_im = (ar * di + ai * dr) - (br * ci + bi * cr);
        assert!((det_re - q.norm()).abs() < 1e-12);
        assert!(det_im.abs() < 1e-12);
    }

    #[test]
    fn display() {
        let h = rat(1, 2);
        let q = Q::new(h.clone(), -h.clone(), h.clone(), h);
        assert_eq!(q.to_string(), "1/2 - 1/2i + 1/2j + 1/2k");
        assert_eq!(Q::i().to_string(), "i");
        assert_eq!((-Q::one()).to_string(), "-1");
    }
}
