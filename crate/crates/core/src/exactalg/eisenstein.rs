//! Eisenstein integers a + bω with ω² + ω + 1 = 0.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Eisenstein {
    pub a: i64,
    pub b: i64,
}

impl Eisenstein {
    pub const ZERO: Self = Self { a: 0, b: 0 };
    pub const ONE: Self = Self { a: 1, b: 0 };
    pub const OMEGA: Self = Self { a: 0, b: 1 };
    pub const OMEGA2: Self = Self { a: -1, b: -1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Complex conjugate: ω ↔ ω².
    pub fn conj(self) -> Self {
        Self { a: self.a - self.b, b: -self.b }
    }

    pub fn norm(self) -> i64 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }

    /// Short label for 0 and the sixth roots of unity.
    pub fn unit_label(self) -> Option<&'static str> {
        Some(match (self.a, self.b) {
            (0, 0) => "0",
            (1, 0) => "1",
            (-1, 0) => "-1",
            (0, 1) => "w",
            (0, -1) => "-w",
            (-1, -1) => "w2",
            (1, 1) => "-w2",
            _ => return None,
        })
    }

    pub fn from_unit_label(s: &str) -> Option<Self> {
        Some(match s {
            "0" => Self::ZERO,
            "1" => Self::ONE,
            "-1" => -Self::ONE,
            "w" => Self::OMEGA,
            "-w" => -Self::OMEGA,
            "w2" => Self::OMEGA2,
            "-w2" => -Self::OMEGA2,
            _ => return None,
        })
    }

    /// m with self = m·ω², if it exists.
    pub fn omega2_multiple(self) -> Option<i64> {
        (self.a == self.b).then_some(-self.a)
    }

    /// m with self = m·ω, if it exists.
    pub fn omega_multiple(self) -> Option<i64> {
        (self.a == 0).then_some(self.b)
    }

    /// m with self = m, if it exists.
    pub fn integer(self) -> Option<i64> {
        (self.b == 0).then_some(self.a)
    }
}

impl Add for Eisenstein {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self::new(self.a + r.a, self.b + r.b)
    }
}

impl AddAssign for Eisenstein {
    fn add_assign(&mut self, r: Self) {
        *self = *self + r;
    }
}

impl Sub for Eisenstein {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self::new(self.a - r.a, self.b - r.b)
    }
}

impl Neg for Eisenstein {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for Eisenstein {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        Self::new(self.a * r.a - self.b * r.b, self.a * r.b + self.b * r.a - self.b * r.b)
    }
}

impl std::iter::Sum for Eisenstein {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |x, y| x + y)
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.unit_label() {
            return write!(f, "{l}");
        }
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}w"),
            (a, b) if a == b => write!(f, "{}w2", -a),
            (a, 1) => write!(f, "{a}+w"),
            (a, -1) => write!(f, "{a}-w"),
            (a, b) => write!(f, "{a}{b:+}w"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_relations() {
        let w = Eisenstein::OMEGA;
        assert_eq!(w * w, Eisenstein::OMEGA2);
        assert_eq!(w * w * w, Eisenstein::ONE);
        assert_eq!(Eisenstein::ONE + w + w * w, Eisenstein::ZERO);
        assert_eq!(w.conj(), Eisenstein::OMEGA2);
        assert_eq!((w * Eisenstein::new(4, 0)).to_string(), "4w");
        assert_eq!(Eisenstein::new(-3, -3).omega2_multiple(), Some(3));
        for l in ["0", "1", "-1", "w", "-w", "w2", "-w2"] {
            assert_eq!(Eisenstein::from_unit_label(l).unwrap().unit_label(), Some(l));
        }
    }
}
