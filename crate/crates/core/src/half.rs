//! Exact half-integer arithmetic.
//!
//! Graph discrepancy values `D(X) = e(X) - C(|X|,2)/2` and relative
//! discrepancies always lie in (1/2)Z. Storing the doubled value keeps
//! every comparison, sum, and argmax tie-break exact; floats enter only
//! when a half-integer meets an irrational penalty term.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

/// An exact multiple of 1/2, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    /// The half-integer `twice / 2`.
    pub fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    /// The integer `v` as a half-integer.
    pub fn from_int(v: i64) -> Self {
        HalfInt { twice: 2 * v }
    }

    /// Twice the value (always an integer).
    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn abs(self) -> Self {
        HalfInt {
            twice: self.twice.abs(),
        }
    }

    pub fn is_positive(self) -> bool {
        self.twice > 0
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            twice: self.twice + rhs.twice,
        }
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.twice += rhs.twice;
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            twice: self.twice - rhs.twice,
        }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            let sign = if self.twice < 0 { "-" } else { "" };
            let abs = self.twice.unsigned_abs();
            write!(f, "{}{}.5", sign, abs / 2)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        let a = HalfInt::from_twice(3); // 1.5
        let b = HalfInt::from_twice(-1); // -0.5
        assert_eq!((a + b).twice(), 2);
        assert_eq!((a - b).twice(), 4);
        assert_eq!((-a).twice(), -3);
        assert_eq!(a.abs(), a);
        assert_eq!(b.abs().twice(), 1);
        assert!(a.is_positive());
        assert!(!b.is_positive());
        assert!(!HalfInt::ZERO.is_positive());
    }

    #[test]
    fn ordering_matches_value() {
        assert!(HalfInt::from_twice(-1) < HalfInt::ZERO);
        assert!(HalfInt::from_twice(2) < HalfInt::from_twice(3));
    }

    #[test]
    fn display() {
        assert_eq!(HalfInt::from_twice(6).to_string(), "3");
        assert_eq!(HalfInt::from_twice(3).to_string(), "1.5");
        assert_eq!(HalfInt::from_twice(-3).to_string(), "-1.5");
        assert_eq!(HalfInt::from_twice(0).to_string(), "0");
    }

    #[test]
    fn to_f64_exact_for_small_values() {
        assert_eq!(HalfInt::from_twice(7).to_f64(), 3.5);
        assert_eq!(HalfInt::from_twice(-7).to_f64(), -3.5);
    }
}
