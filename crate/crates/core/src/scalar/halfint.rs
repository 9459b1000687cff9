use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

/// An exact element of ½ℤ, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub const fn int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub const fn is_half_odd(self) -> bool {
        self.0 % 2 != 0
    }

    /// The integer value, if this is an integer.
    pub fn as_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.0), BigInt::from(2))
    }

    /// All half-integers `h` with `|2h| <= bound`, ascending.
    pub fn window(bound: i64) -> impl Iterator<Item = HalfInt> {
        (-bound..=bound).map(HalfInt)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::int(n)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_queries() {
        assert!(HalfInt::int(3).is_integer());
        assert!(HalfInt::from_twice(-3).is_half_odd());
        assert_eq!(HalfInt::from_twice(4).as_integer(), Some(2));
        assert_eq!(HalfInt::HALF.as_integer(), None);
    }

    #[test]
    fn ordering_agrees_with_rationals() {
        let values: Vec<HalfInt> = HalfInt::window(5).collect();
        for w in values.windows(2) {
            assert!(w[0] < w[1]);
            assert!(w[0].to_rational() < w[1].to_rational());
        }
        assert_eq!(HalfInt::HALF + HalfInt::HALF, HalfInt::int(1));
    }

    #[test]
    fn display() {
        assert_eq!(HalfInt::from_twice(-3).to_string(), "-3/2");
        assert_eq!(HalfInt::int(-2).to_string(), "-2");
        assert_eq!(HalfInt::ZERO.to_string(), "0");
    }
}
