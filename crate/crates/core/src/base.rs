use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// A digit value. Always smaller than the [`Base`] it is used with.
pub type Digit = u8;

/// Radix of a digit string. Digits are written `0-9` then `a-z`, so the
/// supported range is `2..=36`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Base(u32);

impl Base {
    pub const TEN: Base = Base(10);
    pub const MAX: u32 = 36;

    pub fn new(b: u32) -> Result<Self> {
        if (2..=Self::MAX).contains(&b) {
            Ok(Base(b))
        } else {
            Err(Error::InvalidBase(b))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn max_digit(self) -> Digit {
        (self.0 - 1) as Digit
    }

    pub fn check_digit(self, d: u32) -> Result<Digit> {
        if d < self.0 {
            Ok(d as Digit)
        } else {
            Err(Error::DigitOutOfRange { digit: d, base: self.0 })
        }
    }

    pub fn digit_value(self, c: char) -> Option<Digit> {
        c.to_digit(self.0).map(|d| d as Digit)
    }

    pub fn digit_char(self, d: Digit) -> char {
        debug_assert!((d as u32) < self.0);
        std::char::from_digit(d as u32, self.0).expect("digit below base")
    }

    pub fn pow(self, n: usize) -> BigUint {
        BigUint::from(self.0).pow(n as u32)
    }

    /// Distinct prime factors of the base, ascending.
    pub fn prime_factors(self) -> Vec<u32> {
        let mut n = self.0;
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                out.push(p);
                while n.is_multiple_of(p) {
                    n /= p;
                }
            }
            p += 1;
        }
        if n > 1 {
            out.push(n);
        }
        out
    }
}

impl Default for Base {
    fn default() -> Self {
        Base::TEN
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<u32> for Base {
    type Error = Error;

    fn try_from(b: u32) -> Result<Self> {
        Base::new(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_and_large_bases() {
        assert_eq!(Base::new(1), Err(Error::InvalidBase(1)));
        assert_eq!(Base::new(37), Err(Error::InvalidBase(37)));
        assert!(Base::new(2).is_ok());
    }

    #[test]
    fn digit_alphabet() {
        let b = Base::new(16).unwrap();
        assert_eq!(b.digit_value('f'), Some(15));
        assert_eq!(b.digit_value('F'), Some(15));
        assert_eq!(b.digit_value('g'), None);
        assert_eq!(b.digit_char(11), 'b');
    }

    #[test]
    fn prime_factors() {
        assert_eq!(Base::TEN.prime_factors(), vec![2, 5]);
        assert_eq!(Base::new(12).unwrap().prime_factors(), vec![2, 3]);
        assert_eq!(Base::new(7).unwrap().prime_factors(), vec![7]);
    }
}
