//! Exact conversion between quote numbers and reduced fractions.
//!
//! A quote number `←(a_1..a_k) b_1..b_l . c_1..c_r` has the value
//! `base^l * P + B + C / base^r` where `B`, `C` are the plain integers
//! formed by the preperiod and fraction digits and `P = A / (1 - base^k)`
//! for the period block `A`. In particular a purely periodic block equals
//! minus the ordinary repeating fraction `0.(a_1..a_k)`.
//!
//! This module never calls the digit algorithms of [`crate::arith`] for
//! conversions, so it can serve as their oracle.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith;
use crate::base::{Base, Digit};
use crate::error::{Error, Result};
use crate::quote::{IntDigits, QuoteNumber};

/// Reduced fraction with a positive denominator; zero is `0/1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fraction(BigRational);

impl Fraction {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Fraction(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Fraction(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Fraction(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Fraction(self.0.recip()))
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Fraction {
    fn from(r: BigRational) -> Self {
        Fraction(r)
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Fraction::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for &Fraction {
            type Output = Fraction;
            fn $m(self, rhs: &Fraction) -> Fraction {
                Fraction($tr::$m(&self.0, &rhs.0))
            }
        }
        impl $tr for Fraction {
            type Output = Fraction;
            fn $m(self, rhs: Fraction) -> Fraction {
                Fraction($tr::$m(self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// panics on a zero divisor, like BigRational
forward_binop!(Div, div);

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction(-self.0)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `m/n` or a bare integer `m`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |offset: usize| Error::Syntax {
            offset,
            message: format!("expected m/n, found {s:?}"),
        };
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s, None),
        };
        let num: BigInt = num.parse().map_err(|_| bad(0))?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| bad(s.find('/').unwrap() + 1))?,
            None => BigInt::one(),
        };
        Fraction::new(num, den)
    }
}

fn digits_value(base: Base, ds: &[Digit]) -> BigInt {
    let b = BigInt::from(base.get());
    ds.iter().fold(BigInt::zero(), |acc, &d| acc * &b + BigInt::from(d))
}

/// Exact value of a quote number.
pub fn to_rational(x: &QuoteNumber) -> Fraction {
    let base = x.base();
    let b = BigInt::from(base.get());
    let p = x.period().len();
    let block = digits_value(base, x.period());
    let periodic = BigRational::new(block, BigInt::one() - b.pow(p as u32));
    let shift = BigRational::from_integer(b.pow(x.preperiod().len() as u32));
    let pre = BigRational::from_integer(digits_value(base, x.preperiod()));
    let frac = BigRational::new(
        digits_value(base, x.frac()),
        b.pow(x.frac().len() as u32),
    );
    Fraction(periodic * shift + pre + frac)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Quote form of a rational.
///
/// Denominator factors shared with the base are moved into fractional
/// digits by scaling with `base^k`; what remains has a denominator `n`
/// coprime to the base. Its digits are read off the modular state
/// `m -> (m - d*n) / base` with `d = m * n^-1 mod base`, which stays
/// bounded and therefore cycles.
pub fn from_rational(q: &Fraction, base: Base) -> QuoteNumber {
    let b = BigInt::from(base.get());
    let mut m = q.numer().clone();
    let mut unit = q.denom().clone();
    let mut k = 0usize;
    while !unit.gcd(&b).is_one() {
        m *= &b;
        k += 1;
        let g = m.gcd(&unit);
        m /= &g;
        unit /= &g;
    }
    let inv = mod_inverse(&unit, &b).expect("denominator coprime to base");

    let mut seen: HashMap<BigInt, usize> = HashMap::new();
    let mut out: Vec<Digit> = Vec::new();
    loop {
        if let Some(&start) = seen.get(&m) {
            let cycle = out.split_off(start);
            let int = IntDigits { low: out, cycle };
            return QuoteNumber::from_scaled(base, &int, k);
        }
        seen.insert(m.clone(), out.len());
        let d = (&m * &inv).mod_floor(&b);
        m = (&m - &d * &unit) / &b;
        out.push(d.to_u8().expect("digit below base"));
    }
}

/// Whether `q` lies in the frac-free ring, i.e. its denominator is coprime
/// to the base.
pub fn representable_in_l(q: &Fraction, base: Base) -> bool {
    q.denom().gcd(&BigInt::from(base.get())).is_one()
}

/// Both sides of the mirror identity `←(block) = -0.(block)(block)...`.
///
/// The left value is obtained with digit arithmetic: `←block * (1 - base^k)`
/// collapses to the finite string `block`, so `←block = block / (1 - base^k)`.
/// The right value is minus the ordinary repeating fraction.
pub fn mirror_check(block: &[Digit], base: Base) -> Result<(Fraction, Fraction)> {
    let quote = QuoteNumber::new(base, block.to_vec(), Vec::new(), Vec::new())?;
    let k = block.len() as u32;
    let b = BigInt::from(base.get());
    let factor = BigInt::one() - b.pow(k);
    let collapsed = arith::mul(&quote, &arith::integer(base, &factor));
    if !collapsed.is_terminating() || !collapsed.is_integral() {
        return Err(Error::Precondition(format!(
            "{collapsed} should be a finite string"
        )));
    }
    let n = digits_value(base, collapsed.preperiod());
    let left = Fraction::new(n, factor)?;

    let repeating = Fraction::new(digits_value(base, block), b.pow(k) - BigInt::one())?;
    Ok((left, -repeating))
}
