//! Quote notation: eventually-periodic left-infinite digit strings with a
//! finite fractional part.
//!
//! A value is written `period'preperiod.frac`. The period repeats leftward
//! forever, so `9'` is the string `...999` (that is, -1), `9'83` is
//! `...99983` (-17) and `6'7` is `...6667` (1/3). Every digit block is
//! stored most-significant-first, exactly as written.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::base::{Base, Digit};
use crate::error::{Error, Result};

/// Canonical eventually-periodic digit string.
///
/// Invariants, established by [`QuoteNumber::new`]:
/// - the period is primitive (not a repetition of a shorter block),
/// - the preperiod is minimal (its leading digit cannot be folded into the
///   period),
/// - the fractional part has no trailing zero.
///
/// Two canonical values are equal iff they denote the same digit string,
/// which in turn happens iff they denote the same rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuoteNumber {
    base: Base,
    period: Vec<Digit>,
    preperiod: Vec<Digit>,
    frac: Vec<Digit>,
}

/// Integer digits in least-significant-first order: `low` is the
/// preperiod, `cycle` the repeating block. Used by the digit algorithms,
/// which all scan right to left.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct IntDigits {
    pub low: Vec<Digit>,
    pub cycle: Vec<Digit>,
}

impl IntDigits {
    pub fn zero() -> Self {
        IntDigits { low: Vec::new(), cycle: vec![0] }
    }

    #[inline]
    pub fn digit(&self, i: usize) -> Digit {
        if i < self.low.len() {
            self.low[i]
        } else {
            self.cycle[(i - self.low.len()) % self.cycle.len()]
        }
    }

    /// Position within the cycle, or `None` while still inside `low`.
    #[inline]
    pub fn phase(&self, i: usize) -> Option<usize> {
        i.checked_sub(self.low.len()).map(|j| j % self.cycle.len())
    }

    /// Index from which `phase` is always defined.
    #[inline]
    pub fn settle(&self) -> usize {
        self.low.len()
    }

    /// Drops the lowest `k` digits (division by `base^k` of the string).
    pub fn drop_low(&self, k: usize) -> IntDigits {
        if k <= self.low.len() {
            IntDigits { low: self.low[k..].to_vec(), cycle: self.cycle.clone() }
        } else {
            let mut cycle = self.cycle.clone();
            let r = (k - self.low.len()) % cycle.len();
            cycle.rotate_left(r);
            IntDigits { low: Vec::new(), cycle }
        }
    }

    /// Reduces to canonical form in place.
    pub fn canonicalize(&mut self) {
        let p = self.cycle.len();
        let d = (1..=p)
            .filter(|d| p.is_multiple_of(*d))
            .find(|&d| (d..p).all(|i| self.cycle[i] == self.cycle[i % d]))
            .unwrap_or(p);
        self.cycle.truncate(d);
        while let Some(&top) = self.low.last() {
            if top != *self.cycle.last().unwrap() {
                break;
            }
            self.low.pop();
            self.cycle.rotate_right(1);
        }
    }
}

impl QuoteNumber {
    /// Builds the canonical value denoted by the given blocks (all
    /// most-significant-first).
    pub fn new(
        base: Base,
        period: Vec<Digit>,
        preperiod: Vec<Digit>,
        frac: Vec<Digit>,
    ) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        for &d in period.iter().chain(&preperiod).chain(&frac) {
            base.check_digit(d as u32)?;
        }
        Ok(Self::from_parts_unchecked(base, period, preperiod, frac))
    }

    pub(crate) fn from_parts_unchecked(
        base: Base,
        mut period: Vec<Digit>,
        mut preperiod: Vec<Digit>,
        mut frac: Vec<Digit>,
    ) -> Self {
        period.reverse();
        preperiod.reverse();
        let mut int = IntDigits { low: preperiod, cycle: period };
        int.canonicalize();
        while frac.last() == Some(&0) {
            frac.pop();
        }
        Self::from_canonical_int(base, int, frac)
    }

    fn from_canonical_int(base: Base, int: IntDigits, frac: Vec<Digit>) -> Self {
        let IntDigits { mut low, mut cycle } = int;
        low.reverse();
        cycle.reverse();
        QuoteNumber { base, period: cycle, preperiod: low, frac }
    }

    pub fn zero(base: Base) -> Self {
        QuoteNumber { base, period: vec![0], preperiod: Vec::new(), frac: Vec::new() }
    }

    pub fn one(base: Base) -> Self {
        QuoteNumber { base, period: vec![0], preperiod: vec![1], frac: Vec::new() }
    }

    /// Embeds a natural number as `0'digits`.
    pub fn natural(base: Base, n: &BigUint) -> Self {
        let mut low: Vec<Digit> = if n.is_zero() {
            Vec::new()
        } else {
            n.to_radix_le(base.get())
        };
        while low.last() == Some(&0) {
            low.pop();
        }
        let int = IntDigits { low, cycle: vec![0] };
        Self::from_canonical_int(base, int, Vec::new())
    }

    pub fn from_u64(base: Base, n: u64) -> Self {
        Self::natural(base, &BigUint::from(n))
    }

    #[inline]
    pub fn base(&self) -> Base {
        self.base
    }

    /// Repeating block, most significant digit first.
    pub fn period(&self) -> &[Digit] {
        &self.period
    }

    /// Non-repeating integer digits right of the period.
    pub fn preperiod(&self) -> &[Digit] {
        &self.preperiod
    }

    /// Digits after the point, most significant first.
    pub fn frac(&self) -> &[Digit] {
        &self.frac
    }

    pub fn is_zero(&self) -> bool {
        self.period == [0] && self.preperiod.is_empty() && self.frac.is_empty()
    }

    /// True when there are no digits after the point.
    pub fn is_integral(&self) -> bool {
        self.frac.is_empty()
    }

    /// True for finite strings, i.e. natural numbers with an optional
    /// fractional part.
    pub fn is_terminating(&self) -> bool {
        self.period == [0]
    }

    /// Digit at position `i`. Positions `i >= 1` count leftward from the
    /// point (1 is the units digit); `i <= 0` index the fractional digits
    /// rightward (0 is the first digit after the point).
    pub fn digit_at(&self, i: i64) -> Digit {
        if i >= 1 {
            let k = (i - 1) as usize;
            let pre = self.preperiod.len();
            if k < pre {
                self.preperiod[pre - 1 - k]
            } else {
                let p = self.period.len();
                self.period[p - 1 - (k - pre) % p]
            }
        } else {
            self.frac.get((-i) as usize).copied().unwrap_or(0)
        }
    }

    /// The integer whose base-b digits are positions `1..=n`, i.e. the
    /// value modulo `base^n`.
    pub fn residue(&self, n: usize) -> Result<BigUint> {
        if !self.frac.is_empty() {
            return Err(Error::NotAnInteger(self.base.get()));
        }
        let b = BigUint::from(self.base.get());
        let mut acc = BigUint::zero();
        for i in (1..=n).rev() {
            acc = acc * &b + BigUint::from(self.digit_at(i as i64));
        }
        Ok(acc)
    }

    /// Integer digits of `self * base^s` (requires `s >= frac.len()`).
    pub(crate) fn scaled_int(&self, s: usize) -> IntDigits {
        debug_assert!(s >= self.frac.len());
        let mut low = vec![0; s - self.frac.len()];
        low.extend(self.frac.iter().rev());
        low.extend(self.preperiod.iter().rev());
        let cycle = self.period.iter().rev().copied().collect();
        IntDigits { low, cycle }
    }

    /// Inverse of [`scaled_int`](Self::scaled_int): the value `int / base^s`.
    pub(crate) fn from_scaled(base: Base, int: &IntDigits, s: usize) -> Self {
        let frac: Vec<Digit> = (0..s).rev().map(|i| int.digit(i)).collect();
        let mut rest = int.drop_low(s);
        rest.canonicalize();
        let mut frac = frac;
        while frac.last() == Some(&0) {
            frac.pop();
        }
        Self::from_canonical_int(base, rest, frac)
    }

    /// Multiplies by `base^k` (a pure shift of the point; `k` may be
    /// negative).
    pub fn shift(&self, k: i64) -> Self {
        let s = self.frac.len();
        let mut int = self.scaled_int(s);
        let frac_len = s as i64 - k;
        if frac_len >= 0 {
            Self::from_scaled(self.base, &int, frac_len as usize)
        } else {
            let mut low = vec![0; (-frac_len) as usize];
            low.extend_from_slice(&int.low);
            int.low = low;
            Self::from_scaled(self.base, &int, 0)
        }
    }

    /// Parses quote notation (`period'preperiod.frac`) in the given base.
    pub fn parse(text: &str, base: Base) -> Result<Self> {
        let text = text.trim();
        let syntax = |offset: usize, message: &str| Error::Syntax {
            offset,
            message: message.to_string(),
        };
        let Some(tick) = text.find('\'') else {
            return Err(syntax(text.len(), "missing ' after the repeating block"));
        };
        let (period_txt, rest) = (&text[..tick], &text[tick + 1..]);
        let (pre_txt, frac_txt) = match rest.find('.') {
            Some(dot) => (&rest[..dot], Some(&rest[dot + 1..])),
            None => (rest, None),
        };
        if period_txt.is_empty() {
            return Err(syntax(0, "empty repeating block"));
        }
        if frac_txt == Some("") {
            return Err(syntax(text.len(), "expected digits after '.'"));
        }
        let digits = |s: &str, offset: usize| -> Result<Vec<Digit>> {
            s.char_indices()
                .map(|(i, c)| match c.to_digit(36) {
                    Some(d) => base.check_digit(d),
                    None => Err(syntax(offset + i, &format!("unexpected character {c:?}"))),
                })
                .collect()
        };
        let period = digits(period_txt, 0)?;
        let pre = digits(pre_txt, tick + 1)?;
        let frac = match frac_txt {
            Some(f) => digits(f, tick + 2 + pre_txt.len())?,
            None => Vec::new(),
        };
        Self::new(base, period, pre, frac)
    }

    fn write_digits(&self, f: &mut fmt::Formatter<'_>, ds: &[Digit]) -> fmt::Result {
        for &d in ds {
            write!(f, "{}", self.base.digit_char(d))?;
        }
        Ok(())
    }

    /// Expanded right-aligned rendering of the integer part, e.g.
    /// `...99983`, showing the period at least `repeats` times.
    pub fn expanded(&self, repeats: usize) -> String {
        let mut s = String::from("...");
        for _ in 0..repeats.max(1) {
            s.extend(self.period.iter().map(|&d| self.base.digit_char(d)));
        }
        s.extend(self.preperiod.iter().map(|&d| self.base.digit_char(d)));
        if !self.frac.is_empty() {
            s.push('.');
            s.extend(self.frac.iter().map(|&d| self.base.digit_char(d)));
        }
        s
    }
}

impl fmt::Display for QuoteNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_digits(f, &self.period)?;
        f.write_str("'")?;
        self.write_digits(f, &self.preperiod)?;
        if !self.frac.is_empty() {
            f.write_str(".")?;
            self.write_digits(f, &self.frac)?;
        }
        Ok(())
    }
}

impl FromStr for QuoteNumber {
    type Err = Error;

    /// Parses in base 10.
    fn from_str(s: &str) -> Result<Self> {
        QuoteNumber::parse(s, Base::TEN)
    }
}

/// Free-function form of [`QuoteNumber::new`].
pub fn normalize(
    base: Base,
    period: Vec<Digit>,
    preperiod: Vec<Digit>,
    frac: Vec<Digit>,
) -> Result<QuoteNumber> {
    QuoteNumber::new(base, period, preperiod, frac)
}
