//! Digit strings of length ω plus a finite head.
//!
//! A [`TransfiniteNumber`] is an ordinary left-infinite digit string (the
//! tail, at positions below ω) with a finite string placed beyond all of
//! those positions. Addition works digit-wise on the tail and as finite
//! addition on the heads; the only question is when the infinitely many
//! tail carries feed a 1 into the head. Both candidate rules break
//! associativity, which [`associativity_witness`] demonstrates.

use std::fmt;

use crate::arith::add_int;
use crate::base::{Base, Digit};
use crate::error::{Error, Result};
use crate::quote::QuoteNumber;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CarryRule {
    /// Carry into the head iff the tail carries are eventually all 1.
    RuleA,
    /// Carry into the head iff a tail carry of 1 occurs unboundedly often.
    RuleB,
}

impl CarryRule {
    pub fn tag(self) -> &'static str {
        match self {
            CarryRule::RuleA => "RULE_A",
            CarryRule::RuleB => "RULE_B",
        }
    }

    /// The carry into the head, given the carries over one full cycle of
    /// the tail sum.
    pub fn head_carry(self, cycle_carries: &[u8]) -> u8 {
        let hit = match self {
            CarryRule::RuleA => cycle_carries.iter().all(|&c| c == 1),
            CarryRule::RuleB => cycle_carries.contains(&1),
        };
        u8::from(hit)
    }
}

impl fmt::Display for CarryRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CarryProfile {
    EventuallyConstantOne,
    ZeroUnboundedlyOften,
}

impl CarryProfile {
    pub fn tag(self) -> &'static str {
        match self {
            CarryProfile::EventuallyConstantOne => "EVENTUALLY_CONSTANT_1",
            CarryProfile::ZeroUnboundedlyOften => "ZERO_UNBOUNDEDLY_OFTEN",
        }
    }
}

impl fmt::Display for CarryProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// `head` (most significant first, no leading zeros) followed by an
/// integral quote-number `tail`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransfiniteNumber {
    head: Vec<Digit>,
    tail: QuoteNumber,
}

impl TransfiniteNumber {
    pub fn new(head: Vec<Digit>, tail: QuoteNumber) -> Result<Self> {
        if !tail.is_integral() {
            return Err(Error::Precondition(format!("tail {tail} has fractional digits")));
        }
        let base = tail.base();
        for &d in &head {
            base.check_digit(d as u32)?;
        }
        let start = head.iter().position(|&d| d != 0).unwrap_or(head.len());
        Ok(TransfiniteNumber { head: head[start..].to_vec(), tail })
    }

    /// A number with an empty head.
    pub fn from_tail(tail: QuoteNumber) -> Result<Self> {
        Self::new(Vec::new(), tail)
    }

    /// Parses `H|T` or plain `T`, where `H` is a finite digit string and `T`
    /// a quote literal without fractional part.
    pub fn parse(text: &str, base: Base) -> Result<Self> {
        let (head_txt, tail_txt) = match text.split_once('|') {
            Some((h, t)) => (h.trim(), t.trim()),
            None => ("", text.trim()),
        };
        let head = head_txt
            .chars()
            .enumerate()
            .map(|(i, c)| {
                base.digit_value(c).ok_or_else(|| Error::Syntax {
                    offset: i,
                    message: format!("invalid head digit {c:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(head, QuoteNumber::parse(tail_txt, base)?)
    }

    pub fn head(&self) -> &[Digit] {
        &self.head
    }

    pub fn tail(&self) -> &QuoteNumber {
        &self.tail
    }

    pub fn base(&self) -> Base {
        self.tail.base()
    }

    /// Right-aligned rendering such as `1 ...887`.
    pub fn scheme(&self, repeats: usize) -> String {
        let tail = self.tail.expanded(repeats);
        if self.head.is_empty() {
            tail
        } else {
            format!("{} {tail}", self.head_string())
        }
    }

    fn head_string(&self) -> String {
        self.head.iter().map(|&d| self.base().digit_char(d)).collect()
    }
}

impl fmt::Display for TransfiniteNumber {
    /// `1|8'7` for head `1` and tail `8'7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.head.is_empty() {
            write!(f, "{}", self.tail)
        } else {
            write!(f, "{}|{}", self.head_string(), self.tail)
        }
    }
}

fn tail_sum(x: &TransfiniteNumber, y: &TransfiniteNumber) -> Result<(QuoteNumber, Vec<u8>)> {
    let base = x.base();
    if base != y.base() {
        return Err(Error::BaseMismatch(base.get(), y.base().get()));
    }
    let (sum, carries) = add_int(base, &x.tail.scaled_int(0), &y.tail.scaled_int(0));
    Ok((QuoteNumber::from_scaled(base, &sum, 0), carries))
}

/// Asymptotic behaviour of the carries when adding the two tails.
pub fn carry_profile(x: &TransfiniteNumber, y: &TransfiniteNumber) -> Result<CarryProfile> {
    let (_, carries) = tail_sum(x, y)?;
    Ok(if carries.iter().all(|&c| c == 1) {
        CarryProfile::EventuallyConstantOne
    } else {
        CarryProfile::ZeroUnboundedlyOften
    })
}

/// Finite addition of most-significant-first digit strings plus a carry.
fn add_heads(base: Base, x: &[Digit], y: &[Digit], carry: u8) -> Vec<Digit> {
    let b = base.get();
    let mut out = Vec::new();
    let mut c = carry as u32;
    let (mut i, mut j) = (x.len(), y.len());
    while i > 0 || j > 0 || c > 0 {
        let mut t = c;
        if i > 0 {
            i -= 1;
            t += x[i] as u32;
        }
        if j > 0 {
            j -= 1;
            t += y[j] as u32;
        }
        out.push((t % b) as Digit);
        c = t / b;
    }
    out.reverse();
    out
}

pub fn add_transfinite(
    x: &TransfiniteNumber,
    y: &TransfiniteNumber,
    rule: CarryRule,
) -> Result<TransfiniteNumber> {
    let (tail, carries) = tail_sum(x, y)?;
    let head = add_heads(x.base(), &x.head, &y.head, rule.head_carry(&carries));
    TransfiniteNumber::new(head, tail)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociativityWitness {
    pub rule: CarryRule,
    pub a: TransfiniteNumber,
    pub b: TransfiniteNumber,
    pub c: TransfiniteNumber,
    /// `(a + b) + c`
    pub left: TransfiniteNumber,
    /// `a + (b + c)`
    pub right: TransfiniteNumber,
    pub equal: bool,
}

/// The standard triple on which `rule` fails to be associative, with both
/// groupings evaluated.
pub fn associativity_witness(rule: CarryRule) -> AssociativityWitness {
    let blocks = match rule {
        CarryRule::RuleA => ["69'", "92'", "26'"],
        CarryRule::RuleB => ["65'", "56'", "05'"],
    };
    let [a, b, c] = blocks.map(|s| {
        TransfiniteNumber::from_tail(QuoteNumber::parse(s, Base::TEN).expect("valid literal"))
            .expect("integral tail")
    });
    let add = |x: &TransfiniteNumber, y: &TransfiniteNumber| {
        add_transfinite(x, y, rule).expect("same base")
    };
    let left = add(&add(&a, &b), &c);
    let right = add(&a, &add(&b, &c));
    let equal = left == right;
    AssociativityWitness { rule, a, b, c, left, right, equal }
}
