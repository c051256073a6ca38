//! Digit-level arithmetic on quote numbers.
//!
//! Every algorithm runs right to left over the digit strings, exactly like
//! schoolbook arithmetic, and carries a small scan state (operand phases
//! plus a carry). The operands are eventually periodic, so the state space
//! is finite; the first time a state repeats, the output digits produced
//! since its previous occurrence form the period of the result.
//!
//! Fractional digits are handled by shifting both operands to integers,
//! operating, and shifting back.

use std::collections::HashMap;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::base::{Base, Digit};
use crate::error::{Error, Result};
use crate::quote::{IntDigits, QuoteNumber};
use crate::rational::{to_rational, Fraction};

/// Drives a right-to-left scan. `step(i)` returns the scan state on entry
/// to position `i` and the output digit there. Once `i >= settle`, the
/// state must determine all later output; the scan stops at the first
/// repeated state.
///
/// Returns the produced digits and the index where the cycle starts.
fn close_cycle<K, F>(settle: usize, mut step: F) -> (IntDigits, usize)
where
    K: Hash + Eq,
    F: FnMut(usize) -> (K, Digit),
{
    let mut seen: HashMap<K, usize> = HashMap::new();
    let mut out = Vec::new();
    let mut i = 0;
    loop {
        let (key, d) = step(i);
        if i >= settle {
            if let Some(&start) = seen.get(&key) {
                let cycle = out.split_off(start);
                return (IntDigits { low: out, cycle }, start);
            }
            seen.insert(key, i);
        }
        out.push(d);
        i += 1;
    }
}

fn check_bases(x: &QuoteNumber, y: &QuoteNumber) -> Base {
    assert_eq!(x.base(), y.base(), "operands use different bases");
    x.base()
}

/// Integer-string addition. Also returns the carries entering each
/// position of the output cycle.
pub(crate) fn add_int(base: Base, x: &IntDigits, y: &IntDigits) -> (IntDigits, Vec<u8>) {
    let b = base.get();
    let settle = x.settle().max(y.settle());
    let mut carry = 0u32;
    let mut carries = Vec::new();
    let (mut sum, start) = close_cycle(settle, |i| {
        let key = (x.phase(i), y.phase(i), carry);
        carries.push(carry as u8);
        let t = x.digit(i) as u32 + y.digit(i) as u32 + carry;
        debug_assert!(t < 2 * b);
        carry = t / b;
        (key, (t % b) as Digit)
    });
    let end = start + sum.cycle.len();
    let cycle_carries = carries[start..end].to_vec();
    sum.canonicalize();
    (sum, cycle_carries)
}

/// Integer string times a single digit.
fn mul_digit(base: Base, x: &IntDigits, d: Digit) -> IntDigits {
    if d == 0 {
        return IntDigits::zero();
    }
    let b = base.get();
    let mut carry = 0u32;
    let (mut prod, _) = close_cycle(x.settle(), |i| {
        let key = (x.phase(i), carry);
        let t = x.digit(i) as u32 * d as u32 + carry;
        carry = t / b;
        (key, (t % b) as Digit)
    });
    prod.canonicalize();
    prod
}

fn is_finite(x: &IntDigits) -> bool {
    x.cycle == [0]
}

/// Staircase multiplication: the running accumulator starts as
/// `x * y_0`; each step emits its last digit, drops it, and adds
/// `x * y_{i+1}`. The accumulator only takes finitely many values, so the
/// pair (phase of `y`, accumulator) eventually repeats.
fn mul_int(base: Base, x: &IntDigits, y: &IntDigits) -> IntDigits {
    if is_finite(x) && x.low.is_empty() || is_finite(y) && y.low.is_empty() {
        return IntDigits::zero();
    }
    // the multiplier is the operand whose digits run out, when there is one
    let (x, y) = if is_finite(x) && !is_finite(y) { (y, x) } else { (x, y) };

    let mut acc = mul_digit(base, x, y.digit(0));
    let mut out: Vec<Digit> = Vec::new();
    let mut seen: HashMap<(Option<usize>, IntDigits), usize> = HashMap::new();
    let settle = y.settle();
    let mut i = 0;
    loop {
        if i >= settle {
            if is_finite(y) {
                // no more partial products: the accumulator is the rest
                out.extend_from_slice(&acc.low);
                let mut r = IntDigits { low: out, cycle: acc.cycle };
                r.canonicalize();
                return r;
            }
            let key = (y.phase(i), acc.clone());
            if let Some(&start) = seen.get(&key) {
                let cycle = out.split_off(start);
                let mut r = IntDigits { low: out, cycle };
                r.canonicalize();
                return r;
            }
            seen.insert(key, i);
        }
        out.push(acc.digit(0));
        let mut rest = acc.drop_low(1);
        rest.canonicalize();
        let partial = mul_digit(base, x, y.digit(i + 1));
        acc = add_int(base, &rest, &partial).0;
        i += 1;
    }
}

/// Sum of two quote numbers.
///
/// # Panics
/// If the operands use different bases.
pub fn add(x: &QuoteNumber, y: &QuoteNumber) -> QuoteNumber {
    let base = check_bases(x, y);
    let s = x.frac().len().max(y.frac().len());
    let (sum, _) = add_int(base, &x.scaled_int(s), &y.scaled_int(s));
    QuoteNumber::from_scaled(base, &sum, s)
}

/// Base complement: every digit `d` becomes `base - 1 - d`, then one unit
/// in the last place is added.
pub fn negate(x: &QuoteNumber) -> QuoteNumber {
    let base = x.base();
    let top = base.max_digit();
    let s = x.frac().len();
    let int = x.scaled_int(s);
    let comp = IntDigits {
        low: int.low.iter().map(|d| top - d).collect(),
        cycle: int.cycle.iter().map(|d| top - d).collect(),
    };
    let one = IntDigits { low: vec![1], cycle: vec![0] };
    let (neg, _) = add_int(base, &comp, &one);
    QuoteNumber::from_scaled(base, &neg, s)
}

/// `x - y`, computed as `x + negate(y)`.
pub fn sub(x: &QuoteNumber, y: &QuoteNumber) -> QuoteNumber {
    check_bases(x, y);
    add(x, &negate(y))
}

/// Product of two quote numbers, both possibly infinite.
///
/// # Panics
/// If the operands use different bases.
pub fn mul(x: &QuoteNumber, y: &QuoteNumber) -> QuoteNumber {
    let base = check_bases(x, y);
    let (sx, sy) = (x.frac().len(), y.frac().len());
    let prod = mul_int(base, &x.scaled_int(sx), &y.scaled_int(sy));
    QuoteNumber::from_scaled(base, &prod, sx + sy)
}

/// Quotient-digit lookup for a divisor that is a unit modulo the base:
/// `table[r]` is the unique digit `q` with `q * d ≡ r (mod base)`.
fn inverse_table(base: Base, d: &BigUint) -> Option<Vec<Digit>> {
    let b = base.get();
    let dm = (d % b).to_u32().expect("reduced below base");
    let mut table: Vec<Option<Digit>> = vec![None; b as usize];
    for q in 0..b {
        let r = (q * dm % b) as usize;
        if table[r].is_some() {
            return None;
        }
        table[r] = Some(q as Digit);
    }
    table.into_iter().collect()
}

/// Right-to-left division by a positive integer coprime to the base.
///
/// Each quotient digit is read from a lookup table: it is the unique digit
/// whose product with the divisor matches the current last digit. The
/// product is subtracted and the scan moves one place left; the running
/// borrow is bounded by the divisor, so the scan state is finite.
pub fn div_unit(x: &QuoteNumber, d: &BigUint) -> Result<QuoteNumber> {
    let base = x.base();
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if !d.gcd(&BigUint::from(base.get())).is_one() {
        return Err(Error::NotAUnit { divisor: d.to_string(), base: base.get() });
    }
    let table = inverse_table(base, d).expect("unit divisor gives a bijective table");
    let b = BigInt::from(base.get());
    let divisor = BigInt::from(d.clone());
    let s = x.frac().len();
    let int = x.scaled_int(s);

    let mut borrow = BigInt::zero();
    let (mut quot, _) = close_cycle(int.settle(), |i| {
        let key = (int.phase(i), borrow.clone());
        let t: BigInt = BigInt::from(int.digit(i)) + &borrow;
        let r = t.mod_floor(&b).to_usize().expect("digit");
        let q = table[r];
        let rest = t - &divisor * q;
        debug_assert!(rest.is_multiple_of(&b), "quotient digit must clear the last place");
        borrow = rest / &b;
        (key, q)
    });
    quot.canonicalize();
    Ok(QuoteNumber::from_scaled(base, &quot, s))
}

/// Embeds a (possibly negative) integer.
pub fn integer(base: Base, n: &BigInt) -> QuoteNumber {
    let mag = QuoteNumber::natural(base, n.magnitude());
    if n.is_negative() {
        negate(&mag)
    } else {
        mag
    }
}

/// Splits a nonzero `n` into the part built from the base's primes and the
/// coprime rest. Returns the smallest `k` with that part dividing
/// `base^k`, the cofactor `base^k / part`, and the rest.
pub(crate) fn clear_base_primes(base: Base, n: &BigUint) -> (usize, BigUint, BigUint) {
    debug_assert!(!n.is_zero());
    let mut rest = n.clone();
    let mut k = 0usize;
    for p in base.prime_factors() {
        let mut multiplicity = 0usize;
        let mut b = base.get();
        while b.is_multiple_of(p) {
            b /= p;
            multiplicity += 1;
        }
        let mut e = 0usize;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        k = k.max(e.div_ceil(multiplicity));
    }
    let part = n / &rest;
    let cofactor = base.pow(k) / part;
    (k, cofactor, rest)
}

/// General division. The base's prime factors are cleared from the
/// divisor's value by multiplying both operands with the minimal cofactor;
/// what remains is a division by a unit followed by a shift of the point.
pub fn div_general(x: &QuoteNumber, y: &QuoteNumber) -> Result<QuoteNumber> {
    if x.base() != y.base() {
        return Err(Error::BaseMismatch(x.base().get(), y.base().get()));
    }
    if y.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let base = x.base();
    let r: Fraction = to_rational(y);
    // x / (m/n) = x * n / m
    let m = r.numer();
    let n = r.denom();
    let (k, cofactor, unit) = clear_base_primes(base, m.magnitude());
    let mut scale = BigInt::from_biguint(Sign::Plus, n.magnitude() * cofactor);
    if m.is_negative() {
        scale = -scale;
    }
    let scaled = mul(x, &integer(base, &scale));
    let q = div_unit(&scaled, &unit)?;
    Ok(q.shift(-(k as i64)))
}

impl Add for &QuoteNumber {
    type Output = QuoteNumber;
    fn add(self, rhs: &QuoteNumber) -> QuoteNumber {
        add(self, rhs)
    }
}

impl Sub for &QuoteNumber {
    type Output = QuoteNumber;
    fn sub(self, rhs: &QuoteNumber) -> QuoteNumber {
        sub(self, rhs)
    }
}

impl Mul for &QuoteNumber {
    type Output = QuoteNumber;
    fn mul(self, rhs: &QuoteNumber) -> QuoteNumber {
        mul(self, rhs)
    }
}

impl Neg for &QuoteNumber {
    type Output = QuoteNumber;
    fn neg(self) -> QuoteNumber {
        negate(self)
    }
}

impl QuoteNumber {
    pub fn checked_div(&self, rhs: &QuoteNumber) -> Result<QuoteNumber> {
        div_general(self, rhs)
    }
}
