//! Roots and zero divisors in the 10-adic integers.
//!
//! The ring splits as 2-adic times 5-adic integers, so a root exists iff
//! it exists in both factors. Odd primes use Hensel lifting; square roots
//! modulo powers of two use the mod-8 criterion with stepwise lifting. The
//! two residues are recombined by the Chinese remainder theorem into one
//! lazily extended digit stream per root branch.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_traits::{One, Zero};

use crate::base::Base;
use crate::error::{Error, Result};
use crate::stream::DigitStream;

/// Default depth limit for [`koenig_search`].
pub const DEFAULT_SEARCH_BOUND: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SqrtVerdict {
    PerfectSquare,
    Representable,
    NotRepresentable,
}

impl SqrtVerdict {
    pub fn tag(self) -> &'static str {
        match self {
            SqrtVerdict::PerfectSquare => "PERFECT_SQUARE",
            SqrtVerdict::Representable => "REPRESENTABLE",
            SqrtVerdict::NotRepresentable => "NOT_REPRESENTABLE",
        }
    }
}

impl fmt::Display for SqrtVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NotRepresentableReason {
    /// The part coprime to 10 is not 1 or 9 modulo 40.
    Mod40Fail,
    OddPowerOf2,
    OddPowerOf5,
}

impl NotRepresentableReason {
    pub fn tag(self) -> &'static str {
        match self {
            NotRepresentableReason::Mod40Fail => "MOD40_FAIL",
            NotRepresentableReason::OddPowerOf2 => "ODD_PRIME_POWER_OF_2",
            NotRepresentableReason::OddPowerOf5 => "ODD_PRIME_POWER_OF_5",
        }
    }
}

impl fmt::Display for NotRepresentableReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// `q = 2^(2*twos) * 5^(2*fives) * unit` with `gcd(unit, 10) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub twos: u32,
    pub fives: u32,
    pub unit: u64,
}

impl Decomposition {
    /// `2^twos * 5^fives`, the factor re-applied to the root of `unit`.
    pub fn root_multiplier(&self) -> BigUint {
        BigUint::from(2u32).pow(self.twos) * BigUint::from(5u32).pow(self.fives)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SqrtClass {
    pub verdict: SqrtVerdict,
    pub decomposition: Option<Decomposition>,
    pub reason: Option<NotRepresentableReason>,
}

fn valuation(mut q: u64, p: u64) -> (u32, u64) {
    let mut e = 0;
    while q.is_multiple_of(p) {
        q /= p;
        e += 1;
    }
    (e, q)
}

/// Decides whether `q` has a square root among the 10-adic integers.
///
/// A non-square `q` has one iff `q = 4^l * 25^k * q'` with `q'` coprime to
/// 10 and `q' ≡ 1` or `9 (mod 40)`.
pub fn classify_sqrt(q: u64) -> SqrtClass {
    if q == 0 {
        return SqrtClass { verdict: SqrtVerdict::PerfectSquare, decomposition: None, reason: None };
    }
    let (v2, rest) = valuation(q, 2);
    let (v5, unit) = valuation(rest, 5);
    let decomposition = (v2 % 2 == 0 && v5 % 2 == 0)
        .then_some(Decomposition { twos: v2 / 2, fives: v5 / 2, unit });
    let root = q.sqrt();
    if root * root == q {
        return SqrtClass { verdict: SqrtVerdict::PerfectSquare, decomposition, reason: None };
    }
    let reason = if v2 % 2 == 1 {
        Some(NotRepresentableReason::OddPowerOf2)
    } else if v5 % 2 == 1 {
        Some(NotRepresentableReason::OddPowerOf5)
    } else if !matches!(unit % 40, 1 | 9) {
        Some(NotRepresentableReason::Mod40Fail)
    } else {
        None
    };
    let verdict = match reason {
        Some(_) => SqrtVerdict::NotRepresentable,
        None => SqrtVerdict::Representable,
    };
    SqrtClass { verdict, decomposition, reason }
}

fn is_small_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// One Hensel step: refines a root of `x^k - q` from modulus `p^j` to
/// `modulus = p^(j+1)` using the (unit) derivative.
fn newton_step(x: &BigInt, q: &BigInt, k: u32, modulus: &BigInt) -> BigInt {
    let f = x.pow(k) - q;
    let df = BigInt::from(k) * x.pow(k - 1);
    let inv = mod_inverse(&df, modulus).expect("derivative is a unit");
    (x - f * inv).mod_floor(modulus)
}

/// All residues `x mod p^n` with `x^k ≡ q (mod p^n)` that lift a simple
/// root modulo `p` (one where `k * x^(k-1)` is a unit).
pub fn hensel_lift(q: &BigInt, k: u32, p: u64, n: usize) -> Result<Vec<BigUint>> {
    if p == 2 || !is_small_prime(p) {
        return Err(Error::Precondition(format!("{p} is not an odd prime")));
    }
    if k < 2 {
        return Err(Error::Precondition("exponent must be at least 2".into()));
    }
    let pb = BigInt::from(p);
    if q.is_multiple_of(&pb) {
        return Err(Error::Precondition(format!("{q} is divisible by {p}")));
    }
    if (k as u64).is_multiple_of(p) {
        return Err(Error::Precondition(format!("exponent {k} is divisible by {p}; no simple roots")));
    }
    if n == 0 {
        return Ok(vec![BigUint::zero()]);
    }
    let mut roots = Vec::new();
    for r in 1..p {
        let x = BigInt::from(r);
        if !(x.pow(k) - q).is_multiple_of(&pb) {
            continue;
        }
        let mut x = x;
        let mut modulus = pb.clone();
        for _ in 1..n {
            modulus *= &pb;
            x = newton_step(&x, q, k, &modulus);
        }
        roots.push(x.to_biguint().expect("reduced residue"));
    }
    roots.sort();
    Ok(roots)
}

/// All residues modulo `2^n` whose square is `q`, for odd `q`.
///
/// Built bit by bit: a solution modulo `2^m` extends to `x` or
/// `x + 2^m` modulo `2^(m+1)`, whichever satisfies the next congruence.
/// For `n >= 3` the result is empty unless `q ≡ 1 (mod 8)`, in which case
/// it has exactly four elements.
pub fn lift2_sqrt(q: &BigInt, n: usize) -> Result<Vec<BigUint>> {
    if q.is_even() {
        return Err(Error::Precondition(format!("{q} is even")));
    }
    let mut sols = vec![BigInt::zero()];
    let mut modulus = BigInt::one();
    for _ in 0..n {
        let step = modulus.clone();
        modulus *= 2;
        sols = sols
            .iter()
            .flat_map(|x| [x.clone(), x + &step])
            .filter(|x| (x * x - q).is_multiple_of(&modulus))
            .collect();
    }
    let mut out: Vec<BigUint> = sols.into_iter().map(|x| x.to_biguint().unwrap()).collect();
    out.sort();
    Ok(out)
}

/// Incrementally refined root of `x^k = q` in the `p`-adic integers.
#[derive(Debug, Clone)]
enum PrimeRoot {
    /// Simple root, refined by Hensel steps; `x` is exact modulo `p^prec`.
    Newton { p: BigInt, q: BigInt, k: u32, x: BigInt, prec: usize, modulus: BigInt },
    /// 2-adic square root of `q ≡ 1 (mod 8)`: `y^2 ≡ q (mod 2^j)`, so the
    /// true root agrees with `y` modulo `2^(j-1)`.
    Sqrt2 { q: BigInt, y: BigInt, j: usize },
}

impl PrimeRoot {
    fn newton(p: u64, q: &BigInt, k: u32, seed: u64) -> Self {
        let p = BigInt::from(p);
        PrimeRoot::Newton { q: q.clone(), k, x: BigInt::from(seed), prec: 1, modulus: p.clone(), p }
    }

    fn sqrt2(q: &BigInt) -> Self {
        debug_assert!((q.mod_floor(&BigInt::from(8))).is_one());
        PrimeRoot::Sqrt2 { q: q.clone(), y: BigInt::one(), j: 3 }
    }

    fn prime(&self) -> BigInt {
        match self {
            PrimeRoot::Newton { p, .. } => p.clone(),
            PrimeRoot::Sqrt2 { .. } => BigInt::from(2),
        }
    }

    /// The root modulo `p^n`.
    fn residue(&mut self, n: usize) -> BigInt {
        let modulus_n = self.prime().pow(n as u32);
        match self {
            PrimeRoot::Newton { p, q, k, x, prec, modulus } => {
                while *prec < n {
                    *modulus *= &*p;
                    *x = newton_step(x, q, *k, modulus);
                    *prec += 1;
                }
                x.mod_floor(&modulus_n)
            }
            PrimeRoot::Sqrt2 { q, y, j } => {
                let two = BigInt::from(2);
                while *j < n + 1 {
                    let next = two.pow(*j as u32 + 1);
                    if !(&*y * &*y - &*q).is_multiple_of(&next) {
                        *y += two.pow(*j as u32 - 1);
                    }
                    *j += 1;
                }
                y.mod_floor(&modulus_n)
            }
        }
    }
}

/// Extension rule combining a 2-adic and a 5-adic root by CRT, optionally
/// negating either side, and scaling by a fixed multiplier.
#[derive(Debug, Clone)]
struct CrtRoot {
    two: PrimeRoot,
    five: PrimeRoot,
    negate_two: bool,
    negate_five: bool,
    multiplier: BigInt,
}

impl CrtRoot {
    fn residue(&mut self, n: usize) -> BigUint {
        let m2 = BigInt::from(2).pow(n as u32);
        let m5 = BigInt::from(5).pow(n as u32);
        let mut a = self.two.residue(n);
        if self.negate_two {
            a = (-a).mod_floor(&m2);
        }
        let mut c = self.five.residue(n);
        if self.negate_five {
            c = (-c).mod_floor(&m5);
        }
        let inv = mod_inverse(&m2, &m5).expect("coprime moduli");
        let s = &a + &m2 * ((c - &a) * inv).mod_floor(&m5);
        let m10 = &m2 * &m5;
        (s * &self.multiplier).mod_floor(&m10).to_biguint().unwrap()
    }

    fn into_stream(self) -> DigitStream {
        let mut rule = self;
        DigitStream::new(Base::TEN, move |n: usize, _: &BigUint| Ok(rule.residue(n + 1)))
    }
}

/// Depth used to put root branches in canonical order.
const ORDERING_DEPTH: usize = 48;

/// A lazily extended `k`-th root of `q` in the 10-adic integers.
///
/// Square roots have four branches, ordered by residue modulo 10, then
/// modulo 100, and so on; for perfect squares the ordinary integer root
/// comes first. Odd exponents not divisible by 5 have a single branch for
/// `q` coprime to 10.
pub fn root_stream(q: u64, k: u32, branch: usize) -> Result<DigitStream> {
    let mut branches = root_branches(q, k)?;
    let count = branches.len();
    if branch >= count {
        return Err(Error::Precondition(format!(
            "branch {branch} out of range ({count} branches)"
        )));
    }
    Ok(branches.swap_remove(branch))
}

/// All branches of the `k`-th root of `q`, in canonical order.
pub fn root_branches(q: u64, k: u32) -> Result<Vec<DigitStream>> {
    if k < 2 {
        return Err(Error::Precondition("exponent must be at least 2".into()));
    }
    if q == 0 {
        return Ok(vec![DigitStream::constant(Base::TEN, BigUint::zero())]);
    }
    let rules: Vec<CrtRoot> = if k == 2 {
        let class = classify_sqrt(q);
        if let Some(reason) = class.reason {
            return Err(Error::NotRepresentable(reason));
        }
        let dec = class.decomposition.expect("representable values decompose");
        let unit = BigInt::from(dec.unit);
        let seed5 = (1..5u64).find(|r| (r * r) % 5 == dec.unit % 5).expect("unit is a square mod 5");
        let multiplier = BigInt::from(dec.root_multiplier());
        let mut rules = Vec::new();
        for negate_two in [false, true] {
            for negate_five in [false, true] {
                rules.push(CrtRoot {
                    two: PrimeRoot::sqrt2(&unit),
                    five: PrimeRoot::newton(5, &unit, 2, seed5),
                    negate_two,
                    negate_five,
                    multiplier: multiplier.clone(),
                });
            }
        }
        rules
    } else {
        match root_exists(q, k)? {
            RootExistence::Exists(_) => {}
            RootExistence::DoesNotExist(reason) => return Err(Error::NotRepresentable(reason)),
            RootExistence::Undecided => {
                return Err(Error::OutOfScope(format!(
                    "existence of {k}-th roots is undecided here"
                )))
            }
        }
        let qb = BigInt::from(q);
        let seed2 = 1;
        let seed5 = (1..5u64)
            .find(|r| (BigInt::from(*r).pow(k) - &qb).is_multiple_of(&BigInt::from(5)))
            .expect("k-th powers are onto the units mod 5");
        vec![CrtRoot {
            two: PrimeRoot::newton(2, &qb, k, seed2),
            five: PrimeRoot::newton(5, &qb, k, seed5),
            negate_two: false,
            negate_five: false,
            multiplier: BigInt::one(),
        }]
    };

    let integer_root = {
        let r = q.nth_root(k);
        (r.checked_pow(k) == Some(q)).then(|| BigUint::from(r))
    };
    let limit = Base::TEN.pow(ORDERING_DEPTH);
    let mut keyed = Vec::with_capacity(rules.len());
    for mut rule in rules {
        let r = rule.residue(ORDERING_DEPTH);
        let is_integer = integer_root.as_ref().is_some_and(|s| s % &limit == r);
        let mut digits = r.to_radix_le(10);
        digits.resize(ORDERING_DEPTH, 0);
        keyed.push((!is_integer, digits, rule));
    }
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(keyed.into_iter().map(|(_, _, rule)| rule.into_stream()).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExistsReason {
    PerfectSquare,
    /// Square root via the mod-40 criterion.
    Mod40Criterion,
    /// Odd exponent not divisible by 5: `x -> x^k` is a bijection on the
    /// units of both factors.
    OddExponentCoprimeTo10,
}

impl ExistsReason {
    pub fn tag(self) -> &'static str {
        match self {
            ExistsReason::PerfectSquare => "PERFECT_SQUARE",
            ExistsReason::Mod40Criterion => "MOD40_PASS",
            ExistsReason::OddExponentCoprimeTo10 => "ODD_EXPONENT_COPRIME_TO_10",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootExistence {
    Exists(ExistsReason),
    DoesNotExist(NotRepresentableReason),
    /// Exponents that are even (other than 2) or divisible by 5.
    Undecided,
}

impl RootExistence {
    pub fn tag(self) -> &'static str {
        match self {
            RootExistence::Exists(r) => r.tag(),
            RootExistence::DoesNotExist(r) => r.tag(),
            RootExistence::Undecided => "UNDECIDED",
        }
    }

    pub fn exists(self) -> Option<bool> {
        match self {
            RootExistence::Exists(_) => Some(true),
            RootExistence::DoesNotExist(_) => Some(false),
            RootExistence::Undecided => None,
        }
    }
}

/// Existence of a `k`-th root of `q` (coprime to 10) among the 10-adic
/// integers.
pub fn root_exists(q: u64, k: u32) -> Result<RootExistence> {
    if k < 2 {
        return Err(Error::Precondition("exponent must be at least 2".into()));
    }
    if q.gcd(&10) != 1 {
        return Err(Error::OutOfScope(format!("{q} shares a factor with 10")));
    }
    if k == 2 {
        let class = classify_sqrt(q);
        return Ok(match class.verdict {
            SqrtVerdict::PerfectSquare => RootExistence::Exists(ExistsReason::PerfectSquare),
            SqrtVerdict::Representable => RootExistence::Exists(ExistsReason::Mod40Criterion),
            SqrtVerdict::NotRepresentable => {
                RootExistence::DoesNotExist(class.reason.expect("reason present"))
            }
        });
    }
    if k % 2 == 1 && !k.is_multiple_of(5) {
        Ok(RootExistence::Exists(ExistsReason::OddExponentCoprimeTo10))
    } else {
        Ok(RootExistence::Undecided)
    }
}

/// Digit-by-digit construction of `a ≡ 0 (mod 2^n)`, `b ≡ 0 (mod 5^n)`.
/// Both start from the smallest nonzero admissible digit (2 and 5); later
/// digits take the smallest admissible value.
pub fn zero_divisor_streams() -> (DigitStream, DigitStream) {
    let a = DigitStream::new(Base::TEN, |n: usize, a: &BigUint| {
        if n == 0 {
            return Ok(BigUint::from(2u32));
        }
        let cofactor = a >> n;
        let digit = if cofactor.is_odd() { 1u32 } else { 0 };
        Ok(a + BigUint::from(digit) * Base::TEN.pow(n))
    });
    let b = DigitStream::new(Base::TEN, |n: usize, b: &BigUint| {
        if n == 0 {
            return Ok(BigUint::from(5u32));
        }
        let five_n = BigUint::from(5u32).pow(n as u32);
        let cofactor = BigInt::from(b / &five_n);
        // 2^n * d + b' ≡ 0 (mod 5), and 3 inverts 2 modulo 5
        let digit = (BigInt::from(3).pow(n as u32) * -cofactor).mod_floor(&BigInt::from(5));
        Ok(b + digit.to_biguint().unwrap() * Base::TEN.pow(n))
    });
    (a, b)
}

/// The pair `(a_n, b_n)` of nonzero residues modulo `10^n` with
/// `a_n * b_n ≡ 0 (mod 10^n)`.
pub fn zero_divisor_pair(n: usize) -> Result<(BigUint, BigUint)> {
    if n == 0 {
        return Err(Error::Precondition("depth must be at least 1".into()));
    }
    let (mut a, mut b) = zero_divisor_streams();
    Ok((a.residue(n)?, b.residue(n)?))
}

/// Exhaustive breadth-first search of the tree of digit strings `s` with
/// `s^k ≡ q (mod 10^|s|)`. Returns every residue modulo `10^depth` that
/// solves the congruence, ascending.
pub fn koenig_search(q: &BigInt, k: u32, depth: usize, bound: usize) -> Result<Vec<BigUint>> {
    if depth > bound {
        return Err(Error::SearchTooDeep { depth, bound });
    }
    let mut level = vec![BigInt::zero()];
    let mut place = BigInt::one();
    for _ in 0..depth {
        let modulus = &place * 10;
        let step = &place;
        level = level
            .iter()
            .flat_map(|s| (0..10).map(move |d| s + BigInt::from(d) * step))
            .filter(|t| (t.pow(k) - q).is_multiple_of(&modulus))
            .collect();
        place = modulus;
        if level.is_empty() {
            break;
        }
    }
    let mut out: Vec<BigUint> = level.into_iter().map(|x| x.to_biguint().unwrap()).collect();
    out.sort();
    Ok(out)
}
