//! Lazily extended residue sequences for non-periodic adic numbers.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::base::Base;
use crate::error::{Error, Result};

/// Extension rule for a [`DigitStream`]: given `x_n` (mod `base^n`),
/// produce `x_{n+1}` (mod `base^(n+1)`) with `x_{n+1} ≡ x_n (mod base^n)`.
pub trait ExtendRule: Send {
    fn extend(&mut self, n: usize, current: &BigUint) -> Result<BigUint>;
}

impl<F> ExtendRule for F
where
    F: FnMut(usize, &BigUint) -> Result<BigUint> + Send,
{
    fn extend(&mut self, n: usize, current: &BigUint) -> Result<BigUint> {
        self(n, current)
    }
}

/// One infinite branch of residues `x_0 = 0, x_1, x_2, ...`, materialized
/// on demand and cached. Extension takes `&mut self`; wrap the stream in a
/// mutex to share it.
pub struct DigitStream {
    base: Base,
    modulus: BigUint,
    cache: Vec<BigUint>,
    rule: Box<dyn ExtendRule>,
}

impl DigitStream {
    pub fn new(base: Base, rule: impl ExtendRule + 'static) -> Self {
        DigitStream {
            base,
            modulus: BigUint::from(1u32),
            cache: vec![BigUint::zero()],
            rule: Box::new(rule),
        }
    }

    /// Stream whose residues are those of a fixed base-b integer.
    pub fn constant(base: Base, value: BigUint) -> Self {
        DigitStream::new(base, move |n: usize, _: &BigUint| Ok(&value % base.pow(n + 1)))
    }

    pub fn base(&self) -> Base {
        self.base
    }

    /// Number of levels computed so far (excluding level 0).
    pub fn computed(&self) -> usize {
        self.cache.len() - 1
    }

    /// `x_n`, extending the cache as needed.
    pub fn residue(&mut self, n: usize) -> Result<BigUint> {
        let b = BigUint::from(self.base.get());
        while self.cache.len() <= n {
            let level = self.cache.len() - 1;
            let current = &self.cache[level];
            let next = self.rule.extend(level, current)?;
            let next_modulus = &self.modulus * &b;
            if next >= next_modulus || &next % &self.modulus != *current {
                return Err(Error::NoContinuation(level + 1));
            }
            self.modulus = next_modulus;
            self.cache.push(next);
        }
        Ok(self.cache[n].clone())
    }

    /// Digit at position `i >= 1` (units digit is position 1).
    pub fn digit(&mut self, i: usize) -> Result<u8> {
        assert!(i >= 1, "digit positions start at 1");
        let x = self.residue(i)?;
        let unit = self.base.pow(i - 1);
        let d = (x / unit) % BigUint::from(self.base.get());
        Ok(d.to_u32_digits().first().copied().unwrap_or(0) as u8)
    }

    /// Last `n` digits, most significant first.
    pub fn digits(&mut self, n: usize) -> Result<Vec<u8>> {
        let x = self.residue(n)?;
        let mut ds = if x.is_zero() { Vec::new() } else { x.to_radix_le(self.base.get()) };
        ds.resize(n, 0);
        ds.reverse();
        Ok(ds)
    }
}

/// Free-function form of [`DigitStream::residue`].
pub fn stream_residue(s: &mut DigitStream, n: usize) -> Result<BigUint> {
    s.residue(n)
}

impl fmt::Debug for DigitStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DigitStream")
            .field("base", &self.base)
            .field("computed", &self.computed())
            .finish_non_exhaustive()
    }
}
