//! Shared operands for the benchmarks.

use adic_core::{Base, QuoteNumber};

/// `1/n` for `n` coprime to 10, a purely periodic-after-one-digit operand
/// whose period length is the multiplicative order of 10 mod `n`.
pub fn reciprocal(n: u64) -> QuoteNumber {
    let one = QuoteNumber::one(Base::TEN);
    adic_core::div_unit(&one, &n.into()).expect("n coprime to 10")
}

pub fn parse(s: &str) -> QuoteNumber {
    QuoteNumber::parse(s, Base::TEN).expect("valid literal")
}
