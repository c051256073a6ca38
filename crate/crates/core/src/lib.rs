//! Exact arithmetic on eventually periodic left-infinite digit strings.
//!
//! A [`QuoteNumber`] is written `period'preperiod.frac`: the period repeats
//! forever to the left, so `9'` is `...999 = -1` and `6'7` is `...6667 = 1/3`.
//! These strings form a ring that contains every rational whose denominator
//! is coprime to the base, and [`rational`] converts both ways exactly.
//!
//! ```
//! use adic_core::{QuoteNumber, to_rational};
//!
//! let x: QuoteNumber = "9'83".parse().unwrap();
//! assert_eq!(to_rational(&x).to_string(), "-17");
//! let y: QuoteNumber = "0'19".parse().unwrap();
//! assert_eq!((&x + &y).to_string(), "0'2");
//! ```
//!
//! Irrational elements such as square roots are exposed as lazily computed
//! [`DigitStream`]s from [`roots`].

pub mod arith;
pub mod base;
pub mod error;
pub mod quote;
pub mod rational;
pub mod roots;
pub mod stream;
pub mod transfinite;

pub use arith::{add, div_general, div_unit, integer, mul, negate, sub};
pub use base::{Base, Digit};
pub use error::{Error, Result};
pub use quote::QuoteNumber;
pub use rational::{from_rational, mirror_check, representable_in_l, to_rational, Fraction};
pub use roots::{
    classify_sqrt, hensel_lift, koenig_search, lift2_sqrt, root_branches, root_exists,
    root_stream, zero_divisor_pair, zero_divisor_streams, Decomposition, ExistsReason,
    NotRepresentableReason, RootExistence, SqrtClass, SqrtVerdict, DEFAULT_SEARCH_BOUND,
};
pub use stream::{DigitStream, ExtendRule};
pub use transfinite::{
    add_transfinite, associativity_witness, carry_profile, AssociativityWitness, CarryProfile,
    CarryRule, TransfiniteNumber,
};
