// `!(x > 0.0)` is deliberate throughout: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod error;
pub mod numeric;
pub mod primes;
pub mod quad;
pub mod tauberian;
pub mod verify;
pub mod zeros;
pub mod zeta;

pub use error::{Error, Result};
