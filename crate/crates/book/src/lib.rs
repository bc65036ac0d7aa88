//! The guide's code listings, compiled and run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/primes.md")]
pub mod primes {}

#[doc = include_str!("../../../book/src/asymptotics.md")]
pub mod asymptotics {}

#[doc = include_str!("../../../book/src/zeta.md")]
pub mod zeta {}

#[doc = include_str!("../../../book/src/zero_free.md")]
pub mod zero_free {}

#[doc = include_str!("../../../book/src/zeros.md")]
pub mod zeros {}

#[doc = include_str!("../../../book/src/laplace.md")]
pub mod laplace {}

#[doc = include_str!("../../../book/src/contour.md")]
pub mod contour {}

#[doc = include_str!("../../../book/src/pnt_integral.md")]
pub mod pnt_integral {}

#[doc = include_str!("../../../book/src/acceptance.md")]
pub mod acceptance {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
