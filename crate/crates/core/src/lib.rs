//! Error exponents and extremality of the BEC and BSC among binary-input
//! memoryless channels.
//!
//! For a binary-input channel under uniform input, Gallager's `E0(rho)` can be
//! written as `-ln E[g(rho, Z)]` for a random tilt `Z in [0, 1]`. Matching a
//! channel with a BEC and a BSC at one `rho` then orders their `E0` curves and
//! their slopes over whole ranges of `rho`. This crate evaluates all of these
//! quantities and provides numerical checks of the orderings.
//!
//! All logarithms are natural; rates and exponents are in nats.

// `!(a <= b)` is used on purpose so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod channel;
pub mod error;
pub mod extremal;
pub mod gfun;
pub mod numerics;
pub mod parallel;
pub mod renyi;
pub mod verify;

pub use channel::{BinaryChannel, ZDistribution};
pub use error::{Error, Result};
pub use extremal::{BecParams, BscParams, IntersectionReport};
pub use numerics::ToleranceConfig;
