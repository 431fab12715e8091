//! Exact and p-adic arithmetic for verifying congruences of Wilson's
//! theorem modulo `p^4`, the Bernoulli-number machinery behind them, and a
//! registry of checks that compare closed forms against direct computation.

pub mod arith;
pub mod bernoulli;
pub mod error;
pub mod formulas;
pub mod padic;
pub mod sequences;
pub mod verifier;

pub use error::{Error, Result};
