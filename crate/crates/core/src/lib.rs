//! Exact distribution of t-hook counts over self-conjugate partitions.
//!
//! The library computes, for a hook length t and partition size n, the exact
//! counts sc_t(n, m) of self-conjugate partitions of n with exactly m hooks
//! of length t. The counts come from a bivariate product generating function
//! assembled in exact arithmetic ([`genfun`]), are cross-checked against
//! direct enumeration ([`partitions`]), and feed the saddle-point asymptotics
//! and normality diagnostics ([`asymptotics`], [`stats`]).

pub mod asymptotics;
pub mod error;
pub mod genfun;
mod hiprec;
pub mod partitions;
pub mod series;
pub mod stats;

pub use error::{Error, Result};
