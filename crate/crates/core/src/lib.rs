//! Exact decision procedures for twisted Shalika periods of `GL_{2n}` over
//! `R` and `C`: L-parameter tests, orbit combinatorics on partial flag
//! manifolds, period verdicts and the restriction sign.

pub mod cli;
pub mod engine;
pub mod exact;
pub mod io;
pub mod langlands;
pub mod orbits;
pub mod verify;
