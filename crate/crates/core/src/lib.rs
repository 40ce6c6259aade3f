//! Exact arithmetic for the dynamics of polynomial maps.
//!
//! The crate computes multiplier spectra `S_n(f)` of polynomial maps over the
//! rationals, builds and checks Ritt-move pairs `z^r R(z^k)` / `z^r R(z)^k`,
//! and evaluates classification predicates (pre-simplicity, exceptionality,
//! generalized Lattès form) together with the genus formulas for the curves
//! `F(x) = H(y)` and `(F(x) - F(y)) / (x - y)`.
//!
//! Everything here is pure computation over `alloc`; the crate builds without
//! `std` when the default `std` feature is disabled.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod classify;
pub mod dynmaps;
mod error;
pub mod exactalg;
pub mod ritt;
pub mod spectrum;

pub use error::{Error, Result};
pub use exactalg::{Poly, Rational};
