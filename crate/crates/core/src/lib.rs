//! Exact-rational toolkit for Riordan arrays, binomial dual transforms,
//! and the Bernoulli/Euler/conjugate-Bernoulli identity families built on them.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in this crate. Identity checks therefore report
//! exact zero residuals, not small ones.
//!
//! Module map:
//! - [`rational`]: the scalar type, parsing/formatting, binomial coefficients
//! - [`series`]: truncated formal power series
//! - [`poly`]: dense univariate polynomials and exact integration
//! - [`riordan`]: Riordan arrays, A/Z-sequences, pseudo-involutions
//! - [`sequences`]: Bernoulli/Euler/conjugate-Bernoulli and the sequence corpus
//! - [`duality`]: the four dual transforms D1-D4 and their closed forms
//! - [`identity`]: grid-based verification of the two-variable identity families
//! - [`suite`]: the batch verification suite used by the CLI and the tests

// Index-driven loops mirror the summation indices of the formulas they
// implement; positional iteration would obscure them.
#![allow(clippy::needless_range_loop)]

pub mod duality;
mod error;
pub mod exec;
pub mod identity;
pub mod poly;
pub mod rational;
pub mod report;
pub mod riordan;
pub mod sequences;
pub mod series;
pub mod suite;

pub use error::Error;
pub use rational::Rat;
