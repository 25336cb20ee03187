//! setfn — a desk-scale numerical laboratory for monotone set-functions.
//!
//! The crate implements, on finite ground sets of up to 16 atoms:
//!
//! * classification of monotone set-functions (submeasures, supermeasures,
//!   measures) and estimation of their upper/lower additivity exponents;
//! * linear-programming extraction of the largest measure dominated by a
//!   submeasure and the smallest measure dominating a supermeasure, with
//!   the sharp mass constant `K_p = 2 (2^p - 1)^{-1/p} - 1`;
//! * partition envelopes and equivalent-measure construction for
//!   submeasures with a crude lower estimate;
//! * decreasing rearrangements and four Lorentz-type quasi-norms, with the
//!   comparison constants between the integral and partition forms;
//! * quasi-norm renorming to exact upper-p / lower-q estimates, embedding
//!   and density measures for quasi-normed function lattices, and
//!   convexity-constant search with reproducible witnesses;
//! * a constructive factorization pipeline for finite-dimensional
//!   operators, producing a probability measure and a certified constant
//!   chain.
//!
//! Everything is deterministic given explicit seeds, and every certificate
//! embeds the data needed to re-check it.

pub mod error;
pub mod ground;
pub mod setfunction;
pub mod simplex;
pub mod measure;
pub mod lorentz;
pub mod lattice;
pub mod factorize;
pub mod report;
pub mod selftest;
pub mod cli;

pub use error::{Error, Result};
