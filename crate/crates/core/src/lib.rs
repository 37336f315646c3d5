//! Exact-arithmetic calculus for Hilbert function growth: Macaulay binomial
//! machinery, per-degree linear algebra for graded ideals, finite point sets
//! in projective space, growth classification, and hidden-plane recovery.

pub mod binom;
pub mod classify;
pub mod construct;
pub mod dual;
pub mod gcd;
pub mod graded;
pub mod io;
pub mod error;
pub mod form;
pub mod matrix;
pub mod mono;
pub mod plane;
pub mod points;
pub mod rat;
pub mod rng;

pub use binom::{
    gotzmann_values, green_bound, growth_gap, is_o_sequence, macaulay_bound, macaulay_expand,
    mg_dimension, BinomialExpansion, HVector, OSequenceCheck,
};
pub use error::{Error, Result};
pub use form::{Form, LinearSubspace};
pub use gcd::form_gcd;
pub use matrix::{RatMatrix, RowSpace};
pub use rat::Rat;
