//! Exact computer algebra for Schubert polynomials and Stanley's weak-order
//! matrices.
//!
//! * [`permutations`]: one-line permutations, lengths, codes, reduced words.
//! * [`polynomials`]: sparse integer polynomials with divided differences and `∇`.
//! * [`schubert`]: the Schubert table, the staircase space `W` and its involution `J`.
//! * [`linalg`]: dense big-integer matrices with Bareiss determinants.
//! * [`stanley`]: the matrices `M_ℓ`, their products and the closed-form determinant.
//! * [`sl2`]: the `sl2` representations `V_k` and their tensor action on `W`.
//! * [`verify`]: sweeps that check the identities tying these together.
//!
//! Data-parallel sweeps run on rayon when the `parallel` feature is enabled
//! (the default); see [`exec::Execution`].

pub mod error;
pub mod exec;
pub mod linalg;
pub mod permutations;
pub mod polynomials;
pub mod schubert;
pub mod sl2;
pub mod stanley;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Execution;
pub use linalg::IntMatrix;
pub use permutations::{level_counts, max_length, LevelCounts, Permutation, ReducedWords};
pub use polynomials::{ExponentVector, Poly};
pub use schubert::{schubert_polynomial, SchubertTable, WeightBasis};
