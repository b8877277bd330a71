//! Exact computation of Sylow branching coefficients for symmetric groups
//! at odd primes.
//!
//! For a partition `λ ⊢ n` and a linear character `φ` of a Sylow
//! p-subgroup `P_n` of the symmetric group, the branching coefficient
//! `Z^λ_φ` is the multiplicity of `φ` in the restriction of the
//! irreducible character `χ^λ` to `P_n`. This crate provides:
//!
//! - [`partitions`]: partition arithmetic, box sets `B_n(t)`, counting;
//! - [`lr`]: Littlewood–Richardson coefficients by filling enumeration,
//!   the `⋆` operator and mixed-tuple restriction sets;
//! - [`cyclotomic`]: exact arithmetic in `Z[ζ_p]`;
//! - [`wreath`]: the groups `P_n` as iterated wreath products, their
//!   linear characters, and cycle-type class profiles;
//! - [`characters`]: Murnaghan–Nakayama character values and the
//!   brute-force branching oracle;
//! - [`branching`]: closed-form predictors for `m(φ)`, `M(φ)`, `N(φ)`
//!   and symbolic descriptions of `Ω(φ) = {λ : Z^λ_φ > 0}`, plus ratio
//!   bounds for the intersection over all linear characters.
//!
//! Everything is exact: arbitrary-precision integers, cyclotomic
//! integers, and rationals; no floating point in any result.

pub mod branching;
pub mod characters;
pub mod cyclotomic;
pub mod error;
pub mod lr;
pub mod partitions;
pub mod wreath;

pub use error::{Error, Result};
