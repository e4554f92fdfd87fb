//! Exact-arithmetic Lie theory for conformal embeddings of affine vertex
//! algebras.
//!
//! The crate is organised bottom-up:
//!
//! - [`liealg`]: Cartan data, invariant forms and root systems of the simple
//!   Lie algebras, all over exact rationals.
//! - [`reps`]: finite-dimensional irreducibles: Weyl dimension, Casimir
//!   eigenvalues, Dynkin indices, Freudenthal weight systems, tensor and
//!   exterior/symmetric square decompositions.
//! - [`embed`]: orthocomplement branchings for the classical dual pairs,
//!   embedding indices and the catalog of exceptional cases.
//! - [`conformal`]: central charges, candidate-level solving, the numerical
//!   conformality criterion and the classification search drivers.
//! - [`qseries`]: truncated Puiseux series and the character identities for
//!   the `sl(2) x sl(2)` decomposition of the rank-three Weyl vertex algebra.
//!
//! Nothing in here uses floating point.

pub mod conformal;
pub mod embed;
pub mod error;
pub mod liealg;
pub mod number;
pub mod parse;
pub mod qseries;
pub mod reps;

pub use error::{Error, Result};
pub use liealg::{AlgebraType, Family, SimpleAlgebra, Weight};
pub use number::Q;
