//! Multi-qubit density-matrix toolkit: Pauli-basis (Hilbert-Schmidt)
//! decompositions, a coefficient-sum separability criterion with explicit
//! separable certificates, and the Bell bases generated by a braid-group
//! representation.
//!
//! Everything is generic over the real scalar ([`Real`], implemented for
//! `f32` and `f64`). The `*64` aliases below fix the scalar to `f64`, which
//! is what the tolerances quoted in the docs assume.

pub mod braid;
pub mod error;
pub mod linalg;
pub mod pauli;
pub mod scalar;
pub mod separability;
pub mod states;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Matrix64 = linalg::Matrix<f64>;
pub type Matrix32 = linalg::Matrix<f32>;
pub type StateVector64 = linalg::StateVector<f64>;
pub type StateVector32 = linalg::StateVector<f32>;
pub type HsDecomposition64 = pauli::HsDecomposition<f64>;
pub type HsDecomposition32 = pauli::HsDecomposition<f32>;
pub type SeparableDecomposition64 = separability::SeparableDecomposition<f64>;
pub type SeparabilityVerdict64 = separability::SeparabilityVerdict<f64>;
pub type CorrelationReport64 = separability::CorrelationReport<f64>;
pub type BellBasis64 = braid::BellBasis<f64>;
