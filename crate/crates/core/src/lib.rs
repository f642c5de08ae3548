//! Exact-arithmetic computation with compact simple Lie groups: root
//! systems, Chevalley bases and compact real forms, involutions and
//! symmetric pairs, maximal subalgebras of minimal codimension, and
//! Lie-triple-system certificates for totally geodesic submanifolds.
//!
//! Everything is computed over ℚ; there is no floating point in the crate.
//! Constructions certify their own algebraic invariants (Jacobi identity,
//! bracket preservation, Cartan relations) before returning.

#![forbid(unsafe_code)]

pub mod chevalley;
pub mod error;
pub mod expr;
pub mod involution;
pub mod linalg;
pub mod lts;
pub mod manifest;
pub mod registry;
pub mod rootsystem;
pub mod subalgebra;
pub mod tables;

pub use error::{Error, Result};
