//! Exact arithmetic for sign-free number systems.
//!
//! * [`pair::UPair`]: a signed real as an unsigned 2-vector `{plus, minus}`.
//! * [`triple::Triple`]: a cyclic (3)-vector, equivalent to a complex number
//!   modulo the constant triples.
//! * [`matrix::Mat33`]: 3×3 hypercomplex numbers built from three triples,
//!   with the sixteen named [`units`] and their multiplication [`tables`].
//!
//! All entries live in ℚ(√3) ([`scalar::ExactScalar`]), so every identity is
//! checked exactly. Floating point is used only for norms and complex output.

pub mod character;
pub mod error;
pub mod matrix;
pub mod pair;
pub mod par;
pub mod roots;
pub mod sample;
pub mod scalar;
pub mod tables;
pub mod triple;
pub mod units;
pub mod verify;

pub use error::AlgebraError;
pub use matrix::{Column, Mat33, RowSelector};
pub use pair::UPair;
pub use par::Execution;
pub use scalar::ExactScalar;
pub use tables::UnitTable;
pub use triple::{ComplexValue, Triple};
pub use units::{unit_value, UnitName};
