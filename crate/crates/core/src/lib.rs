//! One-point algebraic-geometry codes on Castle curves.
//!
//! The crate builds evaluation codes `C(X, D, mQ)` on Hermitian, norm-trace and rational
//! curves, computes their dimension sets and order bounds from the Weierstrass semigroup,
//! and decodes them with Feng-Rao majority voting. The [`oracle`] module holds brute-force
//! counterparts used to check all of the above.

pub mod bounds;
pub mod codechain;
pub mod curve;
pub mod decoder;
pub mod error;
pub mod field;
pub mod linalg;
pub mod oracle;
pub mod semigroup;

pub use error::{Error, Result};
pub use field::{Fe, Field};
pub use linalg::{FieldMatrix, FieldVector};
pub use semigroup::NumericalSemigroup;
