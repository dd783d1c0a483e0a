//! Exact computations with group gradings on matrix rings `M_n(R)`.
//!
//! The crate builds good, very good and product gradings, computes the
//! idempotents `ε_g` of very good gradings, and decides with checkable
//! certificates whether a grading is locally strong, strong,
//! epsilon-strong or an epsilon-crossed product.

pub mod coeff;
pub mod decide;
pub mod error;
pub mod grading;
pub mod groups;
pub mod matrixring;

pub use error::{Error, Result};
