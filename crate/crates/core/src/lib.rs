//! Computable comma categories over finite-dimensional quiver algebras.

pub mod algebra;
pub mod approx;
pub mod comma;
pub mod decompose;
pub mod error;
pub mod field;
pub mod gorenstein;
pub mod homology;
pub mod matrix;
pub mod module;
pub mod quiver;
pub mod workspace;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use matrix::Matrix;
