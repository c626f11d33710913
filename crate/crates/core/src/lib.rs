//! Exact persistent cohomology of Čech and Vietoris–Rips filtrations.
//!
//! Every computation runs over an exact field (the rationals or a prime
//! field), so ranks and barcodes carry no tolerance.

pub mod cohomology;
pub mod complex;
pub mod field;
pub mod geometry;
pub mod matrix;
pub mod persistence;
pub mod reduction;

pub use field::{Field, FieldError, Scalar};
pub use geometry::{ComplexKind, PointCloud, SqRadius};
pub use matrix::{FieldMatrix, LinalgError};
