//! Tangent cones of monomial space curves `(t^n1, t^n2, t^n3, t^n4)`.

pub mod cmcheck;
pub mod crosscheck;
pub mod error;
pub mod families;
pub mod gorenstein;
pub mod grobner;
pub mod hilbert;
pub mod monomial;
pub mod par;
pub mod report;
pub mod semigroup;
pub mod sweep;
pub mod toric;

pub use error::{Error, Result};
