//! Desk-scale tools for the commutative algebra of group cohomology rings:
//! p-ranks and defects of finite p-groups, minimal resolutions over
//! modular group algebras, presented graded-commutative algebras, and
//! regularity / depth computations from filter-regular parameter systems.

pub mod algebra;
pub mod error;
pub mod group;
pub mod linalg;
pub mod regularity;
pub mod resolution;

pub use error::{Error, Result};
