//! Computational toolkit for spherical nilpotent orbits in exceptional
//! symmetric pairs.

// index loops mirror the matrix formulas
#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod chevalley;
pub mod error;
pub mod expr;
pub mod fm;
pub mod linalg;
pub mod poset;
pub mod rootsys;
pub mod semigroup;
pub mod sphersys;

pub use error::{Error, Result};
