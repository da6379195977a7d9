//! Convex body semigroups `(⋃ iF) ∩ ℕ²` for circles, convex polygons and
//! segments on rays: finite generation, minimal generators, membership.

pub mod body;
pub mod bodyfile;
pub mod circle;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod lattice;
pub mod oracle;
pub mod polygon;
pub mod ray;
pub mod semigroup;
pub mod surgery;
pub mod svg;

pub use error::{Error, Result};
