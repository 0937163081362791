//! Cohomology classes of positroid varieties and their projections to
//! `Gr(k, k + m)`, computed through affine Stanley symmetric functions, with
//! an exact/numeric geometry layer that checks the combinatorics on small
//! instances.

pub mod affperm;
pub mod cohom;
pub mod error;
pub mod geom;
pub mod symm;
mod text;

pub use error::{Error, Result};
