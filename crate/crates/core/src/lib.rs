//! Cooperative half-guard sets for simple polygons.
//!
//! Builds sets of `floor(n/2) - 1` half-guards (180 degree field of view)
//! that monitor a simple `n`-gon and see one another in a connected chain,
//! and `n/2 - 2` for orthogonal polygons. Everything is computed in exact
//! rational arithmetic and can be checked independently with [`verify`].

pub mod fixtures;
pub mod geom;
pub mod polygen;
pub mod decomp;
pub mod tri;
pub mod guard;
pub mod verify;
pub mod smallcase;
pub mod place;
