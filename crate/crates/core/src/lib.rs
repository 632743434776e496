//! Affine A4 and its affine H2 subgroup acting on the Coxeter plane, the
//! Voronoi cells of the A4 root and weight lattices, and the five-fold
//! tilings obtained by projecting their 2-faces.

pub mod document;
pub mod error;
pub mod golden;
pub mod group;
pub mod lattice;
pub mod matrix;
pub mod recipes;
pub mod render;
pub mod verify;
pub mod tiling;
pub mod voronoi;

pub use error::{Error, Result};
pub use golden::{GoldenNumber, Rational};
pub use group::{AffineElement, Perm5};
pub use lattice::{Coord5, Space};
