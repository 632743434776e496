//! Projected tiles, patches and their growth under affine H2.

pub mod decagon;
pub mod growth;
pub mod patch;
pub mod tile;

pub use decagon::{decagon_root, decagon_weight};
pub use patch::{patch_union, transform_patch, ConflictReport, Patch};
pub use tile::{Tile, TileKind};
