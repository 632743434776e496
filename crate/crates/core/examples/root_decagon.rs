//! The ten-rhombus decagon from the projected root-lattice Voronoi cell.

use affine_h2::tiling::decagon::root_envelope;
use affine_h2::tiling::{decagon_root, TileKind};
use affine_h2::Coord5;

fn main() {
    let d = decagon_root().unwrap();
    println!(
        "{} tiles: {} thick, {} thin, area {}",
        d.len(),
        d.count(TileKind::ThickRhombusRoot),
        d.count(TileKind::ThinRhombusRoot),
        d.area()
    );
    for f in root_envelope(&Coord5::k(5)) {
        println!("  base {} gens k{} k{} facets {:?}", f.face.base, f.face.gens.0, f.face.gens.1, f.facets);
    }
}
