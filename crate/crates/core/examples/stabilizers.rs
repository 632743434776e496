use affine_h2::group::{extend_order20, stabilizer_of};
use affine_h2::Coord5;

fn main() {
    for center in [Coord5::k(5), Coord5::k(2) + Coord5::k(3)] {
        let stab = stabilizer_of(&center).unwrap();
        println!("fixing {center}:");
        for g in &stab {
            println!("  {g}  order {:?}", g.order(10));
        }
        let ext = extend_order20(&stab).unwrap();
        println!("  with eta-twisted elements: {} in total", ext.len());
    }
}
