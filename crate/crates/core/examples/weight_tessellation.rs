use affine_h2::tiling::decagon_weight;
use affine_h2::tiling::growth::weight_tessellation;
use affine_h2::Coord5;

fn main() {
    let d = decagon_weight().unwrap();
    let r0 = d.extent(&Coord5::zero());
    for factor in [1.0, 2.0, 3.0] {
        let (p, _, s) = weight_tessellation(&d, factor * r0);
        println!(
            "radius {:.3}: {} tiles, {} of {} translates kept, coverage {:.3}",
            s.radius,
            p.len(),
            s.translates_added,
            s.translates_considered,
            s.coverage()
        );
    }
}
