use affine_h2::tiling::decagon::weight_hull_area;
use affine_h2::tiling::decagon_weight;

fn main() {
    let d = decagon_weight().unwrap();
    println!("{} tiles, area {} (hull {})", d.len(), d.area(), weight_hull_area());
    for t in d.tiles() {
        println!("  {:<20} {}", t.kind.to_string(), t.source);
    }
}
