//! Affine reflections, the H2 generators and their relations.

use affine_h2::group::{coxeter, h2_generators, reflection, reflection_decompositions};
use affine_h2::Coord5;

fn main() {
    let r = reflection(&Coord5::root(1, 3), 2).unwrap();
    let p = Coord5::from_ints([3, 0, 1, 0, 0]);
    println!("r_(k1-k3, 2) = {r}");
    println!("  {p} -> {}", r.apply(&p));

    let (r1, r2) = h2_generators(-1, 1, -1, 1);
    println!("R1 = {r1}");
    println!("R2 = {r2}");
    let rot = coxeter(-1, 1, -1, 1);
    println!("R1R2 = {rot}, order {:?}", rot.order(10));

    for line in reflection_decompositions(-1, 1, -1, 1) {
        println!(
            "{:<11} = r(k{}-k{}, {:?}) r(k{}-k{}, {:?})",
            line.word,
            line.alpha.0,
            line.alpha.1,
            line.computed.map(|c| c.0),
            line.beta.0,
            line.beta.1,
            line.computed.map(|c| c.1)
        );
    }
}
