//! Gram matrix, Cartan matrix and fundamental weights of A4 in the k-basis.

use affine_h2::lattice::{inner4, Coord5, RootSystemData};

fn main() {
    println!("(k_i, k_j):");
    for i in 1..=5 {
        let row: Vec<String> = (1..=5)
            .map(|j| format!("{:>5}", inner4(&Coord5::k(i), &Coord5::k(j)).to_string()))
            .collect();
        println!("  {}", row.join(""));
    }
    let d = RootSystemData::new();
    println!("Cartan matrix:");
    for row in &d.cartan {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        println!("  {}", cells.join(""));
    }
    for (i, (w, a)) in d.weights.iter().zip(&d.simple_roots).enumerate() {
        println!("omega{} = {w}   alpha{} = {a}", i + 1, i + 1);
    }
    println!("alpha0 = {}", d.alpha0);
}
