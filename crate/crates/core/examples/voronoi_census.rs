use affine_h2::voronoi::{cell_summary, rhombohedron, root_cell_summary};

fn main() {
    for s in [root_cell_summary(), cell_summary()] {
        println!(
            "{:?}: N0={} N1={} N2={} N3={} (euler {})",
            s.lattice,
            s.n0,
            s.n1,
            s.n2,
            s.n3,
            s.euler()
        );
        for (name, n) in s.faces_by_kind.iter().chain(&s.facets_by_kind) {
            println!("  {name}: {n}");
        }
    }
    let r = rhombohedron(1, 5).unwrap();
    println!("facet (1,5) on (v, k1-k5) = 1:");
    for v in &r.vertices {
        println!("  {v}");
    }
}
