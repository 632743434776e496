use affine_h2::tiling::growth::five_fold_centers;

fn main() {
    let centers = five_fold_centers(1);
    println!("{} centers with |n_i| <= 1", centers.len());
    for (n, p) in centers.iter().take(12) {
        println!("  n = {n:?} -> {p}");
    }
}
