//! Grows five-fold symmetric rhombus patches about k2+k3 and k5.

use affine_h2::recipes::{run, Figure};

fn main() {
    for fig in [Figure::Fig5, Figure::Fig6, Figure::Fig7] {
        let out = run(fig).unwrap();
        println!(
            "{fig}: {} tiles about {:?}, {} overlaps rejected, {} candidates outside",
            out.patch.len(),
            out.center.map(|c| c.to_string()),
            out.meta.conflicts,
            out.meta.skipped
        );
        for c in out.report.conflicts.iter().take(3) {
            println!("    {} overlaps {} near {}", c.offending.kind, c.existing.kind, c.witness);
        }
    }
}
