//! Writes SVG and JSON for every figure recipe into a directory.

use std::path::PathBuf;

use affine_h2::document::{export_json, to_string, MetaDocument};
use affine_h2::recipes::{run, Figure};
use affine_h2::render::{render_svg, StyleConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir)?;
    let style = StyleConfig::with_scale(60.0);
    for fig in Figure::ALL {
        let out = run(fig)?;
        std::fs::write(dir.join(format!("{fig}.svg")), render_svg(&out.patch, &style)?)?;
        let doc = export_json(&out.patch, MetaDocument::from(&out.meta));
        std::fs::write(dir.join(format!("{fig}.json")), to_string(&doc))?;
        println!("{fig}: {} tiles", out.patch.len());
    }
    Ok(())
}
