//! Render a region and one of its tilings to SVG files, plus ASCII previews.
//!
//! Run with: cargo run --example render_artifacts

use cruciform::analysis::sample_uniform;
use cruciform::geometry::build_di_francesco;
use cruciform::render::{ascii_region, ascii_tiling, svg_region, svg_tiling};

fn main() -> std::io::Result<()> {
    let region = build_di_francesco(3).unwrap();
    let tiling = sample_uniform(&region, 1).unwrap();

    println!("{}:", region.label());
    for line in ascii_region(&region).lines() {
        println!("  {line}");
    }
    println!("\none tiling:");
    for line in ascii_tiling(&region, &tiling).lines() {
        println!("  {line}");
    }

    let dir = std::env::temp_dir();
    let region_path = dir.join("region.svg");
    let tiling_path = dir.join("tiling.svg");
    std::fs::write(&region_path, svg_region(&region))?;
    std::fs::write(&tiling_path, svg_tiling(&region, &tiling))?;
    println!("\nwrote {} and {}", region_path.display(), tiling_path.display());
    Ok(())
}
