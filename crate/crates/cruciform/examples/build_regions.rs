//! Construct each region family and print its shape and basic statistics.
//!
//! Run with: cargo run --example build_regions

use cruciform::geometry::{
    build_aztec_diamond, build_cruciform, build_di_francesco, build_elbow, build_half_square,
    build_t_region, CruciformParams,
};
use cruciform::render::ascii_region;

fn main() {
    let regions = vec![
        build_aztec_diamond(3).unwrap(),
        build_cruciform(CruciformParams::new(2, 2, 1, 1, 1, 0).unwrap()).unwrap(),
        build_cruciform(CruciformParams::new(2, 2, 1, -1, 2, 1).unwrap()).unwrap(),
        build_elbow(3, 1, 2).unwrap(),
        build_t_region(2, 2, 1, 1, 1).unwrap(),
        build_half_square(4).unwrap(),
        build_di_francesco(3).unwrap(),
    ];
    for region in &regions {
        let stats = region.stats();
        println!("{}", region.label());
        println!(
            "  cells: {} ({} black, {} white), balanced: {}, simply connected: {}",
            stats.cell_count,
            stats.black_count,
            stats.white_count,
            region.is_balanced(),
            region.is_simply_connected()
        );
        for line in ascii_region(region).lines() {
            println!("  {line}");
        }
        println!();
    }
}
