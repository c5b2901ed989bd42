//! Exact domino occupation probabilities on an Aztec diamond.
//!
//! For every admissible domino site the probability that a uniformly random
//! tiling covers it is computed as an exact rational. The probabilities sum
//! to half the number of cells.
//!
//! Run with: cargo run --example occupation_probabilities

use num_rational::BigRational;
use num_traits::ToPrimitive;

use cruciform::analysis::{heatmap_csv, occupation_heatmap};
use cruciform::geometry::build_aztec_diamond;

fn main() {
    let region = build_aztec_diamond(3).unwrap();
    let heatmap = occupation_heatmap(&region);
    println!("{} — {} domino sites", region.label(), heatmap.len());
    for (site, p) in heatmap.iter().take(8) {
        println!(
            "  ({},{})-({},{}) {}: p = {} ~ {:.4}",
            site.a.col,
            site.a.row,
            site.b.col,
            site.b.row,
            if site.is_horizontal() { "horizontal" } else { "vertical" },
            p,
            p.to_f64().unwrap()
        );
    }
    println!("  ... ({} more sites)", heatmap.len() - 8);
    let sum: BigRational = heatmap.iter().map(|(_, p)| p.clone()).sum();
    println!("sum of probabilities: {} (= cells/2 = {})", sum, region.len() / 2);
    println!("\nCSV export (first lines):");
    for line in heatmap_csv(&heatmap).lines().take(4) {
        println!("  {line}");
    }
}
