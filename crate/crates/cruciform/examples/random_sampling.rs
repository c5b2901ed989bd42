//! Draw uniformly random tilings with a seeded generator and tally the
//! outcome frequencies.
//!
//! Run with: cargo run --example random_sampling

use std::collections::BTreeMap;

use cruciform::analysis::{sample_many, sample_uniform};
use cruciform::geometry::build_aztec_diamond;
use cruciform::render::ascii_tiling;

fn main() {
    let region = build_aztec_diamond(2).unwrap();

    // one reproducible sample, rendered
    let tiling = sample_uniform(&region, 42).unwrap();
    println!("seed 42 sample of {}:", region.label());
    for line in ascii_tiling(&region, &tiling).lines() {
        println!("  {line}");
    }

    // AD_2 has exactly 8 tilings; 8000 draws should be near-uniform
    let samples = sample_many(&region, 7, 8000);
    let mut freq: BTreeMap<_, usize> = BTreeMap::new();
    for t in &samples {
        *freq.entry(t.dominoes.clone()).or_insert(0) += 1;
    }
    println!("\n{} distinct tilings over {} draws:", freq.len(), samples.len());
    for (i, count) in freq.values().enumerate() {
        println!("  tiling {i}: {count} (expected 1000)");
    }
}
