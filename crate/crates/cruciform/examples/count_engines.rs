//! Count perfect matchings of the same regions with every engine and show
//! that they agree exactly.
//!
//! Run with: cargo run --example count_engines

use cruciform::dualgraph::dual_graph;
use cruciform::engines::{count, count_brute, count_kasteleyn, count_transfer, Engine};
use cruciform::geometry::{build_aztec_diamond, build_di_francesco, build_rectangle};

fn main() {
    let regions = vec![
        build_rectangle(4, 4).unwrap(),
        build_rectangle(8, 8).unwrap(),
        build_aztec_diamond(4).unwrap(),
        build_di_francesco(3).unwrap(),
    ];
    for region in &regions {
        println!("{} ({} cells)", region.label(), region.len());
        let auto = count(region, Engine::Auto).unwrap();
        println!("  auto:      {auto}");
        if region.len() <= 40 {
            println!("  brute:     {}", count_brute(&dual_graph(region)).unwrap());
        }
        match count_transfer(region) {
            Ok(v) => println!("  transfer:  {v}"),
            Err(e) => println!("  transfer:  skipped ({e})"),
        }
        match count_kasteleyn(region) {
            Ok(v) => println!("  kasteleyn: {v}"),
            Err(e) => println!("  kasteleyn: skipped ({e})"),
        }
        println!();
    }
    // a large case only the transfer matrix handles comfortably
    let big = build_aztec_diamond(24).unwrap();
    println!("{} ({} cells)", big.label(), big.len());
    println!("  transfer:  {}", count_transfer(&big).unwrap());
}
