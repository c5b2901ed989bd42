//! Run the formula-verification suites and print the adjudication summary.
//!
//! Each suite compares exact engine counts against a closed-form value and
//! reaches a verdict: confirmed, or refuted-as-printed with the discrepancy
//! set isolated and a fitted correction documented in the notes.
//!
//! Run with: cargo run --release --example verification_ledger

use cruciform::verifier::verify_all;

fn main() {
    let report = verify_all();
    println!("{}", report.summary());
    println!("exit code semantics: {}", report.exit_code());
    println!("  0 = every adjudicated formula confirmed");
    println!("  2 = at least one formula refuted as printed (counts remain exact)");
}
