//! Exact enumeration of domino tilings for a family of lattice regions that
//! generalize Aztec diamonds: cruciform regions with four (possibly negative)
//! piers, elbow regions, T-regions and the hybrid square/half-diamond regions.
//!
//! The crate has four layers:
//!
//! * [`geometry`] — canonical constructors for every region family, lattice
//!   isometries, balance accounting and a lossless JSON region format;
//! * [`dualgraph`] / [`engines`] — bipartite dual graphs and three independent
//!   exact counting engines (branching brute force, broken-profile transfer
//!   matrix, Kasteleyn determinant over big integers);
//! * [`closed_forms`] — exact evaluation of the hyperfactorial product
//!   formulas, carried as `2^e · p/q` with rational exponents ([`ExactScaled`]);
//! * [`verifier`] — systematic sweeps comparing engine counts against the
//!   closed forms, with an adjudication ledger for formulas that disagree
//!   with the counts as printed.
//!
//! [`analysis`] adds exact domino occupation probabilities and an exactly
//! uniform seeded sampler; [`render`] draws regions and tilings as SVG or
//! ASCII. All counting is integer-exact; no floating point is involved
//! anywhere outside the diagnostic interval evaluation in
//! [`closed_forms::half_square_value`] (which itself uses rational interval
//! arithmetic, not floats).
//!
//! See the `examples/` directory for one runnable example per capability; the
//! thin `cruciform` binary exposes the same operations as subcommands.

pub mod analysis;
pub mod cli;
pub mod closed_forms;
pub mod dualgraph;
pub mod engines;
mod exact;
pub mod geometry;
mod interval;
pub mod render;
pub mod verifier;

pub use exact::ExactScaled;
pub use interval::Interval;

/// Crate version string embedded in artifact provenance headers.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
