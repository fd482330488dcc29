//! Prints double-circuit census totals for the named graphs.
//!
//! `cargo run --release -p bicircular --example census`

use std::time::Instant;

use bicircular::double_circuit::{circuits, cycles, enumerate_structural};
use bicircular::generators::{dodecahedron, petersen};
use bicircular::BicircularContext;

fn main() {
    for (name, g) in [("petersen", petersen()), ("dodecahedron", dodecahedron())] {
        let start = Instant::now();
        let cycle_count = cycles(&g).len();
        let circuit_count = circuits(&g).len();
        let census = enumerate_structural(&BicircularContext::new(g), name).unwrap();
        println!(
            "{name}: {cycle_count} cycles, {circuit_count} circuits, {} double circuits \
             (histogram {:?}, positive {}) in {:.2?}",
            census.total(),
            census.degree_histogram,
            census.positive_count,
            start.elapsed()
        );
    }
}
