//! Fixture graphs shared by the criterion benchmarks.

use treebound::{families, Multigraph};

/// Complete graphs, cycles and grid products of increasing size.
pub fn fixtures() -> Vec<(String, Multigraph)> {
    let mut out = Vec::new();
    for n in [8, 16, 32] {
        out.push((format!("complete-{n}"), families::complete(n, 1)));
        out.push((format!("cycle-{n}"), families::cycle(n)));
    }
    for side in [3, 5] {
        let grid = Multigraph::cartesian_product(&families::path(side), &families::path(side))
            .expect("paths are simple");
        out.push((format!("grid-{side}x{side}"), grid));
    }
    out
}
