//! Benchmark fixtures shared by the criterion benches.

use tdc_core::{FamilySpec, Graph};

/// Graphs the benches solve, labeled for criterion ids.
pub fn fixtures() -> Vec<(String, Graph)> {
    [
        "cycle:10",
        "cycle:12",
        "path:12",
        "wheel:9",
        "cycle-complement:10",
        "multipartite:3,3,3",
        "random-tree:11,3",
        "random:9,1,2,18",
    ]
    .iter()
    .map(|s| {
        let spec: FamilySpec = s.parse().expect("fixture spec");
        (s.to_string(), spec.generate().expect("fixture graph"))
    })
    .collect()
}
