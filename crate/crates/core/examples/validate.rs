//! Checks the admissibility conditions on a few small graphs.

use graphcurve::fixtures::{theta10_graph, triangle};
use graphcurve::graph::{cycle, subdivided_k4, Graph};

fn main() {
    let graphs: Vec<(&str, Graph)> = vec![
        ("theta10", theta10_graph()),
        ("C7", cycle(7).unwrap()),
        ("K4 subdivided once", subdivided_k4(1).unwrap()),
        ("triangle", triangle()),
    ];
    for (name, g) in &graphs {
        let report = g.validate();
        println!("{name}: d={} m={} genus={}", g.vertex_count(), g.edge_count(), g.genus());
        if report.is_admissible() {
            println!("  admissible");
        }
        for v in &report.violations {
            println!("  violation: {v}");
        }
    }
}
