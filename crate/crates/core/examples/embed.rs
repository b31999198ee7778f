//! Labels the edges of a graph and prints the line of each vertex.

use graphcurve::graph::random_valid;
use graphcurve::labeling::label_edges;

fn main() {
    let g = random_valid(8, 2, 7).unwrap();
    println!("edges: {:?}", g.edges());
    let l = label_edges(&g, false).unwrap();
    println!("ambient dimension: P^{}", l.ambient_dim());
    for (key, label) in l.labels() {
        println!("  {key:>8}  {label}");
    }
    println!("{}", l.format_line_ideals());
    println!("{}", l.to_json());
}
