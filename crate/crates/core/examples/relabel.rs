//! Applies the relabelling involution at each trivalent vertex and shows
//! that the curve ideal keeps its Betti table.

use graphcurve::fixtures::{theta10_labeling, theta10_ring};
use graphcurve::idealgen::intersection_ideal;
use graphcurve_algebra::resolution::betti_diagram;

fn main() {
    let l = theta10_labeling();
    let r = theta10_ring();
    let base = betti_diagram(&intersection_ideal(&l, &r).unwrap()).unwrap();
    println!("{base}");
    for v in l.graph().trivalent() {
        let (other, (j, k)) = l.relabel_involution(v).unwrap();
        let b = betti_diagram(&intersection_ideal(&other, &r).unwrap()).unwrap();
        println!("vertex {v}: x{k} -> x{j} - x{k}, same table: {}", b == base);
        println!("{}", other.line_ideal(v));
    }
}
