//! The secant line variety of a graph curve as a union of spans.

use graphcurve::fixtures::{theta10_labeling, theta10_ring};
use graphcurve::homology::{analyze, Guardrails};
use graphcurve::secant::{secant_degree_prediction, secant_ideal};

fn main() {
    let l = theta10_labeling();
    let r = theta10_ring();
    let s = secant_ideal(&l, &r, 1).unwrap();
    println!("{}", s.status.describe());
    println!("{} candidate spans, {} components", s.candidates, s.components.len());
    for c in s.component_report().iter().take(5) {
        println!("  {:?}  P^{}", c.vertices, c.span_dim);
    }
    let a = analyze(&s.ideal, Guardrails::default()).unwrap();
    println!("{}", a.diagram);
    let p = secant_degree_prediction(l.graph().vertex_count(), l.graph().genus());
    println!("degree {} (formula {})", a.hilbert.degree(), p.formula);
    for g in s.ideal.minimal_generators().unwrap().iter().take(3) {
        println!("  {}", graphcurve_algebra::format_polynomial(&r, g));
    }

    // Secant planes of a long cycle.
    let c8 = graphcurve::graph::cycle(8).unwrap();
    let l8 = graphcurve::labeling::label_edges(&c8, false).unwrap();
    let r8 = graphcurve_algebra::Ring::grevlex(l8.nvars()).unwrap();
    for k in 2..=3 {
        println!("C8, k={k}: {}", secant_ideal(&l8, &r8, k).unwrap().status.describe());
    }
}
