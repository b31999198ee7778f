//! Computes the Betti table, Hilbert polynomial and regularity of a curve.

use graphcurve::graph::subdivided_k4;
use graphcurve::homology::{analyze, girth_predictions, check_predictions, Guardrails};
use graphcurve::idealgen::intersection_ideal;
use graphcurve::labeling::label_edges;
use graphcurve_algebra::Ring;

fn main() {
    let g = subdivided_k4(2).unwrap();
    let l = label_edges(&g, false).unwrap();
    let r = Ring::grevlex(l.nvars()).unwrap();
    let a = analyze(&intersection_ideal(&l, &r).unwrap(), Guardrails::default()).unwrap();
    println!("{}", a.diagram);
    println!("Hilbert polynomial: {}", a.hilbert.hilbert_polynomial_string());
    if let Some(s) = &a.summary {
        println!("reg(S/I) = {}, pd = {}, ACM: {}", s.regularity, s.projective_dimension, s.is_acm);
    }
    if let Some(p) = girth_predictions(&g) {
        for o in check_predictions(&p, &a.diagram, None) {
            println!("{} {}", if o.holds { "ok  " } else { "FAIL" }, o.claim);
        }
    }
}
