//! Builds the quadric generators from the labels and certifies them
//! against the intersection of the line ideals.

use graphcurve::fixtures::{theta10_labeling, theta10_ring, triangle};
use graphcurve::idealgen::certify;
use graphcurve::labeling::label_edges;
use graphcurve_algebra::Ring;

fn main() {
    let l = theta10_labeling();
    let r = theta10_ring();
    let c = certify(&l, &r).unwrap();
    println!("{} quadrics:", c.generators.len());
    for q in &c.generators {
        println!("  {q}  [{:?}]", q.clause);
    }
    println!("{}", serde_json::to_string_pretty(&c.certificate).unwrap());

    // A triangle needs the override; its line ideals are not cut out by quadrics.
    let t = label_edges(&triangle(), true).unwrap();
    let rt = Ring::grevlex(t.nvars()).unwrap();
    let c = certify(&t, &rt).unwrap();
    println!("triangle passes: {}", c.certificate.passed());
}
