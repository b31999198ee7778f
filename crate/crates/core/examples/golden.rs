//! Compares computed output with a stored golden record and reports the
//! first differing cells.

use graphcurve::fixtures::{theta10_labeling, theta10_ring, THETA10_CURVE_GOLDEN};
use graphcurve::golden::{compare_golden, Golden};
use graphcurve::idealgen::certify;
use graphcurve_algebra::resolution::betti_diagram;

fn main() {
    let r = theta10_ring();
    let c = certify(&theta10_labeling(), &r).unwrap();
    let gens: Vec<_> = c.generators.iter().map(|q| q.to_poly(&r)).collect();
    let actual = Golden::default()
        .with_betti(&betti_diagram(&c.oracle).unwrap())
        .with_certificate(&c.certificate)
        .with_generators(&r, &gens);
    let expected = Golden::from_json(THETA10_CURVE_GOLDEN).unwrap();
    println!("matches: {}", compare_golden(&actual, &expected, &r).unwrap().matches());

    let mut tampered = expected.clone();
    if let Some(b) = tampered.betti.as_mut() {
        b[3].2 += 1;
    }
    for m in compare_golden(&actual, &tampered, &r).unwrap().mismatches {
        println!("{m}");
    }
}
