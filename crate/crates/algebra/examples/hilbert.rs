//! Hilbert function and polynomial of a union of two skew lines in P^3.

use graphcurve_algebra::{parse_generators, Ideal, Ring};

fn main() {
    let r = Ring::grevlex(4).unwrap();
    let a = Ideal::new(&r, parse_generators(&r, "x0, x1").unwrap());
    let b = Ideal::new(&r, parse_generators(&r, "x2, x3").unwrap());
    let hs = a.intersection(&b).unwrap().hilbert_series().unwrap();
    let values: Vec<i64> = (0..6).map(|d| hs.hilbert_function(d)).collect();
    println!("H(d) for d < 6: {values:?}");
    println!("P(t) = {}", hs.hilbert_polynomial_string());
    println!("degree {}, dimension {}", hs.degree(), hs.projective_dim());
}
