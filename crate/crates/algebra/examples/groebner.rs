//! Reduced Groebner basis of the twisted cubic.

use graphcurve_algebra::{format_polynomial, parse_generators, Ideal, Ring};

fn main() {
    let r = Ring::grevlex(4).unwrap();
    let gens = parse_generators(&r, "x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2").unwrap();
    let i = Ideal::new(&r, gens);
    for g in i.gb().polys() {
        println!("{}", format_polynomial(&r, g));
    }
    let f = parse_generators(&r, "x0^2*x3 - x1^3").unwrap().remove(0);
    println!("x0^2*x3 - x1^3 in ideal: {}", i.is_member(&f));
}
