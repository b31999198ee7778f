//! Minimal free resolution of the rational normal quartic.

use graphcurve_algebra::resolution::Resolution;
use graphcurve_algebra::{parse_generators, Ideal, Ring};

fn main() {
    let r = Ring::grevlex(5).unwrap();
    // 2x2 minors of [[x0 x1 x2 x3] [x1 x2 x3 x4]].
    let mut gens = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            gens.push(format!("x{i}*x{} - x{j}*x{}", j + 1, i + 1));
        }
    }
    let ideal = Ideal::new(&r, parse_generators(&r, &gens.join(", ")).unwrap());
    let res = Resolution::compute(&ideal).unwrap();
    let min = res.minimize();
    println!("{}", min.betti());
    println!("minimal: {}, complex: {}", min.is_minimal(), min.is_complex());
}
