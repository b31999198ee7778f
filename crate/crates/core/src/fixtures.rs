//! Bundled example inputs.

use graphcurve_algebra::{parse_generators, Polynomial, Ring};

use crate::graph::Graph;
use crate::labeling::Labeling;

pub const THETA10_GRAPH: &str = include_str!("../data/theta10.json");
pub const THETA10_LABELING: &str = include_str!("../data/theta10_labeling.json");
pub const THETA10_QUADRICS: &str = include_str!("../data/theta10_quadrics.txt");
pub const THETA10_CUBICS: &str = include_str!("../data/theta10_cubics.txt");
pub const THETA10_CURVE_GOLDEN: &str = include_str!("../data/golden/theta10_curve.json");
pub const THETA10_SECANT_GOLDEN: &str = include_str!("../data/golden/theta10_secant.json");
pub const K4_SUBDIVIDED_GRAPH: &str = include_str!("../data/k4_subdivided.json");
pub const TRIANGLE_GRAPH: &str = include_str!("../data/triangle.json");

/// Ten vertices, genus two, two trivalent vertices joined by paths of
/// lengths 4, 4 and 3.
pub fn theta10_graph() -> Graph {
    Graph::from_json(THETA10_GRAPH).expect("bundled graph")
}

pub fn theta10_labeling() -> Labeling {
    Labeling::from_json(&theta10_graph(), THETA10_LABELING).expect("bundled labeling")
}

/// `P^8` with the default field.
pub fn theta10_ring() -> Ring {
    Ring::grevlex(9).expect("nine variables")
}

pub fn theta10_quadrics(ring: &Ring) -> Vec<Polynomial> {
    parse_generators(ring, THETA10_QUADRICS).expect("bundled quadrics")
}

pub fn theta10_cubics(ring: &Ring) -> Vec<Polynomial> {
    parse_generators(ring, THETA10_CUBICS).expect("bundled cubics")
}

pub fn k4_subdivided() -> Graph {
    Graph::from_json(K4_SUBDIVIDED_GRAPH).expect("bundled graph")
}

pub fn triangle() -> Graph {
    Graph::from_json(TRIANGLE_GRAPH).expect("bundled graph")
}
