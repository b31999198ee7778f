//! Surveys a handful of random admissible graphs in parallel.

use graphcurve::graph::random_valid;
use graphcurve::survey::{survey_all, SurveyOptions};

fn main() {
    let graphs: Vec<_> = (0..6).map(|s| random_valid(8, 1 + (s as usize) % 2, s).unwrap()).collect();
    let reports = survey_all(&graphs, &SurveyOptions::default(), 4).unwrap();
    for r in reports {
        let r = r.unwrap();
        let held = r.observations.iter().filter(|o| o.holds).count();
        println!(
            "{}  genus {}  girth {:?}  curve deg {}  secant deg {:?}  predictions {held}/{}",
            &r.hash[..12],
            r.invariants.genus,
            r.invariants.girth,
            r.curve.degree,
            r.secant.diagram.as_ref().map(|d| d.degree),
            r.observations.len(),
        );
    }
}
