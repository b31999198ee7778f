//! Secant varieties of the line arrangement as unions of spans of lines.

use graphcurve_algebra::{Ideal, LinearIdeal, Ring};
use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::labeling::Labeling;

/// The projective span of the lines of a set of vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanSubspace {
    pub vertices: Vec<usize>,
    pub ideal: LinearIdeal,
}

impl SpanSubspace {
    pub fn span_dim(&self) -> i64 {
        self.ideal.projective_dim()
    }
}

/// Ideal of the span of the given subspaces: the forms vanishing on all of
/// them.
pub fn span_ideal(ring: &Ring, lines: &[LinearIdeal]) -> LinearIdeal {
    assert!(!lines.is_empty(), "span of nothing");
    let pts: Vec<Vec<u32>> = lines.iter().flat_map(|l| l.points(ring)).collect();
    LinearIdeal::of_span(ring, &pts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SecantStatus {
    Computed,
    /// `2k + 1 >= d - g`; the ideal is zero.
    FillsAmbientSpace,
}

impl SecantStatus {
    pub fn describe(&self) -> &'static str {
        match self {
            SecantStatus::Computed => "computed",
            SecantStatus::FillsAmbientSpace => "fills ambient space",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SecantSpec {
    pub k: usize,
    pub status: SecantStatus,
    /// Number of `(k+1)`-subsets considered.
    pub candidates: usize,
    pub components: Vec<SpanSubspace>,
    pub ideal: Ideal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentEntry {
    pub vertices: Vec<usize>,
    pub span_dim: i64,
}

impl SecantSpec {
    pub fn component_report(&self) -> Vec<ComponentEntry> {
        self.components
            .iter()
            .map(|c| ComponentEntry { vertices: c.vertices.clone(), span_dim: c.span_dim() })
            .collect()
    }
}

/// Spans of all `(k+1)`-subsets of vertices, with duplicates and spans
/// inside other spans removed.
pub fn secant_components(l: &Labeling, ring: &Ring, k: usize) -> (usize, Vec<SpanSubspace>) {
    let lines: Vec<LinearIdeal> = l.line_ideals().iter().map(|li| li.linear(ring)).collect();
    let all: Vec<SpanSubspace> = (0..lines.len())
        .combinations(k + 1)
        .map(|vs| {
            let members: Vec<LinearIdeal> = vs.iter().map(|&v| lines[v].clone()).collect();
            SpanSubspace { ideal: span_ideal(ring, &members), vertices: vs }
        })
        .collect();
    (all.len(), prune(ring, all))
}

fn prune(ring: &Ring, spans: Vec<SpanSubspace>) -> Vec<SpanSubspace> {
    let mut unique: Vec<SpanSubspace> = Vec::new();
    for s in spans {
        if !unique.iter().any(|u| u.ideal == s.ideal) {
            unique.push(s);
        }
    }
    // V(a) ⊆ V(b) iff I(b) ⊆ I(a); larger spans have fewer forms.
    let inside = |a: &SpanSubspace, b: &SpanSubspace| a.ideal.rank() > b.ideal.rank() && b.ideal.is_contained_in(ring, &a.ideal);
    let keep: Vec<bool> = unique.iter().map(|a| !unique.iter().any(|b| inside(a, b))).collect();
    unique.into_iter().zip(keep).filter(|(_, k)| *k).map(|(s, _)| s).collect()
}

/// `Σ_k`: the intersection of the retained span ideals, in subset order.
pub fn secant_ideal(l: &Labeling, ring: &Ring, k: usize) -> Result<SecantSpec, Error> {
    if k == 0 {
        return Err(Error::Invalid("secant level k must be at least 1".into()));
    }
    if 2 * k + 1 >= l.ambient_dim() {
        return Ok(SecantSpec {
            k,
            status: SecantStatus::FillsAmbientSpace,
            candidates: 0,
            components: Vec::new(),
            ideal: Ideal::zero(ring),
        });
    }
    let (candidates, components) = secant_components(l, ring, k);
    let mut ideals = components.iter().map(|c| Ideal::new(ring, c.ideal.generators(ring)));
    let mut acc = ideals.next().expect("at least one component");
    for next in ideals {
        acc = acc.intersection(&next)?;
    }
    Ok(SecantSpec { k, status: SecantStatus::Computed, candidates, components, ideal: acc })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecantDegree {
    /// `C(d-1, 2) - g`.
    pub formula: i64,
    /// `C(d, 2) - m`, the number of non-adjacent vertex pairs.
    pub nonadjacent_pairs: i64,
}

pub fn secant_degree_prediction(d: usize, g: usize) -> SecantDegree {
    let (d, g) = (d as i64, g as i64);
    let edges = d + g - 1;
    let formula = (d - 1) * (d - 2) / 2 - g;
    let nonadjacent_pairs = d * (d - 1) / 2 - edges;
    assert_eq!(formula, nonadjacent_pairs);
    SecantDegree { formula, nonadjacent_pairs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path, Graph};
    use crate::labeling::label_edges;
    use graphcurve_algebra::parse_generators;

    fn theta10() -> Labeling {
        let g = Graph::from_json(include_str!("../data/theta10.json")).unwrap();
        Labeling::from_json(&g, include_str!("../data/theta10_labeling.json")).unwrap()
    }

    #[test]
    fn spans_of_pairs() {
        let l = theta10();
        let r = Ring::grevlex(9).unwrap();
        let lines: Vec<LinearIdeal> = l.line_ideals().iter().map(|x| x.linear(&r)).collect();
        assert_eq!(span_ideal(&r, &lines[..1]), lines[0]);
        assert_eq!(span_ideal(&r, &[lines[0].clone(), lines[1].clone()]).projective_dim(), 2);
        assert_eq!(span_ideal(&r, &[lines[0].clone(), lines[5].clone()]).projective_dim(), 3);
    }

    #[test]
    fn example_secant() {
        let l = theta10();
        let r = Ring::grevlex(9).unwrap();
        let s = secant_ideal(&l, &r, 1).unwrap();
        assert_eq!(s.status, SecantStatus::Computed);
        assert_eq!(s.candidates, 45);
        assert_eq!(s.components.len(), 34);
        assert!(s.components.iter().all(|c| c.span_dim() == 3));
        let listed = Ideal::new(&r, parse_generators(&r, include_str!("../data/theta10_cubics.txt")).unwrap());
        assert_eq!(s.ideal, listed);
        let hs = s.ideal.hilbert_series().unwrap();
        assert_eq!((hs.degree(), hs.projective_dim()), (34, 3));
    }

    #[test]
    fn degree_formula() {
        assert_eq!(secant_degree_prediction(10, 2).formula, 34);
        assert_eq!(secant_degree_prediction(10, 3).formula, 33);
        assert_eq!(secant_degree_prediction(4, 0).formula, 3);
    }

    #[test]
    fn path_of_four() {
        let l = label_edges(&path(4).unwrap(), false).unwrap();
        let r = Ring::grevlex(l.nvars()).unwrap();
        assert_eq!(l.ambient_dim(), 4);
        let s = secant_ideal(&l, &r, 1).unwrap();
        assert_eq!(s.ideal.hilbert_series().unwrap().degree(), 3);
    }

    #[test]
    fn pruning_keeps_the_union() {
        let l = label_edges(&cycle(6).unwrap(), false).unwrap();
        let r = Ring::grevlex(l.nvars()).unwrap();
        let lines: Vec<LinearIdeal> = l.line_ideals().iter().map(|x| x.linear(&r)).collect();
        let all: Vec<Ideal> = (0..6)
            .combinations(2)
            .map(|p| Ideal::new(&r, span_ideal(&r, &[lines[p[0]].clone(), lines[p[1]].clone()]).generators(&r)))
            .collect();
        let full = all.iter().skip(1).fold(all[0].clone(), |a, b| a.intersection(b).unwrap());
        let s = secant_ideal(&l, &r, 1).unwrap();
        assert!(s.components.len() < all.len());
        assert_eq!(s.ideal, full);
        assert_eq!(s.ideal.hilbert_series().unwrap().degree(), secant_degree_prediction(6, 1).formula);
    }

    #[test]
    fn eight_cycle_second_secant() {
        let l = label_edges(&cycle(8).unwrap(), false).unwrap();
        let r = Ring::grevlex(l.nvars()).unwrap();
        let s = secant_ideal(&l, &r, 2).unwrap();
        assert_eq!(s.status, SecantStatus::Computed);
        assert!(s.components.iter().all(|c| c.span_dim() <= 5));
        assert_eq!(s.ideal.hilbert_series().unwrap().projective_dim(), 5);
        assert_eq!(secant_ideal(&l, &r, 3).unwrap().status, SecantStatus::FillsAmbientSpace);
        assert!(secant_ideal(&l, &r, 0).is_err());
    }
}
