//! Betti diagrams of curve and secant ideals, and the properties predicted
//! from the girth of the graph.

use graphcurve_algebra::resolution::ResolutionLimits;
use graphcurve_algebra::{BettiDiagram, HilbertSeries, HomologicalSummary, Ideal, Resolution};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;

/// Resource caps for a resolution. `None` means unbounded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Guardrails {
    /// Highest homological degree computed.
    pub max_degree: Option<usize>,
    /// Total number of free generators over all levels.
    pub max_basis: Option<usize>,
}

impl Guardrails {
    /// Reads `GRAPHCURVE_MAX_DEGREE` and `GRAPHCURVE_MAX_BASIS`.
    pub fn from_env() -> Result<Self, Error> {
        let read = |name: &str| -> Result<Option<usize>, Error> {
            match std::env::var(name) {
                Ok(v) => v.trim().parse().map(Some).map_err(|_| Error::Io(format!("{name} must be a nonnegative integer, got {v:?}"))),
                Err(_) => Ok(None),
            }
        };
        Ok(Guardrails { max_degree: read("GRAPHCURVE_MAX_DEGREE")?, max_basis: read("GRAPHCURVE_MAX_BASIS")? })
    }
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub diagram: BettiDiagram,
    pub hilbert: HilbertSeries,
    /// `None` when the resolution stopped at a guardrail.
    pub summary: Option<HomologicalSummary>,
    /// Alternating sum of the diagram equals the Hilbert numerator.
    pub euler_ok: bool,
}

impl Analysis {
    pub fn is_complete(&self) -> bool {
        self.diagram.is_complete()
    }

    /// `reg(I) = reg(S/I) + 1`.
    pub fn ideal_regularity(&self) -> Option<i64> {
        self.summary.as_ref().map(|s| s.regularity + 1)
    }
}

/// Resolves `S/I` and reads off the diagram and summary.
pub fn analyze(ideal: &Ideal, limits: Guardrails) -> Result<Analysis, Error> {
    let hilbert = ideal.hilbert_series()?;
    let res = Resolution::compute_with(
        ideal,
        ResolutionLimits {
            max_level: limits.max_degree.map(|d| d + 1),
            max_elements: limits.max_basis,
            cancel: None,
        },
    )?;
    let diagram = res.betti();
    let euler_ok = !diagram.is_complete() || diagram.euler_matches(&hilbert.numerator);
    let summary = diagram.summarize(ideal.ring().nvars(), hilbert.projective_dim());
    Ok(Analysis { diagram, hilbert, summary, euler_ok })
}

/// What the girth of `G` says about the diagrams.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predictions {
    pub girth: usize,
    /// `N_{2,m-2}` fails for the curve.
    pub curve_fails_n2: usize,
    /// `N_{3,m-4}` fails for the secant variety; only for `m >= 5`.
    pub secant_fails_n3: Option<usize>,
    pub cycle_count: Option<CycleCountPrediction>,
}

/// When `d = 2g + 1 + p` and `m - 2 <= p`: `β_{m-2,m}` counts the cycles of
/// length `m`, and `N_{2,p}` fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCountPrediction {
    pub p: usize,
    pub i: usize,
    pub j: u32,
    pub cycles: usize,
}

/// `None` for forests.
pub fn girth_predictions(g: &Graph) -> Option<Predictions> {
    let m = g.girth()?;
    let genus = g.genus();
    let d = g.vertex_count();
    let cycle_count = (d > 2 * genus)
        .then(|| d - 2 * genus - 1)
        .filter(|&p| m - 2 <= p)
        .map(|p| CycleCountPrediction { p, i: m - 2, j: m as u32, cycles: g.count_cycles(m) });
    Some(Predictions {
        girth: m,
        curve_fails_n2: m - 2,
        secant_fails_n3: (m >= 5).then(|| m - 4),
        cycle_count,
    })
}

/// Observed outcome of one prediction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Observation {
    pub claim: String,
    pub holds: bool,
}

/// Compares the predictions with computed diagrams. Secant claims are
/// skipped when the secant diagram is missing or incomplete.
pub fn check_predictions(pred: &Predictions, curve: &BettiDiagram, secant: Option<&BettiDiagram>) -> Vec<Observation> {
    let mut out = Vec::new();
    if curve.is_complete() {
        let p = pred.curve_fails_n2;
        out.push(Observation { claim: format!("curve fails N_{{2,{p}}}"), holds: !curve.check_nkp(2, p) });
        if let Some(c) = &pred.cycle_count {
            let beta = curve.get(c.i, c.j);
            out.push(Observation {
                claim: format!("beta_{{{},{}}} = {} equals {} cycles", c.i, c.j, beta, c.cycles),
                holds: beta == c.cycles as u64,
            });
            out.push(Observation { claim: format!("curve fails N_{{2,{}}}", c.p), holds: !curve.check_nkp(2, c.p) });
        }
    }
    if let (Some(p), Some(s)) = (pred.secant_fails_n3, secant) {
        if s.is_complete() {
            out.push(Observation { claim: format!("secant fails N_{{3,{p}}}"), holds: !s.check_nkp(3, p) });
        }
    }
    out
}

/// The regularity of a secant ideal under the three common conventions,
/// each compared with `2k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityReport {
    pub k: usize,
    pub predicted: i64,
    /// `reg(S/I)`.
    pub coordinate_ring: i64,
    /// `reg(I)`.
    pub ideal: i64,
    /// Regularity of the ideal sheaf, `reg(I)` for a saturated ideal.
    pub variety: i64,
    pub acm: bool,
}

impl RegularityReport {
    pub fn new(k: usize, summary: &HomologicalSummary) -> Self {
        let r = summary.regularity;
        RegularityReport {
            k,
            predicted: 2 * k as i64 + 1,
            coordinate_ring: r,
            ideal: r + 1,
            variety: r + 1,
            acm: summary.is_acm,
        }
    }

    pub fn matches(&self) -> [bool; 3] {
        [self.coordinate_ring, self.ideal, self.variety].map(|r| r == self.predicted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};
    use crate::idealgen::intersection_ideal;
    use crate::labeling::{label_edges, Labeling};
    use graphcurve_algebra::{parse_generators, Ring};

    fn theta10() -> (Graph, Labeling) {
        let g = Graph::from_json(include_str!("../data/theta10.json")).unwrap();
        let l = Labeling::from_json(&g, include_str!("../data/theta10_labeling.json")).unwrap();
        (g, l)
    }

    #[test]
    fn example_curve() {
        let (g, l) = theta10();
        let r = Ring::grevlex(l.nvars()).unwrap();
        let a = analyze(&intersection_ideal(&l, &r).unwrap(), Guardrails::default()).unwrap();
        assert!(a.euler_ok);
        assert_eq!(a.diagram.totals(), vec![1, 26, 98, 168, 154, 72, 15, 2]);
        assert_eq!(a.diagram.row(1)[1..7], [26, 98, 168, 154, 70, 8]);
        assert_eq!(a.diagram.row(2)[5..], [2, 7, 2]);
        let s = a.summary.as_ref().unwrap();
        assert_eq!((s.regularity, s.projective_dimension, s.codimension), (2, 7, 7));
        assert!(s.is_acm);
        assert!(a.diagram.check_nkp(2, 4) && !a.diagram.check_nkp(2, 5));

        let pred = girth_predictions(&g).unwrap();
        assert_eq!(pred.curve_fails_n2, 5);
        assert_eq!(pred.secant_fails_n3, Some(3));
        let c = pred.cycle_count.clone().unwrap();
        assert_eq!((c.p, c.i, c.j, c.cycles), (5, 5, 7, 2));
        let obs = check_predictions(&pred, &a.diagram, None);
        assert!(obs.iter().all(|o| o.holds), "{obs:?}");
    }

    #[test]
    fn example_secant_from_listed_cubics() {
        let r = Ring::grevlex(9).unwrap();
        let i = Ideal::new(&r, parse_generators(&r, include_str!("../data/theta10_cubics.txt")).unwrap());
        let a = analyze(&i, Guardrails::default()).unwrap();
        assert_eq!(a.diagram.totals(), vec![1, 25, 58, 43, 12, 3]);
        assert_eq!(a.ideal_regularity(), Some(5));
        let s = a.summary.as_ref().unwrap();
        assert_eq!((s.projective_dimension, s.codimension), (5, 5));
        assert!(a.diagram.check_nkp(3, 2) && !a.diagram.check_nkp(3, 3));
        let rep = RegularityReport::new(1, s);
        assert_eq!(rep.matches(), [false, false, false]);
    }

    #[test]
    fn five_cycle_fails_n23() {
        let g = cycle(5).unwrap();
        let l = label_edges(&g, false).unwrap();
        let r = Ring::grevlex(l.nvars()).unwrap();
        let a = analyze(&intersection_ideal(&l, &r).unwrap(), Guardrails::default()).unwrap();
        assert_ne!(a.diagram.get(3, 5), 0);
        assert!(!a.diagram.check_nkp(2, 3));
        assert!(girth_predictions(&path(5).unwrap()).is_none());
    }

    #[test]
    fn hypersurface_and_guardrails() {
        let r = Ring::grevlex(3).unwrap();
        let i = Ideal::new(&r, parse_generators(&r, "x0*x1").unwrap());
        let a = analyze(&i, Guardrails::default()).unwrap();
        let s = a.summary.unwrap();
        assert_eq!((s.regularity, s.projective_dimension), (1, 1));
        assert!(s.is_acm && a.diagram.check_nkp(2, 1));

        let (_, l) = theta10();
        let r = Ring::grevlex(9).unwrap();
        let cut = analyze(
            &intersection_ideal(&l, &r).unwrap(),
            Guardrails { max_degree: Some(3), max_basis: None },
        )
        .unwrap();
        assert!(!cut.is_complete());
        assert!(cut.summary.is_none());
    }
}
