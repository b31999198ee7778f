//! One self-contained record per graph: invariants, certificate, curve and
//! secant diagrams, and the girth predictions checked against them.

use std::time::Instant;

use graphcurve_algebra::{MonomialOrder, PrimeField, Ring};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{Graph, GraphInvariants};
use crate::homology::{analyze, check_predictions, girth_predictions, Analysis, Guardrails, Observation, Predictions, RegularityReport};
use crate::idealgen::{certify, Certificate};
use crate::labeling::{label_edges, Labeling};
use crate::secant::{secant_degree_prediction, secant_ideal, SecantDegree, SecantStatus};

#[derive(Clone, Copy, Debug)]
pub struct SurveyOptions {
    pub field: u32,
    pub guardrails: Guardrails,
    pub timings: bool,
    pub allow_violations: bool,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            field: graphcurve_algebra::DEFAULT_PRIME,
            guardrails: Guardrails::default(),
            timings: false,
            allow_violations: false,
        }
    }
}

/// Diagram data in plain form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramReport {
    pub betti: Vec<(usize, u32, u64)>,
    pub complete: bool,
    pub euler_ok: bool,
    pub hilbert_polynomial: String,
    pub degree: i64,
    pub scheme_dim: i64,
    /// `reg(S/I)`.
    pub regularity: Option<i64>,
    pub pd: Option<usize>,
    pub codim: Option<usize>,
    pub acm: Option<bool>,
}

impl DiagramReport {
    pub fn new(a: &Analysis) -> Self {
        DiagramReport {
            betti: a.diagram.entries().collect(),
            complete: a.diagram.is_complete(),
            euler_ok: a.euler_ok,
            hilbert_polynomial: a.hilbert.hilbert_polynomial_string(),
            degree: a.hilbert.degree(),
            scheme_dim: a.hilbert.projective_dim(),
            regularity: a.summary.as_ref().map(|s| s.regularity),
            pd: a.summary.as_ref().map(|s| s.projective_dimension),
            codim: a.summary.as_ref().map(|s| s.codimension),
            acm: a.summary.as_ref().map(|s| s.is_acm),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecantReport {
    pub k: usize,
    pub status: SecantStatus,
    pub components: usize,
    pub predicted_degree: SecantDegree,
    pub diagram: Option<DiagramReport>,
    pub regularity: Option<RegularityReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub certificate_ms: u128,
    pub curve_ms: u128,
    pub secant_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub hash: String,
    pub graph: serde_json::Value,
    pub labeling: serde_json::Value,
    pub field: u32,
    pub admissible: bool,
    pub invariants: GraphInvariants,
    pub certificate: Certificate,
    pub curve: DiagramReport,
    pub secant: SecantReport,
    pub predictions: Option<Predictions>,
    pub observations: Vec<Observation>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<Timings>,
}

/// Runs the whole pipeline on one graph. Uses the default labeling unless
/// one is given.
pub fn survey_graph(g: &Graph, labeling: Option<&Labeling>, opts: &SurveyOptions) -> Result<SurveyReport, Error> {
    let owned;
    let l = match labeling {
        Some(l) => l,
        None => {
            owned = label_edges(g, opts.allow_violations)?;
            &owned
        }
    };
    let ring = Ring::new(l.nvars(), PrimeField::new(opts.field)?, MonomialOrder::Grevlex)?;

    let t0 = Instant::now();
    let cert = certify(l, &ring)?;
    let t1 = Instant::now();
    let curve = analyze(&cert.oracle, opts.guardrails)?;
    let t2 = Instant::now();
    let sec = secant_ideal(l, &ring, 1)?;
    let sec_analysis = match sec.status {
        SecantStatus::Computed => Some(analyze(&sec.ideal, opts.guardrails)?),
        SecantStatus::FillsAmbientSpace => None,
    };
    let t3 = Instant::now();

    let predictions = girth_predictions(g);
    let observations = predictions
        .as_ref()
        .map(|p| check_predictions(p, &curve.diagram, sec_analysis.as_ref().map(|a| &a.diagram)))
        .unwrap_or_default();
    let secant = SecantReport {
        k: 1,
        status: sec.status,
        components: sec.components.len(),
        predicted_degree: secant_degree_prediction(g.vertex_count(), g.genus()),
        diagram: sec_analysis.as_ref().map(DiagramReport::new),
        regularity: sec_analysis.as_ref().and_then(|a| a.summary.as_ref()).map(|s| RegularityReport::new(1, s)),
    };
    Ok(SurveyReport {
        hash: g.hash(),
        graph: serde_json::from_str(&g.to_json()).expect("graph json"),
        labeling: serde_json::from_str(&l.to_json()).expect("labeling json"),
        field: opts.field,
        admissible: g.validate().is_admissible(),
        invariants: g.invariants()?,
        certificate: cert.certificate,
        curve: DiagramReport::new(&curve),
        secant,
        predictions,
        observations,
        timings: opts.timings.then(|| Timings {
            certificate_ms: (t1 - t0).as_millis(),
            curve_ms: (t2 - t1).as_millis(),
            secant_ms: (t3 - t2).as_millis(),
        }),
    })
}

/// Surveys graphs on `jobs` threads; results come back in input order.
pub fn survey_all(graphs: &[Graph], opts: &SurveyOptions, jobs: usize) -> Result<Vec<Result<SurveyReport, Error>>, Error> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    Ok(pool.install(|| graphs.par_iter().map(|g| survey_graph(g, None, opts)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{theta10_graph, theta10_labeling};
    use crate::graph::{path, random_valid};

    #[test]
    fn example_record() {
        let r = survey_graph(&theta10_graph(), Some(&theta10_labeling()), &SurveyOptions::default()).unwrap();
        assert!(r.certificate.passed());
        assert_eq!(r.curve.acm, Some(true));
        assert_eq!(r.secant.diagram.as_ref().unwrap().degree, 34);
        assert_eq!(r.secant.predicted_degree.formula, 34);
        assert_eq!(r.secant.regularity.as_ref().unwrap().ideal, 5);
        assert!(r.observations.iter().all(|o| o.holds), "{:?}", r.observations);
        assert!(r.observations.iter().any(|o| o.claim.contains("beta_{5,7} = 2 equals 2 cycles")));
        assert!(r.timings.is_none());
    }

    #[test]
    fn records_are_deterministic_and_reproducible() {
        let graphs: Vec<Graph> = (0..4).map(|s| random_valid(9, 1, s).unwrap()).collect();
        let opts = SurveyOptions::default();
        let a = survey_all(&graphs, &opts, 3).unwrap();
        let b = survey_all(&graphs, &opts, 1).unwrap();
        let ja: Vec<String> = a.iter().map(|r| serde_json::to_string(r.as_ref().unwrap()).unwrap()).collect();
        let jb: Vec<String> = b.iter().map(|r| serde_json::to_string(r.as_ref().unwrap()).unwrap()).collect();
        assert_eq!(ja, jb);
        let rec = a[0].as_ref().unwrap();
        let g = Graph::from_json(&rec.graph.to_string()).unwrap();
        let l = Labeling::from_json(&g, &rec.labeling.to_string()).unwrap();
        let again = survey_graph(&g, Some(&l), &opts).unwrap();
        assert_eq!(&again, rec);
    }

    #[test]
    fn small_tree() {
        let r = survey_graph(&path(2).unwrap(), None, &SurveyOptions::default()).unwrap();
        assert_eq!(r.secant.status, SecantStatus::FillsAmbientSpace);
        assert!(r.predictions.is_none());
        assert_eq!(r.curve.regularity, Some(1));
    }
}
