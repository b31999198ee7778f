//! Regression files: exact Betti tables, certificate statuses, and
//! generator sets compared up to scalar multiples.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use graphcurve_algebra::{format_polynomial, parse_polynomial, BettiDiagram, Polynomial, Ring};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::idealgen::{Certificate, Status};

/// A golden file. Only the fields present are compared.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Golden {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub betti: Option<Vec<(usize, u32, u64)>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<BTreeMap<String, Status>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub generators: Option<Vec<String>>,
}

impl Golden {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| Error::Golden(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("golden serializes")
    }

    pub fn with_betti(mut self, b: &BettiDiagram) -> Self {
        self.betti = Some(b.entries().collect());
        self
    }

    pub fn with_certificate(mut self, c: &Certificate) -> Self {
        self.certificate = Some(c.checks.iter().map(|x| (x.check.clone(), x.status)).collect());
        self
    }

    pub fn with_generators(mut self, ring: &Ring, gens: &[Polynomial]) -> Self {
        self.generators = Some(gens.iter().map(|g| format_polynomial(ring, g)).collect());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub field: String,
    pub location: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: expected {}, got {}", self.field, self.location, self.expected, self.actual)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenReport {
    pub compared: Vec<String>,
    pub mismatches: Vec<Mismatch>,
}

impl GoldenReport {
    pub fn matches(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `actual` against the fields present in `expected`. Generator
/// strings are parsed in `ring`.
pub fn compare_golden(actual: &Golden, expected: &Golden, ring: &Ring) -> Result<GoldenReport, Error> {
    let mut report = GoldenReport::default();
    if let Some(want) = &expected.betti {
        report.compared.push("betti".into());
        let got = actual.betti.clone().unwrap_or_default();
        report.mismatches.extend(diff_betti(want, &got));
    }
    if let Some(want) = &expected.certificate {
        report.compared.push("certificate".into());
        let got = actual.certificate.clone().unwrap_or_default();
        let keys: BTreeSet<&String> = want.keys().chain(got.keys()).collect();
        for k in keys {
            let (w, g) = (want.get(k), got.get(k));
            if w != g {
                report.mismatches.push(Mismatch {
                    field: "certificate".into(),
                    location: k.clone(),
                    expected: show_status(w),
                    actual: show_status(g),
                });
            }
        }
    }
    if let Some(want) = &expected.generators {
        report.compared.push("generators".into());
        let got = actual.generators.clone().unwrap_or_default();
        let w = normalized(ring, want)?;
        let g = normalized(ring, &got)?;
        for missing in w.difference(&g) {
            report.mismatches.push(Mismatch {
                field: "generators".into(),
                location: missing.clone(),
                expected: "present".into(),
                actual: "absent".into(),
            });
        }
        for extra in g.difference(&w) {
            report.mismatches.push(Mismatch {
                field: "generators".into(),
                location: extra.clone(),
                expected: "absent".into(),
                actual: "present".into(),
            });
        }
    }
    Ok(report)
}

fn show_status(s: Option<&Status>) -> String {
    s.map(|s| serde_json::to_string(s).unwrap().trim_matches('"').to_string()).unwrap_or_else(|| "missing".into())
}

fn diff_betti(want: &[(usize, u32, u64)], got: &[(usize, u32, u64)]) -> Vec<Mismatch> {
    let table = |t: &[(usize, u32, u64)]| t.iter().map(|&(i, j, b)| ((i, j), b)).filter(|x| x.1 != 0).collect::<BTreeMap<_, _>>();
    let (w, g) = (table(want), table(got));
    let cells: BTreeSet<(usize, u32)> = w.keys().chain(g.keys()).copied().collect();
    cells
        .into_iter()
        .filter_map(|(i, j)| {
            let (a, b) = (w.get(&(i, j)).copied().unwrap_or(0), g.get(&(i, j)).copied().unwrap_or(0));
            (a != b).then(|| Mismatch {
                field: "betti".into(),
                location: format!("beta_{{{i},{j}}} (column {i}, row {})", j as i64 - i as i64),
                expected: a.to_string(),
                actual: b.to_string(),
            })
        })
        .collect()
}

/// Parses and scales each polynomial to leading coefficient one.
fn normalized(ring: &Ring, gens: &[String]) -> Result<BTreeSet<String>, Error> {
    gens.iter()
        .map(|s| {
            let p = parse_polynomial(ring, s)?;
            Ok(format_polynomial(ring, &ring.make_monic(&p)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use graphcurve_algebra::parse_generators;

    fn curve_golden() -> Golden {
        Golden::from_json(include_str!("../data/golden/theta10_curve.json")).unwrap()
    }

    #[test]
    fn identical_goldens_match() {
        let g = curve_golden();
        let r = Ring::grevlex(9).unwrap();
        let rep = compare_golden(&g, &g, &r).unwrap();
        assert!(rep.matches());
        assert_eq!(rep.compared, vec!["betti", "certificate", "generators"]);
    }

    #[test]
    fn perturbed_cell_is_located() {
        let want = curve_golden();
        let mut got = want.clone();
        let cells = got.betti.as_mut().unwrap();
        let cell = cells.iter_mut().find(|c| c.0 == 5 && c.1 == 7).unwrap();
        cell.2 = 3;
        let r = Ring::grevlex(9).unwrap();
        let rep = compare_golden(&got, &want, &r).unwrap();
        assert_eq!(rep.mismatches.len(), 1);
        assert_eq!(rep.mismatches[0].location, "beta_{5,7} (column 5, row 2)");
        assert_eq!((rep.mismatches[0].expected.as_str(), rep.mismatches[0].actual.as_str()), ("2", "3"));
    }

    #[test]
    fn generators_up_to_scalars() {
        let r = Ring::grevlex(9).unwrap();
        let want = Golden { generators: Some(vec!["x0*x8 - x6*x8".into(), "x1*x3".into()]), ..Golden::default() };
        let scaled = parse_generators(&r, "-3*x0*x8 + 3*x6*x8, 5*x1*x3").unwrap();
        let got = Golden::default().with_generators(&r, &scaled);
        assert!(compare_golden(&got, &want, &r).unwrap().matches());
        let other = Golden::default().with_generators(&r, &scaled[..1]);
        let rep = compare_golden(&other, &want, &r).unwrap();
        assert_eq!(rep.mismatches.len(), 1);
        assert_eq!(rep.mismatches[0].location, "x1*x3");
    }

    #[test]
    fn certificate_status_changes_are_reported() {
        let want = curve_golden();
        let mut got = want.clone();
        got.certificate.as_mut().unwrap().insert("generation".into(), Status::Fail);
        let rep = compare_golden(&got, &want, &Ring::grevlex(9).unwrap()).unwrap();
        assert_eq!(rep.mismatches[0].to_string(), "certificate at generation: expected PASS, got FAIL");
    }
}
