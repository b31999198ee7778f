//! The curve ideal: products of linear forms read off the labeling, and the
//! intersection of the line ideals as an independent oracle.

use std::collections::BTreeSet;
use std::fmt;

use graphcurve_algebra::linalg::Matrix;
use graphcurve_algebra::monomial::monomials_of_degree;
use graphcurve_algebra::{Ideal, Monomial, Polynomial, Ring};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::labeling::{EdgeLabel, Labeling, LinearForm};

/// Which rule admitted a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    /// `x_i x_j`
    Monomial,
    /// `x_i (x_j - x_k)`
    Mixed,
    /// `(x_i - x_j)(x_k - x_l)`
    Binomials,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadricProduct {
    pub left: LinearForm,
    pub right: LinearForm,
    pub clause: Clause,
}

impl QuadricProduct {
    pub fn to_poly(&self, ring: &Ring) -> Polynomial {
        ring.mul(&self.left.to_poly(ring), &self.right.to_poly(ring))
    }

    pub fn indices(&self) -> Vec<usize> {
        let mut v = self.left.indices();
        v.extend(self.right.indices());
        v
    }
}

impl fmt::Display for QuadricProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |l: &LinearForm| match l {
            LinearForm::Var(_) => l.to_string(),
            LinearForm::Binomial(..) => format!("({l})"),
        };
        write!(f, "{}*{}", wrap(&self.left), wrap(&self.right))
    }
}

/// Pairs of indices that meet at a vertex in the way that forbids a product.
struct Meetings {
    /// `e_i` and `e_j` on edges at a common vertex.
    single_single: BTreeSet<(usize, usize)>,
    /// `e_i` next to an edge whose label involves `j`.
    single_any: BTreeSet<(usize, usize)>,
}

fn meetings(l: &Labeling) -> Meetings {
    let mut single_single = BTreeSet::new();
    let mut single_any = BTreeSet::new();
    for v in 0..l.graph().vertex_count() {
        let labels: Vec<EdgeLabel> = l.incident(v).into_iter().map(|x| x.1).collect();
        for (a, la) in labels.iter().enumerate() {
            let EdgeLabel::Single(i) = *la else { continue };
            for (b, lb) in labels.iter().enumerate() {
                if a == b {
                    continue;
                }
                if let EdgeLabel::Single(j) = *lb {
                    single_single.insert((i, j));
                }
                for j in lb.indices() {
                    single_any.insert((i, j));
                }
            }
        }
    }
    Meetings { single_single, single_any }
}

/// Every product admitted by the three rules, in a fixed order.
pub fn admissible_products(l: &Labeling) -> Vec<QuadricProduct> {
    let meet = meetings(l);
    let labels = l.distinct_labels();
    let singles: Vec<usize> = labels
        .iter()
        .filter_map(|x| match x {
            EdgeLabel::Single(i) => Some(*i),
            _ => None,
        })
        .collect();
    let diffs: Vec<(usize, usize)> = labels
        .iter()
        .filter_map(|x| match x {
            EdgeLabel::Difference(j, k) => Some((*j, *k)),
            _ => None,
        })
        .collect();
    let mut out = Vec::new();
    for (a, &i) in singles.iter().enumerate() {
        for &j in &singles[a + 1..] {
            if !meet.single_any.contains(&(i, j)) && !meet.single_any.contains(&(j, i)) {
                out.push(QuadricProduct { left: LinearForm::Var(i), right: LinearForm::Var(j), clause: Clause::Monomial });
            }
        }
    }
    for &i in &singles {
        for &(j, k) in &diffs {
            let blocked = i == j
                || i == k
                || meet.single_single.contains(&(i, j))
                || meet.single_single.contains(&(i, k));
            if !blocked {
                out.push(QuadricProduct {
                    left: LinearForm::Var(i),
                    right: LinearForm::Binomial(j, k),
                    clause: Clause::Mixed,
                });
            }
        }
    }
    for (a, &(j, k)) in diffs.iter().enumerate() {
        for &(p, q) in &diffs[a + 1..] {
            out.push(QuadricProduct {
                left: LinearForm::Binomial(j, k),
                right: LinearForm::Binomial(p, q),
                clause: Clause::Binomials,
            });
        }
    }
    out
}

/// The admissible products with linearly dependent ones dropped: all
/// monomials, then each binomial product only if it adds something new.
pub fn combinatorial_generators(l: &Labeling, ring: &Ring) -> Vec<QuadricProduct> {
    let mons = monomials_of_degree(ring.nvars(), 2);
    let mut span = Echelon::new(mons);
    let mut kept = Vec::new();
    for q in admissible_products(l) {
        if span.insert(ring, &q.to_poly(ring)) || q.clause == Clause::Monomial {
            kept.push(q);
        }
    }
    kept
}

/// Incremental row echelon form over a fixed monomial basis.
struct Echelon {
    mons: Vec<Monomial>,
    rows: Vec<(usize, Vec<u32>)>,
}

impl Echelon {
    fn new(mons: Vec<Monomial>) -> Self {
        Echelon { mons, rows: Vec::new() }
    }

    fn vector(&self, f: &Polynomial) -> Vec<u32> {
        let mut v = vec![0; self.mons.len()];
        for (m, c) in f.terms() {
            let i = self.mons.iter().position(|x| x == m).expect("form of the basis degree");
            v[i] = *c;
        }
        v
    }

    /// Adds `f`; returns whether it was independent of the earlier rows.
    fn insert(&mut self, ring: &Ring, f: &Polynomial) -> bool {
        let fld = ring.field();
        let mut v = self.vector(f);
        for (p, row) in &self.rows {
            let c = v[*p];
            if c != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = fld.sub(*x, fld.mul(c, *r));
                }
            }
        }
        let Some(p) = v.iter().position(|&x| x != 0) else { return false };
        let inv = fld.inv(v[p]);
        for x in v.iter_mut() {
            *x = fld.mul(*x, inv);
        }
        self.rows.push((p, v));
        true
    }
}

/// Intersection of the line ideals, folded in vertex order.
pub fn intersection_ideal(l: &Labeling, ring: &Ring) -> Result<Ideal, Error> {
    let mut lines = l.line_ideals().into_iter().map(|li| Ideal::new(ring, li.polys(ring)));
    let mut acc = lines.next().expect("labelings have at least two vertices");
    for next in lines {
        acc = acc.intersection(&next)?;
    }
    Ok(acc)
}

/// A basis of the quadrics vanishing on every line. A quadric vanishes on
/// the line through `p` and `q` iff it vanishes at `p`, `q` and `p + q`.
pub fn quadric_space(l: &Labeling, ring: &Ring) -> Vec<Polynomial> {
    let fld = ring.field();
    let mons = monomials_of_degree(ring.nvars(), 2);
    let mut rows = Vec::new();
    for li in l.line_ideals() {
        let pts = li.linear(ring).points(ring);
        let (p, q) = (&pts[0], &pts[1]);
        let s: Vec<u32> = p.iter().zip(q).map(|(a, b)| fld.add(*a, *b)).collect();
        for pt in [p, q, &s] {
            rows.push(mons.iter().map(|m| eval_monomial(ring, m, pt)).collect());
        }
    }
    Matrix::from_rows(&rows, mons.len())
        .kernel(fld)
        .into_iter()
        .map(|v| ring.from_terms(mons.iter().zip(v).filter(|(_, c)| *c != 0).map(|(m, c)| (*m, c)).collect()))
        .collect()
}

fn eval_monomial(ring: &Ring, m: &Monomial, pt: &[u32]) -> u32 {
    let fld = ring.field();
    (0..ring.nvars()).fold(1, |acc, i| (0..m.exponent(i)).fold(acc, |a, _| fld.mul(a, pt[i])))
}

/// Rank of a set of forms of one degree.
pub fn span_rank(ring: &Ring, forms: &[Polynomial]) -> usize {
    let Some(d) = forms.iter().find_map(|f| f.degree()) else { return 0 };
    let mut e = Echelon::new(monomials_of_degree(ring.nvars(), d));
    forms.iter().filter(|f| e.insert(ring, f)).count()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub check: String,
    pub status: Status,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Certificate {
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn status(&self, name: &str) -> Option<Status> {
        self.checks.iter().find(|c| c.check == name).map(|c| c.status)
    }
}

/// Everything the certificate computed, kept for callers that want to
/// reuse the oracle ideal.
pub struct Certified {
    pub certificate: Certificate,
    pub generators: Vec<QuadricProduct>,
    pub oracle: Ideal,
}

/// Checks that the products generate the curve ideal: the degree-two span
/// first, then membership, then equality of reduced bases.
pub fn certify(l: &Labeling, ring: &Ring) -> Result<Certified, Error> {
    let gens = combinatorial_generators(l, ring);
    let polys: Vec<Polynomial> = gens.iter().map(|q| q.to_poly(ring)).collect();
    let space = quadric_space(l, ring);
    let mut both = space.clone();
    both.extend(polys.iter().cloned());
    let own = span_rank(ring, &polys);
    let joint = span_rank(ring, &both);
    let degree2 = own == space.len() && joint == space.len();
    let mut checks = vec![Check {
        check: "degree2".into(),
        status: if degree2 { Status::Pass } else { Status::Fail },
        details: format!("products span {own}, vanishing quadrics {}, together {joint}", space.len()),
    }];

    let oracle = intersection_ideal(l, ring)?;
    let outside: Vec<String> = gens
        .iter()
        .zip(&polys)
        .filter(|(_, p)| !oracle.is_member(p))
        .map(|(q, _)| q.to_string())
        .collect();
    checks.push(Check {
        check: "membership".into(),
        status: if outside.is_empty() { Status::Pass } else { Status::Fail },
        details: if outside.is_empty() {
            format!("{} products lie on every line", gens.len())
        } else {
            format!("not in the ideal: {}", outside.join(", "))
        },
    });

    if degree2 {
        let generated = Ideal::new(ring, polys);
        let same = generated == oracle;
        checks.push(Check {
            check: "generation".into(),
            status: if same { Status::Pass } else { Status::Fail },
            details: format!(
                "basis sizes {} (products) and {} (intersection)",
                generated.gb().len(),
                oracle.gb().len()
            ),
        });
    } else {
        checks.push(Check {
            check: "generation".into(),
            status: Status::Skip,
            details: "degree-two span differs".into(),
        });
    }
    Ok(Certified { certificate: Certificate { checks }, generators: gens, oracle })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path, subdivided_k4, Graph};
    use crate::labeling::label_edges;
    use graphcurve_algebra::parse_generators;

    fn theta10() -> Labeling {
        let g = Graph::from_json(include_str!("../data/theta10.json")).unwrap();
        Labeling::from_json(&g, include_str!("../data/theta10_labeling.json")).unwrap()
    }

    fn monic_set(r: &Ring, fs: &[Polynomial]) -> BTreeSet<String> {
        fs.iter().map(|f| format!("{:?}", r.make_monic(f))).collect()
    }

    #[test]
    fn example_products_match_the_listed_quadrics() {
        let l = theta10();
        let r = Ring::grevlex(l.nvars()).unwrap();
        let gens = combinatorial_generators(&l, &r);
        assert_eq!(gens.len(), 26);
        for q in &gens {
            let idx = q.indices();
            assert_eq!(idx.iter().collect::<BTreeSet<_>>().len(), idx.len());
        }
        let polys: Vec<Polynomial> = gens.iter().map(|q| q.to_poly(&r)).collect();
        let listed = parse_generators(&r, include_str!("../data/theta10_quadrics.txt")).unwrap();
        assert_eq!(monic_set(&r, &polys), monic_set(&r, &listed));
        assert!(admissible_products(&l).len() > 26);
    }

    #[test]
    fn cycle_of_five() {
        let l = label_edges(&cycle(5).unwrap(), false).unwrap();
        let r = Ring::grevlex(l.nvars()).unwrap();
        let gens = combinatorial_generators(&l, &r);
        assert_eq!(gens.len(), 5);
        assert!(gens.iter().all(|q| q.clause == Clause::Monomial));
    }

    #[test]
    fn two_lines_in_the_plane() {
        let l = label_edges(&path(2).unwrap(), false).unwrap();
        let r = Ring::grevlex(3).unwrap();
        let gens = combinatorial_generators(&l, &r);
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].to_string(), "x0*x2");
        let oracle = intersection_ideal(&l, &r).unwrap();
        assert_eq!(oracle, Ideal::new(&r, vec![gens[0].to_poly(&r)]));
    }

    #[test]
    fn quadric_space_dimensions() {
        let l = theta10();
        let r = Ring::grevlex(l.nvars()).unwrap();
        assert_eq!(quadric_space(&l, &r).len(), 26);
        let k4 = label_edges(&subdivided_k4(1).unwrap(), true).unwrap();
        let r8 = Ring::grevlex(k4.nvars()).unwrap();
        assert_eq!(quadric_space(&k4, &r8).len(), 18);
    }

    #[test]
    fn cycle_of_six_oracle() {
        let l = label_edges(&cycle(6).unwrap(), false).unwrap();
        let r = Ring::grevlex(l.nvars()).unwrap();
        let i = intersection_ideal(&l, &r).unwrap();
        assert_eq!(i.dim_in_degree(2).unwrap(), 9);
        assert_eq!(i.hilbert_series().unwrap().hilbert_polynomial_string(), "6t");
    }

    #[test]
    fn certificates() {
        let l = theta10();
        let r = Ring::grevlex(l.nvars()).unwrap();
        let c = certify(&l, &r).unwrap();
        assert!(c.certificate.passed(), "{:?}", c.certificate);
        assert_eq!(c.oracle.hilbert_series().unwrap().hilbert_polynomial_string(), "10t - 1");

        let tri = Graph::from_json(include_str!("../data/triangle.json")).unwrap();
        let lt = label_edges(&tri, true).unwrap();
        let rt = Ring::grevlex(lt.nvars()).unwrap();
        let ct = certify(&lt, &rt).unwrap().certificate;
        assert_eq!(ct.status("degree2"), Some(Status::Pass));
        assert_eq!(ct.status("generation"), Some(Status::Fail));
        let json = serde_json::to_string(&ct).unwrap();
        assert!(json.starts_with(r#"[{"check":"degree2","status":"PASS""#), "{json}");
    }
}
