//! Edge labelings of the loop-augmented graph and the lines they define.
//!
//! Every edge of `G~` (the graph plus a loop at each degree-one vertex)
//! carries `e_i` or `e_j - e_k`. The line of a vertex is cut out by the
//! linear forms that survive its incident labels.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use graphcurve_algebra::{LinearIdeal, Polynomial, Ring};
use serde::{Deserialize, Serialize};

use crate::error::LabelingError;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeLabel {
    Single(usize),
    /// `e_j - e_k`.
    Difference(usize, usize),
}

impl EdgeLabel {
    pub fn parse(s: &str) -> Result<Self, LabelingError> {
        let bad = || LabelingError::BadLabel(s.to_string());
        let idx = |t: &str| -> Result<usize, LabelingError> {
            t.trim().strip_prefix('e').ok_or_else(bad)?.parse().map_err(|_| bad())
        };
        match s.split_once('-') {
            None => Ok(EdgeLabel::Single(idx(s)?)),
            Some((a, b)) => {
                let (j, k) = (idx(a)?, idx(b)?);
                if j == k {
                    return Err(bad());
                }
                Ok(EdgeLabel::Difference(j, k))
            }
        }
    }

    pub fn indices(&self) -> Vec<usize> {
        match *self {
            EdgeLabel::Single(i) => vec![i],
            EdgeLabel::Difference(j, k) => vec![j, k],
        }
    }

    pub fn form(&self) -> LinearForm {
        match *self {
            EdgeLabel::Single(i) => LinearForm::Var(i),
            EdgeLabel::Difference(j, k) => LinearForm::Binomial(j, k),
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Single(i) => write!(f, "e{i}"),
            EdgeLabel::Difference(j, k) => write!(f, "e{j}-e{k}"),
        }
    }
}

/// An edge of the augmented graph. Ordered as the pair `(u, v)`, `u <= v`,
/// with a loop at `v` sorting as `(v, v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKey {
    Edge(usize, usize),
    Loop(usize),
}

impl EdgeKey {
    pub fn edge(u: usize, v: usize) -> Self {
        EdgeKey::Edge(u.min(v), u.max(v))
    }

    fn pair(&self) -> (usize, usize) {
        match *self {
            EdgeKey::Edge(u, v) => (u, v),
            EdgeKey::Loop(v) => (v, v),
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        let (a, b) = self.pair();
        a == v || b == v
    }

    /// The endpoint other than `v` (for a loop, `v` itself).
    pub fn other(&self, v: usize) -> usize {
        let (a, b) = self.pair();
        if a == v {
            b
        } else {
            a
        }
    }
}

impl Ord for EdgeKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.pair().cmp(&other.pair())
    }
}

impl PartialOrd for EdgeKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EdgeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeKey::Edge(u, v) => write!(f, "{u}-{v}"),
            EdgeKey::Loop(v) => write!(f, "loop@{v}"),
        }
    }
}

/// `x_i` or `x_j - x_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinearForm {
    Var(usize),
    Binomial(usize, usize),
}

impl LinearForm {
    pub fn to_poly(&self, ring: &Ring) -> Polynomial {
        match *self {
            LinearForm::Var(i) => ring.var(i),
            LinearForm::Binomial(j, k) => ring.sub(&ring.var(j), &ring.var(k)),
        }
    }

    pub fn indices(&self) -> Vec<usize> {
        match *self {
            LinearForm::Var(i) => vec![i],
            LinearForm::Binomial(j, k) => vec![j, k],
        }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinearForm::Var(i) => write!(f, "x{i}"),
            LinearForm::Binomial(j, k) => write!(f, "x{j}-x{k}"),
        }
    }
}

/// The ideal of one line, as variables and binomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LineIdeal {
    pub vertex: usize,
    pub forms: Vec<LinearForm>,
}

impl LineIdeal {
    pub fn polys(&self, ring: &Ring) -> Vec<Polynomial> {
        self.forms.iter().map(|f| f.to_poly(ring)).collect()
    }

    pub fn linear(&self, ring: &Ring) -> LinearIdeal {
        LinearIdeal::from_forms(ring, &self.polys(ring)).expect("line ideals are linear")
    }
}

impl fmt::Display for LineIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.forms.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    graph: Graph,
    labels: BTreeMap<EdgeKey, EdgeLabel>,
    ambient_dim: usize,
}

#[derive(Serialize, Deserialize)]
struct LabelDoc {
    labels: Vec<LabelEntry>,
}

#[derive(Serialize, Deserialize)]
struct LabelEntry {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    edge: Option<[usize; 2]>,
    #[serde(rename = "loop", skip_serializing_if = "Option::is_none", default)]
    loop_vertex: Option<usize>,
    label: String,
}

/// Edges of `G~` in ascending order.
fn augmented_edges(g: &Graph) -> Vec<EdgeKey> {
    let mut keys: Vec<EdgeKey> = g.edges().iter().map(|&(u, v)| EdgeKey::Edge(u, v)).collect();
    keys.extend((0..g.vertex_count()).filter(|&v| g.degree(v) == 1).map(EdgeKey::Loop));
    keys.sort();
    keys
}

fn check_shape(g: &Graph) -> Result<(), LabelingError> {
    if g.vertex_count() < 2 {
        return Err(LabelingError::TooSmall);
    }
    if !g.is_connected() {
        return Err(crate::error::GraphError::Disconnected.into());
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) > 3) {
        return Err(LabelingError::DegreeTooHigh(v, g.degree(v)));
    }
    Ok(())
}

/// Deterministic labeling. At each trivalent vertex in ascending order, the
/// edges to the two smallest neighbours get fresh `e_j`, `e_k` and the third
/// gets `e_j - e_k`; all other edges of `G~` then get fresh single labels in
/// ascending order.
///
/// With `allow_violations`, the difference edge at a trivalent vertex may be
/// moved to another of its edges when the default choice would put two
/// differences on one vertex.
pub fn label_edges(g: &Graph, allow_violations: bool) -> Result<Labeling, LabelingError> {
    check_shape(g)?;
    if !allow_violations {
        let report = g.validate();
        if !report.is_admissible() {
            return Err(LabelingError::AssumptionViolated(report.violations.join("; ")));
        }
    }
    let triv = g.trivalent();
    for &t in &triv {
        if let Some(&u) = g.neighbors(t).iter().find(|&&u| g.degree(u) == 3) {
            return Err(LabelingError::AdjacentTrivalent(t.min(u), t.max(u)));
        }
    }
    // Which neighbour (0, 1, 2 in sorted order) takes the difference label.
    let mut choice = vec![2usize; triv.len()];
    let mut diff_at = vec![0usize; g.vertex_count()];
    if !choose_differences(g, &triv, 0, &mut choice, &mut diff_at, allow_violations) {
        return Err(LabelingError::NoConsistentChoice);
    }

    let mut labels = BTreeMap::new();
    let mut next = 0;
    for (ti, &t) in triv.iter().enumerate() {
        let nb = g.neighbors(t);
        let singles: Vec<usize> = (0..3).filter(|&i| i != choice[ti]).collect();
        let (j, k) = (next, next + 1);
        next += 2;
        labels.insert(EdgeKey::edge(t, nb[singles[0]]), EdgeLabel::Single(j));
        labels.insert(EdgeKey::edge(t, nb[singles[1]]), EdgeLabel::Single(k));
        labels.insert(EdgeKey::edge(t, nb[choice[ti]]), EdgeLabel::Difference(j, k));
    }
    for key in augmented_edges(g) {
        labels.entry(key).or_insert_with(|| {
            next += 1;
            EdgeLabel::Single(next - 1)
        });
    }
    let ambient_dim = next - 1;
    debug_assert_eq!(ambient_dim, g.vertex_count() - g.genus());
    Ok(Labeling { graph: g.clone(), labels, ambient_dim })
}

fn choose_differences(
    g: &Graph,
    triv: &[usize],
    i: usize,
    choice: &mut [usize],
    diff_at: &mut [usize],
    allow_moves: bool,
) -> bool {
    if i == triv.len() {
        return true;
    }
    let options: &[usize] = if allow_moves { &[2, 1, 0] } else { &[2] };
    for &c in options {
        let far = g.neighbors(triv[i])[c];
        if diff_at[far] > 0 {
            continue;
        }
        diff_at[far] += 1;
        choice[i] = c;
        if choose_differences(g, triv, i + 1, choice, diff_at, allow_moves) {
            return true;
        }
        diff_at[far] -= 1;
    }
    false
}

impl Labeling {
    /// Reads a labeling document and checks it against the graph.
    pub fn from_json(g: &Graph, text: &str) -> Result<Self, LabelingError> {
        let doc: LabelDoc = serde_json::from_str(text).map_err(|e| LabelingError::Json(e.to_string()))?;
        let mut labels = BTreeMap::new();
        for entry in doc.labels {
            let key = match (entry.edge, entry.loop_vertex) {
                (Some([u, v]), None) => EdgeKey::edge(u, v),
                (None, Some(v)) => EdgeKey::Loop(v),
                _ => return Err(LabelingError::Json("each entry needs exactly one of \"edge\" or \"loop\"".into())),
            };
            let label = EdgeLabel::parse(&entry.label)?;
            if labels.insert(key, label).is_some() {
                return Err(LabelingError::DuplicateLabel(key.to_string()));
            }
        }
        Self::from_labels(g, labels)
    }

    pub fn from_labels(g: &Graph, labels: BTreeMap<EdgeKey, EdgeLabel>) -> Result<Self, LabelingError> {
        check_shape(g)?;
        let edges = augmented_edges(g);
        let set: BTreeSet<EdgeKey> = edges.iter().copied().collect();
        if let Some(k) = labels.keys().find(|k| !set.contains(k)) {
            return Err(LabelingError::UnknownEdge(k.to_string()));
        }
        if let Some(k) = edges.iter().find(|k| !labels.contains_key(k)) {
            return Err(LabelingError::MissingLabel(k.to_string()));
        }
        let ambient_dim = g.vertex_count() - g.genus();
        let mut singles = BTreeSet::new();
        let mut all = BTreeSet::new();
        for l in labels.values() {
            if let EdgeLabel::Single(i) = l {
                if !singles.insert(*i) {
                    return Err(LabelingError::IndexReused(*i));
                }
            }
            all.extend(l.indices());
        }
        let expected: BTreeSet<usize> = (0..=ambient_dim).collect();
        if all != expected {
            return Err(LabelingError::IndexCount {
                expected: ambient_dim + 1,
                max: ambient_dim,
                found: all.into_iter().collect(),
            });
        }
        let lab = Labeling { graph: g.clone(), labels, ambient_dim };
        let mut owned_diffs = BTreeSet::new();
        for v in 0..g.vertex_count() {
            let inc = lab.incident(v);
            let diffs: Vec<EdgeLabel> = inc.iter().map(|x| x.1).filter(|l| matches!(l, EdgeLabel::Difference(..))).collect();
            if g.degree(v) == 3 {
                if !is_triple(&inc.iter().map(|x| x.1).collect::<Vec<_>>()) {
                    return Err(LabelingError::TrivalentTriple(v));
                }
                owned_diffs.insert(diffs[0]);
            }
            if diffs.len() > 1 && g.degree(v) != 3 {
                return Err(LabelingError::TwoDifferences(v));
            }
        }
        for l in lab.labels.values() {
            if matches!(l, EdgeLabel::Difference(..)) && !owned_diffs.contains(l) {
                return Err(LabelingError::StrayDifference(l.to_string()));
            }
        }
        Ok(lab)
    }

    pub fn to_json(&self) -> String {
        let labels = self
            .labels
            .iter()
            .map(|(k, l)| match *k {
                EdgeKey::Edge(u, v) => LabelEntry { edge: Some([u, v]), loop_vertex: None, label: l.to_string() },
                EdgeKey::Loop(v) => LabelEntry { edge: None, loop_vertex: Some(v), label: l.to_string() },
            })
            .collect();
        serde_json::to_string_pretty(&LabelDoc { labels }).expect("labeling serializes")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// `d - g`; the lines live in `P^{d-g}`.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn nvars(&self) -> usize {
        self.ambient_dim + 1
    }

    pub fn labels(&self) -> &BTreeMap<EdgeKey, EdgeLabel> {
        &self.labels
    }

    pub fn label(&self, key: &EdgeKey) -> Option<EdgeLabel> {
        self.labels.get(key).copied()
    }

    /// Labels on the edges of `G~` at `v`.
    pub fn incident(&self, v: usize) -> Vec<(EdgeKey, EdgeLabel)> {
        let mut out: Vec<(EdgeKey, EdgeLabel)> = self
            .graph
            .neighbors(v)
            .iter()
            .map(|&u| {
                let k = EdgeKey::edge(u, v);
                (k, self.labels[&k])
            })
            .collect();
        if let Some(l) = self.labels.get(&EdgeKey::Loop(v)) {
            out.push((EdgeKey::Loop(v), *l));
        }
        out
    }

    /// Distinct labels in a fixed order: singles by index, then differences.
    pub fn distinct_labels(&self) -> Vec<EdgeLabel> {
        let set: BTreeSet<EdgeLabel> = self.labels.values().copied().collect();
        set.into_iter().collect()
    }

    pub fn line_ideal(&self, v: usize) -> LineIdeal {
        let inc = self.incident(v);
        let mut vars: BTreeSet<usize> = (0..=self.ambient_dim).collect();
        let mut forms = Vec::new();
        if self.graph.degree(v) == 3 {
            for (_, l) in &inc {
                if let EdgeLabel::Single(i) = l {
                    vars.remove(i);
                }
            }
        } else {
            for (_, l) in &inc {
                match *l {
                    EdgeLabel::Single(i) => {
                        vars.remove(&i);
                    }
                    EdgeLabel::Difference(j, k) => {
                        vars.remove(&j);
                        vars.remove(&k);
                        forms.push(LinearForm::Binomial(j, k));
                    }
                }
            }
        }
        let mut all: Vec<LinearForm> = vars.into_iter().map(LinearForm::Var).collect();
        all.extend(forms);
        LineIdeal { vertex: v, forms: all }
    }

    pub fn line_ideals(&self) -> Vec<LineIdeal> {
        (0..self.graph.vertex_count()).map(|v| self.line_ideal(v)).collect()
    }

    /// Swaps `e_j` and `e_j - e_k` at a trivalent vertex. The coordinate
    /// change `x_k -> x_j - x_k` carries the old lines to the new ones.
    pub fn relabel_involution(&self, v: usize) -> Result<(Labeling, (usize, usize)), LabelingError> {
        if self.graph.degree(v) != 3 {
            return Err(LabelingError::NotTrivalent(v));
        }
        let inc = self.incident(v);
        let (dk, dl) = inc
            .iter()
            .find(|(_, l)| matches!(l, EdgeLabel::Difference(..)))
            .copied()
            .ok_or(LabelingError::TrivalentTriple(v))?;
        let EdgeLabel::Difference(j, k) = dl else { unreachable!() };
        let (sk, _) = *inc
            .iter()
            .find(|(_, l)| *l == EdgeLabel::Single(j))
            .ok_or(LabelingError::TrivalentTriple(v))?;
        let mut labels = self.labels.clone();
        labels.insert(sk, dl);
        labels.insert(dk, EdgeLabel::Single(j));
        Ok((Labeling { graph: self.graph.clone(), labels, ambient_dim: self.ambient_dim }, (j, k)))
    }

    /// Plain-text export, one vertex per line.
    pub fn format_line_ideals(&self) -> String {
        self.line_ideals()
            .iter()
            .map(|l| format!("L{}: {}\n", l.vertex, l))
            .collect()
    }
}

fn is_triple(ls: &[EdgeLabel]) -> bool {
    if ls.len() != 3 {
        return false;
    }
    let diffs: Vec<(usize, usize)> = ls
        .iter()
        .filter_map(|l| match *l {
            EdgeLabel::Difference(j, k) => Some((j, k)),
            _ => None,
        })
        .collect();
    let singles: BTreeSet<usize> = ls
        .iter()
        .filter_map(|l| match *l {
            EdgeLabel::Single(i) => Some(i),
            _ => None,
        })
        .collect();
    matches!(diffs.as_slice(), [(j, k)] if singles == BTreeSet::from([*j, *k]))
}
