//! Simple graphs, the admissibility checks, and girth/cycle invariants.

use std::collections::{BTreeMap, VecDeque};

use rand::seq::{IndexedRandom, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::GraphError;

/// An undirected simple graph on vertices `0..d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    d: usize,
    /// Sorted, each pair `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    vertices: usize,
    edges: Vec<[usize; 2]>,
}

impl Graph {
    pub fn new(d: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if d == 0 {
            return Err(GraphError::Empty);
        }
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= d || v >= d {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), d });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); d];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        Ok(Graph { d, edges: norm, adj })
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let doc: GraphDoc = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        let edges: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(doc.vertices, &edges)
    }

    pub fn to_json(&self) -> String {
        let doc = GraphDoc {
            vertices: self.d,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        };
        serde_json::to_string(&doc).expect("graph serializes")
    }

    /// Hex SHA-256 of the canonical JSON form.
    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_json().as_bytes()))
    }

    pub fn vertex_count(&self) -> usize {
        self.d
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn trivalent(&self) -> Vec<usize> {
        (0..self.d).filter(|&v| self.degree(v) == 3).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.distances(0).iter().all(|d| d.is_some())
    }

    /// `m - d + 1`; meaningful for connected graphs.
    pub fn genus(&self) -> usize {
        (self.edges.len() + 1).saturating_sub(self.d)
    }

    /// BFS distances in edges.
    pub fn distances(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.d];
        dist[s] = Some(0);
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    q.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest path length between two distinct trivalent vertices.
    pub fn trivalent_separation(&self) -> Option<usize> {
        let t = self.trivalent();
        let mut best: Option<usize> = None;
        for (i, &a) in t.iter().enumerate() {
            let dist = self.distances(a);
            for &b in &t[i + 1..] {
                if let Some(x) = dist[b] {
                    best = Some(best.map_or(x, |y: usize| y.min(x)));
                }
            }
        }
        best
    }

    /// Length of a shortest cycle, by BFS from every vertex.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.d {
            let mut dist = vec![usize::MAX; self.d];
            let mut parent = vec![usize::MAX; self.d];
            dist[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        q.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Number of simple cycles of length exactly `len`.
    pub fn count_cycles(&self, len: usize) -> usize {
        if len < 3 {
            return 0;
        }
        // Each cycle is found once per direction from its smallest vertex.
        fn dfs(g: &Graph, start: usize, u: usize, depth: usize, len: usize, on: &mut [bool]) -> usize {
            let mut n = 0;
            for &w in &g.adj[u] {
                if w == start && depth == len {
                    n += 1;
                } else if w > start && !on[w] && depth < len {
                    on[w] = true;
                    n += dfs(g, start, w, depth + 1, len, on);
                    on[w] = false;
                }
            }
            n
        }
        let mut total = 0;
        let mut on = vec![false; self.d];
        for s in 0..self.d {
            on[s] = true;
            total += dfs(self, s, s, 1, len, &mut on);
            on[s] = false;
        }
        total / 2
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| !self.adj[u].iter().any(|&w| w != v && self.has_edge(w, v)))
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let connected = self.is_connected();
        if !connected {
            violations.push("graph is disconnected".to_string());
        }
        // Parsing already rejects loops and repeated edges.
        let simple = true;
        let max_deg = (0..self.d).map(|v| self.degree(v)).max().unwrap_or(0);
        let has_low = (0..self.d).any(|v| self.degree(v) < 3);
        let subtrivalent = max_deg <= 3 && has_low;
        if max_deg > 3 {
            violations.push(format!("a vertex has degree {max_deg} > 3"));
        } else if !has_low {
            violations.push("every vertex is trivalent".to_string());
        }
        let separation = self.trivalent_separation();
        let separated = separation.is_none_or(|s| s >= 3);
        if let Some(s) = separation.filter(|&s| s < 3) {
            violations.push(format!("two trivalent vertices are separated by {s} edge(s)"));
        }
        let triangle_free = self.is_triangle_free();
        if !triangle_free {
            violations.push("graph contains a triangle".to_string());
        }
        ValidationReport {
            connected,
            simple,
            strictly_subtrivalent: subtrivalent,
            trivalent_separation: separated,
            triangle_free,
            separation,
            violations,
        }
    }

    pub fn invariants(&self) -> Result<GraphInvariants, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let girth = self.girth();
        let mut hist = BTreeMap::new();
        for v in 0..self.d {
            *hist.entry(self.degree(v)).or_insert(0) += 1;
        }
        Ok(GraphInvariants {
            vertices: self.d,
            edges: self.edges.len(),
            genus: self.genus(),
            girth,
            girth_cycle_count: girth.map_or(0, |n| self.count_cycles(n)),
            trivalent_separation: self.trivalent_separation(),
            degree_histogram: hist,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub connected: bool,
    pub simple: bool,
    pub strictly_subtrivalent: bool,
    pub trivalent_separation: bool,
    pub triangle_free: bool,
    /// Measured separation, `None` when fewer than two trivalent vertices
    /// share a component.
    pub separation: Option<usize>,
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn flags(&self) -> [bool; 5] {
        [
            self.connected,
            self.simple,
            self.strictly_subtrivalent,
            self.trivalent_separation,
            self.triangle_free,
        ]
    }

    pub fn is_admissible(&self) -> bool {
        self.flags().iter().all(|&f| f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInvariants {
    pub vertices: usize,
    pub edges: usize,
    pub genus: usize,
    /// `None` for forests.
    pub girth: Option<usize>,
    pub girth_cycle_count: usize,
    pub trivalent_separation: Option<usize>,
    pub degree_histogram: BTreeMap<usize, usize>,
}

/// Families for sweeps and surveys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Path(usize),
    /// `K_4` with `s` new vertices on every edge.
    SubdividedK4(usize),
    RandomValid { d: usize, g: usize, seed: u64 },
}

const RANDOM_ATTEMPTS: usize = 20_000;

pub fn cycle(m: usize) -> Result<Graph, GraphError> {
    if m < 3 {
        return Err(GraphError::Unsatisfiable(format!("cycle of length {m}")));
    }
    let edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    Graph::new(m, &edges)
}

pub fn path(d: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (1..d).map(|i| (i - 1, i)).collect();
    Graph::new(d, &edges)
}

/// Vertices `0..4` are the original ones; subdivision vertices follow, edge
/// by edge in lexicographic order.
pub fn subdivided_k4(s: usize) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut next = 4;
    for a in 0..4 {
        for b in a + 1..4 {
            let mut prev = a;
            for _ in 0..s {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, b));
        }
    }
    Graph::new(next, &edges)
}

/// A random admissible graph with `d` vertices and genus `g`, by rejection
/// sampling.
pub fn random_valid(d: usize, g: usize, seed: u64) -> Result<Graph, GraphError> {
    if d < 2 || d < 2 * g + 2 {
        return Err(GraphError::Unsatisfiable(format!(
            "no admissible graph with d = {d}, g = {g} (need d >= 2g + 2 and d >= 2)"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_ATTEMPTS {
        if let Some(gr) = random_attempt(d, g, &mut rng) {
            if gr.validate().is_admissible() {
                return Ok(gr);
            }
        }
    }
    Err(GraphError::Unsatisfiable(format!(
        "no admissible graph with d = {d}, g = {g} found in {RANDOM_ATTEMPTS} attempts"
    )))
}

fn random_attempt(d: usize, g: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut order: Vec<usize> = (0..d).collect();
    order.shuffle(rng);
    let mut adj = vec![Vec::new(); d];
    let mut edges = Vec::with_capacity(d + g);
    // A vertex may become trivalent only if no trivalent vertex is within two edges.
    let may_branch = |adj: &[Vec<usize>], u: usize| {
        adj[u].len() < 2 || bfs(adj, u).iter().enumerate().all(|(w, dist)| w == u || adj[w].len() < 3 || dist.is_none_or(|x| x >= 3))
    };
    for i in 1..d {
        let open: Vec<usize> = order[..i].iter().copied().filter(|&u| adj[u].len() < 3 && may_branch(&adj, u)).collect();
        let &u = open.choose(rng)?;
        let v = order[i];
        edges.push((u, v));
        adj[u].push(v);
        adj[v].push(u);
    }
    for _ in 0..g {
        let mut cands = Vec::new();
        for u in 0..d {
            if adj[u].len() >= 3 || !may_branch(&adj, u) {
                continue;
            }
            let dist = bfs(&adj, u);
            for v in u + 1..d {
                if adj[v].len() < 3 && dist[v].is_some_and(|x| x >= 3) && may_branch(&adj, v) {
                    cands.push((u, v));
                }
            }
        }
        let &(u, v) = cands.choose(rng)?;
        edges.push((u, v));
        adj[u].push(v);
        adj[v].push(u);
    }
    Graph::new(d, &edges).ok()
}

fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[s] = Some(0);
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(dist[u].unwrap() + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn generate_family(family: &Family) -> Result<Vec<Graph>, GraphError> {
    Ok(vec![match *family {
        Family::Cycle(m) => cycle(m)?,
        Family::Path(d) => path(d)?,
        Family::SubdividedK4(s) => subdivided_k4(s)?,
        Family::RandomValid { d, g, seed } => random_valid(d, g, seed)?,
    }])
}
