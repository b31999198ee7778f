//! Graded Betti diagrams and the invariants read off them.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Table of `β_{i,j}` for a graded module, usually `S/I`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiDiagram {
    entries: BTreeMap<(usize, u32), u64>,
    complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub betti: Vec<(usize, u32, u64)>,
    pub regularity: Option<i64>,
    pub pd: Option<usize>,
    pub acm: Option<bool>,
    pub complete: bool,
}

/// Derived homological data. `codim` and `acm` need the dimension of the
/// scheme, which the diagram alone does not know.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologicalSummary {
    /// `reg(S/I) = max(j - i)`.
    pub regularity: i64,
    pub projective_dimension: usize,
    pub codimension: usize,
    pub is_acm: bool,
    /// `N_{k,p}` for `k = 2, 3` and `p` from 1 to the projective dimension.
    pub nkp: Vec<NkpEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NkpEntry {
    pub k: u32,
    pub p: usize,
    pub holds: bool,
}

impl BettiDiagram {
    pub fn new(entries: BTreeMap<(usize, u32), u64>, complete: bool) -> Self {
        let entries = entries.into_iter().filter(|&(_, v)| v != 0).collect();
        BettiDiagram { entries, complete }
    }

    /// Builds a complete diagram from `(i, j, β)` triples.
    pub fn from_triples(triples: &[(usize, u32, u64)]) -> Self {
        let mut m = BTreeMap::new();
        for &(i, j, b) in triples {
            *m.entry((i, j)).or_insert(0) += b;
        }
        Self::new(m, true)
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Entry in the printed layout: column `i`, row `j - i`.
    pub fn at_row(&self, i: usize, row: u32) -> u64 {
        self.get(i, i as u32 + row)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// `Σ_j β_{i,j}` for `i = 0..=pd`.
    pub fn totals(&self) -> Vec<u64> {
        let Some(pd) = self.max_i() else { return Vec::new() };
        (0..=pd).map(|i| self.entries().filter(|e| e.0 == i).map(|e| e.2).sum()).collect()
    }

    /// Entries of one printed row, indexed by `i`.
    pub fn row(&self, row: u32) -> Vec<u64> {
        let Some(pd) = self.max_i() else { return Vec::new() };
        (0..=pd).map(|i| self.at_row(i, row)).collect()
    }

    fn max_i(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    pub fn projective_dimension(&self) -> usize {
        self.max_i().unwrap_or(0)
    }

    /// `max(j - i)`; the regularity of the module (for `S/I`, one less than
    /// that of `I`).
    pub fn regularity(&self) -> i64 {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max().unwrap_or(0)
    }

    /// `N_{k,p}`: for `1 <= i <= p`, every nonzero `β_{i,j}` has `j = i + k - 1`.
    pub fn check_nkp(&self, k: u32, p: usize) -> bool {
        self.entries
            .keys()
            .all(|&(i, j)| i == 0 || i > p || j as i64 == i as i64 + k as i64 - 1)
    }

    /// Largest `p` with `N_{k,p}` (possibly the projective dimension).
    pub fn nkp_index(&self, k: u32) -> usize {
        let pd = self.projective_dimension();
        (0..=pd).take_while(|&p| self.check_nkp(k, p)).last().unwrap_or(0)
    }

    /// Alternating sum `Σ (-1)^i β_{i,j} t^j`, lowest degree first.
    pub fn euler_polynomial(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|k| k.1).max().unwrap_or(0) as usize;
        let mut out = vec![0i64; top + 1];
        for (i, j, b) in self.entries() {
            let s = if i % 2 == 0 { 1 } else { -1 };
            out[j as usize] += s * b as i64;
        }
        out
    }

    /// Compares the Euler polynomial with a Hilbert series numerator.
    pub fn euler_matches(&self, numerator: &[i64]) -> bool {
        let e = self.euler_polynomial();
        let n = e.len().max(numerator.len());
        (0..n).all(|k| e.get(k).copied().unwrap_or(0) == numerator.get(k).copied().unwrap_or(0))
    }

    /// Summary given the ambient number of variables and the projective
    /// dimension of the scheme.
    pub fn summarize(&self, nvars: usize, scheme_dim: i64) -> Option<HomologicalSummary> {
        if !self.complete {
            return None;
        }
        let pd = self.projective_dimension();
        let codimension = (nvars as i64 - 1 - scheme_dim).max(0) as usize;
        let mut nkp = Vec::new();
        for k in [2u32, 3] {
            for p in 1..=pd {
                nkp.push(NkpEntry { k, p, holds: self.check_nkp(k, p) });
            }
        }
        Some(HomologicalSummary {
            regularity: self.regularity(),
            projective_dimension: pd,
            codimension,
            is_acm: pd == codimension,
            nkp,
        })
    }

    pub fn to_json(&self, summary: Option<&HomologicalSummary>) -> BettiJson {
        BettiJson {
            betti: self.entries().collect(),
            regularity: summary.map(|s| s.regularity),
            pd: summary.map(|s| s.projective_dimension),
            acm: summary.map(|s| s.is_acm),
            complete: self.complete,
        }
    }

    pub fn from_json(j: &BettiJson) -> Self {
        let mut d = Self::from_triples(&j.betti);
        d.complete = j.complete;
        d
    }
}

impl fmt::Display for BettiDiagram {
    /// Columns are homological degrees, rows are `j - i`, zeros are dots.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(pd) = self.max_i() else {
            return writeln!(f, "total:");
        };
        let reg = self.regularity().max(0) as u32;
        let mut table: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..=pd).map(|i| i.to_string()));
        table.push(header);
        let mut tot = vec!["total:".to_string()];
        tot.extend(self.totals().iter().map(|t| t.to_string()));
        table.push(tot);
        for r in 0..=reg {
            let mut line = vec![format!("{r}:")];
            line.extend((0..=pd).map(|i| match self.at_row(i, r) {
                0 => ".".to_string(),
                b => b.to_string(),
            }));
            table.push(line);
        }
        let ncols = pd + 2;
        let widths: Vec<usize> = (0..ncols).map(|c| table.iter().map(|l| l[c].len()).max().unwrap()).collect();
        for line in &table {
            let mut s = String::new();
            for (c, cell) in line.iter().enumerate() {
                if c > 0 {
                    s.push(' ');
                }
                s.push_str(&format!("{cell:>w$}", w = widths[c]));
            }
            writeln!(f, "{}", s.trim_end())?;
        }
        if !self.complete {
            writeln!(f, "(incomplete)")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve_44() -> BettiDiagram {
        let mut t = vec![(0, 0, 1)];
        for (i, b) in [26, 98, 168, 154, 70, 8].into_iter().enumerate() {
            t.push((i + 1, i as u32 + 2, b));
        }
        for (i, b) in [(5, 2), (6, 7), (7, 2)] {
            t.push((i, i as u32 + 2, b));
        }
        BettiDiagram::from_triples(&t)
    }

    #[test]
    fn layout() {
        let b = curve_44();
        let text = b.to_string();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "       0  1  2   3   4  5  6 7");
        assert_eq!(lines[1], "total: 1 26 98 168 154 72 15 2");
        assert_eq!(lines[2], "    0: 1  .  .   .   .  .  . .");
        assert_eq!(lines[4], "    2: .  .  .   .   .  2  7 2");
    }

    #[test]
    fn invariants() {
        let b = curve_44();
        assert_eq!(b.totals(), vec![1, 26, 98, 168, 154, 72, 15, 2]);
        assert_eq!(b.regularity(), 2);
        assert_eq!(b.projective_dimension(), 7);
        assert!(b.check_nkp(2, 4));
        assert!(!b.check_nkp(2, 5));
        assert_eq!(b.nkp_index(2), 4);
        let s = b.summarize(10, 1).unwrap();
        assert_eq!(s.codimension, 8);
        assert!(!s.is_acm);
        let s = b.summarize(9, 1).unwrap();
        assert!(s.is_acm);
        // Rank alternating sum vanishes for a positive-dimensional quotient.
        assert_eq!(b.euler_polynomial().iter().sum::<i64>(), 0);
    }

    #[test]
    fn json_round_trip() {
        let b = curve_44();
        let j = b.to_json(None);
        let s = serde_json::to_string(&j).unwrap();
        let back: BettiJson = serde_json::from_str(&s).unwrap();
        assert_eq!(BettiDiagram::from_json(&back), b);
    }
}
