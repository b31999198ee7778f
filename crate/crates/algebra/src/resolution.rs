//! Graded free resolutions of `S/I` via Schreyer frames.
//!
//! Level `k` holds the basis of `F_k`. Each element `ε_p` has a leading term
//! `m_p ε_c` in `F_{k-1}` and a total monomial `M_p = m_p M_c` in `S`. `F_k`
//! is ordered by `(M · a, index)` under grevlex; elements of a level are kept
//! sorted by leading component so this agrees with the induced order.
//!
//! The resolution is usually not minimal. Graded Betti numbers come from the
//! ranks of the constant parts of the differentials; [`Resolution::minimize`]
//! performs the unit cancellations explicitly.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};

use crate::betti::BettiDiagram;
use crate::error::AlgebraError;
use crate::groebner::groebner_basis;
use crate::ideal::Ideal;
use crate::linalg::Matrix;
use crate::monomial::{Grevlex, Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring};

/// A term `c · a ε_r` stored by its total monomial `T = a M_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VecTerm {
    pub total: Monomial,
    pub comp: usize,
    pub coeff: u32,
}

#[derive(Clone, Debug, Default)]
pub struct Level {
    pub lead_comp: Vec<usize>,
    pub lead_mon: Vec<Monomial>,
    pub total: Vec<Monomial>,
    /// `d(ε_p)`, sorted descending.
    pub diff: Vec<Vec<VecTerm>>,
}

impl Level {
    pub fn len(&self) -> usize {
        self.total.len()
    }

    pub fn is_empty(&self) -> bool {
        self.total.is_empty()
    }

    pub fn degree(&self, p: usize) -> u32 {
        self.total[p].degree()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ResolutionLimits<'a> {
    /// Stop after computing `F_max_level`.
    pub max_level: Option<usize>,
    /// Cap on the total number of basis elements over all levels.
    pub max_elements: Option<usize>,
    pub cancel: Option<&'a AtomicBool>,
}

/// A (generally non-minimal) graded free resolution of `S/I`.
#[derive(Clone, Debug)]
pub struct Resolution {
    ring: Ring,
    /// `levels[0]` is `F_0 = S`.
    levels: Vec<Level>,
    complete: bool,
}

impl Resolution {
    pub fn compute(ideal: &Ideal) -> Result<Self, AlgebraError> {
        Self::compute_with(ideal, ResolutionLimits::default())
    }

    /// Hitting a limit yields a resolution marked incomplete; only a
    /// non-homogeneous input is an error.
    pub fn compute_with(ideal: &Ideal, limits: ResolutionLimits<'_>) -> Result<Self, AlgebraError> {
        if !ideal.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous);
        }
        let ring = ideal.ring().with_order(MonomialOrder::Grevlex)?;
        let n = ring.nvars();
        let gb = if ideal.ring().order() == MonomialOrder::Grevlex {
            ideal.gb().clone()
        } else {
            groebner_basis(&ring, ideal.generators())
        };

        let mut levels = vec![Level {
            lead_comp: vec![0],
            lead_mon: vec![Monomial::one()],
            total: vec![Monomial::one()],
            diff: vec![Vec::new()],
        }];

        let mut first = Level::default();
        for g in gb.polys() {
            let lm = g.terms()[0].0;
            first.lead_comp.push(0);
            first.lead_mon.push(lm);
            first.total.push(lm);
            first.diff.push(
                g.terms()
                    .iter()
                    .map(|&(m, c)| VecTerm { total: m, comp: 0, coeff: c })
                    .collect(),
            );
        }
        let sort_var = n.saturating_sub(1);
        sort_level(&mut first, sort_var);
        let mut count = 1 + first.len();
        let mut complete = true;
        if !first.is_empty() {
            levels.push(first);
            let mut k = 1;
            loop {
                if limits.max_level.is_some_and(|m| k >= m) {
                    complete = false;
                    break;
                }
                if let Some(flag) = limits.cancel {
                    if flag.load(AtomicOrdering::Relaxed) {
                        complete = false;
                        break;
                    }
                }
                let var = n.saturating_sub(k + 1);
                let next = match next_level(&ring, &levels[k], var, &limits, count) {
                    Some(l) => l,
                    None => {
                        complete = false;
                        break;
                    }
                };
                if next.is_empty() {
                    break;
                }
                count += next.len();
                levels.push(next);
                k += 1;
            }
        }
        Ok(Resolution { ring, levels, complete })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Length of the computed (non-minimal) complex.
    pub fn length(&self) -> usize {
        self.levels.len() - 1
    }

    /// `(i, j) -> rank` of the non-minimal modules.
    pub fn ranks(&self) -> BTreeMap<(usize, u32), u64> {
        let mut out = BTreeMap::new();
        for (i, l) in self.levels.iter().enumerate() {
            for p in 0..l.len() {
                *out.entry((i, l.degree(p))).or_insert(0) += 1;
            }
        }
        out
    }

    /// Rank of the constant part of `d_k` in internal degree `j`.
    fn constant_rank(&self, k: usize, j: u32) -> usize {
        if k == 0 || k >= self.levels.len() {
            return 0;
        }
        let cols: Vec<usize> = (0..self.levels[k].len()).filter(|&p| self.levels[k].degree(p) == j).collect();
        let rows: Vec<usize> = (0..self.levels[k - 1].len())
            .filter(|&r| self.levels[k - 1].degree(r) == j)
            .collect();
        if cols.is_empty() || rows.is_empty() {
            return 0;
        }
        let row_idx: HashMap<usize, usize> = rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let mut m = Matrix::zeros(cols.len(), rows.len());
        let mut any = false;
        for (ci, &p) in cols.iter().enumerate() {
            for t in &self.levels[k].diff[p] {
                if let Some(&ri) = row_idx.get(&t.comp) {
                    m.set(ci, ri, t.coeff);
                    any = true;
                }
            }
        }
        if !any {
            return 0;
        }
        m.rank(self.ring.field())
    }

    /// Minimal graded Betti numbers of `S/I`.
    pub fn betti(&self) -> BettiDiagram {
        let ranks = self.ranks();
        let mut entries = BTreeMap::new();
        for (&(i, j), &f) in &ranks {
            let b = f as i64 - self.constant_rank(i, j) as i64 - self.constant_rank(i + 1, j) as i64;
            debug_assert!(b >= 0);
            if b > 0 {
                entries.insert((i, j), b as u64);
            }
        }
        BettiDiagram::new(entries, self.complete)
    }

    /// The differential `d_k` as sparse columns of polynomials.
    pub fn differential(&self, k: usize) -> Vec<BTreeMap<usize, Polynomial>> {
        let ring = &self.ring;
        let prev = &self.levels[k - 1];
        self.levels[k]
            .diff
            .iter()
            .map(|terms| {
                let mut col: BTreeMap<usize, Vec<(Monomial, u32)>> = BTreeMap::new();
                for t in terms {
                    let a = prev.total[t.comp].quotient_of(&t.total);
                    col.entry(t.comp).or_default().push((a, t.coeff));
                }
                col.into_iter().map(|(r, ts)| (r, ring.from_terms(ts))).collect()
            })
            .collect()
    }

    /// Explicit minimalization by cancelling unit entries.
    pub fn minimize(&self) -> MinimalResolution {
        let ring = self.ring;
        let fld = *ring.field();
        let len = self.length();
        let mut degrees: Vec<Vec<u32>> = self.levels.iter().map(|l| (0..l.len()).map(|p| l.degree(p)).collect()).collect();
        let mut alive: Vec<Vec<bool>> = self.levels.iter().map(|l| vec![true; l.len()]).collect();
        // d[k][col] = sparse column over rows of level k-1.
        let mut d: Vec<Vec<BTreeMap<usize, Polynomial>>> = vec![Vec::new()];
        for k in 1..=len {
            d.push(self.differential(k));
        }
        for k in 1..=len {
            // Row index: row -> columns with an entry there.
            let mut rows: HashMap<usize, Vec<usize>> = HashMap::new();
            for (c, col) in d[k].iter().enumerate() {
                for &r in col.keys() {
                    rows.entry(r).or_default().push(c);
                }
            }
            loop {
                let found = (0..d[k].len()).filter(|&c| alive[k][c]).find_map(|c| {
                    d[k][c].iter().find(|(_, f)| f.is_constant()).map(|(&r, f)| (c, r, f.lead_coeff()))
                });
                let Some((c, r, u)) = found else { break };
                let pivot_col = d[k][c].clone();
                let inv = fld.inv(u);
                let others: Vec<usize> = rows.get(&r).cloned().unwrap_or_default();
                for j in others {
                    if j == c || !alive[k][j] {
                        continue;
                    }
                    let Some(a) = d[k][j].get(&r).cloned() else { continue };
                    let factor = ring.scale(&a, fld.neg(inv));
                    for (&rr, f) in &pivot_col {
                        let add = ring.mul(&factor, f);
                        let entry = d[k][j].entry(rr).or_insert_with(Polynomial::zero);
                        *entry = ring.add(entry, &add);
                        if entry.is_zero() {
                            d[k][j].remove(&rr);
                        } else {
                            let list = rows.entry(rr).or_default();
                            if !list.contains(&j) {
                                list.push(j);
                            }
                        }
                    }
                    debug_assert!(!d[k][j].contains_key(&r));
                }
                alive[k][c] = false;
                alive[k - 1][r] = false;
                d[k][c].clear();
                if k < len {
                    for col in d[k + 1].iter_mut() {
                        col.remove(&c);
                    }
                }
                if k > 1 {
                    d[k - 1][r].clear();
                }
            }
        }
        // Renumber survivors.
        let maps: Vec<HashMap<usize, usize>> = alive
            .iter()
            .map(|a| a.iter().enumerate().filter(|(_, &x)| x).enumerate().map(|(new, (old, _))| (old, new)).collect())
            .collect();
        let mut diffs = vec![Vec::new()];
        for k in 1..=len {
            let cols: Vec<BTreeMap<usize, Polynomial>> = (0..d[k].len())
                .filter(|&c| alive[k][c])
                .map(|c| d[k][c].iter().map(|(r, f)| (maps[k - 1][r], f.clone())).collect())
                .collect();
            diffs.push(cols);
        }
        for k in 0..degrees.len() {
            let a = &alive[k];
            let mut i = 0;
            degrees[k].retain(|_| {
                i += 1;
                a[i - 1]
            });
        }
        while degrees.len() > 1 && degrees.last().unwrap().is_empty() {
            degrees.pop();
            diffs.pop();
        }
        MinimalResolution { ring, degrees, diffs }
    }
}

fn sort_level(level: &mut Level, var: usize) {
    let mut idx: Vec<usize> = (0..level.len()).collect();
    idx.sort_by(|&a, &b| {
        level.lead_comp[a]
            .cmp(&level.lead_comp[b])
            .then_with(|| level.lead_mon[a].exponent(var).cmp(&level.lead_mon[b].exponent(var)))
            .then_with(|| level.lead_mon[a].cmp_grevlex(&level.lead_mon[b]))
    });
    let lead_comp = permute(&level.lead_comp, &idx);
    let lead_mon = permute(&level.lead_mon, &idx);
    let total = permute(&level.total, &idx);
    let diff = idx.iter().map(|&i| std::mem::take(&mut level.diff[i])).collect();
    *level = Level { lead_comp, lead_mon, total, diff };
}

fn permute<T: Copy>(v: &[T], idx: &[usize]) -> Vec<T> {
    idx.iter().map(|&i| v[i]).collect()
}

type Key = (Grevlex, usize);

/// Builds `F_{k+1}` from level `k`.
fn next_level(
    ring: &Ring,
    cur: &Level,
    var: usize,
    limits: &ResolutionLimits<'_>,
    count: usize,
) -> Option<Level> {
    let fld = *ring.field();
    // Elements of `cur` grouped by leading component.
    let mut by_comp: HashMap<usize, Vec<usize>> = HashMap::new();
    for p in 0..cur.len() {
        by_comp.entry(cur.lead_comp[p]).or_default().push(p);
    }

    // Frame: minimal leads u ε_p from pairs q < p with a common component.
    let mut frame: Vec<(usize, Monomial, usize)> = Vec::new();
    for p in 0..cur.len() {
        let mp = cur.lead_mon[p];
        let mut cands: Vec<(Monomial, usize)> = by_comp[&cur.lead_comp[p]]
            .iter()
            .take_while(|&&q| q < p)
            .map(|&q| {
                let mq = cur.lead_mon[q];
                (mq.colon(&mp), q)
            })
            .collect();
        cands.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.cmp_grevlex(&b.0)));
        let mut kept: Vec<Monomial> = Vec::new();
        for (u, q) in cands {
            if kept.iter().any(|k| k.divides(&u)) {
                continue;
            }
            kept.push(u);
            frame.push((p, u, q));
        }
    }
    if let Some(max) = limits.max_elements {
        if count + frame.len() > max {
            return None;
        }
    }

    // Divisor lookup for reductions in F_k: component -> [(M_j, j)].
    let mut reducers: HashMap<usize, Vec<(Monomial, usize)>> = HashMap::new();
    for j in 0..cur.len() {
        reducers.entry(cur.lead_comp[j]).or_default().push((cur.total[j], j));
    }

    let mut out = Level::default();
    for (p, u, q) in frame {
        if let Some(flag) = limits.cancel {
            if flag.load(AtomicOrdering::Relaxed) {
                return None;
            }
        }
        let mq = cur.lead_mon[q];
        let mp = cur.lead_mon[p];
        let uq = mq.quotient_of(&mq.lcm(&mp));
        let mut v: BTreeMap<Key, u32> = BTreeMap::new();
        add_scaled(&mut v, &cur.diff[p], &u, 1, &fld);
        add_scaled(&mut v, &cur.diff[q], &uq, fld.neg(1), &fld);

        let mut syz: BTreeMap<Key, u32> = BTreeMap::new();
        let up = u.mul(&cur.total[p]);
        syz.insert((Grevlex(up), p), 1);
        *syz.entry((Grevlex(uq.mul(&cur.total[q])), q)).or_insert(0) = fld.neg(1);

        while let Some((&(Grevlex(t), r), &c)) = v.iter().next_back() {
            let (mj, j) = *reducers
                .get(&r)
                .and_then(|list| list.iter().find(|(m, _)| m.divides(&t)))
                .expect("Schreyer reduction must reach zero");
            let w = mj.quotient_of(&t);
            let lc = cur.diff[j][0].coeff;
            let coef = fld.div(c, lc);
            add_scaled(&mut v, &cur.diff[j], &w, fld.neg(coef), &fld);
            debug_assert!(!v.contains_key(&(Grevlex(t), r)));
            let e = syz.entry((Grevlex(w.mul(&cur.total[j])), j)).or_insert(0);
            *e = fld.sub(*e, coef);
            if *e == 0 {
                syz.remove(&(Grevlex(w.mul(&cur.total[j])), j));
            }
        }

        let terms: Vec<VecTerm> = syz
            .into_iter()
            .rev()
            .map(|((Grevlex(total), comp), coeff)| VecTerm { total, comp, coeff })
            .collect();
        debug_assert_eq!(terms[0].comp, p);
        debug_assert_eq!(terms[0].total, up);
        out.lead_comp.push(p);
        out.lead_mon.push(u);
        out.total.push(up);
        out.diff.push(terms);
    }
    sort_level(&mut out, var);
    Some(out)
}

fn add_scaled(v: &mut BTreeMap<Key, u32>, terms: &[VecTerm], w: &Monomial, c: u32, fld: &crate::field::PrimeField) {
    for t in terms {
        let key = (Grevlex(t.total.mul(w)), t.comp);
        let add = fld.mul(t.coeff, c);
        match v.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(add);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = fld.add(*e.get(), add);
                if s == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }
}

/// A minimal free resolution after explicit unit cancellation.
#[derive(Clone, Debug)]
pub struct MinimalResolution {
    ring: Ring,
    /// Generator degrees of each `F_i`.
    pub degrees: Vec<Vec<u32>>,
    /// `diffs[k]` maps `F_k -> F_{k-1}` as sparse columns; `diffs[0]` is empty.
    pub diffs: Vec<Vec<BTreeMap<usize, Polynomial>>>,
}

impl MinimalResolution {
    pub fn betti(&self) -> BettiDiagram {
        let mut entries = BTreeMap::new();
        for (i, ds) in self.degrees.iter().enumerate() {
            for &j in ds {
                *entries.entry((i, j)).or_insert(0) += 1;
            }
        }
        BettiDiagram::new(entries, true)
    }

    /// No nonzero constant entry in any differential.
    pub fn is_minimal(&self) -> bool {
        self.diffs.iter().flatten().all(|col| col.values().all(|f| !f.is_constant()))
    }

    /// `d_k ∘ d_{k+1} = 0` for all `k`.
    pub fn is_complex(&self) -> bool {
        let ring = &self.ring;
        for k in 1..self.diffs.len().saturating_sub(1) {
            for col in &self.diffs[k + 1] {
                let mut acc: BTreeMap<usize, Polynomial> = BTreeMap::new();
                for (&mid, f) in col {
                    for (&row, g) in &self.diffs[k][mid] {
                        let e = acc.entry(row).or_insert_with(Polynomial::zero);
                        *e = ring.add(e, &ring.mul(f, g));
                    }
                }
                if acc.values().any(|p| !p.is_zero()) {
                    return false;
                }
            }
        }
        true
    }

    /// Every entry is homogeneous of the degree difference it maps across.
    pub fn is_graded(&self) -> bool {
        for k in 1..self.diffs.len() {
            for (c, col) in self.diffs[k].iter().enumerate() {
                for (&r, f) in col {
                    let want = self.degrees[k][c] as i64 - self.degrees[k - 1][r] as i64;
                    if !f.is_homogeneous() || f.degree().map(|d| d as i64) != Some(want) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Convenience: the Betti diagram of `S/I`.
pub fn betti_diagram(ideal: &Ideal) -> Result<BettiDiagram, AlgebraError> {
    Ok(Resolution::compute(ideal)?.betti())
}
