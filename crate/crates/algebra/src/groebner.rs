//! Buchberger's algorithm with the Gebauer-Moeller pair criteria and sugar
//! selection, producing reduced Groebner bases.

use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};

use crate::error::AlgebraError;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring, Term};

/// Optional guardrails for long computations.
#[derive(Clone, Copy, Default, Debug)]
pub struct GbLimits<'a> {
    pub cancel: Option<&'a AtomicBool>,
    pub max_basis: Option<usize>,
}

/// A reduced Groebner basis, sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    polys: Vec<Polynomial>,
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Divisor lookup over leading monomials.
struct LeadTable {
    leads: Vec<(Monomial, usize)>,
}

impl LeadTable {
    fn new() -> Self {
        LeadTable { leads: Vec::new() }
    }

    fn push(&mut self, m: Monomial, idx: usize) {
        self.leads.push((m, idx));
    }

    fn retain(&mut self, keep: impl Fn(usize) -> bool) {
        self.leads.retain(|&(_, i)| keep(i));
    }

    #[inline]
    fn find(&self, m: &Monomial) -> Option<usize> {
        self.leads.iter().find(|(l, _)| l.divides(m)).map(|&(_, i)| i)
    }
}

/// Full normal form of `f` with respect to the polynomials indexed by `table`.
fn reduce_with(ring: &Ring, f: &Polynomial, polys: &[Polynomial], table: &LeadTable) -> Polynomial {
    let fld = ring.field();
    let mut rest: Vec<Term> = f.terms().to_vec();
    let mut start = 0;
    let mut out: Vec<Term> = Vec::new();
    while start < rest.len() {
        let (m, c) = rest[start];
        match table.find(&m) {
            Some(idx) => {
                let g = &polys[idx];
                let (gl, gc) = g.terms()[0];
                let q = gl.quotient_of(&m);
                let coef = fld.neg(fld.div(c, gc));
                rest = ring.combine_slices(&rest[start + 1..], coef, &q, &g.terms()[1..], true);
                start = 0;
            }
            None => {
                out.push((m, c));
                start += 1;
            }
        }
    }
    Polynomial::from_sorted(out)
}

/// Normal form of `f` modulo an arbitrary list of polynomials (division
/// algorithm; the result is unique only when `divisors` is a Groebner basis).
pub fn normal_form(ring: &Ring, f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let mut table = LeadTable::new();
    for (i, g) in divisors.iter().enumerate() {
        if let Some(m) = g.lead_monomial() {
            table.push(m, i);
        }
    }
    reduce_with(ring, f, divisors, &table)
}

/// S-polynomial of two nonzero polynomials.
pub fn s_polynomial(ring: &Ring, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let fld = ring.field();
    let (fm, fc) = f.terms()[0];
    let (gm, gc) = g.terms()[0];
    let l = fm.lcm(&gm);
    let a = ring.mul_term(f, &fm.quotient_of(&l), fld.inv(fc));
    ring.add_mul_term(&a, fld.neg(fld.inv(gc)), &gm.quotient_of(&l), g)
}

/// Reduced Groebner basis with no limits.
pub fn groebner_basis(ring: &Ring, gens: &[Polynomial]) -> GroebnerBasis {
    groebner_basis_with(ring, gens, GbLimits::default()).expect("unlimited computation cannot fail")
}

pub fn groebner_basis_with(ring: &Ring, gens: &[Polynomial], limits: GbLimits<'_>) -> Result<GroebnerBasis, AlgebraError> {
    let mut state = Buchberger::new(ring);
    let mut inputs: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| ring.make_monic(g)).collect();
    inputs.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| ring.cmp(&a.terms()[0].0, &b.terms()[0].0))
    });
    for g in inputs {
        state.check(&limits)?;
        let h = reduce_with(ring, &g, &state.polys, &state.table);
        if !h.is_zero() {
            let sugar = g.degree().unwrap_or(0);
            state.insert(ring.make_monic(&h), sugar);
        }
    }
    while let Some(pair) = state.next_pair() {
        state.check(&limits)?;
        let s = s_polynomial(ring, &state.polys[pair.i], &state.polys[pair.j]);
        let h = reduce_with(ring, &s, &state.polys, &state.table);
        if !h.is_zero() {
            state.insert(ring.make_monic(&h), pair.sugar);
        }
    }
    Ok(state.finish())
}

struct Buchberger<'r> {
    ring: &'r Ring,
    polys: Vec<Polynomial>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    table: LeadTable,
    pairs: Vec<Pair>,
}

impl<'r> Buchberger<'r> {
    fn new(ring: &'r Ring) -> Self {
        Buchberger {
            ring,
            polys: Vec::new(),
            sugar: Vec::new(),
            active: Vec::new(),
            table: LeadTable::new(),
            pairs: Vec::new(),
        }
    }

    fn check(&self, limits: &GbLimits<'_>) -> Result<(), AlgebraError> {
        if let Some(flag) = limits.cancel {
            if flag.load(AtomicOrdering::Relaxed) {
                return Err(AlgebraError::Cancelled);
            }
        }
        if let Some(max) = limits.max_basis {
            if self.polys.len() > max {
                return Err(AlgebraError::LimitExceeded(format!(
                    "Groebner basis grew past {max} elements"
                )));
            }
        }
        Ok(())
    }

    fn lead(&self, i: usize) -> Monomial {
        self.polys[i].terms()[0].0
    }

    fn next_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ring = self.ring;
        let best = (0..self.pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&self.pairs[a], &self.pairs[b]);
                p.sugar
                    .cmp(&q.sugar)
                    .then_with(|| ring.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)))
            })
            .unwrap();
        Some(self.pairs.swap_remove(best))
    }

    /// Gebauer-Moeller update for a new basis element.
    fn insert(&mut self, h: Polynomial, sugar: u32) {
        let t = self.polys.len();
        let hl = h.terms()[0].0;
        let hdeg = hl.degree();
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(true);

        let candidates: Vec<Pair> = (0..t)
            .filter(|&i| self.active[i])
            .map(|i| {
                let gl = self.lead(i);
                let lcm = gl.lcm(&hl);
                let s = (self.sugar[i] + lcm.degree() - gl.degree()).max(sugar + lcm.degree() - hdeg);
                Pair { i, j: t, lcm, sugar: s }
            })
            .collect();

        // Chain criterion among the new pairs; coprime pairs are kept for now
        // so they can shadow others, and dropped afterwards.
        let mut kept: Vec<Pair> = Vec::new();
        for (k, p) in candidates.iter().enumerate() {
            let coprime = self.lead(p.i).is_coprime(&hl);
            let shadowed = candidates[k + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
                || kept.iter().any(|q| q.lcm.divides(&p.lcm));
            if coprime || !shadowed {
                kept.push(*p);
            }
        }
        kept.retain(|p| !self.lead(p.i).is_coprime(&hl));

        // Old pairs made redundant by the new leading term.
        let old = std::mem::take(&mut self.pairs);
        for p in old {
            let li = self.lead(p.i);
            let lj = self.lead(p.j);
            let redundant = hl.divides(&p.lcm) && li.lcm(&hl) != p.lcm && lj.lcm(&hl) != p.lcm;
            if !redundant {
                self.pairs.push(p);
            }
        }
        self.pairs.extend(kept);

        for i in 0..t {
            if self.active[i] && hl.divides(&self.lead(i)) {
                self.active[i] = false;
            }
        }
        let active = &self.active;
        self.table.retain(|i| active[i]);
        self.table.push(hl, t);
    }

    fn finish(self) -> GroebnerBasis {
        let ring = self.ring;
        let mut basis: Vec<Polynomial> = self
            .polys
            .into_iter()
            .zip(self.active)
            .filter(|(_, a)| *a)
            .map(|(p, _)| p)
            .collect();
        basis.sort_by(|a, b| ring.cmp(&a.terms()[0].0, &b.terms()[0].0));
        // Tail reduction: the leading terms are already minimal.
        for i in 0..basis.len() {
            let mut table = LeadTable::new();
            for (j, g) in basis.iter().enumerate() {
                if j != i {
                    table.push(g.terms()[0].0, j);
                }
            }
            let f = &basis[i];
            let tail = Polynomial::from_sorted(f.terms()[1..].to_vec());
            let tail = reduce_with(ring, &tail, &basis, &table);
            let mut terms = vec![f.terms()[0]];
            terms.extend_from_slice(tail.terms());
            basis[i] = Polynomial::from_sorted(terms);
        }
        GroebnerBasis { ring: *ring, polys: basis }
    }
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// The unit ideal has basis `{1}`.
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.terms()[0].0).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(&self.ring, f, &self.polys)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Exhaustive Buchberger criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let n = self.polys.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let s = s_polynomial(&self.ring, &self.polys[i], &self.polys[j]);
                self.normal_form(&s).is_zero()
            })
        })
    }

    /// Reducedness: monic, and no term of any element is divisible by another
    /// element's leading monomial.
    pub fn is_reduced(&self) -> bool {
        let leads = self.leading_monomials();
        self.polys.iter().enumerate().all(|(i, p)| {
            p.lead_coeff() == 1
                && p.terms().iter().all(|(m, _)| {
                    leads
                        .iter()
                        .enumerate()
                        .all(|(j, l)| j == i || !l.divides(m))
                })
        })
    }

    /// Elements of degree exactly `d`.
    pub fn in_degree(&self, d: u32) -> Vec<&Polynomial> {
        self.polys.iter().filter(|p| p.degree() == Some(d)).collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.polys.iter().filter_map(|p| p.degree()).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;

    fn ring(n: usize) -> Ring {
        Ring::grevlex(n).unwrap()
    }

    fn polys(r: &Ring, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|t| parse_polynomial(r, t).unwrap()).collect()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring(3);
        let g = polys(&r, &["x0*x1", "x1*x2"]);
        let gb = groebner_basis(&r, &g);
        assert_eq!(gb.len(), 2);
        assert!(gb.contains(&g[0]) && gb.contains(&g[1]));
        assert!(gb.is_reduced());
    }

    #[test]
    fn linear_binomials_row_reduce() {
        let r = ring(3);
        let gb = groebner_basis(&r, &polys(&r, &["x0 - x1", "x1 - x2"]));
        // Row reduction oracle: the reduced echelon form of
        // [1 -1 0; 0 1 -1] is [1 0 -1; 0 1 -1].
        let expect = polys(&r, &["x1 - x2", "x0 - x2"]);
        assert_eq!(gb.polys(), &expect[..]);
    }

    #[test]
    fn twisted_cubic() {
        let r = ring(4);
        let g = polys(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        let gb = groebner_basis(&r, &g);
        assert!(gb.satisfies_buchberger_criterion());
        assert!(gb.is_reduced());
        assert_eq!(gb.len(), 3);
    }

    #[test]
    fn inhomogeneous_and_unit() {
        let r = ring(2);
        let gb = groebner_basis(&r, &polys(&r, &["x0^2 - 1", "x0*x1 - 1", "x1 - 2"]));
        assert!(gb.is_unit());
        let gb = groebner_basis(&r, &polys(&r, &["x0^3 - x1", "x0*x1 - 1"]));
        assert!(gb.satisfies_buchberger_criterion());
    }

    #[test]
    fn basis_is_idempotent() {
        let r = ring(4);
        let g = polys(&r, &["x0*x1 - x2*x3", "x1^2 - x0*x3", "x2^2 + x0*x1 - x3^2"]);
        let gb = groebner_basis(&r, &g);
        let again = groebner_basis(&r, gb.polys());
        assert_eq!(gb, again);
        assert!(gb.satisfies_buchberger_criterion());
    }

    #[test]
    fn cancellation_is_honoured() {
        let r = ring(3);
        let flag = AtomicBool::new(true);
        let res = groebner_basis_with(
            &r,
            &polys(&r, &["x0*x1 - x2^2", "x1^2 - x0*x2"]),
            GbLimits { cancel: Some(&flag), max_basis: None },
        );
        assert_eq!(res, Err(AlgebraError::Cancelled));
    }
}
