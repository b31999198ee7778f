//! Sparse multivariate polynomials over a prime field.
//!
//! A [`Polynomial`] is a list of `(monomial, coefficient)` pairs with nonzero
//! coefficients, sorted strictly decreasing in the monomial order of the
//! [`Ring`] that built it. Polynomials carry no ring pointer; every operation
//! that depends on the order or the field goes through the ring.

use std::cmp::Ordering;

use crate::error::AlgebraError;
use crate::field::PrimeField;
use crate::monomial::{Monomial, MonomialOrder, MAX_VARS};

pub type Term = (Monomial, u32);

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    /// Wraps terms that are already sorted and nonzero.
    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn lead_coeff(&self) -> u32 {
        self.terms.first().map_or(0, |t| t.1)
    }

    /// Total degree (`None` for zero).
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(n, _)| n.degree() == m.degree()),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    /// Coefficient of `m` (zero if absent).
    pub fn coeff_of(&self, m: &Monomial) -> u32 {
        self.terms
            .iter()
            .find(|t| t.0 == *m)
            .map_or(0, |t| t.1)
    }

    /// Number of variables actually used (max index + 1).
    pub fn arity(&self) -> usize {
        self.terms.iter().map(|t| t.0.arity()).max().unwrap_or(0)
    }
}

/// Polynomial ring `F_p[x_0, ..., x_{n-1}]` with a fixed monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    nvars: usize,
    field: PrimeField,
    order: MonomialOrder,
}

impl Ring {
    pub fn new(nvars: usize, field: PrimeField, order: MonomialOrder) -> Result<Self, AlgebraError> {
        if nvars > MAX_VARS {
            return Err(AlgebraError::TooManyVariables {
                got: nvars,
                max: MAX_VARS,
            });
        }
        if let MonomialOrder::Elimination { keep } = order {
            if keep > nvars {
                return Err(AlgebraError::RingMismatch(format!(
                    "elimination block starts at {keep} but ring has {nvars} variables"
                )));
            }
        }
        Ok(Ring { nvars, field, order })
    }

    /// Grevlex ring over the default field.
    pub fn grevlex(nvars: usize) -> Result<Self, AlgebraError> {
        Ring::new(nvars, PrimeField::default(), MonomialOrder::Grevlex)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring, AlgebraError> {
        Ring::new(self.nvars, self.field, order)
    }

    pub fn with_nvars(&self, nvars: usize, order: MonomialOrder) -> Result<Ring, AlgebraError> {
        Ring::new(nvars, self.field, order)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.order {
            MonomialOrder::Grevlex => a.cmp_grevlex(b),
            order => a.cmp_in(b, order),
        }
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        let c = self.field.from_i64(c);
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial::from_sorted(vec![(Monomial::one(), c)])
        }
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars, "variable x{i} outside ring of {} variables", self.nvars);
        Polynomial::from_sorted(vec![(Monomial::var(i), 1)])
    }

    pub fn monomial(&self, m: Monomial, c: u32) -> Polynomial {
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial::from_sorted(vec![(m, c)])
        }
    }

    /// Linear form `sum coeffs[i] * x_i`.
    pub fn linear_form(&self, coeffs: &[u32]) -> Polynomial {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (Monomial::var(i), c))
            .collect();
        self.from_terms(terms)
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zeros.
    pub fn from_terms(&self, mut terms: Vec<Term>) -> Polynomial {
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % self.field.characteristic();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = self.field.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial::from_sorted(out)
    }

    /// Same polynomial re-sorted for this ring's order (e.g. after changing
    /// orders or embedding into a ring with more variables).
    pub fn convert(&self, f: &Polynomial) -> Polynomial {
        debug_assert!(f.arity() <= self.nvars);
        let mut terms = f.terms.clone();
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        Polynomial::from_sorted(terms)
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.combine(f, 1, &Monomial::one(), g, false)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.combine(f, self.field.neg(1), &Monomial::one(), g, false)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        self.scale(f, self.field.neg(1))
    }

    pub fn scale(&self, f: &Polynomial, c: u32) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial::from_sorted(f.terms.iter().map(|&(m, a)| (m, self.field.mul(a, c))).collect())
    }

    /// `c * m * f`. Multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, f: &Polynomial, m: &Monomial, c: u32) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial::from_sorted(
            f.terms
                .iter()
                .map(|(n, a)| (n.mul(m), self.field.mul(*a, c)))
                .collect(),
        )
    }

    /// `f + c * m * g`, computed by a single merge.
    pub fn add_mul_term(&self, f: &Polynomial, c: u32, m: &Monomial, g: &Polynomial) -> Polynomial {
        self.combine(f, c, m, g, true)
    }

    fn combine(&self, f: &Polynomial, c: u32, m: &Monomial, g: &Polynomial, shift: bool) -> Polynomial {
        if c == 0 || g.is_zero() {
            return f.clone();
        }
        Polynomial::from_sorted(self.combine_slices(&f.terms, c, m, &g.terms, shift))
    }

    /// Merge of `f + c * m * g` on raw sorted term slices.
    pub(crate) fn combine_slices(&self, ft: &[Term], c: u32, m: &Monomial, gt: &[Term], shift: bool) -> Vec<Term> {
        let fld = &self.field;
        let mut out = Vec::with_capacity(ft.len() + gt.len());
        let (mut i, mut j) = (0, 0);
        while i < ft.len() && j < gt.len() {
            let gm = if shift { gt[j].0.mul(m) } else { gt[j].0 };
            match self.cmp(&ft[i].0, &gm) {
                Ordering::Greater => {
                    out.push(ft[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm, fld.mul(gt[j].1, c)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = fld.add(ft[i].1, fld.mul(gt[j].1, c));
                    if s != 0 {
                        out.push((gm, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&ft[i..]);
        while j < gt.len() {
            let gm = if shift { gt[j].0.mul(m) } else { gt[j].0 };
            out.push((gm, fld.mul(gt[j].1, c)));
            j += 1;
        }
        out
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let (small, big) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        let mut acc = Polynomial::zero();
        for (m, c) in &small.terms {
            acc = self.add_mul_term(&acc, *c, m, big);
        }
        acc
    }

    pub fn pow(&self, f: &Polynomial, e: u32) -> Polynomial {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Scales so the leading coefficient is one.
    pub fn make_monic(&self, f: &Polynomial) -> Polynomial {
        match f.lead() {
            None => Polynomial::zero(),
            Some(&(_, 1)) => f.clone(),
            Some(&(_, c)) => self.scale(f, self.field.inv(c)),
        }
    }

    /// Evaluates `f` at a point (coordinates as field residues).
    pub fn evaluate(&self, f: &Polynomial, point: &[u32]) -> u32 {
        let fld = &self.field;
        let mut acc = 0;
        for (m, c) in &f.terms {
            let mut v = *c;
            for (i, &e) in m.exponents().iter().enumerate().take(point.len()) {
                for _ in 0..e {
                    v = fld.mul(v, point[i]);
                }
            }
            acc = fld.add(acc, v);
        }
        acc
    }

    /// Substitutes `x_i -> images[i]` for every variable.
    pub fn substitute(&self, f: &Polynomial, images: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (m, c) in &f.terms {
            let mut t = self.constant(*c as i64);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = self.mul(&t, &self.pow(&images[i], e as u32));
                }
            }
            acc = self.add(&acc, &t);
        }
        acc
    }

    /// True when the terms are sorted for this ring and all coefficients are
    /// canonical and nonzero.
    pub fn is_well_formed(&self, f: &Polynomial) -> bool {
        f.terms.iter().all(|t| t.1 != 0 && t.1 < self.field.characteristic())
            && f.terms.windows(2).all(|w| self.cmp(&w[0].0, &w[1].0) == Ordering::Greater)
            && f.arity() <= self.nvars
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(n: usize) -> Ring {
        Ring::grevlex(n).unwrap()
    }

    #[test]
    fn arithmetic() {
        let r = ring(3);
        let x = r.var(0);
        let y = r.var(1);
        let s = r.add(&x, &y);
        let d = r.sub(&x, &y);
        let p = r.mul(&s, &d);
        let expect = r.sub(&r.mul(&x, &x), &r.mul(&y, &y));
        assert_eq!(p, expect);
        assert!(r.is_well_formed(&p));
        assert!(r.sub(&p, &expect).is_zero());
    }

    #[test]
    fn monic_and_eval() {
        let r = ring(2);
        let f = r.from_terms(vec![(Monomial::var(0), 3), (Monomial::var(1), 6)]);
        let g = r.make_monic(&f);
        assert_eq!(g.lead_coeff(), 1);
        assert_eq!(r.evaluate(&g, &[1, 1]), 3);
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = Vec<(Vec<u32>, u32)>> {
        prop::collection::vec((prop::collection::vec(0u32..3, n), 0u32..32003), 0..6)
    }

    fn build(r: &Ring, t: Vec<(Vec<u32>, u32)>) -> Polynomial {
        r.from_terms(t.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), c)).collect())
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
            let r = ring(3);
            let (a, b, c) = (build(&r, a), build(&r, b), build(&r, c));
            prop_assert!(r.is_well_formed(&a));
            prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
            prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
            prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
            prop_assert!(r.is_well_formed(&r.mul(&a, &b)));
            // evaluation is a ring homomorphism
            let pt = [3, 5, 7];
            prop_assert_eq!(
                r.evaluate(&r.mul(&a, &b), &pt),
                r.field().mul(r.evaluate(&a, &pt), r.evaluate(&b, &pt))
            );
        }
    }
}
