//! Ideals with a lazily computed Groebner basis.

use std::sync::OnceLock;

use crate::error::AlgebraError;
use crate::groebner::{groebner_basis, GroebnerBasis};
use crate::hilbert::HilbertSeries;
use crate::linalg::Matrix;
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring};

#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gb() == other.gb()
    }
}

impl Eq for Ideal {}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring: *ring, gens, gb: OnceLock::new() }
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal::new(ring, vec![ring.one()])
    }

    /// Wraps an already computed basis.
    pub fn from_basis(gb: GroebnerBasis) -> Self {
        let ring = *gb.ring();
        let gens = gb.polys().to_vec();
        let cell = OnceLock::new();
        let _ = cell.set(gb);
        Ideal { ring, gens, gb: cell }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| groebner_basis(&self.ring, &self.gens))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn is_member(&self, f: &Polynomial) -> bool {
        self.gb().contains(f)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.gb().normal_form(f)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.is_member(g))
    }

    fn check_ring(&self, other: &Ideal) -> Result<(), AlgebraError> {
        if self.ring != other.ring {
            return Err(AlgebraError::RingMismatch(format!(
                "{} vs {} variables",
                self.ring.nvars(),
                other.ring.nvars()
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, AlgebraError> {
        self.check_ring(other)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ok(Ideal::new(&self.ring, g))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal, AlgebraError> {
        self.check_ring(other)?;
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(self.ring.mul(a, b));
            }
        }
        Ok(Ideal::new(&self.ring, g))
    }

    /// `I ∩ J`, by eliminating `t` from `t I + (1 - t) J`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal, AlgebraError> {
        self.check_ring(other)?;
        let n = self.ring.nvars();
        if self.gens.is_empty() || other.gens.is_empty() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let big = self.ring.with_nvars(n + 1, MonomialOrder::Elimination { keep: n })?;
        let t = big.var(n);
        let one_minus_t = big.sub(&big.one(), &t);
        let mut g = Vec::with_capacity(self.gens.len() + other.gens.len());
        for f in self.gb().polys() {
            g.push(big.mul(&t, &big.convert(f)));
        }
        for f in other.gb().polys() {
            g.push(big.mul(&one_minus_t, &big.convert(f)));
        }
        let gb = groebner_basis(&big, &g);
        let kept: Vec<Polynomial> = gb
            .polys()
            .iter()
            .filter(|p| p.terms().iter().all(|(m, _)| m.exponent(n) == 0))
            .map(|p| self.ring.convert(p))
            .collect();
        Ok(Ideal::new(&self.ring, kept))
    }

    /// Intersection of a nonempty family, combined pairwise as a balanced tree.
    pub fn intersect_all(ideals: &[Ideal]) -> Result<Ideal, AlgebraError> {
        assert!(!ideals.is_empty(), "empty intersection");
        let mut layer: Vec<Ideal> = ideals.to_vec();
        while layer.len() > 1 {
            let mut next = Vec::with_capacity(layer.len().div_ceil(2));
            for pair in layer.chunks(2) {
                match pair {
                    [a, b] => next.push(a.intersection(b)?),
                    [a] => next.push(a.clone()),
                    _ => unreachable!(),
                }
            }
            layer = next;
        }
        Ok(layer.pop().unwrap())
    }

    /// Hilbert series of `S/I` (requires a homogeneous ideal).
    pub fn hilbert_series(&self) -> Result<HilbertSeries, AlgebraError> {
        if !self.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous);
        }
        let leads: Vec<Monomial> = self.gb().leading_monomials();
        Ok(HilbertSeries::of_monomial_ideal(self.ring.nvars(), &leads))
    }

    /// `dim_k I_d` for a homogeneous ideal.
    pub fn dim_in_degree(&self, d: u32) -> Result<i64, AlgebraError> {
        let hs = self.hilbert_series()?;
        let n = self.ring.nvars() as i64;
        let total = binom(d as i64 + n - 1, n - 1);
        Ok(total - hs.hilbert_function(d as u64))
    }

    /// A basis of `I_d` as polynomials, in echelon form over the standard
    /// monomials of degree `d`.
    pub fn basis_in_degree(&self, d: u32) -> Result<Vec<Polynomial>, AlgebraError> {
        if !self.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous);
        }
        let ring = &self.ring;
        let mons = monomials_of_degree(ring.nvars(), d);
        let idx: std::collections::HashMap<Monomial, usize> =
            mons.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for g in &self.gens {
            let Some(gd) = g.degree() else { continue };
            if gd > d {
                continue;
            }
            for m in monomials_of_degree(ring.nvars(), d - gd) {
                let p = ring.mul_term(g, &m, 1);
                let mut row = vec![0; mons.len()];
                for (t, c) in p.terms() {
                    row[idx[t]] = *c;
                }
                rows.push(row);
            }
        }
        if rows.is_empty() {
            return Ok(Vec::new());
        }
        let mut mat = Matrix::from_rows(&rows, mons.len());
        let rank = mat.rref(ring.field()).len();
        Ok((0..rank)
            .map(|i| {
                let terms = mat
                    .row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(j, &c)| (mons[j], c))
                    .collect();
                ring.from_terms(terms)
            })
            .collect())
    }

    /// A minimal homogeneous generating set chosen from the generators.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>, AlgebraError> {
        if !self.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous);
        }
        let ring = &self.ring;
        let mut gens = self.gens.clone();
        gens.sort_by_key(|g| g.degree());
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut i = 0;
        while i < gens.len() {
            let d = gens[i].degree().unwrap();
            let mut j = i;
            while j < gens.len() && gens[j].degree() == Some(d) {
                j += 1;
            }
            let lower = groebner_basis(ring, &kept);
            // Independent normal forms within degree d.
            let mut echelon: Vec<Polynomial> = Vec::new();
            for g in &gens[i..j] {
                let mut r = lower.normal_form(g);
                for e in &echelon {
                    let (lm, _) = e.terms()[0];
                    let c = r.coeff_of(&lm);
                    if c != 0 {
                        r = ring.add_mul_term(&r, ring.field().neg(c), &Monomial::one(), e);
                    }
                }
                if !r.is_zero() {
                    let r = ring.make_monic(&r);
                    for e in echelon.iter_mut() {
                        let c = e.coeff_of(&r.terms()[0].0);
                        if c != 0 {
                            *e = ring.add_mul_term(e, ring.field().neg(c), &Monomial::one(), &r);
                        }
                    }
                    echelon.push(r);
                    kept.push(g.clone());
                }
            }
            i = j;
        }
        Ok(kept)
    }
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |r, i| r * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_generators, parse_polynomial};

    fn ideal(r: &Ring, s: &str) -> Ideal {
        Ideal::new(r, parse_generators(r, s).unwrap())
    }

    #[test]
    fn intersection_of_monomial_ideals() {
        let r = Ring::grevlex(3).unwrap();
        let i = ideal(&r, "x0^2, x1");
        let j = ideal(&r, "x0, x1^2");
        let k = i.intersection(&j).unwrap();
        assert_eq!(k, ideal(&r, "x0^2, x0*x1, x1^2"));
    }

    #[test]
    fn intersection_of_lines() {
        // Two skew lines in P^3: the ideal is generated by 4 quadrics.
        let r = Ring::grevlex(4).unwrap();
        let l1 = ideal(&r, "x0, x1");
        let l2 = ideal(&r, "x2, x3");
        let k = l1.intersection(&l2).unwrap();
        assert_eq!(k, ideal(&r, "x0*x2, x0*x3, x1*x2, x1*x3"));
        let hs = k.hilbert_series().unwrap();
        assert_eq!(hs.degree(), 2);
        assert_eq!(hs.projective_dim(), 1);
        for g in k.generators() {
            assert!(l1.is_member(g) && l2.is_member(g));
        }
    }

    #[test]
    fn intersection_with_binomials() {
        let r = Ring::grevlex(3).unwrap();
        let i = ideal(&r, "x0 - x1");
        let j = ideal(&r, "x2");
        let k = i.intersection(&j).unwrap();
        let p = i.product(&j).unwrap();
        assert_eq!(k, p);
        assert!(k.is_member(&parse_polynomial(&r, "x0*x2 - x1*x2").unwrap()));
    }

    #[test]
    fn degree_pieces() {
        let r = Ring::grevlex(4).unwrap();
        let k = ideal(&r, "x0*x2, x0*x3, x1*x2, x1*x3, x0*x1*x2");
        assert_eq!(k.dim_in_degree(2).unwrap(), 4);
        assert_eq!(k.basis_in_degree(2).unwrap().len(), 4);
        assert_eq!(k.minimal_generators().unwrap().len(), 4);
        let q = ideal(&r, "x0*x2 + x1*x3, x1*x3, x0*x2");
        assert_eq!(q.minimal_generators().unwrap().len(), 2);
    }

    #[test]
    fn many_points() {
        let r = Ring::grevlex(3).unwrap();
        let pts: Vec<Ideal> = ["x1, x2", "x0, x2", "x0, x1", "x0 - x1, x2"]
            .iter()
            .map(|s| ideal(&r, s))
            .collect();
        let k = Ideal::intersect_all(&pts).unwrap();
        let hs = k.hilbert_series().unwrap();
        assert_eq!(hs.degree(), 4);
        assert_eq!(hs.projective_dim(), 0);
    }
}
