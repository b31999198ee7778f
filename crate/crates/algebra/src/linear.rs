//! Ideals generated by linear forms, i.e. linear subspaces of projective space.

use crate::error::AlgebraError;
use crate::linalg::Matrix;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring};

/// A linear ideal, stored as the reduced row echelon basis of its degree-one
/// part. The zero set is the projective subspace cut out by those forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearIdeal {
    nvars: usize,
    rows: Vec<Vec<u32>>,
}

impl LinearIdeal {
    pub fn from_rows(ring: &Ring, rows: &[Vec<u32>]) -> Self {
        let n = ring.nvars();
        if rows.is_empty() {
            return LinearIdeal { nvars: n, rows: Vec::new() };
        }
        let mut m = Matrix::from_rows(rows, n);
        let rank = m.rref(ring.field()).len();
        let rows = (0..rank).map(|i| m.row(i).to_vec()).collect();
        LinearIdeal { nvars: n, rows }
    }

    /// From homogeneous linear polynomials.
    pub fn from_forms(ring: &Ring, forms: &[Polynomial]) -> Result<Self, AlgebraError> {
        let n = ring.nvars();
        let mut rows = Vec::new();
        for f in forms {
            let mut row = vec![0u32; n];
            for (m, c) in f.terms() {
                if m.degree() != 1 {
                    return Err(AlgebraError::NotHomogeneous);
                }
                let i = (0..n).find(|&i| m.exponent(i) == 1).unwrap();
                row[i] = *c;
            }
            rows.push(row);
        }
        Ok(Self::from_rows(ring, &rows))
    }

    /// The ideal of the span of the given points.
    pub fn of_span(ring: &Ring, points: &[Vec<u32>]) -> Self {
        let n = ring.nvars();
        if points.is_empty() {
            return Self::from_rows(ring, &identity(n));
        }
        let k = Matrix::from_rows(points, n).kernel(ring.field());
        Self::from_rows(ring, &k)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Projective dimension of the zero set (`-1` when empty).
    pub fn projective_dim(&self) -> i64 {
        self.nvars as i64 - self.rows.len() as i64 - 1
    }

    /// A basis of the zero set as vectors in `k^n`.
    pub fn points(&self, ring: &Ring) -> Vec<Vec<u32>> {
        if self.rows.is_empty() {
            return identity(self.nvars);
        }
        Matrix::from_rows(&self.rows, self.nvars).kernel(ring.field())
    }

    pub fn contains_form(&self, ring: &Ring, row: &[u32]) -> bool {
        let mut all = self.rows.clone();
        all.push(row.to_vec());
        Matrix::from_rows(&all, self.nvars).rank(ring.field()) == self.rows.len()
    }

    /// Ideal containment `self ⊆ other`, equivalently `V(other) ⊆ V(self)`.
    pub fn is_contained_in(&self, ring: &Ring, other: &LinearIdeal) -> bool {
        self.rows.iter().all(|r| other.contains_form(ring, r))
    }

    /// Ideal sum, the intersection of the subspaces.
    pub fn sum(&self, ring: &Ring, other: &LinearIdeal) -> LinearIdeal {
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Self::from_rows(ring, &all)
    }

    /// Ideal of the join (linear span) of the two subspaces.
    pub fn join(&self, ring: &Ring, other: &LinearIdeal) -> LinearIdeal {
        let mut pts = self.points(ring);
        pts.extend(other.points(ring));
        Self::of_span(ring, &pts)
    }

    pub fn generators(&self, ring: &Ring) -> Vec<Polynomial> {
        self.rows.iter().map(|r| ring.linear_form(r)).collect()
    }

    /// Whether a polynomial vanishes on the subspace: substitute a
    /// parametrization and test for zero.
    pub fn vanishes_on(&self, ring: &Ring, f: &Polynomial) -> bool {
        let pts = self.points(ring);
        if pts.is_empty() {
            return true;
        }
        let k = pts.len();
        let fld = ring.field();
        let param = Ring::new(k, *fld, MonomialOrder::Grevlex).expect("parameter ring");
        let images: Vec<Polynomial> = (0..ring.nvars())
            .map(|i| {
                let terms = (0..k).map(|j| (Monomial::var(j), pts[j][i])).collect();
                param.from_terms(terms)
            })
            .collect();
        param.substitute(f, &images).is_zero()
    }
}

fn identity(n: usize) -> Vec<Vec<u32>> {
    (0..n)
        .map(|i| {
            let mut r = vec![0; n];
            r[i] = 1;
            r
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;

    #[test]
    fn lines_in_p3() {
        let r = Ring::grevlex(4).unwrap();
        let l1 = LinearIdeal::from_forms(&r, &[r.var(2), r.var(3)]).unwrap();
        let l2 = LinearIdeal::from_forms(&r, &[r.var(0), r.var(1)]).unwrap();
        assert_eq!(l1.projective_dim(), 1);
        assert_eq!(l1.sum(&r, &l2).projective_dim(), -1);
        assert_eq!(l1.join(&r, &l2).rank(), 0);
        let f = parse_polynomial(&r, "x2*x0 + x3^2").unwrap();
        assert!(l1.vanishes_on(&r, &f));
        let g = parse_polynomial(&r, "x0*x1").unwrap();
        assert!(!l1.vanishes_on(&r, &g));
    }

    #[test]
    fn span_of_points() {
        let r = Ring::grevlex(3).unwrap();
        let p = LinearIdeal::of_span(&r, &[vec![1, 1, 0], vec![0, 0, 1]]);
        assert_eq!(p.rank(), 1);
        assert!(p.contains_form(&r, &[1, r.field().neg(1), 0]));
        let pt = LinearIdeal::of_span(&r, &[vec![1, 1, 0]]);
        assert!(p.is_contained_in(&r, &pt));
    }
}
