//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Hard cap on the number of ring variables.
pub const MAX_VARS: usize = 32;

/// A monomial `x^a` stored as a dense exponent vector. Variables beyond the
/// ring's arity are always zero, so monomials from rings of different arity
/// can be compared and multiplied directly.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    degree: u32,
    mask: u32,
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial {
            exps: [0; MAX_VARS],
            degree: 0,
            mask: 0,
        }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.degree = 1;
        m.mask = 1 << i;
        m
    }

    /// Builds a monomial from an exponent slice (shorter slices are zero-padded).
    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Self::one();
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u8::try_from(e).expect("exponent exceeds 255");
        }
        m.refresh();
        m
    }

    fn refresh(&mut self) {
        let mut degree = 0;
        let mut mask = 0;
        for (i, &e) in self.exps.iter().enumerate() {
            degree += e as u32;
            if e != 0 {
                mask |= 1 << i;
            }
        }
        self.degree = degree;
        self.mask = mask;
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn exponents(&self) -> &[u8; MAX_VARS] {
        &self.exps
    }

    /// Bit `i` is set iff `x_i` divides the monomial.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        self.mask
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Largest variable index with nonzero exponent, plus one.
    pub fn arity(&self) -> usize {
        32 - self.mask.leading_zeros() as usize
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("exponent overflow");
        }
        Monomial {
            exps,
            degree: self.degree + other.degree,
            mask: self.mask | other.mask,
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            m.exps[i] = other.exps[i] - self.exps[i];
        }
        m.degree = other.degree - self.degree;
        m.refresh_mask();
        m
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(other.quotient_of(self))
        } else {
            None
        }
    }

    fn refresh_mask(&mut self) {
        let mut mask = 0;
        for (i, &e) in self.exps.iter().enumerate() {
            if e != 0 {
                mask |= 1 << i;
            }
        }
        self.mask = mask;
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
        }
        m.refresh();
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].min(other.exps[i]);
        }
        m.refresh();
        m
    }

    #[inline]
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.mask & other.mask == 0
    }

    /// Colon `self : other`, i.e. `self / gcd(self, other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].saturating_sub(other.exps[i]);
        }
        m.refresh();
        m
    }

    /// Copy with the exponent of `x_i` replaced by `e`.
    pub fn with_exponent(&self, i: usize, e: u32) -> Monomial {
        let mut m = *self;
        m.exps[i] = u8::try_from(e).expect("exponent exceeds 255");
        m.refresh();
        m
    }

    /// Graded reverse lexicographic comparison.
    #[inline]
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        if self.degree != other.degree {
            return self.degree.cmp(&other.degree);
        }
        grevlex_tail(&self.exps, &other.exps, 0, MAX_VARS)
    }

    pub fn cmp_in(&self, other: &Monomial, order: MonomialOrder) -> Ordering {
        match order {
            MonomialOrder::Grevlex => self.cmp_grevlex(other),
            MonomialOrder::Elimination { keep } => {
                let da: u32 = self.exps[keep..].iter().map(|&e| e as u32).sum();
                let db: u32 = other.exps[keep..].iter().map(|&e| e as u32).sum();
                da.cmp(&db)
                    .then_with(|| grevlex_tail(&self.exps, &other.exps, keep, MAX_VARS))
                    .then_with(|| (self.degree - da).cmp(&(other.degree - db)))
                    .then_with(|| grevlex_tail(&self.exps, &other.exps, 0, keep))
            }
        }
    }
}

#[inline]
fn grevlex_tail(a: &[u8; MAX_VARS], b: &[u8; MAX_VARS], lo: usize, hi: usize) -> Ordering {
    for i in (lo..hi).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Monomial orders supported by the Groebner engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with `x_0 > x_1 > ...`.
    #[default]
    Grevlex,
    /// Block order: variables with index `>= keep` are eliminated. Terms are
    /// compared by grevlex on the eliminated block first, then by grevlex on
    /// the kept variables.
    Elimination { keep: usize },
}

/// Wrapper giving monomials the grevlex order as their `Ord`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Grevlex(pub Monomial);

impl Ord for Grevlex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp_grevlex(&other.0)
    }
}

impl PartialOrd for Grevlex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `degree` in `nvars` variables, in
/// descending grevlex order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == nvars {
            cur[i] = left;
            out.push(Monomial::from_exponents(cur));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(nvars, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    let mut cur = vec![0; nvars];
    rec(nvars, 0, degree, &mut cur, &mut out);
    out.sort_by(|a, b| b.cmp_grevlex(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_basics() {
        // x0 > x1 > x2
        assert_eq!(m(&[1]).cmp_grevlex(&m(&[0, 1])), Ordering::Greater);
        // x1^2 > x0*x2 in grevlex
        assert_eq!(m(&[0, 2]).cmp_grevlex(&m(&[1, 0, 1])), Ordering::Greater);
        // degree first
        assert_eq!(m(&[0, 0, 2]).cmp_grevlex(&m(&[1])), Ordering::Greater);
    }

    #[test]
    fn elimination_puts_block_first() {
        let order = MonomialOrder::Elimination { keep: 2 };
        // x2 (eliminated) beats any power of kept variables
        assert_eq!(m(&[0, 0, 1]).cmp_in(&m(&[5, 5]), order), Ordering::Greater);
        assert_eq!(m(&[1, 0, 1]).cmp_in(&m(&[0, 1, 1]), order), Ordering::Greater);
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[1, 2]);
        let b = m(&[2, 1, 1]);
        assert_eq!(a.lcm(&b), m(&[2, 2, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 1]));
        assert!(a.divides(&a.lcm(&b)));
        assert_eq!(a.quotient_of(&m(&[2, 2, 1])), m(&[1, 0, 1]));
        assert_eq!(b.colon(&a), m(&[1, 0, 1]));
        assert!(!a.divides(&b));
    }

    #[test]
    fn counts_monomials() {
        assert_eq!(monomials_of_degree(9, 2).len(), 45);
        assert_eq!(monomials_of_degree(9, 3).len(), 165);
        assert_eq!(monomials_of_degree(3, 0).len(), 1);
        let v = monomials_of_degree(3, 2);
        assert_eq!(v[0], m(&[2]));
        assert_eq!(*v.last().unwrap(), m(&[0, 0, 2]));
    }
}
