//! Hilbert series of `S/M` for monomial ideals `M`, by pivot recursion.
//!
//! For a homogeneous ideal `I`, `S/I` and `S/in(I)` share a Hilbert
//! function, so everything here is applied to leading-term ideals.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::monomial::Monomial;

/// Integer polynomial in `t`, lowest degree first.
pub type IntPoly = Vec<i64>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    if p.is_empty() {
        p.push(0);
    }
    p
}

fn add_shifted(acc: &mut IntPoly, p: &IntPoly, shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, &c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
}

fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Drops generators divisible by other generators (and duplicates).
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut g: Vec<Monomial> = gens.to_vec();
    g.sort_by_key(|m| m.degree());
    g.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in g {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator `K(t)` with `HS_{S/M}(t) = K(t) / (1-t)^n`.
pub fn numerator(gens: &[Monomial]) -> IntPoly {
    trim(numerator_rec(minimalize(gens)))
}

fn numerator_rec(gens: Vec<Monomial>) -> IntPoly {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    // Pairwise coprime generators: product of (1 - t^deg).
    let mut seen = 0u32;
    let mut coprime = true;
    for m in &gens {
        if seen & m.support_mask() != 0 {
            coprime = false;
            break;
        }
        seen |= m.support_mask();
    }
    if coprime {
        let mut acc = vec![1];
        for m in &gens {
            let mut f = vec![0; m.degree() as usize + 1];
            f[0] = 1;
            f[m.degree() as usize] -= 1;
            acc = mul(&acc, &f);
        }
        return acc;
    }
    // Pivot on the variable dividing the most non-linear generators.
    let mut counts = [0usize; crate::monomial::MAX_VARS];
    for m in &gens {
        if m.degree() > 1 {
            for (i, c) in counts.iter_mut().enumerate() {
                if m.exponent(i) > 0 {
                    *c += 1;
                }
            }
        }
    }
    let var = (0..counts.len()).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).unwrap();
    let mut exps: Vec<u32> = gens.iter().map(|m| m.exponent(var)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let pivot = Monomial::var(var).with_exponent(var, e);

    let mut plus = gens.clone();
    plus.push(pivot);
    let colon: Vec<Monomial> = gens.iter().map(|m| m.colon(&pivot)).collect();

    let mut out = numerator_rec(minimalize(&plus));
    let q = numerator_rec(minimalize(&colon));
    add_shifted(&mut out, &q, e as usize);
    out
}

/// Hilbert series data of `S/M` in `nvars` variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub nvars: usize,
    /// `K(t)`, over `(1-t)^nvars`.
    pub numerator: IntPoly,
    /// `h(t)`, over `(1-t)^krull_dim`, with `h(1) != 0` unless the quotient is zero.
    pub h_vector: IntPoly,
    pub krull_dim: usize,
}

impl HilbertSeries {
    pub fn of_monomial_ideal(nvars: usize, gens: &[Monomial]) -> Self {
        let numerator = numerator(gens);
        let mut h = numerator.clone();
        let mut dim = nvars;
        // Divide by (1 - t) while it divides.
        while dim > 0 && h.iter().sum::<i64>() == 0 && h.iter().any(|&c| c != 0) {
            let mut q = vec![0i64; h.len() - 1];
            let mut carry = 0;
            for i in 0..q.len() {
                carry += h[i];
                q[i] = carry;
            }
            h = trim(q);
            dim -= 1;
        }
        if h.iter().all(|&c| c == 0) {
            dim = 0;
        }
        HilbertSeries { nvars, numerator, h_vector: h, krull_dim: dim }
    }

    pub fn is_zero(&self) -> bool {
        self.h_vector.iter().all(|&c| c == 0)
    }

    /// Dimension of the projective scheme; `-1` for the empty scheme.
    pub fn projective_dim(&self) -> i64 {
        self.krull_dim as i64 - 1
    }

    pub fn degree(&self) -> i64 {
        self.h_vector.iter().sum()
    }

    /// Codimension of the ideal in the polynomial ring.
    pub fn codim(&self) -> usize {
        self.nvars - self.krull_dim
    }

    /// `dim_k (S/M)_d`.
    pub fn hilbert_function(&self, d: u64) -> i64 {
        let n = self.krull_dim as i64;
        if n == 0 {
            return self.h_vector.get(d as usize).copied().unwrap_or(0);
        }
        let mut total: i64 = 0;
        for (i, &h) in self.h_vector.iter().enumerate() {
            if (i as u64) <= d {
                total += h * binom(d as i64 - i as i64 + n - 1, n - 1);
            }
        }
        total
    }

    /// Hilbert polynomial coefficients in `t`, constant term first.
    pub fn hilbert_polynomial(&self) -> Vec<Ratio<i64>> {
        let n = self.krull_dim;
        if n == 0 || self.is_zero() {
            return vec![Ratio::from_integer(0)];
        }
        // sum_i h_i * C(t - i + n - 1, n - 1)
        let mut acc = vec![Ratio::from_integer(0); n];
        for (i, &h) in self.h_vector.iter().enumerate() {
            if h == 0 {
                continue;
            }
            // prod_{k=1}^{n-1} (t - i + k) / (n-1)!
            let mut p = vec![Ratio::from_integer(1)];
            for k in 1..n {
                let c = Ratio::from_integer(k as i64 - i as i64);
                let mut next = vec![Ratio::from_integer(0); p.len() + 1];
                for (j, &a) in p.iter().enumerate() {
                    next[j] += a * c;
                    next[j + 1] += a;
                }
                p = next;
            }
            let fact: i64 = (1..n as i64).product();
            for (j, a) in p.into_iter().enumerate() {
                acc[j] += a * Ratio::new(h, fact);
            }
        }
        while acc.len() > 1 && *acc.last().unwrap() == Ratio::from_integer(0) {
            acc.pop();
        }
        acc
    }

    /// Human-readable Hilbert polynomial such as `10t - 1`.
    pub fn hilbert_polynomial_string(&self) -> String {
        format_poly_t(&self.hilbert_polynomial())
    }
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k || n < 0 {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

fn format_poly_t(p: &[Ratio<i64>]) -> String {
    let mut parts: Vec<(bool, String)> = Vec::new();
    for (e, c) in p.iter().enumerate().rev() {
        if *c.numer() == 0 {
            continue;
        }
        let neg = *c.numer() < 0;
        let a = if neg { -c } else { *c };
        let coeff = if a.is_integer() { a.to_integer().to_string() } else { format!("({a})") };
        let body = match e {
            0 => coeff,
            _ => {
                let var = if e == 1 { "t".to_string() } else { format!("t^{e}") };
                if a == Ratio::from_integer(1) {
                    var
                } else {
                    format!("{coeff}{var}")
                }
            }
        };
        parts.push((neg, body));
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (neg, body)) in parts.into_iter().enumerate() {
        match (k, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        s.push_str(&body);
    }
    s
}
