//! Plain-text polynomials: `3*x0^2*x5 - x1*x2 + 1/2*x3`.
//!
//! Ideal files hold one or more generators separated by commas or newlines;
//! everything after `#` on a line is ignored.

use crate::error::AlgebraError;
use crate::monomial::{Monomial, MAX_VARS};
use crate::poly::{Polynomial, Ring};

fn err(line: usize, message: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse { line, message: message.into() }
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(self.line, format!("expected a number at column {}", start + 1)));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| err(self.line, "number too large"))
    }
}

/// Parses a single polynomial in the variables `x0, x1, ...`.
pub fn parse_polynomial(ring: &Ring, s: &str) -> Result<Polynomial, AlgebraError> {
    parse_line(ring, s, 1)
}

fn parse_line(ring: &Ring, s: &str, line: usize) -> Result<Polynomial, AlgebraError> {
    let fld = ring.field();
    let p = fld.characteristic() as u64;
    let mut lx = Lexer { s: s.as_bytes(), pos: 0, line };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let mut sign = 1u32;
        match lx.peek() {
            None if !first => break,
            None => return Err(err(line, "empty polynomial")),
            Some(b'+') if !first => lx.pos += 1,
            Some(b'-') => {
                lx.pos += 1;
                sign = fld.neg(1);
            }
            Some(_) if first => {}
            Some(c) => return Err(err(line, format!("unexpected '{}'", c as char))),
        }
        first = false;

        let mut coeff = sign;
        let mut exps = [0u32; MAX_VARS];
        let mut factors = 0;
        loop {
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let mut v = fld.from_i64((lx.number()? % p) as i64);
                    if lx.peek() == Some(b'/') {
                        lx.pos += 1;
                        let d = lx.number()? % p;
                        if d == 0 {
                            return Err(err(line, "division by zero"));
                        }
                        v = fld.div(v, d as u32);
                    }
                    coeff = fld.mul(coeff, v);
                }
                Some(b'x') => {
                    lx.pos += 1;
                    if lx.s.get(lx.pos) == Some(&b'_') {
                        lx.pos += 1;
                    }
                    let i = lx.number()? as usize;
                    if i >= ring.nvars() {
                        return Err(err(line, format!("x{i} is outside a ring with {} variables", ring.nvars())));
                    }
                    let mut e = 1;
                    if lx.peek() == Some(b'^') {
                        lx.pos += 1;
                        e = lx.number()? as u32;
                    }
                    exps[i] += e;
                    if exps[i] > 255 {
                        return Err(err(line, "exponent too large"));
                    }
                }
                Some(c) => return Err(err(line, format!("unexpected '{}'", c as char))),
                None => return Err(err(line, "dangling sign")),
            }
            factors += 1;
            if lx.peek() == Some(b'*') {
                lx.pos += 1;
            } else {
                break;
            }
        }
        debug_assert!(factors > 0);
        terms.push((Monomial::from_exponents(&exps), coeff));
    }
    Ok(ring.from_terms(terms))
}

/// Parses an ideal file body into its generators.
pub fn parse_generators(ring: &Ring, text: &str) -> Result<Vec<Polynomial>, AlgebraError> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        for piece in content.split(',') {
            if piece.trim().is_empty() {
                continue;
            }
            out.push(parse_line(ring, piece, n + 1)?);
        }
    }
    Ok(out)
}

/// Writes a polynomial using symmetric coefficient representatives.
pub fn format_polynomial(ring: &Ring, f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let fld = ring.field();
    let mut s = String::new();
    for (k, (m, c)) in f.terms().iter().enumerate() {
        let v = fld.to_signed(*c);
        let neg = v < 0;
        let a = v.unsigned_abs();
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            s.push_str(&a.to_string());
        } else if a == 1 {
            s.push_str(&m.to_string());
        } else {
            s.push_str(&format!("{a}*{m}"));
        }
    }
    s
}

/// One generator per line.
pub fn format_generators(ring: &Ring, gens: &[Polynomial]) -> String {
    let mut s = String::new();
    for g in gens {
        s.push_str(&format_polynomial(ring, g));
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn round_trip() {
        let r = Ring::grevlex(6).unwrap();
        let f = parse_polynomial(&r, "3*x0^2*x5 - x1*x2 + 7").unwrap();
        assert_eq!(format_polynomial(&r, &f), "3*x0^2*x5 - x1*x2 + 7");
        let g = parse_polynomial(&r, "-x_1 + x0").unwrap();
        assert_eq!(format_polynomial(&r, &g), "x0 - x1");
        let h = parse_polynomial(&r, "x0*x0 - x0^2").unwrap();
        assert!(h.is_zero());
    }

    #[test]
    fn fractions() {
        let r = Ring::grevlex(1).unwrap();
        let f = parse_polynomial(&r, "1/2*x0").unwrap();
        let two = parse_polynomial(&r, "2*x0").unwrap();
        assert_eq!(r.mul(&r.constant(1), &r.scale(&f, 4)), two);
    }

    #[test]
    fn generator_files() {
        let r = Ring::grevlex(4).unwrap();
        let text = "# a comment\nx0*x1, x2*x3 # trailing\n\n x0 - x3\n";
        let g = parse_generators(&r, text).unwrap();
        assert_eq!(g.len(), 3);
        let e = parse_generators(&r, "x0 +\n").unwrap_err();
        assert!(matches!(e, AlgebraError::Parse { line: 1, .. }));
        assert!(parse_generators(&r, "x9").is_err());
    }

    proptest! {
        #[test]
        fn format_then_parse(t in prop::collection::vec((prop::collection::vec(0u32..3, 4), 0u32..32003), 0..6)) {
            let r = Ring::grevlex(4).unwrap();
            let f = r.from_terms(t.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), c)).collect());
            let s = format_polynomial(&r, &f);
            if f.is_zero() {
                prop_assert_eq!(s, "0");
            } else {
                prop_assert_eq!(parse_polynomial(&r, &s).unwrap(), f);
            }
        }
    }
}
