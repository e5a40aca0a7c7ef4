//! Canonical textual form for polynomials: explicit `^`, optional `*`,
//! variables `T` and `Y`. Printing orders monomials by descending powers of Y
//! and then of T, so output is byte-stable.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{BiPoly, IntPoly, Poly, RatPoly};
use crate::error::{Error, Result};

/// Largest exponent the parser accepts; dense storage makes astronomically
/// sparse inputs an allocation hazard.
const MAX_EXPONENT: u32 = 4096;

/// A parsed polynomial as a monomial map: (y_power, t_power) -> coefficient.
#[derive(Debug, Clone)]
pub struct ParsedPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(char),
    Caret,
    Plus,
    Minus,
    Star,
    Slash,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Num(digits.parse().expect("digit string")));
            }
            'T' | 'Y' => {
                toks.push(Tok::Var(c));
                chars.next();
            }
            '^' => {
                toks.push(Tok::Caret);
                chars.next();
            }
            '+' => {
                toks.push(Tok::Plus);
                chars.next();
            }
            '-' => {
                toks.push(Tok::Minus);
                chars.next();
            }
            '*' => {
                toks.push(Tok::Star);
                chars.next();
            }
            '/' => {
                toks.push(Tok::Slash);
                chars.next();
            }
            other => return Err(Error::Parse(format!("unexpected character '{other}'"))),
        }
    }
    Ok(toks)
}

impl ParsedPoly {
    /// Parses a sum of monomial terms in T and Y.
    pub fn parse(s: &str) -> Result<Self> {
        let toks = tokenize(s)?;
        if toks.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
        let mut i = 0usize;
        let mut first = true;
        while i < toks.len() {
            // sign
            let mut negative = false;
            match toks[i] {
                Tok::Plus => {
                    i += 1;
                }
                Tok::Minus => {
                    negative = true;
                    i += 1;
                }
                _ if first => {}
                _ => return Err(Error::Parse("expected '+' or '-' between terms".into())),
            }
            first = false;
            // one term: product of atoms
            let mut coeff = BigRational::one();
            let mut tpow = 0u32;
            let mut ypow = 0u32;
            let mut atoms = 0usize;
            loop {
                match toks.get(i) {
                    Some(Tok::Star) if atoms > 0 => {
                        i += 1;
                        continue;
                    }
                    Some(Tok::Num(n)) => {
                        i += 1;
                        let mut value = BigRational::from_integer(n.clone());
                        if toks.get(i) == Some(&Tok::Slash) {
                            i += 1;
                            match toks.get(i) {
                                Some(Tok::Num(d)) if !d.is_zero() => {
                                    value /= BigRational::from_integer(d.clone());
                                    i += 1;
                                }
                                _ => {
                                    return Err(Error::Parse(
                                        "expected nonzero integer denominator after '/'".into(),
                                    ))
                                }
                            }
                        }
                        coeff *= value;
                        atoms += 1;
                    }
                    Some(Tok::Var(v)) => {
                        let v = *v;
                        i += 1;
                        let mut e = 1u32;
                        if toks.get(i) == Some(&Tok::Caret) {
                            i += 1;
                            match toks.get(i) {
                                Some(Tok::Num(n)) => {
                                    e = u32::try_from(n.clone())
                                        .ok()
                                        .filter(|&e| e <= MAX_EXPONENT)
                                        .ok_or_else(|| {
                                            Error::Parse(format!(
                                                "exponent exceeds the supported maximum {MAX_EXPONENT}"
                                            ))
                                        })?;
                                    i += 1;
                                }
                                _ => return Err(Error::Parse("expected exponent after '^'".into())),
                            }
                        }
                        if v == 'T' {
                            tpow += e;
                        } else {
                            ypow += e;
                        }
                        atoms += 1;
                    }
                    _ => break,
                }
            }
            if atoms == 0 {
                return Err(Error::Parse("empty term".into()));
            }
            if negative {
                coeff = -coeff;
            }
            let slot = terms.entry((ypow, tpow)).or_insert_with(BigRational::zero);
            *slot += coeff;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(ParsedPoly { terms })
    }

    fn max_pows(&self) -> (u32, u32) {
        let y = self.terms.keys().map(|k| k.0).max().unwrap_or(0);
        let t = self.terms.keys().map(|k| k.1).max().unwrap_or(0);
        (y, t)
    }

    /// The single variable used, if at most one of T, Y occurs; constants
    /// report Y.
    pub fn single_var(&self) -> Option<char> {
        let (y, t) = self.max_pows();
        match (y > 0, t > 0) {
            (true, true) => None,
            (false, true) => Some('T'),
            _ => Some('Y'),
        }
    }

    pub fn to_rat_poly(&self) -> Result<RatPoly> {
        let var = self
            .single_var()
            .ok_or_else(|| Error::Parse("expected a univariate polynomial".into()))?;
        let (y, t) = self.max_pows();
        let deg = if var == 'T' { t } else { y } as usize;
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        for (&(yp, tp), c) in &self.terms {
            let k = if var == 'T' { tp } else { yp } as usize;
            coeffs[k] = c.clone();
        }
        Ok(Poly::from_coeffs(coeffs))
    }

    pub fn to_int_poly(&self) -> Result<IntPoly> {
        let rp = self.to_rat_poly()?;
        for c in rp.coeffs() {
            if !c.is_integer() {
                return Err(Error::Parse(format!("integer coefficients required, got {c}")));
            }
        }
        Ok(rp.map(|c| c.to_integer()))
    }

    pub fn to_bipoly(&self) -> Result<BiPoly> {
        let (ymax, tmax) = self.max_pows();
        let mut rows = vec![vec![BigInt::zero(); tmax as usize + 1]; ymax as usize + 1];
        for (&(yp, tp), c) in &self.terms {
            if !c.is_integer() {
                return Err(Error::Parse(format!("integer coefficients required, got {c}")));
            }
            rows[yp as usize][tp as usize] = c.to_integer();
        }
        BiPoly::new(rows.into_iter().map(IntPoly::from_coeffs).collect())
    }
}

/// Parses a univariate integer polynomial in T or Y.
pub fn parse_int_poly(s: &str) -> Result<IntPoly> {
    ParsedPoly::parse(s)?.to_int_poly()
}

/// Parses a univariate rational polynomial in T or Y.
pub fn parse_rat_poly(s: &str) -> Result<RatPoly> {
    ParsedPoly::parse(s)?.to_rat_poly()
}

/// Parses a monic-in-Y bivariate integer polynomial.
pub fn parse_bipoly(s: &str) -> Result<BiPoly> {
    ParsedPoly::parse(s)?.to_bipoly()
}

// ---- printing ----

struct Monomial {
    neg: bool,
    body: String,
}

fn monomial(coeff_abs: &str, coeff_is_one: bool, tpow: u32, ypow: u32, neg: bool) -> Monomial {
    let mut body = String::new();
    if !coeff_is_one || (tpow == 0 && ypow == 0) {
        body.push_str(coeff_abs);
    }
    for (v, e) in [('T', tpow), ('Y', ypow)] {
        if e == 1 {
            body.push(v);
        } else if e > 1 {
            body.push(v);
            body.push('^');
            body.push_str(&e.to_string());
        }
    }
    Monomial { neg, body }
}

fn join(monomials: Vec<Monomial>) -> String {
    if monomials.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, m) in monomials.iter().enumerate() {
        if i == 0 {
            if m.neg {
                out.push('-');
            }
        } else if m.neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&m.body);
    }
    out
}

/// Canonical form of an integer polynomial in the given variable,
/// descending powers.
pub fn fmt_int_poly(p: &IntPoly, var: char) -> String {
    let mut ms = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (tp, yp) = if var == 'T' { (k as u32, 0) } else { (0, k as u32) };
        ms.push(monomial(&c.abs().to_string(), c.abs().is_one(), tp, yp, c.is_negative()));
    }
    join(ms)
}

/// Canonical form of a rational polynomial; coefficients print as `a/b`.
pub fn fmt_rat_poly(p: &RatPoly, var: char) -> String {
    let mut ms = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (tp, yp) = if var == 'T' { (k as u32, 0) } else { (0, k as u32) };
        let abs = c.abs();
        let s = if abs.is_integer() {
            abs.to_integer().to_string()
        } else {
            format!("{}/{}", abs.numer(), abs.denom())
        };
        ms.push(monomial(&s, abs.is_one(), tp, yp, c.is_negative()));
    }
    join(ms)
}

/// Canonical form of a bivariate: descending powers of Y, then of T.
pub fn fmt_bivar(p: &super::IntBivar) -> String {
    let mut ms = Vec::new();
    for (yp, row) in p.coeffs().iter().enumerate().rev() {
        for (tp, c) in row.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            ms.push(monomial(
                &c.abs().to_string(),
                c.abs().is_one(),
                tp as u32,
                yp as u32,
                c.is_negative(),
            ));
        }
    }
    join(ms)
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_bivar(self.as_bivar()))
    }
}
