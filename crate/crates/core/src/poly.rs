//! Sparse multivariate polynomials over `Rational`.
//!
//! Terms are kept in a `BTreeMap` keyed by `Monomial` under the graded
//! lexicographic order, so iteration (and therefore printing) is canonical.
//! Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::symbol::{Monomial, Symbol, SymbolFamily};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> MultiPoly {
        MultiPoly::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(Monomial::one(), r);
        }
        MultiPoly { terms }
    }

    pub fn from_int(n: i64) -> MultiPoly {
        MultiPoly::from_rational(Rational::from(n))
    }

    pub fn from_symbol(s: Symbol) -> MultiPoly {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::from_symbol(s), Rational::one());
        MultiPoly { terms }
    }

    pub fn symbol(family: SymbolFamily, index: u32) -> MultiPoly {
        MultiPoly::from_symbol(Symbol::new(family, index))
    }

    pub fn from_term(m: Monomial, c: Rational) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().map_or(false, |r| r.is_one())
    }

    /// The polynomial viewed as a constant, `None` if any symbol occurs.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, r: &Rational) -> MultiPoly {
        if r.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Leading term under the graded lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact division; fails with `InexactDivision` if `self` is not a
    /// polynomial multiple of `divisor`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision);
        }
        if let Some(r) = divisor.as_rational() {
            return Ok(self.scale(&r.recip().unwrap()));
        }
        let (lead_m, lead_c) = divisor.leading_term().unwrap();
        let mut remainder = self.clone();
        let mut quotient = MultiPoly::zero();
        while let Some((rm, rc)) = remainder.leading_term() {
            let qm = rm.try_div(lead_m).ok_or(Error::InexactDivision)?;
            let qc = rc / lead_c;
            let step = MultiPoly::from_term(qm, qc);
            remainder = &remainder - &(&step * divisor);
            quotient = &quotient + &step;
        }
        Ok(quotient)
    }

    /// Total degree in one symbol family.
    pub fn degree_in(&self, family: SymbolFamily) -> u32 {
        self.terms
            .keys()
            .map(|m| m.split_family(family).0)
            .max()
            .unwrap_or(0)
    }

    /// Applies a moment functional: every power `x^k` is replaced by
    /// `moments[k]`. Used to evaluate pairings of orthogonal polynomials.
    pub fn apply_moments(&self, moments: &[MultiPoly]) -> Result<MultiPoly> {
        let x = Symbol::x();
        let mut acc = MultiPoly::zero();
        for (m, c) in &self.terms {
            let k = m.exponent(x) as usize;
            let (_, rest) = m.split_family(SymbolFamily::X);
            let mu = moments.get(k).ok_or(Error::InsufficientMoments {
                needed: k,
                available: moments.len().saturating_sub(1),
            })?;
            acc = &acc + &mu.scale(c).mul(&MultiPoly::from_term(rest, Rational::one()));
        }
        Ok(acc)
    }

    /// Coefficient of `x^k`, itself a polynomial in the other symbols.
    pub fn coeff_of_x(&self, k: u32) -> MultiPoly {
        let x = Symbol::x();
        let mut acc = MultiPoly::zero();
        for (m, c) in &self.terms {
            if m.exponent(x) == k {
                let (_, rest) = m.split_family(SymbolFamily::X);
                acc.add_term(rest, c.clone());
            }
        }
        acc
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical form: terms in descending graded lex order, coefficients
    /// as `p/q`, e.g. `a_0^2*lam_1 - 1/2*a_1 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    /// Parses the canonical form produced by `Display` (whitespace around
    /// `+`/`-` is flexible).
    fn from_str(s: &str) -> Result<MultiPoly> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut poly = MultiPoly::zero();
        let mut rest = s;
        let mut sign = Rational::one();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -Rational::one();
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        }
        loop {
            // a term ends at the next top-level " + " or " - "
            let end = rest
                .char_indices()
                .find(|&(i, ch)| {
                    (ch == '+' || ch == '-') && rest[..i].ends_with(' ')
                })
                .map(|(i, _)| i);
            let (term_str, remainder) = match end {
                Some(i) => (&rest[..i], &rest[i..]),
                None => (rest, ""),
            };
            let (m, c) = parse_term(term_str.trim())?;
            poly.add_term(m, &c * &sign);
            if remainder.is_empty() {
                break;
            }
            sign = if remainder.starts_with('-') {
                -Rational::one()
            } else {
                Rational::one()
            };
            rest = remainder[1..].trim_start();
        }
        Ok(poly)
    }
}

fn parse_term(s: &str) -> Result<(Monomial, Rational)> {
    let mut coeff = Rational::one();
    let mut factors = Vec::new();
    for piece in s.split('*') {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(Error::Parse(format!("empty factor in term {s:?}")));
        }
        if piece.chars().next().unwrap().is_ascii_digit() {
            coeff = &coeff * &piece.parse::<Rational>()?;
        } else {
            let (sym_str, exp) = match piece.split_once('^') {
                Some((b, e)) => (
                    b,
                    e.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("invalid exponent in {piece:?}")))?,
                ),
                None => (piece, 1),
            };
            factors.push((sym_str.parse::<Symbol>()?, exp));
        }
    }
    Ok((Monomial::from_factors(factors), coeff))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: u32) -> MultiPoly {
        MultiPoly::symbol(SymbolFamily::A, i)
    }

    fn lam(i: u32) -> MultiPoly {
        MultiPoly::symbol(SymbolFamily::Lambda, i)
    }

    fn c(i: u32) -> MultiPoly {
        MultiPoly::symbol(SymbolFamily::C, i)
    }

    #[test]
    fn cancellation() {
        // (a_0 + lam_1) - a_0 = lam_1
        let sum = &(&a(0) + &lam(1)) - &a(0);
        assert_eq!(sum, lam(1));
    }

    #[test]
    fn square() {
        let sq = &a(0) * &a(0);
        assert_eq!(sq.to_string(), "a_0^2");
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&c(1) + &c(2)) * &(&c(1) - &c(2));
        assert_eq!(p, &c(1).pow(2) - &c(2).pow(2));
        assert_eq!(p.to_string(), "c_1^2 - c_2^2");
    }

    #[test]
    fn exact_division() {
        let prod = &(&a(0) + &lam(1)) * &(&a(1) - &MultiPoly::from_int(3));
        let q = prod.div_exact(&(&a(0) + &lam(1))).unwrap();
        assert_eq!(q, &a(1) - &MultiPoly::from_int(3));
        assert_eq!(
            (&prod + &MultiPoly::one()).div_exact(&(&a(0) + &lam(1))),
            Err(Error::InexactDivision)
        );
    }

    #[test]
    fn display_parse_round_trip() {
        let p = &(&a(0).pow(2) * &lam(1)) - &(&c(3).scale(&Rational::new(1, 2)) - &MultiPoly::from_int(7));
        let s = p.to_string();
        assert_eq!(s.parse::<MultiPoly>().unwrap(), p);
        assert_eq!("0".parse::<MultiPoly>().unwrap(), MultiPoly::zero());
        assert_eq!("-x^2 + 1".parse::<MultiPoly>().unwrap().to_string(), "-x^2 + 1");
    }

    #[test]
    fn apply_moments_replaces_x_powers() {
        // x^2 - 1 under Gaussian moments (1, 0, 1) -> 0
        let p = &MultiPoly::from_symbol(Symbol::x()).pow(2) - &MultiPoly::one();
        let moments = vec![MultiPoly::one(), MultiPoly::zero(), MultiPoly::one()];
        assert!(p.apply_moments(&moments).unwrap().is_zero());
    }
}
