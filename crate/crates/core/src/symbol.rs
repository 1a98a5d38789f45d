//! Indexed symbols and monomials.
//!
//! Symbols come in seven families: Jacobi parameters `a_i` and `lam_i`,
//! free cumulants `c_i`, classical cumulants `kap_i`, boolean cumulants
//! `h_i`, moments `mu_i`, and the polynomial variable `x`. Monomials are
//! ordered graded-lexicographically so that printed output is canonical.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymbolFamily {
    A,
    Lambda,
    C,
    Kappa,
    H,
    Mu,
    X,
}

impl SymbolFamily {
    pub fn prefix(self) -> &'static str {
        match self {
            SymbolFamily::A => "a",
            SymbolFamily::Lambda => "lam",
            SymbolFamily::C => "c",
            SymbolFamily::Kappa => "kap",
            SymbolFamily::H => "h",
            SymbolFamily::Mu => "mu",
            SymbolFamily::X => "x",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    pub family: SymbolFamily,
    pub index: u32,
}

impl Symbol {
    /// `lam_0` is the value zero in every formula, never a symbol.
    pub fn new(family: SymbolFamily, index: u32) -> Symbol {
        assert!(
            !(family == SymbolFamily::Lambda && index == 0),
            "lam_0 is a value (zero), not a symbol"
        );
        Symbol { family, index }
    }

    pub fn x() -> Symbol {
        Symbol { family: SymbolFamily::X, index: 0 }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family == SymbolFamily::X {
            write!(f, "x")
        } else {
            write!(f, "{}_{}", self.family.prefix(), self.index)
        }
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "x" {
            return Ok(Symbol::x());
        }
        let bad = || Error::Parse(format!("invalid symbol {s:?}"));
        let (prefix, index) = s.split_once('_').ok_or_else(bad)?;
        let family = match prefix {
            "a" => SymbolFamily::A,
            "lam" => SymbolFamily::Lambda,
            "c" => SymbolFamily::C,
            "kap" => SymbolFamily::Kappa,
            "h" => SymbolFamily::H,
            "mu" => SymbolFamily::Mu,
            _ => return Err(bad()),
        };
        let index: u32 = index.parse().map_err(|_| bad())?;
        if family == SymbolFamily::Lambda && index == 0 {
            return Err(bad());
        }
        Ok(Symbol { family, index })
    }
}

/// Product of symbol powers; exponents are at least one and factors are
/// sorted by symbol. The empty monomial is the multiplicative unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(Symbol, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { factors: Vec::new() }
    }

    pub fn from_symbol(s: Symbol) -> Monomial {
        Monomial { factors: vec![(s, 1)] }
    }

    pub fn from_factors(mut factors: Vec<(Symbol, u32)>) -> Monomial {
        factors.retain(|&(_, e)| e > 0);
        factors.sort_by_key(|&(s, _)| s);
        let mut merged: Vec<(Symbol, u32)> = Vec::with_capacity(factors.len());
        for (s, e) in factors {
            match merged.last_mut() {
                Some((t, f)) if *t == s => *f += e,
                _ => merged.push((s, e)),
            }
        }
        Monomial { factors: merged }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(Symbol, u32)] {
        &self.factors
    }

    pub fn total_degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Monomial::from_factors(factors)
    }

    /// Exact monomial quotient, `None` when some exponent of `other`
    /// exceeds the corresponding exponent of `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut result = self.factors.clone();
        for &(s, e) in &other.factors {
            let pos = result.iter().position(|&(t, _)| t == s)?;
            if result[pos].1 < e {
                return None;
            }
            result[pos].1 -= e;
        }
        Some(Monomial::from_factors(result))
    }

    /// Exponent of a given symbol (zero when absent).
    pub fn exponent(&self, s: Symbol) -> u32 {
        self.factors
            .iter()
            .find(|&&(t, _)| t == s)
            .map_or(0, |&(_, e)| e)
    }

    /// Splits off every factor of the given family, returning its total
    /// degree in that family and the remaining monomial.
    pub fn split_family(&self, family: SymbolFamily) -> (u32, Monomial) {
        let mut degree = 0;
        let mut rest = Vec::new();
        for &(s, e) in &self.factors {
            if s.family == family {
                degree += e;
            } else {
                rest.push((s, e));
            }
        }
        (degree, Monomial { factors: rest })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the sorted factor
    /// lists compared lexicographically with higher exponents earlier.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                for (&(s, e), &(t, f)) in self.factors.iter().zip(&other.factors) {
                    match s.cmp(&t) {
                        // smaller symbol means that factor dominates
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => match e.cmp(&f) {
                            Ordering::Equal => continue,
                            ord => return ord,
                        },
                    }
                }
                self.factors.len().cmp(&other.factors.len())
            })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(s, e) in &self.factors {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}
