//! Lattice paths, their enumeration, and valuation schemes.
//!
//! Paths are stored as level sequences `(pi(0), ..., pi(n))` with
//! `pi(0) = pi(n) = 0` and all levels nonnegative. Motzkin paths step by
//! +1/0/-1, Lukasiewicz paths additionally allow falls of any depth, so
//! every Motzkin path is also a valid Lukasiewicz path.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::symbol::{Symbol, SymbolFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Discipline {
    Motzkin,
    Lukasiewicz,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    levels: Vec<u32>,
}

impl LatticePath {
    /// Builds a path from its level sequence. Endpoints must be zero and
    /// no rise may exceed one (the Lukasiewicz discipline); falls of any
    /// depth are accepted.
    pub fn new(levels: Vec<u32>) -> Result<LatticePath> {
        if levels.is_empty() {
            return Err(Error::Parse("a path needs at least one point".into()));
        }
        if levels[0] != 0 || *levels.last().unwrap() != 0 {
            return Err(Error::Parse("path endpoints must lie on the axis".into()));
        }
        for w in levels.windows(2) {
            if w[1] > w[0] + 1 {
                return Err(Error::Parse(format!(
                    "illegal rise from level {} to {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(LatticePath { levels })
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    /// True when every step is +1/0/-1.
    pub fn is_motzkin(&self) -> bool {
        self.levels.windows(2).all(|w| w[0] <= w[1] + 1)
    }

    /// Touches the axis only at its endpoints (and has at least one step).
    pub fn is_irreducible(&self) -> bool {
        self.len() >= 1 && self.levels[1..self.len()].iter().all(|&y| y > 0)
    }

    /// |pi|_0: the number of indices i >= 1 with pi(i) = 0. Equals the
    /// number of irreducible factors.
    pub fn returns_to_zero(&self) -> usize {
        self.levels[1..].iter().filter(|&&y| y == 0).count()
    }

    /// Splits at every interior return to the axis; concatenating the
    /// factors reproduces the path.
    pub fn factorize_irreducible(&self) -> Vec<LatticePath> {
        let mut factors = Vec::new();
        let mut start = 0;
        for i in 1..self.levels.len() {
            if self.levels[i] == 0 {
                factors.push(LatticePath {
                    levels: self.levels[start..=i].to_vec(),
                });
                start = i;
            }
        }
        factors
    }

    /// Inverse of factorization: glues paths end to start, sharing the
    /// axis point between neighbours. The empty product is the length-0
    /// path.
    pub fn concat(factors: &[LatticePath]) -> LatticePath {
        let mut levels = vec![0];
        for f in factors {
            levels.extend_from_slice(&f.levels[1..]);
        }
        LatticePath { levels }
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.levels.iter().map(|y| y.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<LatticePath> {
        let levels = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid level {p:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        LatticePath::new(levels)
    }
}

/// Depth-first enumeration of all paths of a given length, increments
/// tried in the order +1, 0, -1, -2, ... so output order is deterministic.
pub fn enumerate_paths(
    n: usize,
    discipline: Discipline,
    irreducible_only: bool,
) -> PathEnumerator {
    PathEnumerator {
        n,
        discipline,
        irreducible_only,
        levels: vec![0],
        incs: Vec::new(),
        resume: None,
        exhausted: n == 0 && irreducible_only,
        hold_complete: n == 0 && !irreducible_only,
    }
}

pub struct PathEnumerator {
    n: usize,
    discipline: Discipline,
    irreducible_only: bool,
    levels: Vec<u32>,
    incs: Vec<i64>,
    resume: Option<i64>,
    exhausted: bool,
    // set when `levels` holds a complete path not yet emitted
    hold_complete: bool,
}

impl PathEnumerator {
    fn allowed(&self, steps_taken: usize, next_level: i64) -> bool {
        let remaining = self.n - steps_taken;
        if remaining == 0 {
            return next_level == 0;
        }
        if self.irreducible_only && next_level == 0 {
            return false;
        }
        match self.discipline {
            // each later step can drop at most one level
            Discipline::Motzkin => next_level <= remaining as i64,
            Discipline::Lukasiewicz => true,
        }
    }
}

impl Iterator for PathEnumerator {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        loop {
            if self.exhausted {
                return None;
            }
            if self.hold_complete {
                self.hold_complete = false;
                let path = LatticePath { levels: self.levels.clone() };
                if self.n == 0 {
                    self.exhausted = true;
                } else {
                    // resume the search below the emitted path
                    self.levels.pop();
                    self.resume = Some(self.incs.pop().unwrap());
                }
                return Some(path);
            }
            let steps = self.levels.len() - 1;
            let level = *self.levels.last().unwrap() as i64;
            let min_inc = match self.discipline {
                Discipline::Motzkin => (-1).max(-level),
                Discipline::Lukasiewicz => -level,
            };
            let mut d = match self.resume.take() {
                Some(prev) => prev - 1,
                None => 1,
            };
            let mut chosen = None;
            while d >= min_inc {
                if self.allowed(steps + 1, level + d) {
                    chosen = Some(d);
                    break;
                }
                d -= 1;
            }
            match chosen {
                Some(d) => {
                    self.levels.push((level + d) as u32);
                    self.incs.push(d);
                    if self.levels.len() == self.n + 1 {
                        self.hold_complete = true;
                    }
                }
                None => {
                    if steps == 0 {
                        self.exhausted = true;
                        return None;
                    }
                    self.levels.pop();
                    self.resume = Some(self.incs.pop().unwrap());
                }
            }
        }
    }
}

/// Per-step weights for path valuations. Parameter lists are finite
/// prefixes: `lam[k]` holds lambda_{k+1}, `c[k]` holds c_{k+1},
/// `kappa[k]` holds kappa_{k+1}, and `a[k]` holds a_k. Accessing beyond
/// a prefix is an error, never an implicit zero.
#[derive(Debug, Clone)]
pub enum ValuationScheme {
    MotzkinFlajolet { a: Vec<MultiPoly>, lam: Vec<MultiPoly> },
    LukasFree { c: Vec<MultiPoly> },
    LukasClassical { kappa: Vec<MultiPoly> },
}

impl ValuationScheme {
    pub fn discipline(&self) -> Discipline {
        match self {
            ValuationScheme::MotzkinFlajolet { .. } => Discipline::Motzkin,
            _ => Discipline::Lukasiewicz,
        }
    }

    /// Fully symbolic Flajolet scheme with a_0..a_max_level and
    /// lam_1..lam_max_level.
    pub fn motzkin_symbolic(max_level: u32) -> ValuationScheme {
        ValuationScheme::MotzkinFlajolet {
            a: (0..=max_level)
                .map(|i| MultiPoly::symbol(SymbolFamily::A, i))
                .collect(),
            lam: (1..=max_level)
                .map(|i| MultiPoly::symbol(SymbolFamily::Lambda, i))
                .collect(),
        }
    }

    pub fn lukas_free_symbolic(max_index: u32) -> ValuationScheme {
        ValuationScheme::LukasFree {
            c: (1..=max_index)
                .map(|i| MultiPoly::symbol(SymbolFamily::C, i))
                .collect(),
        }
    }

    pub fn lukas_classical_symbolic(max_index: u32) -> ValuationScheme {
        ValuationScheme::LukasClassical {
            kappa: (1..=max_index)
                .map(|i| MultiPoly::symbol(SymbolFamily::Kappa, i))
                .collect(),
        }
    }

    /// Weight of a single step between two levels.
    pub fn step_weight(&self, from: u32, to: u32) -> Result<MultiPoly> {
        if to > from + 1 {
            return Err(Error::SchemeMismatch { from, to });
        }
        match self {
            ValuationScheme::MotzkinFlajolet { a, lam } => {
                if to == from + 1 {
                    Ok(MultiPoly::one())
                } else if to == from {
                    a.get(from as usize).cloned().ok_or(Error::IndexBeyondPrefix {
                        family: SymbolFamily::A,
                        index: from,
                    })
                } else if to + 1 == from {
                    lam.get(from as usize - 1).cloned().ok_or(Error::IndexBeyondPrefix {
                        family: SymbolFamily::Lambda,
                        index: from,
                    })
                } else {
                    Err(Error::SchemeMismatch { from, to })
                }
            }
            ValuationScheme::LukasFree { c } => {
                if to == from + 1 {
                    Ok(MultiPoly::one())
                } else {
                    let k = (from - to) as usize;
                    c.get(k).cloned().ok_or(Error::IndexBeyondPrefix {
                        family: SymbolFamily::C,
                        index: (k + 1) as u32,
                    })
                }
            }
            ValuationScheme::LukasClassical { kappa } => {
                if to == from + 1 {
                    Ok(MultiPoly::from_int((from + 1) as i64))
                } else {
                    let k = (from - to) as usize;
                    let base = kappa.get(k).cloned().ok_or(Error::IndexBeyondPrefix {
                        family: SymbolFamily::Kappa,
                        index: (k + 1) as u32,
                    })?;
                    Ok(base.scale(&Rational::factorial(k).recip().unwrap()))
                }
            }
        }
    }

    /// Product of the step weights of a path.
    pub fn valuate(&self, path: &LatticePath) -> Result<MultiPoly> {
        let mut acc = MultiPoly::one();
        for w in path.levels().windows(2) {
            acc = &acc * &self.step_weight(w[0], w[1])?;
        }
        Ok(acc)
    }
}

/// Sum of valuations over all paths of length `n`, optionally restricted
/// to irreducible ones. This is the workhorse behind the moment and
/// boolean-cumulant path formulas.
pub fn path_sum(n: usize, scheme: &ValuationScheme, irreducible_only: bool) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero();
    for path in enumerate_paths(n, scheme.discipline(), irreducible_only) {
        acc = &acc + &scheme.valuate(&path)?;
    }
    Ok(acc)
}

/// Symbol helpers used all over the tests.
pub fn sym(family: SymbolFamily, index: u32) -> MultiPoly {
    MultiPoly::from_symbol(Symbol::new(family, index))
}
