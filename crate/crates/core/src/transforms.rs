//! Conversions between moments and the free, classical, and boolean
//! cumulant families, all at the level of truncated generating functions.
//!
//! The free direction is computed twice on purpose: once by Lagrange
//! coefficient extraction, once by reversion of z*M(z) followed by
//! composition. The two routes must agree exactly and `free_from_moments`
//! asserts that they do.

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::series::TruncatedSeries;
use crate::symbol::SymbolFamily;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CumulantKind {
    Free,
    Classical,
    Boolean,
}

impl CumulantKind {
    pub fn name(self) -> &'static str {
        match self {
            CumulantKind::Free => "free",
            CumulantKind::Classical => "classical",
            CumulantKind::Boolean => "boolean",
        }
    }

    pub fn symbol_family(self) -> SymbolFamily {
        match self {
            CumulantKind::Free => SymbolFamily::C,
            CumulantKind::Classical => SymbolFamily::Kappa,
            CumulantKind::Boolean => SymbolFamily::H,
        }
    }
}

/// Moments mu_0..mu_N with mu_0 = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSeq {
    mu: Vec<MultiPoly>,
}

impl MomentSeq {
    pub fn new(mu: Vec<MultiPoly>) -> Result<MomentSeq> {
        if mu.is_empty() || !mu[0].is_one() {
            return Err(Error::Parse("moment sequence must start with mu_0 = 1".into()));
        }
        Ok(MomentSeq { mu })
    }

    pub fn from_rationals(values: Vec<Rational>) -> Result<MomentSeq> {
        MomentSeq::new(values.into_iter().map(MultiPoly::from_rational).collect())
    }

    /// mu_0 = 1 and mu_1..mu_order as symbols.
    pub fn symbolic(order: usize) -> MomentSeq {
        let mut mu = vec![MultiPoly::one()];
        mu.extend((1..=order).map(|n| MultiPoly::symbol(SymbolFamily::Mu, n as u32)));
        MomentSeq { mu }
    }

    pub fn order(&self) -> usize {
        self.mu.len() - 1
    }

    pub fn values(&self) -> &[MultiPoly] {
        &self.mu
    }

    pub fn get(&self, n: usize) -> Result<&MultiPoly> {
        self.mu.get(n).ok_or(Error::InsufficientMoments {
            needed: n,
            available: self.order(),
        })
    }

    /// Ordinary moment generating function as a truncated series.
    pub fn to_series(&self) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(self.mu.clone())
    }
}

/// Cumulants indexed from 1: `values[k]` holds the (k+1)-st cumulant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CumulantSeq {
    pub kind: CumulantKind,
    values: Vec<MultiPoly>,
}

impl CumulantSeq {
    pub fn new(kind: CumulantKind, values: Vec<MultiPoly>) -> CumulantSeq {
        CumulantSeq { kind, values }
    }

    /// k_1..k_order as symbols of the kind's family.
    pub fn symbolic(kind: CumulantKind, order: usize) -> CumulantSeq {
        let family = kind.symbol_family();
        CumulantSeq {
            kind,
            values: (1..=order)
                .map(|n| MultiPoly::symbol(family, n as u32))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[MultiPoly] {
        &self.values
    }

    /// The n-th cumulant, n >= 1.
    pub fn get(&self, n: usize) -> &MultiPoly {
        &self.values[n - 1]
    }
}

/// Free cumulants via c_n = -1/(n-1) [z^n] M(z)^{-(n-1)} (and c_1 = mu_1,
/// forced by C(zM(z)) = M(z) at order one).
pub fn free_from_moments_lagrange(m: &MomentSeq) -> CumulantSeq {
    let order = m.order();
    let series = m.to_series();
    let mut values = Vec::with_capacity(order);
    if order >= 1 {
        values.push(series.coeff(1).clone());
    }
    let m_inv = series.reciprocal().expect("mu_0 = 1 is invertible");
    let mut power = m_inv.clone(); // M^{-(n-1)} for n = 2
    for n in 2..=order {
        let c_n = (-power.coeff(n)).scale(&Rational::new(1, (n - 1) as i64));
        values.push(c_n);
        power = &power * &m_inv;
    }
    CumulantSeq::new(CumulantKind::Free, values)
}

/// Free cumulants via the functional equation C(zM(z)) = M(z): revert
/// phi(z) = z*M(z) and compose.
pub fn free_from_moments_reversion(m: &MomentSeq) -> CumulantSeq {
    let order = m.order();
    let series = m.to_series();
    if order == 0 {
        return CumulantSeq::new(CumulantKind::Free, Vec::new());
    }
    let phi = series.shift_up(1);
    let psi = phi.reverse().expect("z*M(z) has unit linear coefficient");
    let c_series = series.compose(&psi).expect("psi(0) = 0");
    let values = c_series.coeffs()[1..].to_vec();
    CumulantSeq::new(CumulantKind::Free, values)
}

/// Free cumulants; computes both routes and insists they agree.
pub fn free_from_moments(m: &MomentSeq) -> CumulantSeq {
    let lagrange = free_from_moments_lagrange(m);
    let reversion = free_from_moments_reversion(m);
    assert_eq!(
        lagrange, reversion,
        "Lagrange and reversion routes for free cumulants disagree"
    );
    lagrange
}

/// Moments from free cumulants by fixed-point iteration on
/// M(z) = C(z*M(z)); each pass stabilizes one more coefficient, so
/// exactly `order` passes suffice.
pub fn moments_from_free(c: &CumulantSeq) -> MomentSeq {
    assert_eq!(c.kind, CumulantKind::Free);
    let order = c.order();
    let mut coeffs = vec![MultiPoly::one()];
    coeffs.extend_from_slice(c.values());
    let c_series = TruncatedSeries::from_coeffs(coeffs);
    let mut m = TruncatedSeries::one(order);
    for _ in 0..order {
        let inner = m.shift_up(1);
        m = c_series.compose(&inner).expect("z*M(z) vanishes at zero");
    }
    MomentSeq { mu: m.coeffs().to_vec() }
}

/// kappa_n = n! [z^n] log(sum mu_k z^k / k!).
pub fn classical_from_moments(m: &MomentSeq) -> CumulantSeq {
    let order = m.order();
    let f = exponential_series(m.values());
    let k = f.log().expect("exponential MGF has constant term 1");
    let values = (1..=order)
        .map(|n| k.coeff(n).scale(&Rational::factorial(n)))
        .collect();
    CumulantSeq::new(CumulantKind::Classical, values)
}

pub fn moments_from_classical(c: &CumulantSeq) -> MomentSeq {
    assert_eq!(c.kind, CumulantKind::Classical);
    let order = c.order();
    let mut weighted = vec![MultiPoly::zero()];
    weighted.extend(
        c.values()
            .iter()
            .enumerate()
            .map(|(i, v)| v.scale(&Rational::factorial(i + 1).recip().unwrap())),
    );
    let k = TruncatedSeries::from_coeffs(weighted);
    let f = k.exp().expect("cumulant series vanishes at zero");
    let mu = (0..=order)
        .map(|n| f.coeff(n).scale(&Rational::factorial(n)))
        .collect();
    MomentSeq { mu }
}

/// h_n = [z^n] (1 - 1/M(z)).
pub fn boolean_from_moments(m: &MomentSeq) -> CumulantSeq {
    let order = m.order();
    let series = m.to_series();
    let h = &TruncatedSeries::one(order) - &series.reciprocal().expect("mu_0 = 1");
    CumulantSeq::new(CumulantKind::Boolean, h.coeffs()[1..].to_vec())
}

/// M(z) = 1 / (1 - H(z)).
pub fn moments_from_boolean(c: &CumulantSeq) -> MomentSeq {
    assert_eq!(c.kind, CumulantKind::Boolean);
    let order = c.order();
    let mut coeffs = vec![MultiPoly::zero()];
    coeffs.extend_from_slice(c.values());
    let h = TruncatedSeries::from_coeffs(coeffs);
    let m = (&TruncatedSeries::one(order) - &h)
        .reciprocal()
        .expect("1 - H has constant term 1");
    MomentSeq { mu: m.coeffs().to_vec() }
}

/// Single free cumulant from boolean cumulants by the composition sum
/// c_n = sum_{r=1}^{n-1} sum_{i_1+..+i_r=n} (-1)^{r-1}/(n-1) C(n-1, r)
///       h_{i_1} ... h_{i_r},  valid for n >= 2.
pub fn free_cumulant_from_boolean(h: &[MultiPoly], n: usize) -> Result<MultiPoly> {
    if n < 2 {
        return Err(Error::BadOrder(n));
    }
    if h.len() < n {
        return Err(Error::InsufficientMoments { needed: n, available: h.len() });
    }
    let mut acc = MultiPoly::zero();
    for r in 1..n {
        let sign = if r % 2 == 1 { Rational::one() } else { -Rational::one() };
        let coeff = &(&sign * &Rational::binomial(n - 1, r)) * &Rational::new(1, (n - 1) as i64);
        if coeff.is_zero() {
            continue;
        }
        let mut comp_sum = MultiPoly::zero();
        compositions(n, r, &mut Vec::new(), &mut |parts| {
            let mut prod = MultiPoly::one();
            for &i in parts {
                prod = &prod * &h[i - 1];
            }
            comp_sum = &comp_sum + &prod;
        });
        acc = &acc + &comp_sum.scale(&coeff);
    }
    Ok(acc)
}

/// Free cumulants c_1..c_n from boolean cumulants h_1..h_n; c_1 = h_1.
pub fn free_from_boolean(h: &CumulantSeq, n: usize) -> Result<CumulantSeq> {
    assert_eq!(h.kind, CumulantKind::Boolean);
    let mut values = Vec::with_capacity(n);
    if n >= 1 {
        values.push(h.get(1).clone());
    }
    for k in 2..=n {
        values.push(free_cumulant_from_boolean(h.values(), k)?);
    }
    Ok(CumulantSeq::new(CumulantKind::Free, values))
}

/// Any cumulant family from moments.
pub fn cumulants_from_moments(kind: CumulantKind, m: &MomentSeq) -> CumulantSeq {
    match kind {
        CumulantKind::Free => free_from_moments(m),
        CumulantKind::Classical => classical_from_moments(m),
        CumulantKind::Boolean => boolean_from_moments(m),
    }
}

/// Moments from any cumulant family.
pub fn moments_from_cumulants(c: &CumulantSeq) -> MomentSeq {
    match c.kind {
        CumulantKind::Free => moments_from_free(c),
        CumulantKind::Classical => moments_from_classical(c),
        CumulantKind::Boolean => moments_from_boolean(c),
    }
}

fn exponential_series(values: &[MultiPoly]) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(
        values
            .iter()
            .enumerate()
            .map(|(n, v)| v.scale(&Rational::factorial(n).recip().unwrap()))
            .collect(),
    )
}

fn compositions(n: usize, r: usize, prefix: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if r == 0 {
        if n == 0 {
            f(prefix);
        }
        return;
    }
    if n < r {
        return;
    }
    for first in 1..=(n - (r - 1)) {
        prefix.push(first);
        compositions(n - first, r - 1, prefix, f);
        prefix.pop();
    }
}
