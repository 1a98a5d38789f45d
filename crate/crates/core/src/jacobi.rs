//! Jacobi parameters, orthogonal polynomials, Hankel determinants, and
//! continued-fraction expansions.
//!
//! Moments are produced by two independent routes — the weighted Motzkin
//! path sum and powers of the truncated tridiagonal Jacobi matrix — and
//! `moments_from_jacobi` asserts that they agree.

use crate::det::det_exact;
use crate::error::{Error, Result};
use crate::paths::{path_sum, ValuationScheme};
use crate::poly::MultiPoly;
use crate::series::TruncatedSeries;
use crate::symbol::{Symbol, SymbolFamily};
use crate::transforms::MomentSeq;

/// Jacobi parameters: `a[n]` holds a_n and `lam[k]` holds lambda_{k+1}
/// (lambda_0 is identically zero and never stored).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiParams {
    a: Vec<MultiPoly>,
    lam: Vec<MultiPoly>,
}

impl JacobiParams {
    pub fn new(a: Vec<MultiPoly>, lam: Vec<MultiPoly>) -> JacobiParams {
        JacobiParams { a, lam }
    }

    /// a_0..a_{depth} and lam_1..lam_{depth} as symbols.
    pub fn symbolic(depth: u32) -> JacobiParams {
        JacobiParams {
            a: (0..=depth)
                .map(|i| MultiPoly::symbol(SymbolFamily::A, i))
                .collect(),
            lam: (1..=depth)
                .map(|i| MultiPoly::symbol(SymbolFamily::Lambda, i))
                .collect(),
        }
    }

    pub fn a(&self) -> &[MultiPoly] {
        &self.a
    }

    pub fn lam(&self) -> &[MultiPoly] {
        &self.lam
    }

    pub fn a_at(&self, n: usize) -> Result<&MultiPoly> {
        self.a.get(n).ok_or(Error::IndexBeyondPrefix {
            family: SymbolFamily::A,
            index: n as u32,
        })
    }

    /// lambda_n for n >= 1.
    pub fn lam_at(&self, n: usize) -> Result<&MultiPoly> {
        assert!(n >= 1, "lambda_0 is the value zero, not a parameter");
        self.lam.get(n - 1).ok_or(Error::IndexBeyondPrefix {
            family: SymbolFamily::Lambda,
            index: n as u32,
        })
    }

    pub fn scheme(&self) -> ValuationScheme {
        ValuationScheme::MotzkinFlajolet {
            a: self.a.clone(),
            lam: self.lam.clone(),
        }
    }
}

/// Monic orthogonal polynomials P_0..P_n in the symbol `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonicPolySeq {
    polys: Vec<MultiPoly>,
}

impl MonicPolySeq {
    pub fn polys(&self) -> &[MultiPoly] {
        &self.polys
    }

    pub fn get(&self, n: usize) -> &MultiPoly {
        &self.polys[n]
    }
}

/// mu_n as the Flajolet path sum, cross-checked against the (0,0) entry
/// of J^n for the truncated Jacobi matrix.
pub fn moments_from_jacobi(j: &JacobiParams, n_max: usize) -> Result<MomentSeq> {
    // levels with a horizontal step reach at most (n-1)/2, falls need
    // lambda up to n/2
    if n_max >= 1 {
        j.a_at((n_max - 1) / 2)?;
    }
    if n_max >= 2 {
        j.lam_at(n_max / 2)?;
    }
    let scheme = j.scheme();
    let mut mu = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        mu.push(path_sum(n, &scheme, false)?);
    }
    let matrix_route = moments_by_matrix_power(j, n_max);
    assert_eq!(mu, matrix_route, "path sum and Jacobi matrix power disagree");
    MomentSeq::new(mu)
}

/// (J^n)_{00} for n = 0..n_max, computed by repeated application of the
/// tridiagonal matrix to e_0. The matrix is truncated at the highest level
/// reachable by a path of length n_max; diagonal entries above the highest
/// level admitting a horizontal step cannot contribute and default to zero.
fn moments_by_matrix_power(j: &JacobiParams, n_max: usize) -> Vec<MultiPoly> {
    let size = n_max / 2 + 1;
    let diag: Vec<MultiPoly> = (0..size)
        .map(|k| j.a.get(k).cloned().unwrap_or_else(MultiPoly::zero))
        .collect();
    let sub: Vec<MultiPoly> = (1..size)
        .map(|k| j.lam.get(k - 1).cloned().unwrap_or_else(MultiPoly::zero))
        .collect();
    let mut v = vec![MultiPoly::zero(); size];
    v[0] = MultiPoly::one();
    let mut mu = vec![MultiPoly::one()];
    for _ in 1..=n_max {
        let mut next = vec![MultiPoly::zero(); size];
        for k in 0..size {
            if v[k].is_zero() {
                continue;
            }
            // J e_k = e_{k+1} + a_k e_k + lambda_k e_{k-1}
            if k + 1 < size {
                next[k + 1] = &next[k + 1] + &v[k];
            }
            next[k] = &next[k] + &(&v[k] * &diag[k]);
            if k >= 1 {
                next[k - 1] = &next[k - 1] + &(&v[k] * &sub[k - 1]);
            }
        }
        v = next;
        mu.push(v[0].clone());
    }
    mu
}

/// Hankel matrix [mu_{i+j}] for 0 <= i, j <= n.
pub fn hankel_matrix(m: &MomentSeq, n: usize) -> Result<Vec<Vec<MultiPoly>>> {
    (0..=n)
        .map(|i| (0..=n).map(|j| m.get(i + j).cloned()).collect())
        .collect()
}

/// Delta_n; Delta_{-1} is 1 by the empty-determinant convention, reached
/// here by calling with n = None.
pub fn hankel_det(m: &MomentSeq, n: Option<usize>) -> Result<MultiPoly> {
    match n {
        None => Ok(MultiPoly::one()),
        Some(n) => Ok(det_exact(&hankel_matrix(m, n)?)),
    }
}

/// The bordered determinant Delta~_n: columns 0..n-1 and n+1 of the
/// Hankel matrix with rows 0..n.
pub fn hankel_det_tilde(m: &MomentSeq, n: usize) -> Result<MultiPoly> {
    let matrix: Vec<Vec<MultiPoly>> = (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    let col = if j == n { n + 1 } else { j };
                    m.get(i + col).cloned()
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(det_exact(&matrix))
}

/// Jacobi parameters from moments via the Hankel determinant formulas
/// lambda_n = Delta_{n-2} Delta_n / Delta_{n-1}^2 and
/// a_n = Delta~_n/Delta_n - Delta~_{n-1}/Delta_{n-1}.
///
/// From moments mu_0..mu_N this recovers a_0..a_K and lambda_1..lambda_K
/// with K = floor((N-1)/2), the prefix that `moments_from_jacobi`
/// reproduces from an order-N moment request.
pub fn jacobi_from_moments(m: &MomentSeq) -> Result<JacobiParams> {
    let order = m.order();
    if order == 0 {
        return Ok(JacobiParams::new(Vec::new(), Vec::new()));
    }
    let n_a = (order - 1) / 2 + 1;
    let mut delta = Vec::with_capacity(n_a + 1); // delta[k] = Delta_k
    for k in 0..n_a {
        let d = hankel_det(m, Some(k))?;
        if d.is_zero() {
            return Err(Error::SingularHankel(k));
        }
        delta.push(d);
    }
    let mut a = Vec::with_capacity(n_a);
    let mut prev_ratio = MultiPoly::zero(); // Delta~_{-1}/Delta_{-1} = 0
    for n in 0..n_a {
        let tilde = hankel_det_tilde(m, n)?;
        let ratio = tilde.div_exact(&delta[n])?;
        a.push(&ratio - &prev_ratio);
        prev_ratio = ratio;
    }
    let mut lam = Vec::with_capacity(n_a.saturating_sub(1));
    for n in 1..n_a {
        let prev2 = if n == 2 {
            delta[0].clone()
        } else if n >= 3 {
            delta[n - 2].clone()
        } else {
            MultiPoly::one() // Delta_{-1} = 1
        };
        let numer = &prev2 * &delta[n];
        lam.push(numer.div_exact(&delta[n - 1].pow(2))?);
    }
    Ok(JacobiParams::new(a, lam))
}

/// P_0..P_{n_max} by the three-term recurrence
/// x P_n = P_{n+1} + a_n P_n + lambda_n P_{n-1}.
pub fn orthopoly_recurrence(j: &JacobiParams, n_max: usize) -> Result<MonicPolySeq> {
    let x = MultiPoly::from_symbol(Symbol::x());
    let mut polys = vec![MultiPoly::one()];
    if n_max >= 1 {
        polys.push(&x - j.a_at(0)?);
    }
    for n in 1..n_max {
        let p_next = &(&(&x - j.a_at(n)?) * &polys[n]) - &(j.lam_at(n)? * &polys[n - 1]);
        polys.push(p_next);
    }
    Ok(MonicPolySeq { polys })
}

/// P_n as the bordered determinant D_n(x) divided by Delta_{n-1}.
pub fn orthopoly_determinant(m: &MomentSeq, n: usize) -> Result<MultiPoly> {
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let x = MultiPoly::from_symbol(Symbol::x());
    let mut matrix: Vec<Vec<MultiPoly>> = Vec::with_capacity(n + 1);
    for i in 0..n {
        matrix.push(
            (0..=n)
                .map(|j| m.get(i + j).cloned())
                .collect::<Result<_>>()?,
        );
    }
    matrix.push((0..=n).map(|j| x.pow(j as u32)).collect());
    let d_n = det_exact(&matrix);
    let delta_prev = hankel_det(m, Some(n - 1))?;
    if delta_prev.is_zero() {
        return Err(Error::SingularHankel(n - 1));
    }
    d_n.div_exact(&delta_prev)
}

#[derive(Debug, Clone)]
pub struct OrthogonalityReport {
    /// s_n = mu(P_n^2) for n = 0..n_max.
    pub diagonal: Vec<MultiPoly>,
    /// First (i, j) pair with a nonzero off-diagonal pairing, if any.
    pub first_failure: Option<(usize, usize, MultiPoly)>,
    /// Whether s_n equals lambda_1 * ... * lambda_n throughout.
    pub norms_match_product: bool,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none() && self.norms_match_product
    }
}

/// Applies the moment functional to all products P_i P_j for i, j <= n_max.
pub fn orthogonality_check(
    m: &MomentSeq,
    j: &JacobiParams,
    n_max: usize,
) -> Result<OrthogonalityReport> {
    let polys = orthopoly_recurrence(j, n_max)?;
    let mut diagonal = Vec::with_capacity(n_max + 1);
    let mut first_failure = None;
    for i in 0..=n_max {
        for k in i..=n_max {
            let pairing = (polys.get(i) * polys.get(k)).apply_moments(m.values())?;
            if i == k {
                diagonal.push(pairing);
            } else if !pairing.is_zero() && first_failure.is_none() {
                first_failure = Some((i, k, pairing));
            }
        }
    }
    let mut norms_match_product = true;
    let mut product = MultiPoly::one();
    for (n, s_n) in diagonal.iter().enumerate() {
        if n >= 1 {
            product = &product * j.lam_at(n)?;
        }
        if *s_n != product {
            norms_match_product = false;
        }
    }
    Ok(OrthogonalityReport { diagonal, first_failure, norms_match_product })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContfracKind {
    /// The moment generating function M(z).
    Moment,
    /// The boolean cumulant generating function H(z) = 1 - 1/M(z).
    Boolean,
}

/// Bottom-up evaluation of the finite continued fraction over truncated
/// series. A depth-d fraction uses a_0..a_d and lambda_1..lambda_d; the
/// depth is clamped to the supplied parameter prefix. Coefficients are
/// stabilized up to order 2*depth, enforced as a precondition.
pub fn contfrac_series(
    j: &JacobiParams,
    depth: usize,
    order: usize,
    which: ContfracKind,
) -> Result<TruncatedSeries> {
    if order > 2 * depth {
        return Err(Error::InsufficientDepth { order, depth });
    }
    if j.a.is_empty() {
        return Err(Error::IndexBeyondPrefix { family: SymbolFamily::A, index: 0 });
    }
    let d = depth.min(j.lam.len()).min(j.a.len() - 1);
    // tail from the innermost level outwards: T_k = 1/(1 - a_k z - lam_{k+1} z^2 T_{k+1})
    let mut tail = level_reciprocal(&j.a[d], None, order)?;
    for k in (0..d).rev() {
        tail = level_reciprocal(&j.a[k], Some((&j.lam[k], &tail)), order)?;
    }
    match which {
        ContfracKind::Moment => Ok(tail),
        ContfracKind::Boolean => {
            // H(z) = a_0 z + lam_1 z^2 T_1, per the boolean expansion
            let mut h = TruncatedSeries::zero(order);
            if order >= 1 {
                h.set_coeff(1, j.a[0].clone());
            }
            if d >= 1 && order >= 2 {
                let mut tail1 = level_reciprocal(&j.a[d], None, order)?;
                for k in (1..d).rev() {
                    tail1 = level_reciprocal(&j.a[k], Some((&j.lam[k], &tail1)), order)?;
                }
                h = &h + &tail1.shift_up(2).scale_poly(&j.lam[0]);
            }
            Ok(h)
        }
    }
}

fn level_reciprocal(
    a_k: &MultiPoly,
    deeper: Option<(&MultiPoly, &TruncatedSeries)>,
    order: usize,
) -> Result<TruncatedSeries> {
    let mut denom = TruncatedSeries::one(order);
    if order >= 1 {
        denom.set_coeff(1, -a_k);
    }
    if let Some((lam, tail)) = deeper {
        denom = &denom - &tail.shift_up(2).scale_poly(lam);
    }
    denom.reciprocal()
}
