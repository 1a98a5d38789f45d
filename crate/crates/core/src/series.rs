//! Truncated formal power series with polynomial coefficients.
//!
//! A series of order `N` carries exact coefficients for `z^0 .. z^N`.
//! Binary operations truncate to the minimum of the operand orders, so a
//! coefficient is never reported beyond the order to which it is known.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<MultiPoly>,
}

impl TruncatedSeries {
    pub fn from_coeffs(coeffs: Vec<MultiPoly>) -> TruncatedSeries {
        assert!(!coeffs.is_empty(), "a series must carry at least z^0");
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> TruncatedSeries {
        TruncatedSeries { coeffs: vec![MultiPoly::zero(); order + 1] }
    }

    pub fn one(order: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = MultiPoly::one();
        s
    }

    /// The identity series z.
    pub fn z(order: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = MultiPoly::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &MultiPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, value: MultiPoly) {
        self.coeffs[n] = value;
    }

    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        let order = order.min(self.order());
        TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MultiPoly::is_zero)
    }

    /// Multiplication by a single monomial z^k (coefficients shift up).
    pub fn shift_up(&self, k: usize) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.order());
        for n in k..=self.order() {
            out.coeffs[n] = self.coeffs[n - k].clone();
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect() }
    }

    pub fn scale_poly(&self, p: &MultiPoly) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| c * p).collect() }
    }

    /// 1/f, requiring f(0) to be a nonzero rational constant.
    pub fn reciprocal(&self) -> Result<TruncatedSeries> {
        let c0 = self.coeffs[0]
            .as_rational()
            .filter(|r| !r.is_zero())
            .ok_or(Error::NonInvertibleConstantTerm)?;
        let inv0 = c0.recip().unwrap();
        let n = self.order();
        let mut out = TruncatedSeries::zero(n);
        out.coeffs[0] = MultiPoly::from_rational(inv0.clone());
        for k in 1..=n {
            let mut acc = MultiPoly::zero();
            for j in 1..=k {
                acc = &acc + &(&self.coeffs[j] * &out.coeffs[k - j]);
            }
            out.coeffs[k] = (-&acc).scale(&inv0);
        }
        Ok(out)
    }

    /// Integer power; negative exponents go through `reciprocal`.
    pub fn pow(&self, exp: i64) -> Result<TruncatedSeries> {
        let base = if exp < 0 { self.reciprocal()? } else { self.clone() };
        let mut acc = TruncatedSeries::one(self.order());
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// f(g(z)); requires g(0) = 0.
    pub fn compose(&self, inner: &TruncatedSeries) -> Result<TruncatedSeries> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionConstantTerm);
        }
        let order = self.order().min(inner.order());
        let f = self.truncate(order);
        let g = inner.truncate(order);
        // Horner evaluation in g
        let mut acc = TruncatedSeries::zero(order);
        for k in (0..=order).rev() {
            acc = &acc * &g;
            acc.coeffs[0] = &acc.coeffs[0] + f.coeff(k);
        }
        Ok(acc)
    }

    /// Compositional inverse: h with g(h(z)) = z up to the truncation
    /// order. Requires g(0) = 0 and an invertible rational [z^1]g.
    pub fn reverse(&self) -> Result<TruncatedSeries> {
        let order = self.order();
        if order < 1 || !self.coeffs[0].is_zero() {
            return Err(Error::NotReversible);
        }
        let g1 = self.coeffs[1]
            .as_rational()
            .filter(|r| !r.is_zero())
            .ok_or(Error::NotReversible)?;
        let g1_inv = g1.recip().unwrap();
        // g(w) = g1*w + r(w); iterate h <- (z - r(h)) / g1, one coefficient
        // stabilizes per pass.
        let mut tail = self.clone();
        tail.coeffs[1] = MultiPoly::zero();
        let mut h = TruncatedSeries::z(order).scale(&g1_inv);
        for _ in 0..order {
            let correction = tail.compose(&h)?;
            h = (&TruncatedSeries::z(order) - &correction).scale(&g1_inv);
        }
        Ok(h)
    }

    /// Formal logarithm; requires f(0) = 1. Uses the derivative
    /// recurrence l' = f'/f with exact integer divisions.
    pub fn log(&self) -> Result<TruncatedSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm);
        }
        let n = self.order();
        let mut out = TruncatedSeries::zero(n);
        for k in 1..=n {
            // k*l_k = k*f_k - sum_{j=1}^{k-1} j*l_j*f_{k-j}
            let mut acc = self.coeffs[k].scale(&Rational::from(k as i64));
            for j in 1..k {
                let term = (&out.coeffs[j] * &self.coeffs[k - j]).scale(&Rational::from(j as i64));
                acc = &acc - &term;
            }
            out.coeffs[k] = acc.scale(&Rational::new(1, k as i64));
        }
        Ok(out)
    }

    /// Formal exponential; requires g(0) = 0.
    pub fn exp(&self) -> Result<TruncatedSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm);
        }
        let n = self.order();
        let mut out = TruncatedSeries::one(n);
        for k in 1..=n {
            // k*e_k = sum_{j=1}^{k} j*g_j*e_{k-j}
            let mut acc = MultiPoly::zero();
            for j in 1..=k {
                let term = (&self.coeffs[j] * &out.coeffs[k - j]).scale(&Rational::from(j as i64));
                acc = &acc + &term;
            }
            out.coeffs[k] = acc.scale(&Rational::new(1, k as i64));
        }
        Ok(out)
    }
}

impl Add<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl Sub<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl Mul<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = TruncatedSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        out
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::SymbolFamily;

    fn rat_series(vals: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(vals.iter().map(|&v| MultiPoly::from_int(v)).collect())
    }

    #[test]
    fn geometric_reciprocal() {
        // 1/(1-z) at order 4
        let f = rat_series(&[1, -1, 0, 0, 0]);
        assert_eq!(f.reciprocal().unwrap(), rat_series(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn product_truncates_to_min_order() {
        let f = rat_series(&[1, 1, 0]);
        let g = rat_series(&[1, -1, 0, 0, 0]);
        let p = &f * &g;
        assert_eq!(p.order(), 2);
        assert_eq!(p, rat_series(&[1, 0, -1]));
    }

    #[test]
    fn symbolic_square() {
        // (1 - h_1 z - h_2 z^2)^2
        let h1 = MultiPoly::symbol(SymbolFamily::H, 1);
        let h2 = MultiPoly::symbol(SymbolFamily::H, 2);
        let f = TruncatedSeries::from_coeffs(vec![
            MultiPoly::one(),
            -&h1,
            -&h2,
            MultiPoly::zero(),
            MultiPoly::zero(),
        ]);
        let sq = f.pow(2).unwrap();
        assert_eq!(*sq.coeff(0), MultiPoly::one());
        assert_eq!(*sq.coeff(1), (-&h1).scale(&Rational::from(2)));
        assert_eq!(*sq.coeff(2), &h1.pow(2) - &h2.scale(&Rational::from(2)));
        assert_eq!(*sq.coeff(3), (&h1 * &h2).scale(&Rational::from(2)));
        assert_eq!(*sq.coeff(4), h2.pow(2));
    }

    #[test]
    fn compose_geometric() {
        // f = 1/(1-w), g = z/(1-z): coefficients 1, 1, 2, 4, 8
        let f = rat_series(&[1, 1, 1, 1, 1]);
        let g = rat_series(&[0, 1, 1, 1, 1]);
        assert_eq!(f.compose(&g).unwrap(), rat_series(&[1, 1, 2, 4, 8]));
    }

    #[test]
    fn compose_monomial_inner() {
        let f = rat_series(&[1, 1, 0, 0]);
        let g = TruncatedSeries::z(3).shift_up(1); // z^2
        assert_eq!(f.compose(&g).unwrap(), rat_series(&[1, 0, 1, 0]));
    }

    #[test]
    fn compose_rejects_nonzero_constant() {
        let f = rat_series(&[1, 1]);
        assert_eq!(f.compose(&f), Err(Error::CompositionConstantTerm));
    }

    #[test]
    fn reverse_catalan() {
        // g = z - z^2, inverse has Catalan coefficients
        let g = rat_series(&[0, 1, -1, 0, 0]);
        assert_eq!(g.reverse().unwrap(), rat_series(&[0, 1, 1, 2, 5]));
    }

    #[test]
    fn reverse_moebius() {
        // g = z/(1-z) reverses to z/(1+z)
        let g = rat_series(&[0, 1, 1, 1, 1]);
        assert_eq!(g.reverse().unwrap(), rat_series(&[0, 1, -1, 1, -1]));
    }

    #[test]
    fn reverse_is_inverse_under_composition() {
        let g = rat_series(&[0, 1, 3, -2, 5, 1]);
        let h = g.reverse().unwrap();
        assert_eq!(g.compose(&h).unwrap(), TruncatedSeries::z(5));
        assert_eq!(h.compose(&g).unwrap(), TruncatedSeries::z(5));
    }

    #[test]
    fn reverse_identity() {
        let z = TruncatedSeries::z(4);
        assert_eq!(z.reverse().unwrap(), z);
    }

    #[test]
    fn log_classic() {
        // log(1/(1-z)) = z + z^2/2 + z^3/3 + z^4/4
        let f = rat_series(&[1, -1, 0, 0, 0]).reciprocal().unwrap();
        let l = f.log().unwrap();
        let expected = TruncatedSeries::from_coeffs(vec![
            MultiPoly::zero(),
            MultiPoly::one(),
            MultiPoly::from_rational(Rational::new(1, 2)),
            MultiPoly::from_rational(Rational::new(1, 3)),
            MultiPoly::from_rational(Rational::new(1, 4)),
        ]);
        assert_eq!(l, expected);
    }

    #[test]
    fn exp_log_round_trip() {
        let f = rat_series(&[1, 1, 3, 0, 0, 0]);
        assert_eq!(f.log().unwrap().exp().unwrap(), f);
    }

    #[test]
    fn log_rejects_bad_constant() {
        assert_eq!(rat_series(&[2, 1]).log(), Err(Error::BadConstantTerm));
        assert_eq!(rat_series(&[1, 1]).exp(), Err(Error::BadConstantTerm));
    }

    #[test]
    fn reciprocal_rejects_zero_constant() {
        assert_eq!(
            rat_series(&[0, 1]).reciprocal(),
            Err(Error::NonInvertibleConstantTerm)
        );
        let h1 = MultiPoly::symbol(SymbolFamily::H, 1);
        let f = TruncatedSeries::from_coeffs(vec![h1, MultiPoly::one()]);
        assert_eq!(f.reciprocal(), Err(Error::NonInvertibleConstantTerm));
    }
}
