//! Built-in named moment sequences used as cross-check inputs.

use crate::error::Result;
use crate::jacobi::{moments_from_jacobi, JacobiParams};
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::transforms::{moments_from_free, CumulantKind, CumulantSeq, MomentSeq};

/// Semicircle law: a = 0, lambda = 1. Even moments are the Catalan numbers.
pub fn semicircle(order: usize) -> Result<MomentSeq> {
    let depth = order / 2 + 1;
    let j = JacobiParams::new(
        vec![MultiPoly::zero(); depth + 1],
        vec![MultiPoly::one(); depth],
    );
    moments_from_jacobi(&j, order)
}

/// Standard Gaussian: a = 0, lambda_n = n. Moments are 1, 0, 1, 0, 3, 0, 15, ...
pub fn gaussian_hermite(order: usize) -> Result<MomentSeq> {
    let depth = order / 2 + 1;
    let lam = (1..=depth).map(|n| MultiPoly::from_int(n as i64)).collect();
    let j = JacobiParams::new(vec![MultiPoly::zero(); depth + 1], lam);
    moments_from_jacobi(&j, order)
}

/// Point mass at t: mu_n = t^n.
pub fn point_mass(order: usize, t: &Rational) -> MomentSeq {
    point_mass_poly(order, &MultiPoly::from_rational(t.clone()))
}

/// Point mass with a polynomial atom (e.g. the symbol x for symbolic work).
pub fn point_mass_poly(order: usize, t: &MultiPoly) -> MomentSeq {
    let mu = (0..=order as u32).map(|n| t.pow(n)).collect();
    MomentSeq::new(mu).unwrap()
}

/// Free Poisson (Marchenko-Pastur) with rate parameter folded in: c_n = t
/// for all n >= 1.
pub fn free_poisson(order: usize, t: &Rational) -> MomentSeq {
    let c = CumulantSeq::new(
        CumulantKind::Free,
        vec![MultiPoly::from_rational(t.clone()); order],
    );
    moments_from_free(&c)
}

/// The Jacobi parameters behind the two orthogonal-polynomial entries.
pub fn semicircle_jacobi(depth: usize) -> JacobiParams {
    JacobiParams::new(
        vec![MultiPoly::zero(); depth + 1],
        vec![MultiPoly::one(); depth],
    )
}

pub fn gaussian_hermite_jacobi(depth: usize) -> JacobiParams {
    JacobiParams::new(
        vec![MultiPoly::zero(); depth + 1],
        (1..=depth).map(|n| MultiPoly::from_int(n as i64)).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::Symbol;

    #[test]
    fn semicircle_catalan_moments() {
        let m = semicircle(8).unwrap();
        let expect = [1, 0, 1, 0, 2, 0, 5, 0, 14];
        for (n, &v) in expect.iter().enumerate() {
            assert_eq!(*m.get(n).unwrap(), MultiPoly::from_int(v));
        }
    }

    #[test]
    fn gaussian_double_factorials() {
        let m = gaussian_hermite(8).unwrap();
        let expect = [1, 0, 1, 0, 3, 0, 15, 0, 105];
        for (n, &v) in expect.iter().enumerate() {
            assert_eq!(*m.get(n).unwrap(), MultiPoly::from_int(v));
        }
    }

    #[test]
    fn point_mass_powers() {
        let m = point_mass(4, &Rational::new(2, 3));
        assert_eq!(*m.get(3).unwrap(), MultiPoly::from_rational(Rational::new(8, 27)));
        let x = MultiPoly::from_symbol(Symbol::x());
        let s = point_mass_poly(3, &x);
        assert_eq!(*s.get(2).unwrap(), x.pow(2));
        assert_eq!(
            s.get(2).unwrap().coefficient(&crate::symbol::Monomial::from_factors(vec![(
                Symbol::x(),
                2
            )])),
            Rational::one()
        );
    }

    #[test]
    fn free_poisson_small_moments() {
        // mu_1 = t, mu_2 = t^2 + t, mu_3 = t^3 + 3t^2 + t
        let m = free_poisson(3, &Rational::from(1));
        assert_eq!(*m.get(2).unwrap(), MultiPoly::from_int(2));
        assert_eq!(*m.get(3).unwrap(), MultiPoly::from_int(5));
        let m2 = free_poisson(3, &Rational::from(2));
        assert_eq!(*m2.get(3).unwrap(), MultiPoly::from_int(8 + 12 + 2));
    }
}
