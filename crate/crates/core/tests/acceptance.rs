//! End-to-end acceptance checks. Each test is one criterion and reports a
//! single pass/fail line via the harness.

use momentlab::catalog;
use momentlab::identities::{
    all_specs, check_gv, free_cumulant_motzkin, free_cumulant_motzkin_ledger, gv_model,
    hankel_minor_det, hankel_minor_gv, lambda_staircase, no_cancellation_check,
    HankelMinorSpec, DEFAULT_MAX_CONFIGS,
};
use momentlab::jacobi::{
    contfrac_series, hankel_det, jacobi_from_moments, moments_from_jacobi, orthogonality_check,
    orthopoly_determinant, orthopoly_recurrence, ContfracKind, JacobiParams,
};
use momentlab::paths::{enumerate_paths, path_sum, sym, Discipline, LatticePath};
use momentlab::poly::MultiPoly;
use momentlab::rational::Rational;
use momentlab::symbol::SymbolFamily;
use momentlab::transforms::{
    boolean_from_moments, classical_from_moments, free_cumulant_from_boolean, free_from_moments,
    free_from_moments_lagrange, free_from_moments_reversion, moments_from_boolean,
    moments_from_classical, moments_from_free, MomentSeq,
};
use momentlab::{Error, Monomial, Symbol};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn criterion_01_signed_motzkin_sum_equals_lagrange_free_cumulant() {
    for n in 2..=7 {
        let j = JacobiParams::symbolic((n / 2) as u32);
        let motzkin = free_cumulant_motzkin(&j, n).unwrap();
        let moments = moments_from_jacobi(&j, n).unwrap();
        let lagrange = free_from_moments(&moments);
        assert_eq!(motzkin, *lagrange.get(n), "order {n}");
    }
}

#[test]
fn criterion_02_worked_low_order_cumulants_with_path_ledger() {
    let j = JacobiParams::symbolic(1);
    let lam1 = sym(SymbolFamily::Lambda, 1);
    let a0 = sym(SymbolFamily::A, 0);
    let a1 = sym(SymbolFamily::A, 1);

    assert_eq!(free_cumulant_motzkin(&j, 2).unwrap(), lam1);
    assert_eq!(
        free_cumulant_motzkin(&j, 3).unwrap(),
        &lam1 * &(&a1 - &a0)
    );

    // the all-horizontal path is annihilated by the vanishing binomial
    let ledger = free_cumulant_motzkin_ledger(&j, 3).unwrap();
    assert_eq!(ledger.len(), 4);
    for entry in &ledger {
        match entry.path.levels() {
            [0, 0, 0, 0] => {
                assert_eq!(entry.returns, 3);
                assert!(entry.coefficient.is_zero());
            }
            [0, 1, 1, 0] => assert_eq!(entry.value(), &a1 * &lam1),
            [0, 0, 1, 0] | [0, 1, 0, 0] => {
                assert_eq!(entry.value(), (&a0 * &lam1).scale(&Rational::new(-1, 2)))
            }
            other => panic!("unexpected path {other:?}"),
        }
    }
}

#[test]
fn criterion_03_sign_coherence_and_return_structure() {
    for n in 2..=7 {
        let report = no_cancellation_check(n).unwrap();
        assert!(report.conflicting_monomials.is_empty(), "order {n}");
        assert!(report.return_count_mismatches.is_empty(), "order {n}");
    }
}

#[test]
fn criterion_04_hankel_determinant_staircase_and_unique_configuration() {
    let j = JacobiParams::symbolic(5);
    let moments = moments_from_jacobi(&j, 10).unwrap();
    for n in 1..=5 {
        assert_eq!(
            hankel_det(&moments, Some(n)).unwrap(),
            lambda_staircase(n),
            "Delta_{n}"
        );
    }
    let report = hankel_minor_gv(
        &JacobiParams::symbolic(4).scheme(),
        &HankelMinorSpec::principal(4),
        DEFAULT_MAX_CONFIGS,
    )
    .unwrap();
    assert_eq!(report.configurations.len(), 1);
    assert_eq!(report.total, lambda_staircase(4));
}

#[test]
fn criterion_05_gessel_viennot_equals_determinant_with_cancelling_pair() {
    assert!(check_gv(Discipline::Motzkin, 3).unwrap());
    assert!(check_gv(Discipline::Lukasiewicz, 3).unwrap());
    assert_eq!(all_specs(3).len(), 69);

    // the classic cancelling pair: in the free-cumulant model the
    // (0,1,2; 1,2,3) minor picks up +c_1^2 c_2^2 c_3 and -c_1^2 c_2^2 c_3
    // from two crossing configurations (every term of that minor has
    // c-weight 9, so this is the smallest spec where the pair can occur)
    let (scheme, moments) = gv_model(Discipline::Lukasiewicz, 5).unwrap();
    let spec = HankelMinorSpec::new(vec![0, 1, 2], vec![1, 2, 3]).unwrap();
    let report = hankel_minor_gv(&scheme, &spec, DEFAULT_MAX_CONFIGS).unwrap();
    assert_eq!(report.total, hankel_minor_det(&moments, &spec).unwrap());
    let pair = MultiPoly::from_term(
        Monomial::from_factors(vec![
            (Symbol::new(SymbolFamily::C, 1), 2),
            (Symbol::new(SymbolFamily::C, 2), 2),
            (Symbol::new(SymbolFamily::C, 3), 1),
        ]),
        Rational::one(),
    );
    let plus = report.configurations.iter().filter(|c| c.value == pair).count();
    let minus = report
        .configurations
        .iter()
        .filter(|c| c.value == -&pair)
        .count();
    assert!(plus >= 1 && minus >= 1, "plus {plus} minus {minus}");
}

#[test]
fn criterion_06_transform_round_trips_to_order_sixteen() {
    let mut rng = ChaCha8Rng::seed_from_u64(20260823);
    for case in 0..100 {
        let mut mu = vec![MultiPoly::one()];
        for _ in 0..16 {
            let num = rng.gen_range(-12..=12i64);
            let den = rng.gen_range(1..=9i64);
            mu.push(MultiPoly::from_rational(Rational::new(num, den)));
        }
        let m = MomentSeq::new(mu).unwrap();

        let free = free_from_moments(&m);
        assert_eq!(moments_from_free(&free), m, "free round trip, case {case}");
        assert_eq!(
            free_from_moments_lagrange(&m),
            free_from_moments_reversion(&m),
            "route agreement, case {case}"
        );

        let classical = classical_from_moments(&m);
        assert_eq!(
            moments_from_classical(&classical),
            m,
            "classical round trip, case {case}"
        );

        let boolean = boolean_from_moments(&m);
        assert_eq!(
            moments_from_boolean(&boolean),
            m,
            "boolean round trip, case {case}"
        );
    }
}

#[test]
fn criterion_07_catalog_identities() {
    let gaussian = catalog::gaussian_hermite(8).unwrap();
    let kappa = classical_from_moments(&gaussian);
    for n in 1..=8 {
        let expect = if n == 2 { MultiPoly::one() } else { MultiPoly::zero() };
        assert_eq!(*kappa.get(n), expect, "kappa_{n}");
    }
    let recovered = jacobi_from_moments(&gaussian).unwrap();
    assert_eq!(recovered.a(), vec![MultiPoly::zero(); 4]);
    assert_eq!(
        recovered.lam(),
        vec![MultiPoly::from_int(1), MultiPoly::from_int(2), MultiPoly::from_int(3)]
    );

    let semicircle = catalog::semicircle(8).unwrap();
    let c = free_from_moments(&semicircle);
    for n in 1..=8 {
        let expect = if n == 2 { MultiPoly::one() } else { MultiPoly::zero() };
        assert_eq!(*c.get(n), expect, "c_{n}");
    }

    let point = catalog::point_mass(8, &Rational::one());
    let h = boolean_from_moments(&point);
    for n in 1..=8 {
        let expect = if n == 1 { MultiPoly::one() } else { MultiPoly::zero() };
        assert_eq!(*h.get(n), expect, "h_{n}");
    }
    assert!(matches!(
        jacobi_from_moments(&point),
        Err(Error::SingularHankel(1))
    ));
}

#[test]
fn criterion_08_path_counts_and_factorization() {
    let motzkin = [1usize, 1, 2, 4, 9, 21, 51, 127, 323];
    for (n, &count) in motzkin.iter().enumerate() {
        assert_eq!(
            enumerate_paths(n, Discipline::Motzkin, false).count(),
            count,
            "Motzkin n = {n}"
        );
    }
    let catalan = [1usize, 1, 2, 5, 14, 42, 132];
    for (n, &count) in catalan.iter().enumerate() {
        assert_eq!(
            enumerate_paths(n, Discipline::Lukasiewicz, false).count(),
            count,
            "Lukasiewicz n = {n}"
        );
    }
    for discipline in [Discipline::Motzkin, Discipline::Lukasiewicz] {
        for n in 1..=8 {
            for path in enumerate_paths(n, discipline, false) {
                let factors = path.factorize_irreducible();
                assert!(factors.iter().all(LatticePath::is_irreducible));
                assert_eq!(LatticePath::concat(&factors), path);
            }
        }
    }
}

#[test]
fn criterion_09_boolean_triangle_and_free_from_boolean() {
    let j = JacobiParams::symbolic(4);
    let scheme = j.scheme();
    let moments = moments_from_jacobi(&j, 8).unwrap();
    let h_gf = boolean_from_moments(&moments);
    let h_cf = contfrac_series(&j, 4, 8, ContfracKind::Boolean).unwrap();
    for n in 1..=8 {
        let irr = path_sum(n, &scheme, true).unwrap();
        assert_eq!(irr, *h_gf.get(n), "generating-function route, n = {n}");
        assert_eq!(irr, *h_cf.coeff(n), "continued-fraction route, n = {n}");
    }
    let h: Vec<MultiPoly> = (1..=7).map(|n| path_sum(n, &scheme, true).unwrap()).collect();
    for n in 2..=7 {
        assert_eq!(
            free_cumulant_from_boolean(&h, n).unwrap(),
            free_cumulant_motzkin(&j, n).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn criterion_10_orthogonal_polynomial_routes_and_orthogonality() {
    // symbolic agreement of the two constructions
    let j = JacobiParams::symbolic(3);
    let m = moments_from_jacobi(&j, 6).unwrap();
    let rec = orthopoly_recurrence(&j, 3).unwrap();
    for n in 0..=3 {
        assert_eq!(orthopoly_determinant(&m, n).unwrap(), *rec.get(n), "symbolic n = {n}");
    }

    // numeric agreement on a rational-parameter instance
    let jn = JacobiParams::new(
        (0..7).map(|k| MultiPoly::from_rational(Rational::new(k - 3, 2))).collect(),
        (1..7).map(|k| MultiPoly::from_rational(Rational::new(k + 1, 3))).collect(),
    );
    let mn = moments_from_jacobi(&jn, 12).unwrap();
    let recn = orthopoly_recurrence(&jn, 6).unwrap();
    for n in 0..=6 {
        assert_eq!(orthopoly_determinant(&mn, n).unwrap(), *recn.get(n), "numeric n = {n}");
    }

    // Hermite: <P_n, P_n> = n!
    let hermite = catalog::gaussian_hermite_jacobi(4);
    let hm = moments_from_jacobi(&hermite, 8).unwrap();
    let report = orthogonality_check(&hm, &hermite, 4).unwrap();
    assert!(report.passed());
    for (n, norm) in report.diagonal.iter().enumerate() {
        assert_eq!(
            *norm,
            MultiPoly::from_rational(Rational::factorial(n)),
            "Hermite norm n = {n}"
        );
    }

    // semicircle: <P_n, P_n> = 1
    let semi = catalog::semicircle_jacobi(4);
    let sm = moments_from_jacobi(&semi, 8).unwrap();
    let report = orthogonality_check(&sm, &semi, 4).unwrap();
    assert!(report.passed());
    for (n, norm) in report.diagonal.iter().enumerate() {
        assert_eq!(*norm, MultiPoly::one(), "semicircle norm n = {n}");
    }
}
