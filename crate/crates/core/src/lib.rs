//! Exact arithmetic for moment sequences, cumulants, lattice-path sums,
//! and Jacobi parameters.
//!
//! Everything is computed over exact rationals and sparse multivariate
//! polynomials; every identity exposed here holds coefficient-for-
//! coefficient, not numerically.

pub mod catalog;
pub mod det;
pub mod error;
pub mod identities;
pub mod jacobi;
pub mod paths;
pub mod poly;
pub mod rational;
pub mod series;
pub mod symbol;
pub mod transforms;

pub use error::{Error, Result};
pub use identities::{
    boolean_from_paths, free_cumulant_motzkin, free_cumulant_motzkin_ledger, hankel_minor_det,
    hankel_minor_gv, no_cancellation_check, verify_suite, GvReport, HankelMinorSpec,
    NoCancellationReport, PathConfiguration, PathContribution, VerifyEntry, VerifyReport,
    DEFAULT_MAX_CONFIGS,
};
pub use jacobi::{
    contfrac_series, hankel_det, hankel_det_tilde, jacobi_from_moments, moments_from_jacobi,
    orthogonality_check, orthopoly_determinant, orthopoly_recurrence, ContfracKind, JacobiParams,
    MonicPolySeq, OrthogonalityReport,
};
pub use paths::{enumerate_paths, path_sum, Discipline, LatticePath, ValuationScheme};
pub use poly::MultiPoly;
pub use rational::Rational;
pub use series::TruncatedSeries;
pub use symbol::{Monomial, Symbol, SymbolFamily};
pub use transforms::{
    boolean_from_moments, classical_from_moments, cumulants_from_moments, free_from_boolean,
    free_from_moments, moments_from_boolean, moments_from_classical, moments_from_cumulants,
    moments_from_free, CumulantKind, CumulantSeq, MomentSeq,
};
