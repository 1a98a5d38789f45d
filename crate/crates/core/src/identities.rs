//! The headline identities, executable and cross-checked: the signed
//! Motzkin-path formula for free cumulants, boolean cumulants as
//! irreducible-path sums, and Gessel-Viennot evaluation of Hankel minors.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::jacobi::{
    contfrac_series, hankel_det, jacobi_from_moments, moments_from_jacobi, orthogonality_check,
    orthopoly_determinant, orthopoly_recurrence, ContfracKind, JacobiParams,
};
use crate::paths::{enumerate_paths, path_sum, Discipline, LatticePath, ValuationScheme};
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::transforms::{
    boolean_from_moments, free_cumulant_from_boolean, free_from_moments,
    free_from_moments_lagrange, free_from_moments_reversion, moments_from_boolean,
    moments_from_classical, moments_from_free, classical_from_moments, CumulantKind, CumulantSeq,
    MomentSeq,
};
use crate::symbol::{Monomial, SymbolFamily};

pub const DEFAULT_MAX_CONFIGS: u64 = 10_000_000;

/// One Motzkin path's contribution to the free cumulant sum:
/// (-1)^{r-1}/(n-1) * C(n-1, r) * v(path) with r the number of returns
/// to zero.
#[derive(Debug, Clone)]
pub struct PathContribution {
    pub path: LatticePath,
    pub returns: usize,
    pub coefficient: Rational,
    pub valuation: MultiPoly,
}

impl PathContribution {
    pub fn value(&self) -> MultiPoly {
        self.valuation.scale(&self.coefficient)
    }
}

/// Per-path ledger of the free-cumulant Motzkin sum for c_n, n >= 2.
pub fn free_cumulant_motzkin_ledger(
    j: &JacobiParams,
    n: usize,
) -> Result<Vec<PathContribution>> {
    if n < 2 {
        return Err(Error::BadOrder(n));
    }
    let scheme = j.scheme();
    let mut ledger = Vec::new();
    for path in enumerate_paths(n, Discipline::Motzkin, false) {
        let returns = path.returns_to_zero();
        let sign = if returns % 2 == 1 { Rational::one() } else { -Rational::one() };
        let coefficient = &(&sign * &Rational::binomial(n - 1, returns))
            * &Rational::new(1, (n - 1) as i64);
        let valuation = scheme.valuate(&path)?;
        ledger.push(PathContribution { path, returns, coefficient, valuation });
    }
    Ok(ledger)
}

/// c_n as the signed sum over all Motzkin paths of length n.
pub fn free_cumulant_motzkin(j: &JacobiParams, n: usize) -> Result<MultiPoly> {
    let mut acc = MultiPoly::zero();
    for contribution in free_cumulant_motzkin_ledger(j, n)? {
        acc = &acc + &contribution.value();
    }
    Ok(acc)
}

#[derive(Debug, Clone, Default)]
pub struct NoCancellationReport {
    /// Monomials receiving contributions of both signs (expected empty).
    pub conflicting_monomials: Vec<Monomial>,
    /// Paths where |pi|_0 differs from (#level-0 horizontals + #falls to
    /// zero) (expected empty).
    pub return_count_mismatches: Vec<LatticePath>,
}

impl NoCancellationReport {
    pub fn passed(&self) -> bool {
        self.conflicting_monomials.is_empty() && self.return_count_mismatches.is_empty()
    }
}

/// Groups the contributions to c_n (fully symbolic parameters) by
/// monomial and verifies that each monomial is hit with one sign only;
/// also checks the structural identity behind that fact.
pub fn no_cancellation_check(n: usize) -> Result<NoCancellationReport> {
    let j = JacobiParams::symbolic((n / 2) as u32);
    let mut report = NoCancellationReport::default();
    let mut signs: Vec<(Monomial, bool)> = Vec::new();
    for contribution in free_cumulant_motzkin_ledger(&j, n)? {
        let levels = contribution.path.levels();
        let zero_horizontals = levels
            .windows(2)
            .filter(|w| w[0] == 0 && w[1] == 0)
            .count();
        let falls_to_zero = levels
            .windows(2)
            .filter(|w| w[1] == 0 && w[0] > 0)
            .count();
        if contribution.returns != zero_horizontals + falls_to_zero {
            report.return_count_mismatches.push(contribution.path.clone());
        }
        if contribution.coefficient.is_zero() {
            continue;
        }
        // a symbolic valuation is a single monomial
        let (monomial, _) = contribution.valuation.terms().next().unwrap();
        let negative = contribution.coefficient.is_negative();
        match signs.iter().find(|(m, _)| m == monomial) {
            Some(&(_, prev)) if prev != negative => {
                report.conflicting_monomials.push(monomial.clone());
            }
            Some(_) => {}
            None => signs.push((monomial.clone(), negative)),
        }
    }
    Ok(report)
}

/// h_n as a sum over irreducible paths of the scheme's discipline.
pub fn boolean_from_paths(scheme: &ValuationScheme, n: usize) -> Result<MultiPoly> {
    if n < 1 {
        return Err(Error::BadOrder(n));
    }
    path_sum(n, scheme, true)
}

/// A Hankel minor H(i_1..i_p; j_1..j_p): row and column index lists,
/// strictly increasing and of equal length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HankelMinorSpec {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl HankelMinorSpec {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<HankelMinorSpec> {
        if rows.len() != cols.len() || rows.is_empty() {
            return Err(Error::Parse("row and column lists must match and be nonempty".into()));
        }
        for list in [&rows, &cols] {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Parse("index lists must be strictly increasing".into()));
            }
        }
        Ok(HankelMinorSpec { rows, cols })
    }

    /// The principal minor (0..n; 0..n), i.e. Delta_n.
    pub fn principal(n: usize) -> HankelMinorSpec {
        HankelMinorSpec { rows: (0..=n).collect(), cols: (0..=n).collect() }
    }

    /// The bordered minor (0..n; 0..n-1, n+1), i.e. Delta~_n.
    pub fn bordered(n: usize) -> HankelMinorSpec {
        let mut cols: Vec<usize> = (0..n).collect();
        cols.push(n + 1);
        HankelMinorSpec { rows: (0..=n).collect(), cols }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn max_moment(&self) -> usize {
        self.rows.last().unwrap() + self.cols.last().unwrap()
    }
}

/// det [mu_{i_r + j_s}] directly from the moments.
pub fn hankel_minor_det(m: &MomentSeq, spec: &HankelMinorSpec) -> Result<MultiPoly> {
    let matrix: Vec<Vec<MultiPoly>> = spec
        .rows
        .iter()
        .map(|&i| {
            spec.cols
                .iter()
                .map(|&j| m.get(i + j).cloned())
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    Ok(crate::det::det_exact(&matrix))
}

/// One non-intersecting path configuration: path k runs from
/// (-i_k, 0) to (j_{perm[k]}, 0).
#[derive(Debug, Clone)]
pub struct PathConfiguration {
    pub perm: Vec<usize>,
    pub paths: Vec<LatticePath>,
    pub sign: i8,
    /// sign * product of the path valuations.
    pub value: MultiPoly,
}

#[derive(Debug, Clone)]
pub struct GvReport {
    pub configurations: Vec<PathConfiguration>,
    pub total: MultiPoly,
}

/// Gessel-Viennot evaluation of a Hankel minor: enumerates all tuples of
/// pairwise vertex-disjoint paths (path k from (-i_k, 0) to
/// (j_{sigma(k)}, 0)) and sums sign(sigma) times the valuation product.
/// A zero-length path occupies its single point and blocks it.
pub fn hankel_minor_gv(
    scheme: &ValuationScheme,
    spec: &HankelMinorSpec,
    max_configs: u64,
) -> Result<GvReport> {
    let p = spec.size();
    // path sets per (row, col) cell, with translated vertex lists
    let mut cells: Vec<Vec<Vec<(MultiPoly, Vec<(i64, u32)>, LatticePath)>>> =
        Vec::with_capacity(p);
    for &i in &spec.rows {
        let mut row = Vec::with_capacity(p);
        for &j in &spec.cols {
            let start_x = -(i as i64);
            let mut entries = Vec::new();
            for path in enumerate_paths(i + j, scheme.discipline(), false) {
                let value = scheme.valuate(&path)?;
                let vertices: Vec<(i64, u32)> = path
                    .levels()
                    .iter()
                    .enumerate()
                    .map(|(t, &y)| (start_x + t as i64, y))
                    .collect();
                entries.push((value, vertices, path));
            }
            row.push(entries);
        }
        cells.push(row);
    }

    let mut state = GvState {
        cells: &cells,
        used_cols: vec![false; p],
        occupied: HashSet::new(),
        assignment: Vec::with_capacity(p),
        chosen: Vec::with_capacity(p),
        partials: 0,
        max_configs,
        configurations: Vec::new(),
    };
    state.search(0)?;

    let mut total = MultiPoly::zero();
    for config in &state.configurations {
        total = &total + &config.value;
    }
    Ok(GvReport { configurations: state.configurations, total })
}

struct GvState<'a> {
    cells: &'a [Vec<Vec<(MultiPoly, Vec<(i64, u32)>, LatticePath)>>],
    used_cols: Vec<bool>,
    occupied: HashSet<(i64, u32)>,
    assignment: Vec<usize>,
    chosen: Vec<usize>,
    partials: u64,
    max_configs: u64,
    configurations: Vec<PathConfiguration>,
}

impl GvState<'_> {
    fn search(&mut self, row: usize) -> Result<()> {
        let p = self.cells.len();
        if row == p {
            self.record();
            return Ok(());
        }
        for col in 0..p {
            if self.used_cols[col] {
                continue;
            }
            for idx in 0..self.cells[row][col].len() {
                self.partials += 1;
                if self.partials > self.max_configs {
                    return Err(Error::ExplosionGuard { limit: self.max_configs });
                }
                let vertices = &self.cells[row][col][idx].1;
                if vertices.iter().any(|v| self.occupied.contains(v)) {
                    continue;
                }
                for v in vertices {
                    self.occupied.insert(*v);
                }
                self.used_cols[col] = true;
                self.assignment.push(col);
                self.chosen.push(idx);
                self.search(row + 1)?;
                self.chosen.pop();
                self.assignment.pop();
                self.used_cols[col] = false;
                for v in &self.cells[row][col][idx].1 {
                    self.occupied.remove(v);
                }
            }
        }
        Ok(())
    }

    fn record(&mut self) {
        let mut inversions = 0;
        for i in 0..self.assignment.len() {
            for j in i + 1..self.assignment.len() {
                if self.assignment[i] > self.assignment[j] {
                    inversions += 1;
                }
            }
        }
        let sign: i8 = if inversions % 2 == 0 { 1 } else { -1 };
        let mut value = MultiPoly::one();
        let mut paths = Vec::with_capacity(self.assignment.len());
        for (row, (&col, &idx)) in self.assignment.iter().zip(&self.chosen).enumerate() {
            let cell = &self.cells[row][col][idx];
            value = &value * &cell.0;
            paths.push(cell.2.clone());
        }
        if sign < 0 {
            value = -&value;
        }
        self.configurations.push(PathConfiguration {
            perm: self.assignment.clone(),
            paths,
            sign,
            value,
        });
    }
}

/// One entry of the verification report.
#[derive(Debug, Clone)]
pub struct VerifyEntry {
    pub name: String,
    pub group: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub entries: Vec<VerifyEntry>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }
}

/// Runs every cross-module identity up to the given symbolic depth.
pub fn verify_suite(depth: usize) -> VerifyReport {
    verify_suite_inner(depth, None)
}

/// Test hook: when `corrupt` names an identity class, one computed value
/// of that class is perturbed before comparison so the harness itself can
/// be checked for the ability to fail.
#[doc(hidden)]
pub fn verify_suite_inner(depth: usize, corrupt: Option<&str>) -> VerifyReport {
    let mut report = VerifyReport::default();
    let mut run = |name: &str, group: &'static str, result: Result<bool>, detail: String| {
        let corrupted = corrupt == Some(name);
        let passed = match result {
            Ok(ok) => ok != corrupted,
            Err(_) => false,
        };
        let detail = match result {
            Ok(_) if corrupted => format!("{detail} [corrupted for self-test]"),
            Ok(_) => detail,
            Err(e) => format!("error: {e}"),
        };
        report.entries.push(VerifyEntry { name: name.to_string(), group, passed, detail });
    };

    let n_eq13 = (depth + 2).min(7);
    run(
        "eq13-motzkin-vs-lagrange",
        "eq13",
        check_eq13(n_eq13),
        format!("signed Motzkin sum = Lagrange free cumulant, n = 2..{n_eq13}"),
    );
    run(
        "eq13-sign-coherence",
        "eq13",
        check_sign_coherence(n_eq13),
        format!("monomial-grouped contributions sign-coherent, n = 2..{n_eq13}"),
    );
    let gv_max = depth.min(2);
    run(
        "gv-motzkin-minors",
        "gv",
        check_gv(Discipline::Motzkin, gv_max),
        format!("GV sum = determinant for Motzkin minors, max index {gv_max}"),
    );
    run(
        "gv-lukas-free-minors",
        "gv",
        check_gv(Discipline::Lukasiewicz, gv_max),
        format!("GV sum = determinant for Lukasiewicz minors, max index {gv_max}"),
    );
    let dp_max = depth.min(5);
    run(
        "delta-product",
        "delta-product",
        check_delta_product(dp_max),
        format!("Delta_n = lam_1^n..lam_n, n <= {dp_max}"),
    );
    let bt_max = (depth + 3).min(10);
    run(
        "boolean-triangle",
        "boolean",
        check_boolean_triangle(bt_max),
        format!("irreducible Motzkin sum = contfrac H = 1 - 1/M, n <= {bt_max}"),
    );
    run(
        "free-from-boolean",
        "boolean",
        check_free_from_boolean(n_eq13),
        format!("boolean composition sum reproduces the Motzkin formula, n = 2..{n_eq13}"),
    );
    let rt_order = (2 * depth).clamp(4, 12);
    run(
        "transform-roundtrips",
        "transforms",
        check_roundtrips(rt_order),
        format!("moment/cumulant transforms mutually inverse at order {rt_order}"),
    );
    run(
        "free-route-agreement",
        "transforms",
        check_free_routes(rt_order),
        format!("Lagrange route = reversion route at order {rt_order}"),
    );
    let jd = depth.min(4);
    run(
        "jacobi-roundtrip",
        "jacobi",
        check_jacobi_roundtrip(jd),
        format!("jacobi_from_moments inverts moments_from_jacobi, symbolic depth {jd}"),
    );
    run(
        "orthopoly-routes",
        "jacobi",
        check_orthopoly_routes(depth.min(3)),
        format!("recurrence = bordered-determinant route, n <= {}", depth.min(3)),
    );
    run(
        "orthogonality",
        "jacobi",
        check_orthogonality(depth.min(4)),
        format!("off-diagonal pairings vanish, s_n = lam product, n <= {}", depth.min(4)),
    );
    report
}

fn check_eq13(n_max: usize) -> Result<bool> {
    for n in 2..=n_max {
        let j = JacobiParams::symbolic((n / 2) as u32);
        let motzkin = free_cumulant_motzkin(&j, n)?;
        let m = moments_from_jacobi(&j, n)?;
        let lagrange = free_from_moments(&m);
        if motzkin != *lagrange.get(n) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_sign_coherence(n_max: usize) -> Result<bool> {
    for n in 2..=n_max {
        if !no_cancellation_check(n)?.passed() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn increasing_subsets(max_index: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, max: usize, size: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if size == 0 {
            out.push(prefix.clone());
            return;
        }
        for v in start..=max {
            if max + 1 - v < size {
                break;
            }
            prefix.push(v);
            rec(v + 1, max, size - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, max_index, size, &mut Vec::new(), &mut out);
    out
}

/// All increasing row/col specs with indices <= max_index.
pub fn all_specs(max_index: usize) -> Vec<HankelMinorSpec> {
    let mut specs = Vec::new();
    for size in 1..=max_index + 1 {
        let subsets = increasing_subsets(max_index, size);
        for rows in &subsets {
            for cols in &subsets {
                specs.push(HankelMinorSpec::new(rows.clone(), cols.clone()).unwrap());
            }
        }
    }
    specs
}

/// GV equality against the determinant route for every spec up to
/// max_index, under the scheme matching the discipline.
pub fn check_gv(discipline: Discipline, max_index: usize) -> Result<bool> {
    let order = 2 * max_index;
    let (scheme, moments) = gv_model(discipline, order)?;
    for spec in all_specs(max_index) {
        let det = hankel_minor_det(&moments, &spec)?;
        let gv = hankel_minor_gv(&scheme, &spec, DEFAULT_MAX_CONFIGS)?;
        if det != gv.total {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The symbolic scheme and matching moment sequence for a discipline.
pub fn gv_model(discipline: Discipline, order: usize) -> Result<(ValuationScheme, MomentSeq)> {
    match discipline {
        Discipline::Motzkin => {
            let level = (order / 2).max(1) as u32;
            let j = JacobiParams::symbolic(level);
            let moments = moments_from_jacobi(&j, order)?;
            Ok((j.scheme(), moments))
        }
        Discipline::Lukasiewicz => {
            let c = CumulantSeq::symbolic(CumulantKind::Free, order.max(1));
            let moments = moments_from_free(&c);
            Ok((ValuationScheme::lukas_free_symbolic(order.max(1) as u32), moments))
        }
    }
}

fn check_delta_product(n_max: usize) -> Result<bool> {
    let j = JacobiParams::symbolic(n_max as u32);
    let moments = moments_from_jacobi(&j, 2 * n_max)?;
    for n in 1..=n_max {
        let delta = hankel_det(&moments, Some(n))?;
        if delta != lambda_staircase(n) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// lam_1^n lam_2^{n-1} ... lam_n.
pub fn lambda_staircase(n: usize) -> MultiPoly {
    let mut acc = MultiPoly::one();
    for k in 1..=n {
        acc = &acc * &MultiPoly::symbol(SymbolFamily::Lambda, k as u32).pow((n + 1 - k) as u32);
    }
    acc
}

fn check_boolean_triangle(n_max: usize) -> Result<bool> {
    let level = (n_max / 2).max(1) as u32;
    let j = JacobiParams::symbolic(level);
    let scheme = j.scheme();
    let depth = (n_max + 1) / 2;
    let h_cf = contfrac_series(&j, depth.max(1), n_max, ContfracKind::Boolean)?;
    let moments = moments_from_jacobi(&j, n_max)?;
    let h_gf = boolean_from_moments(&moments);
    for n in 1..=n_max {
        let irr = boolean_from_paths(&scheme, n)?;
        if irr != *h_cf.coeff(n) || irr != *h_gf.get(n) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_free_from_boolean(n_max: usize) -> Result<bool> {
    let level = (n_max / 2).max(1) as u32;
    let j = JacobiParams::symbolic(level);
    let scheme = j.scheme();
    let h: Vec<MultiPoly> = (1..=n_max)
        .map(|n| boolean_from_paths(&scheme, n))
        .collect::<Result<_>>()?;
    for n in 2..=n_max {
        let via_boolean = free_cumulant_from_boolean(&h, n)?;
        let direct = free_cumulant_motzkin(&j, n)?;
        if via_boolean != direct {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Deterministic pseudo-random rational in a small range (for self-checks
/// that must not depend on external RNG crates).
fn lcg_rational(state: &mut u64) -> Rational {
    *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let num = ((*state >> 33) % 19) as i64 - 9;
    let den = ((*state >> 13) % 7) as i64 + 1;
    Rational::new(num, den)
}

fn random_moments(order: usize, seed: u64) -> MomentSeq {
    let mut state = seed;
    let mut mu = vec![MultiPoly::one()];
    for _ in 0..order {
        mu.push(MultiPoly::from_rational(lcg_rational(&mut state)));
    }
    MomentSeq::new(mu).unwrap()
}

fn check_roundtrips(order: usize) -> Result<bool> {
    for seed in 1..=5u64 {
        let m = random_moments(order, seed);
        let free = free_from_moments(&m);
        let classical = classical_from_moments(&m);
        let boolean = boolean_from_moments(&m);
        if moments_from_free(&free) != m
            || moments_from_classical(&classical) != m
            || moments_from_boolean(&boolean) != m
        {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_free_routes(order: usize) -> Result<bool> {
    for seed in 11..=15u64 {
        let m = random_moments(order, seed);
        if free_from_moments_lagrange(&m) != free_from_moments_reversion(&m) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_jacobi_roundtrip(depth: usize) -> Result<bool> {
    let j = JacobiParams::symbolic(depth.max(1) as u32);
    let m = moments_from_jacobi(&j, 2 * depth.max(1) + 1)?;
    Ok(jacobi_from_moments(&m)? == j)
}

fn check_orthopoly_routes(n_max: usize) -> Result<bool> {
    let j = JacobiParams::symbolic(n_max.max(1) as u32);
    let m = moments_from_jacobi(&j, 2 * n_max.max(1))?;
    let rec = orthopoly_recurrence(&j, n_max)?;
    for n in 0..=n_max {
        if orthopoly_determinant(&m, n)? != *rec.get(n) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_orthogonality(n_max: usize) -> Result<bool> {
    let n_max = n_max.max(1);
    let j = JacobiParams::symbolic(n_max as u32);
    let m = moments_from_jacobi(&j, 2 * n_max)?;
    Ok(orthogonality_check(&m, &j, n_max)?.passed())
}
