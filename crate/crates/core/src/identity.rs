//! Alternating binomial sums and their verification sweeps.
//!
//! Boole's sum `sum_k (-1)^(n-k) C(n,k) k^m` equals `n!` at `m = n` and
//! vanishes for `m < n`; the generalized sum `sum_k (-1)^k C(n,k) (a+bk)^m`
//! equals `(-1)^n b^n n!` at `m = n` and vanishes for `m < n`. Both are
//! read off row by row from the Vandermonde system once its solution
//! `x_k = (-1)^(n-k) C(n,k)` is known.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, rat_pow, Rational};
use crate::vandermonde::{
    build_system, det_vandermonde_closed, det_vk_closed, solve_exact, ArithmeticNodes,
};

/// Parameters of one identity evaluation. For Cramer checks `m` carries the
/// solution component index `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCase {
    pub n: usize,
    pub m: usize,
    pub a: Rational,
    pub b: Rational,
}

/// Which relation a [`CaseResult`] compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// generalized sum against the closed right-hand side
    Theorem,
    /// row `m` of `V x` with `x` the closed-form solution, against the rhs
    SystemRow,
    /// Boole's sum against `n! S(m, n)`
    Stirling,
    /// Boole's sum against the `n`-th forward difference of `x^m` at zero
    FiniteDifference,
    /// `det V_k / det V` against the closed-form `x_k`
    CramerRatio,
    /// generic solver component against the closed-form `x_k`
    SolverComponent,
}

impl CheckKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Theorem => "theorem",
            CheckKind::SystemRow => "system_row",
            CheckKind::Stirling => "stirling",
            CheckKind::FiniteDifference => "finite_difference",
            CheckKind::CramerRatio => "cramer_ratio",
            CheckKind::SolverComponent => "solver_component",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub case: IdentityCase,
    pub check: CheckKind,
    pub lhs: Rational,
    pub rhs: Rational,
    pub pass: bool,
}

impl CaseResult {
    pub fn new(case: IdentityCase, check: CheckKind, lhs: Rational, rhs: Rational) -> Self {
        let pass = lhs == rhs;
        Self {
            case,
            check,
            lhs,
            rhs,
            pass,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub results: Vec<CaseResult>,
    pub total: usize,
    pub failures: usize,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn from_results(results: Vec<CaseResult>) -> Self {
        let failures = results.iter().filter(|r| !r.pass).count();
        Self {
            total: results.len(),
            failures,
            results,
            notes: Vec::new(),
        }
    }

    /// Appends `other`, keeping its order after the current results.
    pub fn merge(&mut self, other: VerificationReport) {
        self.total += other.total;
        self.failures += other.failures;
        self.results.extend(other.results);
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn count(&self, check: CheckKind) -> usize {
        self.results.iter().filter(|r| r.check == check).count()
    }

    pub fn failures_of(&self, check: CheckKind) -> usize {
        self.results
            .iter()
            .filter(|r| r.check == check && !r.pass)
            .count()
    }
}

/// `x_k = (-1)^(n-k) C(n, k)` for `k` in `0..=n`.
pub fn closed_form_solution(n: usize) -> Vec<BigInt> {
    (0..=n)
        .map(|k| {
            let c = binomial(n, k);
            if (n - k) % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect()
}

fn int_pow(base: usize, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

/// `sum_{k=0}^{n} (-1)^(n-k) C(n,k) k^m`, with `0^0 = 1`.
pub fn boole_sum(n: usize, m: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 0..=n {
        let term = binomial(n, k) * int_pow(k, m);
        if (n - k) % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    acc
}

/// Table of Stirling partition numbers `S(i, j)` for `i <= m_max`,
/// `j <= n_max`, filled by `S(i, j) = j S(i-1, j) + S(i-1, j-1)`.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    n_max: usize,
    cells: Vec<BigInt>,
}

impl StirlingTable {
    pub fn new(m_max: usize, n_max: usize) -> Self {
        let width = n_max + 1;
        let mut cells = vec![BigInt::zero(); (m_max + 1) * width];
        cells[0] = BigInt::one();
        for i in 1..=m_max {
            for j in 1..=n_max {
                let stay = &cells[(i - 1) * width + j] * j;
                let join = &cells[(i - 1) * width + j - 1];
                cells[i * width + j] = stay + join;
            }
        }
        Self { n_max, cells }
    }

    pub fn get(&self, m: usize, n: usize) -> &BigInt {
        &self.cells[m * (self.n_max + 1) + n]
    }
}

/// `S(m, n)`: partitions of an `m`-set into `n` nonempty blocks.
pub fn stirling2(m: usize, n: usize) -> BigInt {
    if n > m {
        return BigInt::zero();
    }
    StirlingTable::new(m, n).get(m, n).clone()
}

/// Differences `f(0..=n)` with `f(j) = j^m` down `n` times and returns the
/// surviving entry.
pub fn forward_difference_at_zero(m: usize, n: usize) -> BigInt {
    let mut table: Vec<BigInt> = (0..=n).map(|j| int_pow(j, m)).collect();
    for _ in 0..n {
        table = table.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    table.pop().expect("one entry remains")
}

/// `sum_{k=0}^{n} (-1)^k C(n,k) (a + b k)^m`, accumulated term by term.
pub fn generalized_sum(a: &Rational, b: &Rational, n: usize, m: usize) -> Rational {
    let mut acc = Rational::zero();
    for k in 0..=n {
        let node = a + b * Rational::from_integer(k);
        let term = Rational::from_integer(binomial(n, k)) * rat_pow(&node, m);
        if k % 2 == 1 {
            acc -= &term;
        } else {
            acc += &term;
        }
    }
    acc
}

/// Right side of the generalized identity: `(-1)^n b^n n!` when `m = n`,
/// zero when `m < n`. Undefined for `m > n`.
pub fn expected_value(_a: &Rational, b: &Rational, n: usize, m: usize) -> Result<Rational> {
    if m > n {
        return Err(Error::Domain(format!(
            "expected value undefined for m={m} > n={n}"
        )));
    }
    if m < n {
        return Ok(Rational::zero());
    }
    let value = rat_pow(b, n) * Rational::from_integer(factorial(n));
    Ok(if n % 2 == 1 { -value } else { value })
}

/// [`verify_theorem`] with a caller-supplied right-hand side, so a sweep can
/// be run against a deliberately wrong expectation.
pub fn verify_theorem_with<F>(
    a: &Rational,
    b: &Rational,
    n_max: usize,
    expected: F,
) -> VerificationReport
where
    F: Fn(&Rational, &Rational, usize, usize) -> Result<Rational> + Sync,
{
    let check_system = !b.is_zero();
    let per_n: Vec<Vec<CaseResult>> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let case = |m| IdentityCase {
                n,
                m,
                a: a.clone(),
                b: b.clone(),
            };
            let (residual_rows, system_rhs) = if check_system {
                let system = build_system(&ArithmeticNodes::new(a.clone(), b.clone(), n));
                let x: Vec<Rational> = closed_form_solution(n)
                    .into_iter()
                    .map(Rational::from_integer)
                    .collect();
                let lhs = system.matrix().apply(&x).expect("square system");
                (lhs, system.rhs().to_vec())
            } else {
                (Vec::new(), Vec::new())
            };
            let mut out = Vec::with_capacity(2 * (n + 1));
            for m in 0..=n {
                let lhs = generalized_sum(a, b, n, m);
                let rhs = expected(a, b, n, m).expect("m <= n");
                out.push(CaseResult::new(case(m), CheckKind::Theorem, lhs, rhs));
                if check_system {
                    out.push(CaseResult::new(
                        case(m),
                        CheckKind::SystemRow,
                        residual_rows[m].clone(),
                        system_rhs[m].clone(),
                    ));
                }
            }
            out
        })
        .collect();
    let mut report = VerificationReport::from_results(per_n.into_iter().flatten().collect());
    if !check_system {
        report.notes.push(format!(
            "a={a}, b=0: system substitution skipped (coincident nodes, singular matrix)"
        ));
    }
    report
}

/// Compares the generalized sum with its closed right side for all
/// `0 <= m <= n <= n_max` and, when `b != 0`, substitutes the closed-form
/// solution into every row of the Vandermonde system. Ordered by `(n, m)`.
pub fn verify_theorem(a: &Rational, b: &Rational, n_max: usize) -> VerificationReport {
    verify_theorem_with(a, b, n_max, expected_value)
}

/// Checks `boole_sum(n, m) = n! S(m, n)` and
/// `boole_sum(n, m) = forward_difference_at_zero(m, n)` on the full grid
/// `m <= m_max`, `n <= n_max`, ordered by `(n, m)`.
pub fn verify_stirling(m_max: usize, n_max: usize) -> VerificationReport {
    let table = StirlingTable::new(m_max, n_max);
    let grid: Vec<(usize, usize)> = (0..=n_max)
        .flat_map(|n| (0..=m_max).map(move |m| (n, m)))
        .collect();
    let results: Vec<[CaseResult; 2]> = grid
        .into_par_iter()
        .map(|(n, m)| {
            let case = IdentityCase {
                n,
                m,
                a: Rational::zero(),
                b: Rational::one(),
            };
            let sum = Rational::from_integer(boole_sum(n, m));
            let product = Rational::from_integer(factorial(n) * table.get(m, n));
            let diff = Rational::from_integer(forward_difference_at_zero(m, n));
            [
                CaseResult::new(case.clone(), CheckKind::Stirling, sum.clone(), product),
                CaseResult::new(case, CheckKind::FiniteDifference, sum, diff),
            ]
        })
        .collect();
    VerificationReport::from_results(results.into_iter().flatten().collect())
}

/// For each `k <= n`: `det V_k / det V` and the generic solver's `x_k` are
/// each compared with the closed-form `x_k`. Requires `b != 0`.
pub fn verify_cramer(a: &Rational, b: &Rational, n: usize) -> Result<VerificationReport> {
    if b.is_zero() {
        return Err(Error::Singular);
    }
    let solved = solve_exact(&build_system(&ArithmeticNodes::new(
        a.clone(),
        b.clone(),
        n,
    )))?;
    let det = det_vandermonde_closed(n, b);
    let closed = closed_form_solution(n);
    let mut results = Vec::with_capacity(2 * (n + 1));
    for (k, (expected, solver)) in closed.into_iter().zip(solved).enumerate() {
        let case = IdentityCase {
            n,
            m: k,
            a: a.clone(),
            b: b.clone(),
        };
        let expected = Rational::from_integer(expected);
        let ratio = det_vk_closed(n, k, b)?.checked_div(&det)?;
        results.push(CaseResult::new(
            case.clone(),
            CheckKind::CramerRatio,
            ratio,
            expected.clone(),
        ));
        results.push(CaseResult::new(
            case,
            CheckKind::SolverComponent,
            solver,
            expected,
        ));
    }
    Ok(VerificationReport::from_results(results))
}
