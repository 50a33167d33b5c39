// SPDX-License-Identifier: Apache-2.0

//! Normal pairs: functions `g` of arity `m` and `f` of arity `n` such that,
//! for every `m × n` Boolean matrix, applying `g` down each column and then
//! `f` to the results agrees with applying `f` along each row and then `g`.
//! Both functions must also be non-constant with every input relevant.
//!
//! A matrix is an `m·n`-bit integer with entry `(r, s)` at bit `r·n + s`.
//! Sweeps run in ascending integer order; the first counterexample is the
//! smallest such integer.

use rayon::prelude::*;
use thiserror::Error;

use crate::boolfn::{BoolFn, FnClass};
use crate::limits::{function_count, Limits};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalPairError {
    #[error("matrix of {m}x{n} = {} cells exceeds the cap of {cap}", m * n)]
    MatrixTooLarge { m: usize, n: usize, cap: usize },
    #[error(
        "enumerating arities ({m}, {n}) needs 2^(2^{m} + 2^{n}) candidate pairs, over the budget of {budget}; \
         feasible maxima: n <= {max_n} for m = {m}, m <= {max_m} for n = {n}"
    )]
    BudgetExceeded { m: usize, n: usize, budget: u64, max_n: String, max_m: String },
    #[error("arities must be at least 1, got ({m}, {n})")]
    ArityTooSmall { m: usize, n: usize },
    #[error("({g}, {f}) is not a normal pair")]
    NotNormal { g: String, f: String, report: NormalPairReport },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Violation {
    GConstant,
    FConstant,
    /// 0-based input of `g` that is irrelevant.
    GIrrelevantIndex(usize),
    /// 0-based input of `f` that is irrelevant.
    FIrrelevantIndex(usize),
    Commutation,
}

impl Violation {
    pub fn label(&self) -> &'static str {
        match self {
            Violation::GConstant => "g_constant",
            Violation::FConstant => "f_constant",
            Violation::GIrrelevantIndex(_) => "g_irrelevant_index",
            Violation::FIrrelevantIndex(_) => "f_irrelevant_index",
            Violation::Commutation => "commutation",
        }
    }
}

/// A matrix on which the two evaluation orders disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Counterexample {
    pub rows: usize,
    pub cols: usize,
    pub matrix: u64,
    /// `f(g(col_1), .., g(col_n))`
    pub column_path: bool,
    /// `g(f(row_1), .., f(row_m))`
    pub row_path: bool,
}

impl Counterexample {
    pub fn entry(&self, r: usize, s: usize) -> bool {
        self.matrix >> (r * self.cols + s) & 1 == 1
    }

    pub fn matrix_rows(&self) -> Vec<Vec<bool>> {
        (0..self.rows).map(|r| (0..self.cols).map(|s| self.entry(r, s)).collect()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalPairReport {
    pub is_normal: bool,
    /// First violated condition: constancy, then relevance, then commutation.
    pub violated_condition: Option<Violation>,
    /// Present iff commutation fails, whatever the other conditions say.
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremCase {
    BothAnd,
    BothOr,
    XorFamily,
    /// One side has arity 1.
    Trivial,
    /// A certified normal pair outside the three classified cases.
    TheoremViolation,
}

impl TheoremCase {
    pub fn label(&self) -> &'static str {
        match self {
            TheoremCase::BothAnd => "both-and",
            TheoremCase::BothOr => "both-or",
            TheoremCase::XorFamily => "xor-family",
            TheoremCase::Trivial => "trivial",
            TheoremCase::TheoremViolation => "theorem-violation",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairClassification {
    pub g_class: FnClass,
    pub f_class: FnClass,
    pub case: TheoremCase,
}

/// Evaluates both orders on one matrix: `(column_path, row_path)`.
pub fn evaluate_matrix(g: &BoolFn, f: &BoolFn, matrix: u64) -> (bool, bool) {
    let (m, n) = (g.arity(), f.arity());
    let row_mask = (1u64 << n) - 1;
    let mut row_results = 0usize;
    let mut col_results = 0usize;
    for r in 0..m {
        let row = (matrix >> (r * n)) & row_mask;
        if f.value(row as usize) {
            row_results |= 1 << r;
        }
    }
    for s in 0..n {
        let col = (0..m).fold(0usize, |acc, r| acc | ((matrix >> (r * n + s)) as usize & 1) << r);
        if g.value(col) {
            col_results |= 1 << s;
        }
    }
    (f.value(col_results), g.value(row_results))
}

/// First matrix, in ascending order, on which the evaluation orders differ.
pub fn first_counterexample(g: &BoolFn, f: &BoolFn) -> Option<Counterexample> {
    let (m, n) = (g.arity(), f.arity());
    assert!(m * n < 64, "matrix too large");
    (0..1u64 << (m * n)).find_map(|matrix| {
        let (column_path, row_path) = evaluate_matrix(g, f, matrix);
        (column_path != row_path).then_some(Counterexample { rows: m, cols: n, matrix, column_path, row_path })
    })
}

fn structural_violation(g: &BoolFn, f: &BoolFn) -> Option<Violation> {
    if g.constant_value().is_some() {
        return Some(Violation::GConstant);
    }
    if f.constant_value().is_some() {
        return Some(Violation::FConstant);
    }
    if let Some(i) = (0..g.arity()).find(|&i| !g.is_relevant(i)) {
        return Some(Violation::GIrrelevantIndex(i));
    }
    (0..f.arity()).find(|&j| !f.is_relevant(j)).map(Violation::FIrrelevantIndex)
}

pub fn check_normal_pair(g: &BoolFn, f: &BoolFn, limits: &Limits) -> Result<NormalPairReport, NormalPairError> {
    let (m, n) = (g.arity(), f.arity());
    let cap = limits.matrix_cap.min(63);
    if m * n > cap {
        return Err(NormalPairError::MatrixTooLarge { m, n, cap });
    }
    let counterexample = first_counterexample(g, f);
    let violated_condition = structural_violation(g, f).or(counterexample.map(|_| Violation::Commutation));
    Ok(NormalPairReport { is_normal: violated_condition.is_none(), violated_condition, counterexample })
}

fn max_feasible(fixed: usize, budget: u64) -> String {
    let Some(fixed_count) = function_count(fixed) else {
        return "none".into();
    };
    (1..6)
        .take_while(|&k| function_count(k).and_then(|c| c.checked_mul(fixed_count)).is_some_and(|c| c <= budget))
        .last()
        .map_or_else(|| "none".into(), |k| k.to_string())
}

/// Candidates for one side: non-constant functions with every input relevant.
fn candidates(arity: usize) -> Vec<BoolFn> {
    BoolFn::all(arity).filter(|f| f.constant_value().is_none() && f.all_relevant()).collect()
}

/// Every normal pair of the given arities, sorted by `(g, f)` table order.
pub fn enumerate_normal_pairs(m: usize, n: usize, limits: &Limits) -> Result<Vec<(BoolFn, BoolFn)>, NormalPairError> {
    if m == 0 || n == 0 {
        return Err(NormalPairError::ArityTooSmall { m, n });
    }
    let cap = limits.matrix_cap.min(63);
    if m * n > cap {
        return Err(NormalPairError::MatrixTooLarge { m, n, cap });
    }
    let space = function_count(m).zip(function_count(n)).and_then(|(a, b)| a.checked_mul(b));
    if !space.is_some_and(|s| s <= limits.enumeration_budget) {
        return Err(NormalPairError::BudgetExceeded {
            m,
            n,
            budget: limits.enumeration_budget,
            max_n: max_feasible(m, limits.enumeration_budget),
            max_m: max_feasible(n, limits.enumeration_budget),
        });
    }
    let gs = candidates(m);
    let fs = candidates(n);
    let mut pairs: Vec<(BoolFn, BoolFn)> = gs
        .par_iter()
        .flat_map_iter(|g| {
            fs.iter()
                .filter(|f| first_counterexample(g, f).is_none())
                .map(|f| (g.clone(), f.clone()))
                .collect::<Vec<_>>()
        })
        .collect();
    pairs.sort();
    Ok(pairs)
}

/// Places a normal pair into its classification case.
pub fn classify_pair(g: &BoolFn, f: &BoolFn, limits: &Limits) -> Result<PairClassification, NormalPairError> {
    let report = check_normal_pair(g, f, limits)?;
    if !report.is_normal {
        return Err(NormalPairError::NotNormal { g: g.spec_string(), f: f.spec_string(), report });
    }
    let (g_class, f_class) = (g.classify(), f.classify());
    let parity = |c: FnClass| matches!(c, FnClass::Xor | FnClass::Nxor);
    let case = if g.arity() == 1 || f.arity() == 1 {
        TheoremCase::Trivial
    } else {
        match (g_class, f_class) {
            (FnClass::And, FnClass::And) => TheoremCase::BothAnd,
            (FnClass::Or, FnClass::Or) => TheoremCase::BothOr,
            (a, b) if parity(a) && parity(b) => TheoremCase::XorFamily,
            _ => TheoremCase::TheoremViolation,
        }
    };
    Ok(PairClassification { g_class, f_class, case })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::Named;

    fn named(kind: Named, n: usize) -> BoolFn {
        BoolFn::named(kind, n).unwrap()
    }

    /// Oracle: evaluate a matrix given as nested rows.
    fn paths(g: &BoolFn, f: &BoolFn, rows: &[Vec<bool>]) -> (bool, bool) {
        let cols: Vec<bool> =
            (0..rows[0].len()).map(|s| g.eval(&rows.iter().map(|r| r[s]).collect::<Vec<_>>())).collect();
        let row_vals: Vec<bool> = rows.iter().map(|r| f.eval(r)).collect();
        (f.eval(&cols), g.eval(&row_vals))
    }

    #[test]
    fn and_and_is_normal() {
        let report = check_normal_pair(&named(Named::And, 2), &named(Named::And, 3), &Limits::default()).unwrap();
        assert!(report.is_normal);
        assert_eq!(report.counterexample, None);
    }

    #[test]
    fn or_and_fails_commutation() {
        let g = named(Named::Or, 2);
        let f = named(Named::And, 2);
        assert_eq!(paths(&g, &f, &[vec![true, false], vec![false, true]]), (true, false));
        let report = check_normal_pair(&g, &f, &Limits::default()).unwrap();
        assert!(!report.is_normal);
        assert_eq!(report.violated_condition, Some(Violation::Commutation));
        let cx = report.counterexample.unwrap();
        assert_eq!(paths(&g, &f, &cx.matrix_rows()), (cx.column_path, cx.row_path));
        assert_ne!(cx.column_path, cx.row_path);
        // smallest disagreeing matrix in row-major integer order
        assert_eq!(cx.matrix_rows(), vec![vec![false, true], vec![true, false]]);
    }

    #[test]
    fn irrelevant_index_is_reported() {
        let report =
            check_normal_pair(&named(Named::Dictator(0), 2), &named(Named::And, 2), &Limits::default()).unwrap();
        assert_eq!(report.violated_condition, Some(Violation::GIrrelevantIndex(1)));
        assert!(!report.is_normal);
    }

    #[test]
    fn constant_is_reported_first() {
        let c = named(Named::Const(true), 2);
        let report = check_normal_pair(&c, &named(Named::Xor, 2), &Limits::default()).unwrap();
        assert_eq!(report.violated_condition, Some(Violation::GConstant));
        let report = check_normal_pair(&named(Named::Xor, 2), &c, &Limits::default()).unwrap();
        assert_eq!(report.violated_condition, Some(Violation::FConstant));
    }

    #[test]
    fn matrix_cap_is_enforced() {
        let limits = Limits { matrix_cap: 4, ..Limits::default() };
        assert!(matches!(
            check_normal_pair(&named(Named::And, 2), &named(Named::And, 3), &limits),
            Err(NormalPairError::MatrixTooLarge { .. })
        ));
    }

    #[test]
    fn evaluate_matrix_matches_nested_oracle() {
        let g = BoolFn::from_bits(2, 0b0110).unwrap();
        let f = BoolFn::from_bits(3, 0b1110_1000).unwrap();
        for matrix in 0..64u64 {
            let rows: Vec<Vec<bool>> =
                (0..2).map(|r| (0..3).map(|s| matrix >> (r * 3 + s) & 1 == 1).collect()).collect();
            assert_eq!(evaluate_matrix(&g, &f, matrix), paths(&g, &f, &rows));
        }
    }

    #[test]
    fn enumerate_2x2_brute_force() {
        // oracle: all 16 x 16 pairs through check_normal_pair, no pruning
        let limits = Limits::default();
        let mut oracle = Vec::new();
        for g in BoolFn::all(2) {
            for f in BoolFn::all(2) {
                if check_normal_pair(&g, &f, &limits).unwrap().is_normal {
                    oracle.push((g.clone(), f.clone()));
                }
            }
        }
        oracle.sort();
        let pairs = enumerate_normal_pairs(2, 2, &limits).unwrap();
        assert_eq!(pairs, oracle);
        let mut expected: Vec<_> =
            [Named::And, Named::Or, Named::Xor, Named::Nxor].into_iter().map(|k| (named(k, 2), named(k, 2))).collect();
        expected.sort();
        assert_eq!(pairs, expected);
    }

    #[test]
    fn parity_combinations_follow_arity_parity() {
        // (g, f) over {XOR, NXOR}: XOR/XOR always; NXOR/NXOR iff m ≡ n (mod 2);
        // XOR/NXOR iff m odd; NXOR/XOR iff n odd.
        let limits = Limits::default();
        for m in 1..=3 {
            for n in 1..=3 {
                let normal = |a, b| check_normal_pair(&named(a, m), &named(b, n), &limits).unwrap().is_normal;
                assert!(normal(Named::Xor, Named::Xor));
                assert_eq!(normal(Named::Nxor, Named::Nxor), m % 2 == n % 2, "({m},{n})");
                assert_eq!(normal(Named::Xor, Named::Nxor), m % 2 == 1, "({m},{n})");
                assert_eq!(normal(Named::Nxor, Named::Xor), n % 2 == 1, "({m},{n})");
            }
        }
    }

    #[test]
    fn budget_error_names_feasible_maxima() {
        let err = enumerate_normal_pairs(3, 4, &Limits::default()).unwrap_err();
        let NormalPairError::BudgetExceeded { max_n, max_m, .. } = &err else { panic!("{err}") };
        assert_eq!(max_n, "3");
        assert_eq!(max_m, "2");
        assert!(err.to_string().contains("n <= 3 for m = 3"));
        assert!(matches!(enumerate_normal_pairs(0, 2, &Limits::default()), Err(NormalPairError::ArityTooSmall { .. })));
    }

    #[test]
    fn classify_pair_examples() {
        let limits = Limits::default();
        let c = classify_pair(&named(Named::And, 3), &named(Named::And, 2), &limits).unwrap();
        assert_eq!(c.case, TheoremCase::BothAnd);
        let c = classify_pair(&named(Named::Or, 2), &named(Named::Or, 4), &limits).unwrap();
        assert_eq!(c.case, TheoremCase::BothOr);
        // m = 2 is even, so XOR2 with NXOR3 does not commute
        assert!(matches!(
            classify_pair(&named(Named::Xor, 2), &named(Named::Nxor, 3), &limits),
            Err(NormalPairError::NotNormal { .. })
        ));
        let c = classify_pair(&named(Named::Nxor, 2), &named(Named::Xor, 3), &limits).unwrap();
        assert_eq!(c.case, TheoremCase::XorFamily);
    }

    #[test]
    fn arity_one_pairs() {
        // identity commutes with everything; negation only with self-dual f
        let limits = Limits::default();
        let id = named(Named::Dictator(0), 1);
        let neg = !&id;
        for n in 1..=3 {
            for f in BoolFn::all(n).filter(|f| f.constant_value().is_none() && f.all_relevant()) {
                assert!(check_normal_pair(&id, &f, &limits).unwrap().is_normal);
                assert!(check_normal_pair(&f, &id, &limits).unwrap().is_normal);
                let self_dual = f.flip() == f;
                assert_eq!(check_normal_pair(&neg, &f, &limits).unwrap().is_normal, self_dual, "{f}");
                assert_eq!(classify_pair(&id, &f, &limits).unwrap().case, TheoremCase::Trivial);
            }
        }
    }
}
