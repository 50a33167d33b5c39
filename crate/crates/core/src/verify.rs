// SPDX-License-Identifier: Apache-2.0

//! Desk-scale verification suites for the classification results.
//!
//! Each suite is a list of named checks with their instance parameters.
//! Exceeded budgets surface as failing checks carrying the reason.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use crate::agenda::{build_agenda, closure, Agenda};
use crate::boolfn::{BoolFn, Named, Sign};
use crate::dyadic::Dyadic;
use crate::formula::parse;
use crate::fourier::{reconstruct, spectrum, PairIdentities};
use crate::jar::{
    check_jar, enumerate_arrovian_general, enumerate_arrovian_normal_form, enumerate_consistent_normal_form,
    filter_axioms, relate_positions, to_normal_form, PiJar, PositionRelation, SolutionShape,
};
use crate::limits::Limits;
use crate::normalpair::{check_normal_pair, classify_pair, enumerate_normal_pairs, TheoremCase, Violation};

pub const SUITES: &[&str] = &[
    "fourier-closed-forms",
    "parseval",
    "forceful-decomposition",
    "fourier-identities",
    "normal-pairs-2x2",
    "normal-pairs-2x3",
    "normal-pairs-3x2",
    "normal-pairs-3x3",
    "normal-form-classification",
    "paradox-anonymity",
    "thm54-impossibility",
    "majority-example",
    "structural-sweeps",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub passed: bool,
    /// Summary on success, reason or counterexample on failure.
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: String,
    pub checks: Vec<CheckResult>,
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }
}

type Outcome = Result<String, String>;

struct Suite {
    checks: Vec<CheckResult>,
}

impl Suite {
    fn new() -> Self {
        Suite { checks: Vec::new() }
    }

    fn check(&mut self, name: &str, params: &[(&str, String)], outcome: Outcome) {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(CheckResult {
            name: name.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            passed,
            detail,
        });
    }
}

fn ensure(cond: bool, reason: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(reason())
    }
}

fn named(kind: Named, n: usize) -> BoolFn {
    BoolFn::named(kind, n).expect("arity in range")
}

/// Runs one suite by name, or `None` for an unknown name.
pub fn run_suite(name: &str, limits: &Limits) -> Option<SuiteResult> {
    let start = Instant::now();
    let mut suite = Suite::new();
    match name {
        "fourier-closed-forms" => fourier_closed_forms(&mut suite),
        "parseval" => parseval(&mut suite),
        "forceful-decomposition" => forceful_suite(&mut suite),
        "fourier-identities" => identity_suite(&mut suite, limits),
        "normal-pairs-2x2" => normal_pairs(&mut suite, 2, 2, limits),
        "normal-pairs-2x3" => normal_pairs(&mut suite, 2, 3, limits),
        "normal-pairs-3x2" => normal_pairs(&mut suite, 3, 2, limits),
        "normal-pairs-3x3" => normal_pairs(&mut suite, 3, 3, limits),
        "normal-form-classification" => classification_suite(&mut suite, limits),
        "paradox-anonymity" => anonymity_suite(&mut suite, limits),
        "thm54-impossibility" => impossibility_suite(&mut suite, limits),
        "majority-example" => majority_example(&mut suite, limits),
        "structural-sweeps" => structural_sweeps(&mut suite, limits),
        _ => return None,
    }
    Some(SuiteResult { name: name.to_string(), checks: suite.checks, elapsed: start.elapsed() })
}

/// Runs the named suites in order; `all` expands to every suite.
pub fn verify_suites(names: &[&str], limits: &Limits) -> Result<VerifyReport, String> {
    let mut selected: Vec<&str> = Vec::new();
    for &n in names {
        if n == "all" {
            selected.extend_from_slice(SUITES);
        } else if SUITES.contains(&n) {
            selected.push(n);
        } else {
            return Err(format!("unknown suite `{n}`; expected one of: all, {}", SUITES.join(", ")));
        }
    }
    let mut seen = BTreeSet::new();
    selected.retain(|n| seen.insert(*n));
    let suites = selected.iter().map(|n| run_suite(n, limits).expect("known suite")).collect();
    Ok(VerifyReport { suites })
}

/// Closed-form coefficient of `f̂(R)` for the named families, `R` as a mask.
fn closed_form(kind: Named, n: usize, r: usize) -> Dyadic {
    let size = r.count_ones();
    let tail = Dyadic::ONE.halve(n as u32 - 1);
    let sign = |odd: bool| if odd { -Dyadic::ONE } else { Dyadic::ONE };
    match kind {
        Named::Const(v) => match (r, v) {
            (0, true) => Dyadic::ONE,
            (0, false) => -Dyadic::ONE,
            _ => Dyadic::ZERO,
        },
        Named::Dictator(i) => {
            if r == 1 << i {
                Dyadic::ONE
            } else {
                Dyadic::ZERO
            }
        }
        Named::And if r == 0 => tail - Dyadic::ONE,
        Named::And => tail,
        Named::Or if r == 0 => Dyadic::ONE - tail,
        Named::Or => sign(size.is_multiple_of(2)) * tail,
        Named::Xor if r == (1 << n) - 1 => sign(n.is_multiple_of(2)),
        Named::Nxor if r == (1 << n) - 1 => sign(n % 2 == 1),
        Named::Xor | Named::Nxor => Dyadic::ZERO,
        Named::Majority => unreachable!("no closed form"),
    }
}

fn fourier_closed_forms(suite: &mut Suite) {
    for n in 1..=4usize {
        let mut kinds = vec![Named::Const(true), Named::Const(false), Named::And, Named::Or, Named::Xor, Named::Nxor];
        kinds.extend((0..n).map(Named::Dictator));
        let outcome = kinds.iter().try_for_each(|&kind| {
            let s = spectrum(&named(kind, n));
            (0..1usize << n).try_for_each(|r| {
                let want = closed_form(kind, n, r);
                ensure(s.coefficient(r) == want, || {
                    format!("{kind:?} at R = {r:#b}: got {}, expected {want}", s.coefficient(r))
                })
            })
        });
        suite.check(
            "closed-forms",
            &[("n", n.to_string())],
            outcome.map(|_| format!("{} functions match", kinds.len())),
        );
    }
}

fn parseval(suite: &mut Suite) {
    for n in 1..=4usize {
        let outcome = BoolFn::all(n).try_for_each(|f| {
            let s = spectrum(&f);
            ensure(s.parseval_sum() == Dyadic::ONE, || format!("{f}: sum of squares {}", s.parseval_sum()))?;
            ensure(reconstruct(&s).as_ref() == Ok(&f), || format!("{f}: reconstruction differs"))
        });
        suite.check("parseval", &[("n", n.to_string())], outcome.map(|_| format!("{} functions", 1u64 << (1 << n))));
    }
}

fn forceful_suite(suite: &mut Suite) {
    for n in 2..=4usize {
        let mut count = 0usize;
        let outcome = BoolFn::all(n).filter(|f| f.constant_value().is_none() && f.is_forceful()).try_for_each(|f| {
            count += 1;
            let d = f.forceful_decomposition().map_err(|e| format!("{f}: {e}"))?;
            ensure(d.reexpand() == f, || format!("{f}: product form re-expands differently"))?;
            let s = spectrum(&f);
            let c0 = Dyadic::from(d.c0.value());
            let tail = Dyadic::ONE.halve(n as u32 - 1);
            (0..1usize << n).try_for_each(|r| {
                let product: i64 = (0..n).filter(|i| r >> i & 1 == 1).map(|i| d.coefficients[i].value()).product();
                let want = if r == 0 { c0 * tail - c0 } else { c0 * Dyadic::from(product) * tail };
                ensure(s.coefficient(r) == want, || {
                    format!("{f} at R = {r:#b}: got {}, expected {want}", s.coefficient(r))
                })
            })
        });
        suite.check("decomposition", &[("n", n.to_string())], outcome.map(|_| format!("{count} forceful functions")));
    }
    // AND and OR are the canonical forceful functions
    let and = named(Named::And, 3).forceful_decomposition();
    let or = named(Named::Or, 3).forceful_decomposition();
    let outcome = ensure(
        and.as_ref().is_ok_and(|d| d.c0 == Sign::Plus && d.coefficients.iter().all(|&c| c == Sign::Plus))
            && or.as_ref().is_ok_and(|d| d.c0 == Sign::Minus && d.coefficients.iter().all(|&c| c == Sign::Minus)),
        || format!("and: {and:?}, or: {or:?}"),
    );
    suite.check("and-or-signs", &[("n", "3".into())], outcome.map(|_| "signs as expected".into()));
}

fn identity_suite(suite: &mut Suite, limits: &Limits) {
    let shapes: Vec<(usize, usize)> =
        (1..=4).flat_map(|m| (1..=4).map(move |n| (m, n))).filter(|&(m, n)| m * n <= 9).collect();
    for (m, n) in shapes {
        let outcome = enumerate_normal_pairs(m, n, limits).map_err(|e| e.to_string()).and_then(|pairs| {
            pairs.iter().try_for_each(|(g, f)| {
                let ids = PairIdentities::new(g, f).map_err(|e| e.to_string())?;
                let cells = ids.failing_cell_sets();
                ensure(cells.is_empty(), || format!("({g}, {f}): identity fails for U = {:#b}", cells[0]))?;
                let rects = ids.failing_rectangles();
                ensure(rects.is_empty(), || format!("({g}, {f}): rectangle {:?} fails", rects[0]))
            })?;
            Ok(format!("{} normal pairs", pairs.len()))
        });
        suite.check("normal-pairs-satisfy-identities", &[("m", m.to_string()), ("n", n.to_string())], outcome);
    }
    let (g, f) = (named(Named::Or, 2), named(Named::And, 2));
    let outcome = PairIdentities::new(&g, &f).map_err(|e| e.to_string()).and_then(|ids| {
        let failing = ids.failing_cell_sets();
        ensure(!failing.is_empty(), || "every identity holds".into())?;
        Ok(format!("{} of 16 cell sets fail, first U = {:#b}", failing.len(), failing[0]))
    });
    suite.check("or-and-fails", &[("g", g.spec_string()), ("f", f.spec_string())], outcome);
}

/// Normal pairs predicted by the classification at arities `(m, n)`, both ≥ 2.
fn expected_pairs(m: usize, n: usize) -> Vec<(BoolFn, BoolFn)> {
    let mut out = vec![(named(Named::And, m), named(Named::And, n)), (named(Named::Or, m), named(Named::Or, n))];
    // parity pairs commute when the constant terms line up
    for (gk, fk, ok) in [
        (Named::Xor, Named::Xor, true),
        (Named::Nxor, Named::Nxor, m % 2 == n % 2),
        (Named::Xor, Named::Nxor, m % 2 == 1),
        (Named::Nxor, Named::Xor, n % 2 == 1),
    ] {
        if ok {
            out.push((named(gk, m), named(fk, n)));
        }
    }
    out.sort();
    out
}

fn normal_pairs(suite: &mut Suite, m: usize, n: usize, limits: &Limits) {
    let params = [("m", m.to_string()), ("n", n.to_string())];
    let pairs = match enumerate_normal_pairs(m, n, limits) {
        Ok(p) => p,
        Err(e) => return suite.check("enumerate", &params, Err(e.to_string())),
    };
    let outcome = pairs.iter().try_for_each(|(g, f)| {
        let c = classify_pair(g, f, limits).map_err(|e| e.to_string())?;
        ensure(c.case != TheoremCase::TheoremViolation, || format!("({g}, {f}) is outside the classification"))
    });
    suite.check("only-classified-cases", &params, outcome.map(|_| format!("{} pairs found", pairs.len())));
    let expected = expected_pairs(m, n);
    let show = |ps: &[(BoolFn, BoolFn)]| ps.iter().map(|(g, f)| format!("({g}, {f})")).collect::<Vec<_>>().join(" ");
    suite.check(
        "exact-pair-list",
        &params,
        ensure(pairs == expected, || format!("found {}, expected {}", show(&pairs), show(&expected)))
            .map(|_| show(&pairs)),
    );
    let (g, f) = (named(Named::Or, m), named(Named::And, n));
    let outcome = check_normal_pair(&g, &f, limits).map_err(|e| e.to_string()).and_then(|r| {
        ensure(r.violated_condition == Some(Violation::Commutation) && r.counterexample.is_some(), || {
            format!("{r:?}")
        })?;
        Ok(format!("counterexample matrix {:#b}", r.counterexample.expect("present").matrix))
    });
    suite.check("or-and-counterexample", &params, outcome);
}

fn agenda(items: &[&str], limits: &Limits) -> Agenda {
    build_agenda(items.iter().map(|s| parse(s).expect("valid formula")).collect(), limits).expect("valid agenda")
}

fn closure_of(g: &str, limits: &Limits) -> Agenda {
    closure(&parse(g).expect("valid formula"), limits).expect("compound")
}

fn spec_list(fs: &[BoolFn]) -> String {
    fs.iter().map(BoolFn::spec_string).collect::<Vec<_>>().join(" ")
}

fn normal_form_functions(a: &Agenda, n: usize, limits: &Limits) -> Result<Vec<BoolFn>, String> {
    let solutions = enumerate_arrovian_normal_form(a, n, limits).map_err(|e| e.to_string())?;
    if let Some(bad) = solutions.iter().find(|s| s.shape == SolutionShape::TheoremViolation) {
        return Err(format!("{} is neither a dictator nor a matching oligarchy", bad.function));
    }
    let mut fs: Vec<BoolFn> = solutions.into_iter().map(|s| s.function).collect();
    fs.sort();
    Ok(fs)
}

fn exact_list(found: Result<Vec<BoolFn>, String>, mut expected: Vec<BoolFn>) -> Outcome {
    expected.sort();
    let found = found?;
    ensure(found == expected, || format!("found {}, expected {}", spec_list(&found), spec_list(&expected)))?;
    Ok(spec_list(&found))
}

fn dictators(n: usize) -> Vec<BoolFn> {
    (0..n).map(|i| named(Named::Dictator(i), n)).collect()
}

/// Agendas with at most three atoms and two compounds exercised by the sweeps.
pub fn test_agendas() -> Vec<Vec<&'static str>> {
    vec![
        vec!["P"],
        vec!["P", "Q"],
        vec!["P", "Q", "P & Q"],
        vec!["P", "Q", "P | Q"],
        vec!["P", "Q", "P ^ Q"],
        vec!["P", "Q", "!(P ^ Q)"],
        vec!["P", "Q", "!(P & Q)"],
        vec!["!P", "Q", "P | Q"],
        vec!["P", "Q", "P | Q", "P & Q"],
        vec!["P", "Q", "R", "(P | Q) & R"],
        vec!["P", "Q", "R", "P | Q | R"],
        vec!["P", "Q", "R", "P & Q & R"],
        vec!["P", "Q", "R", "P ^ Q ^ R"],
        vec!["P", "Q", "R", "P & Q", "Q & R"],
        vec!["P", "Q", "R", "P | Q", "Q | R"],
        vec!["P", "Q", "R", "P ^ Q", "Q ^ R"],
        vec!["P", "Q", "R", "P & Q", "Q | R"],
    ]
}

fn classification_suite(suite: &mut Suite, limits: &Limits) {
    let or = closure_of("P | Q", limits);
    suite.check(
        "closure-or",
        &[("agenda", or.to_string()), ("n", "2".into())],
        exact_list(normal_form_functions(&or, 2, limits), [dictators(2), vec![named(Named::Or, 2)]].concat()),
    );
    let mixed = agenda(&["P", "Q", "R", "(P | Q) & R"], limits);
    suite.check(
        "mixed-compound-dictators",
        &[("agenda", mixed.to_string()), ("n", "2".into())],
        exact_list(normal_form_functions(&mixed, 2, limits), dictators(2)),
    );
    let xor = closure_of("P ^ Q", limits);
    suite.check(
        "closure-xor",
        &[("agenda", xor.to_string()), ("n", "2".into())],
        exact_list(normal_form_functions(&xor, 2, limits), dictators(2)),
    );
    suite.check(
        "closure-xor",
        &[("agenda", xor.to_string()), ("n", "3".into())],
        exact_list(normal_form_functions(&xor, 3, limits), [dictators(3), vec![named(Named::Xor, 3)]].concat()),
    );
    let and_or = agenda(&["P", "Q", "P | Q", "P & Q"], limits);
    for n in 2..=3 {
        suite.check(
            "or-and-exclusion",
            &[("agenda", and_or.to_string()), ("n", n.to_string())],
            exact_list(normal_form_functions(&and_or, n, limits), dictators(n)),
        );
    }
    // every solution on every qualifying test agenda is classified
    for n in 2..=3 {
        let mut total = 0usize;
        let outcome = test_agendas().iter().try_for_each(|items| {
            let a = agenda(items, limits);
            if a.compound_positions().is_empty() || !a.is_symbol_connected() {
                return Ok(());
            }
            total += normal_form_functions(&a, n, limits).map_err(|e| format!("{a}: {e}"))?.len();
            Ok(())
        });
        suite.check("trichotomy", &[("n", n.to_string())], outcome.map(|_| format!("{total} solutions classified")));
    }
}

fn anonymity_suite(suite: &mut Suite, limits: &Limits) {
    let a = closure_of("P | Q", limits);
    let outcome = enumerate_arrovian_normal_form(&a, 3, limits).map_err(|e| e.to_string()).and_then(|solutions| {
        let jars = solutions.iter().map(|s| s.jar(&a)).collect();
        let kept: Vec<BoolFn> = filter_axioms(jars, true, false).iter().map(|j| j.function(0).clone()).collect();
        exact_list(Ok(kept), vec![named(Named::Or, 3)])
    });
    suite.check("anonymous-disjunction", &[("agenda", a.to_string()), ("n", "3".into())], outcome);
}

fn impossibility_suite(suite: &mut Suite, limits: &Limits) {
    let a = closure_of("P & Q", limits);
    for n in 2..=3 {
        let params = [("agenda", a.to_string()), ("n", n.to_string())];
        let outcome = enumerate_arrovian_normal_form(&a, n, limits).map_err(|e| e.to_string()).and_then(|s| {
            let jars = s.iter().map(|s| s.jar(&a)).collect();
            let kept = filter_axioms(jars, true, true);
            ensure(kept.is_empty(), || format!("{} survives", kept[0].function(0)))?;
            Ok(format!("{} Arrovian rules, none anonymous and systematic", s.len()))
        });
        suite.check("arrovian", &params, outcome);
        // systematic rules share one function, so the uniform sweep is exhaustive
        let outcome = enumerate_consistent_normal_form(&a, n, limits).map_err(|e| e.to_string()).and_then(|fs| {
            let count = fs.len();
            let jars = fs.into_iter().map(|f| PiJar::uniform(a.clone(), f)).collect();
            let kept = filter_axioms(jars, true, true);
            ensure(kept.is_empty(), || format!("{} survives", kept[0].function(0)))?;
            Ok(format!("{count} consistent uniform rules, none anonymous and systematic"))
        });
        suite.check("without-unanimity", &params, outcome);
    }
}

fn majority_example(suite: &mut Suite, limits: &Limits) {
    let maj = named(Named::Majority, 3);
    let a = agenda(&["P | Q", "!P | Q"], limits);
    let outcome = check_jar(&PiJar::uniform(a.clone(), maj.clone()), limits).map_err(|e| e.to_string()).and_then(|v| {
        ensure(v.consistent, || format!("counterexample {:?}", v.counterexample))?;
        Ok("every aggregate has at least one T".into())
    });
    suite.check("disjunctions-consistent", &[("agenda", a.to_string()), ("n", "3".into())], outcome);
    let b = closure_of("P & Q", limits);
    let j = PiJar::uniform(b.clone(), maj);
    let outcome = check_jar(&j, limits).map_err(|e| e.to_string()).and_then(|v| {
        let cx = v.counterexample.ok_or("no counterexample")?;
        let profile: Vec<String> = cx.profile.iter().map(|p| p.to_string()).collect();
        ensure(profile == ["TTT", "TFF", "FTF"] && cx.aggregate.to_string() == "TTF", || {
            format!("profile {profile:?} -> {}", cx.aggregate)
        })?;
        ensure(j.aggregate(&cx.profile) == cx.aggregate && !b.rational_judgments().contains(&cx.aggregate), || {
            "stored counterexample does not reproduce".into()
        })?;
        Ok(format!("profile {} -> {}", profile.join(" "), cx.aggregate))
    });
    suite.check("doctrinal-paradox", &[("agenda", b.to_string()), ("n", "3".into())], outcome);
}

fn structural_sweeps(suite: &mut Suite, limits: &Limits) {
    let n = 2;
    for items in test_agendas() {
        let a = agenda(&items, limits);
        let params = [("agenda", a.to_string()), ("n", n.to_string())];
        let solutions = match enumerate_arrovian_general(&a, n, limits) {
            Ok(s) => s,
            Err(e) => {
                suite.check("enumerate", &params, Err(e.to_string()));
                continue;
            }
        };
        let qualifying = a.is_symbol_complete() && a.is_symbol_connected();
        let outcome = solutions.iter().try_for_each(|j| {
            for mask in 1u64..1 << a.len() {
                let positions: Vec<usize> = (0..a.len()).filter(|&p| mask >> p & 1 == 1).collect();
                let r = j.restrict(&positions).map_err(|e| e.to_string())?;
                let v = check_jar(&r, limits).map_err(|e| e.to_string())?;
                ensure(v.is_arrovian(), || format!("{:?} restricted to {positions:?} is not Arrovian", j.functions()))?;
            }
            for x in 0..a.len() {
                for y in 0..a.len() {
                    let l = relate_positions(j, x, y).map_err(|e| e.to_string())?;
                    ensure(l != PositionRelation::Violation, || format!("{:?}: f_{y} vs f_{x}", j.functions()))?;
                }
            }
            if qualifying {
                to_normal_form(j, limits).map_err(|e| format!("{:?}: {e}", j.functions()))?;
            }
            Ok(())
        });
        suite.check("restriction-flip-pattern", &params, outcome.map(|_| format!("{} solutions", solutions.len())));
    }
    let a = agenda(&["P", "Q", "R", "S", "P & Q", "R | S"], limits);
    let outcome = decomposition_bijection(&a, n, limits);
    suite.check("component-bijection", &[("agenda", a.to_string()), ("n", n.to_string())], outcome);
}

/// Solutions on a disconnected agenda correspond one to one with tuples of
/// solutions on its components.
fn decomposition_bijection(a: &Agenda, n: usize, limits: &Limits) -> Outcome {
    let parts = a.symbol_graph().components();
    ensure(parts.len() > 1, || "agenda is connected".into())?;
    let whole = enumerate_arrovian_general(a, n, limits).map_err(|e| e.to_string())?;
    let mut per_part = Vec::new();
    for p in &parts {
        let sub = a.sub_agenda(p).map_err(|e| e.to_string())?;
        let sols: BTreeSet<Vec<BoolFn>> = enumerate_arrovian_general(&sub, n, limits)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|j| j.functions().to_vec())
            .collect();
        per_part.push(sols);
    }
    let mut images = BTreeSet::new();
    for j in &whole {
        let image: Vec<Vec<BoolFn>> =
            parts.iter().map(|p| p.iter().map(|&x| j.function(x).clone()).collect()).collect();
        for (k, piece) in image.iter().enumerate() {
            ensure(per_part[k].contains(piece), || format!("component {} image is not a solution", k + 1))?;
        }
        images.insert(image);
    }
    let product: usize = per_part.iter().map(BTreeSet::len).product();
    ensure(images.len() == whole.len(), || "restriction map is not injective".into())?;
    ensure(whole.len() == product, || format!("{} solutions, {product} component tuples", whole.len()))?;
    let rational: usize = parts.iter().map(|p| a.sub_agenda(p).expect("valid").rational_judgments().len()).product();
    ensure(rational == a.rational_judgments().len(), || "rational judgments do not factor".into())?;
    Ok(format!(
        "{} solutions = {}",
        whole.len(),
        per_part.iter().map(|s| s.len().to_string()).collect::<Vec<_>>().join(" x ")
    ))
}

/// Readable form of a solution shape with 1-based judges.
pub fn describe_shape(shape: &SolutionShape) -> String {
    match shape {
        SolutionShape::Dictator(i) => format!("dictator({})", i + 1),
        SolutionShape::Oligarchy { kind, judges } => {
            let js: Vec<String> = judges.iter().map(|j| (j + 1).to_string()).collect();
            format!("{} over {{{}}}", kind.label(), js.join(","))
        }
        other => other.label().to_string(),
    }
}
