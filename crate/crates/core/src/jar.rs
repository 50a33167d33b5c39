// SPDX-License-Identifier: Apache-2.0

//! Propositionally independent judgment aggregation rules (PI JARs).
//!
//! A rule on `n` judges assigns each basis position `x` a function `f_x` of
//! arity `n`; the aggregate of a profile `(p_1, .., p_n)` at `x` is
//! `f_x(p_1(x), .., p_n(x))`. Judge `i` is input `i` of every `f_x`.
//!
//! Profiles are swept in lexicographic order of the rational-judgment
//! indices, judge 0 most significant, so the first counterexample is
//! well defined.

use std::collections::HashMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::agenda::{Agenda, AgendaError, Judgment};
use crate::boolfn::{BoolFn, FnClass, RelevantClass};
use crate::limits::{checked_pow, function_count, Limits};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JarError {
    #[error("a rule needs at least one judge")]
    NoJudges,
    #[error("expected {expected} aggregation functions, got {got}")]
    CountMismatch { expected: usize, got: usize },
    #[error("function for position {position} has arity {arity}, expected {judges}")]
    ArityMismatch { position: usize, arity: usize, judges: usize },
    #[error("{profiles} profiles exceed the cap of {cap}")]
    ProfileCapExceeded { profiles: String, cap: u64 },
    #[error("enumeration needs {needed} candidate checks, over the budget of {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("the agenda must be symbol-complete and symbol-connected")]
    NotQualifying,
    #[error("the rule is not Arrovian: {0}")]
    NotArrovian(&'static str),
    #[error("function for position {0} is neither equal to nor the flip of the function for position 1")]
    NeitherEqualNorFlip(usize),
    #[error("position {position} is out of range for a basis of {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error(transparent)]
    Agenda(#[from] AgendaError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiJar {
    agenda: Agenda,
    judges: usize,
    per_prop: Vec<BoolFn>,
}

/// A profile whose aggregate is not fully rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JarCounterexample {
    pub profile: Vec<Judgment>,
    pub aggregate: Judgment,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JarVerdict {
    pub consistent: bool,
    pub up: bool,
    pub anonymous: bool,
    pub systematic: bool,
    /// Present iff the rule is inconsistent.
    pub counterexample: Option<JarCounterexample>,
}

impl JarVerdict {
    pub fn is_arrovian(&self) -> bool {
        self.consistent && self.up
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PositionRelation {
    Equal,
    Flip,
    Violation,
    NotApplicable,
}

impl PositionRelation {
    pub fn label(&self) -> &'static str {
        match self {
            PositionRelation::Equal => "equal",
            PositionRelation::Flip => "flip",
            PositionRelation::Violation => "violation",
            PositionRelation::NotApplicable => "not-applicable",
        }
    }
}

/// The AND, OR and parity families that oligarchies and compounds fall into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    And,
    Or,
    Parity,
}

pub fn family(class: FnClass) -> Option<Family> {
    match class {
        FnClass::And => Some(Family::And),
        FnClass::Or => Some(Family::Or),
        FnClass::Xor | FnClass::Nxor => Some(Family::Parity),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SolutionShape {
    Dictator(usize),
    /// A named function over the relevant judges, at least two of them.
    Oligarchy {
        kind: FnClass,
        judges: Vec<usize>,
    },
    /// Any other UP function; legitimate only without compounds.
    Unconstrained,
    /// A solution outside the dictator-or-matching-oligarchy classification.
    TheoremViolation,
}

impl SolutionShape {
    pub fn label(&self) -> &'static str {
        match self {
            SolutionShape::Dictator(_) => "dictator",
            SolutionShape::Oligarchy { .. } => "oligarchy",
            SolutionShape::Unconstrained => "unconstrained",
            SolutionShape::TheoremViolation => "theorem-violation",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormSolution {
    pub function: BoolFn,
    pub relevant: RelevantClass,
    pub shape: SolutionShape,
}

impl NormalFormSolution {
    /// The rule applying the solution to every basis proposition.
    pub fn jar(&self, agenda: &Agenda) -> PiJar {
        PiJar::uniform(agenda.clone(), self.function.clone())
    }
}

impl PiJar {
    pub fn new(agenda: Agenda, judges: usize, per_prop: Vec<BoolFn>) -> Result<Self, JarError> {
        if judges == 0 {
            return Err(JarError::NoJudges);
        }
        if per_prop.len() != agenda.len() {
            return Err(JarError::CountMismatch { expected: agenda.len(), got: per_prop.len() });
        }
        if let Some((position, f)) = per_prop.iter().enumerate().find(|(_, f)| f.arity() != judges) {
            return Err(JarError::ArityMismatch { position: position + 1, arity: f.arity(), judges });
        }
        Ok(PiJar { agenda, judges, per_prop })
    }

    /// The rule using `f` on every basis proposition.
    pub fn uniform(agenda: Agenda, f: BoolFn) -> Self {
        assert!(f.arity() >= 1, "a rule needs at least one judge");
        let per_prop = vec![f.clone(); agenda.len()];
        PiJar { judges: f.arity(), agenda, per_prop }
    }

    pub fn agenda(&self) -> &Agenda {
        &self.agenda
    }

    pub fn judges(&self) -> usize {
        self.judges
    }

    pub fn function(&self, position: usize) -> &BoolFn {
        &self.per_prop[position]
    }

    pub fn functions(&self) -> &[BoolFn] {
        &self.per_prop
    }

    pub fn aggregate(&self, profile: &[Judgment]) -> Judgment {
        assert_eq!(profile.len(), self.judges, "one judgment per judge");
        let bits = self.per_prop.iter().enumerate().fold(0u64, |acc, (x, f)| {
            let column = profile.iter().enumerate().fold(0usize, |c, (i, p)| c | (p.value(x) as usize) << i);
            acc | (f.value(column) as u64) << x
        });
        Judgment::from_bits(bits, self.agenda.len())
    }

    /// Unanimity is preserved on every proposition.
    pub fn is_up(&self) -> bool {
        self.per_prop.iter().all(is_up_fn)
    }

    /// Every aggregation function is invariant under permuting judges.
    pub fn is_anonymous(&self) -> bool {
        self.per_prop.iter().all(BoolFn::is_symmetric)
    }

    /// One function serves every proposition and its negation, which
    /// requires the shared function to equal its own flip.
    pub fn is_systematic(&self) -> bool {
        let f = &self.per_prop[0];
        self.per_prop.iter().all(|g| g == f) && f.flip() == *f
    }

    /// The rule on the sub-agenda at `positions`.
    pub fn restrict(&self, positions: &[usize]) -> Result<PiJar, JarError> {
        let agenda = self.agenda.sub_agenda(positions)?;
        let per_prop = positions.iter().map(|&p| self.per_prop[p].clone()).collect();
        PiJar::new(agenda, self.judges, per_prop)
    }
}

fn is_up_fn(f: &BoolFn) -> bool {
    !f.value(0) && f.value(f.len() - 1)
}

fn profile_count(agenda: &Agenda, judges: usize) -> Option<u64> {
    checked_pow(agenda.rational_judgments().len() as u64, judges as u64)
}

fn decode_profile(agenda: &Agenda, judges: usize, mut index: u64) -> Vec<Judgment> {
    let u = agenda.rational_judgments().judgments();
    let mut out = vec![u[0]; judges];
    for slot in out.iter_mut().rev() {
        *slot = u[(index % u.len() as u64) as usize];
        index /= u.len() as u64;
    }
    out
}

pub fn check_jar(j: &PiJar, limits: &Limits) -> Result<JarVerdict, JarError> {
    let count = profile_count(&j.agenda, j.judges).filter(|&c| c <= limits.profile_cap).ok_or_else(|| {
        JarError::ProfileCapExceeded {
            profiles: format!("{}^{}", j.agenda.rational_judgments().len(), j.judges),
            cap: limits.profile_cap,
        }
    })?;
    let rational = j.agenda.rational_judgments();
    let counterexample = (0..count).into_par_iter().find_map_first(|index| {
        let profile = decode_profile(&j.agenda, j.judges, index);
        let aggregate = j.aggregate(&profile);
        (!rational.contains(&aggregate)).then_some(JarCounterexample { profile, aggregate })
    });
    Ok(JarVerdict {
        consistent: counterexample.is_none(),
        up: j.is_up(),
        anonymous: j.is_anonymous(),
        systematic: j.is_systematic(),
        counterexample,
    })
}

/// Compares `f_y` with `f_x` when `y` depends on `x` and is determined by
/// the rest of the basis.
pub fn relate_positions(j: &PiJar, x: usize, y: usize) -> Result<PositionRelation, JarError> {
    let len = j.agenda.len();
    if let Some(&position) = [x, y].iter().find(|&&p| p >= len) {
        return Err(JarError::PositionOutOfRange { position, len });
    }
    if x == y || !j.agenda.depends_on(y, x)? || !j.agenda.is_determined_by_rest(y)? {
        return Ok(PositionRelation::NotApplicable);
    }
    let (fx, fy) = (&j.per_prop[x], &j.per_prop[y]);
    Ok(if fy == fx {
        PositionRelation::Equal
    } else if *fy == fx.flip() {
        PositionRelation::Flip
    } else {
        PositionRelation::Violation
    })
}

/// Rewrites an Arrovian rule on a symbol-complete, symbol-connected agenda
/// so that every proposition uses the function of position 0, negating the
/// positions whose function is its flip. Returns the rule and the negated
/// positions.
pub fn to_normal_form(j: &PiJar, limits: &Limits) -> Result<(PiJar, Vec<usize>), JarError> {
    if !(j.agenda.is_symbol_complete() && j.agenda.is_symbol_connected()) {
        return Err(JarError::NotQualifying);
    }
    let verdict = check_jar(j, limits)?;
    if !verdict.up {
        return Err(JarError::NotArrovian("unanimity is not preserved"));
    }
    if !verdict.consistent {
        return Err(JarError::NotArrovian("some profile aggregates to an irrational judgment"));
    }
    let f0 = &j.per_prop[0];
    let flipped = f0.flip();
    let mut negated = Vec::new();
    for (x, f) in j.per_prop.iter().enumerate() {
        if f == f0 {
            continue;
        }
        if *f != flipped {
            return Err(JarError::NeitherEqualNorFlip(x + 1));
        }
        negated.push(x);
    }
    let agenda = j.agenda.with_negated(&negated)?;
    Ok((PiJar::uniform(agenda, f0.clone()), negated))
}

/// Distinct column tuples over every profile, in order of first occurrence.
/// Consistency of a rule depends on profiles only through these tuples.
struct ProfileColumns {
    width: usize,
    tuples: Vec<u32>,
}

impl ProfileColumns {
    fn new(agenda: &Agenda, judges: usize) -> Self {
        let u = agenda.rational_judgments().judgments();
        let width = agenda.len();
        let count = profile_count(agenda, judges).expect("checked against the budget");
        let mut seen: HashMap<Vec<u32>, ()> = HashMap::new();
        let mut tuples = Vec::new();
        let mut digits = vec![0usize; judges];
        for _ in 0..count {
            let tuple: Vec<u32> = (0..width)
                .map(|x| digits.iter().enumerate().fold(0u32, |c, (i, &d)| c | (u[d].value(x) as u32) << i))
                .collect();
            if seen.insert(tuple.clone(), ()).is_none() {
                tuples.extend_from_slice(&tuple);
            }
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d < u.len() {
                    break;
                }
                *d = 0;
            }
        }
        ProfileColumns { width, tuples }
    }

    fn consistent(&self, agenda: &Agenda, fs: &[&BoolFn]) -> bool {
        let rational = agenda.rational_judgments();
        self.tuples.chunks(self.width).all(|cols| {
            let bits =
                cols.iter().zip(fs).enumerate().fold(0u64, |acc, (x, (&c, f))| acc | (f.value(c as usize) as u64) << x);
            rational.contains_bits(bits)
        })
    }
}

fn check_budget(
    candidates: Option<u64>,
    agenda: &Agenda,
    judges: usize,
    limits: &Limits,
    describe: String,
) -> Result<(), JarError> {
    let needed = candidates.zip(profile_count(agenda, judges)).and_then(|(c, p)| c.checked_mul(p));
    if needed.is_some_and(|n| n <= limits.enumeration_budget) {
        Ok(())
    } else {
        Err(JarError::BudgetExceeded { needed: describe, budget: limits.enumeration_budget })
    }
}

/// UP functions of the given arity, in table order.
pub fn up_functions(judges: usize) -> Vec<BoolFn> {
    BoolFn::all(judges).filter(is_up_fn).collect()
}

fn up_function_count(judges: usize) -> Option<u64> {
    let free = (1u32 << judges.min(31)).checked_sub(2)?;
    1u64.checked_shl(free)
}

fn classify_solution(agenda: &Agenda, f: &BoolFn) -> NormalFormSolution {
    let relevant = f.classify_on_relevant();
    let compounds: Vec<Option<Family>> = agenda
        .compound_positions()
        .into_iter()
        .map(|p| agenda.compound_function(p).ok().and_then(|c| family(c.function.classify())))
        .collect();
    let shape = match relevant.class {
        FnClass::Dictator(i) => SolutionShape::Dictator(i),
        class @ (FnClass::And | FnClass::Or | FnClass::Xor | FnClass::Nxor)
            if compounds.iter().all(|&c| c == family(class)) =>
        {
            SolutionShape::Oligarchy { kind: class, judges: relevant.support.clone() }
        }
        _ if compounds.is_empty() => SolutionShape::Unconstrained,
        _ => SolutionShape::TheoremViolation,
    };
    NormalFormSolution { function: f.clone(), relevant, shape }
}

/// Every UP function which, applied to all basis propositions, gives a
/// consistent rule. The agenda must be symbol-complete and symbol-connected.
pub fn enumerate_arrovian_normal_form(
    agenda: &Agenda,
    judges: usize,
    limits: &Limits,
) -> Result<Vec<NormalFormSolution>, JarError> {
    if judges == 0 {
        return Err(JarError::NoJudges);
    }
    if !(agenda.is_symbol_complete() && agenda.is_symbol_connected()) {
        return Err(JarError::NotQualifying);
    }
    let describe = format!("2^(2^{judges} - 2) x {}^{judges}", agenda.rational_judgments().len());
    check_budget(up_function_count(judges), agenda, judges, limits, describe)?;
    let columns = ProfileColumns::new(agenda, judges);
    let candidates = up_functions(judges);
    Ok(candidates
        .par_iter()
        .filter(|f| columns.consistent(agenda, &vec![*f; agenda.len()]))
        .map(|f| classify_solution(agenda, f))
        .collect())
}

/// Every function, UP or not, which applied to all basis propositions gives
/// a consistent rule.
pub fn enumerate_consistent_normal_form(
    agenda: &Agenda,
    judges: usize,
    limits: &Limits,
) -> Result<Vec<BoolFn>, JarError> {
    if judges == 0 {
        return Err(JarError::NoJudges);
    }
    let describe = format!("2^(2^{judges}) x {}^{judges}", agenda.rational_judgments().len());
    check_budget(function_count(judges), agenda, judges, limits, describe)?;
    let columns = ProfileColumns::new(agenda, judges);
    let candidates: Vec<BoolFn> = BoolFn::all(judges).collect();
    Ok(candidates.into_par_iter().filter(|f| columns.consistent(agenda, &vec![f; agenda.len()])).collect())
}

/// Every consistent rule choosing an independent UP function per
/// proposition, ordered lexicographically by the function tuple.
pub fn enumerate_arrovian_general(agenda: &Agenda, judges: usize, limits: &Limits) -> Result<Vec<PiJar>, JarError> {
    if judges == 0 {
        return Err(JarError::NoJudges);
    }
    let width = agenda.len();
    let combos = up_function_count(judges).and_then(|c| checked_pow(c, width as u64));
    let describe = format!("(2^(2^{judges} - 2))^{width} x {}^{judges}", agenda.rational_judgments().len());
    check_budget(combos, agenda, judges, limits, describe)?;
    let combos = combos.expect("checked against the budget");
    let columns = ProfileColumns::new(agenda, judges);
    let candidates = up_functions(judges);
    let radix = candidates.len() as u64;
    let pick = |mut index: u64| -> Vec<&BoolFn> {
        let mut out = vec![&candidates[0]; width];
        for slot in out.iter_mut().rev() {
            *slot = &candidates[(index % radix) as usize];
            index /= radix;
        }
        out
    };
    Ok((0..combos)
        .into_par_iter()
        .filter_map(|index| {
            let fs = pick(index);
            columns.consistent(agenda, &fs).then(|| PiJar {
                agenda: agenda.clone(),
                judges,
                per_prop: fs.into_iter().cloned().collect(),
            })
        })
        .collect())
}

/// Keeps the rules satisfying the requested axioms.
pub fn filter_axioms(jars: Vec<PiJar>, anonymity: bool, systematicity: bool) -> Vec<PiJar> {
    jars.into_iter().filter(|j| (!anonymity || j.is_anonymous()) && (!systematicity || j.is_systematic())).collect()
}
