// SPDX-License-Identifier: Apache-2.0

//! Boolean-function and judgment-aggregation toolkit.
//!
//! Propositional agendas, exact Fourier analysis of Boolean functions, the
//! normal-pair commutation property, and exhaustive checks of which
//! aggregation rules are consistent and unanimity preserving.
//!
//! Indices are 0-based throughout the API; textual function specs and
//! rendered output use 1-based judges and inputs.

pub mod agenda;
pub mod boolfn;
pub mod dyadic;
pub mod formula;
pub mod fourier;
pub mod jar;
pub mod limits;
pub mod normalpair;
pub mod verify;

pub use agenda::{build_agenda, closure, parse_agenda, Agenda, AgendaError, Judgment, RationalSet};
pub use boolfn::{BoolFn, BoolFnError, FnClass, Named, RelevantClass};
pub use dyadic::Dyadic;
pub use formula::{parse, Formula, FormulaError, ParseError, Symbol};
pub use fourier::{spectrum, FourierError, FourierSpectrum, IdentityCheck, PairIdentities};
pub use jar::{
    check_jar, enumerate_arrovian_general, enumerate_arrovian_normal_form, filter_axioms, to_normal_form, JarError,
    JarVerdict, PiJar, SolutionShape,
};
pub use limits::Limits;
pub use normalpair::{check_normal_pair, enumerate_normal_pairs, NormalPairError, NormalPairReport, Violation};
pub use verify::{run_suite, verify_suites, VerifyReport};
