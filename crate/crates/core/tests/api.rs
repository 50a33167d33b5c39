// SPDX-License-Identifier: Apache-2.0

use arrovian_core::fourier::reconstruct;
use arrovian_core::{
    check_jar, check_normal_pair, closure, enumerate_normal_pairs, parse, spectrum, BoolFn, Dyadic, Limits, PiJar,
};
use proptest::prelude::*;

fn table(arity: usize) -> impl Strategy<Value = BoolFn> {
    let mask = if arity == 6 { u64::MAX } else { (1u64 << (1 << arity)) - 1 };
    any::<u64>().prop_map(move |b| BoolFn::from_bits(arity, b & mask).unwrap())
}

proptest! {
    #[test]
    fn spectrum_round_trips_and_sums_to_one(f in (1usize..=6).prop_flat_map(table)) {
        let s = spectrum(&f);
        prop_assert_eq!(s.parseval_sum(), Dyadic::from_int(1));
        prop_assert_eq!(reconstruct(&s).unwrap(), f);
    }

    #[test]
    fn normality_is_transpose_invariant(g in table(2), f in table(3)) {
        let limits = Limits::default();
        let a = check_normal_pair(&g, &f, &limits).unwrap().is_normal;
        let b = check_normal_pair(&f, &g, &limits).unwrap().is_normal;
        prop_assert_eq!(a, b);
    }
}

#[test]
fn swapped_enumerations_agree() {
    let limits = Limits::default();
    let mut forward: Vec<_> = enumerate_normal_pairs(2, 3, &limits).unwrap().into_iter().map(|(g, f)| (f, g)).collect();
    let mut backward = enumerate_normal_pairs(3, 2, &limits).unwrap();
    forward.sort();
    backward.sort();
    assert_eq!(forward, backward);
}

#[test]
fn majority_on_conjunction_closure_is_inconsistent() {
    let limits = Limits::default();
    let agenda = closure(&parse("P & Q").unwrap(), &limits).unwrap();
    let maj = BoolFn::parse_spec("maj:3", 20).unwrap();
    let jar = PiJar::uniform(agenda, maj);
    let verdict = check_jar(&jar, &limits).unwrap();
    assert!(!verdict.consistent);
    assert!(verdict.up && verdict.anonymous && verdict.systematic);
    let cx = verdict.counterexample.unwrap();
    let profile: Vec<String> = cx.profile.iter().map(ToString::to_string).collect();
    assert_eq!(profile, ["TTT", "TFF", "FTF"]);
    assert_eq!(cx.aggregate.to_string(), "TTF");
    assert!(!jar.agenda().rational_judgments().contains(&cx.aggregate));
}

#[test]
fn dictatorship_on_conjunction_closure_is_consistent() {
    let limits = Limits::default();
    let agenda = closure(&parse("P & Q").unwrap(), &limits).unwrap();
    let jar = PiJar::uniform(agenda, BoolFn::projection(4, 2).unwrap());
    let verdict = check_jar(&jar, &limits).unwrap();
    assert!(verdict.is_arrovian());
    assert!(!verdict.anonymous);
}
