mod common;

use std::collections::HashSet;

use common::{f, fs};
use logic_core::consequence_ops::*;
use logic_core::prop_syntax::{Connective, Formula};

const CONNS: [Connective; 3] = [Connective::And, Connective::Implies, Connective::Not];

fn small_universe() -> FormulaUniverse {
    FormulaUniverse::generate(&["P", "Q"], &CONNS, 1)
}

/// Reference closure on formula lists: add universe members matching the
/// conjunction axioms, then apply MP until nothing changes.
fn oracle_closure(gamma: &[Formula], u: &[Formula], max_major: Option<usize>) -> HashSet<Formula> {
    let is_axiom = |x: &Formula| {
        let Formula::Implies(l, r) = x else { return false };
        match (&**l, &**r) {
            (Formula::And(a, b), r) if **a == *r || **b == *r => true,
            (Formula::And(a, bc), Formula::And(ab, c)) => {
                matches!((&**bc, &**ab), (Formula::And(b, c1), Formula::And(a1, b1)) if a == a1 && b == b1 && c == c1)
                    || matches!((&**a, &**bc), (Formula::And(a0, b0), Formula::And(b1, c1)) if a0 == ab && b0 == b1 && c1 == c)
            }
            _ => false,
        }
    };
    let mut set: HashSet<Formula> = gamma.iter().cloned().collect();
    set.extend(u.iter().filter(|x| is_axiom(x)).cloned());
    loop {
        let mut added = Vec::new();
        for x in &set {
            if let Formula::Implies(a, b) = x {
                let ok_size = max_major.is_none_or(|n| logic_core::prop_syntax::size(x) <= n);
                if ok_size && set.contains(&**a) && !set.contains(&**b) && u.contains(b) {
                    added.push((**b).clone());
                }
            }
        }
        if added.is_empty() {
            return set;
        }
        set.extend(added);
    }
}

#[test]
fn universe_is_closed_under_subformulas() {
    let u = FormulaUniverse::from_formulas(fs(&["(P & Q) -> R"]));
    for s in ["P", "Q", "R", "P & Q", "(P & Q) -> R"] {
        assert!(u.index_of(&f(s)).is_some(), "{s}");
    }
    assert_eq!(u.len(), 5);
}

#[test]
fn closure_of_a_conjunction_contains_both_conjuncts() {
    let u = FormulaUniverse::generate(&["P", "Q"], &CONNS, 2);
    let c = closure_s(&fs(&["P & Q"]), &u).unwrap();
    assert!(c.contains(&f("P")));
    assert!(c.contains(&f("Q")));
    assert!(!c.contains(&f("~P")));
}

#[test]
fn closure_rejects_formulas_outside_the_universe() {
    let u = small_universe();
    assert!(matches!(closure_s(&fs(&["P | Q"]), &u), Err(ConsequenceError::NotInUniverse(_))));
}

#[test]
fn conjunction_axioms_are_recognized() {
    assert_eq!(conjunction_axiom(&f("(A & (B & C)) -> ((A & B) & C)")), Some(1));
    assert_eq!(conjunction_axiom(&f("((A & B) & C) -> (A & (B & C))")), Some(2));
    assert_eq!(conjunction_axiom(&f("(A & B) -> A")), Some(3));
    assert_eq!(conjunction_axiom(&f("(A & B) -> B")), Some(4));
    assert_eq!(conjunction_axiom(&f("(A & B) -> C")), None);
    assert_eq!(conjunction_axiom(&f("A -> A")), None);
}

#[test]
fn closure_matches_reference_on_small_sets() {
    let u = FormulaUniverse::generate(&["P", "Q"], &CONNS, 2);
    let op = Closure::s(&u);
    for x in u.subsets_up_to(1) {
        let gamma = u.members(&x);
        let got: HashSet<Formula> = u.members(&op.apply(&x)).into_iter().collect();
        assert_eq!(got, oracle_closure(&gamma, u.formulas(), None), "gamma = {}", u.describe(&x));
        let got1: HashSet<Formula> = u.members(&Closure::s_n(&u, 1).apply(&x)).into_iter().collect();
        assert_eq!(got1, oracle_closure(&gamma, u.formulas(), Some(1)));
    }
}

#[test]
fn closure_is_a_consequence_operator_on_a_small_universe() {
    let u = small_universe();
    let s = Closure::s(&u);
    let report = check_operator_axioms(&s, &u.subsets_up_to(2), &u.subsets_up_to(1));
    assert!(report.passed(), "{report}");
    for n in 0..=s.max_implication_size() {
        let sn = Closure::s_n(&u, n);
        assert!(check_operator_axioms(&sn, &u.subsets_up_to(2), &u.subsets_up_to(1)).passed());
    }
}

#[test]
fn identity_passes_and_empty_map_fails_extensivity() {
    let u = small_universe();
    let samples = u.subsets_up_to(2);
    let id = check_operator_axioms(&Identity(&u), &samples, &u.subsets_up_to(1));
    assert!(id.passed(), "{id}");
    let empty = check_operator_axioms(&EmptyMap(&u), &samples, &u.subsets_up_to(1));
    assert!(!empty.check("extensivity").unwrap().passed());
    assert!(empty.check("idempotence").unwrap().passed());
    let rendered = empty.to_string();
    assert!(rendered.contains("extensivity: fail"), "{rendered}");
}

#[test]
fn idempotent_theorems_for_identity_and_closure() {
    let u = small_universe();
    let samples = u.subsets_up_to(2);
    let id = idempotent_theorems(&Identity(&u), &samples);
    assert!(id.passed());
    assert!(id.identity_on_samples);
    assert!(id.non_injective_witness.is_none());
    let s = Closure::s(&u);
    let r = idempotent_theorems(&s, &samples);
    assert!(r.passed(), "{r:?}");
    let (x1, x2) = r.non_injective_witness.expect("closure merges distinct inputs");
    assert_ne!(x1, x2);
    assert_eq!(s.apply(&x1), s.apply(&x2));
}

#[test]
fn levels_are_monotone_and_reach_the_full_closure() {
    let u = FormulaUniverse::generate(&["P", "Q"], &CONNS, 2);
    let s = Closure::s(&u);
    let top = s.max_implication_size();
    for x in u.subsets_up_to(1) {
        let mut prev = s.with_level(Some(0)).apply(&x);
        for n in 1..=top {
            let cur = s.with_level(Some(n)).apply(&x);
            assert!(prev.is_subset(&cur));
            prev = cur;
        }
        assert_eq!(prev, s.apply(&x));
    }
}

#[test]
fn closing_a_closure_adds_nothing() {
    let u = FormulaUniverse::generate(&["P", "Q"], &CONNS, 2);
    let s = Closure::s(&u);
    for x in u.subsets_up_to(1) {
        let cx = s.apply(&x);
        let mut both = x.clone();
        both.union_with(&cx);
        assert_eq!(s.apply(&both), cx);
    }
}
