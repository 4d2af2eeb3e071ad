mod common;

use common::{f, fs, oracle_eval, oracle_tautology, SCHEMATA};
use logic_core::prop_semantics::*;
use logic_core::prop_syntax::Connective;

fn witness_refutes(premises: &[logic_core::prop_syntax::Formula], goal: &logic_core::prop_syntax::Formula, w: &Assignment) {
    for p in premises {
        assert_eq!(eval(p, w), Ok(true), "witness {w} falsifies premise {p}");
    }
    assert_eq!(eval(goal, w), Ok(false), "witness {w} satisfies goal {goal}");
}

fn consequence_both_ways(premises: &[&str], goal: &str) -> ConsequenceStatus {
    let ps = fs(premises);
    let g = f(goal);
    let forcing = valid_consequence(&ps, &g, Strategy::Forcing);
    let table = valid_consequence(&ps, &g, Strategy::Table);
    let refutation = consequence_by_refutation(&ps, &g);
    assert_eq!(forcing.status, table.status, "strategies disagree on {premises:?} / {goal}");
    assert_eq!(forcing.status, refutation.status);
    for v in [&forcing, &table] {
        match v.status {
            ConsequenceStatus::Valid => assert!(v.witness.is_none()),
            ConsequenceStatus::Invalid => witness_refutes(&ps, &g, v.witness.as_ref().unwrap()),
        }
    }
    forcing.status
}

fn sat_status(list: &[&str]) -> SatStatus {
    let set = fs(list);
    let v = satisfiable(&set);
    assert_eq!(v.status == SatStatus::Satisfiable, satisfiable_by_table(&set).is_some());
    if let Some(w) = &v.witness {
        for x in &set {
            assert_eq!(eval(x, w), Ok(true));
        }
    }
    v.status
}

#[test]
fn canonical_rows_over_three_atoms() {
    assert_eq!(canonical_row(3, 0), vec![true, true, true]);
    assert_eq!(canonical_row(3, 3), vec![true, false, false]);
    assert_eq!(canonical_row(3, 7), vec![false, false, false]);
    let atoms = f("P & Q & R").atoms();
    assert_eq!(canonical_assignments(&atoms).unwrap().len(), 8);
}

#[test]
fn duplicate_atoms_are_rejected() {
    let atoms = f("P & Q").atoms();
    let dup = vec![atoms[0].clone(), atoms[0].clone()];
    assert!(matches!(canonical_assignments(&dup), Err(SemanticsError::DuplicateAtom(_))));
}

#[test]
fn evaluation_under_a_fixed_valuation() {
    let v = Assignment::from_pairs(&[("P", true), ("Q", false), ("R", false), ("S", true)]);
    assert_eq!(eval(&f("R -> (S | P)"), &v), Ok(true));
    assert_eq!(eval(&f("S <-> (P -> ((~P) | S))"), &v), Ok(true));
    assert_eq!(eval(&f("P & Q"), &v), Ok(false));
}

#[test]
fn evaluation_reports_uncovered_atoms() {
    let v = Assignment::from_pairs(&[("P", true)]);
    assert_eq!(eval(&f("P & Z"), &v), Err(SemanticsError::UncoveredAtom("Z".into())));
}

#[test]
fn truth_table_final_column() {
    let t = truth_table(&[f("((~P)|R) -> (P<->R)")]);
    assert_eq!(t.column(0), vec![true, true, false, true]);
    let rendered = t.render();
    let lines: Vec<&str> = rendered.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[1], "T | T | T");
    assert_eq!(lines[3], "F | T | F");
}

#[test]
fn truth_table_agrees_with_reference_evaluator() {
    let x = f("(P -> Q) <-> (~R | (P & Q))");
    let t = truth_table(std::slice::from_ref(&x));
    for r in 0..t.rows.len() {
        let row = t.row_assignment(r);
        assert_eq!(t.rows[r][0], oracle_eval(&x, &|a| row.get(a).unwrap()));
    }
}

#[test]
fn classification_of_the_three_kinds() {
    assert_eq!(classify(&f("P -> P")), Classification::Valid);
    assert_eq!(classify(&f("P & ~P")), Classification::Contradiction);
    match classify(&f("P -> Q")) {
        Classification::Contingent { satisfying, falsifying } => {
            assert_eq!(eval(&f("P -> Q"), &satisfying), Ok(true));
            assert_eq!(eval(&f("P -> Q"), &falsifying), Ok(false));
            assert_eq!(falsifying, Assignment::from_pairs(&[("P", true), ("Q", false)]));
        }
        other => panic!("expected contingent, got {other:?}"),
    }
}

#[test]
fn implication_equals_negated_disjunction() {
    assert!(equivalent(&f("P -> Q"), &f("(~P) | Q")));
    assert!(!equivalent(&f("P -> Q"), &f("Q -> P")));
}

#[test]
fn every_schema_is_a_tautology() {
    for s in SCHEMATA {
        let x = f(s);
        assert!(oracle_tautology(&x), "reference evaluator rejects {s}");
        assert!(is_valid(&x), "{s} not classified valid");
    }
}

#[test]
fn contradiction_verdicts_for_four_formulas() {
    let cases = [
        ("((~A)|(~B)) <-> (~((~A)|(~B)))", true),
        ("(~A) -> (A | B)", false),
        ("(~(A -> B)) <-> ((~A) | B)", true),
        ("((A | (~B)) & (~P)) <-> (((~A) | B) | P)", false),
    ];
    for (s, contradiction) in cases {
        assert_eq!(classify(&f(s)) == Classification::Contradiction, contradiction, "{s}");
    }
}

#[test]
fn forcing_proves_a_chained_consequence() {
    let st = consequence_both_ways(&["P1 -> (P2 -> P3)", "(P3 & P4) -> P5", "(~P6) -> (P4 & (~P5))"], "P1 -> (P2 -> P6)");
    assert_eq!(st, ConsequenceStatus::Valid);
}

#[test]
fn forcing_finds_the_expected_countermodel() {
    let ps = fs(&["P->R", "Q->S", "(~R)|(~S)"]);
    let g = f("P | (~Q)");
    let v = valid_consequence(&ps, &g, Strategy::Forcing);
    assert_eq!(v.status, ConsequenceStatus::Invalid);
    let w = v.witness.unwrap();
    assert_eq!((w.get("P"), w.get("Q"), w.get("R"), w.get("S")), (Some(false), Some(true), Some(false), Some(true)));
    assert_eq!(consequence_both_ways(&["P->R", "Q->S", "(~R)|(~S)"], "P & Q"), ConsequenceStatus::Invalid);
}

#[test]
fn forcing_trace_is_numbered() {
    let v = valid_consequence(&fs(&["P -> Q", "P"]), &f("Q"), Strategy::Forcing);
    assert_eq!(v.status, ConsequenceStatus::Valid);
    assert!(!v.trace.is_empty());
    for (i, line) in v.trace.iter().enumerate() {
        assert!(line.starts_with(&format!("step {}:", i + 1)), "{line}");
    }
}

#[test]
fn five_small_consequence_problems() {
    use ConsequenceStatus::*;
    let cases: [(&[&str], &str, ConsequenceStatus); 5] = [
        (&["P->Q", "(~P)->Q"], "Q", Valid),
        (&["P->Q", "Q->R", "P"], "R", Valid),
        (&["(P->Q)->P", "~P"], "R", Valid),
        (&["(~P)->(~Q)", "P"], "Q", Invalid),
        (&["(~P)->(~Q)", "Q"], "P", Valid),
    ];
    for (ps, g, want) in cases {
        assert_eq!(consequence_both_ways(ps, g), want, "{ps:?} / {g}");
    }
}

#[test]
fn four_multi_premise_arguments() {
    use ConsequenceStatus::*;
    let cases: [(&[&str], &str, ConsequenceStatus); 4] = [
        (&["(~A)|B", "C->(~B)"], "A->C", Invalid),
        (&["A->(B->C)", "(C&D)->E", "(~G)->(D&(~E))"], "A->(B->G)", Valid),
        (&["(A|B)->(C&D)", "(D|E)->G"], "A->G", Valid),
        (&["A->(B&C)", "(~B)|D", "(E->(~G))->(~D)", "B->(A|(~E))"], "B->E", Valid),
    ];
    for (ps, g, want) in cases {
        assert_eq!(consequence_both_ways(ps, g), want, "{ps:?} / {g}");
    }
}

#[test]
fn everyday_arguments() {
    use ConsequenceStatus::*;
    let cases: [(&[&str], &str, ConsequenceStatus); 7] = [
        (&["H|S", "~H"], "S", Valid),
        (&["I->C", "(~I)->D"], "C|D", Valid),
        (&["S->I", "I->C", "S"], "C", Valid),
        (&["P->L", "L->N", "N"], "P", Invalid),
        (&["W|C", "W->R", "N"], "W", Invalid),
        (&["C->(M->I)", "C&(~M)"], "~I", Invalid),
        (&["(L|C)->(D&S)", "D->P", "~P"], "L", Invalid),
    ];
    for (ps, g, want) in cases {
        assert_eq!(consequence_both_ways(ps, g), want, "{ps:?} / {g}");
    }
}

#[test]
fn satisfiability_goldens() {
    assert_eq!(sat_status(&["(P|Q)->(R&S)", "(S|S1)->S2", "P|(~S2)"]), SatStatus::Satisfiable);
    assert_eq!(sat_status(&["P<->Q", "Q->R", "(~R)|S", "(~P)->S", "~S"]), SatStatus::Unsatisfiable);
}

#[test]
fn four_satisfiability_problems() {
    use SatStatus::*;
    let cases: [(&[&str], SatStatus); 4] = [
        (&["A->(~(B&C))", "(D|E)->G", "G->(~(H|I))", "(~C)&E&H"], Unsatisfiable),
        (&["(A|B)->(C&D)", "(D|E)->G", "A|(~G)"], Satisfiable),
        (&["(A->B)&(C->D)", "(B->D)&((~C)->A)", "(E->G)&(G->(~D))", "(~E)->E"], Unsatisfiable),
        (&["(A->(B&C))&(D->(B&E))", "((G->(~A))&H)->I", "(H->I)->(G&D)", "~((~C)->E)"], Unsatisfiable),
    ];
    for (set, want) in cases {
        assert_eq!(sat_status(set), want, "{set:?}");
    }
}

#[test]
fn maximal_extension_is_negation_complete() {
    let universe = ordered_universe(&["P", "Q"], &[Connective::Not, Connective::Implies], 2);
    let gamma = fs(&["P->Q", "Q"]);
    let ext = maximal_extension(&gamma, &universe).unwrap();
    assert!(ext.formulas.contains(&f("Q")));
    assert!(ext.formulas.contains(&f("P->Q")));
    assert_eq!(check_extension(&gamma, &universe, &ext), Vec::<String>::new());
    for g in &gamma {
        assert_eq!(eval(g, &ext.assignment), Ok(true));
    }
}

#[test]
fn maximal_extension_rejects_unsatisfiable_input() {
    let universe = ordered_universe(&["P"], &[Connective::Not], 1);
    assert_eq!(maximal_extension(&fs(&["P", "~P"]), &universe), Err(SemanticsError::InputUnsatisfiable));
}

#[test]
fn ordered_universe_is_sorted_by_size() {
    let u = ordered_universe(&["P", "Q"], &[Connective::Not, Connective::And], 2);
    let sizes: Vec<usize> = u.iter().map(logic_core::prop_syntax::size).collect();
    assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(&u[..2], &[f("P"), f("Q")]);
}

fn conj_chain(i: usize) -> logic_core::prop_syntax::Formula {
    let mut x = f("~A");
    for _ in 1..i {
        x = logic_core::prop_syntax::Formula::and(x, f("A"));
    }
    x
}

fn disj_chain(i: usize) -> logic_core::prop_syntax::Formula {
    let mut x = f("P");
    for j in 1..i {
        x = logic_core::prop_syntax::Formula::or(x, f(&format!("P{j}")));
    }
    x
}

#[test]
fn compactness_finds_the_singleton_contradiction() {
    let r = finite_subsets_satisfiable(conj_chain, 5, DEFAULT_SUBSET_CAP).unwrap();
    assert_eq!(r.first_unsatisfiable, Some(vec![2]));
    assert!(r.exhaustive);
}

#[test]
fn compactness_growing_disjunctions_stay_satisfiable() {
    for k in 1..=8 {
        let r = finite_subsets_satisfiable(disj_chain, k, DEFAULT_SUBSET_CAP).unwrap();
        assert_eq!(r.first_unsatisfiable, None, "k = {k}");
        assert_eq!(r.subsets_checked, (1u64 << k) - 1);
    }
}

#[test]
fn compactness_falls_back_to_prefixes_above_the_cap() {
    match finite_subsets_satisfiable(disj_chain, 8, 10) {
        Err(SemanticsError::CapExceeded { partial }) => {
            assert!(!partial.exhaustive);
            assert_eq!(partial.subsets_checked, 8);
            assert_eq!(partial.first_unsatisfiable, None);
        }
        other => panic!("expected cap error, got {other:?}"),
    }
}
