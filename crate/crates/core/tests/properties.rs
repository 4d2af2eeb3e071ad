//! Randomized invariants over the whole library.
mod common;

use common::{oracle_equivalent, oracle_eval, oracle_tautology};
use logic_core::circuits::{compile_circuit, simulate};
use logic_core::fol_semantics::{models_fast, valid_over, Interpretations, Signature, Structure};
use logic_core::fol_syntax::{congruent, free_for, is_prenex, is_sentence, prenex, rectify, subst_free, universal_closure, PdFormula, Term};
use logic_core::normal_forms::{denial, fdnf, is_nnf, reduce_nf};
use logic_core::prop_semantics::{
    classify, eval, satisfiable, satisfiable_by_table, truth_table, valid_consequence, Assignment, Classification,
    ConsequenceStatus, SatStatus, Strategy as Search,
};
use logic_core::prop_syntax::*;
use logic_core::proof_kernel::{check_proof, deducibility_proof, deduction_transform, expand_lemmas, verify_soundness};
use proptest::prelude::*;

fn formula(atoms: &'static [&'static str], depth: u32) -> impl Strategy<Value = Formula> {
    let leaf = prop::sample::select(atoms).prop_map(Formula::atom);
    leaf.prop_recursive(depth, 48, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::iff(a, b)),
        ]
    })
}

fn lprime(atoms: &'static [&'static str], depth: u32) -> impl Strategy<Value = Formula> {
    let leaf = prop::sample::select(atoms).prop_map(Formula::atom);
    leaf.prop_recursive(depth, 24, 2, |inner| {
        prop_oneof![inner.clone().prop_map(Formula::not), (inner.clone(), inner).prop_map(|(a, b)| Formula::implies(a, b))]
    })
}

const FOUR: &[&str] = &["P", "Q", "R", "S"];
const SIX: &[&str] = &["P", "Q", "R", "S", "T", "U"];

fn term() -> impl Strategy<Value = Term> {
    prop::sample::select(&["x", "y", "c"][..]).prop_map(Term::named)
}

/// Formulas over P/1, R/2, the variables x, y and the constant c.
fn pd_formula() -> impl Strategy<Value = PdFormula> {
    let leaf = prop_oneof![
        term().prop_map(|t| PdFormula::pred("P", vec![t])),
        (term(), term()).prop_map(|(s, t)| PdFormula::pred("R", vec![s, t])),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        let var = prop::sample::select(&["x", "y"][..]);
        prop_oneof![
            inner.clone().prop_map(PdFormula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| PdFormula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| PdFormula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| PdFormula::implies(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| PdFormula::iff(a, b)),
            (var.clone(), inner.clone()).prop_map(|(x, a)| PdFormula::forall(x, a)),
            (var, inner).prop_map(|(x, a)| PdFormula::exists(x, a)),
        ]
    })
}

/// Every structure with one or two elements for P/1, R/2 and c.
fn small_structures() -> Vec<Structure> {
    let sig = Signature::of(&[common::pd("P(c) & R(x,y)")]);
    (1..=2).flat_map(|n| Interpretations::new(&sig, n)).collect()
}

fn row_strategy(atoms: &'static [&'static str]) -> impl Strategy<Value = Assignment> {
    prop::collection::vec(any::<bool>(), atoms.len())
        .prop_map(move |v| Assignment::new(atoms.iter().map(|a| (*a).into()).collect(), v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn printers_round_trip(f in formula(FOUR, 5)) {
        prop_assert_eq!(parse(&print_atomic(&f)).unwrap(), f.clone());
        prop_assert_eq!(parse(&print_full(&f)).unwrap(), f.clone());
        prop_assert_eq!(parse(&print_flat(&f)).unwrap(), f.clone());
        prop_assert_eq!(parse(&print_unicode(&f)).unwrap(), f);
    }

    #[test]
    fn one_common_pair_per_connective(f in formula(FOUR, 5)) {
        let text = print_full(&f);
        prop_assert_eq!(common_pairs(&text).unwrap().len(), f.connective_count());
    }

    #[test]
    fn size_bounded_by_connectives(f in formula(FOUR, 5)) {
        prop_assert!(size(&f) <= f.connective_count());
        prop_assert_eq!(size(&f) == 0, f.is_atom());
    }

    #[test]
    fn lprime_translation_is_equivalent(f in formula(FOUR, 4)) {
        let g = to_lprime(&f);
        prop_assert!(g.is_lprime());
        prop_assert!(oracle_equivalent(&f, &g));
    }

    #[test]
    fn reduction_is_an_equivalent_normal_form(f in formula(FOUR, 4)) {
        let r = reduce_nf(&f);
        prop_assert!(is_nnf(&r));
        prop_assert!(oracle_equivalent(&f, &r));
        prop_assert!(oracle_equivalent(&denial(&r).unwrap(), &Formula::not(f)));
    }

    #[test]
    fn fdnf_is_equivalent(f in formula(FOUR, 4)) {
        match fdnf(&f) {
            Ok(d) => {
                prop_assert!(oracle_equivalent(&f, &d.to_formula()));
                let again = fdnf(&d.to_formula()).unwrap();
                prop_assert_eq!(again.conjunctions, d.conjunctions);
            }
            Err(_) => prop_assert!(oracle_tautology(&Formula::not(f))),
        }
    }

    #[test]
    fn table_agrees_with_reference(f in formula(FOUR, 4)) {
        let t = truth_table(std::slice::from_ref(&f));
        for r in 0..t.rows.len() {
            let row = t.row_assignment(r);
            prop_assert_eq!(t.rows[r][0], oracle_eval(&f, &|a| row.get(a).unwrap()));
            prop_assert_eq!(eval(&f, &row).unwrap(), t.rows[r][0]);
        }
    }

    #[test]
    fn classification_witnesses_re_verify(f in formula(FOUR, 4)) {
        match classify(&f) {
            Classification::Valid => prop_assert!(oracle_tautology(&f)),
            Classification::Contradiction => prop_assert!(oracle_tautology(&Formula::not(f))),
            Classification::Contingent { satisfying, falsifying } => {
                prop_assert_eq!(eval(&f, &satisfying), Ok(true));
                prop_assert_eq!(eval(&f, &falsifying), Ok(false));
            }
        }
    }

    #[test]
    fn consequence_strategies_agree(ps in prop::collection::vec(formula(SIX, 3), 0..4), g in formula(SIX, 3)) {
        let forcing = valid_consequence(&ps, &g, Search::Forcing);
        let table = valid_consequence(&ps, &g, Search::Table);
        prop_assert_eq!(forcing.status, table.status);
        let mut conj = g.clone();
        for p in ps.iter().rev() {
            conj = Formula::implies(p.clone(), conj);
        }
        prop_assert_eq!(forcing.status == ConsequenceStatus::Valid, oracle_tautology(&conj));
        for w in [&forcing.witness, &table.witness].into_iter().flatten() {
            for p in &ps {
                prop_assert_eq!(eval(p, w), Ok(true));
            }
            prop_assert_eq!(eval(&g, w), Ok(false));
        }
    }

    #[test]
    fn satisfiability_witnesses_re_verify(fs in prop::collection::vec(formula(SIX, 3), 1..5)) {
        let v = satisfiable(&fs);
        prop_assert_eq!(v.status == SatStatus::Satisfiable, satisfiable_by_table(&fs).is_some());
        if let Some(w) = &v.witness {
            for f in &fs {
                prop_assert_eq!(eval(f, w), Ok(true));
            }
        }
    }

    #[test]
    fn row_proofs_expand_and_discharge(f in lprime(&["P", "Q", "R"], 4), row in row_strategy(&["P", "Q", "R"])) {
        let p = deducibility_proof(&f, &row).unwrap();
        let a = check_proof(&p).unwrap();
        let want = if eval(&f, &row).unwrap() { f.clone() } else { Formula::not(f.clone()) };
        prop_assert_eq!(&a.conclusion, &want);
        let e = expand_lemmas(&p).unwrap();
        prop_assert!(e.is_primitive());
        prop_assert_eq!(&check_proof(&e).unwrap().conclusion, &want);
        verify_soundness(&e).unwrap();
        let last = p.premises.last().unwrap().clone();
        let d = deduction_transform(&p, &last).unwrap();
        prop_assert_eq!(check_proof(&d).unwrap().conclusion, Formula::implies(last, want));
    }

    #[test]
    fn circuit_simulation_matches_evaluation(f in formula(SIX, 4), bits in prop::collection::vec(any::<bool>(), 6)) {
        let g = reduce_nf(&f);
        let n = compile_circuit(&g).unwrap();
        let values = SIX.iter().map(|a| a.to_string()).zip(bits.iter().copied()).collect();
        let look = |a: &str| bits[SIX.iter().position(|x| *x == a).unwrap()];
        prop_assert_eq!(simulate(&n, &values).unwrap(), vec![oracle_eval(&f, &look)]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn prenex_agrees_on_small_structures(f in pd_formula()) {
        let p = prenex(&f);
        prop_assert!(is_prenex(&p));
        let r = rectify(&f);
        prop_assert!(congruent(&f, &r));
        for m in small_structures() {
            let want = models_fast(&m, &f).unwrap();
            prop_assert_eq!(models_fast(&m, &p).unwrap(), want, "prenex {} in {}", p, m);
            prop_assert_eq!(models_fast(&m, &r).unwrap(), want);
        }
    }

    #[test]
    fn closure_is_a_sentence(f in pd_formula()) {
        let c = universal_closure(&f);
        prop_assert!(is_sentence(&c));
        for m in small_structures() {
            prop_assert_eq!(models_fast(&m, &c).unwrap(), models_fast(&m, &f).unwrap());
        }
    }

    #[test]
    fn substituting_a_free_for_variable_renames_semantically(f in pd_formula()) {
        // With y free for x, ∀x f and ∀x∀y (f[x:=y]) agree once y is absent from f.
        prop_assume!(!f.all_variables().contains("y"));
        prop_assert!(free_for(&f, "x", "y"));
        let g = subst_free(&f, "x", &Term::named("y"));
        prop_assert!(!g.is_free("x"));
        for m in small_structures() {
            prop_assert_eq!(models_fast(&m, &g).unwrap(), models_fast(&m, &f).unwrap());
        }
    }

    #[test]
    fn countermodels_re_verify(f in pd_formula()) {
        let r = valid_over(&f, 2, 1 << 20);
        if let Some(m) = r.found {
            prop_assert!(!models_fast(&m, &universal_closure(&f)).unwrap());
        } else {
            for m in small_structures() {
                prop_assert!(models_fast(&m, &f).unwrap());
            }
        }
    }
}
