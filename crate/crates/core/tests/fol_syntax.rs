mod common;

use common::pd;
use logic_core::fol_syntax::*;

fn free(f: &PdFormula) -> Vec<String> {
    f.free_vars().iter().map(|v| v.to_string()).collect()
}

#[test]
fn arity_must_be_consistent() {
    assert_eq!(
        parse_pd("P(x) & P(x,y)"),
        Err(FolSyntaxError::ArityMismatch { predicate: "P".into(), first: 1, second: 2 })
    );
    assert!(parse_pd_lenient("P(x) & P(x,y)").is_ok());
    let fs = [pd("P(x)"), parse_pd_lenient("P(x,y)").unwrap()];
    assert!(matches!(check_arities(&fs), Err(FolSyntaxError::ArityMismatch { .. })));
}

#[test]
fn membership_in_the_predicate_language() {
    assert!(parse_pd("exists x (~(forall x P(x,y)))").is_ok());
    assert_eq!(parse_pd("forall x (P(x) -> (exists c P(c,x)))"), Err(FolSyntaxError::QuantifierOverConstant("c".into())));
    assert!(parse_pd("P(c) | exists x forall y) Q(x,y)").is_err());
    assert!(parse_pd("exists x (forall y (P(x) -> Q(x,y))").is_err());
    assert!(parse_pd("forall x (exists y (forall z (P(x))))").is_ok());
}

#[test]
fn printing_round_trips() {
    for s in ["exists x (~(forall x P(x,y)))", "(forall x P(x)) -> Q(x)", "forall y (P(c,y) <-> (Q(y) | R(y,c)))"] {
        let x = pd(s);
        assert_eq!(pd(&print_pd(&x)), x, "{s}");
    }
    assert_eq!(print_pd(&pd("forall x P(x) -> Q(x)")), "(forall x P(x)) -> Q(x)");
}

#[test]
fn unicode_quantifier_spelling() {
    assert_eq!(pd("∀x (P(x) → ∃y Q(x,y))"), pd("forall x (P(x) -> exists y Q(x,y))"));
}

#[test]
fn free_variables_of_a_mixed_formula() {
    let x = parse_pd_lenient("forall x ((P(x) & (exists z Q(x,z))) -> (exists y M(x,y))) & Q(x)").unwrap();
    assert_eq!(free(&x), ["x"]);
    let r = occurrences(&x);
    let last = r.occurrences.last().unwrap();
    assert_eq!((&*last.symbol, last.tag), ("x", OccurrenceTag::Free));
    assert!(r.occurrences[..r.occurrences.len() - 1].iter().all(|o| o.tag != OccurrenceTag::Free));
}

#[test]
fn occurrence_report_rendering() {
    let r = occurrences(&pd("forall x (P(x,y) -> exists y Q(y,c))"));
    assert_eq!(
        r.render(),
        "x@0: bound by quantifier 1\nx@1: bound by quantifier 1\ny@2: free\ny@3: bound by quantifier 2\n\
         y@4: bound by quantifier 2\nc@5: constant\nfree: {y}\n"
    );
    assert_eq!(r.quantifiers.len(), 2);
    assert_eq!(r.bound().iter().map(|v| v.to_string()).collect::<Vec<_>>(), ["x", "y"]);
    assert_eq!(r.quantifiers[0].scope, Some((1, 5)));
}

#[test]
fn quantifier_scopes_nest() {
    let r = occurrences(&pd("(forall x (exists x Q(x,z))) -> (exists x Q(y,z))"));
    assert_eq!(r.quantifiers.len(), 3);
    let s: Vec<_> = r.quantifiers.iter().map(|q| q.scope).collect();
    assert_eq!(s[0], Some((1, 3)));
    assert_eq!(s[1], Some((2, 3)));
    assert_eq!(s[2], Some((5, 6)));
    assert_eq!(free(&pd("(forall x (exists x Q(x,z))) -> (exists x Q(y,z))")), ["y", "z"]);
}

#[test]
fn sentences_have_no_free_variables() {
    assert!(is_sentence(&pd("forall x (exists y (P(x) & Q(y) -> P(c) & Q(c)))")));
    assert!(!is_sentence(&pd("(P(c) & Q(x)) -> (exists x Q(x))")));
    assert!(is_sentence(&pd("P(c)")));
}

#[test]
fn substituting_for_a_free_variable() {
    let x = pd("forall y (P(x,y) -> Q(y,x))");
    assert_eq!(subst_free(&x, "x", &Term::named("c")), pd("forall y (P(c,y) -> Q(y,c))"));
    assert_eq!(subst_free(&x, "x", &Term::named("y")), pd("forall y (P(y,y) -> Q(y,y))"));
    assert!(!free_for(&x, "x", "y"));
    assert!(free_for(&x, "x", "z"));
}

#[test]
fn substitution_leaves_bound_occurrences_alone() {
    let x = pd("(exists x P(x)) -> R(x,y)");
    assert_eq!(subst_free(&x, "x", &Term::named("a")), pd("(exists x P(x)) -> R(a,y)"));
    let y = pd("(exists y R(x,y)) <-> (forall x R(x,y))");
    assert_eq!(subst_free(&y, "y", &Term::named("x")), pd("(exists y R(x,y)) <-> (forall x R(x,x))"));
    assert!(!free_for(&y, "y", "x"));
}

#[test]
fn free_for_side_condition() {
    let x = pd("exists y P(y,x)");
    assert!(!free_for(&x, "x", "y"));
    assert!(free_for(&x, "x", "z"));
    assert!(free_for(&x, "x", "x"));
    assert!(free_for(&pd("exists y P(y)"), "x", "y"));
}

#[test]
fn universal_closure_binds_every_free_variable() {
    assert_eq!(universal_closure(&pd("P(x) -> (exists x P(x))")), pd("forall x (P(x) -> (exists x P(x)))"));
    assert_eq!(universal_closure(&pd("Q(y,u) & R(x)")), pd("forall u (forall x (forall y (Q(y,u) & R(x))))"));
    let s = pd("forall x P(x)");
    assert_eq!(universal_closure(&s), s);
}

#[test]
fn congruence_pairs_among_ten_formulas() {
    let list = [
        "forall z ((exists y (P(z,y) & (forall z Q(z,x)))) -> M(z))",
        "forall x ((exists y (P(x,y) & (forall y Q(y,x)))) -> M(x))",
        "forall z ((exists x (P(z,x) & (forall z Q(z,y)))) -> M(z))",
        "forall y ((exists z (P(y,z) & (forall z Q(z,x)))) -> M(y))",
        "forall y ((exists z (P(z,y) & (forall z Q(z,x)))) -> M(y))",
        "exists x (forall z (P(x,z) | (forall u N(u,y,x))))",
        "exists y (forall x (P(z,x) | (forall x N(x,u,y))))",
        "exists y (forall x (P(y,x) | (forall x N(x,y,z))))",
        "exists z (forall x (P(z,x) | (forall x N(x,y,z))))",
        "exists x (forall x (P(z,x) | (forall z N(x,y,z))))",
    ];
    let fs: Vec<PdFormula> = list.iter().map(|s| parse_pd_lenient(s).unwrap()).collect();
    let mut pairs = Vec::new();
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            if congruent(&fs[i], &fs[j]) {
                pairs.push((i, j));
            }
        }
    }
    assert_eq!(pairs, vec![(0, 3), (5, 8)]);
}

#[test]
fn rectified_formulas_are_congruent_with_distinct_binders() {
    let x = pd("(forall x P(x)) & (exists x (Q(x) -> forall y R(x,y))) & S(y)");
    let r = rectify(&x);
    assert!(congruent(&x, &r));
    let binders: Vec<String> = occurrences(&r).quantifiers.iter().map(|q| q.var.to_string()).collect();
    let mut dedup = binders.clone();
    dedup.sort();
    dedup.dedup();
    assert_eq!(dedup.len(), binders.len());
    assert!(!binders.contains(&"y".to_string()), "free y must not be reused: {binders:?}");
    assert_eq!(free(&r), ["y"]);
}

#[test]
fn prenex_of_an_implication_between_universals() {
    let p = prenex(&pd("forall x P(x) -> forall x Q(x)"));
    assert_eq!(print_pd(&p), "forall y (exists x (Q(y) | (~P(x))))");
    assert!(is_prenex(&p));
    assert!(!is_prenex(&pd("forall x P(x) -> Q(c)")));
    assert!(is_prenex(&pd("P(c) -> Q(c)")));
}

#[test]
fn prenex_flips_quantifiers_under_negation() {
    let p = prenex(&pd("~(exists x P(x))"));
    assert_eq!(p, pd("forall x (~P(x))"));
}

#[test]
fn existential_free_fragment() {
    assert!(pd("forall x (P(x) -> Q(x))").is_pd_prime());
    assert!(!pd("forall x (exists y R(x,y))").is_pd_prime());
}
