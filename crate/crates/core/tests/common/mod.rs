//! Fixtures shared by the integration tests.
#![allow(dead_code)]

pub mod scripts;

use std::sync::Arc;

use logic_core::fol_syntax::{parse_pd, PdFormula};
use logic_core::prop_syntax::{parse, Formula};

pub fn f(s: &str) -> Formula {
    parse(s).unwrap_or_else(|e| panic!("fixture {s:?} does not parse: {e}"))
}

pub fn fs(list: &[&str]) -> Vec<Formula> {
    list.iter().map(|s| f(s)).collect()
}

pub fn pd(s: &str) -> PdFormula {
    parse_pd(s).unwrap_or_else(|e| panic!("fixture {s:?} does not parse: {e}"))
}

pub fn pds(list: &[&str]) -> Vec<PdFormula> {
    list.iter().map(|s| pd(s)).collect()
}

pub fn names(atoms: &[Arc<str>]) -> Vec<&str> {
    atoms.iter().map(|a| &**a).collect()
}

/// The standard list of propositional tautology schemata, component
/// variables written as atoms A, B, C.
pub const SCHEMATA: [&str; 47] = [
    "A -> (B -> A)",
    "(A -> (B -> C)) -> ((A -> B) -> (A -> C))",
    "(A -> B) -> ((A -> (B -> C)) -> (A -> C))",
    "A -> (B -> (A & B))",
    "(A & B) -> A",
    "(A & B) -> B",
    "A -> (A | B)",
    "B -> (A | B)",
    "(A -> C) -> ((B -> C) -> ((A | B) -> C))",
    "(A -> B) -> ((A -> ~B) -> ~A)",
    "(A -> B) -> ((B -> A) -> (A <-> B))",
    "~~A -> A",
    "(A <-> B) -> (A -> B)",
    "(A <-> B) -> (B -> A)",
    "A -> A",
    "(A -> (B -> C)) <-> (B -> (A -> C))",
    "(A -> B) -> ((B -> C) -> (A -> C))",
    "(A -> (B -> C)) <-> ((A & B) -> C)",
    "~A -> (A -> B)",
    "(~A -> ~B) <-> (B -> A)",
    "(~A -> ~B) -> (B -> A)",
    "A <-> A",
    "(A <-> B) <-> (B <-> A)",
    "((A <-> B) & (B <-> C)) -> (A <-> C)",
    "((A & B) & C) <-> (A & (B & C))",
    "(A & B) <-> (B & A)",
    "(A & (B | C)) <-> ((A & B) | (A & C))",
    "(A & A) <-> A",
    "(A & (A | B)) <-> A",
    "((A | B) | C) <-> (A | (B | C))",
    "(A | B) <-> (B | A)",
    "(A | (B & C)) <-> ((A | B) & (A | C))",
    "(A | A) <-> A",
    "(A | (A & B)) <-> A",
    "~~A <-> A",
    "~(A & ~A)",
    "A | ~A",
    "~(A | B) <-> (~A & ~B)",
    "~(A & B) <-> (~A | ~B)",
    "~(A -> B) <-> (A & ~B)",
    "(A | B) <-> ~(~A & ~B)",
    "(A -> B) <-> ~(A & ~B)",
    "(A & B) <-> ~(A -> ~B)",
    "(A & B) <-> ~(~A | ~B)",
    "(A -> B) <-> (~A | B)",
    "(A | B) <-> (~A -> B)",
    "(A <-> B) <-> ((A -> B) & (B -> A))",
];

/// Independent evaluator over an explicit valuation function, used as a
/// reference for the library's table machinery.
pub fn oracle_eval(x: &Formula, v: &dyn Fn(&str) -> bool) -> bool {
    match x {
        Formula::Atom(a) => v(a),
        Formula::Not(a) => !oracle_eval(a, v),
        Formula::And(a, b) => oracle_eval(a, v) && oracle_eval(b, v),
        Formula::Or(a, b) => oracle_eval(a, v) || oracle_eval(b, v),
        Formula::Implies(a, b) => !oracle_eval(a, v) || oracle_eval(b, v),
        Formula::Iff(a, b) => oracle_eval(a, v) == oracle_eval(b, v),
    }
}

/// Every valuation of `atoms` as a bitmask, first atom most significant and
/// true first.
pub fn oracle_rows(atoms: &[&str]) -> Vec<Vec<(String, bool)>> {
    let n = atoms.len();
    (0..1usize << n)
        .map(|r| atoms.iter().enumerate().map(|(j, a)| (a.to_string(), r >> (n - 1 - j) & 1 == 0)).collect())
        .collect()
}

pub fn oracle_tautology(x: &Formula) -> bool {
    let atoms = x.atoms();
    let names = names(&atoms);
    oracle_rows(&names).iter().all(|row| oracle_eval(x, &|a| row.iter().find(|(n, _)| n == a).unwrap().1))
}

pub fn oracle_equivalent(a: &Formula, b: &Formula) -> bool {
    oracle_tautology(&Formula::iff(a.clone(), b.clone()))
}
