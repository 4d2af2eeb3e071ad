mod common;

use std::collections::HashMap;

use common::{f, oracle_eval};
use logic_core::circuits::*;
use logic_core::normal_forms::{fdnf, reduce_nf};
use logic_core::prop_syntax::{enumerate_level, Connective};

const EQUALITY_C: &str = "(A & B) | ((~A) & (~B))";
const EQUALITY_D: &str = "(A & B) | (~(A | B))";

fn bits(n: &Netlist, a: bool, b: bool) -> Vec<bool> {
    simulate_bits(n, &[a, b]).unwrap()
}

#[test]
fn compiling_the_equality_circuit() {
    let n = compile_circuit(&f(EQUALITY_C)).unwrap();
    assert_eq!((n.count(GateKind::Not), n.count(GateKind::And), n.count(GateKind::Or)), (2, 2, 1));
    assert_eq!(n.inputs, ["A", "B"]);
    assert_eq!(n.outputs, [("out".to_string(), "g5".to_string())]);
    assert_eq!(
        n.to_string(),
        "in A\nin B\ngate g1 = AND A, B\ngate g2 = NOT A\ngate g3 = NOT B\ngate g4 = AND g2, g3\ngate g5 = OR g1, g4\nout out = g5\n"
    );
}

#[test]
fn a_single_atom_needs_no_gates() {
    let n = compile_circuit(&f("A")).unwrap();
    assert!(n.gates.is_empty());
    assert_eq!(simulate_bits(&n, &[true]).unwrap(), [true]);
}

#[test]
fn implications_must_be_reduced_first() {
    assert_eq!(compile_circuit(&f("A -> B")), Err(CircuitError::UnsupportedConnective("->".into())));
    assert!(compile_circuit(&reduce_nf(&f("A -> B"))).is_ok());
}

#[test]
fn half_adder_sum_and_carry() {
    let h = half_adder();
    assert_eq!(bits(&h, false, false), [false, false]);
    assert_eq!(bits(&h, false, true), [true, false]);
    assert_eq!(bits(&h, true, false), [true, false]);
    assert_eq!(bits(&h, true, true), [false, true]);
    for (a, b) in [(false, false), (false, true), (true, false), (true, true)] {
        let v = bits(&h, a, b);
        assert_eq!(v[0], a ^ b);
        assert_eq!(v[1], a && b);
    }
}

#[test]
fn equality_circuits_are_equivalent() {
    let c = compile_circuit(&f(EQUALITY_C)).unwrap();
    let d = compile_circuit(&f(EQUALITY_D)).unwrap();
    assert!(equivalent_netlists(&c, &d).unwrap());
    let xor = compile_circuit(&f("(A | B) & ~(A & B)")).unwrap();
    assert!(!equivalent_netlists(&c, &xor).unwrap());
}

#[test]
fn equivalence_matches_inputs_by_name() {
    let ab = compile_circuit(&f("A & ~B")).unwrap();
    let ba = compile_circuit(&f("~B & A")).unwrap();
    assert_eq!(ba.inputs, ["B", "A"]);
    assert!(equivalent_netlists(&ab, &ba).unwrap());
    let other = compile_circuit(&f("A & ~C")).unwrap();
    assert!(matches!(equivalent_netlists(&ab, &other), Err(CircuitError::PortMismatch(_))));
    assert!(matches!(equivalent_netlists(&ab, &half_adder()), Err(CircuitError::PortMismatch(_))));
}

#[test]
fn equivalence_has_an_input_cap() {
    let wide: Vec<String> = (0..21).map(|i| format!("X{i}")).collect();
    let n = compile_circuit(&f(&wide.join(" & "))).unwrap();
    assert_eq!(equivalent_netlists(&n, &n), Err(CircuitError::CapExceeded { inputs: 21, cap: MAX_EQUIVALENCE_INPUTS }));
}

#[test]
fn simulation_reports_missing_inputs() {
    let h = half_adder();
    let mut v = HashMap::new();
    v.insert("A".to_string(), true);
    assert_eq!(simulate(&h, &v), Err(CircuitError::MissingInput("B".into())));
}

#[test]
fn netlist_text_round_trip() {
    for n in [half_adder(), compile_circuit(&f(EQUALITY_D)).unwrap()] {
        assert_eq!(parse_netlist(&n.to_string()).unwrap(), n);
    }
    let with_comments = "# adder\nin A\nin B\n\ngate g1 = AND A, B\nout C = g1\n";
    assert_eq!(parse_netlist(with_comments).unwrap().gates.len(), 1);
}

#[test]
fn netlist_parse_errors() {
    let bad = [
        ("in A\ngate g1 = AND A, B\n", 2),
        ("in A\nin A\n", 2),
        ("in A\ngate g1 = NOT A, A\n", 2),
        ("in A\ngate g1 = XOR A, A\n", 2),
        ("in A\nout X = g9\n", 2),
        ("in A\nout X = A\nout X = A\n", 3),
        ("wire A\n", 1),
    ];
    for (text, line) in bad {
        match parse_netlist(text) {
            Err(CircuitError::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?} gave {other:?}"),
        }
    }
}

#[test]
fn compiled_circuits_agree_with_their_fdnf() {
    let conns = [Connective::Not, Connective::And, Connective::Or];
    for x in enumerate_level(&["A", "B"], &conns, 2, u128::MAX).unwrap() {
        let Ok(d) = fdnf(&x) else { continue };
        let c1 = compile_circuit(&x).unwrap();
        let c2 = compile_circuit(&d.to_formula()).unwrap();
        assert!(equivalent_netlists(&c1, &c2).unwrap(), "{x}");
        for r in 0..1usize << c1.inputs.len() {
            let row: Vec<bool> = (0..c1.inputs.len()).map(|j| r >> j & 1 == 1).collect();
            let want = oracle_eval(&x, &|a| row[c1.inputs.iter().position(|i| i == a).unwrap()]);
            assert_eq!(simulate_bits(&c1, &row).unwrap(), [want]);
        }
    }
}
