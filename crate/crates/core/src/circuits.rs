//! Gate netlists built from inverters and two-input and/or gates.
//!
//! Text format, one item per line:
//!
//! ```text
//! in A
//! gate g1 = AND A, B
//! out C = g1
//! ```
//!
//! A gate may only refer to inputs and to gates defined above it, which
//! keeps every netlist acyclic by construction.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::prop_syntax::Formula;

/// Exhaustive equivalence checking gives up above this many inputs.
pub const MAX_EQUIVALENCE_INPUTS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateKind {
    Not,
    And,
    Or,
}

impl GateKind {
    pub fn name(self) -> &'static str {
        match self {
            GateKind::Not => "NOT",
            GateKind::And => "AND",
            GateKind::Or => "OR",
        }
    }

    pub fn fan_in(self) -> usize {
        match self {
            GateKind::Not => 1,
            GateKind::And | GateKind::Or => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gate {
    pub id: String,
    pub kind: GateKind,
    pub inputs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Netlist {
    pub inputs: Vec<String>,
    pub gates: Vec<Gate>,
    /// (output name, referenced input or gate)
    pub outputs: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("connective {0} has no gate; reduce to ~, & and | first")]
    UnsupportedConnective(String),
    #[error("no value given for input {0}")]
    MissingInput(String),
    #[error("netlists have different ports: {0}")]
    PortMismatch(String),
    #[error("{inputs} inputs exceeds the exhaustive-check cap {cap}")]
    CapExceeded { inputs: usize, cap: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

struct Compiler {
    net: Netlist,
}

impl Compiler {
    fn gate(&mut self, kind: GateKind, inputs: Vec<String>) -> String {
        let id = format!("g{}", self.net.gates.len() + 1);
        self.net.gates.push(Gate { id: id.clone(), kind, inputs });
        id
    }

    /// Post-order: children are wired before their gate.
    fn wire(&mut self, f: &Formula) -> Result<String, CircuitError> {
        Ok(match f {
            Formula::Atom(a) => a.to_string(),
            Formula::Not(a) => {
                let x = self.wire(a)?;
                self.gate(GateKind::Not, vec![x])
            }
            Formula::And(a, b) | Formula::Or(a, b) => {
                let x = self.wire(a)?;
                let y = self.wire(b)?;
                let kind = if matches!(f, Formula::And(..)) { GateKind::And } else { GateKind::Or };
                self.gate(kind, vec![x, y])
            }
            Formula::Implies(..) | Formula::Iff(..) => {
                return Err(CircuitError::UnsupportedConnective(f.connective().unwrap().ascii().to_string()))
            }
        })
    }
}

/// One gate per connective occurrence, no sharing; gates are numbered
/// g1, g2, … in post-order and the single output is named `out`.
pub fn compile_circuit(f: &Formula) -> Result<Netlist, CircuitError> {
    let inputs = f.atoms().iter().map(|a| a.to_string()).collect();
    let mut c = Compiler { net: Netlist { inputs, ..Netlist::default() } };
    let root = c.wire(f)?;
    c.net.outputs.push(("out".into(), root));
    Ok(c.net)
}

/// S = (A ∨ B) ∧ ¬(A ∧ B), C = A ∧ B, with the A ∧ B gate shared.
pub fn half_adder() -> Netlist {
    let g = |id: &str, kind, ins: &[&str]| Gate { id: id.into(), kind, inputs: ins.iter().map(|s| s.to_string()).collect() };
    Netlist {
        inputs: vec!["A".into(), "B".into()],
        gates: vec![
            g("g1", GateKind::Or, &["A", "B"]),
            g("g2", GateKind::And, &["A", "B"]),
            g("g3", GateKind::Not, &["g2"]),
            g("g4", GateKind::And, &["g1", "g3"]),
        ],
        outputs: vec![("S".into(), "g4".into()), ("C".into(), "g2".into())],
    }
}

/// Evaluates the gates in order; returns output values in output order.
pub fn simulate(n: &Netlist, values: &HashMap<String, bool>) -> Result<Vec<bool>, CircuitError> {
    let mut wire: HashMap<&str, bool> = HashMap::new();
    for i in &n.inputs {
        wire.insert(i, *values.get(i).ok_or_else(|| CircuitError::MissingInput(i.clone()))?);
    }
    for g in &n.gates {
        let ins: Vec<bool> = g.inputs.iter().map(|r| wire[r.as_str()]).collect();
        let v = match g.kind {
            GateKind::Not => !ins[0],
            GateKind::And => ins[0] && ins[1],
            GateKind::Or => ins[0] || ins[1],
        };
        wire.insert(&g.id, v);
    }
    Ok(n.outputs.iter().map(|(_, r)| wire[r.as_str()]).collect())
}

/// Inputs given positionally, in the netlist's input order.
pub fn simulate_bits(n: &Netlist, bits: &[bool]) -> Result<Vec<bool>, CircuitError> {
    if bits.len() < n.inputs.len() {
        return Err(CircuitError::MissingInput(n.inputs[bits.len()].clone()));
    }
    let values = n.inputs.iter().cloned().zip(bits.iter().copied()).collect();
    simulate(n, &values)
}

/// Same outputs, compared by position, for every input combination. Inputs
/// are matched by name, so their order may differ.
pub fn equivalent_netlists(a: &Netlist, b: &Netlist) -> Result<bool, CircuitError> {
    let mut ia = a.inputs.clone();
    let mut ib = b.inputs.clone();
    ia.sort();
    ib.sort();
    if ia != ib {
        return Err(CircuitError::PortMismatch(format!("inputs {:?} vs {:?}", a.inputs, b.inputs)));
    }
    if a.outputs.len() != b.outputs.len() {
        return Err(CircuitError::PortMismatch(format!("{} outputs vs {}", a.outputs.len(), b.outputs.len())));
    }
    let k = ia.len();
    if k > MAX_EQUIVALENCE_INPUTS {
        return Err(CircuitError::CapExceeded { inputs: k, cap: MAX_EQUIVALENCE_INPUTS });
    }
    for bits in 0u64..1 << k {
        let values: HashMap<String, bool> = ia.iter().enumerate().map(|(j, name)| (name.clone(), bits >> j & 1 == 1)).collect();
        if simulate(a, &values)? != simulate(b, &values)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn parse_netlist(text: &str) -> Result<Netlist, CircuitError> {
    let mut n = Netlist::default();
    let mut known: HashMap<String, ()> = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |m: String| CircuitError::Parse { line, message: m };
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let (head, rest) = l.split_once(char::is_whitespace).ok_or_else(|| err(format!("cannot read '{l}'")))?;
        let rest = rest.trim();
        let resolve = |r: &str, known: &HashMap<String, ()>| {
            if known.contains_key(r) {
                Ok(r.to_string())
            } else {
                Err(err(format!("unresolved reference '{r}'")))
            }
        };
        let fresh = |id: &str, known: &HashMap<String, ()>| {
            if id.is_empty() || !id.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                Err(err(format!("bad name '{id}'")))
            } else if known.contains_key(id) {
                Err(err(format!("'{id}' defined twice")))
            } else {
                Ok(id.to_string())
            }
        };
        match head {
            "in" => {
                let id = fresh(rest, &known)?;
                known.insert(id.clone(), ());
                n.inputs.push(id);
            }
            "gate" => {
                let (id, body) = rest.split_once('=').ok_or_else(|| err("expected 'gate <id> = KIND refs'".into()))?;
                let id = fresh(id.trim(), &known)?;
                let body = body.trim();
                let (kind, refs) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
                let kind = match kind {
                    "NOT" => GateKind::Not,
                    "AND" => GateKind::And,
                    "OR" => GateKind::Or,
                    k => return Err(err(format!("unknown gate kind '{k}'"))),
                };
                let inputs: Vec<String> =
                    refs.split(',').map(str::trim).filter(|r| !r.is_empty()).map(|r| resolve(r, &known)).collect::<Result<_, _>>()?;
                if inputs.len() != kind.fan_in() {
                    return Err(err(format!("{} takes {} inputs, found {}", kind.name(), kind.fan_in(), inputs.len())));
                }
                known.insert(id.clone(), ());
                n.gates.push(Gate { id, kind, inputs });
            }
            "out" => {
                let (name, r) = rest.split_once('=').ok_or_else(|| err("expected 'out <name> = <ref>'".into()))?;
                let name = name.trim();
                if n.outputs.iter().any(|(o, _)| o == name) {
                    return Err(err(format!("output '{name}' defined twice")));
                }
                n.outputs.push((name.to_string(), resolve(r.trim(), &known)?));
            }
            _ => return Err(err(format!("unknown line kind '{head}'"))),
        }
    }
    Ok(n)
}

impl fmt::Display for Netlist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.inputs {
            writeln!(f, "in {i}")?;
        }
        for g in &self.gates {
            writeln!(f, "gate {} = {} {}", g.id, g.kind.name(), g.inputs.join(", "))?;
        }
        for (o, r) in &self.outputs {
            writeln!(f, "out {o} = {r}")?;
        }
        Ok(())
    }
}

impl Netlist {
    pub fn input_names(&self) -> Vec<Arc<str>> {
        self.inputs.iter().map(|s| Arc::from(s.as_str())).collect()
    }

    pub fn count(&self, kind: GateKind) -> usize {
        self.gates.iter().filter(|g| g.kind == kind).count()
    }
}
