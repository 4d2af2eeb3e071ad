//! Hilbert-style proofs over L′ with axioms P1–P3 and modus ponens.
//!
//! Proofs record axiom instantiations explicitly, so checking is a linear
//! pass with precise rejection reasons. `HS(i,j)` and named lemmas are
//! derived steps that [`expand_lemmas`] turns into primitive ones.

mod deduction;
mod lemmas;
pub(crate) mod script;
mod synthesis;

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::prop_syntax::{substitute_atoms_partial, Formula};

pub use deduction::deduction_transform;
pub use lemmas::{library, LemmaEntry, LemmaLibrary};
pub use script::{parse_script, print_script, ScriptError};
pub use synthesis::{
    deducibility_proof, synthesize_proof, synthesize_with_cap, verify_soundness, Synthesis, DEFAULT_SYNTH_ATOM_CAP,
    SOFT_STEP_LIMIT,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    P1,
    P2,
    P3,
}

impl Axiom {
    pub fn arity(self) -> usize {
        match self {
            Axiom::P1 | Axiom::P3 => 2,
            Axiom::P2 => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Justification {
    Premise,
    P1(Formula, Formula),
    P2(Formula, Formula, Formula),
    P3(Formula, Formula),
    /// 1-based step numbers, in either order.
    MP(usize, usize),
    /// Hypothetical syllogism from X→Y and Y→Z, in either order.
    HS(usize, usize),
    Lemma { name: String, subst: Vec<(String, Formula)> },
}

impl Justification {
    pub fn lemma(name: &str, subst: &[(&str, Formula)]) -> Justification {
        Justification::Lemma {
            name: name.to_string(),
            subst: subst.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Step {
    pub formula: Formula,
    pub justification: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Proof {
    pub premises: Vec<Formula>,
    pub steps: Vec<Step>,
}

impl Proof {
    pub fn new(premises: Vec<Formula>) -> Proof {
        Proof { premises, steps: Vec::new() }
    }

    /// Appends a step and returns its 1-based number.
    pub fn push(&mut self, formula: Formula, justification: Justification) -> usize {
        self.steps.push(Step { formula, justification });
        self.steps.len()
    }

    /// The formula at 1-based step `n`.
    pub fn at(&self, n: usize) -> &Formula {
        &self.steps[n - 1].formula
    }

    pub fn conclusion(&self) -> Option<&Formula> {
        self.steps.last().map(|s| &s.formula)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_primitive(&self) -> bool {
        self.steps.iter().all(|s| !matches!(s.justification, Justification::HS(..) | Justification::Lemma { .. }))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error("axiom {0:?} takes {1} parts")]
    ArityMismatch(Axiom, usize),
    #[error("unknown lemma {0}")]
    UnknownLemma(String),
    #[error("input proof rejected: {0}")]
    InputRejected(Rejection),
    #[error("formula is not in L′: {0}")]
    NotInLPrime(String),
    #[error("row does not assign atom {0}")]
    UncoveredAtom(String),
    #[error("not a tautology: {0}")]
    NotATautology(String),
    #[error("{atoms} atoms exceeds the synthesis cap {cap}")]
    CapExceeded { atoms: usize, cap: usize },
}

pub fn instantiate_axiom(schema: Axiom, parts: &[Formula]) -> Result<Formula, ProofError> {
    if parts.len() != schema.arity() {
        return Err(ProofError::ArityMismatch(schema, schema.arity()));
    }
    Ok(axiom_formula(schema, parts))
}

fn axiom_formula(schema: Axiom, p: &[Formula]) -> Formula {
    let imp = |a: &Formula, b: &Formula| Formula::implies(a.clone(), b.clone());
    match schema {
        Axiom::P1 => imp(&p[0], &imp(&p[1], &p[0])),
        Axiom::P2 => imp(
            &imp(&p[0], &imp(&p[1], &p[2])),
            &imp(&imp(&p[0], &p[1]), &imp(&p[0], &p[2])),
        ),
        Axiom::P3 => imp(
            &imp(&Formula::not(p[0].clone()), &Formula::not(p[1].clone())),
            &imp(&p[1], &p[0]),
        ),
    }
}

pub fn p1(a: &Formula, b: &Formula) -> Step {
    Step { formula: axiom_formula(Axiom::P1, &[a.clone(), b.clone()]), justification: Justification::P1(a.clone(), b.clone()) }
}

pub fn p2(a: &Formula, b: &Formula, c: &Formula) -> Step {
    Step {
        formula: axiom_formula(Axiom::P2, &[a.clone(), b.clone(), c.clone()]),
        justification: Justification::P2(a.clone(), b.clone(), c.clone()),
    }
}

pub fn p3(a: &Formula, b: &Formula) -> Step {
    Step { formula: axiom_formula(Axiom::P3, &[a.clone(), b.clone()]), justification: Justification::P3(a.clone(), b.clone()) }
}

// ---------------------------------------------------------------------------
// Checking

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RejectReason {
    EmptyProof,
    NotPremise,
    BadAxiomInstance,
    BadMpShape,
    BadHsShape,
    ForwardReference,
    UnknownLemma,
    BadLemmaInstance,
    /// A step not entailed by the premises (soundness check only).
    Unsound,
    /// P4 with x free in A, or P5 with a captured variable.
    SideConditionViolation,
    /// A predicate-proof step containing ∃.
    NotInPdPrime,
    BadGenShape,
}

impl RejectReason {
    pub fn code(self) -> &'static str {
        match self {
            RejectReason::EmptyProof => "EmptyProof",
            RejectReason::NotPremise => "NotPremise",
            RejectReason::BadAxiomInstance => "BadAxiomInstance",
            RejectReason::BadMpShape => "BadMpShape",
            RejectReason::BadHsShape => "BadHsShape",
            RejectReason::ForwardReference => "ForwardReference",
            RejectReason::UnknownLemma => "UnknownLemma",
            RejectReason::BadLemmaInstance => "BadLemmaInstance",
            RejectReason::Unsound => "Unsound",
            RejectReason::SideConditionViolation => "SideConditionViolation",
            RejectReason::NotInPdPrime => "NotInPdPrime",
            RejectReason::BadGenShape => "BadGenShape",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    /// 1-based step number (0 for an empty proof).
    pub step: usize,
    pub reason: RejectReason,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {}", self.step, self.reason.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Accepted {
    pub conclusion: Formula,
    /// Premises that occur as premise steps, in premise-list order.
    pub used_premises: Vec<Formula>,
}

/// Whether `i` and `j` yield `c` by modus ponens, with either order of the
/// minor premise and the implication.
pub(crate) fn mp_fits<F: PartialEq>(a: &F, b: &F, c: &F, as_imp: impl Fn(&F) -> Option<(&F, &F)>) -> bool {
    let fits = |minor: &F, major: &F| matches!(as_imp(major), Some((x, y)) if x == minor && y == c);
    fits(a, b) || fits(b, a)
}

/// For HS, returns (first, second) as X→Y, Y→Z if either order composes to `c`.
pub(crate) fn hs_order<'a, F: PartialEq>(
    a: &'a F,
    b: &'a F,
    c: &F,
    as_imp: impl Fn(&F) -> Option<(&F, &F)>,
) -> Option<(&'a F, &'a F)> {
    let (cx, cz) = as_imp(c)?;
    let fits = |first: &F, second: &F| match (as_imp(first), as_imp(second)) {
        (Some((x, y1)), Some((y2, z))) => x == cx && y1 == y2 && z == cz,
        _ => false,
    };
    if fits(a, b) {
        Some((a, b))
    } else if fits(b, a) {
        Some((b, a))
    } else {
        None
    }
}

pub(crate) fn as_imp(f: &Formula) -> Option<(&Formula, &Formula)> {
    match f {
        Formula::Implies(a, b) => Some((a, b)),
        _ => None,
    }
}

pub(crate) fn subst_map(subst: &[(String, Formula)]) -> HashMap<String, Formula> {
    subst.iter().cloned().collect()
}

pub fn check_proof(p: &Proof) -> Result<Accepted, Rejection> {
    check_with(p, library())
}

pub(crate) fn check_with(p: &Proof, lib: &LemmaLibrary) -> Result<Accepted, Rejection> {
    if p.steps.is_empty() {
        return Err(Rejection { step: 0, reason: RejectReason::EmptyProof });
    }
    let premises: HashSet<&Formula> = p.premises.iter().collect();
    let mut used: HashSet<&Formula> = HashSet::new();
    for (k0, step) in p.steps.iter().enumerate() {
        let k = k0 + 1;
        let reject = |reason| Err(Rejection { step: k, reason });
        let f = &step.formula;
        let earlier = |i: usize| i >= 1 && i < k;
        match &step.justification {
            Justification::Premise => {
                if !premises.contains(f) {
                    return reject(RejectReason::NotPremise);
                }
                used.insert(f);
            }
            Justification::P1(a, b) => {
                if axiom_formula(Axiom::P1, &[a.clone(), b.clone()]) != *f {
                    return reject(RejectReason::BadAxiomInstance);
                }
            }
            Justification::P2(a, b, c) => {
                if axiom_formula(Axiom::P2, &[a.clone(), b.clone(), c.clone()]) != *f {
                    return reject(RejectReason::BadAxiomInstance);
                }
            }
            Justification::P3(a, b) => {
                if axiom_formula(Axiom::P3, &[a.clone(), b.clone()]) != *f {
                    return reject(RejectReason::BadAxiomInstance);
                }
            }
            Justification::MP(i, j) => {
                if !earlier(*i) || !earlier(*j) {
                    return reject(RejectReason::ForwardReference);
                }
                if !mp_fits(p.at(*i), p.at(*j), f, as_imp) {
                    return reject(RejectReason::BadMpShape);
                }
            }
            Justification::HS(i, j) => {
                if !earlier(*i) || !earlier(*j) {
                    return reject(RejectReason::ForwardReference);
                }
                if hs_order(p.at(*i), p.at(*j), f, as_imp).is_none() {
                    return reject(RejectReason::BadHsShape);
                }
            }
            Justification::Lemma { name, subst } => {
                let Some(entry) = lib.get(name) else {
                    return reject(RejectReason::UnknownLemma);
                };
                if substitute_atoms_partial(&entry.statement, &subst_map(subst)) != *f {
                    return reject(RejectReason::BadLemmaInstance);
                }
            }
        }
    }
    Ok(Accepted {
        conclusion: p.steps.last().unwrap().formula.clone(),
        used_premises: p.premises.iter().filter(|x| used.contains(x)).cloned().collect(),
    })
}

// ---------------------------------------------------------------------------
// Expansion

/// The five primitive steps replacing `X→Z` by HS from `X→Y` (step `first`)
/// and `Y→Z` (step `second`), numbered from `base + 1`.
pub(crate) fn hs_steps(first: (usize, &Formula), second: (usize, &Formula), base: usize) -> Vec<Step> {
    let (x, y) = as_imp(first.1).expect("HS premise is an implication");
    let (_, z) = as_imp(second.1).expect("HS premise is an implication");
    let yz = second.1;
    let x_yz = Formula::implies(x.clone(), yz.clone());
    vec![
        p1(yz, x),
        Step { formula: x_yz, justification: Justification::MP(second.0, base + 1) },
        p2(x, y, z),
        Step {
            formula: Formula::implies(first.1.clone(), Formula::implies(x.clone(), z.clone())),
            justification: Justification::MP(base + 2, base + 3),
        },
        Step { formula: Formula::implies(x.clone(), z.clone()), justification: Justification::MP(first.0, base + 4) },
    ]
}

fn instantiate_step(s: &Step, m: &HashMap<String, Formula>, offset: usize) -> Step {
    let sub = |f: &Formula| substitute_atoms_partial(f, m);
    let justification = match &s.justification {
        Justification::Premise => Justification::Premise,
        Justification::P1(a, b) => Justification::P1(sub(a), sub(b)),
        Justification::P2(a, b, c) => Justification::P2(sub(a), sub(b), sub(c)),
        Justification::P3(a, b) => Justification::P3(sub(a), sub(b)),
        Justification::MP(i, j) => Justification::MP(i + offset, j + offset),
        Justification::HS(i, j) => Justification::HS(i + offset, j + offset),
        Justification::Lemma { name, subst } => Justification::Lemma {
            name: name.clone(),
            subst: subst.iter().map(|(k, v)| (k.clone(), sub(v))).collect(),
        },
    };
    Step { formula: sub(&s.formula), justification }
}

/// Expands HS steps, and lemma steps too when `lemmas` is set.
pub(crate) fn expand_with(p: &Proof, lib: &LemmaLibrary, lemmas: bool) -> Result<Proof, ProofError> {
    let mut out = Proof::new(p.premises.clone());
    let mut map: Vec<usize> = vec![0];
    for (k0, step) in p.steps.iter().enumerate() {
        let remap = |i: usize| -> Result<usize, ProofError> {
            if i >= 1 && i <= k0 {
                Ok(map[i])
            } else {
                Err(ProofError::InputRejected(Rejection { step: k0 + 1, reason: RejectReason::ForwardReference }))
            }
        };
        match &step.justification {
            Justification::MP(i, j) => {
                out.push(step.formula.clone(), Justification::MP(remap(*i)?, remap(*j)?));
            }
            Justification::HS(i, j) => {
                let (i, j) = (remap(*i)?, remap(*j)?);
                let (fi, fj) = (out.at(i).clone(), out.at(j).clone());
                let Some((first, _)) = hs_order(&fi, &fj, &step.formula, as_imp) else {
                    return Err(ProofError::InputRejected(Rejection { step: k0 + 1, reason: RejectReason::BadHsShape }));
                };
                let (a, b) = if *first == fi { ((i, &fi), (j, &fj)) } else { ((j, &fj), (i, &fi)) };
                let base = out.len();
                out.steps.extend(hs_steps(a, b, base));
            }
            Justification::Lemma { name, subst } if lemmas => {
                let entry = lib.get(name).ok_or_else(|| ProofError::UnknownLemma(name.clone()))?;
                let m = subst_map(subst);
                let offset = out.len();
                for s in &entry.expanded.steps {
                    let inst = instantiate_step(s, &m, offset);
                    out.steps.push(inst);
                }
                if out.steps.last().map(|s| &s.formula) != Some(&step.formula) {
                    return Err(ProofError::InputRejected(Rejection { step: k0 + 1, reason: RejectReason::BadLemmaInstance }));
                }
            }
            _ => {
                out.steps.push(step.clone());
            }
        }
        map.push(out.len());
    }
    Ok(out)
}

/// Replaces every HS and lemma step by primitive steps and renumbers.
pub fn expand_lemmas(p: &Proof) -> Result<Proof, ProofError> {
    expand_with(p, library(), true)
}

impl fmt::Display for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_script(self))
    }
}
