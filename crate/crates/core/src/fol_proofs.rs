//! Hilbert proofs for the ∃-free predicate language: P1–P3 over predicate
//! formulas, P4 and P5 with their side conditions, MP and generalization.
//!
//! Propositional lemmas are reused by substituting predicate formulas for
//! their atoms A, B, C.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::sync::Arc;

use thiserror::Error;

use crate::fol_semantics::{check_symbols, models, Structure};
use crate::fol_syntax::{free_for, is_variable_name, parse_pd, subst_free, PdFormula, Term};
use crate::proof_kernel::script::{lemma_text, parse_index, raw_script, same_set, RawReason, ScriptError};
use crate::proof_kernel::{hs_order, library, mp_fits, Justification, RejectReason, Rejection};
use crate::prop_syntax::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PdJustification {
    Premise,
    P1(PdFormula, PdFormula),
    P2(PdFormula, PdFormula, PdFormula),
    P3(PdFormula, PdFormula),
    /// ∀x(A→B) → (A→∀xB), x not free in A.
    P4(PdFormula, PdFormula, Arc<str>),
    /// (∀xA) → A with λ for the free x; λ a constant or a variable free for x.
    P5(PdFormula, Arc<str>, Term),
    MP(usize, usize),
    HS(usize, usize),
    /// ∀x B from step i holding B.
    Gen(usize, Arc<str>),
    Lemma { name: String, subst: Vec<(String, PdFormula)> },
}

impl PdJustification {
    pub fn lemma(name: &str, subst: &[(&str, PdFormula)]) -> PdJustification {
        PdJustification::Lemma {
            name: name.to_string(),
            subst: subst.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PdStep {
    pub formula: PdFormula,
    pub justification: PdJustification,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PdProof {
    pub premises: Vec<PdFormula>,
    pub steps: Vec<PdStep>,
}

impl PdProof {
    pub fn new(premises: Vec<PdFormula>) -> PdProof {
        PdProof { premises, steps: Vec::new() }
    }

    pub fn push(&mut self, formula: PdFormula, justification: PdJustification) -> usize {
        self.steps.push(PdStep { formula, justification });
        self.steps.len()
    }

    pub fn at(&self, n: usize) -> &PdFormula {
        &self.steps[n - 1].formula
    }

    pub fn conclusion(&self) -> Option<&PdFormula> {
        self.steps.last().map(|s| &s.formula)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

fn imp(a: &PdFormula, b: &PdFormula) -> PdFormula {
    PdFormula::implies(a.clone(), b.clone())
}

fn as_imp(f: &PdFormula) -> Option<(&PdFormula, &PdFormula)> {
    match f {
        PdFormula::Implies(a, b) => Some((a, b)),
        _ => None,
    }
}

pub fn p1_instance(a: &PdFormula, b: &PdFormula) -> PdFormula {
    imp(a, &imp(b, a))
}

pub fn p2_instance(a: &PdFormula, b: &PdFormula, c: &PdFormula) -> PdFormula {
    imp(&imp(a, &imp(b, c)), &imp(&imp(a, b), &imp(a, c)))
}

pub fn p3_instance(a: &PdFormula, b: &PdFormula) -> PdFormula {
    imp(&imp(&PdFormula::not(a.clone()), &PdFormula::not(b.clone())), &imp(b, a))
}

pub fn p4_instance(a: &PdFormula, b: &PdFormula, x: &str) -> PdFormula {
    imp(&PdFormula::forall(x, imp(a, b)), &imp(a, &PdFormula::forall(x, b.clone())))
}

pub fn p5_instance(a: &PdFormula, x: &str, lam: &Term) -> PdFormula {
    imp(&PdFormula::forall(x, a.clone()), &subst_free(a, x, lam))
}

/// Replaces the atoms of a propositional template by predicate formulas;
/// atoms without an image become 0-ary predicates of the same name.
pub fn lift(f: &Formula, m: &HashMap<String, PdFormula>) -> PdFormula {
    match f {
        Formula::Atom(n) => m.get(&**n).cloned().unwrap_or_else(|| PdFormula::pred(n, Vec::new())),
        Formula::Not(a) => PdFormula::not(lift(a, m)),
        Formula::And(a, b) => PdFormula::and(lift(a, m), lift(b, m)),
        Formula::Or(a, b) => PdFormula::or(lift(a, m), lift(b, m)),
        Formula::Implies(a, b) => PdFormula::implies(lift(a, m), lift(b, m)),
        Formula::Iff(a, b) => PdFormula::iff(lift(a, m), lift(b, m)),
    }
}

fn subst_map(subst: &[(String, PdFormula)]) -> HashMap<String, PdFormula> {
    subst.iter().cloned().collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdAccepted {
    pub conclusion: PdFormula,
    pub used_premises: Vec<PdFormula>,
}

pub fn check_pd_proof(p: &PdProof) -> Result<PdAccepted, Rejection> {
    if p.steps.is_empty() {
        return Err(Rejection { step: 0, reason: RejectReason::EmptyProof });
    }
    let mut used: Vec<&PdFormula> = Vec::new();
    for (k0, step) in p.steps.iter().enumerate() {
        let k = k0 + 1;
        let reject = |reason| Err::<PdAccepted, _>(Rejection { step: k, reason });
        let f = &step.formula;
        let earlier = |i: usize| i >= 1 && i < k;
        if !f.is_pd_prime() {
            return reject(RejectReason::NotInPdPrime);
        }
        let instance = |g: PdFormula| {
            if g == *f {
                Ok(())
            } else {
                Err(Rejection { step: k, reason: RejectReason::BadAxiomInstance })
            }
        };
        match &step.justification {
            PdJustification::Premise => {
                if !p.premises.contains(f) {
                    return reject(RejectReason::NotPremise);
                }
                used.push(f);
            }
            PdJustification::P1(a, b) => instance(p1_instance(a, b))?,
            PdJustification::P2(a, b, c) => instance(p2_instance(a, b, c))?,
            PdJustification::P3(a, b) => instance(p3_instance(a, b))?,
            PdJustification::P4(a, b, x) => {
                instance(p4_instance(a, b, x))?;
                if a.is_free(x) {
                    return reject(RejectReason::SideConditionViolation);
                }
            }
            PdJustification::P5(a, x, lam) => {
                instance(p5_instance(a, x, lam))?;
                if let Term::Var(v) = lam {
                    if !free_for(a, x, v) {
                        return reject(RejectReason::SideConditionViolation);
                    }
                }
            }
            PdJustification::MP(i, j) => {
                if !earlier(*i) || !earlier(*j) {
                    return reject(RejectReason::ForwardReference);
                }
                if !mp_fits(p.at(*i), p.at(*j), f, as_imp) {
                    return reject(RejectReason::BadMpShape);
                }
            }
            PdJustification::HS(i, j) => {
                if !earlier(*i) || !earlier(*j) {
                    return reject(RejectReason::ForwardReference);
                }
                if hs_order(p.at(*i), p.at(*j), f, as_imp).is_none() {
                    return reject(RejectReason::BadHsShape);
                }
            }
            PdJustification::Gen(i, x) => {
                if !earlier(*i) {
                    return reject(RejectReason::ForwardReference);
                }
                if *f != PdFormula::forall(x, p.at(*i).clone()) {
                    return reject(RejectReason::BadGenShape);
                }
            }
            PdJustification::Lemma { name, subst } => {
                let Some(entry) = library().get(name) else {
                    return reject(RejectReason::UnknownLemma);
                };
                if lift(&entry.statement, &subst_map(subst)) != *f {
                    return reject(RejectReason::BadLemmaInstance);
                }
            }
        }
    }
    Ok(PdAccepted {
        conclusion: p.steps.last().unwrap().formula.clone(),
        used_premises: p.premises.iter().filter(|x| used.contains(x)).cloned().collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PdProofError {
    #[error("input proof rejected: {0}")]
    InputRejected(Rejection),
    #[error("step {step} generalizes {variable}, which is free in the discharged formula")]
    GeneralizationOnFreeVariable { step: usize, variable: String },
    #[error("unknown lemma {0}")]
    UnknownLemma(String),
}

/// The five primitive steps for HS from X→Y (step `first`) and Y→Z
/// (step `second`), numbered from `base + 1`.
fn hs_steps(first: (usize, &PdFormula), second: (usize, &PdFormula), base: usize) -> Vec<PdStep> {
    let (x, y) = as_imp(first.1).expect("HS premise is an implication");
    let (_, z) = as_imp(second.1).expect("HS premise is an implication");
    let yz = second.1;
    let step = |formula, justification| PdStep { formula, justification };
    vec![
        step(p1_instance(yz, x), PdJustification::P1(yz.clone(), x.clone())),
        step(imp(x, yz), PdJustification::MP(second.0, base + 1)),
        step(p2_instance(x, y, z), PdJustification::P2(x.clone(), y.clone(), z.clone())),
        step(imp(first.1, &imp(x, z)), PdJustification::MP(base + 2, base + 3)),
        step(imp(x, z), PdJustification::MP(first.0, base + 4)),
    ]
}

fn lift_step(s: &crate::proof_kernel::Step, m: &HashMap<String, PdFormula>, offset: usize) -> PdStep {
    let l = |f: &Formula| lift(f, m);
    let justification = match &s.justification {
        Justification::P1(a, b) => PdJustification::P1(l(a), l(b)),
        Justification::P2(a, b, c) => PdJustification::P2(l(a), l(b), l(c)),
        Justification::P3(a, b) => PdJustification::P3(l(a), l(b)),
        Justification::MP(i, j) => PdJustification::MP(i + offset, j + offset),
        other => unreachable!("expanded lemma proofs are primitive, found {other:?}"),
    };
    PdStep { formula: l(&s.formula), justification }
}

/// Expands HS steps, and lemma steps too when `lemmas` is set.
fn expand(p: &PdProof, lemmas: bool) -> Result<PdProof, PdProofError> {
    let mut out = PdProof::new(p.premises.clone());
    let mut map = vec![0usize];
    for step in &p.steps {
        let r = |i: usize| map[i];
        match &step.justification {
            PdJustification::MP(i, j) => {
                out.push(step.formula.clone(), PdJustification::MP(r(*i), r(*j)));
            }
            PdJustification::Gen(i, x) => {
                out.push(step.formula.clone(), PdJustification::Gen(r(*i), x.clone()));
            }
            PdJustification::HS(i, j) => {
                let (i, j) = (r(*i), r(*j));
                let (fi, fj) = (out.at(i).clone(), out.at(j).clone());
                let (first, _) = hs_order(&fi, &fj, &step.formula, as_imp).expect("checked HS step");
                let (a, b) = if *first == fi { ((i, &fi), (j, &fj)) } else { ((j, &fj), (i, &fi)) };
                let base = out.len();
                out.steps.extend(hs_steps(a, b, base));
            }
            PdJustification::Lemma { name, subst } if lemmas => {
                let entry = library().get(name).ok_or_else(|| PdProofError::UnknownLemma(name.clone()))?;
                let m = subst_map(subst);
                let offset = out.len();
                for s in &entry.expanded.steps {
                    out.steps.push(lift_step(s, &m, offset));
                }
            }
            _ => out.steps.push(step.clone()),
        }
        map.push(out.len());
    }
    Ok(out)
}

/// Replaces HS and lemma steps by primitive ones.
pub fn expand_pd(p: &PdProof) -> Result<PdProof, PdProofError> {
    check_pd_proof(p).map_err(PdProofError::InputRejected)?;
    expand(p, true)
}

/// The deduction transform for proofs that never generalize a variable free
/// in `a`; refuses otherwise. Gen steps ∀yBᵢ become Gen on A→Bᵢ, the P4
/// instance ∀y(A→Bᵢ)→(A→∀yBᵢ), and MP.
pub fn pd_deduction_transform(p: &PdProof, a: &PdFormula) -> Result<PdProof, PdProofError> {
    check_pd_proof(p).map_err(PdProofError::InputRejected)?;
    let p = expand(p, false)?;
    for (k, s) in p.steps.iter().enumerate() {
        if let PdJustification::Gen(_, y) = &s.justification {
            if a.is_free(y) {
                return Err(PdProofError::GeneralizationOnFreeVariable { step: k + 1, variable: y.to_string() });
            }
        }
    }
    let mut out = PdProof::new(p.premises.iter().filter(|x| *x != a).cloned().collect());
    let mut map = vec![0usize];
    let ai = |x: &PdFormula| imp(a, x);
    for step in &p.steps {
        let b = &step.formula;
        if b == a {
            out.push(ai(a), PdJustification::lemma("id", &[("A", a.clone())]));
        } else {
            match &step.justification {
                PdJustification::MP(i, j) => {
                    let (fi, fj) = (p.at(*i), p.at(*j));
                    let (minor, major) = match as_imp(fj) {
                        Some((x, y)) if x == fi && y == b => (*i, *j),
                        _ => (*j, *i),
                    };
                    let g = p.at(minor);
                    let k = out.push(p2_instance(a, g, b), PdJustification::P2(a.clone(), g.clone(), b.clone()));
                    out.push(imp(&ai(g), &ai(b)), PdJustification::MP(map[major], k));
                    out.push(ai(b), PdJustification::MP(map[minor], k + 1));
                }
                PdJustification::Gen(i, y) => {
                    let bi = p.at(*i);
                    let k = out.push(PdFormula::forall(y, ai(bi)), PdJustification::Gen(map[*i], y.clone()));
                    out.push(p4_instance(a, bi, y), PdJustification::P4(a.clone(), bi.clone(), y.clone()));
                    out.push(ai(b), PdJustification::MP(k, k + 1));
                }
                PdJustification::HS(..) => unreachable!("HS steps are expanded before the transform"),
                _ => {
                    out.steps.push(step.clone());
                    let k = out.push(p1_instance(b, a), PdJustification::P1(b.clone(), a.clone()));
                    out.push(ai(b), PdJustification::MP(k - 1, k));
                }
            }
        }
        map.push(out.len());
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpotcheckReport {
    /// Structures that model every premise and were checked step by step.
    pub checked: usize,
    /// Structures failing a premise or missing a symbol.
    pub skipped: usize,
    /// (structure index, 1-based step) of the first step that fails.
    pub failure: Option<(usize, usize)>,
}

/// Every step, universally closed, must hold in each structure modeling the
/// premises; a failure means the checker accepted an unsound step.
pub fn pd_soundness_spotcheck(p: &PdProof, structures: &[Structure]) -> SpotcheckReport {
    let mut report = SpotcheckReport { checked: 0, skipped: 0, failure: None };
    for (si, m) in structures.iter().enumerate() {
        let ok_symbols = p.premises.iter().chain(p.steps.iter().map(|s| &s.formula)).all(|f| check_symbols(m, f).is_ok());
        if !ok_symbols || !p.premises.iter().all(|f| models(m, f).is_ok_and(|v| v.holds)) {
            report.skipped += 1;
            continue;
        }
        report.checked += 1;
        if let Some(k) = p.steps.iter().position(|s| !models(m, &s.formula).is_ok_and(|v| v.holds)) {
            report.failure.get_or_insert((si, k + 1));
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Scripts

fn reason_text(j: &PdJustification) -> String {
    match j {
        PdJustification::Premise => "premise".into(),
        PdJustification::P1(a, b) => format!("P1[{a}; {b}]"),
        PdJustification::P2(a, b, c) => format!("P2[{a}; {b}; {c}]"),
        PdJustification::P3(a, b) => format!("P3[{a}; {b}]"),
        PdJustification::P4(a, b, x) => format!("P4[{a}; {b}; {x}]"),
        PdJustification::P5(a, x, t) => format!("P5[{a}; {x}; {t}]"),
        PdJustification::MP(i, j) => format!("MP({i},{j})"),
        PdJustification::HS(i, j) => format!("HS({i},{j})"),
        PdJustification::Gen(i, x) => format!("GEN({i},{x})"),
        PdJustification::Lemma { name, subst } => lemma_text(name, subst.iter().map(|(k, v)| (k.as_str(), v.to_string()))),
    }
}

pub fn print_pd_script(p: &PdProof) -> String {
    let mut out = String::new();
    let step_premises: Vec<&PdFormula> =
        p.steps.iter().filter(|s| s.justification == PdJustification::Premise).map(|s| &s.formula).collect();
    if !same_set(&p.premises, &step_premises) {
        for f in &p.premises {
            let _ = writeln!(out, "premise {f}");
        }
    }
    for (k, s) in p.steps.iter().enumerate() {
        let _ = writeln!(out, "{}. {} ; {}", k + 1, s.formula, reason_text(&s.justification));
    }
    out
}

impl fmt::Display for PdProof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_pd_script(self))
    }
}

pub fn parse_pd_script(text: &str) -> Result<PdProof, ScriptError> {
    let raw = raw_script(text)?;
    let formula = |s: &str, line: usize| parse_pd(s).map_err(|e| ScriptError { line, message: e.to_string() });
    let variable = |s: &str, line: usize| -> Result<Arc<str>, ScriptError> {
        if is_variable_name(s) {
            Ok(s.into())
        } else {
            Err(ScriptError { line, message: format!("'{s}' is not a variable") })
        }
    };
    let mut p = PdProof::default();
    for (line, s) in &raw.premises {
        p.premises.push(formula(s, *line)?);
    }
    for (line, ftext, reason) in &raw.steps {
        let line = *line;
        let f = formula(ftext, line)?;
        let bad = |m: String| ScriptError { line, message: m };
        let j = match reason {
            RawReason::Premise => PdJustification::Premise,
            RawReason::Axiom { head, parts } => {
                let fs = |n: usize| -> Result<Vec<PdFormula>, ScriptError> {
                    parts[..n].iter().map(|x| formula(x, line)).collect()
                };
                match (head.as_str(), parts.len()) {
                    ("P1", 2) => {
                        let v = fs(2)?;
                        PdJustification::P1(v[0].clone(), v[1].clone())
                    }
                    ("P2", 3) => {
                        let v = fs(3)?;
                        PdJustification::P2(v[0].clone(), v[1].clone(), v[2].clone())
                    }
                    ("P3", 2) => {
                        let v = fs(2)?;
                        PdJustification::P3(v[0].clone(), v[1].clone())
                    }
                    ("P4", 3) => {
                        let v = fs(2)?;
                        PdJustification::P4(v[0].clone(), v[1].clone(), variable(&parts[2], line)?)
                    }
                    ("P5", 3) => {
                        let t = parts[2].as_str();
                        if !t.starts_with(|c: char| c.is_ascii_lowercase()) || !t.chars().all(|c| c.is_ascii_alphanumeric()) {
                            return Err(bad(format!("'{t}' is not a term")));
                        }
                        PdJustification::P5(formula(&parts[0], line)?, variable(&parts[1], line)?, Term::named(t))
                    }
                    _ => return Err(bad(format!("bad axiom reason {head} with {} parts", parts.len()))),
                }
            }
            RawReason::Rule { head, args } if args.len() == 2 => {
                let i = parse_index(&args[0], line)?;
                match head.as_str() {
                    "MP" => PdJustification::MP(i, parse_index(&args[1], line)?),
                    "HS" => PdJustification::HS(i, parse_index(&args[1], line)?),
                    "GEN" | "Gen" | "G" => PdJustification::Gen(i, variable(&args[1], line)?),
                    _ => return Err(bad(format!("unknown rule {head}"))),
                }
            }
            RawReason::Rule { head, .. } => return Err(bad(format!("unknown rule {head}"))),
            RawReason::Lemma { name, subst } => PdJustification::Lemma {
                name: name.clone(),
                subst: subst.iter().map(|(k, v)| Ok((k.clone(), formula(v, line)?))).collect::<Result<_, ScriptError>>()?,
            },
        };
        p.push(f, j);
    }
    if raw.premises.is_empty() {
        let mut seen: Vec<PdFormula> = Vec::new();
        for s in &p.steps {
            if s.justification == PdJustification::Premise && !seen.contains(&s.formula) {
                seen.push(s.formula.clone());
            }
        }
        p.premises = seen;
    }
    Ok(p)
}
