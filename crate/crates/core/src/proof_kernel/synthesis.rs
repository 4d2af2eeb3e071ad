//! Deducibility proofs for a single truth-table row, and proof synthesis for
//! tautologies by discharging row literals and merging rows with case-split.

use std::collections::HashMap;
use std::sync::Arc;

use super::{deduction_transform, expand_lemmas, p1, Accepted, Justification, Proof, ProofError, RejectReason, Rejection};
use crate::prop_semantics::{canonical_row, eval_with, is_valid, Assignment};
use crate::prop_syntax::{to_lprime, Formula};

pub const DEFAULT_SYNTH_ATOM_CAP: usize = 6;
/// Above this many steps a synthesized proof carries a warning.
pub const SOFT_STEP_LIMIT: usize = 100_000;

fn literal(x: &Formula, value: bool) -> Formula {
    if value {
        x.clone()
    } else {
        Formula::not(x.clone())
    }
}

struct RowProver<'a> {
    row: &'a Assignment,
    proof: Proof,
    done: HashMap<Formula, usize>,
}

impl RowProver<'_> {
    fn value(&self, x: &Formula) -> bool {
        eval_with(x, &|a| self.row.get(a).expect("row covers every atom"))
    }

    /// Step number of X′, the literal of `x` under the row.
    fn derive(&mut self, x: &Formula) -> usize {
        let target = literal(x, self.value(x));
        if let Some(&k) = self.done.get(&target) {
            return k;
        }
        let k = match x {
            Formula::Atom(_) => self.proof.push(target.clone(), Justification::Premise),
            Formula::Not(b) if self.value(b) => {
                let kb = self.derive(b);
                let l = self.proof.push(
                    Formula::implies((**b).clone(), target.clone()),
                    Justification::lemma("dneg-intro", &[("A", (**b).clone())]),
                );
                self.proof.push(target.clone(), Justification::MP(kb, l))
            }
            // ¬B false-valued B: B′ is already ¬B.
            Formula::Not(b) => self.derive(b),
            Formula::Implies(b, c) if self.value(c) => {
                let kc = self.derive(c);
                self.proof.steps.push(p1(c, b));
                let l = self.proof.len();
                self.proof.push(target.clone(), Justification::MP(kc, l))
            }
            Formula::Implies(b, c) if !self.value(b) => {
                let kb = self.derive(b);
                let l = self.proof.push(
                    Formula::implies(Formula::not((**b).clone()), x.clone()),
                    Justification::lemma("exfalso", &[("B", (**b).clone()), ("A", (**c).clone())]),
                );
                self.proof.push(target.clone(), Justification::MP(kb, l))
            }
            Formula::Implies(b, c) => {
                let kb = self.derive(b);
                let kc = self.derive(c);
                let not_c = Formula::not((**c).clone());
                let l = self.proof.push(
                    Formula::implies((**b).clone(), Formula::implies(not_c.clone(), target.clone())),
                    Justification::lemma("neg-imp", &[("A", (**b).clone()), ("B", (**c).clone())]),
                );
                let m = self.proof.push(Formula::implies(not_c, target.clone()), Justification::MP(kb, l));
                self.proof.push(target.clone(), Justification::MP(kc, m))
            }
            _ => unreachable!("checked to be in L′"),
        };
        self.done.insert(target, k);
        k
    }
}

/// A demonstration of A′₁, …, A′ₙ ⊢ f′ for the row, where each premise is an
/// atom of the row or its negation, in row order.
pub fn deducibility_proof(f: &Formula, row: &Assignment) -> Result<Proof, ProofError> {
    if !f.is_lprime() {
        return Err(ProofError::NotInLPrime(f.to_string()));
    }
    if let Some(a) = f.atoms().iter().find(|a| row.get(a).is_none()) {
        return Err(ProofError::UncoveredAtom(a.to_string()));
    }
    let premises = row.atoms.iter().zip(&row.values).map(|(a, v)| literal(&Formula::Atom(a.clone()), *v)).collect();
    let mut prover = RowProver { row, proof: Proof::new(premises), done: HashMap::new() };
    prover.derive(f);
    Ok(prover.proof)
}

#[derive(Debug, Clone)]
pub struct Synthesis {
    /// Primitive proof with no premises ending in the L′ form of the input.
    pub proof: Proof,
    pub atoms: Vec<Arc<str>>,
    pub warning: Option<String>,
}

/// `a` followed by `b`, both premise-free, with `b`'s references shifted.
fn append(out: &mut Proof, b: &Proof) -> usize {
    let offset = out.len();
    for s in &b.steps {
        let justification = match &s.justification {
            Justification::MP(i, j) => Justification::MP(i + offset, j + offset),
            Justification::HS(i, j) => Justification::HS(i + offset, j + offset),
            j => j.clone(),
        };
        out.push(s.formula.clone(), justification);
    }
    out.len()
}

/// From ⊢ P→X and ⊢ ¬P→X, a proof of ⊢ X.
fn merge(atom: &Formula, pos: Proof, neg: Proof) -> Proof {
    let x = match pos.conclusion() {
        Some(Formula::Implies(_, x)) => (**x).clone(),
        _ => unreachable!("branch proofs end in an implication"),
    };
    let mut out = Proof::new(Vec::new());
    let end_a = append(&mut out, &pos);
    let end_b = append(&mut out, &neg);
    let neg_branch = Formula::implies(Formula::not(atom.clone()), x.clone());
    let cs = out.push(
        Formula::implies(Formula::implies(atom.clone(), x.clone()), Formula::implies(neg_branch.clone(), x.clone())),
        Justification::lemma("case-split", &[("A", atom.clone()), ("B", x.clone())]),
    );
    let k = out.push(Formula::implies(neg_branch, x.clone()), Justification::MP(end_a, cs));
    out.push(x, Justification::MP(end_b, k));
    out
}

/// Builds a primitive proof of the L′ translation of a tautology.
///
/// Atoms are taken in ascending name order. Each row's deducibility proof has
/// its literals discharged from the last atom to the first, then rows that
/// differ only in the first remaining atom are merged with case-split.
pub fn synthesize_proof(f: &Formula) -> Result<Synthesis, ProofError> {
    synthesize_with_cap(f, DEFAULT_SYNTH_ATOM_CAP)
}

pub fn synthesize_with_cap(f: &Formula, cap: usize) -> Result<Synthesis, ProofError> {
    let g = to_lprime(f);
    let mut atoms = g.atoms();
    atoms.sort();
    if atoms.len() > cap {
        return Err(ProofError::CapExceeded { atoms: atoms.len(), cap });
    }
    if !is_valid(&g) {
        return Err(ProofError::NotATautology(f.to_string()));
    }
    let k = atoms.len();
    let atom_f: Vec<Formula> = atoms.iter().map(|a| Formula::Atom(a.clone())).collect();
    let mut branches = Vec::with_capacity(1 << k);
    for r in 0..1usize << k {
        let values = canonical_row(k, r);
        let row = Assignment::new(atoms.clone(), values.clone());
        let mut p = deducibility_proof(&g, &row)?;
        for j in (0..k).rev() {
            p = deduction_transform(&p, &literal(&atom_f[j], values[j]))?;
        }
        branches.push(p);
    }
    // Canonical rows put the first atom in the most significant bit, so the
    // true/false siblings for it are r and r + half.
    for atom in &atom_f {
        let half = branches.len() / 2;
        let negs = branches.split_off(half);
        branches = branches.into_iter().zip(negs).map(|(pos, neg)| merge(atom, pos, neg)).collect();
    }
    let proof = expand_lemmas(&branches.pop().expect("one proof after merging"))?;
    let warning = (proof.len() > SOFT_STEP_LIMIT)
        .then(|| format!("proof has {} steps, above the soft limit of {SOFT_STEP_LIMIT}", proof.len()));
    Ok(Synthesis { proof, atoms, warning })
}

/// Checks that every step is a semantic consequence of the premises by
/// truth table.
pub fn verify_soundness(p: &Proof) -> Result<Accepted, Rejection> {
    if p.steps.is_empty() {
        return Err(Rejection { step: 0, reason: RejectReason::EmptyProof });
    }
    let mut all: Vec<&Formula> = p.premises.iter().collect();
    all.extend(p.steps.iter().map(|s| &s.formula));
    let mut atoms: Vec<Arc<str>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for f in &all {
        f.collect_atoms(&mut atoms, &mut seen);
    }
    let index: HashMap<&str, usize> = atoms.iter().enumerate().map(|(i, a)| (&**a, i)).collect();
    let n = atoms.len();
    let rows: Vec<Vec<bool>> = (0..1usize << n)
        .map(|r| canonical_row(n, r))
        .filter(|v| p.premises.iter().all(|f| eval_with(f, &|a| v[index[a]])))
        .collect();
    for (k, s) in p.steps.iter().enumerate() {
        if !rows.iter().all(|v| eval_with(&s.formula, &|a| v[index[a]])) {
            return Err(Rejection { step: k + 1, reason: RejectReason::Unsound });
        }
    }
    let used: Vec<&Formula> =
        p.steps.iter().filter(|s| s.justification == Justification::Premise).map(|s| &s.formula).collect();
    Ok(Accepted {
        conclusion: p.steps.last().unwrap().formula.clone(),
        used_premises: p.premises.iter().filter(|x| used.contains(x)).cloned().collect(),
    })
}
