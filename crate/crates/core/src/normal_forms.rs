//! Negation normal form over ∧/∨/¬, the denial transform, and full
//! disjunctive normal form.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::prop_semantics::{canonical_row, truth_table};
use crate::prop_syntax::{print_flat, Formula};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalFormError {
    #[error("formula is not in ∧/∨ normal form: {0}")]
    NotInNormalForm(String),
    #[error("formula is a contradiction and has no full disjunctive normal form")]
    IsContradiction,
}

/// Only ∧, ∨ and ¬, with every ¬ applied directly to an atom.
pub fn is_nnf(f: &Formula) -> bool {
    match f {
        Formula::Atom(_) => true,
        Formula::Not(a) => a.is_atom(),
        Formula::And(a, b) | Formula::Or(a, b) => is_nnf(a) && is_nnf(b),
        _ => false,
    }
}

/// Children are reduced first, then the root is rewritten: ↔ becomes a
/// conjunction of implications, A→B becomes (¬A)∨B, and ¬ is pushed inward by
/// De Morgan and double-negation removal.
pub fn reduce_nf(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) => f.clone(),
        Formula::Not(a) => negate_nnf(&reduce_nf(a)),
        Formula::And(a, b) => Formula::and(reduce_nf(a), reduce_nf(b)),
        Formula::Or(a, b) => Formula::or(reduce_nf(a), reduce_nf(b)),
        Formula::Implies(a, b) => Formula::or(negate_nnf(&reduce_nf(a)), reduce_nf(b)),
        Formula::Iff(a, b) => {
            let (a, b) = (reduce_nf(a), reduce_nf(b));
            Formula::and(
                Formula::or(negate_nnf(&a), b.clone()),
                Formula::or(negate_nnf(&b), a),
            )
        }
    }
}

/// ¬ of a formula already in normal form, pushed down to the atoms.
fn negate_nnf(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) => Formula::not(f.clone()),
        Formula::Not(a) => (**a).clone(),
        Formula::And(a, b) => Formula::or(negate_nnf(a), negate_nnf(b)),
        Formula::Or(a, b) => Formula::and(negate_nnf(a), negate_nnf(b)),
        _ => unreachable!("negate_nnf called on a formula outside normal form"),
    }
}

/// Flips every literal and swaps ∧ with ∨; the result is equivalent to ¬f.
pub fn denial(f: &Formula) -> Result<Formula, NormalFormError> {
    if !is_nnf(f) {
        return Err(NormalFormError::NotInNormalForm(f.to_string()));
    }
    Ok(negate_nnf(f))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FundamentalConjunction {
    /// (atom, polarity) in table column order.
    pub literals: Vec<(Arc<str>, bool)>,
}

impl FundamentalConjunction {
    pub fn to_formula(&self) -> Formula {
        let lits: Vec<Formula> = self
            .literals
            .iter()
            .map(|(a, pos)| {
                let atom = Formula::Atom(a.clone());
                if *pos {
                    atom
                } else {
                    Formula::not(atom)
                }
            })
            .collect();
        right_nest(lits, Formula::and)
    }
}

fn right_nest(mut items: Vec<Formula>, join: fn(Formula, Formula) -> Formula) -> Formula {
    let mut acc = items.pop().expect("at least one operand");
    while let Some(x) = items.pop() {
        acc = join(x, acc);
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fdnf {
    pub atoms: Vec<Arc<str>>,
    /// One conjunction per T row, rows in canonical order.
    pub conjunctions: Vec<FundamentalConjunction>,
}

impl Fdnf {
    /// Right-nested disjunction of right-nested conjunctions.
    pub fn to_formula(&self) -> Formula {
        right_nest(self.conjunctions.iter().map(|c| c.to_formula()).collect(), Formula::or)
    }
}

impl fmt::Display for Fdnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_flat(&self.to_formula()))
    }
}

pub fn fdnf(f: &Formula) -> Result<Fdnf, NormalFormError> {
    let table = truth_table(std::slice::from_ref(f));
    let n = table.atoms.len();
    let conjunctions: Vec<FundamentalConjunction> = (0..table.rows.len())
        .filter(|&r| table.rows[r][0])
        .map(|r| FundamentalConjunction {
            literals: table.atoms.iter().cloned().zip(canonical_row(n, r)).collect(),
        })
        .collect();
    if conjunctions.is_empty() {
        return Err(NormalFormError::IsContradiction);
    }
    Ok(Fdnf { atoms: table.atoms, conjunctions })
}
