//! The constructive deduction theorem: turn a demonstration of B from
//! Γ ∪ {A} into one of A → B from Γ.

use super::{as_imp, check_with, expand_with, library, p1, p2, Justification, LemmaLibrary, Proof, ProofError};
use crate::prop_syntax::Formula;

/// Rewrites each step Bⱼ into a derivation of A → Bⱼ.
///
/// - Bⱼ = A: a single `LEMMA id[A:=A]` step for A → A.
/// - premise, axiom or lemma: keep it, add the P1 instance Bⱼ → (A → Bⱼ), MP.
/// - MP from B_g and B_g → Bⱼ: the P2 instance and two MPs.
///
/// HS steps are expanded first; lemma steps are kept since they are theorems.
pub fn deduction_transform(p: &Proof, a: &Formula) -> Result<Proof, ProofError> {
    deduction_with(p, a, library())
}

pub(crate) fn deduction_with(p: &Proof, a: &Formula, lib: &LemmaLibrary) -> Result<Proof, ProofError> {
    check_with(p, lib).map_err(ProofError::InputRejected)?;
    let p = expand_with(p, lib, false)?;
    let mut out = Proof::new(p.premises.iter().filter(|x| *x != a).cloned().collect());
    // map[j] is the output step holding A → Bⱼ.
    let mut map = vec![0usize];
    let imp = |x: &Formula| Formula::implies(a.clone(), x.clone());
    for step in &p.steps {
        let b = &step.formula;
        if b == a {
            out.push(imp(a), Justification::lemma("id", &[("A", a.clone())]));
        } else {
            match &step.justification {
                Justification::MP(i, j) => {
                    let (fi, fj) = (p.at(*i), p.at(*j));
                    let (minor, major) = match as_imp(fj) {
                        Some((x, y)) if x == fi && y == b => (*i, *j),
                        _ => (*j, *i),
                    };
                    let g = p.at(minor);
                    out.steps.push(p2(a, g, b));
                    let k = out.len();
                    out.push(Formula::implies(imp(g), imp(b)), Justification::MP(map[major], k));
                    out.push(imp(b), Justification::MP(map[minor], k + 1));
                }
                Justification::HS(..) => unreachable!("HS steps are expanded before the transform"),
                _ => {
                    out.steps.push(step.clone());
                    out.steps.push(p1(b, a));
                    let k = out.len();
                    out.push(imp(b), Justification::MP(k - 1, k));
                }
            }
        }
        map.push(out.len());
    }
    Ok(out)
}
