//! Consequence operators over a finite formula universe.
//!
//! Every operator here is relative to a [`FormulaUniverse`]: subsets are
//! bitsets over its indices and closures never leave it. The operator `S`
//! closes under four conjunction axioms and modus ponens; `Sₙ` only fires MP
//! through implications of size at most n.

use std::collections::{HashMap, HashSet};
use std::fmt;

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use thiserror::Error;

use crate::prop_semantics::ordered_universe;
use crate::prop_syntax::{size, Connective, Formula};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConsequenceError {
    #[error("formula is not in the universe: {0}")]
    NotInUniverse(String),
}

#[derive(Debug, Clone)]
pub struct FormulaUniverse {
    formulas: Vec<Formula>,
    index: HashMap<Formula, usize>,
}

impl FormulaUniverse {
    /// All formulas over `atoms` and `connectives` of size at most `max_size`,
    /// ordered by size and then printed form.
    pub fn generate(atoms: &[&str], connectives: &[Connective], max_size: usize) -> FormulaUniverse {
        Self::from_formulas(ordered_universe(atoms, connectives, max_size))
    }

    /// Deduplicates and adds any missing subformulas, so the result is
    /// closed under the subformula relation.
    pub fn from_formulas(list: impl IntoIterator<Item = Formula>) -> FormulaUniverse {
        // Post-order, so every formula follows its parts.
        fn add(f: &Formula, seen: &mut HashSet<Formula>, out: &mut Vec<Formula>) {
            if seen.contains(f) {
                return;
            }
            for c in f.children() {
                add(c, seen, out);
            }
            seen.insert(f.clone());
            out.push(f.clone());
        }
        let mut formulas = Vec::new();
        let mut seen = HashSet::new();
        for f in list {
            add(&f, &mut seen, &mut formulas);
        }
        let index = formulas.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
        FormulaUniverse { formulas, index }
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn index_of(&self, f: &Formula) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn subset(&self, fs: &[Formula]) -> Result<FixedBitSet, ConsequenceError> {
        let mut s = self.empty_set();
        for f in fs {
            s.insert(self.index_of(f).ok_or_else(|| ConsequenceError::NotInUniverse(f.to_string()))?);
        }
        Ok(s)
    }

    pub fn members(&self, s: &FixedBitSet) -> Vec<Formula> {
        s.ones().map(|i| self.formulas[i].clone()).collect()
    }

    /// `{A, B, …}` in universe order.
    pub fn describe(&self, s: &FixedBitSet) -> String {
        format!("{{{}}}", s.ones().map(|i| self.formulas[i].to_string()).join(", "))
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    /// Every subset with at most `k` members, by size then index order.
    pub fn subsets_up_to(&self, k: usize) -> Vec<FixedBitSet> {
        (0..=k.min(self.len()))
            .flat_map(|r| (0..self.len()).combinations(r))
            .map(|c| {
                let mut s = self.empty_set();
                c.into_iter().for_each(|i| s.insert(i));
                s
            })
            .collect()
    }
}

/// An operator on subsets of a fixed universe.
pub trait ConsequenceOperator {
    fn name(&self) -> String;
    fn universe(&self) -> &FormulaUniverse;
    fn apply(&self, x: &FixedBitSet) -> FixedBitSet;
}

/// A modus ponens rule: from `minor` and `major` = minor→`conclusion`.
#[derive(Debug, Clone, Copy)]
struct MpRule {
    minor: usize,
    major: usize,
    conclusion: usize,
    major_size: usize,
}

/// The operators `S` and `Sₙ` on one universe.
#[derive(Debug, Clone)]
pub struct Closure<'u> {
    universe: &'u FormulaUniverse,
    axioms: FixedBitSet,
    rules: Vec<MpRule>,
    /// `None` is `S`; `Some(n)` is `Sₙ`.
    level: Option<usize>,
}

/// Which of the four conjunction axioms `f` instantiates, if any:
/// (A∧(B∧C))→((A∧B)∧C), its converse, (A∧B)→A and (A∧B)→B.
pub fn conjunction_axiom(f: &Formula) -> Option<usize> {
    let Formula::Implies(x, y) = f else { return None };
    if let (Formula::And(a, bc), Formula::And(ab, c)) = (&**x, &**y) {
        if let (Formula::And(b, c1), Formula::And(a1, b1)) = (&**bc, &**ab) {
            if a == a1 && b == b1 && c == c1 {
                return Some(1);
            }
        }
    }
    if let (Formula::And(ab, c), Formula::And(a, bc)) = (&**x, &**y) {
        if let (Formula::And(a1, b1), Formula::And(b, c1)) = (&**ab, &**bc) {
            if a == a1 && b == b1 && c == c1 {
                return Some(2);
            }
        }
    }
    if let Formula::And(a, b) = &**x {
        if a == y {
            return Some(3);
        }
        if b == y {
            return Some(4);
        }
    }
    None
}

impl<'u> Closure<'u> {
    pub fn s(universe: &'u FormulaUniverse) -> Closure<'u> {
        let mut axioms = universe.empty_set();
        let mut rules = Vec::new();
        for (i, f) in universe.formulas.iter().enumerate() {
            if conjunction_axiom(f).is_some() {
                axioms.insert(i);
            }
            if let Formula::Implies(a, b) = f {
                // Both sides are present because the universe is subformula-closed.
                rules.push(MpRule {
                    minor: universe.index[&**a],
                    major: i,
                    conclusion: universe.index[&**b],
                    major_size: size(f),
                });
            }
        }
        Closure { universe, axioms, rules, level: None }
    }

    pub fn s_n(universe: &'u FormulaUniverse, n: usize) -> Closure<'u> {
        Closure { level: Some(n), ..Closure::s(universe) }
    }

    pub fn with_level(&self, level: Option<usize>) -> Closure<'u> {
        Closure { level, ..self.clone() }
    }

    /// The axiom instances lying in the universe.
    pub fn axiom_instances(&self) -> &FixedBitSet {
        &self.axioms
    }

    /// Largest implication size in the universe; `Sₙ` for this n equals `S`.
    pub fn max_implication_size(&self) -> usize {
        self.rules.iter().map(|r| r.major_size).max().unwrap_or(0)
    }

    pub fn closure(&self, gamma: &FixedBitSet) -> FixedBitSet {
        let mut set = gamma.clone();
        set.grow(self.universe.len());
        set.union_with(&self.axioms);
        let rules: Vec<&MpRule> =
            self.rules.iter().filter(|r| self.level.is_none_or(|n| r.major_size <= n)).collect();
        loop {
            let mut changed = false;
            for r in &rules {
                if !set.contains(r.conclusion) && set.contains(r.minor) && set.contains(r.major) {
                    set.insert(r.conclusion);
                    changed = true;
                }
            }
            if !changed {
                return set;
            }
        }
    }
}

impl ConsequenceOperator for Closure<'_> {
    fn name(&self) -> String {
        match self.level {
            None => "S".into(),
            Some(n) => format!("S{n}"),
        }
    }
    fn universe(&self) -> &FormulaUniverse {
        self.universe
    }
    fn apply(&self, x: &FixedBitSet) -> FixedBitSet {
        self.closure(x)
    }
}

pub fn closure_s(gamma: &[Formula], u: &FormulaUniverse) -> Result<Vec<Formula>, ConsequenceError> {
    Ok(u.members(&Closure::s(u).closure(&u.subset(gamma)?)))
}

pub fn closure_sn(gamma: &[Formula], u: &FormulaUniverse, n: usize) -> Result<Vec<Formula>, ConsequenceError> {
    Ok(u.members(&Closure::s_n(u, n).closure(&u.subset(gamma)?)))
}

pub struct Identity<'u>(pub &'u FormulaUniverse);

impl ConsequenceOperator for Identity<'_> {
    fn name(&self) -> String {
        "identity".into()
    }
    fn universe(&self) -> &FormulaUniverse {
        self.0
    }
    fn apply(&self, x: &FixedBitSet) -> FixedBitSet {
        x.clone()
    }
}

/// Sends every set to ∅; not extensive.
pub struct EmptyMap<'u>(pub &'u FormulaUniverse);

impl ConsequenceOperator for EmptyMap<'_> {
    fn name(&self) -> String {
        "empty".into()
    }
    fn universe(&self) -> &FormulaUniverse {
        self.0
    }
    fn apply(&self, _: &FixedBitSet) -> FixedBitSet {
        self.0.empty_set()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub property: &'static str,
    pub cases: usize,
    /// The first counterexample found.
    pub violation: Option<String>,
}

impl PropertyCheck {
    fn new(property: &'static str) -> PropertyCheck {
        PropertyCheck { property, cases: 0, violation: None }
    }

    fn record(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.violation.is_none() {
            self.violation = Some(counterexample());
        }
    }

    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub operator: String,
    pub checks: Vec<PropertyCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(PropertyCheck::passed)
    }

    pub fn check(&self, property: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.property == property)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "operator {}", self.operator)?;
        for c in &self.checks {
            match &c.violation {
                None => writeln!(f, "{}: pass ({} cases)", c.property, c.cases)?,
                Some(v) => writeln!(f, "{}: fail, {v}", c.property)?,
            }
        }
        Ok(())
    }
}

fn union(a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut s = a.clone();
    s.union_with(b);
    s
}

/// Smallest subset D of `x` (by size, then index order) with `b ∈ C(D)`.
fn finite_support(op: &dyn ConsequenceOperator, x: &FixedBitSet, b: usize) -> Option<FixedBitSet> {
    let members: Vec<usize> = x.ones().collect();
    let n = op.universe().len();
    (0..=members.len()).flat_map(|r| members.iter().copied().combinations(r)).find_map(|c| {
        let mut d = FixedBitSet::with_capacity(n);
        c.into_iter().for_each(|i| d.insert(i));
        op.apply(&d).contains(b).then_some(d)
    })
}

/// Checks the operator axioms on every set in `samples`, and the derived
/// binary properties on every ordered pair drawn from `pair_samples`.
///
/// Per-set: range within the universe, extensivity, idempotence and finite
/// character. Per pair (A, B): monotonicity for A ⊆ A∪B, A ⊆ C(B) iff
/// C(A) ⊆ C(B), and C(A∪B) = C(A∪C(B)) = C(C(A)∪C(B)).
pub fn check_operator_axioms(
    op: &dyn ConsequenceOperator,
    samples: &[FixedBitSet],
    pair_samples: &[FixedBitSet],
) -> AxiomReport {
    let u = op.universe();
    let d = |s: &FixedBitSet| u.describe(s);
    let mut range = PropertyCheck::new("range");
    let mut extensive = PropertyCheck::new("extensivity");
    let mut idempotent = PropertyCheck::new("idempotence");
    let mut finite = PropertyCheck::new("finite character");
    for x in samples {
        let cx = op.apply(x);
        range.record(cx.ones().all(|i| i < u.len()), || format!("X = {}", d(x)));
        extensive.record(x.is_subset(&cx), || format!("X = {} not within C(X) = {}", d(x), d(&cx)));
        let ccx = op.apply(&cx);
        idempotent.record(ccx == cx, || format!("X = {}: C(C(X)) = {} but C(X) = {}", d(x), d(&ccx), d(&cx)));
        for b in cx.ones() {
            finite.record(finite_support(op, x, b).is_some(), || {
                format!("{} in C({}) has no finite support", u.formulas[b], d(x))
            });
        }
    }
    let mut monotone = PropertyCheck::new("monotonicity");
    let mut inclusion = PropertyCheck::new("subset-closure equivalence");
    let mut unions = PropertyCheck::new("union absorption");
    let images: Vec<FixedBitSet> = pair_samples.iter().map(|x| op.apply(x)).collect();
    for (i, a) in pair_samples.iter().enumerate() {
        for (j, b) in pair_samples.iter().enumerate() {
            let (ca, cb) = (&images[i], &images[j]);
            let ab = union(a, b);
            let cab = op.apply(&ab);
            monotone.record(ca.is_subset(&cab), || format!("A = {}, B = {}", d(a), d(&ab)));
            inclusion.record(a.is_subset(cb) == ca.is_subset(cb), || format!("A = {}, B = {}", d(a), d(b)));
            let second = op.apply(&union(a, cb));
            let third = op.apply(&union(ca, cb));
            unions.record(cab == second && second == third, || format!("A = {}, B = {}", d(a), d(b)));
        }
    }
    AxiomReport {
        operator: op.name(),
        checks: vec![range, extensive, idempotent, finite, monotone, inclusion, unions],
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentReport {
    /// {C(X)} equals {Y : Y = C(Y)} over the samples and their images.
    pub images_are_fixed_points: bool,
    pub fixed_points_are_images: bool,
    pub image_count: usize,
    /// Two distinct inputs with the same image.
    pub non_injective_witness: Option<(FixedBitSet, FixedBitSet)>,
    /// C(X) = X on every sample.
    pub identity_on_samples: bool,
}

impl IdempotentReport {
    /// Set equality holds, and injectivity on the samples forces identity.
    pub fn passed(&self) -> bool {
        self.images_are_fixed_points
            && self.fixed_points_are_images
            && (self.non_injective_witness.is_some() || self.identity_on_samples)
    }
}

/// Injectivity is judged over the samples together with their images: for an
/// idempotent C with C(X) ≠ X, the pair X, C(X) is already a witness.
pub fn idempotent_theorems(op: &dyn ConsequenceOperator, samples: &[FixedBitSet]) -> IdempotentReport {
    let mut image_of: HashMap<FixedBitSet, FixedBitSet> = HashMap::new();
    let mut witness = None;
    let mut identity = true;
    let mut note = |x: &FixedBitSet, cx: FixedBitSet, witness: &mut Option<(FixedBitSet, FixedBitSet)>| {
        match image_of.get(&cx) {
            Some(k) if k != x => {
                witness.get_or_insert_with(|| (k.clone(), x.clone()));
            }
            Some(_) => {}
            None => {
                image_of.insert(cx, x.clone());
            }
        }
    };
    let mut sample_images = Vec::with_capacity(samples.len());
    for x in samples {
        let cx = op.apply(x);
        identity &= cx == *x;
        sample_images.push(cx.clone());
        note(x, cx, &mut witness);
    }
    for y in &sample_images {
        note(y, op.apply(y), &mut witness);
    }
    let images: HashSet<&FixedBitSet> = sample_images.iter().collect();
    let images_are_fixed_points = images.iter().all(|y| op.apply(y) == **y);
    let fixed_points_are_images =
        samples.iter().chain(&sample_images).filter(|y| op.apply(y) == **y).all(|y| images.contains(y));
    IdempotentReport {
        images_are_fixed_points,
        fixed_points_are_images,
        image_count: images.len(),
        non_injective_witness: witness,
        identity_on_samples: identity,
    }
}
