//! Truth-value semantics for propositional formulas: assignments, tables,
//! validity, consequence by forcing or by table, satisfiability, and the
//! finite-scale maximal extension and compactness checks.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use thiserror::Error;

use crate::prop_syntax::{enumerate_level, print_atomic, print_unicode, size, Connective, Formula};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("atom {0} listed twice")]
    DuplicateAtom(String),
    #[error("assignment does not cover atom {0}")]
    UncoveredAtom(String),
    #[error("the input set is not satisfiable")]
    InputUnsatisfiable,
    #[error("subset cap exceeded after {} checks", .partial.subsets_checked)]
    CapExceeded { partial: CompactnessReport },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    pub atoms: Vec<Arc<str>>,
    pub values: Vec<bool>,
}

impl Assignment {
    pub fn new(atoms: Vec<Arc<str>>, values: Vec<bool>) -> Assignment {
        assert_eq!(atoms.len(), values.len(), "assignment atoms and values must align");
        Assignment { atoms, values }
    }

    pub fn from_pairs(pairs: &[(&str, bool)]) -> Assignment {
        Assignment {
            atoms: pairs.iter().map(|(a, _)| Arc::from(*a)).collect(),
            values: pairs.iter().map(|(_, v)| *v).collect(),
        }
    }

    pub fn get(&self, atom: &str) -> Option<bool> {
        self.atoms.iter().position(|a| &**a == atom).map(|i| self.values[i])
    }
}

fn tf(b: bool) -> &'static str {
    if b {
        "T"
    } else {
        "F"
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.atoms.iter().zip(&self.values).map(|(a, v)| format!("v({a})={}", tf(*v))).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Row r gives atom j the value T iff bit (n-1-j) of r is 0, so the first
/// atom is T on the first half of the rows.
pub fn canonical_row(n: usize, r: usize) -> Vec<bool> {
    (0..n).map(|j| (r >> (n - 1 - j)) & 1 == 0).collect()
}

pub fn canonical_assignments(atoms: &[Arc<str>]) -> Result<Vec<Assignment>, SemanticsError> {
    let mut seen = HashSet::new();
    for a in atoms {
        if !seen.insert(a) {
            return Err(SemanticsError::DuplicateAtom(a.to_string()));
        }
    }
    let n = atoms.len();
    Ok((0..1usize << n).map(|r| Assignment::new(atoms.to_vec(), canonical_row(n, r))).collect())
}

/// Union of atoms in first-occurrence order across the list.
pub fn atoms_of(fs: &[Formula]) -> Vec<Arc<str>> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for f in fs {
        f.collect_atoms(&mut out, &mut seen);
    }
    out
}

/// Valuation with atom lookup through a closure.
pub fn eval_with(f: &Formula, look: &impl Fn(&str) -> bool) -> bool {
    match f {
        Formula::Atom(n) => look(n),
        Formula::Not(a) => !eval_with(a, look),
        Formula::And(a, b) => eval_with(a, look) && eval_with(b, look),
        Formula::Or(a, b) => eval_with(a, look) || eval_with(b, look),
        Formula::Implies(a, b) => !eval_with(a, look) || eval_with(b, look),
        Formula::Iff(a, b) => eval_with(a, look) == eval_with(b, look),
    }
}

pub fn eval(f: &Formula, a: &Assignment) -> Result<bool, SemanticsError> {
    for atom in f.atoms() {
        if a.get(&atom).is_none() {
            return Err(SemanticsError::UncoveredAtom(atom.to_string()));
        }
    }
    let map: HashMap<&str, bool> = a.atoms.iter().map(|x| &**x).zip(a.values.iter().copied()).collect();
    Ok(eval_with(f, &|x| map[x]))
}

/// Evaluates over a row of values aligned with an atom index.
struct RowEval {
    atoms: Vec<Arc<str>>,
    index: HashMap<Arc<str>, usize>,
}

impl RowEval {
    fn new(atoms: Vec<Arc<str>>) -> RowEval {
        let index = atoms.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        RowEval { atoms, index }
    }

    fn eval(&self, f: &Formula, row: &[bool]) -> bool {
        eval_with(f, &|x| row[self.index[x]])
    }

    /// Three-valued evaluation under a partial row; `None` is undetermined.
    fn eval3(&self, f: &Formula, row: &[Option<bool>]) -> Option<bool> {
        match f {
            Formula::Atom(n) => row[self.index[n]],
            Formula::Not(a) => self.eval3(a, row).map(|v| !v),
            Formula::And(a, b) => match (self.eval3(a, row), self.eval3(b, row)) {
                (Some(false), _) | (_, Some(false)) => Some(false),
                (Some(true), Some(true)) => Some(true),
                _ => None,
            },
            Formula::Or(a, b) => match (self.eval3(a, row), self.eval3(b, row)) {
                (Some(true), _) | (_, Some(true)) => Some(true),
                (Some(false), Some(false)) => Some(false),
                _ => None,
            },
            Formula::Implies(a, b) => match (self.eval3(a, row), self.eval3(b, row)) {
                (Some(false), _) | (_, Some(true)) => Some(true),
                (Some(true), Some(false)) => Some(false),
                _ => None,
            },
            Formula::Iff(a, b) => match (self.eval3(a, row), self.eval3(b, row)) {
                (Some(x), Some(y)) => Some(x == y),
                _ => None,
            },
        }
    }

    fn assignment(&self, row: &[bool]) -> Assignment {
        Assignment::new(self.atoms.clone(), row.to_vec())
    }
}

// ---------------------------------------------------------------------------
// Tables and classification

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    pub atoms: Vec<Arc<str>>,
    pub columns: Vec<Formula>,
    /// `rows[r][c]` is the value of column c on canonical row r.
    pub rows: Vec<Vec<bool>>,
}

impl TruthTable {
    /// Atom values of row r.
    pub fn row_assignment(&self, r: usize) -> Assignment {
        Assignment::new(self.atoms.clone(), canonical_row(self.atoms.len(), r))
    }

    pub fn column(&self, c: usize) -> Vec<bool> {
        self.rows.iter().map(|row| row[c]).collect()
    }

    /// Text layout: header of atom names then formulas (¬ ∧ ∨ → ↔ spelling,
    /// so the `|` separator stays unambiguous), then one T/F line per row.
    pub fn render(&self) -> String {
        let mut head: Vec<String> = self.atoms.iter().map(|a| a.to_string()).collect();
        head.extend(self.columns.iter().map(print_unicode));
        let mut out = head.join(" | ");
        out.push('\n');
        for (r, row) in self.rows.iter().enumerate() {
            let mut cells: Vec<&str> = canonical_row(self.atoms.len(), r).into_iter().map(tf).collect();
            cells.extend(row.iter().map(|v| tf(*v)));
            out.push_str(&cells.join(" | "));
            out.push('\n');
        }
        out
    }
}

pub fn truth_table(fs: &[Formula]) -> TruthTable {
    let atoms = atoms_of(fs);
    let ev = RowEval::new(atoms.clone());
    let n = atoms.len();
    let rows = (0..1usize << n)
        .map(|r| {
            let row = canonical_row(n, r);
            fs.iter().map(|f| ev.eval(f, &row)).collect()
        })
        .collect();
    TruthTable { atoms, columns: fs.to_vec(), rows }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Valid,
    Contradiction,
    Contingent { satisfying: Assignment, falsifying: Assignment },
}

pub fn classify(f: &Formula) -> Classification {
    let ev = RowEval::new(f.atoms());
    let n = ev.atoms.len();
    let mut sat = None;
    let mut unsat = None;
    for r in 0..1usize << n {
        let row = canonical_row(n, r);
        let slot = if ev.eval(f, &row) { &mut sat } else { &mut unsat };
        if slot.is_none() {
            *slot = Some(ev.assignment(&row));
        }
        if sat.is_some() && unsat.is_some() {
            break;
        }
    }
    match (sat, unsat) {
        (Some(_), None) => Classification::Valid,
        (None, _) => Classification::Contradiction,
        (Some(satisfying), Some(falsifying)) => Classification::Contingent { satisfying, falsifying },
    }
}

pub fn is_valid(f: &Formula) -> bool {
    classify(f) == Classification::Valid
}

pub fn equivalent(a: &Formula, b: &Formula) -> bool {
    is_valid(&Formula::iff(a.clone(), b.clone()))
}

// ---------------------------------------------------------------------------
// Consequence and satisfiability

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Forcing,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConsequenceStatus {
    Valid,
    Invalid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsequenceVerdict {
    pub status: ConsequenceStatus,
    /// Present iff the status is `Invalid`.
    pub witness: Option<Assignment>,
    pub trace: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SatStatus {
    Satisfiable,
    Unsatisfiable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatVerdict {
    pub status: SatStatus,
    pub witness: Option<Assignment>,
    pub trace: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Reason {
    GoalFalse,
    Forced,
    CaseSplit,
    PremiseTrue,
}

impl Reason {
    fn as_str(self) -> &'static str {
        match self {
            Reason::GoalFalse => "goal-false",
            Reason::Forced => "forced",
            Reason::CaseSplit => "case-split",
            Reason::PremiseTrue => "premise-true",
        }
    }
}

/// Backtracking search in the style of the forcing method: fix the required
/// value of every constraint, propagate atom values that are forced, and
/// split on an atom when nothing more is forced.
struct Forcing<'a> {
    ev: RowEval,
    /// (formula, required value, is the goal)
    constraints: Vec<(&'a Formula, bool, bool)>,
    atoms_of: Vec<Vec<usize>>,
    trace: Vec<String>,
}

impl<'a> Forcing<'a> {
    fn new(atoms: Vec<Arc<str>>, constraints: Vec<(&'a Formula, bool, bool)>) -> Forcing<'a> {
        let ev = RowEval::new(atoms);
        let atoms_of = constraints.iter().map(|(f, _, _)| f.atoms().iter().map(|a| ev.index[a]).collect()).collect();
        Forcing { ev, constraints, atoms_of, trace: Vec::new() }
    }

    fn note(&mut self, what: &str, value: bool, reason: Reason) {
        let k = self.trace.len() + 1;
        self.trace.push(format!("step {k}: set v({what})={} because {}", tf(value), reason.as_str()));
    }

    fn set(&mut self, row: &mut [Option<bool>], atom: usize, value: bool, reason: Reason) {
        row[atom] = Some(value);
        let name = self.ev.atoms[atom].clone();
        self.note(&name, value, reason);
    }

    /// Returns false on a conflict.
    fn propagate(&mut self, row: &mut [Option<bool>]) -> bool {
        loop {
            let mut changed = false;
            for c in 0..self.constraints.len() {
                let (f, req, _) = self.constraints[c];
                match self.ev.eval3(f, row) {
                    Some(v) if v == req => continue,
                    Some(_) => return false,
                    None => {}
                }
                for &atom in &self.atoms_of[c].clone() {
                    if row[atom].is_some() {
                        continue;
                    }
                    let mut fails = [false; 2];
                    for (slot, value) in [true, false].into_iter().enumerate() {
                        row[atom] = Some(value);
                        fails[slot] = self.ev.eval3(f, row) == Some(!req);
                    }
                    row[atom] = None;
                    match fails {
                        [true, true] => return false,
                        [true, false] => self.set(row, atom, false, Reason::Forced),
                        [false, true] => self.set(row, atom, true, Reason::Forced),
                        [false, false] => continue,
                    }
                    changed = true;
                    if self.ev.eval3(f, row).is_some() {
                        break;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn search(&mut self, row: &mut Vec<Option<bool>>) -> bool {
        let saved = row.clone();
        if !self.propagate(row) {
            *row = saved;
            return false;
        }
        // Premises first, fewest unassigned atoms, ties by list order; the goal last.
        let open = (0..self.constraints.len())
            .filter(|&c| self.ev.eval3(self.constraints[c].0, row).is_none())
            .min_by_key(|&c| {
                let unassigned = self.atoms_of[c].iter().filter(|&&a| row[a].is_none()).count();
                (self.constraints[c].2, unassigned, c)
            });
        let Some(c) = open else {
            return true;
        };
        let atom = *self.atoms_of[c].iter().find(|&&a| row[a].is_none()).expect("open constraint has an unassigned atom");
        for value in [true, false] {
            let before = row.clone();
            self.set(row, atom, value, Reason::CaseSplit);
            if self.search(row) {
                return true;
            }
            *row = before;
        }
        *row = saved;
        false
    }

    /// Runs the search; a found row is completed with T for untouched atoms.
    fn run(mut self) -> (Option<Assignment>, Vec<String>) {
        for k in 0..self.constraints.len() {
            let (f, req, goal) = self.constraints[k];
            let reason = if goal { Reason::GoalFalse } else { Reason::PremiseTrue };
            self.note(&print_atomic(f), req, reason);
        }
        let mut row = vec![None; self.ev.atoms.len()];
        let found = self.search(&mut row);
        let witness = found.then(|| {
            let full: Vec<bool> = row.iter().map(|v| v.unwrap_or(true)).collect();
            self.ev.assignment(&full)
        });
        (witness, self.trace)
    }
}

fn table_search(atoms: Vec<Arc<str>>, constraints: &[(&Formula, bool)]) -> Option<Assignment> {
    let ev = RowEval::new(atoms);
    let n = ev.atoms.len();
    (0..1usize << n).map(|r| canonical_row(n, r)).find(|row| constraints.iter().all(|(f, req)| ev.eval(f, row) == *req)).map(|row| ev.assignment(&row))
}

pub fn valid_consequence(premises: &[Formula], b: &Formula, strategy: Strategy) -> ConsequenceVerdict {
    let mut all = premises.to_vec();
    all.push(b.clone());
    let atoms = atoms_of(&all);
    let (witness, trace) = match strategy {
        Strategy::Table => {
            let mut cs: Vec<(&Formula, bool)> = premises.iter().map(|p| (p, true)).collect();
            cs.push((b, false));
            (table_search(atoms, &cs), Vec::new())
        }
        Strategy::Forcing => {
            let mut cs = vec![(b, false, true)];
            cs.extend(premises.iter().map(|p| (p, true, false)));
            Forcing::new(atoms, cs).run()
        }
    };
    let status = if witness.is_some() { ConsequenceStatus::Invalid } else { ConsequenceStatus::Valid };
    ConsequenceVerdict { status, witness, trace }
}

pub fn satisfiable(fs: &[Formula]) -> SatVerdict {
    let cs = fs.iter().map(|f| (f, true, false)).collect();
    let (witness, trace) = Forcing::new(atoms_of(fs), cs).run();
    let status = if witness.is_some() { SatStatus::Satisfiable } else { SatStatus::Unsatisfiable };
    SatVerdict { status, witness, trace }
}

/// First satisfying row in canonical order.
pub fn satisfiable_by_table(fs: &[Formula]) -> Option<Assignment> {
    let cs: Vec<(&Formula, bool)> = fs.iter().map(|f| (f, true)).collect();
    table_search(atoms_of(fs), &cs)
}

/// Γ ⊨ B iff Γ ∪ {¬B} is unsatisfiable.
pub fn consequence_by_refutation(premises: &[Formula], b: &Formula) -> ConsequenceVerdict {
    let mut set = premises.to_vec();
    set.push(Formula::not(b.clone()));
    let sat = satisfiable(&set);
    let status = match sat.status {
        SatStatus::Satisfiable => ConsequenceStatus::Invalid,
        SatStatus::Unsatisfiable => ConsequenceStatus::Valid,
    };
    ConsequenceVerdict { status, witness: sat.witness, trace: sat.trace }
}

// ---------------------------------------------------------------------------
// Maximal extension and compactness

/// All formulas over `atoms` using `connectives` with size at most `max_size`,
/// ordered by size and then by printed form.
pub fn ordered_universe(atoms: &[&str], connectives: &[Connective], max_size: usize) -> Vec<Formula> {
    let mut fs = enumerate_level(atoms, connectives, max_size, u128::MAX).expect("universe fits the cap");
    fs.sort_by_cached_key(|f| (size(f), print_atomic(f)));
    fs
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub formulas: Vec<Formula>,
    pub assignment: Assignment,
}

/// Walks the universe in order and keeps each formula whose addition leaves
/// the set satisfiable, satisfiability standing in for formal consistency.
pub fn maximal_extension(gamma: &[Formula], universe: &[Formula]) -> Result<Extension, SemanticsError> {
    if satisfiable_by_table(gamma).is_none() {
        return Err(SemanticsError::InputUnsatisfiable);
    }
    let mut set = gamma.to_vec();
    let mut members: HashSet<Formula> = set.iter().cloned().collect();
    for a in universe {
        if members.contains(a) {
            continue;
        }
        set.push(a.clone());
        if satisfiable_by_table(&set).is_some() {
            members.insert(a.clone());
        } else {
            set.pop();
        }
    }
    let assignment = satisfiable_by_table(&set).expect("extension stays satisfiable");
    Ok(Extension { formulas: set, assignment })
}

/// Checks the finite-universe properties of an extension and returns a
/// description of every violation.
pub fn check_extension(gamma: &[Formula], universe: &[Formula], ext: &Extension) -> Vec<String> {
    let mut bad = Vec::new();
    let members: HashSet<&Formula> = ext.formulas.iter().collect();
    let in_universe: HashSet<&Formula> = universe.iter().collect();
    for g in gamma {
        if !members.contains(g) {
            bad.push(format!("input formula {g} missing"));
        }
    }
    if satisfiable_by_table(&ext.formulas).is_none() {
        bad.push("extension is unsatisfiable".into());
    }
    for f in &ext.formulas {
        if eval(f, &ext.assignment) != Ok(true) {
            bad.push(format!("assignment falsifies {f}"));
        }
    }
    for a in universe {
        let neg = Formula::not(a.clone());
        if in_universe.contains(&neg) && !members.contains(a) && !members.contains(&neg) {
            bad.push(format!("neither {a} nor its negation included"));
        }
        let entailed = valid_consequence(&ext.formulas, a, Strategy::Table).status == ConsequenceStatus::Valid;
        if entailed && !members.contains(a) {
            bad.push(format!("{a} is entailed but missing"));
        }
        if !members.contains(a) {
            let mut with = ext.formulas.clone();
            with.push(a.clone());
            if satisfiable_by_table(&with).is_some() {
                bad.push(format!("{a} could still be added"));
            }
        }
        if a.is_atom() {
            let v = ext.assignment.get(a.atom_name().unwrap());
            if v != Some(members.contains(a)) {
                bad.push(format!("assignment disagrees with membership of {a}"));
            }
        }
    }
    bad
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactnessReport {
    pub k: usize,
    pub subsets_checked: u64,
    /// 1-based indices of the first unsatisfiable subset found.
    pub first_unsatisfiable: Option<Vec<usize>>,
    /// False when only prefixes were checked.
    pub exhaustive: bool,
}

pub const DEFAULT_SUBSET_CAP: u64 = 1 << 16;

/// Checks every nonempty subset of {A₁..A_k}, smallest subsets first, or only
/// the prefixes {A₁..Aᵢ} when 2^k − 1 exceeds the cap.
pub fn finite_subsets_satisfiable(
    family: impl Fn(usize) -> Formula,
    k: usize,
    cap: u64,
) -> Result<CompactnessReport, SemanticsError> {
    let members: Vec<Formula> = (1..=k).map(&family).collect();
    let total = if k >= 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut report = CompactnessReport { k, subsets_checked: 0, first_unsatisfiable: None, exhaustive: total <= cap };
    if report.exhaustive {
        for r in 1..=k {
            for combo in (0..k).combinations(r) {
                report.subsets_checked += 1;
                let subset: Vec<Formula> = combo.iter().map(|&i| members[i].clone()).collect();
                if satisfiable_by_table(&subset).is_none() {
                    report.first_unsatisfiable = Some(combo.iter().map(|i| i + 1).collect());
                    return Ok(report);
                }
            }
        }
        return Ok(report);
    }
    for i in 1..=k {
        report.subsets_checked += 1;
        if satisfiable_by_table(&members[..i]).is_none() {
            report.first_unsatisfiable = Some((1..=i).collect());
            break;
        }
    }
    Err(SemanticsError::CapExceeded { partial: report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prop_syntax::parse;

    #[test]
    fn canonical_order_starts_all_true() {
        let atoms: Vec<Arc<str>> = ["P", "Q", "R"].iter().map(|a| Arc::from(*a)).collect();
        let rows = canonical_assignments(&atoms).unwrap();
        assert_eq!(rows[0].values, vec![true, true, true]);
        assert_eq!(rows[3].values, vec![true, false, false]);
        assert_eq!(rows[7].values, vec![false, false, false]);
    }

    #[test]
    fn forcing_trace_lines() {
        let v = valid_consequence(&[parse("P").unwrap()], &parse("P").unwrap(), Strategy::Forcing);
        assert_eq!(v.status, ConsequenceStatus::Valid);
        assert_eq!(v.trace[0], "step 1: set v(P)=F because goal-false");
        assert_eq!(v.trace[1], "step 2: set v(P)=T because premise-true");
    }

    #[test]
    fn uncovered_atom() {
        let a = Assignment::from_pairs(&[("P", true)]);
        assert_eq!(eval(&parse("P & Q").unwrap(), &a), Err(SemanticsError::UncoveredAtom("Q".into())));
    }
}
