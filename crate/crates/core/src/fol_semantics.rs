//! Finite structures, satisfaction, and bounded countermodel search.
//!
//! [`models`] follows the substitution semantics literally: a quantifier is
//! evaluated by substituting a constant minted for each domain element. The
//! search routines use a compiled evaluator with variable slots instead; the
//! two are cross-checked in the tests.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::fol_syntax::{subst_free, universal_closure, PdFormula, Quantifier, Term};

pub const STRUCTURE_SCHEMA: &str = "structure-v1";
/// Interpretations examined per domain size before giving up on that size.
pub const DEFAULT_INTERPRETATION_CAP: u64 = 1 << 20;
pub const DEFAULT_MAX_DOMAIN: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FolSemanticsError {
    #[error("schema error: {0}")]
    SchemaError(String),
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error("relation {relation} has arity {arity} but tuple {tuple} has length {found}")]
    ArityMismatch { relation: String, arity: usize, tuple: String, found: usize },
    #[error("symbol not interpreted by the structure: {0}")]
    UnknownSymbol(String),
}

/// A relation key: predicate name and arity.
pub type RelKey = (Arc<str>, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    pub domain: Vec<Arc<str>>,
    /// Constant name to element index.
    pub constants: BTreeMap<Arc<str>, usize>,
    /// Tuples of element indices.
    pub relations: BTreeMap<RelKey, BTreeSet<Vec<usize>>>,
}

/// Element ids `a`, `b`, …, `z`, then `e26`, `e27`, ….
pub fn element_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("e{i}")
    }
}

impl Structure {
    pub fn new(domain: &[&str]) -> Result<Structure, FolSemanticsError> {
        if domain.is_empty() {
            return Err(FolSemanticsError::DomainViolation("the domain is empty".into()));
        }
        if let Some(d) = domain.iter().duplicates().next() {
            return Err(FolSemanticsError::DomainViolation(format!("element {d} listed twice")));
        }
        Ok(Structure {
            domain: domain.iter().map(|d| Arc::from(*d)).collect(),
            constants: BTreeMap::new(),
            relations: BTreeMap::new(),
        })
    }

    /// Domain `a`, `b`, … of the given size.
    pub fn of_size(n: usize) -> Structure {
        let names: Vec<String> = (0..n).map(element_name).collect();
        Structure::new(&names.iter().map(String::as_str).collect::<Vec<_>>()).expect("nonempty domain")
    }

    pub fn element(&self, id: &str) -> Result<usize, FolSemanticsError> {
        self.domain
            .iter()
            .position(|d| &**d == id)
            .ok_or_else(|| FolSemanticsError::DomainViolation(format!("{id} is not in the domain")))
    }

    pub fn with_constant(mut self, name: &str, id: &str) -> Result<Structure, FolSemanticsError> {
        let e = self.element(id)?;
        self.constants.insert(name.into(), e);
        Ok(self)
    }

    pub fn with_relation(mut self, name: &str, arity: usize, tuples: &[&[&str]]) -> Result<Structure, FolSemanticsError> {
        let mut set = BTreeSet::new();
        for t in tuples {
            if t.len() != arity {
                return Err(FolSemanticsError::ArityMismatch {
                    relation: format!("{name}/{arity}"),
                    arity,
                    tuple: format!("{t:?}"),
                    found: t.len(),
                });
            }
            set.insert(t.iter().map(|id| self.element(id)).collect::<Result<Vec<_>, _>>()?);
        }
        self.relations.insert((name.into(), arity), set);
        Ok(self)
    }

    pub fn relation(&self, name: &str, arity: usize) -> Option<&BTreeSet<Vec<usize>>> {
        self.relations.get(&(Arc::from(name), arity))
    }

    /// The relation as element ids, for comparisons in tests and reports.
    pub fn relation_ids(&self, name: &str, arity: usize) -> Option<BTreeSet<Vec<&str>>> {
        self.relation(name, arity).map(|r| r.iter().map(|t| t.iter().map(|&e| &*self.domain[e]).collect()).collect())
    }

    pub fn to_json(&self) -> Value {
        let constants: Map<String, Value> =
            self.constants.iter().map(|(c, &e)| (c.to_string(), json!(&*self.domain[e]))).collect();
        let relations: Map<String, Value> = self
            .relations
            .iter()
            .map(|((p, k), ts)| {
                let tuples: Vec<Value> =
                    ts.iter().map(|t| Value::Array(t.iter().map(|&e| json!(&*self.domain[e])).collect())).collect();
                (format!("{p}/{k}"), Value::Array(tuples))
            })
            .collect();
        json!({
            "schema": STRUCTURE_SCHEMA,
            "domain": self.domain.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            "constants": constants,
            "relations": relations,
        })
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D = {{{}}}", self.domain.iter().join(", "))?;
        for (c, &e) in &self.constants {
            write!(f, "; {c} = {}", self.domain[e])?;
        }
        for ((p, k), ts) in &self.relations {
            if *k == 0 {
                write!(f, "; {p} = {}", if ts.is_empty() { "false" } else { "true" })?;
                continue;
            }
            let items = ts.iter().map(|t| {
                if *k == 1 {
                    self.domain[t[0]].to_string()
                } else {
                    format!("({})", t.iter().map(|&e| &*self.domain[e]).join(","))
                }
            });
            write!(f, "; {p} = {{{}}}", items.into_iter().join(", "))?;
        }
        Ok(())
    }
}

fn schema_err<T>(m: impl Into<String>) -> Result<T, FolSemanticsError> {
    Err(FolSemanticsError::SchemaError(m.into()))
}

/// Reads a `structure-v1` document.
pub fn load_structure(doc: &str) -> Result<Structure, FolSemanticsError> {
    let v: Value = serde_json::from_str(doc).map_err(|e| FolSemanticsError::SchemaError(e.to_string()))?;
    structure_from_json(&v)
}

pub fn structure_from_json(v: &Value) -> Result<Structure, FolSemanticsError> {
    let Some(obj) = v.as_object() else { return schema_err("expected a JSON object") };
    if let Some(s) = obj.get("schema") {
        if s.as_str() != Some(STRUCTURE_SCHEMA) {
            return schema_err(format!("unsupported schema {s}"));
        }
    }
    if let Some(k) = obj.keys().find(|k| !["schema", "domain", "constants", "relations"].contains(&k.as_str())) {
        return schema_err(format!("unknown key {k}"));
    }
    let Some(domain) = obj.get("domain").and_then(Value::as_array) else {
        return schema_err("missing domain array");
    };
    let ids: Vec<&str> = domain
        .iter()
        .map(|d| d.as_str().ok_or_else(|| FolSemanticsError::SchemaError(format!("element id {d} is not a string"))))
        .collect::<Result<_, _>>()?;
    let mut m = Structure::new(&ids)?;
    if let Some(cs) = obj.get("constants") {
        let Some(cs) = cs.as_object() else { return schema_err("constants must be an object") };
        for (c, id) in cs {
            let Some(id) = id.as_str() else { return schema_err(format!("constant {c} must map to an id")) };
            m = m.with_constant(c, id)?;
        }
    }
    if let Some(rs) = obj.get("relations") {
        let Some(rs) = rs.as_object() else { return schema_err("relations must be an object") };
        for (key, tuples) in rs {
            let Some((name, arity)) = key.split_once('/') else {
                return schema_err(format!("relation key {key} must be Name/arity"));
            };
            let Ok(arity) = arity.parse::<usize>() else { return schema_err(format!("bad arity in {key}")) };
            let Some(tuples) = tuples.as_array() else { return schema_err(format!("{key} must be a list of tuples")) };
            let mut ts: Vec<Vec<&str>> = Vec::new();
            for t in tuples {
                let Some(t) = t.as_array() else { return schema_err(format!("{key}: tuple {t} is not a list")) };
                let t: Vec<&str> = t
                    .iter()
                    .map(|e| e.as_str().ok_or_else(|| FolSemanticsError::SchemaError(format!("{key}: {e} is not an id"))))
                    .collect::<Result<_, _>>()?;
                ts.push(t);
            }
            let refs: Vec<&[&str]> = ts.iter().map(Vec::as_slice).collect();
            m = m.with_relation(name, arity, &refs)?;
        }
    }
    Ok(m)
}

// ---------------------------------------------------------------------------
// Satisfaction by substitution

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub quantifier: Quantifier,
    pub var: Arc<str>,
    /// The refuting element of a false ∀ or the witness of a true ∃.
    pub element: Option<usize>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelVerdict {
    pub holds: bool,
    /// Decisive quantifier instances, outermost first.
    pub trace: Vec<TraceEntry>,
}

impl ModelVerdict {
    pub fn render_trace(&self, m: &Structure) -> Vec<String> {
        self.trace
            .iter()
            .map(|t| {
                let (q, x) = (t.quantifier.keyword(), &t.var);
                match (t.quantifier, t.element) {
                    (Quantifier::Forall, Some(e)) => format!("{q} {x}: fails at {x} = {}", m.domain[e]),
                    (Quantifier::Exists, Some(e)) => format!("{q} {x}: witness {x} = {}", m.domain[e]),
                    (Quantifier::Forall, None) => format!("{q} {x}: holds for every element"),
                    (Quantifier::Exists, None) => format!("{q} {x}: no witness"),
                }
            })
            .collect()
    }
}

/// Checks that every predicate and constant of `f` is interpreted.
pub fn check_symbols(m: &Structure, f: &PdFormula) -> Result<(), FolSemanticsError> {
    for (p, k) in f.predicates() {
        if !m.relations.contains_key(&(p.clone(), k)) {
            return Err(FolSemanticsError::UnknownSymbol(format!("{p}/{k}")));
        }
    }
    for c in f.constants() {
        if !m.constants.contains_key(&c) {
            return Err(FolSemanticsError::UnknownSymbol(c.to_string()));
        }
    }
    Ok(())
}

struct SubstEval<'m> {
    m: &'m Structure,
    /// Minted constant per element; the prime keeps them apart from any
    /// parseable constant.
    names: Vec<Arc<str>>,
    minted: HashMap<Arc<str>, usize>,
}

impl SubstEval<'_> {
    fn term(&self, t: &Term) -> usize {
        match t {
            Term::Const(c) => self.minted.get(c).or_else(|| self.m.constants.get(c)).copied().expect("symbols checked"),
            Term::Var(v) => unreachable!("free variable {v} in a closed formula"),
        }
    }

    fn eval(&self, f: &PdFormula, trace: &mut Vec<TraceEntry>) -> bool {
        match f {
            PdFormula::Pred(p, args) => {
                let tuple: Vec<usize> = args.iter().map(|t| self.term(t)).collect();
                self.m.relations[&(p.clone(), args.len())].contains(&tuple)
            }
            PdFormula::Not(a) => !self.eval(a, trace),
            PdFormula::And(a, b) => self.eval(a, trace) && self.eval(b, trace),
            PdFormula::Or(a, b) => self.eval(a, trace) || self.eval(b, trace),
            PdFormula::Implies(a, b) => !self.eval(a, trace) || self.eval(b, trace),
            PdFormula::Iff(a, b) => self.eval(a, trace) == self.eval(b, trace),
            PdFormula::Forall(x, a) | PdFormula::Exists(x, a) => {
                let (q, _, _) = f.quantifier().unwrap();
                let want = q == Quantifier::Exists;
                let at = trace.len();
                for (e, name) in self.names.iter().enumerate() {
                    let mut sub = Vec::new();
                    if self.eval(&subst_free(a, x, &Term::Const(name.clone())), &mut sub) == want {
                        trace.insert(at, TraceEntry { quantifier: q, var: x.clone(), element: Some(e), holds: want });
                        trace.extend(sub);
                        return want;
                    }
                }
                trace.insert(at, TraceEntry { quantifier: q, var: x.clone(), element: None, holds: !want });
                !want
            }
        }
    }
}

/// Whether `m` satisfies the universal closure of `f`.
pub fn models(m: &Structure, f: &PdFormula) -> Result<ModelVerdict, FolSemanticsError> {
    check_symbols(m, f)?;
    let names: Vec<Arc<str>> = m.domain.iter().map(|d| Arc::from(format!("{d}′"))).collect();
    let minted = names.iter().cloned().enumerate().map(|(i, n)| (n, i)).collect();
    let ev = SubstEval { m, names, minted };
    let mut trace = Vec::new();
    let holds = ev.eval(&universal_closure(f), &mut trace);
    Ok(ModelVerdict { holds, trace })
}

// ---------------------------------------------------------------------------
// Compiled evaluation

#[derive(Debug, Clone)]
enum Slot {
    Var(usize),
    Const(usize),
}

#[derive(Debug, Clone)]
enum Compiled {
    Pred(usize, Vec<Slot>),
    Not(Box<Compiled>),
    And(Box<Compiled>, Box<Compiled>),
    Or(Box<Compiled>, Box<Compiled>),
    Implies(Box<Compiled>, Box<Compiled>),
    Iff(Box<Compiled>, Box<Compiled>),
    Quant(bool, usize, Box<Compiled>),
}

/// The predicates and constants a search has to interpret, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Signature {
    pub constants: Vec<Arc<str>>,
    pub predicates: Vec<RelKey>,
}

impl Signature {
    pub fn of(fs: &[PdFormula]) -> Signature {
        let constants: BTreeSet<Arc<str>> = fs.iter().flat_map(|f| f.constants()).collect();
        let predicates: BTreeSet<RelKey> = fs.iter().flat_map(|f| f.predicates()).collect();
        Signature { constants: constants.into_iter().collect(), predicates: predicates.into_iter().collect() }
    }
}

fn compile(f: &PdFormula, sig: &Signature, env: &mut Vec<Arc<str>>, slots: &mut usize) -> Compiled {
    let b = |g: &PdFormula, env: &mut Vec<Arc<str>>, slots: &mut usize| Box::new(compile(g, sig, env, slots));
    match f {
        PdFormula::Pred(p, args) => {
            let rel = sig.predicates.binary_search(&(p.clone(), args.len())).expect("signature covers formula");
            let args = args
                .iter()
                .map(|t| match t {
                    Term::Var(v) => Slot::Var(env.iter().rposition(|x| x == v).expect("closed formula")),
                    Term::Const(c) => Slot::Const(sig.constants.binary_search(c).expect("signature covers formula")),
                })
                .collect();
            Compiled::Pred(rel, args)
        }
        PdFormula::Not(a) => Compiled::Not(b(a, env, slots)),
        PdFormula::And(x, y) => Compiled::And(b(x, env, slots), b(y, env, slots)),
        PdFormula::Or(x, y) => Compiled::Or(b(x, env, slots), b(y, env, slots)),
        PdFormula::Implies(x, y) => Compiled::Implies(b(x, env, slots), b(y, env, slots)),
        PdFormula::Iff(x, y) => Compiled::Iff(b(x, env, slots), b(y, env, slots)),
        PdFormula::Forall(x, a) | PdFormula::Exists(x, a) => {
            let slot = env.len();
            *slots = (*slots).max(slot + 1);
            env.push(x.clone());
            let body = b(a, env, slots);
            env.pop();
            Compiled::Quant(matches!(f, PdFormula::Exists(..)), slot, body)
        }
    }
}

/// One interpretation over a domain of size `n`: constant images and, per
/// relation, a membership table indexed by the tuple's base-n code.
struct Interp {
    n: usize,
    consts: Vec<usize>,
    rels: Vec<Vec<bool>>,
}

fn eval_compiled(c: &Compiled, it: &Interp, vals: &mut [usize]) -> bool {
    match c {
        Compiled::Pred(r, args) => {
            let mut code = 0;
            for a in args {
                let e = match a {
                    Slot::Var(s) => vals[*s],
                    Slot::Const(k) => it.consts[*k],
                };
                code = code * it.n + e;
            }
            it.rels[*r][code]
        }
        Compiled::Not(a) => !eval_compiled(a, it, vals),
        Compiled::And(a, b) => eval_compiled(a, it, vals) && eval_compiled(b, it, vals),
        Compiled::Or(a, b) => eval_compiled(a, it, vals) || eval_compiled(b, it, vals),
        Compiled::Implies(a, b) => !eval_compiled(a, it, vals) || eval_compiled(b, it, vals),
        Compiled::Iff(a, b) => eval_compiled(a, it, vals) == eval_compiled(b, it, vals),
        Compiled::Quant(exists, slot, body) => {
            for e in 0..it.n {
                vals[*slot] = e;
                if eval_compiled(body, it, vals) == *exists {
                    return *exists;
                }
            }
            !*exists
        }
    }
}

fn tuple_of(code: usize, n: usize, arity: usize) -> Vec<usize> {
    let mut t = vec![0; arity];
    let mut c = code;
    for i in (0..arity).rev() {
        t[i] = c % n;
        c /= n;
    }
    t
}

fn to_interp(m: &Structure, sig: &Signature) -> Interp {
    let n = m.domain.len();
    Interp {
        n,
        consts: sig.constants.iter().map(|c| m.constants[c]).collect(),
        rels: sig
            .predicates
            .iter()
            .map(|(p, k)| {
                let set = &m.relations[&(p.clone(), *k)];
                (0..n.pow(*k as u32)).map(|code| set.contains(&tuple_of(code, n, *k))).collect()
            })
            .collect(),
    }
}

/// Satisfaction of the closure of `f`, via the compiled evaluator.
pub fn models_fast(m: &Structure, f: &PdFormula) -> Result<bool, FolSemanticsError> {
    check_symbols(m, f)?;
    let g = universal_closure(f);
    let sig = Signature::of(std::slice::from_ref(&g));
    let mut slots = 0;
    let c = compile(&g, &sig, &mut Vec::new(), &mut slots);
    let it = to_interp(m, &sig);
    Ok(eval_compiled(&c, &it, &mut vec![0; slots]))
}

// ---------------------------------------------------------------------------
// Enumeration of interpretations

/// All interpretations of `sig` over a domain of size `n`, in search order.
///
/// Constants come first and are most significant, each ranging over the
/// elements in order; then the predicates in signature order, the last one
/// varying fastest. Each relation runs through its subsets by cardinality,
/// and within one cardinality lexicographically by sorted tuple list.
pub struct Interpretations {
    n: usize,
    sig: Signature,
    /// Per relation, candidate tuple-code lists.
    candidates: Vec<Vec<Vec<usize>>>,
    digits: Vec<usize>,
    radices: Vec<usize>,
    done: bool,
}

/// Number of interpretations of `sig` over `n` elements, saturating.
pub fn interpretation_count(sig: &Signature, n: usize) -> u128 {
    let mut total: u128 = 1;
    for _ in &sig.constants {
        total = total.saturating_mul(n as u128);
    }
    for (_, k) in &sig.predicates {
        let tuples = (n as u128).checked_pow(*k as u32).unwrap_or(u128::MAX);
        let subsets = if tuples >= 127 { u128::MAX } else { 1u128 << tuples };
        total = total.saturating_mul(subsets);
    }
    total
}

impl Interpretations {
    /// Callers check [`interpretation_count`] against a cap first.
    pub fn new(sig: &Signature, n: usize) -> Interpretations {
        let candidates: Vec<Vec<Vec<usize>>> = sig
            .predicates
            .iter()
            .map(|(_, k)| {
                let t = n.pow(*k as u32);
                (0..=t).flat_map(|r| (0..t).combinations(r)).collect()
            })
            .collect();
        let mut radices = vec![n; sig.constants.len()];
        radices.extend(candidates.iter().map(Vec::len));
        Interpretations { n, sig: sig.clone(), digits: vec![0; radices.len()], radices, candidates, done: false }
    }

    fn current(&self) -> Interp {
        let nc = self.sig.constants.len();
        Interp {
            n: self.n,
            consts: self.digits[..nc].to_vec(),
            rels: self
                .candidates
                .iter()
                .enumerate()
                .map(|(r, cands)| {
                    let t = self.n.pow(self.sig.predicates[r].1 as u32);
                    let mut row = vec![false; t];
                    for &code in &cands[self.digits[nc + r]] {
                        row[code] = true;
                    }
                    row
                })
                .collect(),
        }
    }

    fn advance(&mut self) {
        for i in (0..self.digits.len()).rev() {
            self.digits[i] += 1;
            if self.digits[i] < self.radices[i] {
                return;
            }
            self.digits[i] = 0;
        }
        self.done = true;
    }

    fn structure(&self, it: &Interp) -> Structure {
        let mut m = Structure::of_size(self.n);
        for (c, &e) in self.sig.constants.iter().zip(&it.consts) {
            m.constants.insert(c.clone(), e);
        }
        for ((p, k), row) in self.sig.predicates.iter().zip(&it.rels) {
            let set = row.iter().enumerate().filter(|(_, &b)| b).map(|(code, _)| tuple_of(code, self.n, *k)).collect();
            m.relations.insert((p.clone(), *k), set);
        }
        m
    }
}

impl Iterator for Interpretations {
    type Item = Structure;

    fn next(&mut self) -> Option<Structure> {
        if self.done {
            return None;
        }
        let it = self.current();
        self.advance();
        Some(self.structure(&it))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeStatus {
    /// Every interpretation at this size passed.
    Holds,
    /// A structure at this size failed.
    Fails,
    /// More interpretations than the cap; not examined.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeReport {
    pub size: usize,
    pub status: SizeStatus,
    pub interpretations: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub sizes: Vec<SizeReport>,
    /// The first structure found, at the smallest size.
    pub found: Option<Structure>,
}

impl SearchReport {
    pub fn skipped_sizes(&self) -> Vec<usize> {
        self.sizes.iter().filter(|s| s.status == SizeStatus::Unknown).map(|s| s.size).collect()
    }
}

/// Searches sizes 1..=max_domain for the first structure satisfying the
/// closures of `positive` and falsifying the closures of `negative`.
/// With `stop` set the search ends at the first size with a hit.
fn search(positive: &[PdFormula], negative: &[PdFormula], max_domain: usize, cap: u64, stop: bool) -> SearchReport {
    let pos: Vec<PdFormula> = positive.iter().map(universal_closure).collect();
    let neg: Vec<PdFormula> = negative.iter().map(universal_closure).collect();
    let all: Vec<PdFormula> = pos.iter().chain(&neg).cloned().collect();
    let sig = Signature::of(&all);
    let mut slots = 0;
    let cp: Vec<Compiled> = pos.iter().map(|f| compile(f, &sig, &mut Vec::new(), &mut slots)).collect();
    let cn: Vec<Compiled> = neg.iter().map(|f| compile(f, &sig, &mut Vec::new(), &mut slots)).collect();
    let mut vals = vec![0; slots];
    let mut report = SearchReport { sizes: Vec::new(), found: None };
    for n in 1..=max_domain {
        let count = interpretation_count(&sig, n);
        if count > cap as u128 {
            report.sizes.push(SizeReport { size: n, status: SizeStatus::Unknown, interpretations: count });
            continue;
        }
        let mut interps = Interpretations::new(&sig, n);
        let mut status = SizeStatus::Holds;
        while !interps.done {
            let it = interps.current();
            interps.advance();
            if cp.iter().all(|c| eval_compiled(c, &it, &mut vals)) && cn.iter().all(|c| !eval_compiled(c, &it, &mut vals)) {
                status = SizeStatus::Fails;
                if report.found.is_none() {
                    report.found = Some(interps.structure(&it));
                }
                break;
            }
        }
        report.sizes.push(SizeReport { size: n, status, interpretations: count });
        if stop && report.found.is_some() {
            break;
        }
    }
    report
}

/// n-validity per domain size; `Fails` sizes have a countermodel and the
/// first one found is returned.
pub fn valid_over(f: &PdFormula, max_domain: usize, cap: u64) -> SearchReport {
    search(&[], std::slice::from_ref(f), max_domain, cap, false)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FolConsequence {
    Invalid(Structure),
    /// No countermodel with at most `max_domain` elements; not a proof of
    /// validity. `skipped` lists sizes beyond the cap.
    NoCountermodelUpTo { max_domain: usize, skipped: Vec<usize> },
}

pub fn fol_consequence(premises: &[PdFormula], b: &PdFormula, max_domain: usize, cap: u64) -> FolConsequence {
    let r = search(premises, std::slice::from_ref(b), max_domain, cap, true);
    match r.found {
        Some(m) => FolConsequence::Invalid(m),
        None => FolConsequence::NoCountermodelUpTo { max_domain, skipped: r.skipped_sizes() },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FolSatisfiable {
    Satisfiable(Structure),
    NoModelUpTo { max_domain: usize, skipped: Vec<usize> },
}

pub fn fol_satisfiable(premises: &[PdFormula], max_domain: usize, cap: u64) -> FolSatisfiable {
    let r = search(premises, &[], max_domain, cap, true);
    match r.found {
        Some(m) => FolSatisfiable::Satisfiable(m),
        None => FolSatisfiable::NoModelUpTo { max_domain, skipped: r.skipped_sizes() },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fol_syntax::parse_pd;

    #[test]
    fn subset_order_is_cardinality_then_lex() {
        let sig = Signature { constants: vec![], predicates: vec![("P".into(), 1)] };
        let seen: Vec<String> = Interpretations::new(&sig, 2).map(|m| m.to_string()).collect();
        assert_eq!(seen, ["D = {a, b}; P = {}", "D = {a, b}; P = {a}", "D = {a, b}; P = {b}", "D = {a, b}; P = {a, b}"]);
    }

    #[test]
    fn missing_relation_is_unknown_symbol() {
        let m = Structure::of_size(1);
        assert!(matches!(models(&m, &parse_pd("P(x)").unwrap()), Err(FolSemanticsError::UnknownSymbol(_))));
    }

    #[test]
    fn count_saturates() {
        let sig = Signature { constants: vec![], predicates: vec![("P".into(), 3)] };
        assert_eq!(interpretation_count(&sig, 6), u128::MAX);
        assert_eq!(interpretation_count(&sig, 2), 256);
    }
}
