//! First-order formulas over predicates and constants (no function symbols).
//!
//! Variables are `u`–`z` optionally followed by digits (`x`, `y1`, `w12`);
//! any other lowercase identifier is a constant. Predicates start with an
//! uppercase letter and may have zero arguments, written without parentheses.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(Arc<str>),
    Const(Arc<str>),
}

impl Term {
    /// Classifies an identifier by the lexical convention.
    pub fn named(name: &str) -> Term {
        if is_variable_name(name) {
            Term::Var(name.into())
        } else {
            Term::Const(name.into())
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Term::Var(n) | Term::Const(n) => n,
        }
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn is_variable_name(name: &str) -> bool {
    let mut cs = name.chars();
    matches!(cs.next(), Some('u'..='z')) && cs.all(|c| c.is_ascii_digit())
}

/// Canonical variable order: by letter (u < v < w < x < y < z), then by
/// subscript, with the bare letter first.
pub fn variable_key(name: &str) -> (char, i64) {
    let letter = name.chars().next().unwrap_or('z');
    let sub = name[letter.len_utf8()..].parse::<i64>().unwrap_or(-1);
    (letter, sub)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quantifier {
    Forall,
    Exists,
}

impl Quantifier {
    pub fn dual(self) -> Quantifier {
        match self {
            Quantifier::Forall => Quantifier::Exists,
            Quantifier::Exists => Quantifier::Forall,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Quantifier::Forall => "forall",
            Quantifier::Exists => "exists",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PdFormula {
    Pred(Arc<str>, Vec<Term>),
    Not(Arc<PdFormula>),
    And(Arc<PdFormula>, Arc<PdFormula>),
    Or(Arc<PdFormula>, Arc<PdFormula>),
    Implies(Arc<PdFormula>, Arc<PdFormula>),
    Iff(Arc<PdFormula>, Arc<PdFormula>),
    Forall(Arc<str>, Arc<PdFormula>),
    Exists(Arc<str>, Arc<PdFormula>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BinOp {
    And,
    Or,
    Implies,
    Iff,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::And => "&",
            BinOp::Or => "|",
            BinOp::Implies => "->",
            BinOp::Iff => "<->",
        }
    }

    fn build(self, a: PdFormula, b: PdFormula) -> PdFormula {
        match self {
            BinOp::And => PdFormula::and(a, b),
            BinOp::Or => PdFormula::or(a, b),
            BinOp::Implies => PdFormula::implies(a, b),
            BinOp::Iff => PdFormula::iff(a, b),
        }
    }
}

impl PdFormula {
    pub fn pred(name: &str, args: Vec<Term>) -> PdFormula {
        PdFormula::Pred(name.into(), args)
    }
    pub fn not(a: PdFormula) -> PdFormula {
        PdFormula::Not(Arc::new(a))
    }
    pub fn and(a: PdFormula, b: PdFormula) -> PdFormula {
        PdFormula::And(Arc::new(a), Arc::new(b))
    }
    pub fn or(a: PdFormula, b: PdFormula) -> PdFormula {
        PdFormula::Or(Arc::new(a), Arc::new(b))
    }
    pub fn implies(a: PdFormula, b: PdFormula) -> PdFormula {
        PdFormula::Implies(Arc::new(a), Arc::new(b))
    }
    pub fn iff(a: PdFormula, b: PdFormula) -> PdFormula {
        PdFormula::Iff(Arc::new(a), Arc::new(b))
    }
    pub fn forall(x: &str, a: PdFormula) -> PdFormula {
        PdFormula::Forall(x.into(), Arc::new(a))
    }
    pub fn exists(x: &str, a: PdFormula) -> PdFormula {
        PdFormula::Exists(x.into(), Arc::new(a))
    }
    pub fn quantified(q: Quantifier, x: &str, a: PdFormula) -> PdFormula {
        match q {
            Quantifier::Forall => PdFormula::forall(x, a),
            Quantifier::Exists => PdFormula::exists(x, a),
        }
    }

    fn binary(&self) -> Option<(BinOp, &PdFormula, &PdFormula)> {
        match self {
            PdFormula::And(a, b) => Some((BinOp::And, a, b)),
            PdFormula::Or(a, b) => Some((BinOp::Or, a, b)),
            PdFormula::Implies(a, b) => Some((BinOp::Implies, a, b)),
            PdFormula::Iff(a, b) => Some((BinOp::Iff, a, b)),
            _ => None,
        }
    }

    pub fn quantifier(&self) -> Option<(Quantifier, &str, &PdFormula)> {
        match self {
            PdFormula::Forall(x, a) => Some((Quantifier::Forall, x, a)),
            PdFormula::Exists(x, a) => Some((Quantifier::Exists, x, a)),
            _ => None,
        }
    }

    pub fn is_pred(&self) -> bool {
        matches!(self, PdFormula::Pred(..))
    }

    /// True when no existential quantifier occurs.
    pub fn is_pd_prime(&self) -> bool {
        match self {
            PdFormula::Pred(..) => true,
            PdFormula::Exists(..) => false,
            PdFormula::Not(a) | PdFormula::Forall(_, a) => a.is_pd_prime(),
            _ => {
                let (_, a, b) = self.binary().unwrap();
                a.is_pd_prime() && b.is_pd_prime()
            }
        }
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            PdFormula::Pred(..) => true,
            PdFormula::Forall(..) | PdFormula::Exists(..) => false,
            PdFormula::Not(a) => a.is_quantifier_free(),
            _ => {
                let (_, a, b) = self.binary().unwrap();
                a.is_quantifier_free() && b.is_quantifier_free()
            }
        }
    }

    fn visit_preds<'a>(&'a self, f: &mut impl FnMut(&'a str, &'a [Term])) {
        match self {
            PdFormula::Pred(p, args) => f(p, args),
            PdFormula::Not(a) | PdFormula::Forall(_, a) | PdFormula::Exists(_, a) => a.visit_preds(f),
            _ => {
                let (_, a, b) = self.binary().unwrap();
                a.visit_preds(f);
                b.visit_preds(f);
            }
        }
    }

    /// (name, arity) pairs, sorted and deduplicated.
    pub fn predicates(&self) -> Vec<(Arc<str>, usize)> {
        let mut out = BTreeSet::new();
        self.visit_preds(&mut |p, args| {
            out.insert((Arc::from(p), args.len()));
        });
        out.into_iter().collect()
    }

    /// Constant names, sorted.
    pub fn constants(&self) -> Vec<Arc<str>> {
        let mut out = BTreeSet::new();
        self.visit_preds(&mut |_, args| {
            for t in args {
                if let Term::Const(c) = t {
                    out.insert(c.clone());
                }
            }
        });
        out.into_iter().collect()
    }

    /// Every variable name occurring anywhere, bound, free or as a binder.
    pub fn all_variables(&self) -> HashSet<Arc<str>> {
        fn go(f: &PdFormula, out: &mut HashSet<Arc<str>>) {
            match f {
                PdFormula::Pred(_, args) => {
                    out.extend(args.iter().filter_map(|t| match t {
                        Term::Var(v) => Some(v.clone()),
                        Term::Const(_) => None,
                    }));
                }
                PdFormula::Not(a) => go(a, out),
                PdFormula::Forall(x, a) | PdFormula::Exists(x, a) => {
                    out.insert(x.clone());
                    go(a, out);
                }
                _ => {
                    let (_, a, b) = f.binary().unwrap();
                    go(a, out);
                    go(b, out);
                }
            }
        }
        let mut out = HashSet::new();
        go(self, &mut out);
        out
    }

    /// Free variables in canonical variable order.
    pub fn free_vars(&self) -> Vec<Arc<str>> {
        fn go(f: &PdFormula, bound: &mut Vec<Arc<str>>, out: &mut HashSet<Arc<str>>) {
            match f {
                PdFormula::Pred(_, args) => {
                    for t in args {
                        if let Term::Var(v) = t {
                            if !bound.contains(v) {
                                out.insert(v.clone());
                            }
                        }
                    }
                }
                PdFormula::Not(a) => go(a, bound, out),
                PdFormula::Forall(x, a) | PdFormula::Exists(x, a) => {
                    bound.push(x.clone());
                    go(a, bound, out);
                    bound.pop();
                }
                _ => {
                    let (_, a, b) = f.binary().unwrap();
                    go(a, bound, out);
                    go(b, bound, out);
                }
            }
        }
        let mut out = HashSet::new();
        go(self, &mut Vec::new(), &mut out);
        let mut v: Vec<Arc<str>> = out.into_iter().collect();
        v.sort_by_key(|x| variable_key(x));
        v
    }

    pub fn is_free(&self, x: &str) -> bool {
        self.free_vars().iter().any(|v| &**v == x)
    }
}

// ---------------------------------------------------------------------------
// Parsing

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FolSyntaxError {
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("predicate {predicate} used with arity {first} and {second}")]
    ArityMismatch { predicate: String, first: usize, second: usize },
    #[error("quantifier over constant {0}")]
    QuantifierOverConstant(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Quant(Quantifier),
    Not,
    Bin(BinOp),
    LParen,
    RParen,
    Comma,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, FolSyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '~' | '¬' => Tok::Not,
            '&' | '∧' => Tok::Bin(BinOp::And),
            '|' | '∨' => Tok::Bin(BinOp::Or),
            '→' => Tok::Bin(BinOp::Implies),
            '↔' => Tok::Bin(BinOp::Iff),
            '∀' => Tok::Quant(Quantifier::Forall),
            '∃' => Tok::Quant(Quantifier::Exists),
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Tok::Bin(BinOp::Implies)
            }
            '<' if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') => {
                i += 2;
                Tok::Bin(BinOp::Iff)
            }
            _ if c.is_ascii_alphabetic() => {
                let mut j = i + 1;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                let name: String = chars[i..j].iter().collect();
                i = j;
                toks.push((
                    start,
                    match name.as_str() {
                        "forall" => Tok::Quant(Quantifier::Forall),
                        "exists" => Tok::Quant(Quantifier::Exists),
                        _ => Tok::Ident(name),
                    },
                ));
                continue;
            }
            _ => return Err(FolSyntaxError::Parse { position: i, message: format!("unexpected character '{c}'") }),
        };
        toks.push((start, tok));
        i += 1;
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, FolSyntaxError> {
        let position = self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end);
        Err(FolSyntaxError::Parse { position, message: message.into() })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn formula(&mut self) -> Result<PdFormula, FolSyntaxError> {
        let mut lhs = self.imp()?;
        while self.eat(&Tok::Bin(BinOp::Iff)) {
            lhs = PdFormula::iff(lhs, self.imp()?);
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<PdFormula, FolSyntaxError> {
        let lhs = self.or()?;
        if self.eat(&Tok::Bin(BinOp::Implies)) {
            return Ok(PdFormula::implies(lhs, self.imp()?));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<PdFormula, FolSyntaxError> {
        let lhs = self.and()?;
        if self.eat(&Tok::Bin(BinOp::Or)) {
            return Ok(PdFormula::or(lhs, self.or()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<PdFormula, FolSyntaxError> {
        let lhs = self.unary()?;
        if self.eat(&Tok::Bin(BinOp::And)) {
            return Ok(PdFormula::and(lhs, self.and()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<PdFormula, FolSyntaxError> {
        match self.peek().cloned() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(PdFormula::not(self.unary()?))
            }
            Some(Tok::Quant(q)) => {
                self.pos += 1;
                let Some(Tok::Ident(x)) = self.peek().cloned() else {
                    return self.err("expected a variable after the quantifier");
                };
                if !is_variable_name(&x) {
                    return Err(FolSyntaxError::QuantifierOverConstant(x));
                }
                self.pos += 1;
                Ok(PdFormula::quantified(q, &x, self.unary()?))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.formula()?;
                if !self.eat(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some(Tok::Ident(name)) if name.starts_with(|c: char| c.is_ascii_uppercase()) => {
                self.pos += 1;
                let mut args = Vec::new();
                if self.eat(&Tok::LParen) {
                    loop {
                        match self.peek().cloned() {
                            Some(Tok::Ident(t)) if t.starts_with(|c: char| c.is_ascii_lowercase()) => {
                                self.pos += 1;
                                args.push(Term::named(&t));
                            }
                            _ => return self.err("expected a term"),
                        }
                        if self.eat(&Tok::RParen) {
                            break;
                        }
                        if !self.eat(&Tok::Comma) {
                            return self.err("expected ',' or ')'");
                        }
                    }
                }
                Ok(PdFormula::Pred(name.into(), args))
            }
            Some(Tok::Ident(name)) => self.err(format!("term '{name}' where a formula was expected")),
            Some(Tok::RParen) => self.err("parenthesis error: unexpected ')'"),
            Some(_) => self.err("unexpected connective"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses without the arity-consistency check.
pub fn parse_pd_lenient(text: &str) -> Result<PdFormula, FolSyntaxError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, end: text.chars().count() };
    let f = p.formula()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(f)
}

/// Parses and requires every predicate name to have one arity.
pub fn parse_pd(text: &str) -> Result<PdFormula, FolSyntaxError> {
    let f = parse_pd_lenient(text)?;
    check_arities(std::slice::from_ref(&f))?;
    Ok(f)
}

/// Arity consistency across a collection, as for a file of premises.
pub fn check_arities(fs: &[PdFormula]) -> Result<BTreeMap<Arc<str>, usize>, FolSyntaxError> {
    let mut seen: BTreeMap<Arc<str>, usize> = BTreeMap::new();
    let mut err = None;
    for f in fs {
        f.visit_preds(&mut |p, args| match seen.get(p) {
            Some(&k) if k != args.len() => {
                err.get_or_insert(FolSyntaxError::ArityMismatch { predicate: p.to_string(), first: k, second: args.len() });
            }
            Some(_) => {}
            None => {
                seen.insert(p.into(), args.len());
            }
        });
    }
    match err {
        Some(e) => Err(e),
        None => Ok(seen),
    }
}

impl std::str::FromStr for PdFormula {
    type Err = FolSyntaxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pd(s)
    }
}

// ---------------------------------------------------------------------------
// Printing

fn write_pd(f: &PdFormula, out: &mut String) {
    let child = |g: &PdFormula, out: &mut String| {
        if g.is_pred() {
            write_pd(g, out);
        } else {
            out.push('(');
            write_pd(g, out);
            out.push(')');
        }
    };
    match f {
        PdFormula::Pred(p, args) => {
            out.push_str(p);
            if !args.is_empty() {
                out.push('(');
                for (i, t) in args.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push_str(t.name());
                }
                out.push(')');
            }
        }
        PdFormula::Not(a) => {
            out.push('~');
            child(a, out);
        }
        PdFormula::Forall(x, a) | PdFormula::Exists(x, a) => {
            let (q, _, _) = f.quantifier().unwrap();
            out.push_str(q.keyword());
            out.push(' ');
            out.push_str(x);
            out.push(' ');
            child(a, out);
        }
        _ => {
            let (op, a, b) = f.binary().unwrap();
            child(a, out);
            out.push(' ');
            out.push_str(op.symbol());
            out.push(' ');
            child(b, out);
        }
    }
}

/// Every compound proper subformula parenthesized; predicates bare.
pub fn print_pd(f: &PdFormula) -> String {
    let mut s = String::new();
    write_pd(f, &mut s);
    s
}

impl fmt::Display for PdFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_pd(self))
    }
}

// ---------------------------------------------------------------------------
// Occurrences

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OccurrenceTag {
    Free,
    /// Bound by the quantifier with this pre-order index.
    Bound(usize),
    /// Constants count as bound.
    Constant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub symbol: Arc<str>,
    /// Left-to-right index among all term and binder occurrences.
    pub position: usize,
    pub tag: OccurrenceTag,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantifierInfo {
    pub index: usize,
    pub quantifier: Quantifier,
    pub var: Arc<str>,
    /// Position of the binder occurrence itself.
    pub position: usize,
    /// Inclusive range of occurrence positions inside the scope; `None` when
    /// the scope has no term occurrences.
    pub scope: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceReport {
    pub occurrences: Vec<Occurrence>,
    pub quantifiers: Vec<QuantifierInfo>,
    /// Variables with a free occurrence, in canonical order.
    pub free: Vec<Arc<str>>,
}

impl OccurrenceReport {
    /// Variables with at least one bound occurrence, binders included.
    pub fn bound(&self) -> Vec<Arc<str>> {
        let mut v: Vec<Arc<str>> = self
            .occurrences
            .iter()
            .filter(|o| matches!(o.tag, OccurrenceTag::Bound(_)))
            .map(|o| o.symbol.clone())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        v.sort_by_key(|x| variable_key(x));
        v
    }

    /// One line per occurrence, `symbol@position: tag`.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for o in &self.occurrences {
            let tag = match o.tag {
                OccurrenceTag::Free => "free".to_string(),
                OccurrenceTag::Bound(q) => format!("bound by quantifier {}", q + 1),
                OccurrenceTag::Constant => "constant".to_string(),
            };
            s.push_str(&format!("{}@{}: {tag}\n", o.symbol, o.position));
        }
        let free: Vec<&str> = self.free.iter().map(|v| &**v).collect();
        s.push_str(&format!("free: {{{}}}\n", free.join(", ")));
        s
    }
}

pub fn occurrences(f: &PdFormula) -> OccurrenceReport {
    struct Walk {
        occ: Vec<Occurrence>,
        quants: Vec<QuantifierInfo>,
        /// (variable, quantifier index) for enclosing binders, innermost last.
        env: Vec<(Arc<str>, usize)>,
    }
    impl Walk {
        fn go(&mut self, f: &PdFormula) {
            match f {
                PdFormula::Pred(_, args) => {
                    for t in args {
                        let tag = match t {
                            Term::Const(_) => OccurrenceTag::Constant,
                            Term::Var(v) => match self.env.iter().rev().find(|(x, _)| x == v) {
                                Some((_, q)) => OccurrenceTag::Bound(*q),
                                None => OccurrenceTag::Free,
                            },
                        };
                        let position = self.occ.len();
                        self.occ.push(Occurrence { symbol: t.name().into(), position, tag });
                    }
                }
                PdFormula::Not(a) => self.go(a),
                PdFormula::Forall(x, a) | PdFormula::Exists(x, a) => {
                    let index = self.quants.len();
                    let position = self.occ.len();
                    self.occ.push(Occurrence { symbol: x.clone(), position, tag: OccurrenceTag::Bound(index) });
                    let (quantifier, _, _) = f.quantifier().unwrap();
                    self.quants.push(QuantifierInfo { index, quantifier, var: x.clone(), position, scope: None });
                    self.env.push((x.clone(), index));
                    self.go(a);
                    self.env.pop();
                    let last = self.occ.len() - 1;
                    if last > position {
                        self.quants[index].scope = Some((position + 1, last));
                    }
                }
                _ => {
                    let (_, a, b) = f.binary().unwrap();
                    self.go(a);
                    self.go(b);
                }
            }
        }
    }
    let mut w = Walk { occ: Vec::new(), quants: Vec::new(), env: Vec::new() };
    w.go(f);
    OccurrenceReport { occurrences: w.occ, quantifiers: w.quants, free: f.free_vars() }
}

pub fn is_sentence(f: &PdFormula) -> bool {
    f.free_vars().is_empty()
}

// ---------------------------------------------------------------------------
// Congruence, substitution, closure

/// Renames every binder to `#k`, k its pre-order index; free names can never
/// collide with these.
fn canonical(f: &PdFormula) -> PdFormula {
    fn go(f: &PdFormula, env: &mut Vec<(Arc<str>, Arc<str>)>, next: &mut usize) -> PdFormula {
        match f {
            PdFormula::Pred(p, args) => PdFormula::Pred(
                p.clone(),
                args.iter()
                    .map(|t| match t {
                        Term::Var(v) => match env.iter().rev().find(|(x, _)| x == v) {
                            Some((_, c)) => Term::Var(c.clone()),
                            None => t.clone(),
                        },
                        Term::Const(_) => t.clone(),
                    })
                    .collect(),
            ),
            PdFormula::Not(a) => PdFormula::not(go(a, env, next)),
            PdFormula::Forall(x, a) | PdFormula::Exists(x, a) => {
                let (q, _, _) = f.quantifier().unwrap();
                let c: Arc<str> = format!("#{next}").into();
                *next += 1;
                env.push((x.clone(), c.clone()));
                let body = go(a, env, next);
                env.pop();
                PdFormula::quantified(q, &c, body)
            }
            _ => {
                let (op, a, b) = f.binary().unwrap();
                let a = go(a, env, next);
                op.build(a, go(b, env, next))
            }
        }
    }
    go(f, &mut Vec::new(), &mut 0)
}

/// Same tree up to a consistent renaming of bound variables.
pub fn congruent(a: &PdFormula, b: &PdFormula) -> bool {
    canonical(a) == canonical(b)
}

/// Replaces the free occurrences of `x` by `lam`.
pub fn subst_free(f: &PdFormula, x: &str, lam: &Term) -> PdFormula {
    match f {
        PdFormula::Pred(p, args) => PdFormula::Pred(
            p.clone(),
            args.iter().map(|t| if matches!(t, Term::Var(v) if &**v == x) { lam.clone() } else { t.clone() }).collect(),
        ),
        PdFormula::Not(a) => PdFormula::not(subst_free(a, x, lam)),
        PdFormula::Forall(y, _) | PdFormula::Exists(y, _) if &**y == x => f.clone(),
        PdFormula::Forall(y, a) | PdFormula::Exists(y, a) => {
            let (q, _, _) = f.quantifier().unwrap();
            PdFormula::quantified(q, y, subst_free(a, x, lam))
        }
        _ => {
            let (op, a, b) = f.binary().unwrap();
            op.build(subst_free(a, x, lam), subst_free(b, x, lam))
        }
    }
}

/// No free occurrence of `x` lies in the scope of a quantifier on `v`.
pub fn free_for(f: &PdFormula, x: &str, v: &str) -> bool {
    match f {
        PdFormula::Pred(..) => true,
        PdFormula::Not(a) => free_for(a, x, v),
        PdFormula::Forall(y, a) | PdFormula::Exists(y, a) => {
            if &**y == x {
                true
            } else if &**y == v {
                !a.is_free(x)
            } else {
                free_for(a, x, v)
            }
        }
        _ => {
            let (_, a, b) = f.binary().unwrap();
            free_for(a, x, v) && free_for(b, x, v)
        }
    }
}

/// `∀` over each free variable, the first in canonical order outermost.
pub fn universal_closure(f: &PdFormula) -> PdFormula {
    f.free_vars().iter().rev().fold(f.clone(), |acc, v| PdFormula::forall(v, acc))
}

// ---------------------------------------------------------------------------
// Prenex form

/// Candidate names for rectification: x, y, z, w, x1, y1, z1, w1, x2, …
fn fresh_names() -> impl Iterator<Item = String> {
    (0..).flat_map(|k: usize| {
        ["x", "y", "z", "w"].into_iter().map(move |b| if k == 0 { b.to_string() } else { format!("{b}{k}") })
    })
}

/// Renames binders so each binds a distinct variable that has no free
/// occurrence. Binders are visited in pre-order; a binder whose variable was
/// already used by an earlier binder, or occurs free, gets the first unused
/// candidate name. The result is congruent to the input.
pub fn rectify(f: &PdFormula) -> PdFormula {
    struct Ctx {
        used: HashSet<Arc<str>>,
        free: HashSet<Arc<str>>,
        bound: HashSet<Arc<str>>,
    }
    fn go(f: &PdFormula, cx: &mut Ctx) -> PdFormula {
        match f {
            PdFormula::Pred(..) => f.clone(),
            PdFormula::Not(a) => PdFormula::not(go(a, cx)),
            PdFormula::Forall(x, a) | PdFormula::Exists(x, a) => {
                let (q, _, _) = f.quantifier().unwrap();
                let (name, body): (Arc<str>, PdFormula) = if cx.bound.contains(x) || cx.free.contains(x) {
                    let n: Arc<str> = fresh_names().find(|c| !cx.used.contains(c.as_str())).unwrap().into();
                    cx.used.insert(n.clone());
                    let renamed = subst_free(a, x, &Term::Var(n.clone()));
                    (n, renamed)
                } else {
                    (x.clone(), (**a).clone())
                };
                cx.bound.insert(name.clone());
                let body = go(&body, cx);
                PdFormula::quantified(q, &name, body)
            }
            _ => {
                let (op, a, b) = f.binary().unwrap();
                let a = go(a, cx);
                op.build(a, go(b, cx))
            }
        }
    }
    let mut cx = Ctx { used: f.all_variables(), free: f.free_vars().into_iter().collect(), bound: HashSet::new() };
    go(f, &mut cx)
}

/// Rewrites → and ↔ as ∨/¬ wherever a quantifier lies below them;
/// quantifier-free subformulas are left as written.
fn eliminate_arrows(f: &PdFormula) -> PdFormula {
    if f.is_quantifier_free() {
        return f.clone();
    }
    match f {
        PdFormula::Pred(..) => f.clone(),
        PdFormula::Not(a) => PdFormula::not(eliminate_arrows(a)),
        PdFormula::Forall(x, a) | PdFormula::Exists(x, a) => {
            let (q, _, _) = f.quantifier().unwrap();
            PdFormula::quantified(q, x, eliminate_arrows(a))
        }
        PdFormula::Implies(a, b) => PdFormula::or(eliminate_arrows(b), PdFormula::not(eliminate_arrows(a))),
        PdFormula::Iff(a, b) => {
            let there = PdFormula::implies((**a).clone(), (**b).clone());
            let back = PdFormula::implies((**b).clone(), (**a).clone());
            PdFormula::and(eliminate_arrows(&there), eliminate_arrows(&back))
        }
        _ => {
            let (op, a, b) = f.binary().unwrap();
            op.build(eliminate_arrows(a), eliminate_arrows(b))
        }
    }
}

fn pull(f: &PdFormula) -> (Vec<(Quantifier, Arc<str>)>, PdFormula) {
    match f {
        PdFormula::Pred(..) => (Vec::new(), f.clone()),
        _ if f.is_quantifier_free() => (Vec::new(), f.clone()),
        PdFormula::Not(a) => {
            let (prefix, m) = pull(a);
            (prefix.into_iter().map(|(q, x)| (q.dual(), x)).collect(), PdFormula::not(m))
        }
        PdFormula::Forall(x, a) | PdFormula::Exists(x, a) => {
            let (q, _, _) = f.quantifier().unwrap();
            let (mut prefix, m) = pull(a);
            prefix.insert(0, (q, x.clone()));
            (prefix, m)
        }
        _ => {
            let (op, a, b) = f.binary().unwrap();
            let (mut pa, ma) = pull(a);
            let (pb, mb) = pull(b);
            pa.extend(pb);
            (pa, op.build(ma, mb))
        }
    }
}

/// An equivalent formula with all quantifiers in front of a quantifier-free
/// matrix.
///
/// Binders are rectified, → under a quantifier becomes `B ∨ ¬A` and ↔ a
/// conjunction of two implications, the result is rectified again, and then
/// quantifiers are pulled outward left to right, flipping under ¬.
pub fn prenex(f: &PdFormula) -> PdFormula {
    if f.is_quantifier_free() {
        return f.clone();
    }
    let g = rectify(&eliminate_arrows(&rectify(f)));
    let (prefix, matrix) = pull(&g);
    prefix.iter().rev().fold(matrix, |acc, (q, x)| PdFormula::quantified(*q, x, acc))
}

pub fn is_prenex(f: &PdFormula) -> bool {
    match f.quantifier() {
        Some((_, _, a)) => is_prenex(a),
        None => f.is_quantifier_free(),
    }
}
