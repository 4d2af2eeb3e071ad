//! Syntax of the propositional languages L and L′.
//!
//! Formulas are immutable trees with shared children, so cloning is cheap and
//! large generated proofs can reuse subtrees freely.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(Arc<str>),
    Not(Arc<Formula>),
    And(Arc<Formula>, Arc<Formula>),
    Or(Arc<Formula>, Arc<Formula>),
    Implies(Arc<Formula>, Arc<Formula>),
    Iff(Arc<Formula>, Arc<Formula>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connective {
    Not,
    And,
    Or,
    Implies,
    Iff,
}

impl Connective {
    pub const ALL: [Connective; 5] = [
        Connective::Not,
        Connective::And,
        Connective::Or,
        Connective::Implies,
        Connective::Iff,
    ];

    pub fn ascii(self) -> &'static str {
        match self {
            Connective::Not => "~",
            Connective::And => "&",
            Connective::Or => "|",
            Connective::Implies => "->",
            Connective::Iff => "<->",
        }
    }

    pub fn unicode(self) -> &'static str {
        match self {
            Connective::Not => "¬",
            Connective::And => "∧",
            Connective::Or => "∨",
            Connective::Implies => "→",
            Connective::Iff => "↔",
        }
    }

    /// Accepts either spelling, plus the words `not`, `and`, `or`, `implies`, `iff`.
    pub fn from_name(s: &str) -> Option<Connective> {
        Connective::ALL
            .into_iter()
            .find(|c| c.ascii() == s || c.unicode() == s || c.word() == s)
    }

    fn word(self) -> &'static str {
        match self {
            Connective::Not => "not",
            Connective::And => "and",
            Connective::Or => "or",
            Connective::Implies => "implies",
            Connective::Iff => "iff",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unbalanced parentheses at {position}")]
    UnbalancedParentheses { position: usize },
    #[error("no image given for atom {0}")]
    MissingImage(String),
    #[error("no subformula at position {0:?}")]
    BadPosition(Vec<usize>),
    #[error("level has {count} formulas, above the enumeration cap {cap}")]
    CapExceeded { count: u128, cap: u128 },
    #[error("level count does not fit in 128 bits")]
    CountOverflow,
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(Arc::from(name))
    }

    pub fn not(a: Formula) -> Formula {
        Formula::Not(Arc::new(a))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Arc::new(a), Arc::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Arc::new(a), Arc::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Arc::new(a), Arc::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Arc::new(a), Arc::new(b))
    }

    /// Builds a binary node (or a negation, ignoring `b`) for the connective.
    pub fn from_connective(c: Connective, a: Formula, b: Option<Formula>) -> Formula {
        let rhs = || b.clone().expect("binary connective needs two operands");
        match c {
            Connective::Not => Formula::not(a),
            Connective::And => Formula::and(a, rhs()),
            Connective::Or => Formula::or(a, rhs()),
            Connective::Implies => Formula::implies(a, rhs()),
            Connective::Iff => Formula::iff(a, rhs()),
        }
    }

    pub fn connective(&self) -> Option<Connective> {
        match self {
            Formula::Atom(_) => None,
            Formula::Not(_) => Some(Connective::Not),
            Formula::And(..) => Some(Connective::And),
            Formula::Or(..) => Some(Connective::Or),
            Formula::Implies(..) => Some(Connective::Implies),
            Formula::Iff(..) => Some(Connective::Iff),
        }
    }

    /// Immediate subformulas, left to right.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Atom(_) => vec![],
            Formula::Not(a) => vec![a],
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                vec![a, b]
            }
        }
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    pub fn atom_name(&self) -> Option<&str> {
        match self {
            Formula::Atom(n) => Some(n),
            _ => None,
        }
    }

    /// Atom names in order of first occurrence, reading left to right.
    pub fn atoms(&self) -> Vec<Arc<str>> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        self.collect_atoms(&mut out, &mut seen);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut Vec<Arc<str>>, seen: &mut HashSet<Arc<str>>) {
        match self {
            Formula::Atom(n) => {
                if seen.insert(n.clone()) {
                    out.push(n.clone());
                }
            }
            _ => {
                for c in self.children() {
                    c.collect_atoms(out, seen);
                }
            }
        }
    }

    pub fn connective_count(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            _ => 1 + self.children().iter().map(|c| c.connective_count()).sum::<usize>(),
        }
    }

    /// True when only `~` and `->` occur.
    pub fn is_lprime(&self) -> bool {
        match self {
            Formula::Atom(_) => true,
            Formula::Not(a) => a.is_lprime(),
            Formula::Implies(a, b) => a.is_lprime() && b.is_lprime(),
            _ => false,
        }
    }

    pub fn uses_only(&self, allowed: &[Connective]) -> bool {
        match self.connective() {
            None => true,
            Some(c) => allowed.contains(&c) && self.children().iter().all(|ch| ch.uses_only(allowed)),
        }
    }
}

// ---------------------------------------------------------------------------
// Parsing

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Atom(String),
    Op(Connective),
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
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
            '~' | '¬' => Tok::Op(Connective::Not),
            '&' | '∧' => Tok::Op(Connective::And),
            '|' | '∨' => Tok::Op(Connective::Or),
            '→' => Tok::Op(Connective::Implies),
            '↔' => Tok::Op(Connective::Iff),
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Tok::Op(Connective::Implies)
            }
            '<' if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') => {
                i += 2;
                Tok::Op(Connective::Iff)
            }
            'A'..='Z' => {
                let mut j = i + 1;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                let name: String = chars[i..j].iter().collect();
                i = j;
                toks.push((start, Tok::Atom(name)));
                continue;
            }
            _ => {
                return Err(SyntaxError::Parse {
                    position: i,
                    message: format!("unexpected character '{c}'"),
                })
            }
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

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError::Parse { position: self.offset(), message: message.into() })
    }

    fn eat_op(&mut self, c: Connective) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn formula(&mut self) -> Result<Formula, SyntaxError> {
        let mut lhs = self.imp()?;
        while self.eat_op(Connective::Iff) {
            let rhs = self.imp()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.or()?;
        if self.eat_op(Connective::Implies) {
            let rhs = self.imp()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    // ∧ and ∨ chains nest to the right, matching the flat printer.
    fn or(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.and()?;
        if self.eat_op(Connective::Or) {
            return Ok(Formula::or(lhs, self.or()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, SyntaxError> {
        let lhs = self.unary()?;
        if self.eat_op(Connective::And) {
            return Ok(Formula::and(lhs, self.and()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, SyntaxError> {
        match self.peek().cloned() {
            Some(Tok::Op(Connective::Not)) => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.formula()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Tok::Atom(name)) => {
                self.pos += 1;
                Ok(Formula::atom(&name))
            }
            Some(Tok::RParen) => self.err("parenthesis error: unexpected ')'"),
            Some(Tok::Op(c)) => self.err(format!("unexpected connective '{}'", c.ascii())),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a formula; input is rejected, never repaired.
pub fn parse(text: &str) -> Result<Formula, SyntaxError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, end: text.chars().count() };
    let f = p.formula()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(f)
}

impl std::str::FromStr for Formula {
    type Err = SyntaxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

// ---------------------------------------------------------------------------
// Printing

#[derive(Clone, Copy)]
enum Style {
    Ascii,
    Unicode,
}

fn write_formula(f: &Formula, style: Style, out: &mut String) {
    let sym = |c: Connective| match style {
        Style::Ascii => c.ascii(),
        Style::Unicode => c.unicode(),
    };
    let child = |g: &Formula, out: &mut String| {
        if g.is_atom() {
            write_formula(g, style, out);
        } else {
            out.push('(');
            write_formula(g, style, out);
            out.push(')');
        }
    };
    match f {
        Formula::Atom(n) => out.push_str(n),
        Formula::Not(a) => {
            out.push_str(sym(Connective::Not));
            child(a, out);
        }
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            child(a, out);
            out.push(' ');
            out.push_str(sym(f.connective().unwrap()));
            out.push(' ');
            child(b, out);
        }
    }
}

/// Atomic form: every compound subformula parenthesized, outermost pair removed.
pub fn print_atomic(f: &Formula) -> String {
    let mut s = String::new();
    write_formula(f, Style::Ascii, &mut s);
    s
}

/// Atomic form with the connectives spelled ¬ ∧ ∨ → ↔.
pub fn print_unicode(f: &Formula) -> String {
    let mut s = String::new();
    write_formula(f, Style::Unicode, &mut s);
    s
}

/// Atomic form with the outermost parentheses restored.
pub fn print_full(f: &Formula) -> String {
    if f.is_atom() {
        print_atomic(f)
    } else {
        format!("({})", print_atomic(f))
    }
}

/// Prints right-nested chains of `&` or `|` without inner parentheses, as in
/// `P & Q & ~R`; the parser reads such chains back with the same nesting.
pub fn print_flat(f: &Formula) -> String {
    fn flatten<'a>(f: &'a Formula, c: Connective, out: &mut Vec<&'a Formula>) {
        match f {
            Formula::And(a, b) if c == Connective::And => {
                out.push(a);
                flatten(b, c, out);
            }
            Formula::Or(a, b) if c == Connective::Or => {
                out.push(a);
                flatten(b, c, out);
            }
            _ => out.push(f),
        }
    }
    fn go(f: &Formula, top: bool) -> String {
        let body = match f {
            Formula::Atom(n) => return n.to_string(),
            Formula::Not(a) => return format!("~{}", go(a, false)),
            Formula::And(..) | Formula::Or(..) => {
                let c = f.connective().unwrap();
                let mut parts = Vec::new();
                flatten(f, c, &mut parts);
                parts
                    .iter()
                    .map(|p| go(p, false))
                    .collect::<Vec<_>>()
                    .join(&format!(" {} ", c.ascii()))
            }
            Formula::Implies(a, b) | Formula::Iff(a, b) => {
                format!("{} {} {}", go(a, false), f.connective().unwrap().ascii(), go(b, false))
            }
        };
        if top {
            body
        } else {
            format!("({body})")
        }
    }
    go(f, true)
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_atomic(self))
    }
}

// ---------------------------------------------------------------------------
// Size and the common pair rule

/// Least n with the formula in Lₙ.
pub fn size(f: &Formula) -> usize {
    match f {
        Formula::Atom(_) => 0,
        Formula::Not(a) => 1 + size(a),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            1 + size(a).max(size(b))
        }
    }
}

/// Maximum of the +1/−1 parenthesis counter over a fully parenthesized string.
pub fn cpr_max_counter(text: &str) -> Result<usize, SyntaxError> {
    let mut depth: i64 = 0;
    let mut max = 0;
    for (i, c) in text.chars().enumerate() {
        match c {
            '(' => {
                depth += 1;
                max = max.max(depth as usize);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(SyntaxError::UnbalancedParentheses { position: i });
                }
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(SyntaxError::UnbalancedParentheses { position: text.chars().count() });
    }
    Ok(max)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpanPair {
    pub open_index: usize,
    pub close_index: usize,
}

/// Pairs each left parenthesis with the parenthesis at which the running
/// counter, started at that left parenthesis, first returns to zero.
/// Pairs are listed by opening offset; offsets count characters.
pub fn common_pairs(text: &str) -> Result<Vec<SpanPair>, SyntaxError> {
    let mut stack = Vec::new();
    let mut pairs = Vec::new();
    for (i, c) in text.chars().enumerate() {
        match c {
            '(' => stack.push(i),
            ')' => {
                let open = stack.pop().ok_or(SyntaxError::UnbalancedParentheses { position: i })?;
                pairs.push(SpanPair { open_index: open, close_index: i });
            }
            _ => {}
        }
    }
    if let Some(&open) = stack.last() {
        return Err(SyntaxError::UnbalancedParentheses { position: open });
    }
    pairs.sort();
    Ok(pairs)
}

/// Every compound subtree plus the formula itself, in order of the opening
/// parenthesis in the fully parenthesized form (pre-order).
pub fn subformulas(f: &Formula) -> Vec<Formula> {
    fn go(f: &Formula, out: &mut Vec<Formula>) {
        if !f.is_atom() {
            out.push(f.clone());
        }
        for c in f.children() {
            go(c, out);
        }
    }
    let mut out = Vec::new();
    if f.is_atom() {
        out.push(f.clone());
    } else {
        go(f, &mut out);
    }
    out
}

// ---------------------------------------------------------------------------
// Substitution

/// Simultaneous replacement of every atom; the map must cover all atoms.
pub fn substitute_atoms(f: &Formula, s: &HashMap<String, Formula>) -> Result<Formula, SyntaxError> {
    for a in f.atoms() {
        if !s.contains_key(&*a) {
            return Err(SyntaxError::MissingImage(a.to_string()));
        }
    }
    Ok(substitute_atoms_partial(f, s))
}

/// Like [`substitute_atoms`], leaving atoms without an image untouched.
pub fn substitute_atoms_partial(f: &Formula, s: &HashMap<String, Formula>) -> Formula {
    match f {
        Formula::Atom(n) => s.get(&**n).cloned().unwrap_or_else(|| f.clone()),
        Formula::Not(a) => Formula::not(substitute_atoms_partial(a, s)),
        Formula::And(a, b) => Formula::and(substitute_atoms_partial(a, s), substitute_atoms_partial(b, s)),
        Formula::Or(a, b) => Formula::or(substitute_atoms_partial(a, s), substitute_atoms_partial(b, s)),
        Formula::Implies(a, b) => {
            Formula::implies(substitute_atoms_partial(a, s), substitute_atoms_partial(b, s))
        }
        Formula::Iff(a, b) => Formula::iff(substitute_atoms_partial(a, s), substitute_atoms_partial(b, s)),
    }
}

/// Occurrence addresses are child-index paths from the root (0 = left or only child).
pub fn subformula_at<'a>(f: &'a Formula, path: &[usize]) -> Option<&'a Formula> {
    let mut cur = f;
    for &i in path {
        cur = *cur.children().get(i)?;
    }
    Some(cur)
}

/// Paths of every occurrence of `sub` in `f`, in pre-order.
pub fn positions_of(f: &Formula, sub: &Formula) -> Vec<Vec<usize>> {
    fn go(f: &Formula, sub: &Formula, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if f == sub {
            out.push(path.clone());
        }
        for (i, c) in f.children().into_iter().enumerate() {
            path.push(i);
            go(c, sub, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(f, sub, &mut Vec::new(), &mut out);
    out
}

/// Replaces exactly the addressed occurrence.
pub fn substitute_subformula(c: &Formula, path: &[usize], b: &Formula) -> Result<Formula, SyntaxError> {
    fn go(c: &Formula, path: &[usize], b: &Formula) -> Option<Formula> {
        let Some((&i, rest)) = path.split_first() else {
            return Some(b.clone());
        };
        let rebuild = |x: &Formula| go(x, rest, b);
        Some(match (c, i) {
            (Formula::Not(a), 0) => Formula::not(rebuild(a)?),
            (Formula::And(l, r), _) | (Formula::Or(l, r), _) | (Formula::Implies(l, r), _) | (Formula::Iff(l, r), _) => {
                let (l, r) = match i {
                    0 => (rebuild(l)?, (**r).clone()),
                    1 => ((**l).clone(), rebuild(r)?),
                    _ => return None,
                };
                Formula::from_connective(c.connective().unwrap(), l, Some(r))
            }
            _ => return None,
        })
    }
    go(c, path, b).ok_or_else(|| SyntaxError::BadPosition(path.to_vec()))
}

// ---------------------------------------------------------------------------
// Levels

pub const DEFAULT_LEVEL_CAP: u128 = 5_000_000;

/// |Lₙ| for the inductive construction restricted to `connectives`:
/// L₀ is the atoms and Lₙ₊₁ adds one connective over members of Lₙ.
pub fn level_count(atoms: usize, connectives: &[Connective], n: usize) -> Result<u128, SyntaxError> {
    let unary = connectives.contains(&Connective::Not) as u128;
    let binary = connectives.iter().filter(|c| **c != Connective::Not).collect::<HashSet<_>>().len() as u128;
    let mut count = atoms as u128;
    for _ in 0..n {
        let sq = count.checked_mul(count).ok_or(SyntaxError::CountOverflow)?;
        count = binary
            .checked_mul(sq)
            .and_then(|x| x.checked_add(unary * count))
            .and_then(|x| x.checked_add(atoms as u128))
            .ok_or(SyntaxError::CountOverflow)?;
    }
    Ok(count)
}

/// Explicitly builds Lₙ with deduplication. Refuses when the predicted count
/// exceeds `cap`; the error carries the count.
pub fn enumerate_level(
    atoms: &[&str],
    connectives: &[Connective],
    n: usize,
    cap: u128,
) -> Result<Vec<Formula>, SyntaxError> {
    let distinct_atoms: HashSet<&str> = atoms.iter().copied().collect();
    let count = level_count(distinct_atoms.len(), connectives, n)?;
    if count > cap {
        return Err(SyntaxError::CapExceeded { count, cap });
    }
    let mut seen: HashSet<Formula> = HashSet::new();
    let mut level: Vec<Formula> = Vec::new();
    for a in atoms {
        let f = Formula::atom(a);
        if seen.insert(f.clone()) {
            level.push(f);
        }
    }
    let binary: Vec<Connective> = {
        let mut v: Vec<Connective> = connectives.iter().copied().filter(|c| *c != Connective::Not).collect();
        v.sort();
        v.dedup();
        v
    };
    for _ in 0..n {
        let prev: Vec<Arc<Formula>> = level.iter().cloned().map(Arc::new).collect();
        let mut next = level.clone();
        if connectives.contains(&Connective::Not) {
            for a in &prev {
                let f = Formula::Not(a.clone());
                if seen.insert(f.clone()) {
                    next.push(f);
                }
            }
        }
        for c in &binary {
            for a in &prev {
                for b in &prev {
                    let f = match c {
                        Connective::And => Formula::And(a.clone(), b.clone()),
                        Connective::Or => Formula::Or(a.clone(), b.clone()),
                        Connective::Implies => Formula::Implies(a.clone(), b.clone()),
                        Connective::Iff => Formula::Iff(a.clone(), b.clone()),
                        Connective::Not => unreachable!(),
                    };
                    if seen.insert(f.clone()) {
                        next.push(f);
                    }
                }
            }
        }
        level = next;
    }
    Ok(level)
}

// ---------------------------------------------------------------------------
// Translation into L′

/// Rewrites into ¬/→ only: A∨B as (¬A)→B, A∧B as ¬(A→(¬B)), and A↔B as the
/// translation of (A→B)∧(B→A).
pub fn to_lprime(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) => f.clone(),
        Formula::Not(a) => Formula::not(to_lprime(a)),
        Formula::Implies(a, b) => Formula::implies(to_lprime(a), to_lprime(b)),
        Formula::Or(a, b) => Formula::implies(Formula::not(to_lprime(a)), to_lprime(b)),
        Formula::And(a, b) => Formula::not(Formula::implies(to_lprime(a), Formula::not(to_lprime(b)))),
        Formula::Iff(a, b) => {
            let (a, b) = (to_lprime(a), to_lprime(b));
            let forward = Formula::implies(a.clone(), b.clone());
            let backward = Formula::implies(b, a);
            Formula::not(Formula::implies(forward, Formula::not(backward)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_associativity() {
        let f = parse("P -> Q -> R").unwrap();
        assert_eq!(print_atomic(&f), "P -> (Q -> R)");
        let g = parse("~P & Q | R <-> S").unwrap();
        assert_eq!(print_atomic(&g), "(((~P) & Q) | R) <-> S");
        assert_eq!(print_atomic(&parse("~~P").unwrap()), "~(~P)");
        assert_eq!(print_atomic(&parse("P & Q & R").unwrap()), "P & (Q & R)");
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(parse("¬P ∧ Q → R ↔ S ∨ P").unwrap(), parse("((~P & Q) -> R) <-> (S | P)").unwrap());
    }

    #[test]
    fn rejects_stray_parenthesis() {
        assert!(matches!(parse(")P) | ((~S))"), Err(SyntaxError::Parse { position: 0, .. })));
        assert!(parse("(P & Q").is_err());
        assert!(parse("P Q").is_err());
        assert!(parse("p").is_err());
    }

    #[test]
    fn flat_printing() {
        let f = parse("P & (Q & ~R)").unwrap();
        assert_eq!(print_flat(&f), "P & Q & ~R");
        assert_eq!(print_flat(&parse("(P & Q) & R").unwrap()), "(P & Q) & R");
    }

    #[test]
    fn level_zero_is_the_atoms() {
        assert_eq!(level_count(2, &[Connective::And], 0).unwrap(), 2);
        assert_eq!(enumerate_level(&["P", "Q"], &[Connective::And], 0, 10).unwrap().len(), 2);
    }
}
