//! Line-based proof scripts: `<n>. <formula> ; <reason>`.
//!
//! Optional `premise <formula>` lines declare the premise set; without them
//! the premises are the formulas of the premise steps.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Justification, Proof};
use crate::prop_syntax::{parse, Formula};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ScriptError {
    pub line: usize,
    pub message: String,
}

pub fn print_script(p: &Proof) -> String {
    let mut out = String::new();
    let step_premises: Vec<&Formula> =
        p.steps.iter().filter(|s| s.justification == Justification::Premise).map(|s| &s.formula).collect();
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

pub(crate) fn same_set<T: PartialEq>(declared: &[T], used: &[&T]) -> bool {
    declared.iter().all(|d| used.contains(&d)) && used.iter().all(|u| declared.contains(u))
}

fn reason_text(j: &Justification) -> String {
    match j {
        Justification::Premise => "premise".into(),
        Justification::P1(a, b) => format!("P1[{a}; {b}]"),
        Justification::P2(a, b, c) => format!("P2[{a}; {b}; {c}]"),
        Justification::P3(a, b) => format!("P3[{a}; {b}]"),
        Justification::MP(i, k) => format!("MP({i},{k})"),
        Justification::HS(i, k) => format!("HS({i},{k})"),
        Justification::Lemma { name, subst } => lemma_text(name, subst.iter().map(|(k, v)| (k.as_str(), v.to_string()))),
    }
}

pub(crate) fn lemma_text<'a>(name: &str, subst: impl Iterator<Item = (&'a str, String)>) -> String {
    let parts: Vec<String> = subst.map(|(k, v)| format!("{k}:={v}")).collect();
    if parts.is_empty() {
        format!("LEMMA {name}")
    } else {
        format!("LEMMA {name}[{}]", parts.join(", "))
    }
}

/// A reason before its formulas are parsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum RawReason {
    Premise,
    /// `P1[A; B]` and friends.
    Axiom { head: String, parts: Vec<String> },
    /// `MP(i,j)`, `HS(i,j)`, `GEN(i,x)`.
    Rule { head: String, args: Vec<String> },
    Lemma { name: String, subst: Vec<(String, String)> },
}

pub(crate) struct RawScript {
    pub premises: Vec<(usize, String)>,
    /// (line number, formula text, reason)
    pub steps: Vec<(usize, String, RawReason)>,
}

/// Splits on `sep` outside parentheses and brackets.
fn split_top(s: &str, sep: char) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if c == sep && depth == 0 {
            parts.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(c);
        }
    }
    parts.push(cur.trim().to_string());
    parts
}

fn parse_reason(text: &str, line: usize) -> Result<RawReason, ScriptError> {
    let err = |m: &str| ScriptError { line, message: format!("{m}: '{text}'") };
    let t = text.trim();
    if t.eq_ignore_ascii_case("premise") {
        return Ok(RawReason::Premise);
    }
    if let Some(rest) = t.strip_prefix("LEMMA") {
        let rest = rest.trim();
        let (name, args) = match rest.find('[') {
            Some(i) => {
                let inner = rest[i + 1..].strip_suffix(']').ok_or_else(|| err("unclosed '['"))?;
                (rest[..i].trim(), Some(inner))
            }
            None => (rest, None),
        };
        if name.is_empty() {
            return Err(err("missing lemma name"));
        }
        let mut subst = Vec::new();
        for part in args.map(|a| split_top(a, ',')).unwrap_or_default() {
            if part.is_empty() {
                continue;
            }
            let (k, v) = part.split_once(":=").ok_or_else(|| err("expected X:=formula"))?;
            subst.push((k.trim().to_string(), v.trim().to_string()));
        }
        return Ok(RawReason::Lemma { name: name.to_string(), subst });
    }
    if let Some(i) = t.find('[') {
        let inner = t[i + 1..].strip_suffix(']').ok_or_else(|| err("unclosed '['"))?;
        return Ok(RawReason::Axiom { head: t[..i].trim().to_string(), parts: split_top(inner, ';') });
    }
    if let Some(i) = t.find('(') {
        let inner = t[i + 1..].strip_suffix(')').ok_or_else(|| err("unclosed '('"))?;
        return Ok(RawReason::Rule { head: t[..i].trim().to_string(), args: split_top(inner, ',') });
    }
    Err(err("unrecognized reason"))
}

pub(crate) fn raw_script(text: &str) -> Result<RawScript, ScriptError> {
    let mut script = RawScript { premises: Vec::new(), steps: Vec::new() };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        if let Some(rest) = l.strip_prefix("premise ") {
            script.premises.push((line, rest.trim().to_string()));
            continue;
        }
        let (num, rest) = l.split_once('.').ok_or_else(|| ScriptError { line, message: "expected '<n>.'".into() })?;
        let n: usize = num.trim().parse().map_err(|_| ScriptError { line, message: format!("bad step number '{num}'") })?;
        if n != script.steps.len() + 1 {
            return Err(ScriptError { line, message: format!("expected step {}, found {n}", script.steps.len() + 1) });
        }
        let (formula, reason) =
            rest.split_once(';').ok_or_else(|| ScriptError { line, message: "expected '; <reason>'".into() })?;
        script.steps.push((line, formula.trim().to_string(), parse_reason(reason, line)?));
    }
    Ok(script)
}

pub(crate) fn parse_index(s: &str, line: usize) -> Result<usize, ScriptError> {
    s.trim().parse().map_err(|_| ScriptError { line, message: format!("bad step reference '{s}'") })
}

pub fn parse_script(text: &str) -> Result<Proof, ScriptError> {
    let raw = raw_script(text)?;
    let formula = |s: &str, line: usize| parse(s).map_err(|e| ScriptError { line, message: e.to_string() });
    let mut p = Proof::default();
    for (line, s) in &raw.premises {
        p.premises.push(formula(s, *line)?);
    }
    for (line, ftext, reason) in &raw.steps {
        let line = *line;
        let f = formula(ftext, line)?;
        let j = match reason {
            RawReason::Premise => Justification::Premise,
            RawReason::Axiom { head, parts } => {
                let ps: Vec<Formula> = parts.iter().map(|x| formula(x, line)).collect::<Result<_, _>>()?;
                match (head.as_str(), ps.as_slice()) {
                    ("P1", [a, b]) => Justification::P1(a.clone(), b.clone()),
                    ("P2", [a, b, c]) => Justification::P2(a.clone(), b.clone(), c.clone()),
                    ("P3", [a, b]) => Justification::P3(a.clone(), b.clone()),
                    _ => return Err(ScriptError { line, message: format!("bad axiom reason {head} with {} parts", ps.len()) }),
                }
            }
            RawReason::Rule { head, args } if args.len() == 2 && (head == "MP" || head == "HS") => {
                let (i, k) = (parse_index(&args[0], line)?, parse_index(&args[1], line)?);
                if head == "MP" {
                    Justification::MP(i, k)
                } else {
                    Justification::HS(i, k)
                }
            }
            RawReason::Rule { head, .. } => return Err(ScriptError { line, message: format!("unknown rule {head}") }),
            RawReason::Lemma { name, subst } => Justification::Lemma {
                name: name.clone(),
                subst: subst.iter().map(|(k, v)| Ok((k.clone(), formula(v, line)?))).collect::<Result<_, ScriptError>>()?,
            },
        };
        p.push(f, j);
    }
    if raw.premises.is_empty() {
        let mut seen = Vec::new();
        for s in &p.steps {
            if s.justification == Justification::Premise && !seen.contains(&s.formula) {
                seen.push(s.formula.clone());
            }
        }
        p.premises = seen;
    }
    Ok(p)
}
