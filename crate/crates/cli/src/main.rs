//! `logic`: command-line front end for logic-core.
//!
//! Verdict commands report the verdict in the exit code: 0 for the positive
//! answer, 1 for the negative one. Usage and parse errors exit with 2.

use std::collections::HashMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use logic_core::circuits::{compile_circuit, equivalent_netlists, half_adder, parse_netlist, simulate, simulate_bits, Netlist};
use logic_core::consequence_ops::{
    check_operator_axioms, idempotent_theorems, Closure, ConsequenceOperator, FormulaUniverse,
};
use logic_core::fol_proofs::{check_pd_proof, parse_pd_script, pd_deduction_transform, print_pd_script};
use logic_core::fol_semantics::{
    fol_consequence, load_structure, models, valid_over, FolConsequence, SizeStatus, Structure,
    DEFAULT_INTERPRETATION_CAP, DEFAULT_MAX_DOMAIN,
};
use logic_core::fol_syntax::{
    congruent, free_for, occurrences, parse_pd, prenex, subst_free, universal_closure, OccurrenceTag, PdFormula, Term,
};
use logic_core::normal_forms::{denial, fdnf, reduce_nf};
use logic_core::prop_semantics::{
    check_extension, classify, equivalent, maximal_extension, ordered_universe, satisfiable, truth_table,
    valid_consequence, Assignment, Classification, ConsequenceStatus, SatStatus, Strategy,
};
use logic_core::prop_syntax::{
    common_pairs, cpr_max_counter, enumerate_level, level_count, parse, print_atomic, print_flat, print_full,
    print_unicode, size, Connective, Formula, DEFAULT_LEVEL_CAP,
};
use logic_core::proof_kernel::{
    check_proof, deducibility_proof, deduction_transform, parse_script, print_script, synthesize_with_cap, verify_soundness,
    Proof, DEFAULT_SYNTH_ATOM_CAP,
};

#[derive(Parser)]
#[command(name = "logic", version, about = "Propositional and first-order logic toolkit")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest domain size for first-order model search.
    #[arg(long, global = true)]
    max_domain: Option<usize>,
    /// Work cap: enumeration size, synthesis atom count or interpretations per domain size.
    #[arg(long, global = true)]
    cap: Option<u64>,
    /// Print the decision trace as well.
    #[arg(long, global = true)]
    trace: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Forcing,
    Table,
}

#[derive(Args)]
struct Universe {
    /// Atoms, comma separated.
    #[arg(long, default_value = "P,Q")]
    atoms: String,
    /// Connectives by name (not, and, or, implies, iff) or symbol.
    #[arg(long, default_value = "and,implies,not")]
    connectives: String,
    #[arg(long, default_value_t = 2)]
    max_size: usize,
}

#[derive(Args)]
struct Premises {
    /// Premise formulas.
    premises: Vec<String>,
    /// Read further formulas from a file, one per line.
    #[arg(long)]
    file: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula and print its atomic form.
    Parse { formula: String },
    /// Construction level of a formula.
    Size { formula: String },
    /// Matched parenthesis pairs of a fully parenthesized string.
    Pairs { text: String },
    /// Level counts |L1|..|Ln|.
    Levels {
        #[arg(long, default_value = "P,Q")]
        atoms: String,
        #[arg(long, default_value = "and")]
        connectives: String,
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Also build each level explicitly and count distinct formulas.
        #[arg(long)]
        enumerate: bool,
    },
    /// Truth table of one or more formulas.
    Table { formulas: Vec<String> },
    /// valid, contradiction or contingent.
    Classify { formula: String },
    /// Exit 0 iff the formulas are equivalent.
    Equiv { a: String, b: String },
    /// Exit 0 iff the goal follows from the premises.
    Consequence {
        #[command(flatten)]
        premises: Premises,
        #[arg(long)]
        goal: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Forcing)]
        strategy: StrategyArg,
    },
    /// Exit 0 iff the formulas are jointly satisfiable.
    Sat {
        #[command(flatten)]
        premises: Premises,
    },
    /// Maximal satisfiable extension within a finite universe.
    Extend {
        #[command(flatten)]
        premises: Premises,
        #[command(flatten)]
        universe: Universe,
    },
    /// Full disjunctive normal form.
    Fdnf { formula: String },
    /// Denial of a formula in ∧/∨/¬ normal form.
    Denial { formula: String },
    /// Rewrite into ∧/∨ with negated atoms only.
    Nnf { formula: String },
    /// Check a proof script (path or -).
    ProveCheck { script: String },
    /// Discharge a premise by the deduction transform.
    Deduce {
        script: String,
        #[arg(long)]
        discharge: String,
    },
    /// Synthesize a primitive proof of a tautology.
    Synth { formula: String },
    /// Proof of f or ~f from the literals of one row, e.g. --row P=T,Q=F.
    Deducibility {
        formula: String,
        #[arg(long)]
        row: String,
    },
    /// Closure under the conjunction axioms and modus ponens on a finite universe.
    Closure {
        #[command(flatten)]
        premises: Premises,
        #[command(flatten)]
        universe: Universe,
        /// Restrict modus ponens to implications of at most this size.
        #[arg(long)]
        level: Option<usize>,
    },
    /// Check the consequence-operator axioms of S or Sn exhaustively.
    OpCheck {
        #[command(flatten)]
        universe: Universe,
        #[arg(long)]
        level: Option<usize>,
    },
    /// Parse a first-order formula.
    PdParse { formula: String },
    /// Free and bound occurrences.
    Occ { formula: String },
    /// Exit 0 iff the formulas differ only in bound variable names.
    Congruent { a: String, b: String },
    /// Substitute a term for the free occurrences of a variable.
    Subst {
        formula: String,
        #[arg(long)]
        var: String,
        #[arg(long)]
        term: String,
    },
    /// Universal closure.
    ClosureUniv { formula: String },
    /// Prenex form.
    Prenex { formula: String },
    /// Evaluate a formula in a structure given as a JSON file.
    Model {
        #[arg(long)]
        structure: String,
        formula: String,
    },
    /// Search for a countermodel; exit 1 when one is found.
    Countermodel { formula: String },
    /// Exit 0 iff no countermodel exists up to the domain bound.
    PdConsequence {
        #[command(flatten)]
        premises: Premises,
        #[arg(long)]
        goal: String,
    },
    /// Check a first-order proof script.
    PdProveCheck { script: String },
    /// First-order deduction transform.
    PdDeduce {
        script: String,
        #[arg(long)]
        discharge: String,
    },
    /// Compile a {~, &, |} formula to a netlist.
    Compile { formula: String },
    /// Simulate a netlist; without --inputs, prints every input row.
    Simulate {
        /// Netlist file, -, `half-adder`, or a formula to compile.
        netlist: String,
        /// Input values, e.g. A=1,B=0.
        #[arg(long)]
        inputs: Option<String>,
    },
    /// Exit 0 iff the two netlists compute the same outputs.
    CircuitEquiv { a: String, b: String },
}

struct Outcome {
    text: String,
    json: Value,
    code: u8,
}

impl Outcome {
    fn ok(text: impl Into<String>, json: Value) -> Outcome {
        Outcome { text: text.into(), json, code: 0 }
    }

    fn verdict(positive: bool, text: impl Into<String>, json: Value) -> Outcome {
        Outcome { text: text.into(), json, code: if positive { 0 } else { 1 } }
    }
}

type Res<T> = Result<T, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(o) => {
            let mut out = match cli.format {
                Format::Text => o.text,
                Format::Json => serde_json::to_string_pretty(&o.json).expect("json values serialize"),
            };
            if !out.is_empty() && !out.ends_with('\n') {
                out.push('\n');
            }
            // A closed pipe downstream is not an error worth reporting.
            let _ = io::stdout().write_all(out.as_bytes());
            ExitCode::from(o.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn formula(s: &str) -> Res<Formula> {
    parse(s).map_err(|e| format!("{s}: {e}"))
}

fn pd(s: &str) -> Res<PdFormula> {
    parse_pd(s).map_err(|e| format!("{s}: {e}"))
}

fn read_source(src: &str) -> Res<String> {
    if src == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
        Ok(s)
    } else {
        fs::read_to_string(src).map_err(|e| format!("{src}: {e}"))
    }
}

/// Positional formula strings followed by the non-comment lines of `--file`.
fn premise_texts(p: &Premises) -> Res<Vec<String>> {
    let mut out = p.premises.clone();
    if let Some(path) = &p.file {
        let text = read_source(path)?;
        out.extend(
            text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(String::from),
        );
    }
    Ok(out)
}

fn prop_premises(p: &Premises) -> Res<Vec<Formula>> {
    premise_texts(p)?.iter().map(|s| formula(s)).collect()
}

fn pd_premises(p: &Premises) -> Res<Vec<PdFormula>> {
    premise_texts(p)?.iter().map(|s| pd(s)).collect()
}

fn connectives(s: &str) -> Res<Vec<Connective>> {
    s.split(',')
        .map(str::trim)
        .map(|c| Connective::from_name(c).ok_or_else(|| format!("unknown connective '{c}'")))
        .collect()
}

fn atom_list(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|a| !a.is_empty()).collect()
}

fn assignment_json(a: &Assignment) -> Value {
    Value::Object(a.atoms.iter().zip(&a.values).map(|(k, v)| (k.to_string(), json!(v))).collect())
}

fn strs<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn lines<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| format!("{}\n", x.to_string())).collect()
}

fn parse_bool(v: &str) -> Res<bool> {
    match v {
        "T" | "t" | "1" | "true" => Ok(true),
        "F" | "f" | "0" | "false" => Ok(false),
        _ => Err(format!("cannot read truth value '{v}'")),
    }
}

fn parse_pairs(s: &str) -> Res<Vec<(String, bool)>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let (k, v) = p.split_once('=').ok_or_else(|| format!("expected NAME=VALUE, got '{p}'"))?;
            Ok((k.trim().to_string(), parse_bool(v.trim())?))
        })
        .collect()
}

fn load_proof(src: &str) -> Res<Proof> {
    parse_script(&read_source(src)?).map_err(|e| e.to_string())
}

fn universe(u: &Universe) -> Res<FormulaUniverse> {
    Ok(FormulaUniverse::generate(&atom_list(&u.atoms), &connectives(&u.connectives)?, u.max_size))
}

/// A netlist argument: `half-adder`, `-`, an existing file, or a formula to compile.
fn netlist(arg: &str) -> Res<Netlist> {
    if arg == "half-adder" {
        return Ok(half_adder());
    }
    if arg == "-" || Path::new(arg).is_file() {
        return parse_netlist(&read_source(arg)?).map_err(|e| format!("{arg}: {e}"));
    }
    compile_circuit(&formula(arg)?).map_err(|e| e.to_string())
}

fn bit(b: bool) -> &'static str {
    if b {
        "1"
    } else {
        "0"
    }
}

fn run(cli: &Cli) -> Res<Outcome> {
    let max_domain = cli.max_domain.unwrap_or(DEFAULT_MAX_DOMAIN);
    let fol_cap = cli.cap.unwrap_or(DEFAULT_INTERPRETATION_CAP);
    Ok(match &cli.command {
        Command::Parse { formula: s } => {
            let f = formula(s)?;
            let j = json!({
                "atomic": print_atomic(&f),
                "unicode": print_unicode(&f),
                "full": print_full(&f),
                "flat": print_flat(&f),
                "size": size(&f),
                "atoms": strs(&f.atoms()),
            });
            Outcome::ok(print_atomic(&f), j)
        }
        Command::Size { formula: s } => {
            let n = size(&formula(s)?);
            Outcome::ok(n.to_string(), json!({ "size": n }))
        }
        Command::Pairs { text } => {
            let pairs = common_pairs(text).map_err(|e| e.to_string())?;
            let max = cpr_max_counter(text).map_err(|e| e.to_string())?;
            let mut t: String = pairs.iter().map(|p| format!("{} {}\n", p.open_index, p.close_index)).collect();
            t.push_str(&format!("max depth {max}\n"));
            let j = json!({
                "pairs": pairs.iter().map(|p| json!([p.open_index, p.close_index])).collect::<Vec<_>>(),
                "max_depth": max,
            });
            Outcome::ok(t, j)
        }
        Command::Levels { atoms, connectives: cs, n, enumerate } => {
            let atoms = atom_list(atoms);
            let cs = connectives(cs)?;
            let cap = cli.cap.map_or(DEFAULT_LEVEL_CAP, u128::from);
            let mut t = String::new();
            let mut rows = Vec::new();
            for k in 1..=*n {
                let count = level_count(atoms.len(), &cs, k).map_err(|e| e.to_string())?;
                let built = if *enumerate {
                    Some(enumerate_level(&atoms, &cs, k, cap).map_err(|e| e.to_string())?.len())
                } else {
                    None
                };
                match built {
                    Some(b) => t.push_str(&format!("L{k}: {count} (enumerated {b})\n")),
                    None => t.push_str(&format!("L{k}: {count}\n")),
                }
                rows.push(json!({ "n": k, "count": count.to_string(), "enumerated": built }));
            }
            Outcome::ok(t, json!({ "levels": rows }))
        }
        Command::Table { formulas } => {
            let fs: Vec<Formula> = formulas.iter().map(|s| formula(s)).collect::<Res<_>>()?;
            let tt = truth_table(&fs);
            let j = json!({
                "atoms": strs(&tt.atoms),
                "columns": fs.iter().map(print_unicode).collect::<Vec<_>>(),
                "rows": tt.rows,
            });
            Outcome::ok(tt.render(), j)
        }
        Command::Classify { formula: s } => {
            let f = formula(s)?;
            match classify(&f) {
                Classification::Valid => Outcome::ok("valid", json!({ "class": "valid" })),
                Classification::Contradiction => Outcome::ok("contradiction", json!({ "class": "contradiction" })),
                Classification::Contingent { satisfying, falsifying } => Outcome::ok(
                    format!("contingent\ntrue at: {satisfying}\nfalse at: {falsifying}"),
                    json!({
                        "class": "contingent",
                        "satisfying": assignment_json(&satisfying),
                        "falsifying": assignment_json(&falsifying),
                    }),
                ),
            }
        }
        Command::Equiv { a, b } => {
            let yes = equivalent(&formula(a)?, &formula(b)?);
            let word = if yes { "equivalent" } else { "not equivalent" };
            Outcome::verdict(yes, word, json!({ "equivalent": yes }))
        }
        Command::Consequence { premises, goal, strategy } => {
            let ps = prop_premises(premises)?;
            let g = formula(goal)?;
            let strategy = match strategy {
                StrategyArg::Forcing => Strategy::Forcing,
                StrategyArg::Table => Strategy::Table,
            };
            let v = valid_consequence(&ps, &g, strategy);
            let valid = v.status == ConsequenceStatus::Valid;
            let mut t = String::from(if valid { "valid\n" } else { "invalid\n" });
            if let Some(w) = &v.witness {
                t.push_str(&format!("countermodel: {w}\n"));
            }
            if cli.trace {
                t.push_str(&lines(&v.trace));
            }
            let j = json!({
                "valid": valid,
                "witness": v.witness.as_ref().map(assignment_json),
                "trace": v.trace,
            });
            Outcome::verdict(valid, t, j)
        }
        Command::Sat { premises } => {
            let ps = prop_premises(premises)?;
            let v = satisfiable(&ps);
            let sat = v.status == SatStatus::Satisfiable;
            let mut t = String::from(if sat { "satisfiable\n" } else { "unsatisfiable\n" });
            if let Some(w) = &v.witness {
                t.push_str(&format!("model: {w}\n"));
            }
            if cli.trace {
                t.push_str(&lines(&v.trace));
            }
            let j = json!({
                "satisfiable": sat,
                "witness": v.witness.as_ref().map(assignment_json),
                "trace": v.trace,
            });
            Outcome::verdict(sat, t, j)
        }
        Command::Extend { premises, universe: u } => {
            let gamma = prop_premises(premises)?;
            let uni = ordered_universe(&atom_list(&u.atoms), &connectives(&u.connectives)?, u.max_size);
            let ext = maximal_extension(&gamma, &uni).map_err(|e| e.to_string())?;
            let problems = check_extension(&gamma, &uni, &ext);
            let mut t = lines(&ext.formulas);
            t.push_str(&format!("assignment: {}\n", ext.assignment));
            t.push_str(&lines(&problems));
            let j = json!({
                "formulas": strs(&ext.formulas),
                "assignment": assignment_json(&ext.assignment),
                "problems": problems,
            });
            Outcome::verdict(problems.is_empty(), t, j)
        }
        Command::Fdnf { formula: s } => {
            let d = fdnf(&formula(s)?).map_err(|e| e.to_string())?;
            let conj: Vec<String> = d.conjunctions.iter().map(|c| print_flat(&c.to_formula())).collect();
            Outcome::ok(d.to_string(), json!({ "fdnf": d.to_string(), "conjunctions": conj }))
        }
        Command::Denial { formula: s } => {
            let d = denial(&formula(s)?).map_err(|e| e.to_string())?;
            Outcome::ok(print_atomic(&d), json!({ "denial": print_atomic(&d) }))
        }
        Command::Nnf { formula: s } => {
            let d = reduce_nf(&formula(s)?);
            Outcome::ok(print_atomic(&d), json!({ "nnf": print_atomic(&d) }))
        }
        Command::ProveCheck { script } => {
            let p = load_proof(script)?;
            match check_proof(&p) {
                Ok(a) => {
                    let mut t = String::from("accepted\n");
                    if cli.trace {
                        t.push_str(&format!("conclusion: {}\n", a.conclusion));
                    }
                    let j = json!({
                        "accepted": true,
                        "conclusion": a.conclusion.to_string(),
                        "used_premises": strs(&a.used_premises),
                    });
                    Outcome::ok(t, j)
                }
                Err(r) => Outcome::verdict(
                    false,
                    format!("rejected: {r}"),
                    json!({ "accepted": false, "step": r.step, "reason": r.reason.code() }),
                ),
            }
        }
        Command::Deduce { script, discharge } => {
            let p = load_proof(script)?;
            let out = deduction_transform(&p, &formula(discharge)?).map_err(|e| e.to_string())?;
            let s = print_script(&out);
            Outcome::ok(s.clone(), json!({ "script": s, "steps": out.len() }))
        }
        Command::Synth { formula: s } => {
            let f = formula(s)?;
            let cap = cli.cap.map_or(DEFAULT_SYNTH_ATOM_CAP, |c| c as usize);
            let syn = synthesize_with_cap(&f, cap).map_err(|e| e.to_string())?;
            if let Some(w) = &syn.warning {
                eprintln!("warning: {w}");
            }
            verify_soundness(&syn.proof).map_err(|r| format!("synthesized proof failed the soundness check: {r}"))?;
            let s = print_script(&syn.proof);
            Outcome::ok(s.clone(), json!({ "script": s, "steps": syn.proof.len(), "warning": syn.warning }))
        }
        Command::Deducibility { formula: s, row } => {
            let f = formula(s)?;
            let pairs = parse_pairs(row)?;
            let row = Assignment::new(
                pairs.iter().map(|(k, _)| k.as_str().into()).collect(),
                pairs.iter().map(|(_, v)| *v).collect(),
            );
            let p = deducibility_proof(&f, &row).map_err(|e| e.to_string())?;
            let s = print_script(&p);
            let conclusion = p.conclusion().map(|c| c.to_string());
            Outcome::ok(s.clone(), json!({ "script": s, "conclusion": conclusion }))
        }
        Command::Closure { premises, universe: u, level } => {
            let uni = universe(u)?;
            let gamma = prop_premises(premises)?;
            let x = uni.subset(&gamma).map_err(|e| e.to_string())?;
            let op = Closure::s(&uni).with_level(*level);
            let members = uni.members(&op.apply(&x));
            Outcome::ok(lines(&members), json!({ "operator": op.name(), "closure": strs(&members) }))
        }
        Command::OpCheck { universe: u, level } => {
            let uni = universe(u)?;
            let op = Closure::s(&uni).with_level(*level);
            let report = check_operator_axioms(&op, &uni.subsets_up_to(2), &uni.subsets_up_to(1));
            let all = uni.subsets_up_to(2);
            let idem = idempotent_theorems(&op, &all);
            let ok = report.passed() && idem.passed();
            let mut t = report.to_string();
            t.push_str(&format!(
                "idempotent theorems: {} ({} distinct images)\n",
                if idem.passed() { "pass" } else { "fail" },
                idem.image_count
            ));
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| json!({ "property": c.property, "cases": c.cases, "violation": c.violation }))
                .collect();
            let j = json!({
                "operator": report.operator,
                "universe": uni.len(),
                "checks": checks,
                "idempotent_theorems": idem.passed(),
                "passed": ok,
            });
            Outcome::verdict(ok, t, j)
        }
        Command::PdParse { formula: s } => {
            let f = pd(s)?;
            let preds: Vec<String> = f.predicates().iter().map(|(p, k)| format!("{p}/{k}")).collect();
            let j = json!({
                "formula": f.to_string(),
                "predicates": preds,
                "constants": strs(&f.constants()),
                "free": strs(&f.free_vars()),
            });
            Outcome::ok(f.to_string(), j)
        }
        Command::Occ { formula: s } => {
            let r = occurrences(&pd(s)?);
            let occ: Vec<Value> = r
                .occurrences
                .iter()
                .map(|o| {
                    let tag = match o.tag {
                        OccurrenceTag::Free => json!("free"),
                        OccurrenceTag::Bound(q) => json!({ "bound_by": q + 1 }),
                        OccurrenceTag::Constant => json!("constant"),
                    };
                    json!({ "symbol": &*o.symbol, "position": o.position, "tag": tag })
                })
                .collect();
            let j = json!({ "occurrences": occ, "free": strs(&r.free), "bound": strs(&r.bound()) });
            Outcome::ok(r.render(), j)
        }
        Command::Congruent { a, b } => {
            let yes = congruent(&pd(a)?, &pd(b)?);
            let word = if yes { "congruent" } else { "not congruent" };
            Outcome::verdict(yes, word, json!({ "congruent": yes }))
        }
        Command::Subst { formula: s, var, term } => {
            let f = pd(s)?;
            let t = Term::named(term);
            if t.is_var() && !free_for(&f, var, term) {
                return Ok(Outcome::verdict(
                    false,
                    format!("{term} is not free for {var}"),
                    json!({ "free_for": false }),
                ));
            }
            let g = subst_free(&f, var, &t);
            Outcome::ok(g.to_string(), json!({ "free_for": true, "result": g.to_string() }))
        }
        Command::ClosureUniv { formula: s } => {
            let g = universal_closure(&pd(s)?);
            Outcome::ok(g.to_string(), json!({ "closure": g.to_string() }))
        }
        Command::Prenex { formula: s } => {
            let g = prenex(&pd(s)?);
            Outcome::ok(g.to_string(), json!({ "prenex": g.to_string() }))
        }
        Command::Model { structure, formula: s } => {
            let m = load_structure(&read_source(structure)?).map_err(|e| e.to_string())?;
            let f = pd(s)?;
            let v = models(&m, &f).map_err(|e| e.to_string())?;
            let trace = v.render_trace(&m);
            let mut t = String::from(if v.holds { "holds\n" } else { "fails\n" });
            if cli.trace {
                t.push_str(&lines(&trace));
            }
            Outcome::verdict(v.holds, t, json!({ "holds": v.holds, "trace": trace }))
        }
        Command::Countermodel { formula: s } => {
            let f = pd(s)?;
            let r = valid_over(&f, max_domain, fol_cap);
            let sizes: Vec<Value> = r
                .sizes
                .iter()
                .map(|z| {
                    let status = match z.status {
                        SizeStatus::Holds => "holds",
                        SizeStatus::Fails => "fails",
                        SizeStatus::Unknown => "unknown",
                    };
                    json!({ "size": z.size, "status": status, "interpretations": z.interpretations.to_string() })
                })
                .collect();
            match &r.found {
                Some(m) => Outcome::verdict(
                    false,
                    format!("countermodel: {m}"),
                    json!({ "countermodel": m.to_json(), "sizes": sizes }),
                ),
                None => Outcome::ok(
                    no_countermodel_text(max_domain, &r.skipped_sizes()),
                    json!({ "countermodel": null, "max_domain": max_domain, "skipped": r.skipped_sizes(), "sizes": sizes }),
                ),
            }
        }
        Command::PdConsequence { premises, goal } => {
            let ps = pd_premises(premises)?;
            let g = pd(goal)?;
            match fol_consequence(&ps, &g, max_domain, fol_cap) {
                FolConsequence::Invalid(m) => countermodel_outcome(&m),
                FolConsequence::NoCountermodelUpTo { max_domain, skipped } => Outcome::ok(
                    no_countermodel_text(max_domain, &skipped),
                    json!({ "countermodel": null, "max_domain": max_domain, "skipped": skipped }),
                ),
            }
        }
        Command::PdProveCheck { script } => {
            let p = parse_pd_script(&read_source(script)?).map_err(|e| e.to_string())?;
            match check_pd_proof(&p) {
                Ok(a) => {
                    let mut t = String::from("accepted\n");
                    if cli.trace {
                        t.push_str(&format!("conclusion: {}\n", a.conclusion));
                    }
                    Outcome::ok(t, json!({ "accepted": true, "conclusion": a.conclusion.to_string() }))
                }
                Err(r) => Outcome::verdict(
                    false,
                    format!("rejected: {r}"),
                    json!({ "accepted": false, "step": r.step, "reason": r.reason.code() }),
                ),
            }
        }
        Command::PdDeduce { script, discharge } => {
            let p = parse_pd_script(&read_source(script)?).map_err(|e| e.to_string())?;
            let out = pd_deduction_transform(&p, &pd(discharge)?).map_err(|e| e.to_string())?;
            let s = print_pd_script(&out);
            Outcome::ok(s.clone(), json!({ "script": s, "steps": out.len() }))
        }
        Command::Compile { formula: s } => {
            let n = compile_circuit(&formula(s)?).map_err(|e| e.to_string())?;
            Outcome::ok(n.to_string(), json!({ "netlist": n.to_string(), "gates": n.gates.len() }))
        }
        Command::Simulate { netlist: arg, inputs } => {
            let n = netlist(arg)?;
            let outs: Vec<&str> = n.outputs.iter().map(|(o, _)| o.as_str()).collect();
            match inputs {
                Some(s) => {
                    let values: HashMap<String, bool> = parse_pairs(s)?.into_iter().collect();
                    let v = simulate(&n, &values).map_err(|e| e.to_string())?;
                    let t: String = outs.iter().zip(&v).map(|(o, b)| format!("{o}={}\n", bit(*b))).collect();
                    let j = Value::Object(outs.iter().zip(&v).map(|(o, b)| (o.to_string(), json!(b))).collect());
                    Outcome::ok(t, j)
                }
                None => {
                    // Rows count up in binary with the first input most significant.
                    let k = n.inputs.len();
                    if k > 20 {
                        return Err(format!("{k} inputs is too many to tabulate; pass --inputs"));
                    }
                    let mut t = format!("{} | {}\n", n.inputs.join(" "), outs.join(" "));
                    let mut rows = Vec::new();
                    for r in 0..1usize << k {
                        let bits: Vec<bool> = (0..k).map(|j| r >> (k - 1 - j) & 1 == 1).collect();
                        let v = simulate_bits(&n, &bits).map_err(|e| e.to_string())?;
                        let ins: Vec<&str> = bits.iter().map(|b| bit(*b)).collect();
                        let os: Vec<&str> = v.iter().map(|b| bit(*b)).collect();
                        t.push_str(&format!("{} | {}\n", ins.join(" "), os.join(" ")));
                        rows.push(json!({ "inputs": bits, "outputs": v }));
                    }
                    Outcome::ok(t, json!({ "inputs": n.inputs, "outputs": outs, "rows": rows }))
                }
            }
        }
        Command::CircuitEquiv { a, b } => {
            let yes = equivalent_netlists(&netlist(a)?, &netlist(b)?).map_err(|e| e.to_string())?;
            let word = if yes { "equivalent" } else { "not equivalent" };
            Outcome::verdict(yes, word, json!({ "equivalent": yes }))
        }
    })
}

fn countermodel_outcome(m: &Structure) -> Outcome {
    Outcome::verdict(false, format!("invalid\ncountermodel: {m}"), json!({ "countermodel": m.to_json() }))
}

fn no_countermodel_text(max_domain: usize, skipped: &[usize]) -> String {
    let mut t = format!("no countermodel with at most {max_domain} elements\n");
    if !skipped.is_empty() {
        t.push_str(&format!("sizes over the cap, not examined: {skipped:?}\n"));
    }
    t
}
