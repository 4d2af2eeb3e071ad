//! Named theorem templates over the atoms A, B, C.
//!
//! Several templates are produced by running the deduction transform over a
//! short demonstration, so the library doubles as a standing test of it.

use std::collections::HashMap;
use std::sync::OnceLock;

use super::deduction::deduction_with;
use super::{check_with, expand_with, p1, p2, p3, Justification, Proof};
use crate::prop_syntax::{parse, Formula};

#[derive(Debug, Clone)]
pub struct LemmaEntry {
    pub name: String,
    /// The proved template, over atoms A, B, C.
    pub statement: Formula,
    /// The proof as authored; it may use HS and earlier lemmas.
    pub proof: Proof,
    /// The demonstration the proof was derived from, when it came from the
    /// deduction transform.
    pub demonstration: Option<Proof>,
    /// Primitive form of `proof`.
    pub expanded: Proof,
}

#[derive(Debug, Clone, Default)]
pub struct LemmaLibrary {
    entries: Vec<LemmaEntry>,
    index: HashMap<String, usize>,
}

impl LemmaLibrary {
    pub fn get(&self, name: &str) -> Option<&LemmaEntry> {
        self.index.get(name).map(|&i| &self.entries[i])
    }

    pub fn entries(&self) -> &[LemmaEntry] {
        &self.entries
    }

    fn add(&mut self, name: &str, proof: Proof, demonstration: Option<Proof>) {
        if let Err(r) = check_with(&proof, self) {
            panic!("lemma {name} does not check: {r}");
        }
        let expanded = expand_with(&proof, self, true).expect("lemma expands");
        let statement = proof.conclusion().expect("lemma proof is nonempty").clone();
        self.index.insert(name.to_string(), self.entries.len());
        self.entries.push(LemmaEntry { name: name.to_string(), statement, proof, demonstration, expanded });
    }

    /// Adds the result of discharging `discharge` (last first) from `demo`.
    fn add_discharged(&mut self, name: &str, demo: Proof, discharge: &[&str]) {
        let mut p = demo.clone();
        for a in discharge {
            p = deduction_with(&p, &f(a), self).unwrap_or_else(|e| panic!("lemma {name}: {e}"));
        }
        self.add(name, p, Some(demo));
    }
}

fn f(s: &str) -> Formula {
    parse(s).expect("lemma formula parses")
}

/// Small builder so the templates read like the written proofs.
struct Demo(Proof);

impl Demo {
    fn new(premises: &[&str]) -> Demo {
        Demo(Proof::new(premises.iter().map(|p| f(p)).collect()))
    }
    fn premise(mut self, s: &str) -> Demo {
        self.0.push(f(s), Justification::Premise);
        self
    }
    fn p1(mut self, a: &str, b: &str) -> Demo {
        self.0.steps.push(p1(&f(a), &f(b)));
        self
    }
    fn p2(mut self, a: &str, b: &str, c: &str) -> Demo {
        self.0.steps.push(p2(&f(a), &f(b), &f(c)));
        self
    }
    fn p3(mut self, a: &str, b: &str) -> Demo {
        self.0.steps.push(p3(&f(a), &f(b)));
        self
    }
    fn mp(mut self, s: &str, i: usize, j: usize) -> Demo {
        self.0.push(f(s), Justification::MP(i, j));
        self
    }
    fn hs(mut self, s: &str, i: usize, j: usize) -> Demo {
        self.0.push(f(s), Justification::HS(i, j));
        self
    }
    fn lemma(mut self, s: &str, name: &str, subst: &[(&str, &str)]) -> Demo {
        let subst: Vec<(&str, Formula)> = subst.iter().map(|(k, v)| (*k, f(v))).collect();
        self.0.push(f(s), Justification::lemma(name, &subst));
        self
    }
    fn done(self) -> Proof {
        self.0
    }
}

fn build() -> LemmaLibrary {
    let mut lib = LemmaLibrary::default();

    lib.add(
        "id",
        Demo::new(&[])
            .p2("A", "A -> A", "A")
            .p1("A", "A -> A")
            .mp("(A -> (A -> A)) -> (A -> A)", 1, 2)
            .p1("A", "A")
            .mp("A -> A", 3, 4)
            .done(),
        None,
    );

    lib.add(
        "dneg-elim",
        Demo::new(&[])
            .p1("~~A", "~~~~A")
            .p3("~~~A", "~A")
            .hs("~~A -> (~A -> ~~~A)", 1, 2)
            .p3("A", "~~A")
            .hs("~~A -> (~~A -> A)", 3, 4)
            .p2("~~A", "~~A", "A")
            .mp("(~~A -> ~~A) -> (~~A -> A)", 5, 6)
            .p2("~~A", "~~A -> ~~A", "~~A")
            .p1("~~A", "~~A -> ~~A")
            .mp("(~~A -> (~~A -> ~~A)) -> (~~A -> ~~A)", 8, 9)
            .p1("~~A", "~~A")
            .mp("~~A -> ~~A", 10, 11)
            .mp("~~A -> A", 7, 12)
            .done(),
        None,
    );

    lib.add(
        "dneg-intro",
        Demo::new(&[])
            .p3("~~A", "A")
            .lemma("~~~A -> ~A", "dneg-elim", &[("A", "~A")])
            .mp("A -> ~~A", 1, 2)
            .done(),
        None,
    );

    lib.add(
        "exfalso",
        Demo::new(&[]).p1("~B", "~A").p3("A", "B").hs("~B -> (B -> A)", 1, 2).done(),
        None,
    );

    lib.add_discharged(
        "contrapose",
        Demo::new(&["B -> A"])
            .premise("B -> A")
            .lemma("~~B -> B", "dneg-elim", &[("A", "B")])
            .hs("~~B -> A", 1, 2)
            .lemma("A -> ~~A", "dneg-intro", &[])
            .hs("~~B -> ~~A", 3, 4)
            .p3("~B", "~A")
            .mp("~A -> ~B", 5, 6)
            .done(),
        &["B -> A"],
    );

    lib.add_discharged(
        "peirce",
        Demo::new(&["(A -> B) -> A"])
            .premise("(A -> B) -> A")
            .lemma("~A -> (A -> B)", "exfalso", &[("B", "A"), ("A", "B")])
            .hs("~A -> A", 1, 2)
            .p1("~A", "~~(~A -> A)")
            .p3("~(~A -> A)", "A")
            .hs("~A -> (A -> ~(~A -> A))", 4, 5)
            .p2("~A", "A", "~(~A -> A)")
            .mp("(~A -> A) -> (~A -> ~(~A -> A))", 6, 7)
            .mp("~A -> ~(~A -> A)", 3, 8)
            .p3("A", "~A -> A")
            .mp("(~A -> A) -> A", 9, 10)
            .mp("A", 3, 11)
            .done(),
        &["(A -> B) -> A"],
    );

    lib.add_discharged(
        "b-to-mp",
        Demo::new(&["A", "A -> B"]).premise("A").premise("A -> B").mp("B", 1, 2).done(),
        &["A -> B", "A"],
    );

    lib.add(
        "neg-imp",
        Demo::new(&[])
            .lemma("A -> ((A -> B) -> B)", "b-to-mp", &[])
            .lemma("((A -> B) -> B) -> (~B -> ~(A -> B))", "contrapose", &[("B", "A -> B"), ("A", "B")])
            .hs("A -> (~B -> ~(A -> B))", 1, 2)
            .done(),
        None,
    );

    lib.add_discharged(
        "self-neg-explode",
        Demo::new(&["~A -> A", "~A"])
            .premise("~A -> A")
            .premise("~A")
            .mp("A", 1, 2)
            .lemma("~A -> (A -> B)", "exfalso", &[("B", "A"), ("A", "B")])
            .mp("A -> B", 2, 4)
            .mp("B", 3, 5)
            .done(),
        &["~A", "~A -> A"],
    );

    lib.add_discharged(
        "dneg-antecedent",
        Demo::new(&["B -> C"])
            .premise("B -> C")
            .lemma("~~B -> B", "dneg-elim", &[("A", "B")])
            .hs("~~B -> C", 1, 2)
            .done(),
        &["B -> C"],
    );

    lib.add_discharged(
        "self-neg-elim",
        Demo::new(&["~A -> A"])
            .p1("~A", "A -> A")
            .p3("~(A -> A)", "A")
            .lemma("((A -> A) -> ~A) -> (~~(A -> A) -> ~A)", "dneg-antecedent", &[("B", "A -> A"), ("C", "~A")])
            .hs("((A -> A) -> ~A) -> (A -> ~(A -> A))", 3, 2)
            .hs("~A -> (A -> ~(A -> A))", 1, 4)
            .lemma("(~A -> A) -> (~A -> ~(A -> A))", "self-neg-explode", &[("B", "~(A -> A)")])
            .premise("~A -> A")
            .mp("~A -> ~(A -> A)", 7, 6)
            .p3("A", "A -> A")
            .mp("(A -> A) -> A", 8, 9)
            .lemma("A -> A", "id", &[])
            .mp("A", 11, 10)
            .done(),
        &["~A -> A"],
    );

    lib.add_discharged(
        "case-split",
        Demo::new(&["A -> B", "~A -> B"])
            .premise("A -> B")
            .premise("~A -> B")
            .lemma("B -> ~~B", "dneg-intro", &[("A", "B")])
            .hs("~A -> ~~B", 2, 3)
            .p3("A", "~B")
            .mp("~B -> A", 4, 5)
            .hs("~B -> B", 6, 1)
            .lemma("(~B -> B) -> B", "self-neg-elim", &[("A", "B")])
            .mp("B", 7, 8)
            .done(),
        &["~A -> B", "A -> B"],
    );

    lib
}

pub fn library() -> &'static LemmaLibrary {
    static LIB: OnceLock<LemmaLibrary> = OnceLock::new();
    LIB.get_or_init(build)
}
