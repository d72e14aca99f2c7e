//! FOND-PDDL frontend: parsing, grounding, and object-symmetry analysis.
//!
//! The accepted fragment is STRIPS + `:typing` + `:equality` +
//! `:non-deterministic` (`oneof` effects), the convention used by the
//! common FOND benchmark suites. Conditional effects, quantifiers, and
//! numeric fluents are rejected with explicit errors.

mod ground;
mod parse;
mod symmetry;

pub use ground::{ground, GroundError};
pub use parse::{parse, parse_domain, parse_problem};
pub use symmetry::{remove_objects, symmetric_objects, SymmetryPartition};

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PddlError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{0}")]
    Semantic(String),
}

/// A name with its declared type (parameter, object, or constant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedName {
    pub name: String,
    pub ty: String,
}

/// A term in a lifted atom: either a `?variable` or a constant name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Var(String),
    Const(String),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "?{v}"),
            Term::Const(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedAtom {
    pub pred: String,
    pub args: Vec<Term>,
}

impl fmt::Display for LiftedAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.pred)?;
        for a in &self.args {
            write!(f, " {a}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedLiteral {
    pub atom: LiftedAtom,
    pub negated: bool,
}

impl fmt::Display for LiftedLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "(not {})", self.atom)
        } else {
            write!(f, "{}", self.atom)
        }
    }
}

/// One conjunct of an action precondition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrecondEntry {
    Lit(LiftedLiteral),
    /// `(= a b)` or `(not (= a b))`; always resolved statically at grounding.
    Equality { left: Term, right: Term, negated: bool },
}

/// Normalized effect: a conjunction of unconditional literals plus a list
/// of `oneof` groups. Each group is a list of branches, each branch a
/// conjunction of literals. `oneof` may occur only at this level, which is
/// exactly the accepted fragment.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LiftedEffect {
    pub base: Vec<LiftedLiteral>,
    pub choices: Vec<Vec<Vec<LiftedLiteral>>>,
}

impl LiftedEffect {
    pub fn num_outcomes(&self) -> usize {
        self.choices.iter().map(|c| c.len()).product()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedAction {
    pub name: String,
    pub params: Vec<TypedName>,
    pub precondition: Vec<PrecondEntry>,
    pub effect: LiftedEffect,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateDef {
    pub name: String,
    pub params: Vec<TypedName>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedDomain {
    pub name: String,
    pub requirements: Vec<String>,
    /// (type, supertype) pairs; `object` is the implicit root.
    pub types: Vec<(String, String)>,
    pub constants: Vec<TypedName>,
    pub predicates: Vec<PredicateDef>,
    pub actions: Vec<LiftedAction>,
}

impl LiftedDomain {
    /// True iff `sub` is `sup` or a (transitive) subtype of it.
    pub fn is_subtype(&self, sub: &str, sup: &str) -> bool {
        if sub == sup || sup == "object" {
            return true;
        }
        let mut cur = sub.to_string();
        // Bounded walk to survive accidental cycles in the type table.
        for _ in 0..=self.types.len() {
            match self.types.iter().find(|(t, _)| *t == cur) {
                Some((_, parent)) => {
                    if parent == sup {
                        return true;
                    }
                    cur = parent.clone();
                }
                None => return false,
            }
        }
        false
    }

    pub fn predicate(&self, name: &str) -> Option<&PredicateDef> {
        self.predicates.iter().find(|p| p.name == name)
    }
}

/// A fully instantiated atom, args are object names.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundAtom {
    pub pred: String,
    pub args: Vec<String>,
}

impl fmt::Display for GroundAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pred)?;
        for a in &self.args {
            write!(f, " {a}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedProblem {
    pub name: String,
    pub domain: String,
    pub objects: Vec<TypedName>,
    pub init: Vec<GroundAtom>,
    /// Goal conjunction; negated entries are permitted.
    pub goal: Vec<(GroundAtom, bool)>,
}

impl LiftedProblem {
    pub fn object(&self, name: &str) -> Option<&TypedName> {
        self.objects.iter().find(|o| o.name == name)
    }

    /// Objects mentioned anywhere in the goal.
    pub fn goal_objects(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .goal
            .iter()
            .flat_map(|(a, _)| a.args.iter().cloned())
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

fn fmt_typed_list(f: &mut fmt::Formatter<'_>, items: &[TypedName]) -> fmt::Result {
    for (i, it) in items.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{} - {}", it.name, it.ty)?;
    }
    Ok(())
}

impl fmt::Display for LiftedDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "(define (domain {})", self.name)?;
        if !self.requirements.is_empty() {
            writeln!(f, "  (:requirements {})", self.requirements.join(" "))?;
        }
        if !self.types.is_empty() {
            write!(f, "  (:types")?;
            for (t, p) in &self.types {
                write!(f, " {t} - {p}")?;
            }
            writeln!(f, ")")?;
        }
        if !self.constants.is_empty() {
            write!(f, "  (:constants ")?;
            fmt_typed_list(f, &self.constants)?;
            writeln!(f, ")")?;
        }
        write!(f, "  (:predicates")?;
        for p in &self.predicates {
            write!(f, " ({}", p.name)?;
            for a in &p.params {
                write!(f, " ?{} - {}", a.name, a.ty)?;
            }
            write!(f, ")")?;
        }
        writeln!(f, ")")?;
        for a in &self.actions {
            writeln!(f, "  (:action {}", a.name)?;
            write!(f, "    :parameters (")?;
            for (i, p) in a.params.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "?{} - {}", p.name, p.ty)?;
            }
            writeln!(f, ")")?;
            write!(f, "    :precondition (and")?;
            for pe in &a.precondition {
                match pe {
                    PrecondEntry::Lit(l) => write!(f, " {l}")?,
                    PrecondEntry::Equality { left, right, negated } => {
                        if *negated {
                            write!(f, " (not (= {left} {right}))")?;
                        } else {
                            write!(f, " (= {left} {right})")?;
                        }
                    }
                }
            }
            writeln!(f, ")")?;
            write!(f, "    :effect (and")?;
            for l in &a.effect.base {
                write!(f, " {l}")?;
            }
            for group in &a.effect.choices {
                write!(f, " (oneof")?;
                for branch in group {
                    match branch.len() {
                        1 => write!(f, " {}", branch[0])?,
                        _ => {
                            write!(f, " (and")?;
                            for l in branch {
                                write!(f, " {l}")?;
                            }
                            write!(f, ")")?;
                        }
                    }
                }
                write!(f, ")")?;
            }
            writeln!(f, "))")?;
        }
        writeln!(f, ")")
    }
}

impl fmt::Display for LiftedProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "(define (problem {})", self.name)?;
        writeln!(f, "  (:domain {})", self.domain)?;
        if !self.objects.is_empty() {
            write!(f, "  (:objects ")?;
            fmt_typed_list(f, &self.objects)?;
            writeln!(f, ")")?;
        }
        write!(f, "  (:init")?;
        for a in &self.init {
            write!(f, " ({a})")?;
        }
        writeln!(f, ")")?;
        write!(f, "  (:goal (and")?;
        for (a, neg) in &self.goal {
            if *neg {
                write!(f, " (not ({a}))")?;
            } else {
                write!(f, " ({a})")?;
            }
        }
        writeln!(f, ")))")
    }
}
