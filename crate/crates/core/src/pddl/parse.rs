//! S-expression lexer and PDDL reader.
//!
//! Input is lowercased during lexing (PDDL names are case-insensitive);
//! `;` starts a comment running to end of line.

use super::*;

#[derive(Debug, Clone)]
enum Sexp {
    Sym(String, Pos),
    List(Vec<Sexp>, Pos),
}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    col: usize,
}

impl Sexp {
    fn pos(&self) -> Pos {
        match self {
            Sexp::Sym(_, p) | Sexp::List(_, p) => *p,
        }
    }

    fn as_sym(&self) -> Option<&str> {
        match self {
            Sexp::Sym(s, _) => Some(s),
            _ => None,
        }
    }

    fn as_list(&self) -> Option<&[Sexp]> {
        match self {
            Sexp::List(items, _) => Some(items),
            _ => None,
        }
    }
}

fn err(pos: Pos, msg: impl Into<String>) -> PddlError {
    PddlError::Syntax { line: pos.line, col: pos.col, msg: msg.into() }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

#[derive(Debug)]
enum Token {
    LParen(Pos),
    RParen(Pos),
    Sym(String, Pos),
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { chars: text.chars().peekable(), line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn tokens(mut self) -> Result<Vec<Token>, PddlError> {
        let mut out = Vec::new();
        loop {
            // skip whitespace and comments
            loop {
                match self.chars.peek() {
                    Some(c) if c.is_whitespace() => {
                        self.bump();
                    }
                    Some(';') => {
                        while let Some(&c) = self.chars.peek() {
                            if c == '\n' {
                                break;
                            }
                            self.bump();
                        }
                    }
                    _ => break,
                }
            }
            let pos = Pos { line: self.line, col: self.col };
            match self.chars.peek() {
                None => return Ok(out),
                Some('(') => {
                    self.bump();
                    out.push(Token::LParen(pos));
                }
                Some(')') => {
                    self.bump();
                    out.push(Token::RParen(pos));
                }
                Some(_) => {
                    let mut sym = String::new();
                    while let Some(&c) = self.chars.peek() {
                        if c.is_whitespace() || c == '(' || c == ')' || c == ';' {
                            break;
                        }
                        sym.push(c.to_ascii_lowercase());
                        self.bump();
                    }
                    out.push(Token::Sym(sym, pos));
                }
            }
        }
    }
}

fn parse_sexp(text: &str) -> Result<Sexp, PddlError> {
    let tokens = Lexer::new(text).tokens()?;
    let mut stack: Vec<(Vec<Sexp>, Pos)> = Vec::new();
    let mut last_pos = Pos { line: 1, col: 1 };
    for tok in tokens {
        match tok {
            Token::LParen(p) => {
                stack.push((Vec::new(), p));
                last_pos = p;
            }
            Token::RParen(p) => {
                let (items, open_pos) = stack
                    .pop()
                    .ok_or_else(|| err(p, "unbalanced ')'"))?;
                let sexp = Sexp::List(items, open_pos);
                match stack.last_mut() {
                    Some((parent, _)) => parent.push(sexp),
                    None => {
                        if stack.is_empty() {
                            return finishing(sexp, p);
                        }
                    }
                }
                last_pos = p;
            }
            Token::Sym(s, p) => {
                match stack.last_mut() {
                    Some((parent, _)) => parent.push(Sexp::Sym(s, p)),
                    None => return Err(err(p, "expected '(' at top level")),
                }
                last_pos = p;
            }
        }
    }
    Err(err(last_pos, "unexpected end of input: unclosed '('"))
}

fn finishing(sexp: Sexp, _p: Pos) -> Result<Sexp, PddlError> {
    Ok(sexp)
}

/// Parse a `(a b - t c - u d)` style typed list. `?` prefixes are stripped
/// when `strip_var` is set (parameter lists).
fn parse_typed_list(items: &[Sexp], strip_var: bool) -> Result<Vec<TypedName>, PddlError> {
    let mut out = Vec::new();
    let mut pending: Vec<(String, Pos)> = Vec::new();
    let mut i = 0;
    while i < items.len() {
        let sym = items[i]
            .as_sym()
            .ok_or_else(|| err(items[i].pos(), "expected a name in typed list"))?;
        if sym == "-" {
            i += 1;
            let ty = items
                .get(i)
                .and_then(|s| s.as_sym())
                .ok_or_else(|| err(items[i - 1].pos(), "expected type after '-'"))?;
            for (name, _) in pending.drain(..) {
                out.push(TypedName { name, ty: ty.to_string() });
            }
            i += 1;
        } else {
            let name = if strip_var {
                sym.strip_prefix('?')
                    .ok_or_else(|| err(items[i].pos(), format!("expected ?variable, found {sym}")))?
                    .to_string()
            } else {
                sym.to_string()
            };
            pending.push((name, items[i].pos()));
            i += 1;
        }
    }
    for (name, _) in pending {
        out.push(TypedName { name, ty: "object".to_string() });
    }
    Ok(out)
}

fn parse_term(s: &Sexp) -> Result<Term, PddlError> {
    let sym = s.as_sym().ok_or_else(|| err(s.pos(), "expected a term"))?;
    Ok(match sym.strip_prefix('?') {
        Some(v) => Term::Var(v.to_string()),
        None => Term::Const(sym.to_string()),
    })
}

fn parse_atom(s: &Sexp) -> Result<LiftedAtom, PddlError> {
    let items = s.as_list().ok_or_else(|| err(s.pos(), "expected an atom"))?;
    let pred = items
        .first()
        .and_then(|h| h.as_sym())
        .ok_or_else(|| err(s.pos(), "expected a predicate name"))?;
    let args = items[1..].iter().map(parse_term).collect::<Result<_, _>>()?;
    Ok(LiftedAtom { pred: pred.to_string(), args })
}

fn head_of(s: &Sexp) -> Option<&str> {
    s.as_list().and_then(|items| items.first()).and_then(|h| h.as_sym())
}

fn parse_precondition(s: &Sexp, out: &mut Vec<PrecondEntry>) -> Result<(), PddlError> {
    match head_of(s) {
        Some("and") => {
            for child in &s.as_list().unwrap()[1..] {
                parse_precondition(child, out)?;
            }
            Ok(())
        }
        Some("not") => {
            let items = s.as_list().unwrap();
            if items.len() != 2 {
                return Err(err(s.pos(), "'not' takes exactly one argument"));
            }
            match head_of(&items[1]) {
                Some("=") => {
                    let eq = items[1].as_list().unwrap();
                    if eq.len() != 3 {
                        return Err(err(items[1].pos(), "'=' takes exactly two arguments"));
                    }
                    out.push(PrecondEntry::Equality {
                        left: parse_term(&eq[1])?,
                        right: parse_term(&eq[2])?,
                        negated: true,
                    });
                }
                _ => {
                    out.push(PrecondEntry::Lit(LiftedLiteral {
                        atom: parse_atom(&items[1])?,
                        negated: true,
                    }));
                }
            }
            Ok(())
        }
        Some("=") => {
            let eq = s.as_list().unwrap();
            if eq.len() != 3 {
                return Err(err(s.pos(), "'=' takes exactly two arguments"));
            }
            out.push(PrecondEntry::Equality {
                left: parse_term(&eq[1])?,
                right: parse_term(&eq[2])?,
                negated: false,
            });
            Ok(())
        }
        Some(kw @ ("or" | "imply" | "exists" | "forall" | "when")) => {
            Err(err(s.pos(), format!("'{kw}' is not supported in preconditions")))
        }
        _ => {
            out.push(PrecondEntry::Lit(LiftedLiteral { atom: parse_atom(s)?, negated: false }));
            Ok(())
        }
    }
}

fn parse_effect_literal(s: &Sexp) -> Result<LiftedLiteral, PddlError> {
    match head_of(s) {
        Some("not") => {
            let items = s.as_list().unwrap();
            if items.len() != 2 {
                return Err(err(s.pos(), "'not' takes exactly one argument"));
            }
            Ok(LiftedLiteral { atom: parse_atom(&items[1])?, negated: true })
        }
        Some("when") => Err(err(s.pos(), "conditional effects are not supported")),
        Some("and" | "oneof") => Err(err(s.pos(), "'oneof' may appear only at the top level of an effect")),
        _ => Ok(LiftedLiteral { atom: parse_atom(s)?, negated: false }),
    }
}

/// A `oneof` branch: a single literal or a conjunction of literals.
fn parse_effect_branch(s: &Sexp) -> Result<Vec<LiftedLiteral>, PddlError> {
    match head_of(s) {
        Some("and") => s.as_list().unwrap()[1..].iter().map(parse_effect_literal).collect(),
        _ => Ok(vec![parse_effect_literal(s)?]),
    }
}

fn parse_effect(s: &Sexp) -> Result<LiftedEffect, PddlError> {
    let mut eff = LiftedEffect::default();
    let children: Vec<&Sexp> = match head_of(s) {
        Some("and") => s.as_list().unwrap()[1..].iter().collect(),
        _ => vec![s],
    };
    for child in children {
        match head_of(child) {
            Some("oneof") => {
                let branches = child.as_list().unwrap()[1..]
                    .iter()
                    .map(parse_effect_branch)
                    .collect::<Result<Vec<_>, _>>()?;
                if branches.is_empty() {
                    return Err(err(child.pos(), "'oneof' needs at least one branch"));
                }
                eff.choices.push(branches);
            }
            Some("and") => {
                // nested plain conjunction: flatten into the base
                for l in child.as_list().unwrap()[1..].iter() {
                    eff.base.push(parse_effect_literal(l)?);
                }
            }
            _ => eff.base.push(parse_effect_literal(child)?),
        }
    }
    Ok(eff)
}

fn expect_define<'a>(root: &'a Sexp, kind: &str) -> Result<&'a [Sexp], PddlError> {
    let items = root.as_list().ok_or_else(|| err(root.pos(), "expected (define ...)"))?;
    match items.first().and_then(|h| h.as_sym()) {
        Some("define") => {}
        _ => return Err(err(root.pos(), format!("expected (define ({kind} ...) ...)"))),
    }
    Ok(items)
}

pub fn parse_domain(text: &str) -> Result<LiftedDomain, PddlError> {
    let root = parse_sexp(text)?;
    let items = expect_define(&root, "domain")?;
    let header = items.get(1).ok_or_else(|| err(root.pos(), "missing (domain NAME)"))?;
    let hitems = header.as_list().ok_or_else(|| err(header.pos(), "expected (domain NAME)"))?;
    if hitems.first().and_then(|h| h.as_sym()) != Some("domain") || hitems.len() != 2 {
        return Err(err(header.pos(), "expected (domain NAME)"));
    }
    let name = hitems[1]
        .as_sym()
        .ok_or_else(|| err(hitems[1].pos(), "expected domain name"))?
        .to_string();

    let mut domain = LiftedDomain {
        name,
        requirements: Vec::new(),
        types: Vec::new(),
        constants: Vec::new(),
        predicates: Vec::new(),
        actions: Vec::new(),
    };

    for section in &items[2..] {
        let sitems = section
            .as_list()
            .ok_or_else(|| err(section.pos(), "expected a (:section ...)"))?;
        let head = sitems
            .first()
            .and_then(|h| h.as_sym())
            .ok_or_else(|| err(section.pos(), "expected a section keyword"))?;
        match head {
            ":requirements" => {
                for r in &sitems[1..] {
                    let sym = r.as_sym().ok_or_else(|| err(r.pos(), "expected requirement"))?;
                    domain.requirements.push(sym.to_string());
                }
            }
            ":types" => {
                for t in parse_typed_list(&sitems[1..], false)? {
                    domain.types.push((t.name, t.ty));
                }
            }
            ":constants" => {
                domain.constants = parse_typed_list(&sitems[1..], false)?;
            }
            ":predicates" => {
                for p in &sitems[1..] {
                    let pitems = p.as_list().ok_or_else(|| err(p.pos(), "expected (pred ...)"))?;
                    let pname = pitems
                        .first()
                        .and_then(|h| h.as_sym())
                        .ok_or_else(|| err(p.pos(), "expected predicate name"))?;
                    domain.predicates.push(PredicateDef {
                        name: pname.to_string(),
                        params: parse_typed_list(&pitems[1..], true)?,
                    });
                }
            }
            ":action" => {
                let aname = sitems
                    .get(1)
                    .and_then(|s| s.as_sym())
                    .ok_or_else(|| err(section.pos(), "expected action name"))?
                    .to_string();
                let mut params = Vec::new();
                let mut precondition = Vec::new();
                let mut effect = None;
                let mut i = 2;
                while i < sitems.len() {
                    let kw = sitems[i]
                        .as_sym()
                        .ok_or_else(|| err(sitems[i].pos(), "expected :keyword in action body"))?;
                    let body = sitems
                        .get(i + 1)
                        .ok_or_else(|| err(sitems[i].pos(), format!("missing body after {kw}")))?;
                    match kw {
                        ":parameters" => {
                            let plist = body
                                .as_list()
                                .ok_or_else(|| err(body.pos(), "expected parameter list"))?;
                            params = parse_typed_list(plist, true)?;
                        }
                        ":precondition" => {
                            if body.as_list().map(|l| l.is_empty()) != Some(true) {
                                parse_precondition(body, &mut precondition)?;
                            }
                        }
                        ":effect" => {
                            effect = Some(parse_effect(body)?);
                        }
                        other => {
                            return Err(err(sitems[i].pos(), format!("unknown action keyword {other}")))
                        }
                    }
                    i += 2;
                }
                domain.actions.push(LiftedAction {
                    name: aname,
                    params,
                    precondition,
                    effect: effect
                        .ok_or_else(|| err(section.pos(), "action is missing an :effect"))?,
                });
            }
            other => return Err(err(section.pos(), format!("unknown domain section {other}"))),
        }
    }
    validate_domain(&domain)?;
    Ok(domain)
}

fn validate_domain(domain: &LiftedDomain) -> Result<(), PddlError> {
    let type_known = |ty: &str| {
        ty == "object" || domain.types.iter().any(|(t, _)| t == ty)
    };
    for (_, parent) in &domain.types {
        if !type_known(parent) {
            return Err(PddlError::Semantic(format!("unknown supertype '{parent}'")));
        }
    }
    for c in &domain.constants {
        if !type_known(&c.ty) {
            return Err(PddlError::Semantic(format!(
                "constant '{}' has unknown type '{}'",
                c.name, c.ty
            )));
        }
    }
    for p in &domain.predicates {
        for a in &p.params {
            if !type_known(&a.ty) {
                return Err(PddlError::Semantic(format!(
                    "predicate '{}' parameter '?{}' has unknown type '{}'",
                    p.name, a.name, a.ty
                )));
            }
        }
    }
    for act in &domain.actions {
        for p in &act.params {
            if !type_known(&p.ty) {
                return Err(PddlError::Semantic(format!(
                    "action '{}' parameter '?{}' has unknown type '{}'",
                    act.name, p.name, p.ty
                )));
            }
        }
        let check_atom = |atom: &LiftedAtom| -> Result<(), PddlError> {
            let def = domain.predicate(&atom.pred).ok_or_else(|| {
                PddlError::Semantic(format!(
                    "action '{}' uses unknown predicate '{}'",
                    act.name, atom.pred
                ))
            })?;
            if def.params.len() != atom.args.len() {
                return Err(PddlError::Semantic(format!(
                    "predicate '{}' used with {} arguments, declared with {}",
                    atom.pred,
                    atom.args.len(),
                    def.params.len()
                )));
            }
            for t in &atom.args {
                if let Term::Var(v) = t {
                    if !act.params.iter().any(|p| &p.name == v) {
                        return Err(PddlError::Semantic(format!(
                            "unbound variable '?{v}' in action '{}'",
                            act.name
                        )));
                    }
                }
                if let Term::Const(c) = t {
                    if !domain.constants.iter().any(|k| &k.name == c) {
                        return Err(PddlError::Semantic(format!(
                            "unknown constant '{c}' in action '{}'",
                            act.name
                        )));
                    }
                }
            }
            Ok(())
        };
        for pe in &act.precondition {
            if let PrecondEntry::Lit(l) = pe {
                check_atom(&l.atom)?;
            }
        }
        for l in &act.effect.base {
            check_atom(&l.atom)?;
        }
        for group in &act.effect.choices {
            for branch in group {
                for l in branch {
                    check_atom(&l.atom)?;
                }
            }
        }
    }
    Ok(())
}

pub fn parse_problem(text: &str) -> Result<LiftedProblem, PddlError> {
    let root = parse_sexp(text)?;
    let items = expect_define(&root, "problem")?;
    let header = items.get(1).ok_or_else(|| err(root.pos(), "missing (problem NAME)"))?;
    let hitems = header.as_list().ok_or_else(|| err(header.pos(), "expected (problem NAME)"))?;
    if hitems.first().and_then(|h| h.as_sym()) != Some("problem") || hitems.len() != 2 {
        return Err(err(header.pos(), "expected (problem NAME)"));
    }
    let mut problem = LiftedProblem {
        name: hitems[1]
            .as_sym()
            .ok_or_else(|| err(hitems[1].pos(), "expected problem name"))?
            .to_string(),
        domain: String::new(),
        objects: Vec::new(),
        init: Vec::new(),
        goal: Vec::new(),
    };

    let ground_atom = |s: &Sexp| -> Result<GroundAtom, PddlError> {
        let atom = parse_atom(s)?;
        let mut args = Vec::new();
        for t in atom.args {
            match t {
                Term::Const(c) => args.push(c),
                Term::Var(v) => {
                    return Err(err(s.pos(), format!("unexpected variable '?{v}' in ground atom")))
                }
            }
        }
        Ok(GroundAtom { pred: atom.pred, args })
    };

    for section in &items[2..] {
        let sitems = section
            .as_list()
            .ok_or_else(|| err(section.pos(), "expected a (:section ...)"))?;
        let head = sitems
            .first()
            .and_then(|h| h.as_sym())
            .ok_or_else(|| err(section.pos(), "expected a section keyword"))?;
        match head {
            ":domain" => {
                problem.domain = sitems
                    .get(1)
                    .and_then(|s| s.as_sym())
                    .ok_or_else(|| err(section.pos(), "expected domain name"))?
                    .to_string();
            }
            ":objects" => {
                problem.objects = parse_typed_list(&sitems[1..], false)?;
            }
            ":init" => {
                for a in &sitems[1..] {
                    problem.init.push(ground_atom(a)?);
                }
            }
            ":goal" => {
                let body = sitems
                    .get(1)
                    .ok_or_else(|| err(section.pos(), "expected goal body"))?;
                let mut stack = vec![body];
                while let Some(s) = stack.pop() {
                    match head_of(s) {
                        Some("and") => {
                            for c in s.as_list().unwrap()[1..].iter().rev() {
                                stack.push(c);
                            }
                        }
                        Some("not") => {
                            let l = s.as_list().unwrap();
                            if l.len() != 2 {
                                return Err(err(s.pos(), "'not' takes exactly one argument"));
                            }
                            problem.goal.push((ground_atom(&l[1])?, true));
                        }
                        _ => problem.goal.push((ground_atom(s)?, false)),
                    }
                }
            }
            other => return Err(err(section.pos(), format!("unknown problem section {other}"))),
        }
    }
    Ok(problem)
}

/// Parse a domain/problem pair.
pub fn parse(domain_text: &str, problem_text: &str) -> Result<(LiftedDomain, LiftedProblem), PddlError> {
    let domain = parse_domain(domain_text)?;
    let problem = parse_problem(problem_text)?;
    if problem.domain != domain.name {
        return Err(PddlError::Semantic(format!(
            "problem '{}' is for domain '{}', not '{}'",
            problem.name, problem.domain, domain.name
        )));
    }
    // Problem-level semantic checks need the domain.
    let type_known =
        |ty: &str| ty == "object" || domain.types.iter().any(|(t, _)| t == ty);
    for o in &problem.objects {
        if !type_known(&o.ty) {
            return Err(PddlError::Semantic(format!(
                "object '{}' has unknown type '{}'",
                o.name, o.ty
            )));
        }
        if domain.constants.iter().any(|c| c.name == o.name) {
            return Err(PddlError::Semantic(format!(
                "object '{}' shadows a domain constant",
                o.name
            )));
        }
    }
    let object_type = |name: &str| -> Option<&str> {
        problem
            .object(name)
            .map(|o| o.ty.as_str())
            .or_else(|| domain.constants.iter().find(|c| c.name == name).map(|c| c.ty.as_str()))
    };
    let check_ground = |atom: &GroundAtom, where_: &str| -> Result<(), PddlError> {
        let def = domain.predicate(&atom.pred).ok_or_else(|| {
            PddlError::Semantic(format!("unknown predicate '{}' in {where_}", atom.pred))
        })?;
        if def.params.len() != atom.args.len() {
            return Err(PddlError::Semantic(format!(
                "predicate '{}' used with {} arguments in {where_}, declared with {}",
                atom.pred,
                atom.args.len(),
                def.params.len()
            )));
        }
        for (arg, param) in atom.args.iter().zip(&def.params) {
            let ty = object_type(arg).ok_or_else(|| {
                PddlError::Semantic(format!("unknown object '{arg}' in {where_}"))
            })?;
            if !domain.is_subtype(ty, &param.ty) {
                return Err(PddlError::Semantic(format!(
                    "object '{arg}' of type '{ty}' does not fit parameter type '{}' of '{}'",
                    param.ty, atom.pred
                )));
            }
        }
        Ok(())
    };
    for a in &problem.init {
        check_ground(a, "the initial state")?;
    }
    for (a, _) in &problem.goal {
        check_ground(a, "the goal")?;
    }
    Ok((domain, problem))
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINI_DOMAIN: &str = "
        (define (domain mini)
          (:requirements :strips :typing :non-deterministic)
          (:types loc)
          (:predicates (at ?l - loc) (broken ?l - loc))
          (:action go
            :parameters (?from - loc ?to - loc)
            :precondition (and (at ?from) (not (= ?from ?to)))
            :effect (and (not (at ?from)) (at ?to))))";

    const MINI_PROBLEM: &str = "
        (define (problem mini-1)
          (:domain mini)
          (:objects a b - loc)
          (:init (at a))
          (:goal (at b)))";

    #[test]
    fn minimal_domain_parses() {
        let d = parse_domain(MINI_DOMAIN).unwrap();
        assert_eq!(d.actions.len(), 1);
        assert_eq!(d.actions[0].effect.choices.len(), 0);
        assert_eq!(d.actions[0].effect.base.len(), 2);
        assert_eq!(d.requirements.len(), 3);
    }

    #[test]
    fn oneof_effect_shape() {
        let d = parse_domain(
            "(define (domain x) (:predicates (at ?x) (broken ?x))
               (:action a :parameters (?x)
                 :effect (oneof (at ?x) (broken ?x))))",
        )
        .unwrap();
        let eff = &d.actions[0].effect;
        assert_eq!(eff.choices.len(), 1);
        assert_eq!(eff.choices[0].len(), 2);
        assert_eq!(eff.num_outcomes(), 2);
    }

    #[test]
    fn malformed_input_reports_eof() {
        let e = parse_domain("(define (domain").unwrap_err();
        match e {
            PddlError::Syntax { msg, .. } => assert!(msg.contains("end of input"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_predicate_names_offender() {
        let e = parse_domain(
            "(define (domain x) (:predicates (p)) (:action a :parameters () :effect (q)))",
        )
        .unwrap_err();
        assert!(e.to_string().contains("'q'"), "{e}");
    }

    #[test]
    fn conditional_effects_rejected() {
        let e = parse_domain(
            "(define (domain x) (:predicates (p) (q))
               (:action a :parameters () :effect (when (p) (q))))",
        )
        .unwrap_err();
        assert!(e.to_string().contains("conditional"), "{e}");
    }

    #[test]
    fn roundtrip_is_fixpoint_after_normalization() {
        let (d, p) = parse(MINI_DOMAIN, MINI_PROBLEM).unwrap();
        let (d2, p2) = parse(&d.to_string(), &p.to_string()).unwrap();
        assert_eq!(d, d2);
        assert_eq!(p, p2);
        // printing again yields identical text
        assert_eq!(d2.to_string(), d.to_string());
        assert_eq!(p2.to_string(), p.to_string());
    }

    #[test]
    fn problem_goal_and_init_checked() {
        let e = parse(
            MINI_DOMAIN,
            "(define (problem p) (:domain mini) (:objects a - loc)
             (:init (at a) (at missing)) (:goal (at a)))",
        )
        .unwrap_err();
        assert!(e.to_string().contains("missing"), "{e}");
    }
}
