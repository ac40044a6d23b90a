//! Proof scripts replaying nonniceness arguments through the deduction rules.
//!
//! ```text
//! script     = { line } ;
//! line       = [ statement ] [ "#" comment ] newline ;
//! statement  = "target" name
//!            | name { name } "=" "eigenspaces"
//!            | name "=" rule { arg } [ "expect" expected ]
//!            | "contradiction" arg arg arg
//!            | "qed" ;
//! rule       = "bracket" | "ker" | "im" | "intersect" | "sum" | "promote"
//!            | "bracket_spaces" | "constrain" ;
//! arg        = name | vector | "(" vector ")" ;
//! expected   = vector | "<" [ vector { "," vector } ] ">" ;
//! ```
//!
//! A one-dimensional subspace may stand where an element is expected; it is
//! promoted first. `constrain S w T` is `{v ∈ S : [v, w] ∈ T}`.

use std::collections::HashMap;
use std::fmt;

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::field::proportional;
use crate::io::text::{format_vector, parse_vector};
use crate::linalg::Subspace;
use crate::nice::deduction::*;
use crate::{QVector, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    Bracket,
    Ker,
    Im,
    Intersect,
    Sum,
    Promote,
    BracketSpaces,
    Constrain,
}

impl Rule {
    fn parse(s: &str) -> Option<Rule> {
        Some(match s {
            "bracket" => Rule::Bracket,
            "ker" => Rule::Ker,
            "im" => Rule::Im,
            "intersect" => Rule::Intersect,
            "sum" => Rule::Sum,
            "promote" => Rule::Promote,
            "bracket_spaces" => Rule::BracketSpaces,
            "constrain" => Rule::Constrain,
            _ => return None,
        })
    }

    fn arity(self) -> usize {
        match self {
            Rule::Ker | Rule::Im | Rule::Promote => 1,
            Rule::Constrain => 3,
            _ => 2,
        }
    }

    fn keyword(self) -> &'static str {
        match self {
            Rule::Bracket => "bracket",
            Rule::Ker => "ker",
            Rule::Im => "im",
            Rule::Intersect => "intersect",
            Rule::Sum => "sum",
            Rule::Promote => "promote",
            Rule::BracketSpaces => "bracket_spaces",
            Rule::Constrain => "constrain",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expected {
    Element(String),
    Subspace(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepKind {
    Eigenspaces(Vec<String>),
    Apply { name: String, rule: Rule, args: Vec<String>, expect: Option<Expected> },
    Contradiction([String; 3]),
    Qed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub line: usize,
    pub kind: StepKind,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProofScript {
    pub target: Option<String>,
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Contradiction { step: usize },
    Qed,
    /// The script ended without a terminal step.
    Inconclusive,
    Failed { step: usize, reason: String },
}

#[derive(Clone, Debug)]
pub struct Transcript {
    pub target: Option<String>,
    pub lines: Vec<String>,
    pub outcome: Outcome,
    pub state: Option<DeductionState>,
}

impl Transcript {
    pub fn is_contradiction(&self) -> bool {
        matches!(self.outcome, Outcome::Contradiction { .. })
    }

    /// Number of steps that were validated.
    pub fn validated_steps(&self) -> usize {
        self.lines.iter().filter(|l| l.starts_with("step ")).count()
            - usize::from(matches!(self.outcome, Outcome::Failed { .. }))
    }
}

impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        match &self.outcome {
            Outcome::Contradiction { step } => writeln!(f, "CONTRADICTION at step {step}"),
            Outcome::Qed => writeln!(f, "QED"),
            Outcome::Inconclusive => writeln!(f, "INCONCLUSIVE: no terminal step"),
            Outcome::Failed { step, reason } => writeln!(f, "FAILED at step {step}: {reason}"),
        }
    }
}

fn tokens(line: &str, lineno: usize) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth: Option<char> = None;
    for (col, ch) in line.chars().enumerate() {
        match depth {
            Some(close) => {
                cur.push(ch);
                if ch == close {
                    depth = None;
                    out.push(std::mem::take(&mut cur));
                }
            }
            None if ch.is_whitespace() => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            None => {
                if ch == '(' || ch == '<' {
                    if !cur.is_empty() {
                        return Err(Error::Parse { line: lineno, col: col + 1, msg: "unexpected bracket".into() });
                    }
                    depth = Some(if ch == '(' { ')' } else { '>' });
                }
                cur.push(ch);
            }
        }
    }
    if depth.is_some() {
        return Err(Error::Parse { line: lineno, col: line.len() + 1, msg: "unclosed bracket".into() });
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

fn is_name(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_expected(tok: &str) -> Expected {
    if let Some(inner) = tok.strip_prefix('<').and_then(|t| t.strip_suffix('>')) {
        let parts = inner.split(',').map(|p| p.trim().to_string()).filter(|p| !p.is_empty()).collect();
        Expected::Subspace(parts)
    } else {
        Expected::Element(tok.trim_start_matches('(').trim_end_matches(')').to_string())
    }
}

pub fn parse_script(text: &str) -> Result<ProofScript> {
    let mut script = ProofScript::default();
    let mut terminated = false;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line, lineno)?;
        if toks.is_empty() {
            continue;
        }
        let perr = |msg: String| Error::Parse { line: lineno, col: 1, msg };
        if terminated {
            return Err(perr("statement after terminal step".into()));
        }
        let kind = match toks[0].as_str() {
            "target" => {
                if toks.len() != 2 || script.target.is_some() || !script.steps.is_empty() {
                    return Err(perr("'target' takes one name and comes first".into()));
                }
                script.target = Some(toks[1].clone());
                continue;
            }
            "qed" if toks.len() == 1 => StepKind::Qed,
            "contradiction" => {
                if toks.len() != 4 {
                    return Err(perr("'contradiction' takes three arguments".into()));
                }
                StepKind::Contradiction([toks[1].clone(), toks[2].clone(), toks[3].clone()])
            }
            _ => {
                let eq = toks.iter().position(|t| t == "=").ok_or_else(|| perr("expected '='".into()))?;
                let names = &toks[..eq];
                if names.is_empty() || !names.iter().all(|n| is_name(n)) {
                    return Err(perr("invalid binding name".into()));
                }
                let rhs = &toks[eq + 1..];
                match rhs.first().map(String::as_str) {
                    Some("eigenspaces") if rhs.len() == 1 => StepKind::Eigenspaces(names.to_vec()),
                    Some(r) => {
                        let rule = Rule::parse(r).ok_or_else(|| perr(format!("unknown rule '{r}'")))?;
                        if names.len() != 1 {
                            return Err(perr(format!("'{r}' binds one name")));
                        }
                        let mut args: Vec<String> = rhs[1..].to_vec();
                        let mut expect = None;
                        if let Some(p) = args.iter().position(|t| t == "expect") {
                            if p + 2 != args.len() {
                                return Err(perr("'expect' takes one value".into()));
                            }
                            expect = Some(parse_expected(&args[p + 1]));
                            args.truncate(p);
                        }
                        if args.len() != rule.arity() {
                            return Err(perr(format!("'{r}' takes {} arguments, got {}", rule.arity(), args.len())));
                        }
                        StepKind::Apply { name: names[0].clone(), rule, args, expect }
                    }
                    None => return Err(perr("missing rule".into())),
                }
            }
        };
        terminated = matches!(kind, StepKind::Contradiction(_) | StepKind::Qed);
        script.steps.push(Step { line: lineno, kind });
    }
    // names must be defined before use
    let mut defined: Vec<&str> = Vec::new();
    for (n, step) in script.steps.iter().enumerate() {
        let used: Vec<&String> = match &step.kind {
            StepKind::Apply { args, .. } => args.iter().collect(),
            StepKind::Contradiction(a) => a.iter().collect(),
            _ => Vec::new(),
        };
        for u in used {
            if is_name(u) && !looks_like_basis_vector(u) && !defined.contains(&u.as_str()) {
                return Err(Error::Script { step: n + 1, msg: format!("'{u}' used before definition") });
            }
        }
        match &step.kind {
            StepKind::Apply { name, .. } => defined.push(name),
            StepKind::Eigenspaces(names) => defined.extend(names.iter().map(String::as_str)),
            _ => {}
        }
    }
    Ok(script)
}

fn looks_like_basis_vector(s: &str) -> bool {
    s.strip_prefix('e').is_some_and(|d| !d.is_empty() && d.chars().all(|c| c.is_ascii_digit()))
}

#[derive(Clone)]
enum Value {
    Element(QVector),
    Subspace(Subspace<Rational>),
}

struct Runner {
    st: DeductionState,
    env: HashMap<String, Value>,
    lines: Vec<String>,
}

impl Runner {
    fn dim(&self) -> usize {
        self.st.algebra.dim()
    }

    fn lookup(&self, arg: &str) -> Result<Value> {
        if let Some(v) = self.env.get(arg) {
            return Ok(v.clone());
        }
        let body = arg.strip_prefix('(').and_then(|a| a.strip_suffix(')')).unwrap_or(arg);
        Ok(Value::Element(parse_vector(body, self.dim())?))
    }

    fn element(&mut self, arg: &str) -> Result<QVector> {
        match self.lookup(arg)? {
            Value::Element(v) => Ok(v),
            Value::Subspace(s) => {
                let (st, v) = nice_dim1_promote(&self.st, &s)?;
                self.st = st;
                Ok(v)
            }
        }
    }

    fn subspace(&self, arg: &str) -> Result<Subspace<Rational>> {
        match self.lookup(arg)? {
            Value::Element(v) => Subspace::span(self.dim(), &[v]),
            Value::Subspace(s) => Ok(s),
        }
    }

    fn apply(&mut self, rule: Rule, args: &[String]) -> Result<Value> {
        Ok(match rule {
            Rule::Bracket => {
                let (u, v) = (self.element(&args[0])?, self.element(&args[1])?);
                let (st, w) = nice_bracket(&self.st, &u, &v)?;
                self.st = st;
                Value::Element(w)
            }
            Rule::Ker | Rule::Im => {
                let v = self.element(&args[0])?;
                let (st, k, i) = nice_ker_im(&self.st, &v)?;
                self.st = st;
                Value::Subspace(if rule == Rule::Ker { k } else { i })
            }
            Rule::Promote => Value::Element(self.element(&args[0])?),
            Rule::Intersect | Rule::Sum | Rule::BracketSpaces => {
                let (s, t) = (self.subspace(&args[0])?, self.subspace(&args[1])?);
                let f = match rule {
                    Rule::Intersect => nice_intersect,
                    Rule::Sum => nice_sum,
                    _ => nice_bracket_subspaces,
                };
                let (st, r) = f(&self.st, &s, &t)?;
                self.st = st;
                Value::Subspace(r)
            }
            Rule::Constrain => {
                let s = self.subspace(&args[0])?;
                let w = self.element(&args[1])?;
                let t = self.subspace(&args[2])?;
                let (st, r) = nice_constraint_subspace(&self.st, &s, &w, &t)?;
                self.st = st;
                Value::Subspace(r)
            }
        })
    }

    fn check_expected(&self, got: &Value, exp: &Expected) -> Result<()> {
        let ok = match (got, exp) {
            (Value::Element(v), Expected::Element(e)) => proportional(v, &parse_vector(e, self.dim())?),
            (Value::Subspace(s), Expected::Subspace(vs)) => {
                let vecs = vs.iter().map(|v| parse_vector(v, self.dim())).collect::<Result<Vec<_>>>()?;
                *s == Subspace::span(self.dim(), &vecs)?
            }
            (Value::Subspace(s), Expected::Element(e)) => {
                s.dim() == 1 && proportional(&s.vectors()[0], &parse_vector(e, self.dim())?)
            }
            (Value::Element(v), Expected::Subspace(vs)) => {
                vs.len() == 1 && proportional(v, &parse_vector(&vs[0], self.dim())?)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Precondition(format!("expected {}, computed {}", show_expected(exp), show(got))))
        }
    }
}

fn show(v: &Value) -> String {
    match v {
        Value::Element(x) => format_vector(x),
        Value::Subspace(s) => s.to_string(),
    }
}

fn show_expected(e: &Expected) -> String {
    match e {
        Expected::Element(x) => x.clone(),
        Expected::Subspace(vs) => format!("<{}>", vs.join(", ")),
    }
}

fn describe(kind: &StepKind) -> String {
    match kind {
        StepKind::Eigenspaces(ns) => format!("{} = eigenspaces", ns.join(" ")),
        StepKind::Apply { name, rule, args, .. } => format!("{name} = {} {}", rule.keyword(), args.join(" ")),
        StepKind::Contradiction(a) => format!("contradiction {}", a.join(" ")),
        StepKind::Qed => "qed".into(),
    }
}

/// Replay a script against an algebra from the catalog, validating every
/// step and recording each recomputed subspace in reduced echelon form.
pub fn run_script(script: &ProofScript, catalog: &Catalog) -> Result<Transcript> {
    let Some(target) = &script.target else {
        return Ok(Transcript { target: None, lines: Vec::new(), outcome: Outcome::Inconclusive, state: None });
    };
    let entry = catalog.load(target)?;
    let mut r = Runner { st: DeductionState::new(entry.algebra.clone()), env: HashMap::new(), lines: Vec::new() };
    r.lines.push(format!("target {target} (dim {})", entry.algebra.dim()));
    let mut outcome = Outcome::Inconclusive;
    for (n, step) in script.steps.iter().enumerate() {
        let num = n + 1;
        r.lines.push(format!("step {num}: {}", describe(&step.kind)));
        let res: Result<Option<Outcome>> = (|| match &step.kind {
            StepKind::Eigenspaces(names) => {
                let (st, spaces) = assume_eigenspaces_nice(&r.st)?;
                if spaces.len() != names.len() {
                    return Err(Error::Precondition(format!(
                        "{} eigenspaces, {} names",
                        spaces.len(),
                        names.len()
                    )));
                }
                r.st = st;
                for (name, s) in names.iter().zip(spaces) {
                    r.lines.push(format!("  {name} = {s}"));
                    r.env.insert(name.clone(), Value::Subspace(s));
                }
                Ok(None)
            }
            StepKind::Apply { name, rule, args, expect } => {
                let v = r.apply(*rule, args)?;
                if let Some(e) = expect {
                    r.check_expected(&v, e)?;
                }
                r.lines.push(format!("  {name} = {}", show(&v)));
                r.env.insert(name.clone(), v);
                Ok(None)
            }
            StepKind::Contradiction([a, b, c]) => {
                let (v, w1, w2) = (r.element(a)?, r.element(b)?, r.element(c)?);
                if !contradiction_check(&r.st, &v, &w1, &w2)? {
                    return Err(Error::Precondition("brackets are not proportional".into()));
                }
                let alg = &r.st.algebra;
                r.lines.push(format!(
                    "  [{}, {}] = {}, [{}, {}] = {}",
                    format_vector(&v),
                    format_vector(&w1),
                    format_vector(&alg.bracket(&v, &w1)?),
                    format_vector(&v),
                    format_vector(&w2),
                    format_vector(&alg.bracket(&v, &w2)?)
                ));
                Ok(Some(Outcome::Contradiction { step: num }))
            }
            StepKind::Qed => Ok(Some(Outcome::Qed)),
        })();
        match res {
            Ok(Some(o)) => {
                outcome = o;
                break;
            }
            Ok(None) => {}
            Err(e) => {
                let reason = match e {
                    Error::Precondition(m) => m,
                    other => other.to_string(),
                };
                outcome = Outcome::Failed { step: num, reason };
                break;
            }
        }
    }
    Ok(Transcript { target: Some(target.clone()), lines: r.lines, outcome, state: Some(r.st) })
}
