use std::collections::BTreeMap;

use crate::error::Error;
use crate::fuzzy::{Fuzzification, MembershipFunction, TNorm, Universe};
use crate::inference::{Clause, LinguisticVariable, Rule, Term};

use super::validate::{check_definition, Suppressed};
use super::{
    is_identifier, ControllerDefinition, Diagnostic, Layout, Settings, VariableLines,
    MAX_RESOLUTION,
};

/// Outcome of checking a source text: the definition when there were no
/// errors, plus every diagnostic (errors and warnings) sorted by line.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub definition: Option<ControllerDefinition>,
    pub diagnostics: Vec<Diagnostic>,
}

impl Report {
    pub fn has_errors(&self) -> bool {
        self.diagnostics.iter().any(Diagnostic::is_error)
    }

    pub fn errors(&self) -> impl Iterator<Item = &Diagnostic> {
        self.diagnostics.iter().filter(|d| d.is_error())
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Diagnostic> {
        self.diagnostics.iter().filter(|d| !d.is_error())
    }
}

/// Parses and validates `text`. Warnings do not fail the parse; on failure
/// the full diagnostic list is returned.
pub fn parse(text: &str) -> Result<ControllerDefinition, Vec<Diagnostic>> {
    into_result(check(text))
}

/// [`parse`] over raw bytes; invalid UTF-8 is reported as a diagnostic.
pub fn parse_bytes(bytes: &[u8]) -> Result<ControllerDefinition, Vec<Diagnostic>> {
    into_result(check_bytes(bytes))
}

fn into_result(report: Report) -> Result<ControllerDefinition, Vec<Diagnostic>> {
    match report.definition {
        Some(def) => Ok(def),
        None => Err(report.diagnostics),
    }
}

pub fn check_bytes(bytes: &[u8]) -> Report {
    match std::str::from_utf8(bytes) {
        Ok(text) => check(text),
        Err(e) => {
            let line = 1 + bytes[..e.valid_up_to()]
                .iter()
                .filter(|&&b| b == b'\n')
                .count();
            Report {
                definition: None,
                diagnostics: vec![Diagnostic::error(line, "invalid UTF-8")],
            }
        }
    }
}

/// Parses `text` and runs every validation check.
pub fn check(text: &str) -> Report {
    let mut p = Parser::default();
    let mut total = 0;
    for (i, raw) in text.lines().enumerate() {
        total = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens = tokenize(content);
        if tokens.is_empty() {
            continue;
        }
        p.line(i + 1, &tokens);
    }
    p.finish(total.max(1))
}

fn tokenize(line: &str) -> Vec<&str> {
    let mut out = Vec::new();
    for word in line.split_whitespace() {
        let mut rest = word;
        while let Some(pos) = rest.find(',') {
            if pos > 0 {
                out.push(&rest[..pos]);
            }
            out.push(",");
            rest = &rest[pos + 1..];
        }
        if !rest.is_empty() {
            out.push(rest);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Stage {
    Start,
    Controller,
    Settings,
    Inputs,
    Outputs,
    Rules,
}

#[derive(Debug, Clone, Copy)]
enum Current {
    None,
    Input(usize),
    Output(usize),
    Broken,
}

#[derive(Default)]
struct Parser {
    name: Option<String>,
    settings: Option<Settings>,
    settings_seen: bool,
    controller_seen: bool,
    inputs: Vec<LinguisticVariable>,
    outputs: Vec<LinguisticVariable>,
    rules: Vec<Rule>,
    halfwidths: BTreeMap<String, f64>,
    layout: Layout,
    suppressed: Suppressed,
    diagnostics: Vec<Diagnostic>,
    stage: Option<Stage>,
    current: Option<Current>,
    broken_var: Option<String>,
}

type Parsed<T> = Result<T, String>;

impl Parser {
    fn error(&mut self, line: usize, message: impl Into<String>) {
        self.diagnostics.push(Diagnostic::error(line, message));
    }

    fn stage(&self) -> Stage {
        self.stage.unwrap_or(Stage::Start)
    }

    /// Records entry into `stage`, reporting items that come too late.
    fn advance(&mut self, line: usize, stage: Stage, what: &str) {
        if self.stage() > stage {
            let msg = format!("{what} out of order (expected controller, settings, inputs, outputs, rules)");
            self.error(line, msg);
        } else {
            self.stage = Some(stage);
        }
    }

    fn line(&mut self, line: usize, tokens: &[&str]) {
        let result = match tokens[0] {
            "controller" => self.controller(line, tokens),
            "settings" => self.settings(line, tokens),
            "input" => self.variable(line, tokens, false),
            "output" => self.variable(line, tokens, true),
            "term" => self.term(line, tokens),
            "rule" => self.rule(line, tokens),
            other => Err(format!("unknown keyword '{other}'")),
        };
        if let Err(msg) = result {
            self.error(line, msg);
        }
    }

    fn controller(&mut self, line: usize, tokens: &[&str]) -> Parsed<()> {
        if self.controller_seen {
            return Err("duplicate controller line".into());
        }
        self.controller_seen = true;
        if self.stage() > Stage::Start {
            self.error(line, "controller must be the first entry");
        } else {
            self.stage = Some(Stage::Controller);
        }
        self.layout.controller = line;
        let mut t = Tokens::new(tokens, 1);
        let name = t.ident("controller name")?;
        t.end()?;
        self.name = Some(name.to_string());
        Ok(())
    }

    fn settings(&mut self, line: usize, tokens: &[&str]) -> Parsed<()> {
        if self.settings_seen {
            return Err("duplicate settings line".into());
        }
        self.settings_seen = true;
        self.advance(line, Stage::Settings, "settings");
        self.layout.settings = line;
        let mut t = Tokens::new(tokens, 1);
        t.keyword("tnorm")?;
        let tnorm = match t.next("t-norm")? {
            "min" => TNorm::Min,
            "product" => TNorm::Product,
            other => return Err(format!("unknown t-norm '{other}' (expected min or product)")),
        };
        t.keyword("resolution")?;
        let resolution = t.integer("resolution")?;
        if !(2..=MAX_RESOLUTION).contains(&resolution) {
            return Err(format!("resolution must be between 2 and {MAX_RESOLUTION}"));
        }
        t.keyword("fuzzification")?;
        let fuzzification = match t.next("fuzzification mode")? {
            "singleton" => Fuzzification::Singleton,
            "triangular" => {
                let h = t.number("halfwidth")?;
                Fuzzification::triangular(h).map_err(|e| e.to_string())?
            }
            other => {
                return Err(format!(
                    "unknown fuzzification '{other}' (expected singleton or triangular)"
                ))
            }
        };
        t.end()?;
        self.settings = Some(Settings {
            tnorm,
            resolution,
            fuzzification,
        });
        Ok(())
    }

    fn variable(&mut self, line: usize, tokens: &[&str], output: bool) -> Parsed<()> {
        let (stage, what) = if output {
            (Stage::Outputs, "output")
        } else {
            (Stage::Inputs, "input")
        };
        self.advance(line, stage, what);
        // keep following terms away from the previous variable on failure
        self.current = Some(Current::Broken);
        self.broken_var = None;
        let mut t = Tokens::new(tokens, 1);
        let name = match t.ident("variable name") {
            Ok(name) => name.to_string(),
            Err(msg) => {
                if output {
                    self.suppressed.broken_outputs = true;
                } else {
                    self.suppressed.broken_inputs = true;
                }
                return Err(msg);
            }
        };
        let mark_broken = |p: &mut Parser, msg: String| {
            p.suppressed.variables.insert(name.clone());
            p.broken_var = Some(name.clone());
            if output {
                p.suppressed.broken_outputs = true;
            } else {
                p.suppressed.broken_inputs = true;
            }
            msg
        };
        let bounds = t
            .keyword("range")
            .and_then(|_| Ok((t.number("range start")?, t.number("range end")?)));
        let (lo, hi) = match bounds {
            Ok(b) => b,
            Err(msg) => return Err(mark_broken(self, msg)),
        };
        let universe = match Universe::new(lo, hi) {
            Ok(u) => u,
            Err(_) => {
                return Err(mark_broken(
                    self,
                    format!("range start {lo} must be below range end {hi}"),
                ))
            }
        };
        // optional per-input halfwidth; a bad one is reported but keeps the variable
        let halfwidth = if t.done() {
            Ok(None)
        } else if output {
            t.keyword("halfwidth")
                .and_then(|_| Err("halfwidth applies to inputs only".to_string()))
        } else {
            t.keyword("halfwidth")
                .and_then(|_| t.number("halfwidth"))
                .and_then(|h| t.end().map(|_| h))
                .and_then(|h| {
                    Fuzzification::triangular(h)
                        .map(|_| Some(h))
                        .map_err(|e| e.to_string())
                })
        };
        match halfwidth {
            Ok(Some(h)) => {
                self.halfwidths.insert(name.clone(), h);
            }
            Ok(None) => {}
            Err(msg) => self.error(line, msg),
        }
        let var = LinguisticVariable::new(name, universe);
        let lines = VariableLines {
            line,
            terms: Vec::new(),
        };
        if output {
            self.outputs.push(var);
            self.layout.outputs.push(lines);
            self.current = Some(Current::Output(self.outputs.len() - 1));
        } else {
            self.inputs.push(var);
            self.layout.inputs.push(lines);
            self.current = Some(Current::Input(self.inputs.len() - 1));
        }
        Ok(())
    }

    fn term(&mut self, line: usize, tokens: &[&str]) -> Parsed<()> {
        if self.stage() == Stage::Rules {
            self.error(line, "term out of order (terms must follow their variable)");
        }
        let current = self.current.unwrap_or(Current::None);
        if let Current::None = current {
            return Err("term outside of any input or output".into());
        }
        let owner = match current {
            Current::Input(i) => Some(self.inputs[i].name.clone()),
            Current::Output(o) => Some(self.outputs[o].name.clone()),
            _ => self.broken_var.clone(),
        };
        let mut t = Tokens::new(tokens, 1);
        let name = match t.ident("term name") {
            Ok(name) => name.to_string(),
            Err(msg) => {
                if let Some(var) = &owner {
                    self.suppressed.incomplete.insert(var.clone());
                }
                return Err(msg);
            }
        };
        let fail = |p: &mut Parser, msg: String| {
            if let Some(var) = &owner {
                p.suppressed.terms.insert((var.clone(), name.clone()));
                p.suppressed.incomplete.insert(var.clone());
            }
            msg
        };

        let mf = match shape(&mut t) {
            Ok(mf) => mf,
            Err(msg) => return Err(fail(self, msg)),
        };
        match current {
            Current::Input(i) => {
                self.inputs[i].terms.push(Term::new(name, mf));
                self.layout.inputs[i].terms.push(line);
            }
            Current::Output(o) => {
                self.outputs[o].terms.push(Term::new(name, mf));
                self.layout.outputs[o].terms.push(line);
            }
            _ => {}
        }
        Ok(())
    }

    fn rule(&mut self, line: usize, tokens: &[&str]) -> Parsed<()> {
        self.advance(line, Stage::Rules, "rule");
        self.current = Some(Current::None);
        match rule(tokens) {
            Ok(rule) => {
                self.rules.push(rule);
                self.layout.rules.push(line);
                Ok(())
            }
            Err(msg) => {
                self.suppressed.broken_rules = true;
                Err(msg)
            }
        }
    }

    fn finish(mut self, last: usize) -> Report {
        self.layout.last = last;
        if !self.controller_seen {
            self.error(1, "missing controller line");
        }
        if !self.settings_seen {
            self.error(1, "missing settings line");
        }
        let def = ControllerDefinition {
            name: self.name.take().unwrap_or_default(),
            settings: self.settings.unwrap_or_default(),
            inputs: std::mem::take(&mut self.inputs),
            outputs: std::mem::take(&mut self.outputs),
            rules: std::mem::take(&mut self.rules),
            halfwidths: std::mem::take(&mut self.halfwidths),
        };
        let mut diagnostics = self.diagnostics;
        diagnostics.extend(check_definition(&def, &self.layout, &self.suppressed));
        diagnostics.sort();
        diagnostics.dedup();
        let ok = !diagnostics.iter().any(Diagnostic::is_error);
        Report {
            definition: ok.then_some(def),
            diagnostics,
        }
    }
}

fn shape(t: &mut Tokens<'_, '_>) -> Parsed<MembershipFunction> {
    let kind = t.next("membership shape")?;
    let mf = match kind {
        "tri" => {
            let (a, b, c) = (t.number("a")?, t.number("b")?, t.number("c")?);
            t.end()?;
            MembershipFunction::triangular(a, b, c)
        }
        "trap" => {
            let (a, b, c, d) = (
                t.number("a")?,
                t.number("b")?,
                t.number("c")?,
                t.number("d")?,
            );
            t.end()?;
            MembershipFunction::trapezoidal(a, b, c, d)
        }
        other => return Err(format!("unknown membership shape '{other}' (expected tri or trap)")),
    };
    mf.map_err(|e| match e {
        Error::ZeroWidthSupport => "term has zero-width support".to_string(),
        other => other.to_string(),
    })
}

fn rule(tokens: &[&str]) -> Parsed<Rule> {
    let mut t = Tokens::new(tokens, 1);
    t.keyword("if")?;
    let mut antecedent = vec![t.clause()?];
    loop {
        match t.next("'and' or 'then'")? {
            "and" => antecedent.push(t.clause()?),
            "then" => break,
            other => return Err(format!("expected 'and' or 'then', found '{other}'")),
        }
    }
    let mut consequent = vec![t.clause()?];
    while !t.done() {
        t.keyword(",")?;
        consequent.push(t.clause()?);
    }
    Ok(Rule {
        antecedent,
        consequent,
    })
}

struct Tokens<'a, 'b> {
    tokens: &'b [&'a str],
    pos: usize,
}

impl<'a, 'b> Tokens<'a, 'b> {
    fn new(tokens: &'b [&'a str], pos: usize) -> Self {
        Tokens { tokens, pos }
    }

    fn done(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn next(&mut self, what: &str) -> Parsed<&'a str> {
        let tok = self
            .tokens
            .get(self.pos)
            .copied()
            .ok_or_else(|| format!("missing {what}"))?;
        self.pos += 1;
        Ok(tok)
    }

    fn keyword(&mut self, kw: &str) -> Parsed<()> {
        match self.next(&format!("'{kw}'"))? {
            tok if tok == kw => Ok(()),
            other => Err(format!("expected '{kw}', found '{other}'")),
        }
    }

    fn ident(&mut self, what: &str) -> Parsed<&'a str> {
        let tok = self.next(what)?;
        if is_identifier(tok) {
            Ok(tok)
        } else {
            Err(format!("invalid identifier '{tok}'"))
        }
    }

    fn number(&mut self, what: &str) -> Parsed<f64> {
        let tok = self.next(what)?;
        parse_number(tok).ok_or_else(|| format!("invalid number '{tok}' for {what}"))
    }

    fn integer(&mut self, what: &str) -> Parsed<usize> {
        let tok = self.next(what)?;
        if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("invalid integer '{tok}' for {what}"));
        }
        tok.parse()
            .map_err(|_| format!("{what} '{tok}' is too large"))
    }

    fn clause(&mut self) -> Parsed<Clause> {
        let variable = self.ident("variable name")?;
        self.keyword("is")?;
        let term = self.ident("term name")?;
        Ok(Clause::new(variable, term))
    }

    fn end(&self) -> Parsed<()> {
        match self.tokens.get(self.pos) {
            None => Ok(()),
            Some(tok) => Err(format!("unexpected token '{tok}'")),
        }
    }
}

/// Decimal with optional sign, fraction and exponent. No `inf`, `nan` or
/// hex forms; values that overflow to infinity are rejected.
pub(crate) fn parse_number(tok: &str) -> Option<f64> {
    let b = tok.as_bytes();
    let mut i = 0;
    if matches!(b.first(), Some(b'+' | b'-')) {
        i += 1;
    }
    let int_start = i;
    while i < b.len() && b[i].is_ascii_digit() {
        i += 1;
    }
    let mut digits = i - int_start;
    if i < b.len() && b[i] == b'.' {
        i += 1;
        let frac_start = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        digits += i - frac_start;
    }
    if digits == 0 {
        return None;
    }
    if i < b.len() && (b[i] == b'e' || b[i] == b'E') {
        i += 1;
        if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
            i += 1;
        }
        let exp_start = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        if i == exp_start {
            return None;
        }
    }
    if i != b.len() {
        return None;
    }
    tok.parse::<f64>().ok().filter(|v| v.is_finite())
}
