//! The proof-script text format: one rule application per line, ending in a
//! `goal` declaration.
//!
//! This module is the reference for the grammar. A script is a sequence of
//! lines; `#` starts a comment anywhere outside quotes; blank lines are
//! ignored. Formulas and sequents are quoted in the same grammar the formula
//! parser accepts (quotes can never occur inside them).
//!
//! ```text
//! script   = { line } ;
//! line     = [ step | goal ] [ "#" comment ] newline ;
//! step     = id "=" rule { param } "[" [ id { "," id } ] "]" ;
//! goal     = "goal" id quoted-sequent ;
//! param    = key "=" value ;
//! value    = integer | quoted-formula | "[" [ quoted { "," quoted } ] "]" ;
//! id       = (letter | "_") { letter | digit | "_" } ;
//! ```
//!
//! Tokens may be separated by any amount of spaces or tabs, and parameters
//! may appear in any order; each rule requires exactly the keys below. The
//! printer is canonical: single spaces, parameters in the listed order,
//! `", "` between list elements, and a trailing newline — so
//! parse∘print is the identity on scripts and print∘parse is the identity on
//! canonical text.
//!
//! | rule         | parameters                  | premises |
//! |--------------|-----------------------------|----------|
//! | `Cut`        | `at=N formula="…"`          | 2        |
//! | `Circ`       | —                           | 1        |
//! | `EWeak`      | `before=[…] after=[…]`      | 1        |
//! | `MWeak`      | `at=N formula="…"`          | 2        |
//! | `ZeroAxiom`  | —                           | 0        |
//! | `NAxiom`     | `formula="…"`               | 0        |
//! | `LLAndIntro` | —                           | 1        |
//! | `LLAndElim`  | —                           | 1        |
//! | `MLAndIntro` | `at=N formula="…"`          | 2        |
//! | `MLAndElim`  | `at=N`                      | 2        |
//!
//! The goal line must name the final step, and its sequent must be
//! left-sided (nothing to the right of `|-`): scripts prove kernel sequents,
//! and translating a two-sided sequent is the jump operator's job, not the
//! parser's.

use std::fmt::Write as _;

use super::{ProofScript, Rule, Step};
use crate::formula::{parse_formula, parse_sequent, Formula};
use crate::sequent::Sequent;

/// Error produced by the script parser, with a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct ScriptError {
    /// Line the failure was detected on.
    pub line: usize,
    /// Human-readable description of what went wrong.
    pub msg: String,
}

/// Render a script in the canonical text form.
pub fn print_script(script: &ProofScript) -> String {
    let mut out = String::new();
    for step in &script.steps {
        let _ = write!(out, "{} = {}", step.id, rule_head(&step.rule));
        let _ = writeln!(out, " [{}]", step.premises.join(", "));
    }
    let last = script.steps.last().map(|s| s.id.as_str()).unwrap_or("?");
    let _ = writeln!(out, "goal {last} \"{}\"", script.goal);
    out
}

fn rule_head(rule: &Rule) -> String {
    match rule {
        Rule::Cut { position, formula } => format!("Cut at={position} formula=\"{formula}\""),
        Rule::Circ => "Circ".to_string(),
        Rule::EWeak { before, after } => {
            format!("EWeak before={} after={}", quoted_list(before), quoted_list(after))
        }
        Rule::MWeak { position, formula } => format!("MWeak at={position} formula=\"{formula}\""),
        Rule::ZeroAxiom => "ZeroAxiom".to_string(),
        Rule::NAxiom { formula } => format!("NAxiom formula=\"{formula}\""),
        Rule::LLAndIntro => "LLAndIntro".to_string(),
        Rule::LLAndElim => "LLAndElim".to_string(),
        Rule::MLAndIntro { position, formula } => {
            format!("MLAndIntro at={position} formula=\"{formula}\"")
        }
        Rule::MLAndElim { position } => format!("MLAndElim at={position}"),
    }
}

fn quoted_list(formulas: &[Formula]) -> String {
    let items: Vec<String> = formulas.iter().map(|f| format!("\"{f}\"")).collect();
    format!("[{}]", items.join(", "))
}

/// Parse the canonical (or any whitespace/ordering-relaxed) text form.
pub fn parse_script(src: &str) -> Result<ProofScript, ScriptError> {
    let mut steps: Vec<Step> = Vec::new();
    let mut goal: Option<(usize, String, Sequent)> = None;
    let mut last_line = 0;

    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let text = strip_comment(raw);
        let mut p = LineParser::new(text, line);
        p.skip_ws();
        if p.done() {
            continue;
        }
        if goal.is_some() {
            return Err(err(line, "content after the goal line"));
        }
        let word = p.ident("step id or `goal`")?;
        if word == "goal" {
            p.skip_ws();
            let id = p.ident("goal step id")?;
            p.skip_ws();
            let quoted = p.quoted()?;
            p.expect_end()?;
            let surface = parse_sequent(&quoted)
                .map_err(|e| err(line, format!("goal sequent: {e}")))?;
            if !surface.rhs.is_empty() {
                return Err(err(line, "goal sequent must be left-sided (nothing after |-)"));
            }
            goal = Some((line, id, Sequent(surface.lhs)));
            continue;
        }
        let id = word;
        if steps.iter().any(|s| s.id == id) {
            return Err(err(line, format!("duplicate step id `{id}`")));
        }
        p.skip_ws();
        p.expect_char('=')?;
        p.skip_ws();
        let rule_name = p.ident("rule name")?;
        let (rule, premises) = p.rule_tail(&rule_name)?;
        steps.push(Step { id, rule, premises });
    }

    let Some((goal_line, goal_id, goal_seq)) = goal else {
        return Err(err(last_line.max(1), "missing goal line"));
    };
    let Some(last) = steps.last() else {
        return Err(err(goal_line, "script has no steps"));
    };
    if last.id != goal_id {
        return Err(err(
            goal_line,
            format!("goal names step `{goal_id}` but the final step is `{}`", last.id),
        ));
    }
    Ok(ProofScript { steps, goal: goal_seq })
}

/// Remove a `#` comment, honoring quotes.
fn strip_comment(line: &str) -> &str {
    let mut in_quotes = false;
    for (i, c) in line.char_indices() {
        match c {
            '"' => in_quotes = !in_quotes,
            '#' if !in_quotes => return &line[..i],
            _ => {}
        }
    }
    line
}

fn err(line: usize, msg: impl Into<String>) -> ScriptError {
    ScriptError { line, msg: msg.into() }
}

/// One parsed `key=value` parameter.
enum ParamValue {
    Number(usize),
    Quoted(String),
    List(Vec<String>),
}

struct LineParser<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> LineParser<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        Self { text, pos: 0, line }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn done(&self) -> bool {
        self.rest().is_empty()
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(' ' | '\t')) {
            self.pos += 1;
        }
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T, ScriptError> {
        Err(err(self.line, msg))
    }

    fn expect_char(&mut self, want: char) -> Result<(), ScriptError> {
        if self.peek() == Some(want) {
            self.pos += want.len_utf8();
            Ok(())
        } else {
            self.fail(format!("expected `{want}`, found `{}`", preview(self.rest())))
        }
    }

    fn expect_end(&mut self) -> Result<(), ScriptError> {
        self.skip_ws();
        if self.done() {
            Ok(())
        } else {
            self.fail(format!("unexpected trailing `{}`", preview(self.rest())))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, ScriptError> {
        let start = self.pos;
        if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == '_') {
            return self.fail(format!("expected {what}, found `{}`", preview(self.rest())));
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        Ok(self.text[start..self.pos].to_string())
    }

    fn number(&mut self) -> Result<usize, ScriptError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail(format!("expected a number, found `{}`", preview(self.rest())));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| err(self.line, format!("number `{}` out of range", &self.text[start..self.pos])))
    }

    fn quoted(&mut self) -> Result<String, ScriptError> {
        self.expect_char('"')?;
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c == '"' {
                let body = self.text[start..self.pos].to_string();
                self.pos += 1;
                return Ok(body);
            }
            self.pos += c.len_utf8();
        }
        self.fail("unterminated quote")
    }

    fn quoted_list(&mut self) -> Result<Vec<String>, ScriptError> {
        self.expect_char('[')?;
        let mut items = Vec::new();
        self.skip_ws();
        if self.peek() == Some(']') {
            self.pos += 1;
            return Ok(items);
        }
        loop {
            self.skip_ws();
            items.push(self.quoted()?);
            self.skip_ws();
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(']') => {
                    self.pos += 1;
                    return Ok(items);
                }
                _ => return self.fail(format!(
                    "expected `,` or `]` in list, found `{}`",
                    preview(self.rest())
                )),
            }
        }
    }

    /// Parse `key=value` parameters up to the premise list, then the list.
    fn rule_tail(&mut self, rule_name: &str) -> Result<(Rule, Vec<String>), ScriptError> {
        let mut params: Vec<(String, ParamValue)> = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some('[') => break,
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let key = self.ident("parameter name")?;
                    if params.iter().any(|(k, _)| *k == key) {
                        return self.fail(format!("duplicate parameter `{key}`"));
                    }
                    self.skip_ws();
                    self.expect_char('=')?;
                    self.skip_ws();
                    let value = match self.peek() {
                        Some('"') => ParamValue::Quoted(self.quoted()?),
                        Some('[') => ParamValue::List(self.quoted_list()?),
                        Some(c) if c.is_ascii_digit() => ParamValue::Number(self.number()?),
                        _ => return self.fail(format!(
                            "expected a number, quoted formula, or list after `{key}=`, found `{}`",
                            preview(self.rest())
                        )),
                    };
                    params.push((key, value));
                }
                _ => return self.fail(format!(
                    "expected a parameter or premise list, found `{}`",
                    preview(self.rest())
                )),
            }
        }
        let rule = self.build_rule(rule_name, params)?;
        let premises = self.premise_list()?;
        self.expect_end()?;
        Ok((rule, premises))
    }

    fn premise_list(&mut self) -> Result<Vec<String>, ScriptError> {
        self.expect_char('[')?;
        let mut ids = Vec::new();
        self.skip_ws();
        if self.peek() == Some(']') {
            self.pos += 1;
            return Ok(ids);
        }
        loop {
            self.skip_ws();
            ids.push(self.ident("premise id")?);
            self.skip_ws();
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(']') => {
                    self.pos += 1;
                    return Ok(ids);
                }
                _ => return self.fail(format!(
                    "expected `,` or `]` in premise list, found `{}`",
                    preview(self.rest())
                )),
            }
        }
    }

    fn build_rule(
        &self,
        name: &str,
        mut params: Vec<(String, ParamValue)>,
    ) -> Result<Rule, ScriptError> {
        let rule = match name {
            "Cut" => Rule::Cut {
                position: self.number_param(name, &mut params, "at")?,
                formula: self.formula_param(name, &mut params)?,
            },
            "Circ" => Rule::Circ,
            "EWeak" => Rule::EWeak {
                before: self.list_param(name, &mut params, "before")?,
                after: self.list_param(name, &mut params, "after")?,
            },
            "MWeak" => Rule::MWeak {
                position: self.number_param(name, &mut params, "at")?,
                formula: self.formula_param(name, &mut params)?,
            },
            "ZeroAxiom" => Rule::ZeroAxiom,
            "NAxiom" => Rule::NAxiom {
                formula: self.formula_param(name, &mut params)?,
            },
            "LLAndIntro" => Rule::LLAndIntro,
            "LLAndElim" => Rule::LLAndElim,
            "MLAndIntro" => Rule::MLAndIntro {
                position: self.number_param(name, &mut params, "at")?,
                formula: self.formula_param(name, &mut params)?,
            },
            "MLAndElim" => Rule::MLAndElim {
                position: self.number_param(name, &mut params, "at")?,
            },
            other => return self.fail(format!("unknown rule `{other}`")),
        };
        if let Some((key, _)) = params.first() {
            return self.fail(format!("{name} does not take `{key}=`"));
        }
        Ok(rule)
    }

    fn number_param(
        &self,
        name: &str,
        params: &mut Vec<(String, ParamValue)>,
        key: &str,
    ) -> Result<usize, ScriptError> {
        let i = params
            .iter()
            .position(|(k, _)| k == key)
            .ok_or_else(|| err(self.line, format!("{name} requires `{key}=`")))?;
        match params.remove(i).1 {
            ParamValue::Number(n) => Ok(n),
            _ => self.fail(format!("{name}: `{key}=` must be a number")),
        }
    }

    fn formula_param(
        &self,
        name: &str,
        params: &mut Vec<(String, ParamValue)>,
    ) -> Result<Formula, ScriptError> {
        let i = params
            .iter()
            .position(|(k, _)| k == "formula")
            .ok_or_else(|| err(self.line, format!("{name} requires `formula=`")))?;
        match params.remove(i).1 {
            ParamValue::Quoted(text) => parse_formula(&text)
                .map_err(|e| err(self.line, format!("{name} formula: {e}"))),
            _ => self.fail(format!("{name}: `formula=` must be quoted")),
        }
    }

    fn list_param(
        &self,
        name: &str,
        params: &mut Vec<(String, ParamValue)>,
        key: &str,
    ) -> Result<Vec<Formula>, ScriptError> {
        let i = params
            .iter()
            .position(|(k, _)| k == key)
            .ok_or_else(|| err(self.line, format!("{name} requires `{key}=`")))?;
        match params.remove(i).1 {
            ParamValue::List(items) => items
                .iter()
                .map(|text| {
                    parse_formula(text)
                        .map_err(|e| err(self.line, format!("{name} {key} formula: {e}")))
                })
                .collect(),
            _ => self.fail(format!("{name}: `{key}=` must be a quoted list")),
        }
    }
}

fn preview(rest: &str) -> &str {
    if rest.is_empty() {
        return "end of line";
    }
    let cut = rest
        .char_indices()
        .take(12)
        .last()
        .map(|(i, c)| i + c.len_utf8())
        .unwrap_or(rest.len());
    &rest[..cut]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::check_proof;

    const SAMPLE: &str = r#"
# a & b, ~b |- via the weakened negation axiom
s1 = NAxiom formula="b" []
s2 = EWeak before=["a"] after=[] [s1]   # a, b, ~b |-
s3 = LLAndIntro [s2]
goal s3 "a & b, ~b |-"
"#;

    #[test]
    fn parses_and_checks_the_sample() {
        let script = parse_script(SAMPLE).unwrap();
        assert_eq!(script.steps.len(), 3);
        check_proof(&script).unwrap();
    }

    #[test]
    fn print_then_parse_is_identity() {
        let script = parse_script(SAMPLE).unwrap();
        let text = print_script(&script);
        assert_eq!(parse_script(&text).unwrap(), script);
        // Canonical text is a fixpoint of print ∘ parse.
        assert_eq!(print_script(&parse_script(&text).unwrap()), text);
    }

    #[test]
    fn canonical_text_is_exact() {
        let script = parse_script(SAMPLE).unwrap();
        let expected = "s1 = NAxiom formula=\"b\" []\n\
                        s2 = EWeak before=[\"a\"] after=[] [s1]\n\
                        s3 = LLAndIntro [s2]\n\
                        goal s3 \"a & b, ~b |-\"\n";
        assert_eq!(print_script(&script), expected);
    }

    #[test]
    fn every_rule_round_trips() {
        let text = "\
            s1 = ZeroAxiom []\n\
            s2 = NAxiom formula=\"a & ~b\" []\n\
            s3 = EWeak before=[\"0\", \"~x\"] after=[\"y\"] [s2]\n\
            s4 = Circ [s1]\n\
            s5 = Cut at=0 formula=\"c\" [s1, s2]\n\
            s6 = MWeak at=1 formula=\"d\" [s3, s4]\n\
            s7 = LLAndIntro [s6]\n\
            s8 = LLAndElim [s7]\n\
            s9 = MLAndIntro at=0 formula=\"e\" [s8, s2]\n\
            s10 = MLAndElim at=2 [s9, s1]\n\
            goal s10 \"0 |-\"\n";
        // Syntactic round-trip only: the steps are deliberately nonsense, so
        // the parser must not try to check them.
        let script = parse_script(text).unwrap();
        assert_eq!(print_script(&script), text);
    }

    #[test]
    fn rejects_malformed_lines() {
        let cases: &[(&str, &str)] = &[
            ("s1 = Nonsense []\ngoal s1 \"0 |-\"", "unknown rule"),
            ("s1 = NAxiom []\ngoal s1 \"a, ~a |-\"", "requires `formula=`"),
            ("s1 = ZeroAxiom at=1 []\ngoal s1 \"0 |-\"", "does not take `at=`"),
            ("s1 = ZeroAxiom []", "missing goal line"),
            ("s1 = ZeroAxiom []\ngoal s9 \"0 |-\"", "final step is `s1`"),
            ("s1 = ZeroAxiom []\ns1 = ZeroAxiom []\ngoal s1 \"0 |-\"", "duplicate step id"),
            ("s1 = ZeroAxiom []\ngoal s1 \"0 |-\"\ns2 = ZeroAxiom []", "after the goal"),
            ("s1 = NAxiom formula=\"a &\" []\ngoal s1 \"0 |-\"", "formula"),
            ("s1 = NAxiom formula=\"a []\ngoal s1 \"0 |-\"", "unterminated"),
            ("s1 = ZeroAxiom [] junk\ngoal s1 \"0 |-\"", "trailing"),
            ("goal s1 \"0 |- 0\"", "left-sided"),
            ("s1 = Cut at=x formula=\"a\" [s1, s1]\ngoal s1 \"0 |-\"", "number"),
        ];
        for (text, needle) in cases {
            let e = parse_script(text).unwrap_err();
            assert!(
                e.msg.contains(needle),
                "`{text}` should fail mentioning `{needle}`, got: {e}"
            );
        }
    }

    #[test]
    fn comments_and_spacing_are_tolerated() {
        let text = "  s1   =   NAxiom   formula=\"a\"   [ ]  # trailing\n\
                    \t\n\
                    # full-line comment with a \" quote? no: comments have no quotes once open\n\
                    s2=EWeak before=[] after=[\"b\"] [ s1 ]\n\
                    goal   s2   \"a, ~a, b |-\"  \n";
        let script = parse_script(text).unwrap();
        check_proof(&script).unwrap();
        assert_eq!(script.steps[1].premises, vec!["s1".to_string()]);
    }

    #[test]
    fn error_lines_are_one_based() {
        let text = "s1 = ZeroAxiom []\n\nbad line here\n";
        let e = parse_script(text).unwrap_err();
        assert_eq!(e.line, 3);
    }
}
