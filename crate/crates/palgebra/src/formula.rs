//! Propositional formulas over a non-associative conjunction.
//!
//! The language has atoms, the constant `0`, negation `~`, and a binary
//! conjunction `&` that is deliberately **not** associative: `a & b & c` is a
//! parse error, and `(a & b) & c` is a different formula from `a & (b & c)`.
//! Disjunction is surface syntax only; `s | t` is desugared at parse time to
//! `~(~t & ~s)` (note the operand swap — the conjunction underneath does not
//! commute, and this is the encoding under which `v(s | t) = v(s) + v(t)`).

use std::fmt;

/// A formula of the language: atoms, zero, negation, conjunction.
///
/// There is no disjunction variant: `|` exists only in the concrete syntax and
/// is eliminated by [`Formula::or`] during construction/parsing. Equality is
/// structural; in particular `~~a` and `a` are different formulas (collapsing
/// double negation is a theorem of the proof system, not a syntactic identity).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    /// The falsity constant, written `0`.
    Zero,
    /// A named atomic proposition.
    Atom(String),
    /// Negation, written `~f`.
    Neg(Box<Formula>),
    /// Conjunction, written `f & g`. Non-commutative, non-associative.
    And(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Create an atom.
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    /// Create a negation.
    pub fn neg(f: Formula) -> Self {
        Formula::Neg(Box::new(f))
    }

    /// Create a conjunction.
    pub fn and(lhs: Formula, rhs: Formula) -> Self {
        Formula::And(Box::new(lhs), Box::new(rhs))
    }

    /// Create a disjunction by desugaring: `or(s, t) = ~(~t & ~s)`.
    ///
    /// The operand swap matters: evaluating the right-hand side in a model
    /// gives `(t' · s')'`, which is exactly the derived sum `s + t`.
    pub fn or(lhs: Formula, rhs: Formula) -> Self {
        Formula::neg(Formula::and(Formula::neg(rhs), Formula::neg(lhs)))
    }

    /// Height of the syntax tree, counting leaves as 1.
    pub fn height(&self) -> usize {
        match self {
            Formula::Zero | Formula::Atom(_) => 1,
            Formula::Neg(f) => 1 + f.height(),
            Formula::And(l, r) => 1 + l.height().max(r.height()),
        }
    }

    /// Number of connectives (`~` and `&`) in the formula.
    pub fn connective_count(&self) -> usize {
        match self {
            Formula::Zero | Formula::Atom(_) => 0,
            Formula::Neg(f) => 1 + f.connective_count(),
            Formula::And(l, r) => 1 + l.connective_count() + r.connective_count(),
        }
    }

    /// Collect the distinct atom names, in first-occurrence order.
    pub fn atoms(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut Vec<String>) {
        match self {
            Formula::Zero => {}
            Formula::Atom(name) => {
                if !out.iter().any(|a| a == name) {
                    out.push(name.clone());
                }
            }
            Formula::Neg(f) => f.collect_atoms(out),
            Formula::And(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// All subformulas (including `self`), deduplicated, outermost first.
    pub fn subformulas(&self) -> Vec<Formula> {
        let mut out = Vec::new();
        self.collect_subformulas(&mut out);
        out
    }

    fn collect_subformulas(&self, out: &mut Vec<Formula>) {
        if !out.contains(self) {
            out.push(self.clone());
        }
        match self {
            Formula::Zero | Formula::Atom(_) => {}
            Formula::Neg(f) => f.collect_subformulas(out),
            Formula::And(l, r) => {
                l.collect_subformulas(out);
                r.collect_subformulas(out);
            }
        }
    }
}

impl fmt::Display for Formula {
    /// Print in the concrete grammar with the minimum parentheses that
    /// re-parse to the same tree. Conjunction arguments that are themselves
    /// conjunctions must be parenthesized (the grammar rejects `a & b & c`),
    /// and so must conjunctions under `~`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Zero => write!(f, "0"),
            Formula::Atom(name) => write!(f, "{name}"),
            Formula::Neg(inner) => match **inner {
                Formula::And(_, _) => write!(f, "~({inner})"),
                _ => write!(f, "~{inner}"),
            },
            Formula::And(l, r) => {
                match **l {
                    Formula::And(_, _) => write!(f, "({l})")?,
                    _ => write!(f, "{l}")?,
                }
                write!(f, " & ")?;
                match **r {
                    Formula::And(_, _) => write!(f, "({r})"),
                    _ => write!(f, "{r}"),
                }
            }
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Error produced by the formula/sequent parser, with a byte offset into the
/// input for pinpointing the failure.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    /// Byte offset of the offending token.
    pub pos: usize,
    /// Human-readable description of what went wrong.
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    Tilde,
    Amp,
    Pipe,
    Turnstile,
    Comma,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut toks = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '~' => {
                toks.push((i, Tok::Tilde));
                i += 1;
            }
            '&' => {
                toks.push((i, Tok::Amp));
                i += 1;
            }
            '|' => {
                if bytes.get(i + 1) == Some(&b'-') {
                    toks.push((i, Tok::Turnstile));
                    i += 2;
                } else {
                    toks.push((i, Tok::Pipe));
                    i += 1;
                }
            }
            ',' => {
                toks.push((i, Tok::Comma));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '0' => {
                toks.push((i, Tok::Zero));
                i += 1;
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(src[start..i].to_string())));
            }
            other => {
                return Err(ParseError {
                    pos: i,
                    msg: format!("unexpected character {other:?}"),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    cursor: usize,
    end: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self, ParseError> {
        let toks = lex(src)?;
        Ok(Parser {
            toks,
            cursor: 0,
            end: src.len(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.cursor).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks
            .get(self.cursor)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.cursor).map(|(_, t)| t.clone());
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    /// formula := unary (('&' | '|') unary)?
    ///
    /// At most one binary connective per parenthesization level: a second `&`
    /// or `|` at the same level is rejected so that association is always
    /// written out explicitly.
    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.unary()?;
        match self.peek() {
            Some(Tok::Amp) => {
                self.bump();
                let rhs = self.unary()?;
                match self.peek() {
                    Some(Tok::Amp) | Some(Tok::Pipe) => self.err(
                        "chained binary connectives need parentheses: write (a & b) & c or a & (b & c)",
                    ),
                    _ => Ok(Formula::and(lhs, rhs)),
                }
            }
            Some(Tok::Pipe) => {
                self.bump();
                let rhs = self.unary()?;
                match self.peek() {
                    Some(Tok::Amp) | Some(Tok::Pipe) => self.err(
                        "chained binary connectives need parentheses: write (a | b) | c or a | (b | c)",
                    ),
                    _ => Ok(Formula::or(lhs, rhs)),
                }
            }
            _ => Ok(lhs),
        }
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::Tilde) => {
                self.bump();
                Ok(Formula::neg(self.unary()?))
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.bump() {
            Some(Tok::Zero) => Ok(Formula::Zero),
            Some(Tok::Ident(name)) => Ok(Formula::Atom(name)),
            Some(Tok::LParen) => {
                let f = self.formula()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(f),
                    Some(_) => {
                        self.cursor -= 1;
                        self.err("expected ')'")
                    }
                    None => self.err("expected ')', found end of input"),
                }
            }
            Some(tok) => {
                self.cursor -= 1;
                self.err(format!("expected a formula, found {tok:?}"))
            }
            None => self.err("expected a formula, found end of input"),
        }
    }

    fn formula_list(&mut self) -> Result<Vec<Formula>, ParseError> {
        let mut out = vec![self.formula()?];
        while self.peek() == Some(&Tok::Comma) {
            self.bump();
            out.push(self.formula()?);
        }
        Ok(out)
    }

    fn at_end(&self) -> bool {
        self.cursor == self.toks.len()
    }
}

/// Parse a single formula. The whole input must be consumed.
pub fn parse_formula(src: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(src)?;
    let f = p.formula()?;
    if p.at_end() {
        Ok(f)
    } else {
        p.err("trailing input after formula")
    }
}

/// A two-sided sequent as written: comma-separated assumptions, `|-`,
/// comma-separated conclusions. Either side may be empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SurfaceSequent {
    /// Formulas left of the turnstile.
    pub lhs: Vec<Formula>,
    /// Formulas right of the turnstile.
    pub rhs: Vec<Formula>,
}

impl fmt::Display for SurfaceSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |fs: &[Formula]| {
            fs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        if self.lhs.is_empty() {
            write!(f, "|-")?;
        } else {
            write!(f, "{} |-", join(&self.lhs))?;
        }
        if self.rhs.is_empty() {
            Ok(())
        } else {
            write!(f, " {}", join(&self.rhs))
        }
    }
}

impl fmt::Debug for SurfaceSequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parse a two-sided sequent such as `a, b |- c` or `a, ~a |-` or `|-`.
pub fn parse_sequent(src: &str) -> Result<SurfaceSequent, ParseError> {
    let mut p = Parser::new(src)?;
    let lhs = if p.peek() == Some(&Tok::Turnstile) {
        Vec::new()
    } else {
        p.formula_list()?
    };
    match p.bump() {
        Some(Tok::Turnstile) => {}
        _ => {
            p.cursor = p.cursor.saturating_sub(1);
            return p.err("expected '|-'");
        }
    }
    let rhs = if p.at_end() {
        Vec::new()
    } else {
        p.formula_list()?
    };
    if p.at_end() {
        Ok(SurfaceSequent { lhs, rhs })
    } else {
        p.err("trailing input after sequent")
    }
}

/// Every formula of syntax height ≤ `height` over `0` and the given atoms,
/// deduplicated, in a deterministic order (shorter first, leaves before `~`
/// before `&`). Height counts leaves as 1, so `height = 2` means at most one
/// connective.
pub fn formula_universe(atoms: &[&str], height: usize) -> Vec<Formula> {
    let mut by_height: Vec<Vec<Formula>> = vec![Vec::new()];
    for h in 1..=height {
        let mut layer: Vec<Formula> = Vec::new();
        if h == 1 {
            layer.push(Formula::Zero);
            layer.extend(atoms.iter().map(|a| Formula::atom(*a)));
        } else {
            let shorter: Vec<&Formula> = by_height[..h].iter().flatten().collect();
            // `~f` has height exactly h when f has height h-1.
            for f in &by_height[h - 1] {
                layer.push(Formula::neg(f.clone()));
            }
            // `l & r` has height exactly h when max(|l|, |r|) = h-1.
            for l in &shorter {
                for r in &shorter {
                    if l.height().max(r.height()) == h - 1 {
                        layer.push(Formula::and((*l).clone(), (*r).clone()));
                    }
                }
            }
        }
        by_height.push(layer);
    }
    by_height.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Formula {
        Formula::atom("a")
    }
    fn b() -> Formula {
        Formula::atom("b")
    }

    #[test]
    fn or_desugars_with_swapped_operands() {
        // a | b must become ~(~b & ~a), not ~(~a & ~b).
        let parsed = parse_formula("a | b").unwrap();
        let expected = Formula::neg(Formula::and(Formula::neg(b()), Formula::neg(a())));
        assert_eq!(parsed, expected);
    }

    #[test]
    fn conjunction_does_not_associate() {
        let err = parse_formula("a & b & c").unwrap_err();
        assert!(err.msg.contains("parentheses"), "got: {err}");
        assert!(parse_formula("(a & b) & c").is_ok());
        assert!(parse_formula("a & (b & c)").is_ok());
        assert_ne!(
            parse_formula("(a & b) & c").unwrap(),
            parse_formula("a & (b & c)").unwrap()
        );
    }

    #[test]
    fn mixed_binary_connectives_need_parens() {
        assert!(parse_formula("a & b | c").is_err());
        assert!(parse_formula("a | b & c").is_err());
        assert!(parse_formula("(a | b) & c").is_ok());
    }

    #[test]
    fn tilde_binds_tightest() {
        let f = parse_formula("~a & b").unwrap();
        assert_eq!(f, Formula::and(Formula::neg(a()), b()));
        let g = parse_formula("~(a & b)").unwrap();
        assert_eq!(g, Formula::neg(Formula::and(a(), b())));
    }

    #[test]
    fn zero_and_identifiers() {
        assert_eq!(parse_formula("0").unwrap(), Formula::Zero);
        assert_eq!(parse_formula("~0").unwrap(), Formula::neg(Formula::Zero));
        assert_eq!(
            parse_formula("x_1").unwrap(),
            Formula::Atom("x_1".to_string())
        );
        // Identifiers must start with a letter; "0x" lexes as 0 then x.
        assert!(parse_formula("0x").is_err());
    }

    #[test]
    fn display_round_trips_nested_conjunctions() {
        let f = Formula::and(Formula::and(a(), b()), Formula::neg(Formula::and(a(), b())));
        let printed = f.to_string();
        assert_eq!(printed, "(a & b) & ~(a & b)");
        assert_eq!(parse_formula(&printed).unwrap(), f);
    }

    #[test]
    fn sequent_parsing_handles_empty_sides() {
        let s = parse_sequent("a, ~a |-").unwrap();
        assert_eq!(s.lhs, vec![a(), Formula::neg(a())]);
        assert!(s.rhs.is_empty());

        let s = parse_sequent("|- a | ~a").unwrap();
        assert!(s.lhs.is_empty());
        assert_eq!(s.rhs, vec![Formula::or(a(), Formula::neg(a()))]);

        let s = parse_sequent("|-").unwrap();
        assert!(s.lhs.is_empty() && s.rhs.is_empty());
    }

    #[test]
    fn sequent_display_round_trips() {
        for src in ["a, b |- c", "a, ~a |-", "|- a", "|-", "a & (b & c) |- ~0"] {
            let s = parse_sequent(src).unwrap();
            let reparsed = parse_sequent(&s.to_string()).unwrap();
            assert_eq!(s, reparsed, "via {:?}", s.to_string());
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_formula("a & $").unwrap_err();
        assert_eq!(err.pos, 4);
        let err = parse_formula("(a & b").unwrap_err();
        assert_eq!(err.pos, 6);
    }

    #[test]
    fn universe_counts_and_order_are_pinned() {
        // Height ≤ 2 over {a, b}: three leaves, their negations, and the
        // nine ordered conjunctions.
        let u = formula_universe(&["a", "b"], 2);
        assert_eq!(u.len(), 15);
        let rendered: Vec<String> = u.iter().map(|f| f.to_string()).collect();
        assert_eq!(
            rendered,
            [
                "0", "a", "b", "~0", "~a", "~b", "0 & 0", "0 & a", "0 & b", "a & 0", "a & a",
                "a & b", "b & 0", "b & a", "b & b",
            ]
        );
        // No duplicates at height 3 either, and every formula fits the bound.
        let u3 = formula_universe(&["a"], 3);
        for (i, f) in u3.iter().enumerate() {
            assert!(f.height() <= 3);
            assert!(!u3[..i].contains(f), "duplicate {f}");
        }
        // 2 leaves + 6 of height 2 + (6 negations + 60 conjunctions) of
        // height 3, pinned as a regression count.
        assert_eq!(u3.len(), 74);
    }
}
