//! The trusted proof checker for the sequent calculus.
//!
//! The calculus works on one-sided sequents (see [`crate::sequent`]) and has
//! ten primitive rule tags: `Cut`, `Circ`, `EWeak`, `MWeak`, the two axioms
//! `ZeroAxiom` and `NAxiom`, and the four conjunction tags `LLAndIntro` /
//! `LLAndElim` / `MLAndIntro` / `MLAndElim` (each bidirectional rule is split
//! into one tag per direction — a checker needs a direction per step).
//!
//! Everything here is *structural*: a premise matches a rule exactly or not at
//! all, and in particular `~~a` never matches `a` — double negation is
//! handled by the derived rules in [`derived`], not by the kernel. Checking a
//! step computes the unique conclusion from the rule's parameters and the
//! premises; checking a proof threads this through the script and stores every
//! intermediate sequent, so errors can name the exact premise index and
//! formula position that failed to match.

pub mod corpus;
pub mod derived;
pub mod script;

use std::collections::HashMap;

use thiserror::Error;

use crate::formula::Formula;
use crate::sequent::Sequent;

/// A primitive inference rule together with its instance parameters.
///
/// Positions are 0-based indices into premise sequents. For the two-premise
/// rules the first premise is the "main" one (the sequent being transformed)
/// and the second is the side sequent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Rule {
    /// From `Γ, α, Δ ⊢` and `Γ, ¬α, Δ ⊢` conclude `Γ, Δ ⊢`.
    /// `position` is the index of `α` in the first premise.
    Cut {
        /// Index of the cut formula in the first premise.
        position: usize,
        /// The cut formula α.
        formula: Formula,
    },
    /// From `α, β, γ ⊢` (exactly three formulas) conclude `γ, β, α ⊢`.
    Circ,
    /// From `Σ ⊢` conclude `Γ, Σ, Δ ⊢`: weakening at the extremities.
    /// Both sequences may be empty.
    EWeak {
        /// Formulas prepended before the premise.
        before: Vec<Formula>,
        /// Formulas appended after the premise.
        after: Vec<Formula>,
    },
    /// From `Γ, Δ ⊢` and `Γ, ¬α ⊢` conclude `Γ, α, Δ ⊢`.
    /// `position = |Γ|` is where α is inserted.
    MWeak {
        /// Insertion index (length of Γ).
        position: usize,
        /// The inserted formula α.
        formula: Formula,
    },
    /// Conclude `𝟎 ⊢` from nothing.
    ZeroAxiom,
    /// Conclude `α, ¬α ⊢` from nothing.
    NAxiom {
        /// The axiom formula α.
        formula: Formula,
    },
    /// From `α, β, Δ ⊢` conclude `α ∧ β, Δ ⊢` (fold the first two formulas).
    LLAndIntro,
    /// From `α ∧ β, Δ ⊢` conclude `α, β, Δ ⊢` (split the first formula).
    LLAndElim,
    /// From `Γ, β, Δ ⊢` and the side sequent `Γ, ¬α ⊢` conclude
    /// `Γ, α ∧ β, Δ ⊢`. `position = |Γ|` locates β; `formula` is α.
    /// The side sequent is exactly `Γ, ¬α` — no `Δ` tail.
    MLAndIntro {
        /// Index of β in the main premise (length of Γ).
        position: usize,
        /// The adjoined conjunct α.
        formula: Formula,
    },
    /// From `Γ, α ∧ β, Δ ⊢` and the side sequent `Γ, ¬α ⊢` conclude
    /// `Γ, β, Δ ⊢`. `position = |Γ|` locates the conjunction.
    MLAndElim {
        /// Index of the conjunction in the main premise.
        position: usize,
    },
}

impl Rule {
    /// The rule's display name.
    pub fn name(&self) -> &'static str {
        match self {
            Rule::Cut { .. } => "Cut",
            Rule::Circ => "Circ",
            Rule::EWeak { .. } => "EWeak",
            Rule::MWeak { .. } => "MWeak",
            Rule::ZeroAxiom => "ZeroAxiom",
            Rule::NAxiom { .. } => "NAxiom",
            Rule::LLAndIntro => "LLAndIntro",
            Rule::LLAndElim => "LLAndElim",
            Rule::MLAndIntro { .. } => "MLAndIntro",
            Rule::MLAndElim { .. } => "MLAndElim",
        }
    }

    /// How many premises the rule takes.
    pub fn premise_count(&self) -> usize {
        match self {
            Rule::ZeroAxiom | Rule::NAxiom { .. } => 0,
            Rule::Circ | Rule::EWeak { .. } | Rule::LLAndIntro | Rule::LLAndElim => 1,
            Rule::Cut { .. }
            | Rule::MWeak { .. }
            | Rule::MLAndIntro { .. }
            | Rule::MLAndElim { .. } => 2,
        }
    }

    /// Compute the unique conclusion of this rule instance on the given
    /// premises, or explain exactly where the premises fail to match.
    pub fn apply(&self, premises: &[&Sequent]) -> Result<Sequent, RuleError> {
        let rule = self.name();
        if premises.len() != self.premise_count() {
            return Err(RuleError::PremiseCount {
                rule,
                expected: self.premise_count(),
                found: premises.len(),
            });
        }
        match self {
            Rule::Cut { position, formula } => {
                let (p1, p2) = (premises[0], premises[1]);
                expect_at(rule, 0, p1, *position, formula)?;
                if p2.len() != p1.len() {
                    return Err(RuleError::PremiseLength {
                        rule,
                        premise: 1,
                        expected: p1.len(),
                        found: p2.len(),
                    });
                }
                let negated = Formula::neg(formula.clone());
                for i in 0..p1.len() {
                    let want = if i == *position { &negated } else { &p1.0[i] };
                    expect_at(rule, 1, p2, i, want)?;
                }
                let mut out = p1.0.clone();
                out.remove(*position);
                Ok(Sequent(out))
            }
            Rule::Circ => {
                let p = premises[0];
                if p.len() != 3 {
                    return Err(RuleError::PremiseLength {
                        rule,
                        premise: 0,
                        expected: 3,
                        found: p.len(),
                    });
                }
                Ok(Sequent(vec![p.0[2].clone(), p.0[1].clone(), p.0[0].clone()]))
            }
            Rule::EWeak { before, after } => {
                let p = premises[0];
                let mut out = before.clone();
                out.extend(p.0.iter().cloned());
                out.extend(after.iter().cloned());
                Ok(Sequent(out))
            }
            Rule::MWeak { position, formula } => {
                let (main, side) = (premises[0], premises[1]);
                if *position > main.len() {
                    return Err(RuleError::PositionOutOfRange {
                        rule,
                        premise: 0,
                        position: *position,
                        len: main.len(),
                    });
                }
                check_side(rule, main, side, *position, formula)?;
                let mut out = main.0.clone();
                out.insert(*position, formula.clone());
                Ok(Sequent(out))
            }
            Rule::ZeroAxiom => Ok(Sequent(vec![Formula::Zero])),
            Rule::NAxiom { formula } => Ok(Sequent(vec![
                formula.clone(),
                Formula::neg(formula.clone()),
            ])),
            Rule::LLAndIntro => {
                let p = premises[0];
                if p.len() < 2 {
                    return Err(RuleError::PremiseTooShort {
                        rule,
                        premise: 0,
                        need: 2,
                        found: p.len(),
                    });
                }
                let mut out = vec![Formula::and(p.0[0].clone(), p.0[1].clone())];
                out.extend(p.0[2..].iter().cloned());
                Ok(Sequent(out))
            }
            Rule::LLAndElim => {
                let p = premises[0];
                if p.is_empty() {
                    return Err(RuleError::PremiseTooShort {
                        rule,
                        premise: 0,
                        need: 1,
                        found: 0,
                    });
                }
                let Formula::And(l, r) = &p.0[0] else {
                    return Err(RuleError::NotAConjunction {
                        rule,
                        premise: 0,
                        position: 0,
                        found: p.0[0].to_string(),
                    });
                };
                let mut out = vec![(**l).clone(), (**r).clone()];
                out.extend(p.0[1..].iter().cloned());
                Ok(Sequent(out))
            }
            Rule::MLAndIntro { position, formula } => {
                let (main, side) = (premises[0], premises[1]);
                if *position >= main.len() {
                    return Err(RuleError::PositionOutOfRange {
                        rule,
                        premise: 0,
                        position: *position,
                        len: main.len(),
                    });
                }
                check_side(rule, main, side, *position, formula)?;
                let mut out = main.0.clone();
                out[*position] = Formula::and(formula.clone(), main.0[*position].clone());
                Ok(Sequent(out))
            }
            Rule::MLAndElim { position } => {
                let (main, side) = (premises[0], premises[1]);
                if *position >= main.len() {
                    return Err(RuleError::PositionOutOfRange {
                        rule,
                        premise: 0,
                        position: *position,
                        len: main.len(),
                    });
                }
                let Formula::And(l, r) = &main.0[*position] else {
                    return Err(RuleError::NotAConjunction {
                        rule,
                        premise: 0,
                        position: *position,
                        found: main.0[*position].to_string(),
                    });
                };
                check_side(rule, main, side, *position, l)?;
                let mut out = main.0.clone();
                out[*position] = (**r).clone();
                Ok(Sequent(out))
            }
        }
    }
}

/// Premise 1 must be exactly `main[..position], ¬formula`.
fn check_side(
    rule: &'static str,
    main: &Sequent,
    side: &Sequent,
    position: usize,
    formula: &Formula,
) -> Result<(), RuleError> {
    if side.len() != position + 1 {
        return Err(RuleError::PremiseLength {
            rule,
            premise: 1,
            expected: position + 1,
            found: side.len(),
        });
    }
    for i in 0..position {
        expect_at(rule, 1, side, i, &main.0[i])?;
    }
    expect_at(rule, 1, side, position, &Formula::neg(formula.clone()))
}

fn expect_at(
    rule: &'static str,
    premise: usize,
    s: &Sequent,
    position: usize,
    want: &Formula,
) -> Result<(), RuleError> {
    match s.0.get(position) {
        None => Err(RuleError::PositionOutOfRange {
            rule,
            premise,
            position,
            len: s.len(),
        }),
        Some(found) if found != want => Err(RuleError::FormulaMismatch {
            rule,
            premise,
            position,
            expected: want.to_string(),
            found: found.to_string(),
        }),
        Some(_) => Ok(()),
    }
}

/// Why a single rule application failed. Every variant names the rule and the
/// first offending premise index / formula position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    /// Wrong number of premises for the rule.
    #[error("{rule}: expected {expected} premises, found {found}")]
    PremiseCount {
        /// Rule name.
        rule: &'static str,
        /// Required premise count.
        expected: usize,
        /// Supplied premise count.
        found: usize,
    },
    /// A premise has the wrong number of formulas.
    #[error("{rule}: premise {premise} has {found} formulas, expected {expected}")]
    PremiseLength {
        /// Rule name.
        rule: &'static str,
        /// Premise index.
        premise: usize,
        /// Required length.
        expected: usize,
        /// Actual length.
        found: usize,
    },
    /// A premise is shorter than the rule's minimum.
    #[error("{rule}: premise {premise} has {found} formulas, needs at least {need}")]
    PremiseTooShort {
        /// Rule name.
        rule: &'static str,
        /// Premise index.
        premise: usize,
        /// Minimum length.
        need: usize,
        /// Actual length.
        found: usize,
    },
    /// A parameter points outside a premise.
    #[error("{rule}: position {position} out of range for premise {premise} of length {len}")]
    PositionOutOfRange {
        /// Rule name.
        rule: &'static str,
        /// Premise index.
        premise: usize,
        /// Offending position.
        position: usize,
        /// Premise length.
        len: usize,
    },
    /// The first structural mismatch between a premise and the rule's shape.
    #[error("{rule}: premise {premise}, position {position}: expected `{expected}`, found `{found}`")]
    FormulaMismatch {
        /// Rule name.
        rule: &'static str,
        /// Premise index.
        premise: usize,
        /// Formula position within the premise.
        position: usize,
        /// What the rule shape demands there.
        expected: String,
        /// What the premise actually holds.
        found: String,
    },
    /// The rule needed a conjunction at this position.
    #[error("{rule}: premise {premise}, position {position}: expected a conjunction, found `{found}`")]
    NotAConjunction {
        /// Rule name.
        rule: &'static str,
        /// Premise index.
        premise: usize,
        /// Formula position within the premise.
        position: usize,
        /// The non-conjunction formula found there.
        found: String,
    },
}

/// One step of a proof script: an id, a rule instance, and the ids of the
/// (earlier) steps it uses as premises.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    /// Step identifier, unique within the script.
    pub id: String,
    /// The rule instance applied.
    pub rule: Rule,
    /// Ids of premise steps, in rule order (main first).
    pub premises: Vec<String>,
}

/// A proof script: ordered steps plus the goal sequent the last step must
/// prove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofScript {
    /// The steps, in checking order.
    pub steps: Vec<Step>,
    /// The declared goal; checking fails unless the last step proves it.
    pub goal: Sequent,
}

/// Why a proof script failed to check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    /// The script has no steps.
    #[error("proof has no steps")]
    Empty,
    /// Two steps share an id.
    #[error("step {step}: duplicate step id")]
    DuplicateId {
        /// The repeated id.
        step: String,
    },
    /// A premise id does not name an earlier step.
    #[error("step {step}: premise `{premise}` does not name an earlier step")]
    UnknownPremise {
        /// The step whose premise list is broken.
        step: String,
        /// The unresolved premise id.
        premise: String,
    },
    /// A rule application failed.
    #[error("step {step}: {source}")]
    Rule {
        /// The failing step id.
        step: String,
        /// The underlying rule error.
        source: RuleError,
    },
    /// The last step proved something other than the declared goal.
    #[error("goal mismatch: declared `{declared}`, but step {step} proves `{proved}`")]
    GoalMismatch {
        /// The declared goal.
        declared: String,
        /// The final step id.
        step: String,
        /// What that step actually proves.
        proved: String,
    },
}

/// Check one step against the context of already-verified steps (id → proved
/// sequent). On success, returns the sequent this step proves.
pub fn check_step(
    step: &Step,
    context: &HashMap<String, Sequent>,
) -> Result<Sequent, ProofError> {
    let mut premises: Vec<&Sequent> = Vec::with_capacity(step.premises.len());
    for pid in &step.premises {
        premises.push(context.get(pid).ok_or_else(|| ProofError::UnknownPremise {
            step: step.id.clone(),
            premise: pid.clone(),
        })?);
    }
    step.rule.apply(&premises).map_err(|source| ProofError::Rule {
        step: step.id.clone(),
        source,
    })
}

/// Check a whole script. On success, returns the proved sequent of every step
/// (parallel to `script.steps`); on failure, the first error in checking
/// order.
pub fn check_proof(script: &ProofScript) -> Result<Vec<Sequent>, ProofError> {
    if script.steps.is_empty() {
        return Err(ProofError::Empty);
    }
    let mut results: Vec<Sequent> = Vec::with_capacity(script.steps.len());
    let mut context: HashMap<String, Sequent> = HashMap::new();
    for step in &script.steps {
        if context.contains_key(&step.id) {
            return Err(ProofError::DuplicateId {
                step: step.id.clone(),
            });
        }
        let proved = check_step(step, &context)?;
        context.insert(step.id.clone(), proved.clone());
        results.push(proved);
    }
    let proved = results.last().expect("nonempty");
    if *proved != script.goal {
        return Err(ProofError::GoalMismatch {
            declared: script.goal.to_string(),
            step: script.steps.last().expect("nonempty").id.clone(),
            proved: proved.to_string(),
        });
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;

    fn f(src: &str) -> Formula {
        parse_formula(src).unwrap()
    }

    fn seq(srcs: &[&str]) -> Sequent {
        Sequent(srcs.iter().map(|s| f(s)).collect())
    }

    #[test]
    fn axioms_produce_their_sequents() {
        assert_eq!(Rule::ZeroAxiom.apply(&[]).unwrap(), seq(&["0"]));
        let n = Rule::NAxiom { formula: f("a") };
        assert_eq!(n.apply(&[]).unwrap(), seq(&["a", "~a"]));
    }

    #[test]
    fn cut_removes_the_cut_formula() {
        let p1 = seq(&["a", "b", "c"]);
        let p2 = seq(&["a", "~b", "c"]);
        let cut = Rule::Cut {
            position: 1,
            formula: f("b"),
        };
        assert_eq!(cut.apply(&[&p1, &p2]).unwrap(), seq(&["a", "c"]));
    }

    #[test]
    fn cut_reports_the_first_mismatching_position() {
        let p1 = seq(&["a", "b", "c"]);
        let p2 = seq(&["a", "~b", "d"]);
        let cut = Rule::Cut {
            position: 1,
            formula: f("b"),
        };
        let err = cut.apply(&[&p1, &p2]).unwrap_err();
        assert_eq!(
            err,
            RuleError::FormulaMismatch {
                rule: "Cut",
                premise: 1,
                position: 2,
                expected: "c".into(),
                found: "d".into(),
            }
        );
        assert!(err.to_string().contains("Cut"));
        assert!(err.to_string().contains("position 2"));
    }

    #[test]
    fn no_double_negation_collapse() {
        // ~~a is not a: the side premise must contain the literal negation.
        let p1 = seq(&["~~a", "b"]);
        let p2 = seq(&["~a", "b"]); // would be fine if ~~a collapsed — it must not
        let cut = Rule::Cut {
            position: 0,
            formula: f("~~a"),
        };
        let err = cut.apply(&[&p1, &p2]).unwrap_err();
        assert!(matches!(err, RuleError::FormulaMismatch { position: 0, .. }));
        // The honest premise works.
        let p2 = seq(&["~~~a", "b"]);
        assert_eq!(cut.apply(&[&p1, &p2]).unwrap(), seq(&["b"]));
    }

    #[test]
    fn circ_is_fixed_at_three_formulas() {
        let ok = Rule::Circ.apply(&[&seq(&["a", "b", "c"])]).unwrap();
        assert_eq!(ok, seq(&["c", "b", "a"]));
        let err = Rule::Circ.apply(&[&seq(&["a", "b", "c", "d"])]).unwrap_err();
        assert_eq!(
            err,
            RuleError::PremiseLength {
                rule: "Circ",
                premise: 0,
                expected: 3,
                found: 4,
            }
        );
    }

    #[test]
    fn eweak_allows_empty_extensions() {
        let p = seq(&["a"]);
        let w = Rule::EWeak {
            before: vec![],
            after: vec![],
        };
        assert_eq!(w.apply(&[&p]).unwrap(), p);
        let w = Rule::EWeak {
            before: vec![f("x")],
            after: vec![f("y"), f("z")],
        };
        assert_eq!(w.apply(&[&p]).unwrap(), seq(&["x", "a", "y", "z"]));
    }

    #[test]
    fn mweak_inserts_with_matching_side_sequent() {
        let main = seq(&["g", "d"]);
        let side = seq(&["g", "~a"]);
        let rule = Rule::MWeak {
            position: 1,
            formula: f("a"),
        };
        assert_eq!(rule.apply(&[&main, &side]).unwrap(), seq(&["g", "a", "d"]));
        // Side sequent must start with exactly Γ.
        let bad_side = seq(&["h", "~a"]);
        let err = rule.apply(&[&main, &bad_side]).unwrap_err();
        assert!(matches!(
            err,
            RuleError::FormulaMismatch {
                premise: 1,
                position: 0,
                ..
            }
        ));
    }

    #[test]
    fn ll_and_folds_and_unfolds_the_head() {
        let p = seq(&["a", "b", "c"]);
        assert_eq!(Rule::LLAndIntro.apply(&[&p]).unwrap(), seq(&["a & b", "c"]));
        let q = seq(&["a & b", "c"]);
        assert_eq!(Rule::LLAndElim.apply(&[&q]).unwrap(), p);
        let err = Rule::LLAndElim.apply(&[&seq(&["~a", "c"])]).unwrap_err();
        assert!(matches!(err, RuleError::NotAConjunction { position: 0, .. }));
    }

    #[test]
    fn ml_and_requires_the_bare_side_sequent() {
        // Intro: Γ=[g], β=b, α=a.
        let main = seq(&["g", "b", "d"]);
        let side = seq(&["g", "~a"]);
        let intro = Rule::MLAndIntro {
            position: 1,
            formula: f("a"),
        };
        assert_eq!(
            intro.apply(&[&main, &side]).unwrap(),
            seq(&["g", "a & b", "d"])
        );
        // A side sequent with a trailing Δ is rejected: the rule demands Γ, ¬α.
        let long_side = seq(&["g", "~a", "d"]);
        let err = intro.apply(&[&main, &long_side]).unwrap_err();
        assert_eq!(
            err,
            RuleError::PremiseLength {
                rule: "MLAndIntro",
                premise: 1,
                expected: 2,
                found: 3,
            }
        );
        // Elim undoes intro with the same side sequent.
        let elim = Rule::MLAndElim { position: 1 };
        let folded = seq(&["g", "a & b", "d"]);
        assert_eq!(elim.apply(&[&folded, &side]).unwrap(), main);
    }

    #[test]
    fn check_proof_reports_goal_mismatch_and_unknown_premises() {
        let script = ProofScript {
            steps: vec![
                Step {
                    id: "s1".into(),
                    rule: Rule::NAxiom { formula: f("b") },
                    premises: vec![],
                },
                Step {
                    id: "s2".into(),
                    rule: Rule::EWeak {
                        before: vec![f("a")],
                        after: vec![],
                    },
                    premises: vec!["s1".into()],
                },
                Step {
                    id: "s3".into(),
                    rule: Rule::LLAndIntro,
                    premises: vec!["s2".into()],
                },
            ],
            goal: seq(&["a & b", "~b"]),
        };
        let results = check_proof(&script).unwrap();
        assert_eq!(results[2], seq(&["a & b", "~b"]));

        let mut wrong_goal = script.clone();
        wrong_goal.goal = seq(&["a & b", "~a"]);
        assert!(matches!(
            check_proof(&wrong_goal).unwrap_err(),
            ProofError::GoalMismatch { .. }
        ));

        let mut dangling = script.clone();
        dangling.steps[1].premises = vec!["s9".into()];
        assert!(matches!(
            check_proof(&dangling).unwrap_err(),
            ProofError::UnknownPremise { .. }
        ));

        // Forward references are premise errors too: ids resolve to earlier
        // steps only.
        let mut forward = script;
        forward.steps.swap(1, 2);
        assert!(matches!(
            check_proof(&forward).unwrap_err(),
            ProofError::UnknownPremise { .. }
        ));
    }
}
