//! Derived rules, expanded into primitive kernel steps.
//!
//! Each expansion mirrors its source derivation line for line: `Repetition`
//! and `Contraction` (NAxiom + weakening/cut), the two-formula `Exchange`
//! (Repetition, Circ, Contraction), double-negation elimination `D1` and
//! introduction `D2`, context replacement `Equiv`, and the order-swapping
//! conjunction rule `LR-∧` in both directions. The expansions are *checked as
//! they are built*: [`ScriptBuilder::apply`] runs the kernel on every emitted
//! step, so a fragment that builds at all is already verified.

use thiserror::Error;

use super::{check_proof, ProofError, ProofScript, Rule, Step};
use crate::formula::Formula;
use crate::sequent::Sequent;

/// Incremental, checked construction of a [`ProofScript`].
///
/// Steps are referred to by index (the return value of [`apply`]); ids are
/// generated as `s1, s2, …`. Every application is verified immediately by the
/// kernel, so the builder can never hold an invalid proof.
///
/// [`apply`]: ScriptBuilder::apply
#[derive(Debug, Default)]
pub struct ScriptBuilder {
    steps: Vec<Step>,
    results: Vec<Sequent>,
}

impl ScriptBuilder {
    /// Start an empty proof.
    pub fn new() -> Self {
        Self::default()
    }

    /// Apply a rule to earlier steps (by index); returns the new step's index.
    pub fn apply(&mut self, rule: Rule, premises: &[usize]) -> Result<usize, ProofError> {
        let id = format!("s{}", self.steps.len() + 1);
        let mut prems: Vec<&Sequent> = Vec::with_capacity(premises.len());
        for &p in premises {
            prems.push(self.results.get(p).ok_or_else(|| ProofError::UnknownPremise {
                step: id.clone(),
                premise: format!("#{p}"),
            })?);
        }
        let sequent = rule.apply(&prems).map_err(|source| ProofError::Rule {
            step: id.clone(),
            source,
        })?;
        self.steps.push(Step {
            id,
            rule,
            premises: premises.iter().map(|&p| self.steps[p].id.clone()).collect(),
        });
        self.results.push(sequent);
        Ok(self.steps.len() - 1)
    }

    /// The sequent proved by step `i`.
    pub fn sequent(&self, i: usize) -> &Sequent {
        &self.results[i]
    }

    /// Number of steps so far.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// True when no step has been emitted yet.
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Finish the proof, declaring the last step's sequent as the goal.
    /// The returned script is re-checked end to end.
    pub fn finish(self) -> Result<ProofScript, ProofError> {
        let goal = self.results.last().cloned().ok_or(ProofError::Empty)?;
        let script = ProofScript {
            steps: self.steps,
            goal,
        };
        check_proof(&script)?;
        Ok(script)
    }
}

/// A derived-rule instance, referring to premise steps by builder index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Derived {
    /// `Γ, α, Δ ⊢` ⟹ `Γ, α, α, Δ ⊢`; `position` locates α.
    Repetition {
        /// Premise step.
        premise: usize,
        /// Index of the repeated formula.
        position: usize,
    },
    /// `Γ, α, α, Δ ⊢` ⟹ `Γ, α, Δ ⊢`; `position` locates the first copy.
    Contraction {
        /// Premise step.
        premise: usize,
        /// Index of the first of the two equal adjacent formulas.
        position: usize,
    },
    /// `α, β ⊢` ⟹ `β, α ⊢` (exactly two formulas).
    Exchange {
        /// Premise step.
        premise: usize,
    },
    /// `Γ, ¬¬α, Δ ⊢` ⟹ `Γ, α, Δ ⊢`; `position` locates the double negation.
    D1 {
        /// Premise step.
        premise: usize,
        /// Index of the `¬¬α` formula.
        position: usize,
    },
    /// `Γ, α, Δ ⊢` ⟹ `Γ, ¬¬α, Δ ⊢`; `position` locates α.
    D2 {
        /// Premise step.
        premise: usize,
        /// Index of the formula to double-negate.
        position: usize,
    },
    /// `Γ, α, Δ ⊢` with `α, ¬β ⊢` and `β, ¬α ⊢` ⟹ `Γ, β, Δ ⊢`.
    Equiv {
        /// Main premise step (`Γ, α, Δ ⊢`).
        premise: usize,
        /// Index of α in the main premise.
        position: usize,
        /// Step proving `α, ¬β ⊢`.
        forward: usize,
        /// Step proving `β, ¬α ⊢`.
        backward: usize,
    },
    /// `Γ, α, β ⊢` ⟹ `Γ, β ∧ α ⊢` (note the swap).
    LrAndIntro {
        /// Premise step.
        premise: usize,
    },
    /// `Γ, β ∧ α ⊢` ⟹ `Γ, α, β ⊢` (note the swap).
    LrAndElim {
        /// Premise step.
        premise: usize,
    },
}

/// A derived-rule instance does not fit its premise steps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpandError {
    /// The premise sequents do not have the schema's shape.
    #[error("{rule}: {reason}")]
    Schema {
        /// Derived rule name.
        rule: &'static str,
        /// What failed to match.
        reason: String,
    },
    /// A kernel step emitted during expansion failed (a bug in the caller's
    /// premise indices rather than in the schema).
    #[error(transparent)]
    Proof(#[from] ProofError),
}

fn schema(rule: &'static str, reason: impl Into<String>) -> ExpandError {
    ExpandError::Schema {
        rule,
        reason: reason.into(),
    }
}

/// Expand one derived-rule instance into kernel steps appended to the
/// builder; returns the index of the concluding step.
pub fn expand_derived(b: &mut ScriptBuilder, d: &Derived) -> Result<usize, ExpandError> {
    match *d {
        Derived::Repetition { premise, position } => repetition(b, premise, position),
        Derived::Contraction { premise, position } => contraction(b, premise, position),
        Derived::Exchange { premise } => exchange(b, premise),
        Derived::D1 { premise, position } => d1(b, premise, position),
        Derived::D2 { premise, position } => d2(b, premise, position),
        Derived::Equiv {
            premise,
            position,
            forward,
            backward,
        } => equiv(b, premise, position, forward, backward),
        Derived::LrAndIntro { premise } => lr_and_intro(b, premise),
        Derived::LrAndElim { premise } => lr_and_elim(b, premise),
    }
}

/// From `Γ, α, Δ ⊢` derive `Γ, α, α, Δ ⊢`.
///
/// Expansion: `NAxiom(α)`; `EWeak` to `Γ, α, ¬α ⊢`; `MWeak` inserting the
/// second α after the first, with that weakened axiom as the side sequent.
pub fn repetition(
    b: &mut ScriptBuilder,
    premise: usize,
    position: usize,
) -> Result<usize, ExpandError> {
    let p = b.sequent(premise).clone();
    let Some(alpha) = p.0.get(position).cloned() else {
        return Err(schema(
            "Repetition",
            format!("position {position} out of range for `{p}`"),
        ));
    };
    let gamma = p.0[..position].to_vec();
    let ax = b.apply(Rule::NAxiom {
        formula: alpha.clone(),
    }, &[])?;
    let weakened = b.apply(
        Rule::EWeak {
            before: gamma,
            after: vec![],
        },
        &[ax],
    )?;
    Ok(b.apply(
        Rule::MWeak {
            position: position + 1,
            formula: alpha,
        },
        &[premise, weakened],
    )?)
}

/// From `Γ, α, α, Δ ⊢` derive `Γ, α, Δ ⊢`.
///
/// Expansion: `NAxiom(α)`; `EWeak` to `Γ, α, ¬α, Δ ⊢`; `Cut` on the second α.
pub fn contraction(
    b: &mut ScriptBuilder,
    premise: usize,
    position: usize,
) -> Result<usize, ExpandError> {
    let p = b.sequent(premise).clone();
    let (Some(first), Some(second)) = (p.0.get(position), p.0.get(position + 1)) else {
        return Err(schema(
            "Contraction",
            format!("positions {position},{} out of range for `{p}`", position + 1),
        ));
    };
    if first != second {
        return Err(schema(
            "Contraction",
            format!("formulas at {position} and {} differ: `{first}` vs `{second}`", position + 1),
        ));
    }
    let alpha = first.clone();
    let gamma = p.0[..position].to_vec();
    let delta = p.0[position + 2..].to_vec();
    let ax = b.apply(Rule::NAxiom {
        formula: alpha.clone(),
    }, &[])?;
    let weakened = b.apply(
        Rule::EWeak {
            before: gamma,
            after: delta,
        },
        &[ax],
    )?;
    Ok(b.apply(
        Rule::Cut {
            position: position + 1,
            formula: alpha,
        },
        &[premise, weakened],
    )?)
}

/// From `α, β ⊢` derive `β, α ⊢` (two formulas only).
///
/// Expansion: Repetition to `α, β, β ⊢`; `Circ` to `β, β, α ⊢`; Contraction.
pub fn exchange(b: &mut ScriptBuilder, premise: usize) -> Result<usize, ExpandError> {
    let p = b.sequent(premise);
    if p.len() != 2 {
        return Err(schema(
            "Exchange",
            format!("premise `{p}` must have exactly 2 formulas"),
        ));
    }
    let repeated = repetition(b, premise, 1)?;
    let rotated = b.apply(Rule::Circ, &[repeated])?;
    contraction(b, rotated, 0)
}

/// From `Γ, ¬¬α, Δ ⊢` derive `Γ, α, Δ ⊢`.
///
/// Expansion: `NAxiom(¬α)` exchanged to `¬¬α, ¬α ⊢` and weakened into a side
/// sequent; `MWeak` inserts α after the `¬¬α`; `NAxiom(α)` exchanged to
/// `¬α, α ⊢` and weakened; `Cut` on `¬α` removes the double negation.
pub fn d1(b: &mut ScriptBuilder, premise: usize, position: usize) -> Result<usize, ExpandError> {
    let p = b.sequent(premise).clone();
    let Some(formula) = p.0.get(position) else {
        return Err(schema(
            "D1",
            format!("position {position} out of range for `{p}`"),
        ));
    };
    let Formula::Neg(inner) = formula else {
        return Err(schema("D1", format!("formula `{formula}` is not ¬¬-headed")));
    };
    let Formula::Neg(alpha) = &**inner else {
        return Err(schema("D1", format!("formula `{formula}` is not ¬¬-headed")));
    };
    let alpha = (**alpha).clone();
    let gamma = p.0[..position].to_vec();
    let delta = p.0[position + 1..].to_vec();

    let ax1 = b.apply(Rule::NAxiom {
        formula: Formula::neg(alpha.clone()),
    }, &[])?;
    let ex1 = exchange(b, ax1)?; // ¬¬α, ¬α ⊢
    let side1 = b.apply(
        Rule::EWeak {
            before: gamma.clone(),
            after: vec![],
        },
        &[ex1],
    )?; // Γ, ¬¬α, ¬α ⊢
    let widened = b.apply(
        Rule::MWeak {
            position: position + 1,
            formula: alpha.clone(),
        },
        &[premise, side1],
    )?; // Γ, ¬¬α, α, Δ ⊢

    let ax2 = b.apply(Rule::NAxiom {
        formula: alpha.clone(),
    }, &[])?;
    let ex2 = exchange(b, ax2)?; // ¬α, α ⊢
    let other = b.apply(
        Rule::EWeak {
            before: gamma,
            after: delta,
        },
        &[ex2],
    )?; // Γ, ¬α, α, Δ ⊢
    Ok(b.apply(
        Rule::Cut {
            position,
            formula: Formula::neg(alpha),
        },
        &[other, widened],
    )?)
}

/// From `Γ, α, Δ ⊢` derive `Γ, ¬¬α, Δ ⊢`.
///
/// Expansion: `NAxiom(¬¬α)` weakened to `Γ, ¬¬α, ¬¬¬α ⊢`, then `D1` turns it
/// into the side sequent `Γ, α, ¬¬¬α ⊢`; `MWeak` inserts `¬¬α` after α;
/// `NAxiom(¬α)` weakened to `Γ, ¬α, ¬¬α, Δ ⊢`; `Cut` on α finishes.
pub fn d2(b: &mut ScriptBuilder, premise: usize, position: usize) -> Result<usize, ExpandError> {
    let p = b.sequent(premise).clone();
    let Some(alpha) = p.0.get(position).cloned() else {
        return Err(schema(
            "D2",
            format!("position {position} out of range for `{p}`"),
        ));
    };
    let nn_alpha = Formula::neg(Formula::neg(alpha.clone()));
    let gamma = p.0[..position].to_vec();
    let delta = p.0[position + 1..].to_vec();

    let ax1 = b.apply(Rule::NAxiom {
        formula: nn_alpha.clone(),
    }, &[])?; // ¬¬α, ¬¬¬α ⊢
    let weak1 = b.apply(
        Rule::EWeak {
            before: gamma.clone(),
            after: vec![],
        },
        &[ax1],
    )?; // Γ, ¬¬α, ¬¬¬α ⊢
    let side = d1(b, weak1, position)?; // Γ, α, ¬¬¬α ⊢
    let widened = b.apply(
        Rule::MWeak {
            position: position + 1,
            formula: nn_alpha.clone(),
        },
        &[premise, side],
    )?; // Γ, α, ¬¬α, Δ ⊢

    let ax2 = b.apply(Rule::NAxiom {
        formula: Formula::neg(alpha.clone()),
    }, &[])?; // ¬α, ¬¬α ⊢
    let weak2 = b.apply(
        Rule::EWeak {
            before: gamma,
            after: delta,
        },
        &[ax2],
    )?; // Γ, ¬α, ¬¬α, Δ ⊢
    Ok(b.apply(
        Rule::Cut {
            position,
            formula: alpha,
        },
        &[widened, weak2],
    )?)
}

/// From `Γ, α, Δ ⊢`, `α, ¬β ⊢`, and `β, ¬α ⊢` derive `Γ, β, Δ ⊢`.
///
/// Expansion: weaken `α, ¬β ⊢` into the side sequent for an `MWeak` that
/// inserts β after α; exchange `β, ¬α ⊢` and weaken it to `Γ, ¬α, β, Δ ⊢`;
/// `Cut` on α.
pub fn equiv(
    b: &mut ScriptBuilder,
    premise: usize,
    position: usize,
    forward: usize,
    backward: usize,
) -> Result<usize, ExpandError> {
    let p = b.sequent(premise).clone();
    let Some(alpha) = p.0.get(position).cloned() else {
        return Err(schema(
            "Equiv",
            format!("position {position} out of range for `{p}`"),
        ));
    };
    let fseq = b.sequent(forward).clone();
    if fseq.len() != 2 || fseq.0[0] != alpha {
        return Err(schema(
            "Equiv",
            format!("forward premise `{fseq}` is not of the form `{alpha}, ¬β ⊢`"),
        ));
    }
    let Formula::Neg(beta) = &fseq.0[1] else {
        return Err(schema(
            "Equiv",
            format!("forward premise `{fseq}` is not of the form `{alpha}, ¬β ⊢`"),
        ));
    };
    let beta = (**beta).clone();
    let expected_back = Sequent(vec![beta.clone(), Formula::neg(alpha.clone())]);
    if *b.sequent(backward) != expected_back {
        return Err(schema(
            "Equiv",
            format!(
                "backward premise `{}` should be `{expected_back}`",
                b.sequent(backward)
            ),
        ));
    }
    let gamma = p.0[..position].to_vec();
    let delta = p.0[position + 1..].to_vec();

    let side = b.apply(
        Rule::EWeak {
            before: gamma.clone(),
            after: vec![],
        },
        &[forward],
    )?; // Γ, α, ¬β ⊢
    let widened = b.apply(
        Rule::MWeak {
            position: position + 1,
            formula: beta.clone(),
        },
        &[premise, side],
    )?; // Γ, α, β, Δ ⊢
    let flipped = exchange(b, backward)?; // ¬α, β ⊢
    let other = b.apply(
        Rule::EWeak {
            before: gamma,
            after: delta,
        },
        &[flipped],
    )?; // Γ, ¬α, β, Δ ⊢
    Ok(b.apply(
        Rule::Cut {
            position,
            formula: alpha,
        },
        &[widened, other],
    )?)
}

/// Fold `Γ, α, β` to `φ(Γ), α, β` by repeated `LLAndIntro` (|Γ| − 1 steps),
/// leaving `tail` formulas untouched at the end.
fn fold_prefix(b: &mut ScriptBuilder, mut step: usize, tail: usize) -> Result<usize, ProofError> {
    while b.sequent(step).len() > tail + 1 {
        step = b.apply(Rule::LLAndIntro, &[step])?;
    }
    Ok(step)
}

/// Unfold the head of `φ(Γ), …` back into `Γ, …` by repeated `LLAndElim`,
/// applied `times` times.
fn unfold_prefix(b: &mut ScriptBuilder, mut step: usize, times: usize) -> Result<usize, ProofError> {
    for _ in 0..times {
        step = b.apply(Rule::LLAndElim, &[step])?;
    }
    Ok(step)
}

/// From `Γ, α, β ⊢` derive `Γ, β ∧ α ⊢` — note the swap.
///
/// Expansion: fold Γ to a single formula by `LLAndIntro`; `Circ`;
/// `LLAndIntro`; exchange; unfold Γ by `LLAndElim`. With empty Γ the premise
/// has two formulas and the expansion is exchange then `LLAndIntro`.
pub fn lr_and_intro(b: &mut ScriptBuilder, premise: usize) -> Result<usize, ExpandError> {
    let n = b.sequent(premise).len();
    if n < 2 {
        return Err(schema(
            "LR-∧ intro",
            format!("premise `{}` must have at least 2 formulas", b.sequent(premise)),
        ));
    }
    if n == 2 {
        let swapped = exchange(b, premise)?;
        return Ok(b.apply(Rule::LLAndIntro, &[swapped])?);
    }
    let folds = n - 3; // |Γ| − 1
    let folded = fold_prefix(b, premise, 2)?; // φ(Γ), α, β ⊢
    let rotated = b.apply(Rule::Circ, &[folded])?; // β, α, φ(Γ) ⊢
    let joined = b.apply(Rule::LLAndIntro, &[rotated])?; // β∧α, φ(Γ) ⊢
    let swapped = exchange(b, joined)?; // φ(Γ), β∧α ⊢
    Ok(unfold_prefix(b, swapped, folds)?) // Γ, β∧α ⊢
}

/// From `Γ, β ∧ α ⊢` derive `Γ, α, β ⊢` — note the swap.
///
/// Expansion: fold Γ; exchange; `LLAndElim`; `Circ`; unfold Γ. With empty Γ:
/// `LLAndElim` then exchange.
pub fn lr_and_elim(b: &mut ScriptBuilder, premise: usize) -> Result<usize, ExpandError> {
    let p = b.sequent(premise).clone();
    let n = p.len();
    if n == 0 || !matches!(p.0[n - 1], Formula::And(_, _)) {
        return Err(schema(
            "LR-∧ elim",
            format!("premise `{p}` must end in a conjunction"),
        ));
    }
    if n == 1 {
        let split = b.apply(Rule::LLAndElim, &[premise])?;
        return Ok(exchange(b, split)?);
    }
    let folds = n - 2; // |Γ| − 1
    let folded = fold_prefix(b, premise, 1)?; // φ(Γ), β∧α ⊢
    let swapped = exchange(b, folded)?; // β∧α, φ(Γ) ⊢
    let split = b.apply(Rule::LLAndElim, &[swapped])?; // β, α, φ(Γ) ⊢
    let rotated = b.apply(Rule::Circ, &[split])?; // φ(Γ), α, β ⊢
    Ok(unfold_prefix(b, rotated, folds)?) // Γ, α, β ⊢
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

    fn start(b: &mut ScriptBuilder, alpha: &str) -> usize {
        // A generic derivable starting point: NAxiom(α), optionally weakened.
        b.apply(Rule::NAxiom { formula: f(alpha) }, &[]).unwrap()
    }

    #[test]
    fn repetition_duplicates_mid_sequence() {
        let mut b = ScriptBuilder::new();
        let ax = start(&mut b, "a");
        let wide = b
            .apply(
                Rule::EWeak {
                    before: vec![f("g")],
                    after: vec![f("d")],
                },
                &[ax],
            )
            .unwrap(); // g, a, ~a, d ⊢
        let rep = repetition(&mut b, wide, 1).unwrap();
        assert_eq!(*b.sequent(rep), seq(&["g", "a", "a", "~a", "d"]));
        b.finish().unwrap();
    }

    #[test]
    fn contraction_undoes_repetition() {
        let mut b = ScriptBuilder::new();
        let ax = start(&mut b, "a");
        let rep = repetition(&mut b, ax, 0).unwrap(); // a, a, ~a ⊢
        let con = contraction(&mut b, rep, 0).unwrap();
        assert_eq!(b.sequent(con), b.sequent(ax));
        b.finish().unwrap();
    }

    #[test]
    fn contraction_requires_equal_neighbors() {
        let mut b = ScriptBuilder::new();
        let ax = start(&mut b, "a"); // a, ~a ⊢
        let err = contraction(&mut b, ax, 0).unwrap_err();
        assert!(matches!(err, ExpandError::Schema { rule: "Contraction", .. }));
    }

    #[test]
    fn exchange_swaps_a_pair() {
        let mut b = ScriptBuilder::new();
        let ax = start(&mut b, "a"); // a, ~a ⊢
        let ex = exchange(&mut b, ax).unwrap();
        assert_eq!(*b.sequent(ex), seq(&["~a", "a"]));
        assert_eq!(b.len(), 8, "1 premise + 7 kernel steps");
        b.finish().unwrap();
    }

    #[test]
    fn double_negation_round_trip() {
        let mut b = ScriptBuilder::new();
        let ax = start(&mut b, "a");
        let wide = b
            .apply(
                Rule::EWeak {
                    before: vec![f("g")],
                    after: vec![f("d")],
                },
                &[ax],
            )
            .unwrap(); // g, a, ~a, d ⊢
        let doubled = d2(&mut b, wide, 1).unwrap();
        assert_eq!(*b.sequent(doubled), seq(&["g", "~~a", "~a", "d"]));
        let restored = d1(&mut b, doubled, 1).unwrap();
        assert_eq!(b.sequent(restored), b.sequent(wide));
        b.finish().unwrap();
    }

    #[test]
    fn d1_demands_a_double_negation() {
        let mut b = ScriptBuilder::new();
        let ax = start(&mut b, "a");
        let err = d1(&mut b, ax, 0).unwrap_err();
        assert!(matches!(err, ExpandError::Schema { rule: "D1", .. }));
    }

    #[test]
    fn equiv_replaces_in_context() {
        // Replace a by ~~a inside g, a, ~a ⊢ using a ≃ ~~a.
        let mut b = ScriptBuilder::new();
        let ax = start(&mut b, "a");
        let main = b
            .apply(
                Rule::EWeak {
                    before: vec![f("g")],
                    after: vec![],
                },
                &[ax],
            )
            .unwrap(); // g, a, ~a ⊢

        // forward: a, ~~~a ⊢  (NAxiom(a) then D2 on the second formula)
        let fwd_ax = start(&mut b, "a");
        let forward = d2(&mut b, fwd_ax, 1).unwrap();
        assert_eq!(*b.sequent(forward), seq(&["a", "~~~a"]));
        // backward: ~~a, ~a ⊢  (NAxiom(~a) exchanged)
        let bwd_ax = start(&mut b, "~a");
        let backward = exchange(&mut b, bwd_ax).unwrap();
        assert_eq!(*b.sequent(backward), seq(&["~~a", "~a"]));

        let replaced = equiv(&mut b, main, 1, forward, backward).unwrap();
        assert_eq!(*b.sequent(replaced), seq(&["g", "~~a", "~a"]));
        b.finish().unwrap();
    }

    #[test]
    fn lr_and_round_trip_with_context() {
        let mut b = ScriptBuilder::new();
        let ax = start(&mut b, "b");
        let wide = b
            .apply(
                Rule::EWeak {
                    before: vec![f("g"), f("h")],
                    after: vec![],
                },
                &[ax],
            )
            .unwrap(); // g, h, b, ~b ⊢
        let folded = lr_and_intro(&mut b, wide).unwrap();
        assert_eq!(*b.sequent(folded), seq(&["g", "h", "~b & b"]));
        let unfolded = lr_and_elim(&mut b, folded).unwrap();
        assert_eq!(b.sequent(unfolded), b.sequent(wide));
        b.finish().unwrap();
    }

    #[test]
    fn lr_and_handles_the_two_formula_case() {
        let mut b = ScriptBuilder::new();
        let ax = start(&mut b, "b"); // b, ~b ⊢
        let folded = lr_and_intro(&mut b, ax).unwrap();
        assert_eq!(*b.sequent(folded), seq(&["~b & b"]));
        let unfolded = lr_and_elim(&mut b, folded).unwrap();
        assert_eq!(b.sequent(unfolded), b.sequent(ax));
        b.finish().unwrap();
    }

    #[test]
    fn expand_derived_dispatches() {
        let mut b = ScriptBuilder::new();
        let ax = start(&mut b, "a");
        let i = expand_derived(&mut b, &Derived::Exchange { premise: ax }).unwrap();
        assert_eq!(*b.sequent(i), seq(&["~a", "a"]));
    }
}
