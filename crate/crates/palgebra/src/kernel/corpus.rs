//! The regression corpus: named, closed, kernel-checked proof scripts.
//!
//! Every script here is verified by [`check_proof`] from primitive steps —
//! the derived-rule demonstrations exercise each expansion of
//! [`super::derived`], and the lemma instances close over concrete derivable
//! premises (an implication `α → β` is shipped as the sequent `α, ¬β ⊢`).
//!
//! Naming note: conjunction-on-the-left steps always carry an explicit
//! direction tag; an elimination-direction use of the left-conjunction rule
//! (sometimes written `∧Left-Elim`) is exactly an [`Rule::LLAndElim`] step
//! here, not a separate rule.

use super::derived::{
    contraction, d1, d2, equiv, exchange, lr_and_elim, lr_and_intro, repetition, ExpandError,
    ScriptBuilder,
};
use super::{ProofScript, Rule};
use crate::formula::{parse_formula, Formula};

/// One named script plus a one-line account of what it demonstrates.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    /// Stable kebab-case name (also the shipped file stem).
    pub name: &'static str,
    /// What the derivation shows.
    pub note: &'static str,
    /// The kernel-checked script.
    pub script: ProofScript,
}

fn f(src: &str) -> Formula {
    parse_formula(src).expect("corpus formula")
}

/// Build one entry, panicking with the script name if construction fails —
/// the corpus is fixed data, so a failure here is a bug, not an input error.
fn entry(
    name: &'static str,
    note: &'static str,
    build: impl FnOnce(&mut ScriptBuilder) -> Result<usize, ExpandError>,
) -> CorpusEntry {
    let mut b = ScriptBuilder::new();
    build(&mut b).unwrap_or_else(|e| panic!("corpus script `{name}`: {e}"));
    let script = b
        .finish()
        .unwrap_or_else(|e| panic!("corpus script `{name}`: {e}"));
    CorpusEntry { name, note, script }
}

/// `α∧β, ¬β ⊢` (a conjunction entails its right conjunct): NAxiom, EWeak,
/// LLAndIntro.
fn implies_right(
    b: &mut ScriptBuilder,
    alpha: Formula,
    beta: Formula,
) -> Result<usize, ExpandError> {
    let ax = b.apply(Rule::NAxiom { formula: beta }, &[])?;
    let wide = b.apply(
        Rule::EWeak {
            before: vec![alpha],
            after: vec![],
        },
        &[ax],
    )?;
    Ok(b.apply(Rule::LLAndIntro, &[wide])?)
}

/// `x, ¬¬¬x ⊢` (an implication `x → ¬¬x`): NAxiom then double-negation
/// introduction on the right formula.
fn implies_double_negation(b: &mut ScriptBuilder, x: Formula) -> Result<usize, ExpandError> {
    let ax = b.apply(Rule::NAxiom { formula: x }, &[])?;
    d2(b, ax, 1)
}

/// All corpus scripts, in presentation order: the eight derived-rule
/// demonstrations, then the lemma instances, then one zero-law bonus.
pub fn corpus() -> Vec<CorpusEntry> {
    vec![
        entry(
            "repetition",
            "A formula can be repeated in place: from a, ~a |- derive a, a, ~a |- \
             by weakening against the negation axiom.",
            |b| {
                let ax = b.apply(Rule::NAxiom { formula: f("a") }, &[])?;
                repetition(b, ax, 0)
            },
        ),
        entry(
            "contraction",
            "A repeated formula can be collapsed: duplicate a in a, ~a |- and cut \
             the copy back out.",
            |b| {
                let ax = b.apply(Rule::NAxiom { formula: f("a") }, &[])?;
                let rep = repetition(b, ax, 0)?;
                contraction(b, rep, 0)
            },
        ),
        entry(
            "exchange",
            "Two formulas swap places: repetition, the three-formula rotation, \
             and contraction compose into a, ~a |- => ~a, a |-.",
            |b| {
                let ax = b.apply(Rule::NAxiom { formula: f("a") }, &[])?;
                exchange(b, ax)
            },
        ),
        entry(
            "double-negation-elimination",
            "~~a can be replaced by a in any position: here inside ~a, ~~a |-.",
            |b| {
                let ax = b.apply(Rule::NAxiom { formula: f("~a") }, &[])?;
                d1(b, ax, 1)
            },
        ),
        entry(
            "double-negation-introduction",
            "a can be replaced by ~~a in any position: here at the head of a, ~a |-.",
            |b| {
                let ax = b.apply(Rule::NAxiom { formula: f("a") }, &[])?;
                d2(b, ax, 0)
            },
        ),
        entry(
            "equiv-replacement",
            "Interderivable formulas substitute in context: a and ~~a entail each \
             other, so a is replaced by ~~a inside g, a, ~a |-.",
            |b| {
                let ax = b.apply(Rule::NAxiom { formula: f("a") }, &[])?;
                let main = b.apply(
                    Rule::EWeak {
                        before: vec![f("g")],
                        after: vec![],
                    },
                    &[ax],
                )?;
                let forward = implies_double_negation(b, f("a"))?;
                let bax = b.apply(Rule::NAxiom { formula: f("~a") }, &[])?;
                let backward = exchange(b, bax)?;
                equiv(b, main, 1, forward, backward)
            },
        ),
        entry(
            "lr-and-intro",
            "Conjunction introduction with the operand order swapped: \
             g, h, b, ~b |- folds to g, h, ~b & b |-.",
            |b| {
                let ax = b.apply(Rule::NAxiom { formula: f("b") }, &[])?;
                let wide = b.apply(
                    Rule::EWeak {
                        before: vec![f("g"), f("h")],
                        after: vec![],
                    },
                    &[ax],
                )?;
                lr_and_intro(b, wide)
            },
        ),
        entry(
            "lr-and-elim",
            "Conjunction elimination with the operand order swapped: \
             g, h, ~b & b |- unfolds back to g, h, b, ~b |-.",
            |b| {
                let ax = b.apply(Rule::NAxiom { formula: f("b") }, &[])?;
                let wide = b.apply(
                    Rule::EWeak {
                        before: vec![f("g"), f("h")],
                        after: vec![],
                    },
                    &[ax],
                )?;
                let folded = lr_and_intro(b, wide)?;
                lr_and_elim(b, folded)
            },
        ),
        entry(
            "implication-transitivity",
            "Implication chains: a & b -> b and b -> ~~b compose into \
             a & b -> ~~b by weakening both premises and cutting on b.",
            |b| {
                let first = implies_right(b, f("a"), f("b"))?; // a & b, ~b |-
                let second = implies_double_negation(b, f("b"))?; // b, ~~~b |-
                let first_wide = b.apply(
                    Rule::EWeak {
                        before: vec![],
                        after: vec![f("~~~b")],
                    },
                    &[first],
                )?; // a & b, ~b, ~~~b |-
                let second_wide = b.apply(
                    Rule::EWeak {
                        before: vec![f("a & b")],
                        after: vec![],
                    },
                    &[second],
                )?; // a & b, b, ~~~b |-
                Ok(b.apply(
                    Rule::Cut {
                        position: 1,
                        formula: f("b"),
                    },
                    &[second_wide, first_wide],
                )?)
            },
        ),
        entry(
            "implication-context",
            "An implication rewrites the head of any sequent: a & b -> b turns \
             b, ~b, c |- into a & b, ~b, c |-.",
            |b| {
                let imp = implies_right(b, f("a"), f("b"))?; // a & b, ~b |-
                let ax = b.apply(Rule::NAxiom { formula: f("b") }, &[])?;
                let seq = b.apply(
                    Rule::EWeak {
                        before: vec![],
                        after: vec![f("c")],
                    },
                    &[ax],
                )?; // b, ~b, c |-
                let imp_wide = b.apply(
                    Rule::EWeak {
                        before: vec![],
                        after: vec![f("~b"), f("c")],
                    },
                    &[imp],
                )?; // a & b, ~b, ~b, c |-
                let seq_wide = b.apply(
                    Rule::EWeak {
                        before: vec![f("a & b")],
                        after: vec![],
                    },
                    &[seq],
                )?; // a & b, b, ~b, c |-
                Ok(b.apply(
                    Rule::Cut {
                        position: 1,
                        formula: f("b"),
                    },
                    &[seq_wide, imp_wide],
                )?)
            },
        ),
        entry(
            "contrapositive",
            "From a & b -> b derive ~b -> ~(a & b): double-negate the head, \
             then swap.",
            |b| {
                let imp = implies_right(b, f("a"), f("b"))?; // a & b, ~b |-
                let doubled = d2(b, imp, 0)?; // ~~(a & b), ~b |-
                exchange(b, doubled)
            },
        ),
        entry(
            "and-left-congruence",
            "Implication survives conjunction on the right: a & b -> b lifts to \
             (a & b) & c -> b & c.",
            |b| {
                let assumption = implies_right(b, f("a"), f("b"))?; // a & b, ~b |-
                let nax = b.apply(Rule::NAxiom { formula: f("b & c") }, &[])?;
                let split = b.apply(Rule::LLAndElim, &[nax])?; // b, c, ~(b & c) |-
                let rotated = b.apply(Rule::Circ, &[split])?; // ~(b & c), c, b |-
                let flipped = exchange(b, assumption)?; // ~b, a & b |-
                let side = b.apply(
                    Rule::EWeak {
                        before: vec![f("~(b & c)"), f("c")],
                        after: vec![],
                    },
                    &[flipped],
                )?; // ~(b & c), c, ~b, a & b |-
                let main = b.apply(
                    Rule::EWeak {
                        before: vec![],
                        after: vec![f("a & b")],
                    },
                    &[rotated],
                )?; // ~(b & c), c, b, a & b |-
                let cut = b.apply(
                    Rule::Cut {
                        position: 2,
                        formula: f("b"),
                    },
                    &[main, side],
                )?; // ~(b & c), c, a & b |-
                let back = b.apply(Rule::Circ, &[cut])?; // a & b, c, ~(b & c) |-
                Ok(b.apply(Rule::LLAndIntro, &[back])?)
            },
        ),
        entry(
            "and-right-congruence",
            "Interderivable conjuncts substitute under a left context: a and ~~a \
             entail each other, so c & a -> c & ~~a.",
            |b| {
                let forward = implies_double_negation(b, f("a"))?; // a, ~~~a |-
                let bax = b.apply(Rule::NAxiom { formula: f("~a") }, &[])?;
                let backward = exchange(b, bax)?; // ~~a, ~a |-
                let nax = b.apply(Rule::NAxiom { formula: f("c & a") }, &[])?;
                let split = b.apply(Rule::LLAndElim, &[nax])?; // c, a, ~(c & a) |-
                let replaced = equiv(b, split, 1, forward, backward)?; // c, ~~a, ~(c & a) |-
                Ok(b.apply(Rule::LLAndIntro, &[replaced])?)
            },
        ),
        entry(
            "dot-right",
            "A conjunction entails its right conjunct: a & b, ~b |- in three \
             primitive steps.",
            |b| implies_right(b, f("a"), f("b")),
        ),
        entry(
            "absorption-left",
            "When a & b -> b, the conjunction (a & b) & b collapses leftward: \
             (a & b) & b -> a & b.",
            |b| {
                let assumption = implies_right(b, f("a"), f("b"))?; // a & b, ~b |-
                let nax = b.apply(Rule::NAxiom { formula: f("a & b") }, &[])?;
                let widened = b.apply(
                    Rule::MWeak {
                        position: 1,
                        formula: f("b"),
                    },
                    &[nax, assumption],
                )?; // a & b, b, ~(a & b) |-
                Ok(b.apply(Rule::LLAndIntro, &[widened])?)
            },
        ),
        entry(
            "absorption-expansion",
            "When a & b -> b, the conjunction can also be expanded: \
             a & b -> (a & b) & b.",
            |b| {
                let assumption = implies_right(b, f("a"), f("b"))?; // a & b, ~b |-
                let nax = b.apply(
                    Rule::NAxiom {
                        formula: f("(a & b) & b"),
                    },
                    &[],
                )?;
                let split = b.apply(Rule::LLAndElim, &[nax])?; // a & b, b, ~((a & b) & b) |-
                let side = b.apply(
                    Rule::EWeak {
                        before: vec![],
                        after: vec![f("~((a & b) & b)")],
                    },
                    &[assumption],
                )?; // a & b, ~b, ~((a & b) & b) |-
                Ok(b.apply(
                    Rule::Cut {
                        position: 1,
                        formula: f("b"),
                    },
                    &[split, side],
                )?)
            },
        ),
        entry(
            "associativity-forward",
            "With a & b -> b, conjunctions reassociate: ((a & b) & b) & c, ~c |- \
             becomes (a & b) & (b & c), ~c |-.",
            |b| {
                let assumption = implies_right(b, f("a"), f("b"))?; // a & b, ~b |-
                let premise = implies_right(b, f("(a & b) & b"), f("c"))?; // ((a&b)&b)&c, ~c |-
                let s1 = b.apply(Rule::LLAndElim, &[premise])?; // (a & b) & b, c, ~c |-
                let s2 = b.apply(Rule::LLAndElim, &[s1])?; // a & b, b, c, ~c |-
                let side = b.apply(
                    Rule::EWeak {
                        before: vec![],
                        after: vec![f("c"), f("~c")],
                    },
                    &[assumption],
                )?; // a & b, ~b, c, ~c |-
                let cut = b.apply(
                    Rule::Cut {
                        position: 1,
                        formula: f("b"),
                    },
                    &[s2, side],
                )?; // a & b, c, ~c |-
                let merged = b.apply(
                    Rule::MLAndIntro {
                        position: 1,
                        formula: f("b"),
                    },
                    &[cut, assumption],
                )?; // a & b, b & c, ~c |-
                Ok(b.apply(Rule::LLAndIntro, &[merged])?)
            },
        ),
        entry(
            "associativity-backward",
            "The reassociation runs back: (a & b) & (b & c), ~c |- returns to \
             ((a & b) & b) & c, ~c |-, using the bare side sequent a & b, ~b |-.",
            |b| {
                let assumption = implies_right(b, f("a"), f("b"))?; // a & b, ~b |-
                let premise = implies_right(b, f("(a & b) & b"), f("c"))?;
                let s1 = b.apply(Rule::LLAndElim, &[premise])?;
                let s2 = b.apply(Rule::LLAndElim, &[s1])?;
                let side = b.apply(
                    Rule::EWeak {
                        before: vec![],
                        after: vec![f("c"), f("~c")],
                    },
                    &[assumption],
                )?;
                let cut = b.apply(
                    Rule::Cut {
                        position: 1,
                        formula: f("b"),
                    },
                    &[s2, side],
                )?;
                let merged = b.apply(
                    Rule::MLAndIntro {
                        position: 1,
                        formula: f("b"),
                    },
                    &[cut, assumption],
                )?;
                let forward = b.apply(Rule::LLAndIntro, &[merged])?; // (a & b) & (b & c), ~c |-
                let split = b.apply(Rule::LLAndElim, &[forward])?; // a & b, b & c, ~c |-
                let dropped = b.apply(Rule::MLAndElim { position: 1 }, &[split, assumption])?; // a & b, c, ~c |-
                let widened = b.apply(
                    Rule::MWeak {
                        position: 1,
                        formula: f("b"),
                    },
                    &[dropped, assumption],
                )?; // a & b, b, c, ~c |-
                let j1 = b.apply(Rule::LLAndIntro, &[widened])?; // (a & b) & b, c, ~c |-
                Ok(b.apply(Rule::LLAndIntro, &[j1])?)
            },
        ),
        entry(
            "associativity-rotated-forward",
            "With a & b -> b, a rotated association also holds: \
             (c & b) & (a & b) -> c & (a & b).",
            |b| {
                let assumption = implies_right(b, f("a"), f("b"))?; // a & b, ~b |-
                let nax = b.apply(
                    Rule::NAxiom {
                        formula: f("c & (a & b)"),
                    },
                    &[],
                )?;
                let flipped = exchange(b, nax)?; // ~(c & (a & b)), c & (a & b) |-
                let split = lr_and_elim(b, flipped)?; // ~(c & (a & b)), a & b, c |-
                let side = b.apply(
                    Rule::EWeak {
                        before: vec![f("~(c & (a & b))")],
                        after: vec![],
                    },
                    &[assumption],
                )?; // ~(c & (a & b)), a & b, ~b |-
                let widened = b.apply(
                    Rule::MWeak {
                        position: 2,
                        formula: f("b"),
                    },
                    &[split, side],
                )?; // ~(c & (a & b)), a & b, b, c |-
                let joined = lr_and_intro(b, widened)?; // ~(c & (a & b)), a & b, c & b |-
                let rotated = b.apply(Rule::Circ, &[joined])?; // c & b, a & b, ~(c & (a & b)) |-
                Ok(b.apply(Rule::LLAndIntro, &[rotated])?)
            },
        ),
        entry(
            "associativity-rotated-backward",
            "The rotated association runs back: c & (a & b), \
             ~((c & b) & (a & b)) |-, cutting b out of the unfolded axiom.",
            |b| {
                let assumption = implies_right(b, f("a"), f("b"))?; // a & b, ~b |-
                let nax = b.apply(
                    Rule::NAxiom {
                        formula: f("(c & b) & (a & b)"),
                    },
                    &[],
                )?;
                let s1 = b.apply(Rule::LLAndElim, &[nax])?; // c & b, a & b, ~(...) |-
                let s2 = b.apply(Rule::LLAndElim, &[s1])?; // c, b, a & b, ~(...) |-
                let flipped = exchange(b, assumption)?; // ~b, a & b |-
                let side = b.apply(
                    Rule::EWeak {
                        before: vec![f("c")],
                        after: vec![f("~((c & b) & (a & b))")],
                    },
                    &[flipped],
                )?; // c, ~b, a & b, ~(...) |-
                let cut = b.apply(
                    Rule::Cut {
                        position: 1,
                        formula: f("b"),
                    },
                    &[s2, side],
                )?; // c, a & b, ~(...) |-
                Ok(b.apply(Rule::LLAndIntro, &[cut])?)
            },
        ),
        entry(
            "smile-symmetry",
            "Compatibility is symmetric: from (a & b) & b -> a & b derive \
             b & (a & b) -> b.",
            |b| {
                let assumption = implies_right(b, f("a"), f("b"))?; // a & b, ~b |-
                let nax = b.apply(Rule::NAxiom { formula: f("a & b") }, &[])?;
                let widened = b.apply(
                    Rule::MWeak {
                        position: 1,
                        formula: f("b"),
                    },
                    &[nax, assumption],
                )?; // a & b, b, ~(a & b) |-
                let premise = b.apply(Rule::LLAndIntro, &[widened])?; // (a & b) & b, ~(a & b) |-
                let split = b.apply(Rule::LLAndElim, &[premise])?; // a & b, b, ~(a & b) |-
                let rotated = b.apply(Rule::Circ, &[split])?; // ~(a & b), b, a & b |-
                let other = b.apply(
                    Rule::EWeak {
                        before: vec![],
                        after: vec![f("~b")],
                    },
                    &[rotated],
                )?; // ~(a & b), b, a & b, ~b |-
                let sub = implies_right(b, f("a & b"), f("b"))?; // (a & b) & b, ~b |-
                let main = b.apply(
                    Rule::MWeak {
                        position: 1,
                        formula: f("a & b"),
                    },
                    &[sub, premise],
                )?; // (a & b) & b, a & b, ~b |-
                let unfolded = b.apply(Rule::LLAndElim, &[main])?; // a & b, b, a & b, ~b |-
                let cut = b.apply(
                    Rule::Cut {
                        position: 0,
                        formula: f("a & b"),
                    },
                    &[unfolded, other],
                )?; // b, a & b, ~b |-
                Ok(b.apply(Rule::LLAndIntro, &[cut])?)
            },
        ),
        entry(
            "superposition",
            "The sequent form of superposition: from a & b, ~~0 |- and \
             a & ~b, ~~0 |- conclude a, ~~0 |- by cutting on b.",
            |b| {
                let z1 = b.apply(Rule::ZeroAxiom, &[])?;
                let w1 = b.apply(
                    Rule::EWeak {
                        before: vec![f("a & b")],
                        after: vec![],
                    },
                    &[z1],
                )?; // a & b, 0 |-
                let p1 = d2(b, w1, 1)?; // a & b, ~~0 |-
                let z2 = b.apply(Rule::ZeroAxiom, &[])?;
                let w2 = b.apply(
                    Rule::EWeak {
                        before: vec![f("a & ~b")],
                        after: vec![],
                    },
                    &[z2],
                )?; // a & ~b, 0 |-
                let p2 = d2(b, w2, 1)?; // a & ~b, ~~0 |-
                let s1 = b.apply(Rule::LLAndElim, &[p1])?; // a, b, ~~0 |-
                let s2 = b.apply(Rule::LLAndElim, &[p2])?; // a, ~b, ~~0 |-
                Ok(b.apply(
                    Rule::Cut {
                        position: 1,
                        formula: f("b"),
                    },
                    &[s1, s2],
                )?)
            },
        ),
        entry(
            "zero-rotation",
            "A zero anywhere in a pure conjunction refutes it in any rotation: \
             (0 & b) & c |- rearranges to (c & b) & 0 |-.",
            |b| {
                let z = b.apply(Rule::ZeroAxiom, &[])?;
                let wide = b.apply(
                    Rule::EWeak {
                        before: vec![],
                        after: vec![f("b"), f("c")],
                    },
                    &[z],
                )?; // 0, b, c |-
                let i1 = b.apply(Rule::LLAndIntro, &[wide])?; // 0 & b, c |-
                let i2 = b.apply(Rule::LLAndIntro, &[i1])?; // (0 & b) & c |-
                let e1 = b.apply(Rule::LLAndElim, &[i2])?; // 0 & b, c |-
                let e2 = b.apply(Rule::LLAndElim, &[e1])?; // 0, b, c |-
                let rot = b.apply(Rule::Circ, &[e2])?; // c, b, 0 |-
                let j1 = b.apply(Rule::LLAndIntro, &[rot])?; // c & b, 0 |-
                Ok(b.apply(Rule::LLAndIntro, &[j1])?)
            },
        ),
    ]
}

/// Look a corpus script up by name.
pub fn corpus_script(name: &str) -> Option<ProofScript> {
    corpus()
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| e.script)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::script::{parse_script, print_script};
    use crate::kernel::{check_proof, ProofError};

    #[test]
    fn every_script_checks_and_names_are_unique() {
        let entries = corpus();
        assert_eq!(entries.len(), 23);
        for e in &entries {
            check_proof(&e.script)
                .unwrap_or_else(|err| panic!("corpus script `{}` failed: {err}", e.name));
            assert!(!e.note.is_empty());
        }
        let mut names: Vec<_> = entries.iter().map(|e| e.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), entries.len(), "corpus names must be unique");
    }

    #[test]
    fn goals_are_pinned() {
        let expected: &[(&str, &str)] = &[
            ("repetition", "a, a, ~a |-"),
            ("contraction", "a, ~a |-"),
            ("exchange", "~a, a |-"),
            ("double-negation-elimination", "~a, a |-"),
            ("double-negation-introduction", "~~a, ~a |-"),
            ("equiv-replacement", "g, ~~a, ~a |-"),
            ("lr-and-intro", "g, h, ~b & b |-"),
            ("lr-and-elim", "g, h, b, ~b |-"),
            ("implication-transitivity", "a & b, ~~~b |-"),
            ("implication-context", "a & b, ~b, c |-"),
            ("contrapositive", "~b, ~~(a & b) |-"),
            ("and-left-congruence", "(a & b) & c, ~(b & c) |-"),
            ("and-right-congruence", "c & ~~a, ~(c & a) |-"),
            ("dot-right", "a & b, ~b |-"),
            ("absorption-left", "(a & b) & b, ~(a & b) |-"),
            ("absorption-expansion", "a & b, ~((a & b) & b) |-"),
            ("associativity-forward", "(a & b) & (b & c), ~c |-"),
            ("associativity-backward", "((a & b) & b) & c, ~c |-"),
            (
                "associativity-rotated-forward",
                "(c & b) & (a & b), ~(c & (a & b)) |-",
            ),
            (
                "associativity-rotated-backward",
                "c & (a & b), ~((c & b) & (a & b)) |-",
            ),
            ("smile-symmetry", "b & (a & b), ~b |-"),
            ("superposition", "a, ~~0 |-"),
            ("zero-rotation", "(c & b) & 0 |-"),
        ];
        let entries = corpus();
        assert_eq!(entries.len(), expected.len());
        for ((name, goal), e) in expected.iter().zip(&entries) {
            assert_eq!(e.name, *name, "corpus order changed");
            assert_eq!(e.script.goal.to_string(), *goal, "goal of `{name}`");
        }
    }

    #[test]
    fn scripts_round_trip_through_text() {
        for e in corpus() {
            let text = print_script(&e.script);
            let back = parse_script(&text)
                .unwrap_or_else(|err| panic!("reparse of `{}` failed: {err}", e.name));
            assert_eq!(back, e.script, "round-trip of `{}`", e.name);
        }
    }

    #[test]
    fn dot_right_is_the_three_step_script() {
        let script = corpus_script("dot-right").unwrap();
        let tags: Vec<&str> = script.steps.iter().map(|s| s.rule.name()).collect();
        assert_eq!(tags, ["NAxiom", "EWeak", "LLAndIntro"]);
        // Editing the goal must be caught.
        let mut tampered = script;
        tampered.goal = crate::sequent::Sequent(vec![f("a & b"), f("~a")]);
        assert!(matches!(
            check_proof(&tampered),
            Err(ProofError::GoalMismatch { .. })
        ));
    }

    #[test]
    fn lookup_by_name() {
        assert!(corpus_script("superposition").is_some());
        assert!(corpus_script("no-such-script").is_none());
    }
}
