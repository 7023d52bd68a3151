//! Bounded automatic derivation search, plus the implication and
//! equivalence-class layer built on top of it.
//!
//! The search runs *backward*: starting from the goal sequent it inverts the
//! kernel rules (which premises could a rule application have consumed to
//! produce this sequent?) under iterative deepening, and every success is
//! replayed forward through [`ScriptBuilder`], so a returned script has been
//! checked by the kernel — search code is never trusted, only the checker.
//!
//! Two deliberate restrictions keep backward search bounded, and both are
//! completeness gaps of the *search*, not of the calculus:
//!
//! * **Analytic cuts** — `Cut` (and the conjunct guessed by inverting the
//!   main-∧ elimination) only considers subformulas of the original goal and
//!   their single negations, capped at
//!   [`SearchBudget::max_cut_formulas`]. Unrestricted cut formulas make the
//!   backward tree infinitely branching.
//! * **Depth** — at most [`SearchBudget::max_depth`] rule applications along
//!   any branch, explored as iterative deepening so the shallowest proof in
//!   branch order is found first.
//!
//! "Not found" is therefore a value, never a disproof; refutation is the
//! semantics module's job ([`crate::semantics::countermodel_search`]).
//!
//! Failed subgoals are memoized as (exact formula sequence, depth) pairs —
//! no normalization the kernel would not itself accept — and branch order is
//! fixed, so for a fixed budget the outcome *and* the found script are
//! deterministic. The time cap is a wall-clock safety valve checked every few
//! thousand nodes; when it fires the search gives up with "not found" without
//! recording memo entries (a timeout is not a refutation). All shipped tests
//! finish far under the default cap, so verdicts stay reproducible.
//!
//! One optimization is load-bearing for throughput and changes no verdict:
//! a subgoal refuted by exhaustive evaluation in a small finite model cannot
//! be derivable (the rules are sound), so its branch is pruned. Pruning only
//! discards subtrees that could never contain a proof, and the refutation
//! check is exhaustive and deterministic, so found/not-found, the found
//! script, and budget monotonicity are all exactly as without it.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::formula::Formula;
use crate::kernel::derived::ScriptBuilder;
use crate::kernel::{ProofScript, Rule};
use crate::model::{model_by_name, Feature, PAlgebra};
use crate::semantics::{separate_formulas, ValidityBudget};
use crate::sequent::Sequent;

/// Resource bounds for one [`prove`] call. All fields must be positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Maximum rule applications along a single branch of the derivation.
    pub max_depth: usize,
    /// Maximum analytic cut candidates considered (goal subformulas and
    /// their single negations, in first-occurrence order).
    pub max_cut_formulas: usize,
    /// Wall-clock safety valve; when exceeded the search returns "not
    /// found" early.
    pub time_cap: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_depth: 8,
            max_cut_formulas: 12,
            time_cap: Duration::from_secs(10),
        }
    }
}

impl SearchBudget {
    fn validate(&self) {
        assert!(
            self.max_depth > 0 && self.max_cut_formulas > 0 && !self.time_cap.is_zero(),
            "search budget fields must all be positive, got {self:?}"
        );
    }
}

/// A proof found by the backward search, as a tree of forward rule
/// applications (premise subtrees in kernel premise order).
struct Tree {
    rule: Rule,
    premises: Vec<Tree>,
}

/// One backward attempt's outcome at a node.
enum Outcome {
    /// A derivation tree closing this subgoal within the remaining depth.
    Found(Tree),
    /// No derivation within the remaining depth (memoized).
    Exhausted,
    /// The time cap fired; unwind without memoizing anything.
    Aborted,
}

/// Subformulas of the goal in pre-order of first occurrence, followed by
/// the single negations not already present, capped at `cap`.
fn cut_candidates(goal: &Sequent, cap: usize) -> Vec<Formula> {
    fn walk(f: &Formula, out: &mut Vec<Formula>) {
        if !out.contains(f) {
            out.push(f.clone());
        }
        match f {
            Formula::Zero | Formula::Atom(_) => {}
            Formula::Neg(inner) => walk(inner, out),
            Formula::And(l, r) => {
                walk(l, out);
                walk(r, out);
            }
        }
    }
    let mut subs = Vec::new();
    for f in &goal.0 {
        walk(f, &mut subs);
    }
    let mut out = subs.clone();
    for s in &subs {
        let n = Formula::neg(s.clone());
        if !out.contains(&n) {
            out.push(n);
        }
    }
    out.truncate(cap);
    out
}

/// Exhaustively evaluate `s` in the finite model `m`, returning `true` on
/// the first assignment whose left fold is nonzero. Two short-circuits keep
/// this cheap: within one assignment the running product stops as soon as it
/// hits `0` (a zero prefix stays zero), and the sweep stops at the first
/// countermodel. Sequents with too many atoms are never pruned.
fn refutes(m: &dyn PAlgebra, s: &Sequent) -> bool {
    let Some(carrier) = m.carrier() else {
        return false;
    };
    let mut atoms: Vec<String> = Vec::new();
    for f in &s.0 {
        for a in f.atoms() {
            if !atoms.contains(&a) {
                atoms.push(a);
            }
        }
    }
    if carrier.len().saturating_pow(atoms.len() as u32) > 4096 {
        return false;
    }

    fn eval(m: &dyn PAlgebra, atoms: &[String], tuple: &[Feature], f: &Formula) -> Feature {
        match f {
            Formula::Zero => m.zero(),
            Formula::Atom(name) => {
                let slot = atoms.iter().position(|a| a == name).expect("atom listed");
                tuple[slot].clone()
            }
            Formula::Neg(inner) => m.comp(&eval(m, atoms, tuple, inner)),
            Formula::And(l, r) => m.dot(&eval(m, atoms, tuple, l), &eval(m, atoms, tuple, r)),
        }
    }

    let zero = m.zero();
    let mut tuple: Vec<usize> = vec![0; atoms.len()];
    loop {
        let features: Vec<Feature> = tuple.iter().map(|&i| carrier[i].clone()).collect();
        let mut value: Option<Feature> = None;
        for f in &s.0 {
            let v = eval(m, &atoms, &features, f);
            let next = match value {
                None => v,
                Some(acc) => m.dot(&acc, &v),
            };
            if m.eq(&next, &zero) {
                value = Some(zero.clone());
                break;
            }
            value = Some(next);
        }
        let folded = value.unwrap_or_else(|| m.comp(&zero));
        if !m.eq(&folded, &zero) {
            return true;
        }
        // Odometer step, last atom fastest.
        let mut k = atoms.len();
        loop {
            if k == 0 {
                return false;
            }
            k -= 1;
            tuple[k] += 1;
            if tuple[k] < carrier.len() {
                break;
            }
            tuple[k] = 0;
        }
    }
}

struct Searcher {
    candidates: Vec<Formula>,
    /// Subgoals known underivable within the mapped remaining depth.
    failed: HashMap<Vec<Formula>, usize>,
    /// Cached finite-model refutation verdicts per subgoal.
    refuted: HashMap<Vec<Formula>, bool>,
    /// Small models used for the sound refutation prune.
    filters: Vec<Box<dyn PAlgebra>>,
    deadline: Instant,
    nodes: u64,
}

impl Searcher {
    fn new(goal: &Sequent, budget: &SearchBudget) -> Self {
        let filters = ["mo:2", "mo:3"]
            .iter()
            .map(|spec| -> Box<dyn PAlgebra> {
                model_by_name(spec, Default::default()).expect("registry")
            })
            .collect();
        Searcher {
            candidates: cut_candidates(goal, budget.max_cut_formulas),
            failed: HashMap::new(),
            refuted: HashMap::new(),
            filters,
            deadline: Instant::now() + budget.time_cap,
            nodes: 0,
        }
    }

    /// Is `s` exhaustively refuted by one of the small filter models? Sound
    /// pruning: a refuted sequent has no derivation at any depth. Subgoals
    /// with too many atoms for the exhaustive sweep are simply not pruned.
    fn is_refuted(&mut self, s: &Sequent) -> bool {
        if let Some(&v) = self.refuted.get(&s.0) {
            return v;
        }
        let verdict = self.filters.iter().any(|m| refutes(m.as_ref(), s));
        self.refuted.insert(s.0.clone(), verdict);
        verdict
    }

    /// Try to close `s` within `remaining` rule applications.
    fn attempt(&mut self, s: &Sequent, remaining: usize) -> Outcome {
        if remaining == 0 {
            return Outcome::Exhausted;
        }
        if self.failed.get(&s.0).is_some_and(|&d| d >= remaining) {
            return Outcome::Exhausted;
        }
        self.nodes += 1;
        if self.nodes % 4096 == 0 && Instant::now() > self.deadline {
            return Outcome::Aborted;
        }

        // Axioms close a branch in one application.
        if s.0.as_slice() == [Formula::Zero] {
            return Outcome::Found(Tree {
                rule: Rule::ZeroAxiom,
                premises: Vec::new(),
            });
        }
        if s.len() == 2 && s.0[1] == Formula::neg(s.0[0].clone()) {
            return Outcome::Found(Tree {
                rule: Rule::NAxiom {
                    formula: s.0[0].clone(),
                },
                premises: Vec::new(),
            });
        }

        // Expanding a node is the only expensive move, so the refutation
        // filter runs exactly when a node is about to expand.
        if remaining >= 2 {
            if self.is_refuted(s) {
                self.failed.insert(s.0.clone(), usize::MAX);
                return Outcome::Exhausted;
            }
            match self.branches(s, remaining) {
                Outcome::Exhausted => {}
                other => return other,
            }
        }

        let entry = self.failed.entry(s.0.clone()).or_insert(0);
        *entry = (*entry).max(remaining);
        Outcome::Exhausted
    }

    /// Enumerate the rule inversions of `s` in fixed order; each premise of
    /// a branch must close within `remaining - 1`.
    fn branches(&mut self, s: &Sequent, remaining: usize) -> Outcome {
        let n = s.len();

        // Left-∧ introduction, inverted: split a leading conjunction.
        if let Some(Formula::And(l, r)) = s.0.first() {
            let mut p = vec![(**l).clone(), (**r).clone()];
            p.extend(s.0[1..].iter().cloned());
            match self.expand(Rule::LLAndIntro, vec![Sequent(p)], remaining) {
                Outcome::Exhausted => {}
                other => return other,
            }
        }

        // Extremity weakening, inverted: the premise is any proper
        // contiguous segment (longer segments first at each start).
        for i in 0..n {
            for j in (i + 1..=n).rev() {
                if (i, j) == (0, n) {
                    continue;
                }
                let rule = Rule::EWeak {
                    before: s.0[..i].to_vec(),
                    after: s.0[j..].to_vec(),
                };
                match self.expand(rule, vec![Sequent(s.0[i..j].to_vec())], remaining) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
        }

        // Rotation is its own inverse on three-formula sequents.
        if n == 3 {
            let rev: Vec<Formula> = s.0.iter().rev().cloned().collect();
            if rev != s.0 {
                match self.expand(Rule::Circ, vec![Sequent(rev)], remaining) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
        }

        // Main weakening, inverted: delete the formula at each position; the
        // side premise re-asserts its negation under the same prefix.
        for p in 0..n {
            let mut main = s.0.clone();
            let alpha = main.remove(p);
            let mut side = s.0[..p].to_vec();
            side.push(Formula::neg(alpha.clone()));
            let rule = Rule::MWeak {
                position: p,
                formula: alpha,
            };
            match self.expand(rule, vec![Sequent(main), Sequent(side)], remaining) {
                Outcome::Exhausted => {}
                other => return other,
            }
        }

        // Left-∧ elimination, inverted: fuse the first two formulas.
        if n >= 2 {
            let mut p = vec![Formula::and(s.0[0].clone(), s.0[1].clone())];
            p.extend(s.0[2..].iter().cloned());
            match self.expand(Rule::LLAndElim, vec![Sequent(p)], remaining) {
                Outcome::Exhausted => {}
                other => return other,
            }
        }

        // Main-∧ introduction, inverted: peel the left conjunct α off an
        // `α ∧ β` anywhere, discharging it through the bare side premise.
        for p in 0..n {
            let Formula::And(l, r) = &s.0[p] else {
                continue;
            };
            let mut main = s.0.clone();
            main[p] = (**r).clone();
            let mut side = s.0[..p].to_vec();
            side.push(Formula::neg((**l).clone()));
            let rule = Rule::MLAndIntro {
                position: p,
                formula: (**l).clone(),
            };
            match self.expand(rule, vec![Sequent(main), Sequent(side)], remaining) {
                Outcome::Exhausted => {}
                other => return other,
            }
        }

        // Main-∧ elimination, inverted: this *adds* a conjunct, so the
        // conjunct is guessed from the analytic candidates.
        for p in 0..n {
            for ci in 0..self.candidates.len() {
                let alpha = self.candidates[ci].clone();
                let mut main = s.0.clone();
                main[p] = Formula::and(alpha.clone(), main[p].clone());
                let mut side = s.0[..p].to_vec();
                side.push(Formula::neg(alpha));
                let rule = Rule::MLAndElim { position: p };
                match self.expand(rule, vec![Sequent(main), Sequent(side)], remaining) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
        }

        // Cut, inverted: insert an analytic candidate and its negation at
        // each position. Most speculative, so tried last.
        for p in 0..=n {
            for ci in 0..self.candidates.len() {
                let alpha = self.candidates[ci].clone();
                let mut with = s.0.clone();
                with.insert(p, alpha.clone());
                let mut without = s.0.clone();
                without.insert(p, Formula::neg(alpha.clone()));
                let rule = Rule::Cut {
                    position: p,
                    formula: alpha,
                };
                match self.expand(rule, vec![Sequent(with), Sequent(without)], remaining) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
        }

        Outcome::Exhausted
    }

    /// Close every premise within `remaining - 1`, yielding the forward
    /// application on success.
    fn expand(&mut self, rule: Rule, premises: Vec<Sequent>, remaining: usize) -> Outcome {
        let mut subtrees = Vec::with_capacity(premises.len());
        for p in &premises {
            match self.attempt(p, remaining - 1) {
                Outcome::Found(t) => subtrees.push(t),
                Outcome::Exhausted => return Outcome::Exhausted,
                Outcome::Aborted => return Outcome::Aborted,
            }
        }
        Outcome::Found(Tree {
            rule,
            premises: subtrees,
        })
    }
}

/// Emit the tree post-order through the kernel-checking builder.
fn emit(b: &mut ScriptBuilder, t: &Tree) -> usize {
    let ids: Vec<usize> = t.premises.iter().map(|p| emit(b, p)).collect();
    b.apply(t.rule.clone(), &ids)
        .expect("searched derivation must check forward")
}

/// Search for a derivation of the one-sided sequent `goal`.
///
/// Iterative deepening over backward rule inversions; on success the script
/// has already passed [`crate::kernel::check_proof`] (the builder checks
/// every step and the final goal). `None` means "not found within budget"
/// and is *not* a disproof.
pub fn prove(goal: &Sequent, budget: &SearchBudget) -> Option<ProofScript> {
    budget.validate();
    let mut searcher = Searcher::new(goal, budget);
    for limit in 1..=budget.max_depth {
        match searcher.attempt(goal, limit) {
            Outcome::Found(tree) => {
                let mut b = ScriptBuilder::new();
                emit(&mut b, &tree);
                let script = b.finish().expect("searched derivation must check forward");
                debug_assert_eq!(script.goal, *goal);
                return Some(script);
            }
            Outcome::Aborted => return None,
            Outcome::Exhausted => {}
        }
    }
    None
}

/// Search for a derivation of the implication `α → β`, i.e. of the sequent
/// `α, ¬β ⊢`.
pub fn implies(alpha: &Formula, beta: &Formula, budget: &SearchBudget) -> Option<ProofScript> {
    prove(
        &Sequent(vec![alpha.clone(), Formula::neg(beta.clone())]),
        budget,
    )
}

/// The desk-scale quotient of a finite formula set: classes proved
/// equivalent, plus the pairs the artifact could neither prove equivalent
/// nor separate semantically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivClasses {
    /// Equivalence classes (both implications derived), members and classes
    /// in input order.
    pub classes: Vec<Vec<Formula>>,
    /// Cross-class pairs with no separating countermodel either — their
    /// status is genuinely unknown at this budget.
    pub unknown: Vec<(Formula, Formula)>,
}

/// Partition `formulas` by derivable equivalence (both implications found
/// within `budget`), then try to separate every cross-class pair with a zoo
/// countermodel; pairs that resist both are reported as unknown, never
/// silently classified.
pub fn equiv_classes(formulas: &[Formula], budget: &SearchBudget) -> EquivClasses {
    // Structural duplicates are the same formula; keep first occurrences.
    let mut items: Vec<Formula> = Vec::new();
    for f in formulas {
        if !items.contains(f) {
            items.push(f.clone());
        }
    }
    let n = items.len();

    // Union-find over indices.
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if root(&mut parent, i) == root(&mut parent, j) {
                continue;
            }
            if implies(&items[i], &items[j], budget).is_some()
                && implies(&items[j], &items[i], budget).is_some()
            {
                let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }

    let mut classes: Vec<Vec<Formula>> = Vec::new();
    let mut class_of: Vec<usize> = vec![usize::MAX; n];
    for i in 0..n {
        let r = root(&mut parent, i);
        if class_of[r] == usize::MAX {
            class_of[r] = classes.len();
            classes.push(Vec::new());
        }
        class_of[i] = class_of[r];
        classes[class_of[i]].push(items[i].clone());
    }

    let semantic_budget = ValidityBudget::default();
    let mut unknown = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if class_of[i] != class_of[j]
                && separate_formulas(&items[i], &items[j], &semantic_budget).is_none()
            {
                unknown.push((items[i].clone(), items[j].clone()));
            }
        }
    }

    EquivClasses { classes, unknown }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_formula, parse_sequent, SurfaceSequent};
    use crate::kernel::check_proof;
    use crate::kernel::script::print_script;
    use crate::semantics::countermodel_search;
    use crate::sequent::jump_normalize;

    fn f(src: &str) -> Formula {
        parse_formula(src).unwrap()
    }

    fn goal(src: &str) -> Sequent {
        let s = parse_sequent(src).unwrap();
        assert!(s.rhs.is_empty(), "test goals are one-sided");
        Sequent(s.lhs)
    }

    fn rule_names(script: &ProofScript) -> Vec<&'static str> {
        script.steps.iter().map(|s| s.rule.name()).collect()
    }

    #[test]
    fn axiom_goal_is_a_one_step_proof() {
        let script = prove(&goal("a, ~a |-"), &SearchBudget::default()).expect("found");
        assert_eq!(rule_names(&script), ["NAxiom"]);
        assert_eq!(script.goal, goal("a, ~a |-"));
    }

    #[test]
    fn conjunction_goal_is_found_at_depth_three() {
        let tight = SearchBudget {
            max_depth: 3,
            ..Default::default()
        };
        let script = prove(&goal("a & b, ~b |-"), &tight).expect("found at depth 3");
        assert_eq!(rule_names(&script), ["NAxiom", "EWeak", "LLAndIntro"]);
        assert!(
            prove(
                &goal("a & b, ~b |-"),
                &SearchBudget {
                    max_depth: 2,
                    ..Default::default()
                }
            )
            .is_none(),
            "two applications cannot reach this goal"
        );
    }

    #[test]
    fn underivable_goal_is_not_found_and_has_a_countermodel() {
        let g = goal("a, b, ~a |-");
        assert!(prove(&g, &SearchBudget::default()).is_none());
        let s = SurfaceSequent {
            lhs: g.0.clone(),
            rhs: vec![],
        };
        let witness = countermodel_search(&s, &ValidityBudget::default()).expect("countermodel");
        assert_eq!(witness.model, "mo:2");
    }

    #[test]
    fn implication_examples_are_derivable() {
        let b = SearchBudget::default();
        assert!(implies(&f("a & b"), &f("b"), &b).is_some());
        let zero = implies(&f("0"), &f("a"), &b).expect("found");
        assert_eq!(rule_names(&zero), ["ZeroAxiom", "EWeak"]);
        assert!(implies(&f("a"), &f("a & a"), &b).is_some());
    }

    #[test]
    fn every_found_script_passes_the_kernel_with_its_goal() {
        let b = SearchBudget::default();
        for src in [
            "a, ~a |-",
            "a & b, ~b |-",
            "0, ~a |-",
            "a, ~(a & a) |-",
            "a, ~~~a |-",
            "~~a, ~a |-",
        ] {
            let g = goal(src);
            let script = prove(&g, &b).unwrap_or_else(|| panic!("`{src}` should be derivable"));
            let results = check_proof(&script).expect("kernel accepts");
            assert_eq!(results.last(), Some(&g), "`{src}` goal mismatch");
            // Derivable goals must have no countermodel anywhere in the zoo.
            let surface = SurfaceSequent {
                lhs: g.0,
                rhs: vec![],
            };
            assert!(
                countermodel_search(&surface, &ValidityBudget::default()).is_none(),
                "`{src}` was proved yet countermodeled"
            );
        }
    }

    #[test]
    fn double_negation_is_derivable_both_ways() {
        // These need rediscovered exchange/contraction patterns via Cut.
        let b = SearchBudget::default();
        assert!(implies(&f("a"), &f("~~a"), &b).is_some());
        assert!(implies(&f("~~a"), &f("a"), &b).is_some());
    }

    #[test]
    fn empty_sequent_is_not_found_at_default_budget() {
        assert!(prove(&Sequent(vec![]), &SearchBudget::default()).is_none());
    }

    #[test]
    fn budget_monotonicity_on_the_example_battery() {
        let small = SearchBudget {
            max_depth: 4,
            max_cut_formulas: 6,
            time_cap: Duration::from_secs(10),
        };
        let bigger = [
            SearchBudget {
                max_depth: 6,
                ..small
            },
            SearchBudget {
                max_depth: 8,
                max_cut_formulas: 12,
                ..small
            },
            SearchBudget {
                max_depth: 10,
                max_cut_formulas: 20,
                time_cap: Duration::from_secs(30),
            },
        ];
        for src in ["a, ~a |-", "a & b, ~b |-", "0, ~a |-", "a, ~(a & a) |-"] {
            let g = goal(src);
            if prove(&g, &small).is_some() {
                for big in &bigger {
                    assert!(
                        prove(&g, big).is_some(),
                        "`{src}` found at {small:?} but lost at {big:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn search_outcome_and_script_are_deterministic() {
        let b = SearchBudget::default();
        for src in ["a & b, ~b |-", "a, ~(a & a) |-", "~~a, ~a |-"] {
            let first = prove(&goal(src), &b).expect("found");
            let second = prove(&goal(src), &b).expect("found");
            assert_eq!(print_script(&first), print_script(&second));
        }
    }

    #[test]
    fn surface_goals_prove_through_jump_normalization() {
        // `a |- a, a` and `|- a | ~a` are derivable after the jump.
        let b = SearchBudget::default();
        for src in ["a |- a, a", "|- a | ~a"] {
            let surface = parse_sequent(src).unwrap();
            let g = jump_normalize(&surface);
            assert!(prove(&g, &b).is_some(), "`{src}` should be derivable");
            assert!(
                countermodel_search(&surface, &ValidityBudget::default()).is_none(),
                "`{src}` was proved yet countermodeled"
            );
        }
    }

    #[test]
    fn equivalence_classes_merge_separate_and_admit_unknown() {
        let b = SearchBudget::default();

        let double_neg = equiv_classes(&[f("a"), f("~~a")], &b);
        assert_eq!(double_neg.classes, vec![vec![f("a"), f("~~a")]]);
        assert!(double_neg.unknown.is_empty());

        let atoms = equiv_classes(&[f("a"), f("b")], &b);
        assert_eq!(atoms.classes, vec![vec![f("a")], vec![f("b")]]);
        assert!(atoms.unknown.is_empty());

        let commuted = equiv_classes(&[f("a & b"), f("b & a")], &b);
        assert_eq!(commuted.classes, vec![vec![f("a & b")], vec![f("b & a")]]);
        assert!(
            commuted.unknown.is_empty(),
            "the conjunction order pair is separated by a zoo countermodel"
        );

        // A starved budget cannot prove a ≡ ~~a, and no countermodel can
        // separate them either: the pair must surface as unknown.
        let starved = SearchBudget {
            max_depth: 1,
            max_cut_formulas: 1,
            time_cap: Duration::from_secs(10),
        };
        let stuck = equiv_classes(&[f("a"), f("~~a")], &starved);
        assert_eq!(stuck.classes.len(), 2);
        assert_eq!(stuck.unknown, vec![(f("a"), f("~~a"))]);
    }

    #[test]
    fn mixed_set_quotients_correctly() {
        let b = SearchBudget::default();
        let report = equiv_classes(&[f("a"), f("~~a"), f("b"), f("a & b"), f("b & a")], &b);
        assert_eq!(
            report.classes,
            vec![
                vec![f("a"), f("~~a")],
                vec![f("b")],
                vec![f("a & b")],
                vec![f("b & a")],
            ]
        );
        assert!(report.unknown.is_empty());
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn zero_budget_is_rejected() {
        let _ = prove(
            &goal("a, ~a |-"),
            &SearchBudget {
                max_depth: 0,
                ..Default::default()
            },
        );
    }
}
