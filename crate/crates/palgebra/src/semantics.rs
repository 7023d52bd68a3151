//! Interpreting formulas and sequents in models: evaluation, validity
//! checking, countermodel search over the model zoo, and the rule-level
//! soundness harness.
//!
//! Evaluation is purely structural — `0` to the least element, `~` to the
//! complement, `&` to the product — and a one-sided sequent `Γ ⊢` holds under
//! an assignment exactly when the left-associated conjunction of Γ evaluates
//! to `0`. Everything else here is bookkeeping around that definition, with
//! one firm honesty rule: randomized search can refute, never certify. The
//! subspace backend therefore never reports "valid", and a zoo pass is never
//! reported as semantic equivalence.

use std::collections::BTreeMap;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::formula::{Formula, SurfaceSequent};
use crate::kernel::Rule;
use crate::laws::{mix_seed, LawReport, LawStatus};
use crate::model::{leq, standard_zoo, Feature, PAlgebra};
use crate::sequent::{or_fold, phi_fold, Sequent};

/// Upper bound on `|carrier|^#atoms` for the exhaustive assignment sweep.
/// Beyond this, [`validity_check`] refuses with a hard error instead of
/// silently degrading to sampling — the caller must choose
/// [`validity_sample`] explicitly.
pub const EXHAUSTIVE_ASSIGNMENT_CAP: usize = 1_000_000;

/// A (partial) map from atom names to features of one model.
///
/// Evaluation requires the assignment to be total on the atoms of the
/// formula at hand; a missing atom is reported as [`UnboundAtom`], never
/// defaulted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Assignment(pub BTreeMap<String, Feature>);

impl Assignment {
    /// The empty assignment.
    pub fn new() -> Self {
        Self::default()
    }

    /// Builder-style binding: `Assignment::new().bind("a", x).bind("b", y)`.
    pub fn bind(mut self, atom: &str, x: Feature) -> Self {
        self.0.insert(atom.to_string(), x);
        self
    }

    /// Look one atom up.
    pub fn get(&self, atom: &str) -> Option<&Feature> {
        self.0.get(atom)
    }

    /// Render as `a=…, b=…` using the model's feature descriptions.
    pub fn describe(&self, m: &dyn PAlgebra) -> String {
        self.0
            .iter()
            .map(|(atom, x)| format!("{atom}={}", m.describe(x)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// A formula mentioned an atom the assignment does not bind.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("atom `{atom}` has no assigned feature")]
pub struct UnboundAtom {
    /// The unbound atom name.
    pub atom: String,
}

/// Evaluate a formula: `0 ↦ zero`, `~ ↦ comp`, `& ↦ dot`, atoms via `v`.
pub fn eval(m: &dyn PAlgebra, v: &Assignment, f: &Formula) -> Result<Feature, UnboundAtom> {
    match f {
        Formula::Zero => Ok(m.zero()),
        Formula::Atom(name) => v.get(name).cloned().ok_or_else(|| UnboundAtom {
            atom: name.clone(),
        }),
        Formula::Neg(inner) => Ok(m.comp(&eval(m, v, inner)?)),
        Formula::And(l, r) => Ok(m.dot(&eval(m, v, l)?, &eval(m, v, r)?)),
    }
}

/// Does a two-sided sequent hold under `v`? The left side is read as its
/// left-associated conjunction (empty ↦ `~0`, which evaluates to the unit),
/// the right side as its right-associated disjunction (empty ↦ `0`), and the
/// sequent holds when left ≤ right.
pub fn sequent_valid(
    m: &dyn PAlgebra,
    v: &Assignment,
    s: &SurfaceSequent,
) -> Result<bool, UnboundAtom> {
    let lhs = eval(m, v, &phi_fold(&s.lhs))?;
    let rhs = eval(m, v, &or_fold(&s.rhs))?;
    Ok(leq(m, &lhs, &rhs))
}

/// Does a one-sided (kernel) sequent hold under `v`? Equivalent to
/// [`sequent_valid`] with an empty right side: the left fold must evaluate
/// to `0`.
pub fn kernel_sequent_valid(
    m: &dyn PAlgebra,
    v: &Assignment,
    s: &Sequent,
) -> Result<bool, UnboundAtom> {
    let lhs = eval(m, v, &phi_fold(&s.0))?;
    Ok(m.eq(&lhs, &m.zero()))
}

/// Atoms of a sequence of formulas, first occurrence first.
fn atoms_of(formulas: &[&[Formula]]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for side in formulas {
        for f in *side {
            for atom in f.atoms() {
                if !out.contains(&atom) {
                    out.push(atom);
                }
            }
        }
    }
    out
}

/// Budget for assignment searches: how many random assignments to try on
/// non-enumerable carriers, and the seed the stream is drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValidityBudget {
    /// Random assignments per model in sampled mode.
    pub samples: usize,
    /// RNG seed; equal budgets give equal verdicts.
    pub seed: u64,
}

impl Default for ValidityBudget {
    fn default() -> Self {
        ValidityBudget {
            samples: 200,
            seed: 0x005_EED,
        }
    }
}

/// Outcome of a validity check in one model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    /// Every assignment satisfies the sequent — only exhaustive sweeps over
    /// finite carriers can say this.
    Valid {
        /// Number of assignments swept.
        assignments: usize,
    },
    /// A concrete refuting assignment.
    Countermodel(Assignment),
    /// Sampling found no refutation; explicitly *not* a validity claim.
    Exhausted {
        /// Number of assignments sampled.
        samples: usize,
    },
}

/// Why a validity check could not run.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidityError {
    /// The exhaustive sweep would be too large; choose sampling explicitly.
    #[error(
        "exhaustive check over {model} needs {carrier}^{atoms} assignments \
         (cap {cap}); use sampled mode instead"
    )]
    CapExceeded {
        /// Model name.
        model: String,
        /// Carrier size.
        carrier: usize,
        /// Number of distinct atoms in the sequent.
        atoms: usize,
        /// The cap that was exceeded.
        cap: usize,
    },
}

/// Odometer over all assignments of `carrier` features to `atoms`, last atom
/// fastest (so witnesses come out in the same scan order the finite axiom
/// checker uses). Calls `f` until it returns `false`; returns the number of
/// assignments visited and whether the sweep ran to completion.
fn for_each_assignment(
    atoms: &[String],
    carrier: &[Feature],
    mut f: impl FnMut(&Assignment) -> bool,
) -> (usize, bool) {
    let mut idx = vec![0usize; atoms.len()];
    let mut visited = 0;
    loop {
        let v = Assignment(
            atoms
                .iter()
                .zip(&idx)
                .map(|(a, &i)| (a.clone(), carrier[i].clone()))
                .collect(),
        );
        visited += 1;
        if !f(&v) {
            return (visited, false);
        }
        let mut d = atoms.len();
        loop {
            if d == 0 {
                return (visited, true);
            }
            d -= 1;
            idx[d] += 1;
            if idx[d] < carrier.len() {
                break;
            }
            idx[d] = 0;
        }
    }
}

/// A random total assignment on `atoms`.
fn random_assignment(m: &dyn PAlgebra, atoms: &[String], rng: &mut dyn RngCore) -> Assignment {
    Assignment(
        atoms
            .iter()
            .map(|a| (a.clone(), m.sample(rng)))
            .collect(),
    )
}

/// Check a sequent in one model.
///
/// Finite carriers get a definitive exhaustive sweep over all
/// `|carrier|^#atoms` assignments, refused with [`ValidityError::CapExceeded`]
/// past [`EXHAUSTIVE_ASSIGNMENT_CAP`]. Non-enumerable carriers are sampled
/// and can only answer [`Validity::Countermodel`] or [`Validity::Exhausted`]
/// — never `Valid`.
pub fn validity_check(
    m: &dyn PAlgebra,
    s: &SurfaceSequent,
    budget: &ValidityBudget,
) -> Result<Validity, ValidityError> {
    let atoms = atoms_of(&[&s.lhs, &s.rhs]);
    match m.carrier() {
        Some(carrier) => {
            let total = carrier
                .len()
                .checked_pow(u32::try_from(atoms.len()).unwrap_or(u32::MAX))
                .filter(|&t| t <= EXHAUSTIVE_ASSIGNMENT_CAP);
            if total.is_none() {
                return Err(ValidityError::CapExceeded {
                    model: m.name(),
                    carrier: carrier.len(),
                    atoms: atoms.len(),
                    cap: EXHAUSTIVE_ASSIGNMENT_CAP,
                });
            }
            let mut counterexample = None;
            let (visited, completed) = for_each_assignment(&atoms, &carrier, |v| {
                if sequent_valid(m, v, s).expect("assignment is total") {
                    true
                } else {
                    counterexample = Some(v.clone());
                    false
                }
            });
            Ok(match counterexample {
                Some(v) => Validity::Countermodel(v),
                None => {
                    debug_assert!(completed);
                    Validity::Valid {
                        assignments: visited,
                    }
                }
            })
        }
        None => Ok(validity_sample(m, s, budget)),
    }
}

/// Sampled refutation search in one model (any backend). Never answers
/// `Valid`.
pub fn validity_sample(m: &dyn PAlgebra, s: &SurfaceSequent, budget: &ValidityBudget) -> Validity {
    let atoms = atoms_of(&[&s.lhs, &s.rhs]);
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(budget.seed, &m.name()));
    for _ in 0..budget.samples {
        let v = random_assignment(m, &atoms, &mut rng);
        if !sequent_valid(m, &v, s).expect("assignment is total") {
            return Validity::Countermodel(v);
        }
    }
    Validity::Exhausted {
        samples: budget.samples,
    }
}

/// A countermodel found somewhere in the zoo: the model's registry name, the
/// refuting assignment, and a rendered one-line description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountermodelWitness {
    /// Registry name of the model (resolvable by `model_by_name`).
    pub model: String,
    /// The refuting assignment.
    pub assignment: Assignment,
    /// Human-readable `model: a=…, b=…` line.
    pub text: String,
}

/// Search the standard zoo, smallest model first, for a countermodel to `s`.
///
/// Finite models are swept exhaustively (falling back to sampling if a sweep
/// would blow the cap); the subspace models are sampled with the budget. The
/// first countermodel in registry order is returned, deterministically for a
/// fixed budget. `None` means no refutation was found — not that the sequent
/// is derivable.
pub fn countermodel_search(s: &SurfaceSequent, budget: &ValidityBudget) -> Option<CountermodelWitness> {
    for m in standard_zoo() {
        let verdict = match validity_check(m.as_ref(), s, budget) {
            Ok(v) => v,
            Err(ValidityError::CapExceeded { .. }) => validity_sample(m.as_ref(), s, budget),
        };
        if let Validity::Countermodel(v) = verdict {
            let text = format!("{}: {}", m.name(), v.describe(m.as_ref()));
            return Some(CountermodelWitness {
                model: m.name(),
                assignment: v,
                text,
            });
        }
    }
    None
}

/// Refutation-only semantic-equivalence check: search the zoo for a model and
/// assignment under which `f` and `g` evaluate to different features.
///
/// `Some(witness)` means the formulas are definitely not equivalent.
/// `None` means no separation was found in the zoo — which is *not* a proof
/// of equivalence (the zoo is not all models); proving equivalence is the
/// proof-search layer's job.
pub fn separate_formulas(
    f: &Formula,
    g: &Formula,
    budget: &ValidityBudget,
) -> Option<CountermodelWitness> {
    let atoms = atoms_of(&[&[f.clone()], &[g.clone()]]);
    for m in standard_zoo() {
        let mm = m.as_ref();
        let differs = |v: &Assignment| {
            let x = eval(mm, v, f).expect("assignment is total");
            let y = eval(mm, v, g).expect("assignment is total");
            !mm.eq(&x, &y)
        };
        let mut found: Option<Assignment> = None;
        match mm.carrier() {
            Some(carrier)
                if carrier
                    .len()
                    .checked_pow(u32::try_from(atoms.len()).unwrap_or(u32::MAX))
                    .is_some_and(|t| t <= EXHAUSTIVE_ASSIGNMENT_CAP) =>
            {
                for_each_assignment(&atoms, &carrier, |v| {
                    if differs(v) {
                        found = Some(v.clone());
                        false
                    } else {
                        true
                    }
                });
            }
            _ => {
                let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(budget.seed, &mm.name()));
                for _ in 0..budget.samples {
                    let v = random_assignment(mm, &atoms, &mut rng);
                    if differs(&v) {
                        found = Some(v);
                        break;
                    }
                }
            }
        }
        if let Some(v) = found {
            let text = format!("{}: {}", mm.name(), v.describe(mm));
            return Some(CountermodelWitness {
                model: mm.name(),
                assignment: v,
                text,
            });
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Soundness harness
// ---------------------------------------------------------------------------

/// Budget for the rule-level soundness harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HarnessBudget {
    /// Required number of *effective* instantiations per rule — ones where
    /// every premise actually evaluates valid, so the rule's implication is
    /// exercised rather than vacuous.
    pub effective: usize,
    /// Cap on total attempts per rule while hunting effective ones.
    pub max_attempts: usize,
    /// RNG seed.
    pub seed: u64,
}

impl Default for HarnessBudget {
    fn default() -> Self {
        HarnessBudget {
            effective: 200,
            max_attempts: 200_000,
            seed: 0x50F_A11,
        }
    }
}

/// The ten primitive rule shapes the harness instantiates.
const HARNESS_RULES: &[&str] = &[
    "cut",
    "circ",
    "eweak",
    "mweak",
    "zero-axiom",
    "naxiom",
    "ll-and-intro",
    "ll-and-elim",
    "ml-and-intro",
    "ml-and-elim",
];

/// One random rule instantiation: the rule object plus its premise sequents,
/// built to fit the rule's structural shape.
struct Instance {
    rule: Rule,
    premises: Vec<Sequent>,
}

/// A random formula over the atom pool, depth-bounded.
fn random_formula(rng: &mut dyn RngCore, depth: usize) -> Formula {
    if depth == 0 {
        return match rng.gen_range(0..8) {
            0 => Formula::Zero,
            _ => Formula::atom(["a", "b", "c"][rng.gen_range(0..3)]),
        };
    }
    match rng.gen_range(0..8) {
        0 | 1 => random_formula(rng, depth - 1),
        2 | 3 => Formula::neg(random_formula(rng, depth - 1)),
        _ => Formula::and(
            random_formula(rng, depth - 1),
            random_formula(rng, depth - 1),
        ),
    }
}

/// A formula that evaluates to `0` under every assignment: `0`, `z & ~z`, or
/// `(z & w) & ~w`. Seeding contexts with these is what makes whole premises
/// valid often enough to collect effective instantiations.
fn contradiction_formula(rng: &mut dyn RngCore) -> Formula {
    let z = random_formula(rng, 1);
    match rng.gen_range(0..3) {
        0 => Formula::Zero,
        1 => Formula::and(z.clone(), Formula::neg(z)),
        _ => {
            let w = random_formula(rng, 1);
            Formula::and(Formula::and(z, w.clone()), Formula::neg(w))
        }
    }
}

/// A random context of 0–2 formulas; with probability ~1/2 the first formula
/// is a guaranteed contradiction, which makes any sequent extending the
/// context valid and keeps the effective-instantiation rate high.
fn random_context(rng: &mut dyn RngCore) -> Vec<Formula> {
    let n = rng.gen_range(0..=2);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        if i == 0 && rng.gen_bool(0.5) {
            out.push(contradiction_formula(rng));
        } else {
            out.push(random_formula(rng, 2));
        }
    }
    out
}

fn random_instance(rule_id: &str, rng: &mut dyn RngCore) -> Instance {
    let alpha = random_formula(rng, 2);
    match rule_id {
        "cut" => {
            let gamma = random_context(rng);
            let delta = random_context(rng);
            let mut p1 = gamma.clone();
            p1.push(alpha.clone());
            p1.extend(delta.iter().cloned());
            let mut p2 = gamma.clone();
            p2.push(Formula::neg(alpha.clone()));
            p2.extend(delta.iter().cloned());
            Instance {
                rule: Rule::Cut {
                    position: gamma.len(),
                    formula: alpha,
                },
                premises: vec![Sequent(p1), Sequent(p2)],
            }
        }
        "circ" => {
            let mut ctx = vec![alpha];
            // Exactly three formulas; reuse the contradiction bias on slot 0.
            ctx[0] = if rng.gen_bool(0.5) {
                contradiction_formula(rng)
            } else {
                random_formula(rng, 2)
            };
            ctx.push(random_formula(rng, 2));
            ctx.push(random_formula(rng, 2));
            Instance {
                rule: Rule::Circ,
                premises: vec![Sequent(ctx)],
            }
        }
        "eweak" => {
            let mut sigma = random_context(rng);
            if sigma.is_empty() {
                sigma.push(contradiction_formula(rng));
            }
            Instance {
                rule: Rule::EWeak {
                    before: random_context(rng),
                    after: random_context(rng),
                },
                premises: vec![Sequent(sigma)],
            }
        }
        "mweak" | "ml-and-intro" | "ml-and-elim" => {
            let gamma = random_context(rng);
            let delta = random_context(rng);
            let mut side = gamma.clone();
            side.push(Formula::neg(alpha.clone()));
            let beta = random_formula(rng, 2);
            let (rule, mut main) = match rule_id {
                "mweak" => (
                    Rule::MWeak {
                        position: gamma.len(),
                        formula: alpha.clone(),
                    },
                    gamma.clone(),
                ),
                "ml-and-intro" => {
                    let mut main = gamma.clone();
                    main.push(beta.clone());
                    (
                        Rule::MLAndIntro {
                            position: gamma.len(),
                            formula: alpha.clone(),
                        },
                        main,
                    )
                }
                _ => {
                    let mut main = gamma.clone();
                    main.push(Formula::and(alpha.clone(), beta.clone()));
                    (
                        Rule::MLAndElim {
                            position: gamma.len(),
                        },
                        main,
                    )
                }
            };
            main.extend(delta.iter().cloned());
            Instance {
                rule,
                premises: vec![Sequent(main), Sequent(side)],
            }
        }
        "zero-axiom" => Instance {
            rule: Rule::ZeroAxiom,
            premises: vec![],
        },
        "naxiom" => Instance {
            rule: Rule::NAxiom { formula: alpha },
            premises: vec![],
        },
        "ll-and-intro" => {
            let mut p = vec![alpha, random_formula(rng, 2)];
            p.extend(random_context(rng));
            if rng.gen_bool(0.5) {
                p[0] = contradiction_formula(rng);
            }
            Instance {
                rule: Rule::LLAndIntro,
                premises: vec![Sequent(p)],
            }
        }
        "ll-and-elim" => {
            let head = Formula::and(alpha, random_formula(rng, 2));
            let mut p = vec![head];
            p.extend(random_context(rng));
            Instance {
                rule: Rule::LLAndElim,
                premises: vec![Sequent(p)],
            }
        }
        other => unreachable!("unknown harness rule `{other}`"),
    }
}

/// The harness model pool: the smallest non-commutative finite model plus an
/// infinite exact one. Weighted toward the cheap finite model.
fn harness_models() -> Vec<Box<dyn PAlgebra>> {
    vec![
        crate::model::model_by_name("mo:2", Default::default()).expect("registry"),
        crate::model::model_by_name("subspace:dim=3", Default::default()).expect("registry"),
    ]
}

/// Evaluate one rule instantiation under a random assignment; returns
/// `Some(conclusion_valid)` when every premise is valid (an effective trial),
/// `None` otherwise.
fn effective_trial(
    m: &dyn PAlgebra,
    instance: &Instance,
    rng: &mut dyn RngCore,
) -> Option<(Assignment, bool)> {
    let premise_refs: Vec<&Sequent> = instance.premises.iter().collect();
    let conclusion = instance
        .rule
        .apply(&premise_refs)
        .expect("generated instance fits the rule shape");
    let mut formulas: Vec<Formula> = Vec::new();
    for p in &instance.premises {
        formulas.extend(p.0.iter().cloned());
    }
    formulas.extend(conclusion.0.iter().cloned());
    let atoms = atoms_of(&[&formulas]);
    let v = random_assignment(m, &atoms, rng);
    for p in &instance.premises {
        if !kernel_sequent_valid(m, &v, p).expect("assignment is total") {
            return None;
        }
    }
    let ok = kernel_sequent_valid(m, &v, &conclusion).expect("assignment is total");
    Some((v, ok))
}

/// Run the rule-level soundness harness: for every primitive rule, generate
/// random instantiations over the harness models until `budget.effective`
/// of them have all premises valid, asserting the conclusion is valid each
/// time. Two extra reports cover the exhaustive rotation check on the
/// six-element non-commutative model and the negative control that drops the
/// main-weakening side premise (which *must* be caught as unsound).
pub fn soundness_harness(budget: &HarnessBudget) -> Vec<LawReport> {
    let models = harness_models();
    let mut reports: Vec<LawReport> = Vec::new();

    for &rule_id in HARNESS_RULES {
        let id = format!("sound:{rule_id}");
        let seed = mix_seed(budget.seed, &id);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut effective = 0;
        let mut attempts = 0;
        let mut failure: Option<String> = None;
        while effective < budget.effective && attempts < budget.max_attempts {
            attempts += 1;
            // Weight the cheap finite model 3:1 over the subspace model.
            let m = if rng.gen_range(0..4) < 3 {
                models[0].as_ref()
            } else {
                models[1].as_ref()
            };
            let instance = random_instance(rule_id, &mut rng);
            if let Some((v, conclusion_valid)) = effective_trial(m, &instance, &mut rng) {
                effective += 1;
                if !conclusion_valid {
                    failure = Some(format!(
                        "{} under {} with {}",
                        instance
                            .premises
                            .iter()
                            .map(|p| p.to_string())
                            .collect::<Vec<_>>()
                            .join(" and "),
                        m.name(),
                        v.describe(m)
                    ));
                    break;
                }
            }
        }
        let status = match failure {
            Some(witness) => LawStatus::Fail {
                witness: vec![witness],
            },
            None if effective < budget.effective => LawStatus::Skipped {
                reason: format!(
                    "only {effective}/{} effective instantiations in {attempts} attempts",
                    budget.effective
                ),
            },
            None => LawStatus::Pass,
        };
        reports.push(LawReport {
            id,
            status,
            trials: effective,
            seed,
        });
    }

    reports.push(circ_exhaustive_report(budget));
    reports.push(mweak_negative_control(budget));
    reports
}

/// Exhaustive rotation soundness on the six-element non-commutative model:
/// for all feature triples (x, y, z), `(x·y)·z = 0` iff `(z·y)·x = 0`.
fn circ_exhaustive_report(budget: &HarnessBudget) -> LawReport {
    let id = "sound:circ-exhaustive-mo2".to_string();
    let m = crate::model::model_by_name("mo:2", Default::default()).expect("registry");
    let m = m.as_ref();
    let carrier = m.carrier().expect("finite");
    let zero = m.zero();
    let mut trials = 0;
    let mut witness = None;
    'outer: for x in &carrier {
        for y in &carrier {
            for z in &carrier {
                trials += 1;
                let fwd = m.eq(&m.dot(&m.dot(x, y), z), &zero);
                let bwd = m.eq(&m.dot(&m.dot(z, y), x), &zero);
                if fwd != bwd {
                    witness = Some(vec![m.describe(x), m.describe(y), m.describe(z)]);
                    break 'outer;
                }
            }
        }
    }
    LawReport {
        id: id.clone(),
        status: match witness {
            Some(w) => LawStatus::Fail { witness: w },
            None => LawStatus::Pass,
        },
        trials,
        seed: mix_seed(budget.seed, &id),
    }
}

/// Negative control: main weakening *without* its side premise is unsound,
/// and the harness must be able to catch that. The control searches for an
/// instantiation whose main premise is valid but whose weakened conclusion
/// is not; the pinned six-element witness is `a, a' ⊢` valid while
/// `a, b, a' ⊢` is not. "Pass" means the violation was found.
fn mweak_negative_control(budget: &HarnessBudget) -> LawReport {
    let id = "control:mweak-without-side".to_string();
    let seed = mix_seed(budget.seed, &id);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let models = harness_models();
    let mut trials = 0;
    while trials < budget.max_attempts {
        trials += 1;
        let m = if rng.gen_range(0..4) < 3 {
            models[0].as_ref()
        } else {
            models[1].as_ref()
        };
        let gamma = random_context(&mut rng);
        let delta = random_context(&mut rng);
        let alpha = random_formula(&mut rng, 2);
        let mut main = gamma.clone();
        main.extend(delta.iter().cloned());
        let mut conclusion = gamma.clone();
        conclusion.push(alpha);
        conclusion.extend(delta.iter().cloned());
        let main = Sequent(main);
        let conclusion = Sequent(conclusion);
        let atoms = atoms_of(&[&main.0, &conclusion.0]);
        let v = random_assignment(m, &atoms, &mut rng);
        let premise_ok = kernel_sequent_valid(m, &v, &main).expect("total");
        let conclusion_ok = kernel_sequent_valid(m, &v, &conclusion).expect("total");
        if premise_ok && !conclusion_ok {
            return LawReport {
                id,
                status: LawStatus::Pass,
                trials,
                seed,
            };
        }
    }
    LawReport {
        id,
        status: LawStatus::Fail {
            witness: vec![
                "no violating instantiation found — the control lost its teeth".to_string(),
            ],
        },
        trials,
        seed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_formula, parse_sequent};
    use crate::kernel::corpus::corpus;
    use crate::model::{model_by_name, plus, ModelOptions};
    use crate::sequent::jump_normalize;
    use crate::subspace::span_i64;

    fn model(spec: &str) -> Box<dyn PAlgebra> {
        model_by_name(spec, ModelOptions::default()).unwrap()
    }

    fn f(src: &str) -> Formula {
        parse_formula(src).unwrap()
    }

    fn surface(src: &str) -> SurfaceSequent {
        parse_sequent(src).unwrap()
    }

    /// All assignments of `m`'s carrier to the given atoms.
    fn all_assignments(m: &dyn PAlgebra, atoms: &[&str]) -> Vec<Assignment> {
        let carrier = m.carrier().expect("finite model");
        let names: Vec<String> = atoms.iter().map(|s| s.to_string()).collect();
        let mut out = Vec::new();
        for_each_assignment(&names, &carrier, |v| {
            out.push(v.clone());
            true
        });
        out
    }

    #[test]
    fn eval_is_structural() {
        let m = model("mo:2");
        let m = m.as_ref();
        for v in all_assignments(m, &["a", "b"]) {
            let a = v.get("a").unwrap().clone();
            let b = v.get("b").unwrap().clone();
            // A formula and its complementary conjunction.
            let contradiction = eval(m, &v, &f("a & ~a")).unwrap();
            assert!(m.eq(&contradiction, &m.zero()));
            // Double negation is the identity on features.
            let dn = eval(m, &v, &f("~~a")).unwrap();
            assert!(m.eq(&dn, &a));
            // The derived disjunction evaluates to the derived sum.
            let or = eval(m, &v, &Formula::or(f("a"), f("b"))).unwrap();
            assert!(m.eq(&or, &plus(m, &a, &b)));
        }
    }

    #[test]
    fn eval_reports_unbound_atoms() {
        let m = model("bool2");
        let v = Assignment::new();
        let err = eval(m.as_ref(), &v, &f("a & 0")).unwrap_err();
        assert_eq!(err.atom, "a");
    }

    #[test]
    fn two_sided_validity_uses_the_folds() {
        for m in standard_zoo() {
            let m = m.as_ref();
            let idempotent = surface("a |- a, a");
            let excluded_middle = surface("|- a | ~a");
            match m.carrier() {
                Some(_) => {
                    for v in all_assignments(m, &["a"]) {
                        assert!(sequent_valid(m, &v, &idempotent).unwrap(), "{}", m.name());
                        assert!(
                            sequent_valid(m, &v, &excluded_middle).unwrap(),
                            "{}",
                            m.name()
                        );
                    }
                }
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(11);
                    for _ in 0..40 {
                        let v = random_assignment(m, &["a".to_string()], &mut rng);
                        assert!(sequent_valid(m, &v, &idempotent).unwrap(), "{}", m.name());
                        assert!(
                            sequent_valid(m, &v, &excluded_middle).unwrap(),
                            "{}",
                            m.name()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn pinned_plane_countermodel_for_double_projection() {
        // v(a) the x-axis, v(b) the diagonal: ((a·b)·a') is the y-axis, not 0.
        let m = model("subspace:dim=2");
        let m = m.as_ref();
        let v = Assignment::new()
            .bind("a", Feature::Space(span_i64(2, &[&[1, 0]])))
            .bind("b", Feature::Space(span_i64(2, &[&[1, 1]])));
        let s = surface("a, b, ~a |-");
        assert!(!sequent_valid(m, &v, &s).unwrap());
        let value = eval(m, &v, &phi_fold(&s.lhs)).unwrap();
        assert!(m.eq(&value, &Feature::Space(span_i64(2, &[&[0, 1]]))));
    }

    #[test]
    fn validity_check_is_exhaustive_on_finite_models() {
        let m = model("mo:2");
        let budget = ValidityBudget::default();
        match validity_check(m.as_ref(), &surface("a, ~a |-"), &budget).unwrap() {
            Validity::Valid { assignments } => assert_eq!(assignments, 6),
            other => panic!("expected Valid, got {other:?}"),
        }
        match validity_check(m.as_ref(), &surface("a, b, ~a |-"), &budget).unwrap() {
            Validity::Countermodel(v) => {
                assert!(!sequent_valid(m.as_ref(), &v, &surface("a, b, ~a |-")).unwrap());
            }
            other => panic!("expected Countermodel, got {other:?}"),
        }
    }

    #[test]
    fn validity_check_never_says_valid_for_subspaces() {
        let m = model("subspace:dim=2");
        let budget = ValidityBudget {
            samples: 100,
            ..Default::default()
        };
        match validity_check(m.as_ref(), &surface("a, ~a |-"), &budget).unwrap() {
            Validity::Exhausted { samples } => assert_eq!(samples, 100),
            other => panic!("expected Exhausted, got {other:?}"),
        }
        // The classical-but-not-quantum sequent is refuted within the budget.
        match validity_check(m.as_ref(), &surface("a, b, ~a |-"), &budget).unwrap() {
            Validity::Countermodel(_) => {}
            other => panic!("expected Countermodel, got {other:?}"),
        }
    }

    #[test]
    fn exhaustive_cap_is_a_hard_error() {
        let m = model("mo:3"); // 8 elements; 8 atoms → 8^8 ≫ cap
        let s = surface("a1, a2, a3, a4, a5, a6, a7, a8 |-");
        let err = validity_check(m.as_ref(), &s, &ValidityBudget::default()).unwrap_err();
        assert!(matches!(err, ValidityError::CapExceeded { atoms: 8, .. }));
        // The explicit sampled mode still works.
        match validity_sample(m.as_ref(), &s, &ValidityBudget::default()) {
            Validity::Countermodel(_) | Validity::Exhausted { .. } => {}
            Validity::Valid { .. } => panic!("sampled mode must never say Valid"),
        }
    }

    #[test]
    fn countermodel_search_returns_the_smallest_zoo_witness() {
        let budget = ValidityBudget::default();
        // Valid sequents have no witness anywhere in the zoo.
        assert!(countermodel_search(&surface("a, ~a |-"), &budget).is_none());
        // The double-projection sequent is classical (Boolean models satisfy
        // it) but fails already in the six-element model — which comes before
        // the plane in registry order.
        let w = countermodel_search(&surface("a, b, ~a |-"), &budget).unwrap();
        assert_eq!(w.model, "mo:2");
        // Non-commutativity witness, with the pinned assignment.
        let w = countermodel_search(&surface("a & b, ~(b & a) |-"), &budget).unwrap();
        assert_eq!(w.model, "mo:2");
        let m = model("mo:2");
        assert_eq!(w.assignment.describe(m.as_ref()), "a=a, b=b");
        // The plane also refutes double projection (the zoo just finds the
        // finite witness first).
        let plane = model("subspace:dim=2");
        match validity_sample(plane.as_ref(), &surface("a, b, ~a |-"), &budget) {
            Validity::Countermodel(_) => {}
            other => panic!("expected a plane countermodel, got {other:?}"),
        }
    }

    #[test]
    fn separation_is_refutation_only() {
        let budget = ValidityBudget::default();
        // Non-commutativity separates the two conjunction orders.
        let w = separate_formulas(&f("a & b"), &f("b & a"), &budget).unwrap();
        assert_eq!(w.model, "mo:2");
        // Double negation is never separated — and the docs insist this is
        // not a proof of equivalence; the proof lives in the kernel corpus.
        assert!(separate_formulas(&f("a"), &f("~~a"), &budget).is_none());
    }

    #[test]
    fn jump_normalization_preserves_validity() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xA5);
        let m = model("mo:2");
        let m = m.as_ref();
        let carrier = m.carrier().unwrap();
        for _ in 0..60 {
            let lhs: Vec<Formula> = (0..rng.gen_range(0..3))
                .map(|_| random_formula(&mut rng, 2))
                .collect();
            let rhs: Vec<Formula> = (0..rng.gen_range(0..3))
                .map(|_| random_formula(&mut rng, 2))
                .collect();
            let s = SurfaceSequent {
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            };
            let jumped = jump_normalize(&s);
            let atoms = atoms_of(&[&s.lhs, &s.rhs]);
            let (_, _) = for_each_assignment(&atoms, &carrier, |v| {
                let direct = sequent_valid(m, v, &s).unwrap();
                let via_jump = kernel_sequent_valid(m, v, &jumped).unwrap();
                assert_eq!(direct, via_jump, "jump changed validity of {s:?} under {}", v.describe(m));
                true
            });
        }
    }

    #[test]
    fn phi_psi_split_matches_validity() {
        // For any split of a one-sided sequent into Γ ++ Δ, validity equals
        // φ(Γ) ≤ ψ(Δ) — the fold identity behind the jump operator.
        use crate::sequent::psi_fold;
        let mut rng = ChaCha8Rng::seed_from_u64(0xE5);
        for spec in ["mo:1", "mo:2"] {
            let m = model(spec);
            let m = m.as_ref();
            let carrier = m.carrier().unwrap();
            for _ in 0..40 {
                let whole: Vec<Formula> = (0..rng.gen_range(0..4))
                    .map(|_| random_formula(&mut rng, 2))
                    .collect();
                let split = rng.gen_range(0..=whole.len());
                let (gamma, delta) = whole.split_at(split);
                let seq = Sequent(whole.clone());
                let atoms = atoms_of(&[&whole]);
                for_each_assignment(&atoms, &carrier, |v| {
                    let valid = kernel_sequent_valid(m, v, &seq).unwrap();
                    let phi = eval(m, v, &phi_fold(gamma)).unwrap();
                    let psi = eval(m, v, &psi_fold(delta)).unwrap();
                    assert_eq!(
                        valid,
                        leq(m, &phi, &psi),
                        "split {split} of {seq} under {}",
                        v.describe(m)
                    );
                    true
                });
            }
        }
    }

    #[test]
    fn corpus_goals_have_no_countermodel() {
        let budget = ValidityBudget {
            samples: 60,
            ..Default::default()
        };
        for entry in corpus() {
            let s = SurfaceSequent {
                lhs: entry.script.goal.0.clone(),
                rhs: vec![],
            };
            assert!(
                countermodel_search(&s, &budget).is_none(),
                "corpus goal `{}` was refuted",
                entry.name
            );
        }
    }

    #[test]
    fn soundness_harness_all_green() {
        let reports = soundness_harness(&HarnessBudget {
            effective: 60,
            max_attempts: 60_000,
            seed: 0x50F_A11,
        });
        assert_eq!(reports.len(), HARNESS_RULES.len() + 2);
        for r in &reports {
            assert!(
                matches!(r.status, LawStatus::Pass),
                "harness report not green: {}",
                r.line()
            );
        }
        // The exhaustive rotation check visited every triple of the
        // six-element carrier.
        let circ = reports
            .iter()
            .find(|r| r.id == "sound:circ-exhaustive-mo2")
            .unwrap();
        assert_eq!(circ.trials, 216);
    }

    #[test]
    fn mweak_side_condition_is_load_bearing() {
        // Pinned witness: a, a' ⊢ is valid in the six-element model, but
        // inserting b without the side premise gives a, b, a' ⊢ — invalid.
        let m = model("mo:2");
        let m = m.as_ref();
        let carrier = m.carrier().unwrap();
        let line_a = carrier[2].clone();
        let line_b = carrier[4].clone();
        let v = Assignment::new().bind("a", line_a).bind("b", line_b);
        assert!(kernel_sequent_valid(m, &v, &Sequent(vec![f("a"), f("~a")])).unwrap());
        assert!(!kernel_sequent_valid(m, &v, &Sequent(vec![f("a"), f("b"), f("~a")])).unwrap());
    }

    #[test]
    fn sampled_verdicts_are_deterministic() {
        let m = model("subspace:dim=3");
        let s = surface("a & b, ~(b & a) |-");
        let budget = ValidityBudget {
            samples: 50,
            seed: 99,
        };
        let first = validity_sample(m.as_ref(), &s, &budget);
        let second = validity_sample(m.as_ref(), &s, &budget);
        assert_eq!(first, second);
    }
}
