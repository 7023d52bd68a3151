//! The verification harness: every defining condition and derived identity of
//! the algebra, runnable against any model with pass/fail/skip reports and
//! concrete witnesses.
//!
//! Laws are *data* ([`Law`]: id, suite, hypothesis, predicate), so the
//! registry is introspectable — the CLI lists and runs subsets, and the
//! registry-completeness test counts it. Conditional laws draw their tuples
//! from **constructive** hypothesis samplers (e.g. an `x ≤ y` pair is built as
//! `x := s·y`, which satisfies the order by `x·y ≤ y` + idempotence) rather
//! than rejection sampling, which would starve on measure-zero hypotheses in
//! the subspace models. On finite carriers small hypothesis spaces are swept
//! exhaustively instead.
//!
//! Failing reports are self-certifying: the runner re-evaluates the predicate
//! on the witness tuple before emitting the failure.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::model::{
    atoms_below, bot, chain_increments, cset_boolean_check, gram_schmidt_witness, leq,
    lub_of_chain, one, orthogonal_decomposition, plus, random_subset_sum, smile, sum_of_family,
    Feature, PAlgebra,
};

/// Exhaustive sweeps are used whenever the full hypothesis space has at most
/// this many tuples; larger spaces fall back to seeded sampling.
pub const FINITE_EXHAUSTIVE_CAP: usize = 200_000;

/// How many sampling attempts a constructive generator gets per requested
/// tuple before the law is reported as skipped.
const ATTEMPTS_PER_TUPLE: usize = 50;

/// Which part of the catalog a law belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    /// The seven defining conditions.
    Axioms,
    /// Derived identities of the core development (law ids `thm3.*`, `cor3.4`).
    Theorems,
    /// Commuting sets, chains, and atoms (law ids `a2.*`, `b2.*`, `c*`).
    Appendices,
}

/// Shape of the tuples a law quantifies over, together with the constructive
/// sampler used on non-enumerable models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    /// `k` unconstrained elements.
    Free(usize),
    /// `(x, y)` with `x ≤ y` — sampled as `y := sample`, `x := s·y`.
    LeqPair,
    /// `(x, y, z)` with `x ≤ y`, `z` free.
    LeqPairFree,
    /// `(x, y)` with `x ≤ y` and `x ≠ y`.
    StrictPair,
    /// `(x, y)` with `x·y = 0` — sampled as `x := sample`, `y := s·x'`
    /// (so `y ≤ x'`, hence `y ⊥ x`, hence `x ⊥ y`).
    BotPair,
    /// `(x, y, z)` with `x·y = 0` and `z ≤ y`.
    BotPairWithLower,
    /// `(x, y)` with `x ⌣ y` — sampled as two subset sums of one orthogonal
    /// decomposition of `1` (such sums commute pairwise).
    SmilePair,
    /// `(x, y, z)` with `x ⌣ y`, `z` free.
    SmilePairFree,
    /// `(x, y, z)` with `x ≤ z` and `y ≤ z` — sampled as `x := s₁·z`,
    /// `y := s₂·z`.
    CommonUpper,
    /// `(x, y, z)` with `z ≤ x` and `z ≤ y` — sampled as `x := z + s₁`,
    /// `y := z + s₂`.
    CommonLower,
    /// `(x, y, z)` with `x·y ≤ z` and `x·y' ≤ z` — sampled as
    /// `z := (x·y + x·y') + s`, which sits above both summands.
    SuperpositionTriple,
    /// `(x, y, z)` pairwise orthogonal — parts of one decomposition of `1`.
    OrthoTriple,
    /// `(a, x)` with `a` an atom.
    AtomAndElement,
    /// `(x, y, a)` with `a` an atom below `x`, `y` free.
    AtomBelowAndFree,
    /// `(x, y, a)` with `x ≤ y` and `a` an atom below `x`.
    LeqPairWithAtom,
    /// An ascending chain `x₀ ≤ x₁ ≤ … ` of the given length, sampled as
    /// `x_{i+1} := x_i + s_i`.
    AscendingChain(usize),
    /// The closure of an orthogonal decomposition of `1` under sums: a
    /// pairwise-commuting set containing `0` and closed under complement.
    CommutingSet(usize),
    /// The law talks about the model as a whole, not about tuples
    /// (commutative ⇒ associative and Boolean).
    WholeModel,
}

/// One law: identifier, where it lives, what it quantifies over, and the
/// predicate that must hold on every admissible tuple.
#[derive(Clone, Copy)]
pub struct Law {
    /// Stable identifier used in reports and on the CLI (e.g. `thm3.3.4`).
    pub id: &'static str,
    /// Suite the law belongs to.
    pub suite: Suite,
    /// Tuple shape / sampler.
    pub hypothesis: Hypothesis,
    /// Human-readable statement.
    pub description: &'static str,
    /// The checked property. Receives tuples of the hypothesis' shape.
    pub predicate: fn(&dyn PAlgebra, &[Feature]) -> bool,
}

impl std::fmt::Debug for Law {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Law")
            .field("id", &self.id)
            .field("suite", &self.suite)
            .field("hypothesis", &self.hypothesis)
            .finish()
    }
}

/// Outcome of running one law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LawStatus {
    /// Every examined tuple satisfied the predicate.
    Pass,
    /// A tuple violated the predicate; `witness` renders it in model terms.
    Fail {
        /// The offending tuple, described by the model.
        witness: Vec<String>,
    },
    /// The law could not be exercised (reason states why).
    Skipped {
        /// Why no verdict was reached.
        reason: String,
    },
}

/// Report for one law on one model. Serializable for the structured dump.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    /// Law identifier.
    pub id: String,
    /// Pass, fail-with-witness, or skipped-with-reason.
    pub status: LawStatus,
    /// Number of tuples examined.
    pub trials: usize,
    /// Seed this law's tuple stream was drawn from.
    pub seed: u64,
}

impl LawReport {
    /// One-line rendering: `id: pass (N tuples)` / `id: FAIL at (…)` / skip.
    pub fn line(&self) -> String {
        match &self.status {
            LawStatus::Pass => format!("{}: pass ({} tuples)", self.id, self.trials),
            LawStatus::Fail { witness } => {
                format!("{}: FAIL at ({})", self.id, witness.join(", "))
            }
            LawStatus::Skipped { reason } => format!("{}: skipped — {}", self.id, reason),
        }
    }
}

/// Report plus the raw witness features (for re-checking a failure without
/// re-parsing descriptions). The features are deliberately not serialized.
#[derive(Debug, Clone)]
pub struct LawOutcome {
    /// The serializable report.
    pub report: LawReport,
    /// The failing tuple, when status is `Fail`.
    pub witness: Option<Vec<Feature>>,
}

fn eqf(m: &dyn PAlgebra, x: &Feature, y: &Feature) -> bool {
    m.eq(x, y)
}

/// The full law catalog, in report order.
pub fn law_registry() -> Vec<Law> {
    use Hypothesis::*;
    use Suite::*;
    let mut laws: Vec<Law> = Vec::new();
    let mut law = |id, suite, hypothesis, description, predicate| {
        laws.push(Law {
            id,
            suite,
            hypothesis,
            description,
            predicate,
        })
    };

    // ---- The seven defining conditions. -----------------------------------
    law(
        "ax1",
        Axioms,
        Free(3),
        "≤ is a partial order (reflexive, antisymmetric, transitive)",
        |m, t| {
            let (x, y, z) = (&t[0], &t[1], &t[2]);
            leq(m, x, x)
                && (!(leq(m, x, y) && leq(m, y, x)) || eqf(m, x, y))
                && (!(leq(m, x, y) && leq(m, y, z)) || leq(m, x, z))
        },
    );
    law(
        "ax2",
        Axioms,
        Free(2),
        "⌣ is symmetric",
        |m, t| !smile(m, &t[0], &t[1]) || smile(m, &t[1], &t[0]),
    );
    law(
        "ax3a",
        Axioms,
        Free(3),
        "(x·y)·z = 0 iff (z·y)·x = 0",
        |m, t| {
            let (x, y, z) = (&t[0], &t[1], &t[2]);
            let zero = m.zero();
            eqf(m, &m.dot(&m.dot(x, y), z), &zero) == eqf(m, &m.dot(&m.dot(z, y), x), &zero)
        },
    );
    law(
        "ax3b",
        Axioms,
        LeqPairFree,
        "x ≤ y ⇒ (x·y)·z = x·(y·z)",
        |m, t| {
            let (x, y, z) = (&t[0], &t[1], &t[2]);
            eqf(m, &m.dot(&m.dot(x, y), z), &m.dot(x, &m.dot(y, z)))
        },
    );
    law(
        "ax3c",
        Axioms,
        LeqPairFree,
        "x ≤ y ⇒ (z·y)·x = z·(y·x)",
        |m, t| {
            let (x, y, z) = (&t[0], &t[1], &t[2]);
            eqf(m, &m.dot(&m.dot(z, y), x), &m.dot(z, &m.dot(y, x)))
        },
    );
    law(
        "ax4a",
        Axioms,
        LeqPairFree,
        "x ≤ y ⇒ x·z ≤ y·z",
        |m, t| leq(m, &m.dot(&t[0], &t[2]), &m.dot(&t[1], &t[2])),
    );
    law(
        "ax4b",
        Axioms,
        Free(2),
        "x·y ≤ y",
        |m, t| leq(m, &m.dot(&t[0], &t[1]), &t[1]),
    );
    law(
        "ax5",
        Axioms,
        Free(1),
        "0·x = 0",
        |m, t| eqf(m, &m.dot(&m.zero(), &t[0]), &m.zero()),
    );
    law(
        "ax6",
        Axioms,
        Free(1),
        "x·x' = 0",
        |m, t| eqf(m, &m.dot(&t[0], &m.comp(&t[0])), &m.zero()),
    );
    law(
        "ax7",
        Axioms,
        SuperpositionTriple,
        "x·y ≤ z and x·y' ≤ z ⇒ x ≤ z (superposition)",
        |m, t| leq(m, &t[0], &t[2]),
    );

    // ---- Core theorems. ---------------------------------------------------
    law(
        "thm3.3.1",
        Theorems,
        CommonLower,
        "z ≤ x and z ≤ y ⇒ z ≤ x·y",
        |m, t| leq(m, &t[2], &m.dot(&t[0], &t[1])),
    );
    law(
        "thm3.3.2",
        Theorems,
        Free(2),
        "x ⌣ y iff x·y is the g.l.b. of x and y",
        |m, t| {
            let is_glb = m
                .glb(&t[0], &t[1])
                .is_some_and(|g| eqf(m, &g, &m.dot(&t[0], &t[1])));
            smile(m, &t[0], &t[1]) == is_glb
        },
    );
    law(
        "thm3.3.3",
        Theorems,
        Free(2),
        "x ⌣ y iff x·y = y·x",
        |m, t| smile(m, &t[0], &t[1]) == eqf(m, &m.dot(&t[0], &t[1]), &m.dot(&t[1], &t[0])),
    );
    law(
        "thm3.3.4",
        Theorems,
        LeqPair,
        "x ≤ y ⇒ x ⌣ y",
        |m, t| smile(m, &t[0], &t[1]),
    );
    law(
        "thm3.3.5",
        Theorems,
        LeqPair,
        "x ≤ y ⇒ x·y = x = y·x",
        |m, t| {
            eqf(m, &m.dot(&t[0], &t[1]), &t[0]) && eqf(m, &m.dot(&t[1], &t[0]), &t[0])
        },
    );
    law(
        "thm3.3.6",
        Theorems,
        Free(3),
        "(x·y)·z ≤ y·z",
        |m, t| leq(m, &m.dot(&m.dot(&t[0], &t[1]), &t[2]), &m.dot(&t[1], &t[2])),
    );
    law(
        "thm3.3.7",
        Theorems,
        Free(1),
        "x·0 = 0",
        |m, t| eqf(m, &m.dot(&t[0], &m.zero()), &m.zero()),
    );
    law(
        "thm3.3.8",
        Theorems,
        BotPair,
        "⊥ is symmetric, and x'·x = 0",
        |m, t| {
            bot(m, &t[1], &t[0]) && eqf(m, &m.dot(&m.comp(&t[0]), &t[0]), &m.zero())
        },
    );
    law(
        "thm3.3.9",
        Theorems,
        BotPairWithLower,
        "x ⊥ y and z ≤ y ⇒ x ⊥ z",
        |m, t| bot(m, &t[0], &t[2]),
    );
    law(
        "thm3.3.10",
        Theorems,
        Free(2),
        "x ⊥ y iff x ≤ y'",
        |m, t| bot(m, &t[0], &t[1]) == leq(m, &t[0], &m.comp(&t[1])),
    );
    law(
        "cor3.4",
        Theorems,
        WholeModel,
        "a commutative model is associative and Boolean",
        |_, _| true, // handled by the whole-model runner
    );
    law(
        "thm3.5.1",
        Theorems,
        Free(1),
        "x'' = x",
        |m, t| eqf(m, &m.comp(&m.comp(&t[0])), &t[0]),
    );
    law(
        "thm3.5.2",
        Theorems,
        Free(2),
        "x ≤ y iff y' ≤ x'",
        |m, t| leq(m, &t[0], &t[1]) == leq(m, &m.comp(&t[1]), &m.comp(&t[0])),
    );
    law(
        "thm3.5.3",
        Theorems,
        Free(1),
        "x ≤ 1",
        |m, t| leq(m, &t[0], &one(m)),
    );
    law(
        "thm3.5.4",
        Theorems,
        SmilePair,
        "x ⌣ y ⇒ x' ⌣ y",
        |m, t| smile(m, &m.comp(&t[0]), &t[1]),
    );
    law(
        "thm3.7.1",
        Theorems,
        Free(1),
        "x + x' = x' + x = 1",
        |m, t| {
            let o = one(m);
            eqf(m, &plus(m, &t[0], &m.comp(&t[0])), &o)
                && eqf(m, &plus(m, &m.comp(&t[0]), &t[0]), &o)
        },
    );
    law(
        "thm3.7.2",
        Theorems,
        BotPair,
        "x·y = 0 and x + y = 1 ⇒ y = x'",
        |m, t| {
            !eqf(m, &plus(m, &t[0], &t[1]), &one(m)) || eqf(m, &t[1], &m.comp(&t[0]))
        },
    );
    law(
        "thm3.7.3",
        Theorems,
        Free(2),
        "x·y = (y' + x')'",
        |m, t| {
            eqf(
                m,
                &m.dot(&t[0], &t[1]),
                &m.comp(&plus(m, &m.comp(&t[1]), &m.comp(&t[0]))),
            )
        },
    );
    law(
        "thm3.7.4",
        Theorems,
        LeqPair,
        "x ≤ y ⇒ y = x + y = y + x",
        |m, t| {
            eqf(m, &plus(m, &t[0], &t[1]), &t[1]) && eqf(m, &plus(m, &t[1], &t[0]), &t[1])
        },
    );
    law(
        "thm3.7.5",
        Theorems,
        Free(2),
        "x ≤ x + y",
        |m, t| leq(m, &t[0], &plus(m, &t[0], &t[1])),
    );
    law(
        "thm3.7.6",
        Theorems,
        LeqPairFree,
        "x ≤ y ⇒ z + x ≤ z + y",
        |m, t| leq(m, &plus(m, &t[2], &t[0]), &plus(m, &t[2], &t[1])),
    );
    law(
        "thm3.7.7",
        Theorems,
        CommonUpper,
        "x ≤ z and y ≤ z ⇒ x + y ≤ z (and 0 + 0 = 0)",
        |m, t| {
            leq(m, &plus(m, &t[0], &t[1]), &t[2])
                && eqf(m, &plus(m, &m.zero(), &m.zero()), &m.zero())
        },
    );
    law(
        "thm3.7.8",
        Theorems,
        SmilePair,
        "x ⌣ y ⇒ x + y = l.u.b.(x, y)",
        |m, t| {
            m.lub(&t[0], &t[1])
                .is_some_and(|l| eqf(m, &l, &plus(m, &t[0], &t[1])))
        },
    );
    law(
        "thm3.8.1",
        Theorems,
        SmilePair,
        "x ⌣ y ⇒ x + y = y + x",
        |m, t| eqf(m, &plus(m, &t[0], &t[1]), &plus(m, &t[1], &t[0])),
    );
    law(
        "thm3.8.2",
        Theorems,
        SmilePair,
        "x ⌣ y ⇒ x + y is the l.u.b. of x and y",
        |m, t| {
            m.lub(&t[0], &t[1])
                .is_some_and(|l| eqf(m, &l, &plus(m, &t[0], &t[1])))
        },
    );
    law(
        "thm3.8.3",
        Theorems,
        SmilePairFree,
        "x ⌣ y ⇒ x·z + y·z ≤ (x + y)·z",
        |m, t| {
            leq(
                m,
                &plus(m, &m.dot(&t[0], &t[2]), &m.dot(&t[1], &t[2])),
                &m.dot(&plus(m, &t[0], &t[1]), &t[2]),
            )
        },
    );
    law(
        "thm3.8.4",
        Theorems,
        Free(2),
        "x ≤ x·y + x·y'",
        |m, t| {
            leq(
                m,
                &t[0],
                &plus(m, &m.dot(&t[0], &t[1]), &m.dot(&t[0], &m.comp(&t[1]))),
            )
        },
    );
    law(
        "thm3.8.5",
        Theorems,
        Free(2),
        "x·(x+y) = x = (x+y)·x, and x'·(x+y) = (x+y)·x'",
        |m, t| {
            let s = plus(m, &t[0], &t[1]);
            let xc = m.comp(&t[0]);
            eqf(m, &m.dot(&t[0], &s), &t[0])
                && eqf(m, &m.dot(&s, &t[0]), &t[0])
                && eqf(m, &m.dot(&xc, &s), &m.dot(&s, &xc))
        },
    );
    law(
        "thm3.8.6",
        Theorems,
        Free(3),
        "x ≤ y + z iff x·y' ≤ z",
        |m, t| {
            leq(m, &t[0], &plus(m, &t[1], &t[2]))
                == leq(m, &m.dot(&t[0], &m.comp(&t[1])), &t[2])
        },
    );
    law(
        "thm3.9",
        Theorems,
        LeqPair,
        "orthomodularity: x ≤ y ⇒ y = x + x'·y = x + y·x' = y·x' + x = x'·y + x",
        |m, t| {
            let (x, y) = (&t[0], &t[1]);
            let xc = m.comp(x);
            eqf(m, &plus(m, x, &m.dot(&xc, y)), y)
                && eqf(m, &plus(m, x, &m.dot(y, &xc)), y)
                && eqf(m, &plus(m, &m.dot(y, &xc), x), y)
                && eqf(m, &plus(m, &m.dot(&xc, y), x), y)
        },
    );

    // ---- Commuting sets, chains, atoms. -----------------------------------
    law(
        "a2.1",
        Appendices,
        OrthoTriple,
        "on orthogonal features, · is the g.l.b., + the l.u.b., and both are associative and commutative",
        |m, t| {
            let (x, y, z) = (&t[0], &t[1], &t[2]);
            m.glb(x, y).is_some_and(|g| eqf(m, &g, &m.dot(x, y)))
                && m.lub(x, y).is_some_and(|l| eqf(m, &l, &plus(m, x, y)))
                && eqf(m, &m.dot(x, y), &m.dot(y, x))
                && eqf(m, &plus(m, x, y), &plus(m, y, x))
                && eqf(m, &m.dot(&m.dot(x, y), z), &m.dot(x, &m.dot(y, z)))
                && eqf(m, &plus(m, &plus(m, x, y), z), &plus(m, x, &plus(m, y, z)))
        },
    );
    law(
        "a2.2",
        Appendices,
        CommutingSet(3),
        "a pairwise-commuting set containing 0 and closed under ' is a Boolean algebra",
        |m, t| cset_boolean_check(m, t).is_ok(),
    );
    law(
        "b2.chain",
        Appendices,
        AscendingChain(4),
        "chain increments y₀ = x₀, y_{i+1} = x_{i+1}·x_i' form an ortho-set rebuilding the chain: x_{i+1} = x_i + y_{i+1}, x_i = Σ y_k, and both l.u.b. routes agree",
        |m, t| {
            let Ok(parts) = chain_increments(m, t) else {
                return false;
            };
            for (i, p) in parts.iter().enumerate() {
                if !leq(m, p, &t[i]) {
                    return false;
                }
                for q in &parts[i + 1..] {
                    if !bot(m, p, q) {
                        return false;
                    }
                }
            }
            for i in 0..t.len() - 1 {
                if !eqf(m, &plus(m, &t[i], &parts[i + 1]), &t[i + 1]) {
                    return false;
                }
            }
            for i in 0..t.len() {
                if !eqf(m, &sum_of_family(m, &parts[..=i]), &t[i]) {
                    return false;
                }
            }
            lub_of_chain(m, t).is_ok_and(|l| eqf(m, &l.direct, &l.via_increments))
        },
    );
    law(
        "c2",
        Appendices,
        AtomAndElement,
        "for an atom a and any x: x ⊥ a or x·a = a",
        |m, t| bot(m, &t[1], &t[0]) || eqf(m, &m.dot(&t[1], &t[0]), &t[0]),
    );
    law(
        "c3.1",
        Appendices,
        LeqPairWithAtom,
        "x ≤ y ⇒ every atom below x is below y",
        |m, t| leq(m, &t[2], &t[1]),
    );
    law(
        "c3.2",
        Appendices,
        Free(0),
        "no atom sits below 0",
        |m, _| match atoms_below(m, &m.zero()) {
            Some(atoms) => atoms.is_empty(),
            None => m.pick_atom_below(&m.zero()).is_none() && !m.is_atom(&m.zero()),
        },
    );
    law(
        "c3.3",
        Appendices,
        AtomAndElement,
        "an atom is below x' exactly when it is orthogonal to x",
        |m, t| leq(m, &t[0], &m.comp(&t[1])) == bot(m, &t[0], &t[1]),
    );
    law(
        "c3.4",
        Appendices,
        AtomAndElement,
        "a = x·a + x'·a for every atom a",
        |m, t| {
            let (a, x) = (&t[0], &t[1]);
            eqf(m, a, &plus(m, &m.dot(x, a), &m.dot(&m.comp(x), a)))
        },
    );
    law(
        "c3.5",
        Appendices,
        AtomAndElement,
        "a not ⊥ x ⇒ a·x is an atom",
        |m, t| bot(m, &t[0], &t[1]) || m.is_atom(&m.dot(&t[0], &t[1])),
    );
    law(
        "c3.6",
        Appendices,
        AtomBelowAndFree,
        "a atom below x, a not ⊥ y ⇒ a·y is an atom below x·y",
        |m, t| {
            let (x, y, a) = (&t[0], &t[1], &t[2]);
            let ay = m.dot(a, y);
            bot(m, a, y) || (m.is_atom(&ay) && leq(m, &ay, &m.dot(x, y)))
        },
    );
    law(
        "c6",
        Appendices,
        StrictPair,
        "x strictly below y ⇒ some atom a ≤ y with a ⊥ x",
        |m, t| {
            gram_schmidt_witness(m, &t[0], &t[1]).is_ok_and(|a| {
                m.is_atom(&a) && leq(m, &a, &t[1]) && bot(m, &a, &t[0])
            })
        },
    );
    law(
        "c7",
        Appendices,
        Free(1),
        "an element has no atom below it exactly when it is 0 (atomicity)",
        |m, t| {
            m.pick_atom_below(&t[0]).is_none() == eqf(m, &t[0], &m.zero())
        },
    );
    laws
}

/// Look up a law by id.
pub fn law_by_id(id: &str) -> Option<Law> {
    law_registry().into_iter().find(|l| l.id == id)
}

pub(crate) fn mix_seed(seed: u64, id: &str) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for b in id.bytes() {
        h = (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3);
    }
    seed ^ h
}

/// All `k`-tuples over the carrier, or `None` when that exceeds the cap.
fn exhaustive_tuples(carrier: &[Feature], k: usize) -> Option<Vec<Vec<Feature>>> {
    let total = carrier.len().checked_pow(u32::try_from(k).ok()?)?;
    if total > FINITE_EXHAUSTIVE_CAP {
        return None;
    }
    let mut out = Vec::with_capacity(total);
    let mut idx = vec![0usize; k];
    // Row-major (last coordinate fastest), matching the nested-loop scan
    // order of the finite axiom checker so first witnesses line up.
    loop {
        out.push(idx.iter().map(|&i| carrier[i].clone()).collect());
        let mut d = k;
        loop {
            if d == 0 {
                return Some(out);
            }
            idx[d - 1] += 1;
            if idx[d - 1] < carrier.len() {
                break;
            }
            idx[d - 1] = 0;
            d -= 1;
        }
    }
}

/// One constructive sample of the hypothesis' tuple shape, or `None` when
/// this attempt produced nothing admissible.
fn sample_tuple(m: &dyn PAlgebra, hyp: Hypothesis, rng: &mut ChaCha8Rng) -> Option<Vec<Feature>> {
    use Hypothesis::*;
    match hyp {
        Free(k) => Some((0..k).map(|_| m.sample(rng)).collect()),
        LeqPair => {
            let y = m.sample(rng);
            let x = m.dot(&m.sample(rng), &y);
            Some(vec![x, y])
        }
        LeqPairFree => {
            let mut t = sample_tuple(m, LeqPair, rng)?;
            t.push(m.sample(rng));
            Some(t)
        }
        StrictPair => {
            let t = sample_tuple(m, LeqPair, rng)?;
            if m.eq(&t[0], &t[1]) {
                None
            } else {
                Some(t)
            }
        }
        BotPair => {
            let x = m.sample(rng);
            let y = m.dot(&m.sample(rng), &m.comp(&x));
            Some(vec![x, y])
        }
        BotPairWithLower => {
            let mut t = sample_tuple(m, BotPair, rng)?;
            let z = m.dot(&m.sample(rng), &t[1]);
            t.push(z);
            Some(t)
        }
        SmilePair => {
            let parts = orthogonal_decomposition(m, rng, 3);
            let u = random_subset_sum(m, &parts, rng);
            let v = random_subset_sum(m, &parts, rng);
            Some(vec![u, v])
        }
        SmilePairFree => {
            let mut t = sample_tuple(m, SmilePair, rng)?;
            t.push(m.sample(rng));
            Some(t)
        }
        CommonUpper => {
            let z = m.sample(rng);
            let x = m.dot(&m.sample(rng), &z);
            let y = m.dot(&m.sample(rng), &z);
            Some(vec![x, y, z])
        }
        CommonLower => {
            let z = m.sample(rng);
            let x = plus(m, &z, &m.sample(rng));
            let y = plus(m, &z, &m.sample(rng));
            Some(vec![x, y, z])
        }
        SuperpositionTriple => {
            let x = m.sample(rng);
            let y = m.sample(rng);
            let base = plus(m, &m.dot(&x, &y), &m.dot(&x, &m.comp(&y)));
            let z = plus(m, &base, &m.sample(rng));
            Some(vec![x, y, z])
        }
        OrthoTriple => {
            let mut parts = orthogonal_decomposition(m, rng, 3);
            while parts.len() < 3 {
                parts.push(m.zero());
            }
            parts.truncate(3);
            Some(parts)
        }
        AtomAndElement => {
            let a = m.sample_atom_below(&one(m), rng)?;
            Some(vec![a, m.sample(rng)])
        }
        AtomBelowAndFree => {
            let x = m.sample(rng);
            let a = m.sample_atom_below(&x, rng)?;
            Some(vec![x, m.sample(rng), a])
        }
        LeqPairWithAtom => {
            let t = sample_tuple(m, LeqPair, rng)?;
            let a = m.sample_atom_below(&t[0], rng)?;
            Some(vec![t[0].clone(), t[1].clone(), a])
        }
        AscendingChain(n) => {
            let mut chain = vec![m.sample(rng)];
            for _ in 1..n {
                let next = plus(m, chain.last().unwrap(), &m.sample(rng));
                chain.push(next);
            }
            Some(chain)
        }
        CommutingSet(parts) => {
            let base = orthogonal_decomposition(m, rng, parts);
            // Closure under sums: all subset sums. Complements come for free
            // (the complement of a subset sum is the sum of the complementary
            // subset), 0 is the empty sum.
            let mut set = Vec::new();
            for mask in 0u32..(1 << base.len()) {
                let chosen: Vec<Feature> = base
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, f)| f.clone())
                    .collect();
                let s = sum_of_family(m, &chosen);
                if !set.iter().any(|g| m.eq(g, &s)) {
                    set.push(s);
                }
            }
            Some(set)
        }
        WholeModel => Some(Vec::new()),
    }
}

/// The admissible-tuple stream for a law on a model: exhaustive on small
/// finite hypothesis spaces, constructively sampled otherwise.
fn generate_tuples(
    m: &dyn PAlgebra,
    hyp: Hypothesis,
    budget: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Vec<Feature>>, String> {
    use Hypothesis::*;
    if let Some(carrier) = m.carrier() {
        let atoms: Vec<Feature> = carrier.iter().filter(|f| m.is_atom(f)).cloned().collect();
        let filtered = |k: usize, keep: &dyn Fn(&[Feature]) -> bool| {
            exhaustive_tuples(&carrier, k)
                .map(|all| all.into_iter().filter(|t| keep(t)).collect::<Vec<_>>())
        };
        let exhaustive: Option<Vec<Vec<Feature>>> = match hyp {
            Free(k) => exhaustive_tuples(&carrier, k),
            LeqPair => filtered(2, &|t| leq(m, &t[0], &t[1])),
            LeqPairFree => filtered(3, &|t| leq(m, &t[0], &t[1])),
            StrictPair => filtered(2, &|t| leq(m, &t[0], &t[1]) && !m.eq(&t[0], &t[1])),
            BotPair => filtered(2, &|t| bot(m, &t[0], &t[1])),
            BotPairWithLower => filtered(3, &|t| bot(m, &t[0], &t[1]) && leq(m, &t[2], &t[1])),
            SmilePair => filtered(2, &|t| smile(m, &t[0], &t[1])),
            SmilePairFree => filtered(3, &|t| smile(m, &t[0], &t[1])),
            CommonUpper => filtered(3, &|t| leq(m, &t[0], &t[2]) && leq(m, &t[1], &t[2])),
            CommonLower => filtered(3, &|t| leq(m, &t[2], &t[0]) && leq(m, &t[2], &t[1])),
            SuperpositionTriple => filtered(3, &|t| {
                leq(m, &m.dot(&t[0], &t[1]), &t[2])
                    && leq(m, &m.dot(&t[0], &m.comp(&t[1])), &t[2])
            }),
            OrthoTriple => filtered(3, &|t| {
                bot(m, &t[0], &t[1]) && bot(m, &t[0], &t[2]) && bot(m, &t[1], &t[2])
            }),
            AtomAndElement => Some(
                atoms
                    .iter()
                    .flat_map(|a| carrier.iter().map(move |x| vec![a.clone(), x.clone()]))
                    .collect(),
            ),
            AtomBelowAndFree => Some(
                carrier
                    .iter()
                    .flat_map(|x| {
                        let atoms = &atoms;
                        carrier.iter().flat_map(move |y| {
                            atoms
                                .iter()
                                .filter(|a| leq(m, a, x))
                                .map(move |a| vec![x.clone(), y.clone(), a.clone()])
                        })
                    })
                    .collect(),
            ),
            LeqPairWithAtom => Some(
                carrier
                    .iter()
                    .flat_map(|x| {
                        let atoms = &atoms;
                        carrier
                            .iter()
                            .filter(|y| leq(m, x, y))
                            .flat_map(move |y| {
                                atoms
                                    .iter()
                                    .filter(|a| leq(m, a, x))
                                    .map(move |a| vec![x.clone(), y.clone(), a.clone()])
                            })
                    })
                    .collect(),
            ),
            AscendingChain(n) => exhaustive_tuples(&carrier, n).map(|all| {
                all.into_iter()
                    .filter(|t| (0..t.len() - 1).all(|i| leq(m, &t[i], &t[i + 1])))
                    .collect()
            }),
            CommutingSet(_) | WholeModel => None,
        };
        if let Some(tuples) = exhaustive {
            return if tuples.is_empty() {
                Err("no admissible tuples in the carrier".to_string())
            } else {
                Ok(tuples)
            };
        }
    }
    // Sampled path (non-enumerable carrier, or hypothesis space over the cap).
    let mut out = Vec::with_capacity(budget);
    let mut attempts = 0;
    while out.len() < budget && attempts < ATTEMPTS_PER_TUPLE * budget.max(1) {
        attempts += 1;
        if let Some(t) = sample_tuple(m, hyp, rng) {
            out.push(t);
        }
    }
    if out.is_empty() {
        Err(format!(
            "sampler produced no admissible tuple in {attempts} attempts"
        ))
    } else {
        Ok(out)
    }
}

/// The whole-model law: if the product is commutative, it must be associative
/// and the full carrier must pass the Boolean-algebra check.
fn whole_model_commutative_boolean(
    m: &dyn PAlgebra,
    budget: usize,
    rng: &mut ChaCha8Rng,
) -> (LawStatus, usize, Option<Vec<Feature>>) {
    match m.carrier() {
        Some(carrier) => {
            let commuting = carrier.iter().all(|x| {
                carrier
                    .iter()
                    .all(|y| m.eq(&m.dot(x, y), &m.dot(y, x)))
            });
            let trials = carrier.len() * carrier.len();
            if !commuting {
                // Premise refuted exhaustively: nothing to verify.
                return (LawStatus::Pass, trials, None);
            }
            for x in &carrier {
                for y in &carrier {
                    for z in &carrier {
                        if !m.eq(&m.dot(&m.dot(x, y), z), &m.dot(x, &m.dot(y, z))) {
                            let w = vec![x.clone(), y.clone(), z.clone()];
                            let witness = w.iter().map(|f| m.describe(f)).collect();
                            return (LawStatus::Fail { witness }, trials, Some(w));
                        }
                    }
                }
            }
            match cset_boolean_check(m, &carrier) {
                Ok(()) => (LawStatus::Pass, trials + carrier.len().pow(3), None),
                Err(e) => (
                    LawStatus::Fail {
                        witness: vec![e.to_string()],
                    },
                    trials,
                    None,
                ),
            }
        }
        None => {
            // Sampling can refute commutativity but never certify it.
            for i in 0..budget.max(1) {
                let x = m.sample(rng);
                let y = m.sample(rng);
                if !m.eq(&m.dot(&x, &y), &m.dot(&y, &x)) {
                    return (LawStatus::Pass, i + 1, None);
                }
            }
            (
                LawStatus::Skipped {
                    reason: "sampling found no non-commuting pair, and commutativity cannot be certified by sampling".to_string(),
                },
                budget,
                None,
            )
        }
    }
}

/// Run one law against one model. `budget` bounds sampled tuples (exhaustive
/// sweeps ignore it); the tuple stream is drawn from `seed` mixed with the
/// law id, so a suite run is deterministic per (model, budget, seed).
pub fn run_law(m: &dyn PAlgebra, law: &Law, budget: usize, seed: u64) -> LawOutcome {
    let law_seed = mix_seed(seed, law.id);
    let mut rng = ChaCha8Rng::seed_from_u64(law_seed);
    if law.hypothesis == Hypothesis::WholeModel {
        let (status, trials, witness) = whole_model_commutative_boolean(m, budget, &mut rng);
        return LawOutcome {
            report: LawReport {
                id: law.id.to_string(),
                status,
                trials,
                seed: law_seed,
            },
            witness,
        };
    }
    match generate_tuples(m, law.hypothesis, budget, &mut rng) {
        Err(reason) => LawOutcome {
            report: LawReport {
                id: law.id.to_string(),
                status: LawStatus::Skipped { reason },
                trials: 0,
                seed: law_seed,
            },
            witness: None,
        },
        Ok(tuples) => {
            let trials = tuples.len();
            for t in tuples {
                if !(law.predicate)(m, &t) {
                    // Self-certification: the witness must reproduce the
                    // failure on a second evaluation.
                    assert!(
                        !(law.predicate)(m, &t),
                        "law {} failed non-reproducibly",
                        law.id
                    );
                    let witness = t.iter().map(|f| m.describe(f)).collect();
                    return LawOutcome {
                        report: LawReport {
                            id: law.id.to_string(),
                            status: LawStatus::Fail { witness },
                            trials,
                            seed: law_seed,
                        },
                        witness: Some(t),
                    };
                }
            }
            LawOutcome {
                report: LawReport {
                    id: law.id.to_string(),
                    status: LawStatus::Pass,
                    trials,
                    seed: law_seed,
                },
                witness: None,
            }
        }
    }
}

/// Run every law of the given suite (or all suites) against a model, in
/// registry order. Laws run in parallel; each law's stream is seeded
/// independently, so the merged report is deterministic regardless of the
/// worker count.
pub fn run_suite(
    m: &(dyn PAlgebra + Sync),
    suite: Option<Suite>,
    budget: usize,
    seed: u64,
) -> Vec<LawReport> {
    law_registry()
        .into_par_iter()
        .filter(|l| suite.is_none_or(|s| l.suite == s))
        .map(|law| run_law(m, &law, budget, seed).report)
        .collect()
}

/// The seven defining conditions, reported separately (sub-items included).
pub fn check_axioms(m: &(dyn PAlgebra + Sync), budget: usize, seed: u64) -> Vec<LawReport> {
    run_suite(m, Some(Suite::Axioms), budget, seed)
}

/// Every numbered theorem item of the core development.
pub fn check_theorems(m: &(dyn PAlgebra + Sync), budget: usize, seed: u64) -> Vec<LawReport> {
    run_suite(m, Some(Suite::Theorems), budget, seed)
}

/// Commuting-set, chain, and atom laws.
pub fn check_appendices(m: &(dyn PAlgebra + Sync), budget: usize, seed: u64) -> Vec<LawReport> {
    run_suite(m, Some(Suite::Appendices), budget, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::FiniteAlgebra;
    use crate::model::SubspaceModel;

    /// Numbered items that must each appear exactly once in the registry.
    const REQUIRED_IDS: &[&str] = &[
        "thm3.3.1", "thm3.3.2", "thm3.3.3", "thm3.3.4", "thm3.3.5", "thm3.3.6", "thm3.3.7",
        "thm3.3.8", "thm3.3.9", "thm3.3.10", "cor3.4", "thm3.5.1", "thm3.5.2", "thm3.5.3",
        "thm3.5.4", "thm3.7.1", "thm3.7.2", "thm3.7.3", "thm3.7.4", "thm3.7.5", "thm3.7.6",
        "thm3.7.7", "thm3.7.8", "thm3.8.1", "thm3.8.2", "thm3.8.3", "thm3.8.4", "thm3.8.5",
        "thm3.8.6", "thm3.9", "a2.1", "a2.2", "c3.1", "c3.2", "c3.3", "c3.4", "c3.5", "c3.6",
        "c6", "c7",
    ];

    #[test]
    fn registry_contains_every_required_item_exactly_once() {
        let registry = law_registry();
        for id in REQUIRED_IDS {
            let n = registry.iter().filter(|l| l.id == *id).count();
            assert_eq!(n, 1, "law {id} appears {n} times");
        }
        // The seven conditions, with their sub-items, are present too.
        for id in ["ax1", "ax2", "ax3a", "ax3b", "ax3c", "ax4a", "ax4b", "ax5", "ax6", "ax7"] {
            assert_eq!(registry.iter().filter(|l| l.id == id).count(), 1);
        }
        // No duplicate ids anywhere.
        let mut ids: Vec<_> = registry.iter().map(|l| l.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), registry.len());
    }

    fn assert_all_pass(m: &(dyn PAlgebra + Sync), budget: usize) {
        for r in run_suite(m, None, budget, 0xA11CE) {
            assert!(
                matches!(r.status, LawStatus::Pass),
                "{} on {}: {}",
                r.id,
                m.name(),
                r.line()
            );
        }
    }

    #[test]
    fn finite_models_pass_every_law() {
        for k in 0..=2 {
            assert_all_pass(&FiniteAlgebra::mo_algebra(k), 40);
        }
        for a in crate::finite::enumerate_palgebras(4).unwrap() {
            assert_all_pass(&a, 40);
        }
    }

    #[test]
    fn subspace_model_passes_every_non_skipped_law() {
        let m = SubspaceModel::new(2);
        for r in run_suite(&m, None, 25, 7) {
            match r.status {
                LawStatus::Pass => {}
                LawStatus::Skipped { .. } => {}
                LawStatus::Fail { .. } => panic!("{}", r.line()),
            }
        }
    }

    #[test]
    fn hexagon_control_fails_superposition_and_orthomodularity() {
        let h = FiniteAlgebra::hexagon_control();
        let ax7 = run_law(&h, &law_by_id("ax7").unwrap(), 50, 1);
        let LawStatus::Fail { ref witness } = ax7.report.status else {
            panic!("ax7 unexpectedly {:?}", ax7.report.status);
        };
        assert_eq!(witness, &["a'", "b", "b'"]);
        // Self-certification: the raw witness still refutes the predicate.
        let law = law_by_id("ax7").unwrap();
        assert!(!(law.predicate)(&h, ax7.witness.as_ref().unwrap()));

        let om = run_law(&h, &law_by_id("thm3.9").unwrap(), 50, 1);
        assert!(
            matches!(om.report.status, LawStatus::Fail { .. }),
            "orthomodularity should fail on the hexagon: {}",
            om.report.line()
        );
    }

    #[test]
    fn suite_runs_are_deterministic() {
        let m = SubspaceModel::new(3);
        let a = run_suite(&m, Some(Suite::Theorems), 10, 99);
        let b = run_suite(&m, Some(Suite::Theorems), 10, 99);
        assert_eq!(a, b);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let c = pool.install(|| run_suite(&m, Some(Suite::Theorems), 10, 99));
        assert_eq!(a, c);
    }

    #[test]
    fn whole_model_law_is_honest_about_sampling() {
        // dim=1 subspaces are commutative, but sampling cannot certify that.
        let r = run_law(&SubspaceModel::new(1), &law_by_id("cor3.4").unwrap(), 30, 5);
        assert!(matches!(r.report.status, LawStatus::Skipped { .. }));
        // dim=2 finds a non-commuting pair, refuting the premise.
        let r = run_law(&SubspaceModel::new(2), &law_by_id("cor3.4").unwrap(), 30, 5);
        assert!(matches!(r.report.status, LawStatus::Pass));
    }
}
