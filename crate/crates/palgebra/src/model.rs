//! The algebra interface, its derived operations, and the model registry.
//!
//! A model is anything implementing [`PAlgebra`]: a carrier with a least
//! element `0`, a complement `'`, and a binary product `·` (here `dot`) that is
//! in general neither commutative nor associative. Everything else — the unit,
//! the order, orthogonality, compatibility, the sum — is *derived* from those
//! three and recomputed on demand rather than stored:
//!
//! * `1  = 0'`
//! * `x ≤ y   iff  x·y = x`
//! * `x ⊥ y   iff  x·y = 0`
//! * `x ⌣ y   iff  x·y ≤ x`   (compatibility, "smile")
//! * `x + y = (y'·x')'`       (note the operand swap)
//!
//! Backends are registered by name and selected at runtime from a model spec
//! string (`mo:2`, `subspace:dim=3`, `file:path`, …) via [`model_by_name`],
//! so every tool in the workbench runs against any backend uniformly.

use rand::{Rng, RngCore};

use crate::finite::FiniteAlgebra;
use crate::subspace::Subspace;

/// An element of some model's carrier.
///
/// Features are only meaningful relative to the model that produced them:
/// finite backends hand out carrier indices, the subspace backend hands out
/// subspaces.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Feature {
    /// Index into a finite carrier.
    Index(usize),
    /// An exact rational subspace.
    Space(Subspace),
}

/// A model of the algebra: carrier plus the three primitive operations.
///
/// Implementations must be deterministic and total on their own features.
/// Passing a feature from a different backend is a programming error and may
/// panic.
pub trait PAlgebra {
    /// Registry name of this model, e.g. `mo:2` or `subspace:dim=3`.
    fn name(&self) -> String;

    /// The least element.
    fn zero(&self) -> Feature;

    /// Complement `x'`.
    fn comp(&self, x: &Feature) -> Feature;

    /// Product `x·y`: "the part of x seen by y" (projection onto y).
    fn dot(&self, x: &Feature, y: &Feature) -> Feature;

    /// Feature equality within this model.
    fn eq(&self, x: &Feature, y: &Feature) -> bool;

    /// A seeded random carrier element.
    fn sample(&self, rng: &mut dyn RngCore) -> Feature;

    /// The whole carrier, if it is finite and enumerable.
    fn carrier(&self) -> Option<Vec<Feature>>;

    /// Greatest lower bound in the derived order, if one exists.
    fn glb(&self, x: &Feature, y: &Feature) -> Option<Feature>;

    /// Least upper bound in the derived order, if one exists.
    fn lub(&self, x: &Feature, y: &Feature) -> Option<Feature>;

    /// Is `x` an atom (minimal nonzero element)?
    fn is_atom(&self, x: &Feature) -> bool;

    /// Some atom `a ≤ x`, or `None` when `x = 0`.
    fn pick_atom_below(&self, x: &Feature) -> Option<Feature>;

    /// A random atom `a ≤ x`, or `None` when `x = 0`.
    fn sample_atom_below(&self, x: &Feature, rng: &mut dyn RngCore) -> Option<Feature>;

    /// Human-readable rendering of a feature (element name or span literal).
    fn describe(&self, x: &Feature) -> String;
}

/// The unit `1 = 0'`.
pub fn one(m: &dyn PAlgebra) -> Feature {
    m.comp(&m.zero())
}

/// The derived order: `x ≤ y iff x·y = x`.
pub fn leq(m: &dyn PAlgebra, x: &Feature, y: &Feature) -> bool {
    m.eq(&m.dot(x, y), x)
}

/// Orthogonality: `x ⊥ y iff x·y = 0`.
pub fn bot(m: &dyn PAlgebra, x: &Feature, y: &Feature) -> bool {
    m.eq(&m.dot(x, y), &m.zero())
}

/// Compatibility: `x ⌣ y iff x·y ≤ x`.
pub fn smile(m: &dyn PAlgebra, x: &Feature, y: &Feature) -> bool {
    leq(m, &m.dot(x, y), x)
}

/// The derived sum `x + y = (y'·x')'`.
pub fn plus(m: &dyn PAlgebra, x: &Feature, y: &Feature) -> Feature {
    m.comp(&m.dot(&m.comp(y), &m.comp(x)))
}

/// All atoms `a ≤ x`, when the carrier is enumerable.
pub fn atoms_below(m: &dyn PAlgebra, x: &Feature) -> Option<Vec<Feature>> {
    let carrier = m.carrier()?;
    Some(
        carrier
            .into_iter()
            .filter(|a| m.is_atom(a) && leq(m, a, x))
            .collect(),
    )
}

/// Errors from the chain operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChainError {
    /// The input was not ascending at the given link.
    #[error("chain is not ascending at index {index}: element {index} is not below element {next}", next = index + 1)]
    NotAscending {
        /// Index of the first offending link.
        index: usize,
    },
    /// The chain is empty.
    #[error("chain is empty")]
    Empty,
    /// No least upper bound exists in this (finite) model.
    #[error("no least upper bound exists in this model")]
    NoLeastUpperBound,
}

/// Decompose an ascending chain `x0 ≤ x1 ≤ …` into its orthogonal increments
/// `y0 = x0, y_{i+1} = x_{i+1}·x_i'`. The increments are pairwise orthogonal
/// and rebuild the chain by `x_{i+1} = x_i + y_{i+1}`.
pub fn chain_increments(m: &dyn PAlgebra, chain: &[Feature]) -> Result<Vec<Feature>, ChainError> {
    if chain.is_empty() {
        return Err(ChainError::Empty);
    }
    for i in 0..chain.len() - 1 {
        if !leq(m, &chain[i], &chain[i + 1]) {
            return Err(ChainError::NotAscending { index: i });
        }
    }
    let mut parts = vec![chain[0].clone()];
    for i in 0..chain.len() - 1 {
        parts.push(m.dot(&chain[i + 1], &m.comp(&chain[i])));
    }
    Ok(parts)
}

/// Left-iterated sum of a family (intended: pairwise orthogonal, where the sum
/// is associative and commutative).
pub fn sum_of_family(m: &dyn PAlgebra, parts: &[Feature]) -> Feature {
    match parts.split_first() {
        None => m.zero(),
        Some((first, rest)) => rest.iter().fold(first.clone(), |acc, p| plus(m, &acc, p)),
    }
}

/// Least upper bound of an ascending chain, computed two independent ways.
#[derive(Debug, Clone)]
pub struct ChainLub {
    /// From the order itself: least element above the whole chain
    /// (poset scan on finite carriers, span closure on subspaces).
    pub direct: Feature,
    /// From the orthogonal increments: iterated sum of [`chain_increments`].
    pub via_increments: Feature,
}

/// Compute the least upper bound of an ascending chain both directly and via
/// its orthogonal increments. The two routes are returned separately so a
/// caller (or test) can insist they agree.
pub fn lub_of_chain(m: &dyn PAlgebra, chain: &[Feature]) -> Result<ChainLub, ChainError> {
    let parts = chain_increments(m, chain)?; // also validates ascension
    let direct = match m.carrier() {
        Some(carrier) => {
            let uppers: Vec<Feature> = carrier
                .into_iter()
                .filter(|u| chain.iter().all(|x| leq(m, x, u)))
                .collect();
            uppers
                .iter()
                .find(|u| uppers.iter().all(|v| leq(m, u, v)))
                .cloned()
                .ok_or(ChainError::NoLeastUpperBound)?
        }
        None => {
            // Span closure: fold the binary lub. Backends without either a
            // carrier or binary lubs cannot answer; report honestly.
            let mut acc = chain[0].clone();
            for x in &chain[1..] {
                acc = m.lub(&acc, x).ok_or(ChainError::NoLeastUpperBound)?;
            }
            acc
        }
    };
    Ok(ChainLub {
        direct,
        via_increments: sum_of_family(m, &parts),
    })
}

/// Errors from [`gram_schmidt_witness`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    /// The pair was not strictly increasing.
    #[error("witness needs x strictly below y; got x = {x}, y = {y}")]
    NotStrictlyBelow {
        /// Description of the offending x.
        x: String,
        /// Description of the offending y.
        y: String,
    },
    /// The model found no atom inside `y·x'`.
    #[error("no atom found below the difference y·x'")]
    NoAtom,
}

/// For `x` strictly below `y`, produce an atom `a ≤ y` with `a ⊥ x`.
///
/// The difference `y·x'` is nonzero (else orthomodularity would force
/// `y = x`), any atom below it is below `y`, and being below `x'` makes it
/// orthogonal to `x`.
pub fn gram_schmidt_witness(
    m: &dyn PAlgebra,
    x: &Feature,
    y: &Feature,
) -> Result<Feature, WitnessError> {
    if !leq(m, x, y) || m.eq(x, y) {
        return Err(WitnessError::NotStrictlyBelow {
            x: m.describe(x),
            y: m.describe(y),
        });
    }
    let diff = m.dot(y, &m.comp(x));
    m.pick_atom_below(&diff).ok_or(WitnessError::NoAtom)
}

/// A failed Boolean-subalgebra check, with a description of the first
/// violation found.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("commuting-set check failed: {reason} (witness: {witness})")]
pub struct CSetViolation {
    /// Which requirement broke.
    pub reason: String,
    /// The offending elements, rendered by the model.
    pub witness: String,
}

/// Verify that a pairwise-compatible set containing `0` and closed under
/// complement is a Boolean algebra under the restricted `·` and `+`:
/// closure of both operations, commutativity, associativity, absorption,
/// distributivity, identity, and complement laws.
pub fn cset_boolean_check(m: &dyn PAlgebra, set: &[Feature]) -> Result<(), CSetViolation> {
    let fail = |reason: String, parts: &[&Feature]| {
        Err(CSetViolation {
            reason,
            witness: parts
                .iter()
                .map(|f| m.describe(f))
                .collect::<Vec<_>>()
                .join(", "),
        })
    };
    let member = |f: &Feature| set.iter().any(|g| m.eq(g, f));
    if !member(&m.zero()) {
        return fail("set does not contain 0".into(), &[]);
    }
    for x in set {
        if !member(&m.comp(x)) {
            return fail("set is not closed under complement".into(), &[x]);
        }
    }
    for x in set {
        for y in set {
            if !smile(m, x, y) {
                return fail("set is not pairwise compatible".into(), &[x, y]);
            }
            let d = m.dot(x, y);
            if !member(&d) {
                return fail("set is not closed under the product".into(), &[x, y]);
            }
            let s = plus(m, x, y);
            if !member(&s) {
                return fail("set is not closed under the sum".into(), &[x, y]);
            }
            if !m.eq(&d, &m.dot(y, x)) {
                return fail("product does not commute on the set".into(), &[x, y]);
            }
            if !m.eq(&s, &plus(m, y, x)) {
                return fail("sum does not commute on the set".into(), &[x, y]);
            }
            if !m.eq(&m.dot(x, &plus(m, x, y)), x) {
                return fail("absorption x·(x+y) = x fails".into(), &[x, y]);
            }
            if !m.eq(&plus(m, x, &m.dot(x, y)), x) {
                return fail("absorption x+(x·y) = x fails".into(), &[x, y]);
            }
        }
        if !m.eq(&m.dot(x, &one(m)), x) {
            return fail("x·1 = x fails".into(), &[x]);
        }
        if !m.eq(&plus(m, x, &m.zero()), x) {
            return fail("x+0 = x fails".into(), &[x]);
        }
        if !m.eq(&m.dot(x, &m.comp(x)), &m.zero()) {
            return fail("x·x' = 0 fails".into(), &[x]);
        }
        if !m.eq(&plus(m, x, &m.comp(x)), &one(m)) {
            return fail("x+x' = 1 fails".into(), &[x]);
        }
    }
    for x in set {
        for y in set {
            for z in set {
                if !m.eq(&m.dot(&m.dot(x, y), z), &m.dot(x, &m.dot(y, z))) {
                    return fail("product is not associative on the set".into(), &[x, y, z]);
                }
                if !m.eq(&plus(m, &plus(m, x, y), z), &plus(m, x, &plus(m, y, z))) {
                    return fail("sum is not associative on the set".into(), &[x, y, z]);
                }
                let lhs = m.dot(x, &plus(m, y, z));
                let rhs = plus(m, &m.dot(x, y), &m.dot(x, z));
                if !m.eq(&lhs, &rhs) {
                    return fail(
                        "product does not distribute over the sum".into(),
                        &[x, y, z],
                    );
                }
            }
        }
    }
    Ok(())
}

/// Refine `1` into a family of pairwise orthogonal parts summing to `1`, by
/// repeatedly splitting a part `p` into `q = s·p` and `p·q'` for random `s`.
/// Always returns at least one part; on a trivial model this is just `[1]`.
pub fn orthogonal_decomposition(
    m: &dyn PAlgebra,
    rng: &mut dyn RngCore,
    target_parts: usize,
) -> Vec<Feature> {
    let mut parts = vec![one(m)];
    let mut attempts = 0;
    while parts.len() < target_parts && attempts < 8 * target_parts {
        attempts += 1;
        let i = rng.gen_range(0..parts.len());
        let p = parts[i].clone();
        let s = m.sample(rng);
        let q = m.dot(&s, &p);
        if m.eq(&q, &m.zero()) || m.eq(&q, &p) {
            continue;
        }
        let r = m.dot(&p, &m.comp(&q));
        parts[i] = q;
        parts.push(r);
    }
    parts
}

/// Sums of a random subset of an orthogonal decomposition: such elements are
/// pairwise compatible with each other by construction.
pub fn random_subset_sum(m: &dyn PAlgebra, parts: &[Feature], rng: &mut dyn RngCore) -> Feature {
    let chosen: Vec<Feature> = parts
        .iter()
        .filter(|_| rng.gen_bool(0.5))
        .cloned()
        .collect();
    sum_of_family(m, &chosen)
}

/// Errors from parsing a model spec string.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelSpecError {
    /// The spec did not match any registered backend.
    #[error(
        "unknown model spec {spec:?}; expected bool2, mo:<k>, subspace:dim=<n>, or file:<path>"
    )]
    Unknown {
        /// The offending spec string.
        spec: String,
    },
    /// The spec matched a backend but its parameter was malformed.
    #[error("bad parameter in model spec {spec:?}: {msg}")]
    BadParameter {
        /// The offending spec string.
        spec: String,
        /// What was wrong.
        msg: String,
    },
    /// A `file:` model failed to load or validate.
    #[error("failed to load model from {path}: {msg}")]
    File {
        /// The path that was given.
        path: String,
        /// Load/validation error text.
        msg: String,
    },
}

/// Options for [`model_by_name`].
#[derive(Debug, Clone, Copy, Default)]
pub struct ModelOptions {
    /// Load `file:` models without checking the axioms (for deliberately
    /// broken tables used as negative controls). Structural validation
    /// (involution, index ranges) still applies.
    pub unchecked: bool,
}

/// The strategy registry: resolve a model spec string to a backend.
///
/// Recognized specs:
/// * `bool2` — the two-element Boolean algebra (alias of `mo:0`);
/// * `mo:<k>` — 0, 1, and `k` orthogonal pairs of "lines" (`mo:1` is the
///   four-element Boolean algebra; `mo:2` is the smallest non-commutative
///   model);
/// * `subspace:dim=<n>` — exact rational subspaces of Q^n, 1 ≤ n ≤ 8;
/// * `file:<path>` — a finite model loaded from a table file.
pub fn model_by_name(
    spec: &str,
    opts: ModelOptions,
) -> Result<Box<dyn PAlgebra + Send + Sync>, ModelSpecError> {
    let bad = |msg: String| ModelSpecError::BadParameter {
        spec: spec.to_string(),
        msg,
    };
    if spec == "bool2" {
        return Ok(Box::new(FiniteAlgebra::mo_algebra(0)));
    }
    if let Some(k) = spec.strip_prefix("mo:") {
        let k: usize = k.parse().map_err(|e| bad(format!("{e}")))?;
        if k > 64 {
            return Err(bad("mo:<k> supports k up to 64".into()));
        }
        return Ok(Box::new(FiniteAlgebra::mo_algebra(k)));
    }
    if let Some(rest) = spec.strip_prefix("subspace:") {
        let n = rest
            .strip_prefix("dim=")
            .ok_or_else(|| bad("expected subspace:dim=<n>".into()))?;
        let n: usize = n.parse().map_err(|e| bad(format!("{e}")))?;
        if !(1..=8).contains(&n) {
            return Err(bad("subspace dimension must be between 1 and 8".into()));
        }
        return Ok(Box::new(SubspaceModel::new(n)));
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let text = std::fs::read_to_string(path).map_err(|e| ModelSpecError::File {
            path: path.to_string(),
            msg: e.to_string(),
        })?;
        let algebra = if opts.unchecked {
            FiniteAlgebra::parse_unchecked(&text)
        } else {
            FiniteAlgebra::parse(&text)
        }
        .map_err(|e| ModelSpecError::File {
            path: path.to_string(),
            msg: e.to_string(),
        })?;
        return Ok(Box::new(algebra));
    }
    Err(ModelSpecError::Unknown {
        spec: spec.to_string(),
    })
}

/// The standard model zoo, ordered smallest carrier first; zoo searches
/// (countermodels, residues) walk this list in order.
pub fn standard_zoo() -> Vec<Box<dyn PAlgebra>> {
    vec![
        Box::new(FiniteAlgebra::mo_algebra(0)),
        Box::new(FiniteAlgebra::mo_algebra(1)),
        Box::new(FiniteAlgebra::mo_algebra(2)),
        Box::new(FiniteAlgebra::mo_algebra(3)),
        Box::new(SubspaceModel::new(2)),
        Box::new(SubspaceModel::new(3)),
        Box::new(SubspaceModel::new(4)),
    ]
}

/// Exact rational subspaces of Q^n as a model: `0` is the zero subspace,
/// complement is the orthogonal complement, and `x·y` is the orthogonal
/// projection of `x` onto `y`.
#[derive(Debug, Clone)]
pub struct SubspaceModel {
    dim: usize,
}

impl SubspaceModel {
    /// Model over Q^dim.
    pub fn new(dim: usize) -> Self {
        assert!(dim >= 1, "ambient dimension must be at least 1");
        SubspaceModel { dim }
    }

    fn space<'a>(&self, f: &'a Feature) -> &'a Subspace {
        match f {
            Feature::Space(s) => {
                assert_eq!(
                    s.ambient(),
                    self.dim,
                    "feature from a different ambient dimension"
                );
                s
            }
            Feature::Index(_) => panic!("finite-model feature passed to the subspace model"),
        }
    }
}

impl PAlgebra for SubspaceModel {
    fn name(&self) -> String {
        format!("subspace:dim={}", self.dim)
    }

    fn zero(&self) -> Feature {
        Feature::Space(Subspace::zero(self.dim))
    }

    fn comp(&self, x: &Feature) -> Feature {
        Feature::Space(self.space(x).complement())
    }

    fn dot(&self, x: &Feature, y: &Feature) -> Feature {
        Feature::Space(self.space(y).project_subspace_onto_self(self.space(x)))
    }

    fn eq(&self, x: &Feature, y: &Feature) -> bool {
        self.space(x) == self.space(y)
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Feature {
        Feature::Space(Subspace::random(self.dim, rng))
    }

    fn carrier(&self) -> Option<Vec<Feature>> {
        None
    }

    fn glb(&self, x: &Feature, y: &Feature) -> Option<Feature> {
        Some(Feature::Space(self.space(x).intersect(self.space(y))))
    }

    fn lub(&self, x: &Feature, y: &Feature) -> Option<Feature> {
        Some(Feature::Space(self.space(x).span_sum(self.space(y))))
    }

    fn is_atom(&self, x: &Feature) -> bool {
        self.space(x).dim() == 1
    }

    fn pick_atom_below(&self, x: &Feature) -> Option<Feature> {
        let s = self.space(x);
        s.basis()
            .first()
            .map(|row| Feature::Space(Subspace::span(self.dim, vec![row.clone()])))
    }

    fn sample_atom_below(&self, x: &Feature, rng: &mut dyn RngCore) -> Option<Feature> {
        let s = self.space(x);
        if s.dim() == 0 {
            return None;
        }
        // Random rational combination of the basis rows; retry on zero.
        for _ in 0..32 {
            let coeffs: Vec<i64> = (0..s.dim()).map(|_| rng.gen_range(-3..=3)).collect();
            if coeffs.iter().all(|&c| c == 0) {
                continue;
            }
            let mut v = vec![num::rational::BigRational::from(num::BigInt::from(0)); self.dim];
            for (c, row) in coeffs.iter().zip(s.basis()) {
                let c = num::rational::BigRational::from(num::BigInt::from(*c));
                for (o, x) in v.iter_mut().zip(row) {
                    *o = &*o + &(&c * x);
                }
            }
            if v.iter().any(|x| !num::Zero::is_zero(x)) {
                return Some(Feature::Space(Subspace::span(self.dim, vec![v])));
            }
        }
        self.pick_atom_below(x)
    }

    fn describe(&self, x: &Feature) -> String {
        self.space(x).to_literal()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn registry_resolves_specs() {
        assert_eq!(
            model_by_name("bool2", ModelOptions::default())
                .unwrap()
                .name(),
            "mo:0"
        );
        assert_eq!(
            model_by_name("mo:2", ModelOptions::default())
                .unwrap()
                .name(),
            "mo:2"
        );
        assert_eq!(
            model_by_name("subspace:dim=3", ModelOptions::default())
                .unwrap()
                .name(),
            "subspace:dim=3"
        );
        assert!(matches!(
            model_by_name("nope", ModelOptions::default()),
            Err(ModelSpecError::Unknown { .. })
        ));
        assert!(matches!(
            model_by_name("subspace:dim=0", ModelOptions::default()),
            Err(ModelSpecError::BadParameter { .. })
        ));
    }

    #[test]
    fn subspace_model_derived_relations() {
        let m = SubspaceModel::new(3);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let o = one(&m);
        assert!(m.eq(&m.dot(&o, &o), &o));
        for _ in 0..40 {
            let x = m.sample(&mut rng);
            // x ≤ 1 and x·x' = 0 and x + x' = 1.
            assert!(leq(&m, &x, &o));
            assert!(bot(&m, &x, &m.comp(&x)));
            assert!(m.eq(&plus(&m, &x, &m.comp(&x)), &o));
        }
    }

    #[test]
    fn decomposition_parts_are_orthogonal_and_sum_to_one() {
        let m = SubspaceModel::new(4);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            let parts = orthogonal_decomposition(&m, &mut rng, 3);
            for (i, p) in parts.iter().enumerate() {
                for q in &parts[i + 1..] {
                    assert!(bot(&m, p, q), "parts must be pairwise orthogonal");
                }
            }
            assert!(m.eq(&sum_of_family(&m, &parts), &one(&m)));
        }
    }

    #[test]
    fn gram_schmidt_witness_on_subspaces() {
        let m = SubspaceModel::new(3);
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let mut found = 0;
        while found < 25 {
            let y = m.sample(&mut rng);
            let s = m.sample(&mut rng);
            let x = m.dot(&s, &y);
            if m.eq(&x, &y) {
                continue;
            }
            found += 1;
            let a = gram_schmidt_witness(&m, &x, &y).unwrap();
            assert!(m.is_atom(&a));
            assert!(leq(&m, &a, &y));
            assert!(bot(&m, &a, &x));
        }
    }

    #[test]
    fn witness_rejects_non_strict_pairs() {
        let m = SubspaceModel::new(2);
        let o = one(&m);
        assert!(matches!(
            gram_schmidt_witness(&m, &o, &o),
            Err(WitnessError::NotStrictlyBelow { .. })
        ));
    }
}
