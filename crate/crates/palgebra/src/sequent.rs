//! One-sided sequents and the folds that connect them to formulas.
//!
//! The proof system works on one-sided sequents `s0, s1, …, sn |-`: a finite
//! (possibly empty) sequence of formulas and nothing right of the turnstile.
//! Two-sided sequents are a convenience; [`jump_normalize`] moves each
//! conclusion to the end of the assumption list under one negation, which
//! preserves validity in every model.
//!
//! The folds fix, once and for all, how a sequence of formulas is read as a
//! single formula:
//!
//! * [`phi_fold`]: left-associated conjunction `(…(s0 & s1) & …) & sn`,
//!   with the empty sequence read as `~0`;
//! * [`psi_fold`]: right-associated disjunction of negations
//!   `~s0 | (~s1 | (… | ~sn))`, with the empty sequence read as `0`;
//! * [`or_fold`]: right-associated disjunction `s0 | (s1 | (… | sn))`,
//!   with the empty sequence read as `0` (used for the right-hand side of a
//!   two-sided sequent).

use std::fmt;

use crate::formula::{Formula, SurfaceSequent};

/// A one-sided sequent: an ordered sequence of assumption formulas.
///
/// Order matters everywhere (the conjunction is not commutative), so this is a
/// thin wrapper around `Vec<Formula>` with sequent-flavored printing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequent(pub Vec<Formula>);

impl Sequent {
    /// The empty sequent `|-`.
    pub fn empty() -> Self {
        Sequent(Vec::new())
    }

    /// Number of formulas.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True when there are no formulas.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The formulas as a slice.
    pub fn formulas(&self) -> &[Formula] {
        &self.0
    }
}

impl From<Vec<Formula>> for Sequent {
    fn from(v: Vec<Formula>) -> Self {
        Sequent(v)
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "|-")
        } else {
            let body = self
                .0
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            write!(f, "{body} |-")
        }
    }
}

impl fmt::Debug for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Left-associated conjunction of a sequence; the empty sequence reads as `~0`.
pub fn phi_fold(formulas: &[Formula]) -> Formula {
    match formulas.split_first() {
        None => Formula::neg(Formula::Zero),
        Some((first, rest)) => rest
            .iter()
            .fold(first.clone(), |acc, f| Formula::and(acc, f.clone())),
    }
}

/// Right-associated disjunction of negations; the empty sequence reads as `0`.
pub fn psi_fold(formulas: &[Formula]) -> Formula {
    match formulas.split_last() {
        None => Formula::Zero,
        Some((last, init)) => init
            .iter()
            .rev()
            .fold(Formula::neg(last.clone()), |acc, f| {
                Formula::or(Formula::neg(f.clone()), acc)
            }),
    }
}

/// Right-associated disjunction of a sequence; the empty sequence reads as `0`.
pub fn or_fold(formulas: &[Formula]) -> Formula {
    match formulas.split_last() {
        None => Formula::Zero,
        Some((last, init)) => init
            .iter()
            .rev()
            .fold(last.clone(), |acc, f| Formula::or(f.clone(), acc)),
    }
}

/// Turn a two-sided sequent into the equivalent one-sided sequent by moving
/// each conclusion, leftmost first, to the end of the assumptions under one
/// negation: `G |- b0, …, bn` becomes `G, ~b0, …, ~bn |-`.
pub fn jump_normalize(s: &SurfaceSequent) -> Sequent {
    let mut out = s.lhs.clone();
    for beta in &s.rhs {
        out.push(Formula::neg(beta.clone()));
    }
    Sequent(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_formula, parse_sequent};

    fn f(src: &str) -> Formula {
        parse_formula(src).unwrap()
    }

    #[test]
    fn phi_fold_associates_left() {
        let seq = [f("a"), f("b"), f("c")];
        assert_eq!(phi_fold(&seq), f("(a & b) & c"));
        assert_eq!(phi_fold(&[f("a")]), f("a"));
        assert_eq!(phi_fold(&[]), f("~0"));
    }

    #[test]
    fn psi_fold_associates_right_and_negates() {
        let seq = [f("a"), f("b"), f("c")];
        assert_eq!(psi_fold(&seq), f("~a | (~b | ~c)"));
        assert_eq!(psi_fold(&[f("a")]), f("~a"));
        assert_eq!(psi_fold(&[]), Formula::Zero);
    }

    #[test]
    fn or_fold_associates_right() {
        let seq = [f("a"), f("b"), f("c")];
        assert_eq!(or_fold(&seq), f("a | (b | c)"));
        assert_eq!(or_fold(&[]), Formula::Zero);
    }

    #[test]
    fn phi_fold_composes_by_concatenation() {
        // phi(G ++ D) == phi([phi(G)] ++ D) for nonempty G: left folds nest.
        let g = [f("a"), f("~b")];
        let d = [f("c"), f("0")];
        let mut whole: Vec<Formula> = g.to_vec();
        whole.extend(d.iter().cloned());
        let mut folded: Vec<Formula> = vec![phi_fold(&g)];
        folded.extend(d.iter().cloned());
        assert_eq!(phi_fold(&whole), phi_fold(&folded));
    }

    #[test]
    fn psi_fold_composes_with_unnegated_tail() {
        // psi(G ++ D) ends in psi(D) itself, not ~psi(D): the composition that
        // holds is "negated fold of G finished with tail psi(D)".
        let g = [f("a"), f("b")];
        let d = [f("c"), f("d")];
        let mut whole: Vec<Formula> = g.to_vec();
        whole.extend(d.iter().cloned());

        let tail = psi_fold(&d);
        let composed = g
            .iter()
            .rev()
            .fold(tail, |acc, x| Formula::or(Formula::neg(x.clone()), acc));
        assert_eq!(psi_fold(&whole), composed);

        // The naive reading psi(G ++ [psi(D)]) adds one negation to the tail
        // and is a *different* formula.
        let mut naive: Vec<Formula> = g.to_vec();
        naive.push(psi_fold(&d));
        assert_ne!(psi_fold(&whole), psi_fold(&naive));
    }

    #[test]
    fn jump_moves_conclusions_in_order() {
        let s = parse_sequent("a, b |- c, d").unwrap();
        let n = jump_normalize(&s);
        assert_eq!(n.0, vec![f("a"), f("b"), f("~c"), f("~d")]);
        assert_eq!(n.to_string(), "a, b, ~c, ~d |-");

        let s = parse_sequent("|- a | ~a").unwrap();
        assert_eq!(jump_normalize(&s).0, vec![f("~(a | ~a)")]);

        let s = parse_sequent("|-").unwrap();
        assert!(jump_normalize(&s).is_empty());
    }
}
