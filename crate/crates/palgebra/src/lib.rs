//! A workbench for P-algebras — non-commutative, non-associative
//! generalizations of Boolean algebras in which `x·y` reads "the part of `x`
//! seen by `y`" — together with the propositional language they interpret and
//! a checked sequent calculus for reasoning about them.
//!
//! The crate is organized around one trait, [`model::PAlgebra`], with two
//! model families behind it:
//!
//! * [`finite`] — explicit finite tables: the MO family, loaded table files,
//!   and an exhaustive enumerator for carriers up to size 6;
//! * [`subspace`] — subspaces of ℚⁿ with exact rational arithmetic, where
//!   `·` is orthogonal projection.
//!
//! On top of the models sit:
//!
//! * [`formula`] — the connective language and its parser;
//! * [`sequent`] — one-sided sequents and the formula folds interpreting them;
//! * [`laws`] — a law suite running every axiom and derived identity against
//!   any model, with witnesses on failure;
//! * [`semantics`] — evaluation, validity checking, and countermodel search;
//! * [`kernel`] — a small checked proof kernel for the sequent calculus, a
//!   script format, derived-rule macros, and a proof corpus;
//! * [`search`] — bounded backward proof search over the kernel rules.

pub mod finite;
pub mod formula;
pub mod kernel;
pub mod laws;
pub mod search;
pub mod semantics;
pub mod model;
pub mod sequent;
pub mod subspace;
