//! Finite algebraic-logic workbench.
//!
//! Implements truth-value algebras over finite posets, orthomodular-lattice
//! axiom checking and factorization, first-order semantics with
//! algebra-valued truth valuations, Hilbert-style proof checking, and a
//! harness that verifies, constructively at desk scale, that irreducible
//! truth-value algebras suffice: a formula holds in every model of a set of
//! hypotheses over a factor-closed finite semantics exactly when it holds in
//! every irreducible model.

mod bitset;

pub mod deduction;
pub mod harness;
pub mod oml;
pub mod poset;
pub mod semantics;
pub mod syntax;
pub mod tvalgebra;

pub use deduction::{
    CheckOptions, CheckReport, DeductionSystem, Justification, Pattern, Proof, Rule, TermPattern,
};
pub use harness::{ClosureMode, FiniteSemantics, MainTheoremReport, TrialConfig, TrialSummary};
pub use oml::{OmlAxiom, OmlReport, OmlView};
pub use poset::{OrderMap, Poset, PosetError};
pub use semantics::{Interpretation, Structure, StructureOptions};
pub use syntax::{Language, Term, Wff};
pub use tvalgebra::{AlgType, AlgebraError, AlgebraMap, TVAlgebra};
