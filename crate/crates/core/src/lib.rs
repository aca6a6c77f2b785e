//! Gluing of affine semigroups.
//!
//! Given generators `A` and `B` in `N^n`, this crate computes the gluable
//! lattice point `u(A,B)`, the toric ideals of `A`, `B` and `C = k1·A ⊔ k2·B`,
//! and decides whether `I_C = I_A + I_B + <ρ>` for a single binomial `ρ`.

pub mod binomial;
pub mod constructions;
pub mod error;
pub mod exactlin;
pub mod gluing;
pub mod homology;
pub mod toric;

pub use binomial::{Binomial, BinomialIdeal, Monomial, MonomialOrder, VariableBlock};
pub use error::{Error, Result};
pub use exactlin::{IntegerMatrix, LatticeVector};
pub use gluing::{GluingCandidate, GluingReport, Verdict};
pub use homology::{BettiSequence, HomologySummary, Tri};
pub use toric::{GradedBinomialSet, SemigroupGens};
