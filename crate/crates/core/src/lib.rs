//! Exact computations with finite spectral spaces, affine semigroup rings
//! `k[S]` (`S ⊆ ℕ^d`, `d ≤ 2`) and the semistar operations that describe
//! their localizations, quotient rings and sublocalizations.
//!
//! The crate is organised bottom-up:
//!
//! * [`topo`]: finite posets as spectral spaces, explicit finite topologies
//!   and checkers for spectrality and spectral maps.
//! * [`xcal`]: the space of nonempty inverse-closed subsets of a finite
//!   spectral space.
//! * [`semigroup`]: membership, colon ideals, faces and radicals for affine
//!   semigroups.
//! * [`semistar`]: `s_Δ`, `v`, `t`, the `⋆̃` brute-force arm and the decision
//!   procedures built on them.
//! * [`scal`]: semigroup primes of `ℤ/n` and of the monomial layer of `k[S]`.
//!
//! Ring-theoretic verdicts are computed on monomials only and are labelled
//! as monomial-layer certificates.

pub mod error;
pub mod scal;
pub mod semigroup;
pub mod semistar;
pub mod topo;
pub mod xcal;

pub use error::{Error, Result};
pub use scal::{ScalSpace, SemigroupPrime};
pub use semigroup::{AffineSemigroup, Completeness, Exp, Face, FracIdeal, MonomialIdeal};
pub use semistar::PrimeSet;
pub use topo::{FinitePoset, FiniteSpace, PointSet, SpectralMapModel};
pub use xcal::XcalSpace;

/// Label attached to every ring-level verdict computed from monomials only.
pub const MONOMIAL_LAYER: &str = "monomial-layer certificate";
