//! Affine semigroups `S ⊆ ℕ^d` (`d ≤ 2`) and the monomial layer of `k[S]`:
//! membership, fractional monomial ideals, colons, faces and radicals.

mod affine;
mod colon;
mod exp;
mod face;
mod geometry;
mod ideal;

pub use affine::{AffineSemigroup, ConductorReport, SemigroupSpec};
pub use colon::{Certified, Completeness};
pub use exp::Exp;
pub use face::{Face, PrincipalRadical};
pub use ideal::{FracIdeal, MonomialIdeal};
