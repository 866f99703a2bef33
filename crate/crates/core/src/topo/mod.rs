//! Finite spectral spaces.
//!
//! A finite `T0` space is the same thing as a finite poset: we write `x ≤ y`
//! when `y` lies in the closure of `x` (for prime spectra, `P ⊆ Q`). Open sets
//! are then exactly the down-sets. [`FiniteSpace`] handles topologies given
//! by an explicit open family or subbasis, which need not be `T0`.

pub mod enumerate;
mod lemmas;
mod maps;
mod pointset;
mod poset;
mod space;

pub use lemmas::{check_proconstructible_criterion, constructible_is_discrete, ConstructibleReport, SingletonWitness};
pub use maps::{
    check_surjection_spectral, is_embedding, order_iso_is_homeo, IsoReport, SpectralMapModel, SurjectionReport,
};
pub use pointset::PointSet;
pub use poset::{FinitePoset, DEFAULT_ENUMERATION_LIMIT};
pub use space::{FiniteSpace, IrreducibleClosed, SoberMode, SpectralReport};
