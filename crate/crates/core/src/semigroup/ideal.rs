use serde::Serialize;

use super::{AffineSemigroup, Exp};
use crate::{Error, Result};

/// A nonzero finitely generated `S`-submodule `⋃ (zᵢ + S)` of the group
/// `ℤS`, i.e. a fractional monomial ideal of `k[S]`. Generators are kept
/// minimal (no `zᵢ ∈ zⱼ + S`) and sorted, so equal ideals compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FracIdeal {
    gens: Vec<Exp>,
}

impl FracIdeal {
    pub fn new(s: &AffineSemigroup, gens: impl IntoIterator<Item = Exp>) -> Result<Self> {
        let mut gens: Vec<Exp> = gens.into_iter().collect();
        if gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        for g in &gens {
            s.check_in_group(g)?;
        }
        gens.sort();
        gens.dedup();
        Ok(FracIdeal {
            gens: minimalize(s, &gens),
        })
    }

    /// The ring `D` itself.
    pub fn unit(s: &AffineSemigroup) -> Self {
        FracIdeal { gens: vec![s.zero()] }
    }

    pub fn principal(s: &AffineSemigroup, z: Exp) -> Result<Self> {
        Self::new(s, [z])
    }

    pub fn generators(&self) -> &[Exp] {
        &self.gens
    }

    pub fn contains(&self, s: &AffineSemigroup, x: &Exp) -> bool {
        self.gens.iter().any(|g| s.member(&(*x - *g)))
    }

    /// Contained in `D`.
    pub fn is_integral(&self, s: &AffineSemigroup) -> bool {
        self.gens.iter().all(|g| s.member(g))
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    /// `x + J`.
    pub fn translate(&self, s: &AffineSemigroup, x: Exp) -> Result<Self> {
        Self::new(s, self.gens.iter().map(|g| *g + x))
    }

    /// `I ⊆ J`, decided on generators.
    pub fn is_subset(&self, s: &AffineSemigroup, other: &FracIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(s, g))
    }
}

/// An integral monomial ideal `⋃ (gᵢ + S)`, `gᵢ ∈ S`. The generator `0`
/// gives `D` itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct MonomialIdeal(FracIdeal);

impl MonomialIdeal {
    pub fn new(s: &AffineSemigroup, gens: impl IntoIterator<Item = Exp>) -> Result<Self> {
        let ideal = FracIdeal::new(s, gens)?;
        if let Some(g) = ideal.gens.iter().find(|g| !s.member(g)) {
            return Err(Error::NotInSemigroup(g.to_string()));
        }
        Ok(MonomialIdeal(ideal))
    }

    pub fn unit(s: &AffineSemigroup) -> Self {
        MonomialIdeal(FracIdeal::unit(s))
    }

    /// The maximal monomial ideal `S ∖ {0}`.
    pub fn maximal(s: &AffineSemigroup) -> Self {
        MonomialIdeal(FracIdeal {
            gens: s.generators().to_vec(),
        })
    }

    pub fn from_frac(s: &AffineSemigroup, ideal: FracIdeal) -> Result<Self> {
        if let Some(g) = ideal.gens.iter().find(|g| !s.member(g)) {
            return Err(Error::NotInSemigroup(g.to_string()));
        }
        Ok(MonomialIdeal(ideal))
    }

    pub fn generators(&self) -> &[Exp] {
        self.0.generators()
    }

    pub fn contains(&self, s: &AffineSemigroup, x: &Exp) -> bool {
        self.0.contains(s, x)
    }

    pub fn as_frac(&self) -> &FracIdeal {
        &self.0
    }

    pub fn into_frac(self) -> FracIdeal {
        self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_unit()
    }
}

impl From<MonomialIdeal> for FracIdeal {
    fn from(i: MonomialIdeal) -> Self {
        i.0
    }
}

impl AsRef<FracIdeal> for MonomialIdeal {
    fn as_ref(&self) -> &FracIdeal {
        &self.0
    }
}

impl AsRef<FracIdeal> for FracIdeal {
    fn as_ref(&self) -> &FracIdeal {
        self
    }
}

fn minimalize(s: &AffineSemigroup, sorted: &[Exp]) -> Vec<Exp> {
    sorted
        .iter()
        .filter(|g| !sorted.iter().any(|h| h != *g && s.member(&(**g - *h))))
        .copied()
        .collect()
}
