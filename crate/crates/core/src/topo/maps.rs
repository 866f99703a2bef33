use serde::Serialize;

use super::{FinitePoset, FiniteSpace, PointSet, DEFAULT_ENUMERATION_LIMIT};
use crate::{Error, Result};

/// A total map between the underlying sets of two finite posets. Continuity
/// is checked by the operations, not assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralMapModel {
    pub source: FinitePoset,
    pub target: FinitePoset,
    assignment: Vec<usize>,
}

impl SpectralMapModel {
    pub fn new(source: FinitePoset, target: FinitePoset, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source.len() {
            return Err(Error::InvalidMap(format!(
                "assignment covers {} of {} source points",
                assignment.len(),
                source.len()
            )));
        }
        if let Some(&bad) = assignment.iter().find(|&&y| y >= target.len()) {
            return Err(Error::InvalidMap(format!("target index {bad} out of range")));
        }
        Ok(SpectralMapModel {
            source,
            target,
            assignment,
        })
    }

    /// Builds the map from `(source label, target label)` pairs; every
    /// source point must be assigned exactly once.
    pub fn from_labels<A: AsRef<str>, B: AsRef<str>>(
        source: FinitePoset,
        target: FinitePoset,
        pairs: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self> {
        let mut assignment = vec![usize::MAX; source.len()];
        for (a, b) in pairs {
            let x = source.index_of(a.as_ref())?;
            let y = target.index_of(b.as_ref())?;
            if assignment[x] != usize::MAX {
                return Err(Error::InvalidMap(format!("`{}` assigned twice", a.as_ref())));
            }
            assignment[x] = y;
        }
        if let Some(x) = assignment.iter().position(|&y| y == usize::MAX) {
            return Err(Error::InvalidMap(format!("`{}` is not assigned", source.label(x))));
        }
        Self::new(source, target, assignment)
    }

    pub fn identity(poset: &FinitePoset) -> Self {
        Self::new(poset.clone(), poset.clone(), (0..poset.len()).collect()).expect("identity is total")
    }

    pub fn apply(&self, x: usize) -> usize {
        self.assignment[x]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn image(&self, set: &PointSet) -> PointSet {
        PointSet::from_indices(self.target.len(), set.iter().map(|x| self.assignment[x]))
    }

    pub fn preimage(&self, set: &PointSet) -> PointSet {
        PointSet::from_indices(
            self.source.len(),
            (0..self.source.len()).filter(|&x| set.contains(self.assignment[x])),
        )
    }

    pub fn is_surjective(&self) -> bool {
        self.image(&PointSet::full(self.source.len())).len() == self.target.len()
    }

    pub fn is_injective(&self) -> bool {
        self.image(&PointSet::full(self.source.len())).len() == self.source.len()
    }

    /// Order-preserving, i.e. continuous for the down-set topologies.
    pub fn is_monotone(&self) -> bool {
        let n = self.source.len();
        (0..n).all(|x| (0..n).all(|y| !self.source.leq(x, y) || self.target.leq(self.apply(x), self.apply(y))))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SurjectionHypotheses {
    pub source_spectral: bool,
    pub target_t0: bool,
    pub preimages_compact: bool,
    pub continuous: bool,
    pub surjective: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SurjectionConclusion {
    pub target_spectral: bool,
    pub map_spectral: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurjectionReport {
    pub hypotheses: SurjectionHypotheses,
    pub conclusion: SurjectionConclusion,
}

impl SurjectionReport {
    pub fn hypotheses_hold(&self) -> bool {
        let h = &self.hypotheses;
        h.source_spectral && h.target_t0 && h.preimages_compact && h.continuous && h.surjective
    }

    pub fn conclusion_holds(&self) -> bool {
        self.conclusion.target_spectral && self.conclusion.map_spectral
    }

    /// False only for "hypotheses hold, conclusion fails".
    pub fn consistent(&self) -> bool {
        !self.hypotheses_hold() || self.conclusion_holds()
    }
}

/// Tests the surjection lemma on a finite model. The target carries the
/// topology generated by `subbasis`; each member must be open in the
/// target's down-set topology.
pub fn check_surjection_spectral(f: &SpectralMapModel, subbasis: &[PointSet]) -> Result<SurjectionReport> {
    for b in subbasis {
        if !f.target.is_open(b)? {
            return Err(Error::NotOpen(f.target.set_labels(b)));
        }
    }
    let source = FiniteSpace::from_poset(&f.source);
    let target = FiniteSpace::generated_by(f.target.labels().to_vec(), subbasis.to_vec())?;
    let target_report = target.is_spectral();

    // every subset of a finite space is compact
    let preimages_compact = true;
    let continuous = subbasis.iter().all(|b| source.is_open(&f.preimage(b)));
    let hypotheses = SurjectionHypotheses {
        source_spectral: source.is_spectral().is_spectral(),
        target_t0: target_report.t0_violation.is_none(),
        preimages_compact,
        continuous,
        surjective: f.is_surjective(),
    };
    // spectral map: preimages of all (compact) opens are compact opens
    let map_spectral = match target.opens(1 << 16) {
        Ok(opens) => opens.iter().all(|u| source.is_open(&f.preimage(u))),
        Err(_) => (0..target.len()).all(|y| source.is_open(&f.preimage(target.neighbourhood(y)))),
    };
    Ok(SurjectionReport {
        hypotheses,
        conclusion: SurjectionConclusion {
            target_spectral: target_report.is_spectral(),
            map_spectral,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub order_preserving: bool,
    pub inverse_order_preserving: bool,
    /// Images and preimages of all open sets are open.
    pub homeomorphism: bool,
}

impl IsoReport {
    pub fn is_order_iso(&self) -> bool {
        self.order_preserving && self.inverse_order_preserving
    }
}

/// For a bijection between finite posets, compares "order isomorphism"
/// with "homeomorphism" computed independently from the open sets.
pub fn order_iso_is_homeo(f: &SpectralMapModel) -> Result<IsoReport> {
    if f.source.len() != f.target.len() || !f.is_injective() {
        return Err(Error::InvalidMap("map is not bijective".into()));
    }
    let n = f.source.len();
    let mut order_preserving = true;
    let mut inverse_order_preserving = true;
    for x in 0..n {
        for y in 0..n {
            let below = f.source.leq(x, y);
            let below_img = f.target.leq(f.apply(x), f.apply(y));
            order_preserving &= !below || below_img;
            inverse_order_preserving &= !below_img || below;
        }
    }
    let src_opens = f.source.down_sets(DEFAULT_ENUMERATION_LIMIT)?;
    let tgt_opens = f.target.down_sets(DEFAULT_ENUMERATION_LIMIT)?;
    let homeomorphism = src_opens.iter().all(|u| f.target.is_open(&f.image(u)).unwrap_or(false))
        && tgt_opens
            .iter()
            .all(|v| f.source.is_open(&f.preimage(v)).unwrap_or(false));
    Ok(IsoReport {
        order_preserving,
        inverse_order_preserving,
        homeomorphism,
    })
}

/// Whether `f` is a topological embedding of the source (down-set topology)
/// into `target_space`, whose points are those of `f.target`: injective, and
/// the pulled-back topology is exactly the topology of the source.
pub fn is_embedding(f: &SpectralMapModel, target_space: &FiniteSpace) -> Result<bool> {
    if target_space.len() != f.target.len() {
        return Err(Error::InvalidMap("target space does not match the map".into()));
    }
    if !f.is_injective() {
        return Ok(false);
    }
    let source_opens = f.source.down_sets(DEFAULT_ENUMERATION_LIMIT)?;
    let mut pulled: Vec<PointSet> = target_space.opens(1 << 16)?.iter().map(|u| f.preimage(u)).collect();
    pulled.sort();
    pulled.dedup();
    Ok(pulled == source_opens)
}
