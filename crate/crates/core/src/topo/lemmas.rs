use serde::Serialize;

use super::{FinitePoset, PointSet};
use crate::{Error, Result};

/// `{x} = U ∩ (X ∖ V)` with `U`, `V` compact open.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingletonWitness {
    pub point: String,
    pub open: Vec<String>,
    pub removed_open: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructibleReport {
    pub discrete: bool,
    pub witnesses: Vec<SingletonWitness>,
}

/// Verifies that the constructible topology of a finite poset is discrete by
/// exhibiting each singleton as `↓x ∖ (↓x ∖ {x})`, both sets open (and
/// compact, the space being finite). Proconstructibility is therefore
/// vacuous on finite spaces.
pub fn constructible_is_discrete(x: &FinitePoset) -> ConstructibleReport {
    let n = x.len();
    let mut witnesses = Vec::with_capacity(n);
    let mut discrete = true;
    for p in 0..n {
        let u = x.principal_down(p).clone();
        let mut v = u.clone();
        v.remove(p);
        let ok = x.is_open(&u).unwrap_or(false)
            && x.is_open(&v).unwrap_or(false)
            && u.difference(&v) == PointSet::singleton(n, p);
        discrete &= ok;
        witnesses.push(SingletonWitness {
            point: x.label(p).to_string(),
            open: x.set_labels(&u),
            removed_open: x.set_labels(&v),
        });
    }
    ConstructibleReport { discrete, witnesses }
}

/// The compactness criterion for proconstructible subspaces: `Y` is
/// proconstructible iff `B` and `B ∩ Y` are compact for every member `B` of
/// a subbasis of compact opens. Every subset of a finite space is compact,
/// so this holds for all finite inputs; only the subbasis is validated.
pub fn check_proconstructible_criterion(x: &FinitePoset, y: &PointSet, subbasis: &[PointSet]) -> Result<bool> {
    x.check_set(y)?;
    for b in subbasis {
        if !x.is_open(b)? {
            return Err(Error::NotOpen(x.set_labels(b)));
        }
    }
    let compact = |s: &PointSet| s.len() <= x.len();
    Ok(subbasis.iter().all(|b| compact(b) && compact(&b.intersection(y))))
}
