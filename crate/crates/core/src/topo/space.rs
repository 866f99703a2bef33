use serde::Serialize;

use super::{FinitePoset, PointSet};
use crate::{Error, Result};

/// Above this many open sets the sobriety check switches from enumerating
/// every closed set to enumerating point closures.
const EXHAUSTIVE_OPEN_LIMIT: usize = 1 << 12;

/// A finite topological space whose topology is generated by a subbasis.
///
/// Every point `x` has a smallest open neighbourhood `O_x`, the intersection
/// of the subbasic sets containing it, and the open sets are exactly the
/// unions of these.
#[derive(Clone, Debug)]
pub struct FiniteSpace {
    labels: Vec<String>,
    subbasis: Vec<PointSet>,
    nbhd: Vec<PointSet>,
}

impl FiniteSpace {
    pub fn generated_by(labels: Vec<String>, subbasis: Vec<PointSet>) -> Result<Self> {
        let n = labels.len();
        if let Some(bad) = subbasis.iter().find(|s| s.universe() != n) {
            return Err(Error::ForeignPointSet {
                expected: n,
                found: bad.universe(),
            });
        }
        let nbhd = (0..n)
            .map(|x| {
                let mut o = PointSet::full(n);
                for b in subbasis.iter().filter(|b| b.contains(x)) {
                    o.intersect_with(b);
                }
                o
            })
            .collect();
        Ok(FiniteSpace { labels, subbasis, nbhd })
    }

    /// A space given by its complete family of open sets. The family must
    /// contain `∅` and the whole space and be closed under pairwise unions
    /// and intersections.
    pub fn from_open_family(labels: Vec<String>, opens: Vec<PointSet>) -> Result<Self> {
        let n = labels.len();
        if let Some(bad) = opens.iter().find(|s| s.universe() != n) {
            return Err(Error::ForeignPointSet {
                expected: n,
                found: bad.universe(),
            });
        }
        let family: std::collections::HashSet<&PointSet> = opens.iter().collect();
        let show = |s: &PointSet| s.iter().map(|i| labels[i].clone()).collect::<Vec<_>>().join(",");
        if !family.contains(&PointSet::empty(n)) {
            return Err(Error::InvalidTopology("the empty set is missing".into()));
        }
        if !family.contains(&PointSet::full(n)) {
            return Err(Error::InvalidTopology("the whole space is missing".into()));
        }
        for a in &opens {
            for b in &opens {
                if !family.contains(&a.union(b)) {
                    return Err(Error::InvalidTopology(format!(
                        "not closed under union: {{{}}} ∪ {{{}}}",
                        show(a),
                        show(b)
                    )));
                }
                if !family.contains(&a.intersection(b)) {
                    return Err(Error::InvalidTopology(format!(
                        "not closed under intersection: {{{}}} ∩ {{{}}}",
                        show(a),
                        show(b)
                    )));
                }
            }
        }
        Self::generated_by(labels, opens)
    }

    /// The down-set topology of a poset, generated by principal down-sets.
    pub fn from_poset(poset: &FinitePoset) -> Self {
        let subbasis = (0..poset.len()).map(|x| poset.principal_down(x).clone()).collect();
        Self::generated_by(poset.labels().to_vec(), subbasis).expect("principal down-sets live in the poset")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn subbasis(&self) -> &[PointSet] {
        &self.subbasis
    }

    /// Smallest open set containing `x`.
    pub fn neighbourhood(&self, x: usize) -> &PointSet {
        &self.nbhd[x]
    }

    pub fn is_open(&self, set: &PointSet) -> bool {
        set.universe() == self.len() && set.iter().all(|x| self.nbhd[x].is_subset(set))
    }

    /// Closure of `{x}`: the points whose every neighbourhood contains `x`.
    pub fn point_closure(&self, x: usize) -> PointSet {
        PointSet::from_indices(self.len(), (0..self.len()).filter(|&y| self.nbhd[y].contains(x)))
    }

    /// `y ∈ cl{x}`, i.e. `x ⤳ y`.
    pub fn specializes(&self, x: usize, y: usize) -> bool {
        self.nbhd[y].contains(x)
    }

    /// All open sets, or a size error when there are more than `limit`.
    pub fn opens(&self, limit: usize) -> Result<Vec<PointSet>> {
        let n = self.len();
        let mut seen = std::collections::HashSet::new();
        let mut out = vec![PointSet::empty(n)];
        seen.insert(PointSet::empty(n));
        let mut k = 0;
        while k < out.len() {
            let current = out[k].clone();
            k += 1;
            for o in &self.nbhd {
                let next = current.union(o);
                if seen.insert(next.clone()) {
                    out.push(next);
                    if out.len() > limit {
                        return Err(Error::SizeLimit { size: out.len(), limit });
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// The specialization preorder as a poset, when it is one (`T0`).
    pub fn specialization_poset(&self) -> Result<FinitePoset> {
        FinitePoset::from_order(self.labels.clone(), |x, y| self.specializes(x, y))
    }

    fn is_irreducible(&self, closed: &PointSet) -> bool {
        if closed.is_empty() {
            return false;
        }
        closed.iter().all(|a| {
            closed
                .iter()
                .all(|b| !self.nbhd[a].intersection(&self.nbhd[b]).is_disjoint(closed))
        })
    }

    /// Checks Hochster's conditions: `T0`, quasi-compactness, a basis of
    /// compact opens closed under intersection, and sobriety (every
    /// irreducible closed set has a unique generic point).
    pub fn is_spectral(&self) -> SpectralReport {
        let n = self.len();
        let mut t0_violation = None;
        'outer: for x in 0..n {
            for y in x + 1..n {
                if self.nbhd[x] == self.nbhd[y] {
                    t0_violation = Some((self.labels[x].clone(), self.labels[y].clone()));
                    break 'outer;
                }
            }
        }
        // finite spaces: every subset is compact, so the compact opens are
        // all opens; O_x ∩ O_y must again be open
        let compact = true;
        let basis_intersection_closed =
            (0..n).all(|x| (0..n).all(|y| self.is_open(&self.nbhd[x].intersection(&self.nbhd[y]))));

        let (mode, candidates) = match self.opens(EXHAUSTIVE_OPEN_LIMIT) {
            Ok(opens) => (
                SoberMode::AllClosedSets,
                opens.iter().map(PointSet::complement).collect::<Vec<_>>(),
            ),
            Err(_) => {
                // a nonempty closed C is the union of the closures of its
                // points, so an irreducible one is a point closure
                let mut cls: Vec<PointSet> = (0..n).map(|x| self.point_closure(x)).collect();
                cls.sort();
                cls.dedup();
                (SoberMode::PointClosures, cls)
            }
        };
        let mut irreducible_closed = Vec::new();
        for c in candidates.iter().filter(|c| self.is_irreducible(c)) {
            let generic: Vec<usize> = c.iter().filter(|&g| &self.point_closure(g) == c).collect();
            irreducible_closed.push(IrreducibleClosed {
                set: c.iter().map(|i| self.labels[i].clone()).collect(),
                generic_points: generic.iter().map(|&i| self.labels[i].clone()).collect(),
            });
        }
        irreducible_closed.sort_by(|a, b| a.set.cmp(&b.set));
        SpectralReport {
            points: n,
            t0_violation,
            compact,
            basis_intersection_closed,
            sober_mode: mode,
            irreducible_closed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SoberMode {
    AllClosedSets,
    PointClosures,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibleClosed {
    pub set: Vec<String>,
    pub generic_points: Vec<String>,
}

/// Outcome of [`FiniteSpace::is_spectral`] with its certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralReport {
    pub points: usize,
    pub t0_violation: Option<(String, String)>,
    pub compact: bool,
    pub basis_intersection_closed: bool,
    pub sober_mode: SoberMode,
    pub irreducible_closed: Vec<IrreducibleClosed>,
}

impl SpectralReport {
    /// First irreducible closed set without a unique generic point.
    pub fn sober_violation(&self) -> Option<&IrreducibleClosed> {
        self.irreducible_closed.iter().find(|c| c.generic_points.len() != 1)
    }

    pub fn is_spectral(&self) -> bool {
        self.t0_violation.is_none()
            && self.compact
            && self.basis_intersection_closed
            && self.sober_violation().is_none()
    }
}
