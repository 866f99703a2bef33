//! `𝒳(X)`: the nonempty subsets of a finite spectral space `X` that are
//! closed in the inverse topology, i.e. the nonempty down-sets, with the
//! topology generated by `𝒰(Ω) = {Y : Y ⊆ Ω}` for open `Ω`.

use serde::Serialize;

use crate::topo::{
    is_embedding, FinitePoset, FiniteSpace, PointSet, SpectralMapModel, SpectralReport, DEFAULT_ENUMERATION_LIMIT,
};
use crate::{Error, Result};

/// Largest number of points built.
pub const XCAL_POINT_LIMIT: usize = 1 << 12;

#[derive(Clone, Debug)]
pub struct XcalSpace {
    base: FinitePoset,
    /// Nonempty down-sets, sorted by label.
    points: Vec<PointSet>,
    labels: Vec<String>,
    /// Open sets of the base, `∅` included; `subbasis[i] = 𝒰(opens[i])`.
    opens: Vec<PointSet>,
    space: FiniteSpace,
    report: SpectralReport,
}

/// JSON form of an [`XcalSpace`].
#[derive(Clone, Debug, Serialize)]
pub struct XcalDump {
    pub base: Vec<String>,
    pub points: Vec<Vec<String>>,
    pub basic_opens: Vec<BasicOpen>,
    pub spectral: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasicOpen {
    pub omega: Vec<String>,
    pub points: Vec<usize>,
}

fn set_label(base: &FinitePoset, set: &PointSet) -> String {
    format!("{{{}}}", base.set_labels(set).join(","))
}

/// Builds `𝒳(X)` and checks that it is spectral with specialization order
/// given by inclusion.
pub fn build_xcal(base: &FinitePoset) -> Result<XcalSpace> {
    build_xcal_with_limit(base, DEFAULT_ENUMERATION_LIMIT)
}

pub fn build_xcal_with_limit(base: &FinitePoset, limit: usize) -> Result<XcalSpace> {
    let opens = base.down_sets(limit)?;
    if opens.len() - 1 > XCAL_POINT_LIMIT {
        return Err(Error::SizeLimit {
            size: opens.len() - 1,
            limit: XCAL_POINT_LIMIT,
        });
    }
    let mut points: Vec<(String, PointSet)> = opens
        .iter()
        .filter(|o| !o.is_empty())
        .map(|o| (set_label(base, o), o.clone()))
        .collect();
    points.sort();
    let (labels, points): (Vec<String>, Vec<PointSet>) = points.into_iter().unzip();
    let n = points.len();
    let subbasis = opens
        .iter()
        .map(|omega| PointSet::from_indices(n, (0..n).filter(|&i| points[i].is_subset(omega))))
        .collect();
    let space = FiniteSpace::generated_by(labels.clone(), subbasis)?;
    let report = space.is_spectral();
    let xc = XcalSpace {
        base: base.clone(),
        points,
        labels,
        opens,
        space,
        report,
    };
    if !xc.report.is_spectral() {
        return Err(Error::InvalidTopology(format!(
            "𝒳 of a {}-point space is not spectral",
            base.len()
        )));
    }
    if !xc.specialization_is_inclusion() {
        return Err(Error::InvalidTopology(
            "specialization order of 𝒳 differs from inclusion".into(),
        ));
    }
    Ok(xc)
}

impl XcalSpace {
    pub fn base(&self) -> &FinitePoset {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[PointSet] {
        &self.points
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn spectral_report(&self) -> &SpectralReport {
        &self.report
    }

    /// Index of the point equal to the down-set `y`.
    pub fn index_of(&self, y: &PointSet) -> Option<usize> {
        self.points.iter().position(|p| p == y)
    }

    /// `𝒰(Ω)`.
    pub fn u_omega(&self, omega: &PointSet) -> Result<PointSet> {
        if !self.base.is_open(omega)? {
            return Err(Error::NotOpen(self.base.set_labels(omega)));
        }
        let n = self.len();
        Ok(PointSet::from_indices(
            n,
            (0..n).filter(|&i| self.points[i].is_subset(omega)),
        ))
    }

    /// The points ordered by inclusion.
    pub fn to_poset(&self) -> FinitePoset {
        FinitePoset::from_order(self.labels.clone(), |a, b| self.points[a].is_subset(&self.points[b]))
            .expect("inclusion is a partial order")
    }

    /// Topological specialization against set inclusion, point by point.
    pub fn specialization_is_inclusion(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| self.space.specializes(a, b) == self.points[a].is_subset(&self.points[b])))
    }

    /// `x ↦ ↓x` as a map into the inclusion poset of `𝒳(X)`.
    pub fn principal_map(&self) -> SpectralMapModel {
        let assignment = (0..self.base.len())
            .map(|x| {
                self.index_of(self.base.principal_down(x))
                    .expect("principal down-sets are points")
            })
            .collect();
        SpectralMapModel::new(self.base.clone(), self.to_poset(), assignment).expect("total map")
    }

    /// Whether `x ↦ ↓x` is a topological embedding of `X` into `𝒳(X)`.
    pub fn principal_embedding_holds(&self) -> Result<bool> {
        is_embedding(&self.principal_map(), &self.space)
    }

    pub fn to_dot(&self, name: &str) -> String {
        self.to_poset().to_dot(name)
    }

    pub fn dump(&self) -> XcalDump {
        XcalDump {
            base: self.base.labels().to_vec(),
            points: self.points.iter().map(|p| self.base.set_labels(p)).collect(),
            basic_opens: self
                .opens
                .iter()
                .zip(self.space.subbasis())
                .map(|(omega, u)| BasicOpen {
                    omega: self.base.set_labels(omega),
                    points: u.to_vec(),
                })
                .collect(),
            spectral: self.report.is_spectral(),
        }
    }
}
