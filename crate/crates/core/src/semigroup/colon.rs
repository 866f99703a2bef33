use serde::Serialize;

use super::geometry::Geometry;
use super::{AffineSemigroup, Exp, FracIdeal, MonomialIdeal};
use crate::{Error, Result};

/// Largest number of lattice points scanned in a certified region before
/// falling back to the search box.
const REGION_CAP: i64 = 4_000_000;

/// How far a generator search is known to be complete.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Completeness {
    /// Every minimal generator lies in the scanned region.
    Certified,
    /// Only `[-radius, radius]^d` was scanned.
    WithinBox { radius: i64 },
}

impl Completeness {
    pub fn is_certified(&self) -> bool {
        matches!(self, Completeness::Certified)
    }

    pub fn and(self, other: Completeness) -> Completeness {
        match (self, other) {
            (Completeness::Certified, c) | (c, Completeness::Certified) => c,
            (Completeness::WithinBox { radius: a }, Completeness::WithinBox { radius: b }) => {
                Completeness::WithinBox { radius: a.min(b) }
            }
        }
    }
}

/// A computed value together with the completeness of the search behind it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certified<T> {
    pub value: T,
    pub completeness: Completeness,
}

impl<T> Certified<T> {
    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Certified<U> {
        Certified {
            value: f(self.value),
            completeness: self.completeness,
        }
    }
}

/// `⋂ₖ ⋃ᵢ (uₖᵢ + S)`: every colon and intersection below has this shape.
struct Translates {
    sets: Vec<Vec<Exp>>,
}

impl Translates {
    fn contains(&self, s: &AffineSemigroup, x: &Exp) -> bool {
        self.sets.iter().all(|us| us.iter().any(|u| s.member(&(*x - *u))))
    }
}

impl AffineSemigroup {
    /// Lattice points to scan, or `None` when the certified region is too
    /// large. Inside one coset of `ℕa₁ + ℕa₂`, each `uₖᵢ + S` is a finite
    /// union of quadrants `uₖᵢ + w + N` (`w` in the Apéry set), so every
    /// minimal element of the intersection is a coordinatewise maximum of
    /// such corners.
    fn certified_points(&self, t: &Translates) -> Option<Vec<Exp>> {
        match &self.geom {
            Geometry::Line(l) => {
                let coords: Vec<Vec<i64>> = t
                    .sets
                    .iter()
                    .map(|us| us.iter().map(|u| l.coord(u).expect("in group")).collect())
                    .collect();
                let lo = coords.iter().map(|c| *c.iter().min().unwrap()).max()?;
                let hi = coords.iter().map(|c| *c.iter().max().unwrap()).max()? + l.max_apery();
                if hi - lo + 1 > REGION_CAP {
                    return None;
                }
                Some((lo..=hi).map(|c| l.unit.scale(c)).collect())
            }
            Geometry::Plane(p) => {
                let (wa, wb) = p.max_apery_coords();
                let bound = |f: &dyn Fn(&Exp) -> i64, wmax: i64| -> Option<(i64, i64)> {
                    let lo = t.sets.iter().map(|us| us.iter().map(f).min().unwrap()).max()?;
                    let hi = t.sets.iter().map(|us| us.iter().map(f).max().unwrap()).max()? + wmax;
                    Some((lo, hi))
                };
                let arange = bound(&|x: &Exp| p.alpha(x), wa)?;
                let brange = bound(&|x: &Exp| p.beta(x), wb)?;
                let (lo, hi) = p.bounding_box(arange, brange);
                let area = (hi.x() - lo.x() + 1).saturating_mul(hi.y() - lo.y() + 1);
                if area > REGION_CAP {
                    return None;
                }
                let inside = |x: &Exp| {
                    let (a, b) = (p.alpha(x), p.beta(x));
                    a >= arange.0 && a <= arange.1 && b >= brange.0 && b <= brange.1
                };
                Some(self.group_points(lo, hi).into_iter().filter(inside).collect())
            }
        }
    }

    fn minimal_elements(&self, t: &Translates) -> Result<Certified<Vec<Exp>>> {
        let (points, completeness) = match self.certified_points(t) {
            Some(points) => (points, Completeness::Certified),
            None => (
                self.box_points(self.search_bound()),
                Completeness::WithinBox {
                    radius: self.search_bound(),
                },
            ),
        };
        let gens = self.generators();
        let mut out: Vec<Exp> = points
            .into_iter()
            .filter(|x| t.contains(self, x) && gens.iter().all(|a| !t.contains(self, &(*x - *a))))
            .collect();
        out.sort();
        if out.is_empty() {
            return Err(Error::Invalid(format!(
                "no generator found within radius {}",
                self.search_bound()
            )));
        }
        Ok(Certified {
            value: out,
            completeness,
        })
    }

    /// `(I :_D z) = {s ∈ S : s + z ∈ I}` for a (fractional) monomial ideal
    /// `I`; with `I = D` this is `(D :_D z)`.
    pub fn colon_by_element(&self, ideal: &impl AsRef<FracIdeal>, z: Exp) -> Result<Certified<MonomialIdeal>> {
        self.check_in_group(&z)?;
        let ideal = ideal.as_ref();
        let t = Translates {
            sets: vec![vec![self.zero()], ideal.generators().iter().map(|g| *g - z).collect()],
        };
        let found = self.minimal_elements(&t)?;
        Ok(Certified {
            value: MonomialIdeal::new(self, found.value)?,
            completeness: found.completeness,
        })
    }

    /// `(D :_D z)`.
    pub fn colon_d(&self, z: Exp) -> Result<Certified<MonomialIdeal>> {
        self.colon_by_element(&FracIdeal::unit(self), z)
    }

    /// `(D : J) = {z : z + J ⊆ S}`.
    pub fn colon_fractional(&self, j: &impl AsRef<FracIdeal>) -> Result<Certified<FracIdeal>> {
        let t = Translates {
            sets: j.as_ref().generators().iter().map(|g| vec![-*g]).collect(),
        };
        let found = self.minimal_elements(&t)?;
        Ok(Certified {
            value: FracIdeal::new(self, found.value)?,
            completeness: found.completeness,
        })
    }

    /// `I ∩ J`.
    pub fn intersect(&self, a: &impl AsRef<FracIdeal>, b: &impl AsRef<FracIdeal>) -> Result<Certified<FracIdeal>> {
        let t = Translates {
            sets: vec![a.as_ref().generators().to_vec(), b.as_ref().generators().to_vec()],
        };
        let found = self.minimal_elements(&t)?;
        Ok(Certified {
            value: FracIdeal::new(self, found.value)?,
            completeness: found.completeness,
        })
    }

    /// The finitely generated ideal witnessing rad-colon coherence at `z`:
    /// `(D :_D z)` itself, these rings being Noetherian. Its radical then
    /// has a compact complement in the spectrum.
    pub fn rad_colon_coherent_witness(&self, z: Exp) -> Result<Certified<MonomialIdeal>> {
        self.colon_d(z)
    }
}
