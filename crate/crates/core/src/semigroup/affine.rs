use serde::{Deserialize, Serialize};

use super::geometry::{gcd, Geometry, LineGeom, PlaneGeom};
use super::{Exp, Face};
use crate::{Error, Result};

/// JSON description of a semigroup instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupSpec {
    pub dim: usize,
    pub generators: Vec<Exp>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conductor: Option<Exp>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search_bound: Option<i64>,
}

/// A finitely generated submonoid `S ⊆ ℕ^d`, `d ≤ 2`, presenting the
/// domain `D = k[S]` with quotient field the monomials of `ℤS`.
#[derive(Clone, Debug)]
pub struct AffineSemigroup {
    dim: usize,
    generators: Vec<Exp>,
    search_bound: i64,
    conductor: Option<Exp>,
    pub(crate) geom: Geometry,
}

/// Result of checking `c + S̄ ⊆ S` on a box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConductorReport {
    pub conductor: Exp,
    pub radius: i64,
    pub holds_in_box: bool,
    pub counterexample: Option<Exp>,
    /// Saturation elements beyond the box are not checked.
    pub tail_unchecked: bool,
}

impl AffineSemigroup {
    pub fn new(dim: usize, generators: impl IntoIterator<Item = Exp>) -> Result<Self> {
        if !(1..=2).contains(&dim) {
            return Err(Error::InvalidSemigroup(format!("dimension {dim} is not 1 or 2")));
        }
        let mut gens: Vec<Exp> = generators.into_iter().collect();
        for g in &gens {
            if g.dim() != dim {
                return Err(Error::Dimension(g.to_string()));
            }
            if g.is_zero() || !g.is_nonnegative() {
                return Err(Error::InvalidSemigroup(format!(
                    "generator {g} is not a nonzero vector of ℕ^{dim}"
                )));
            }
        }
        if gens.is_empty() {
            return Err(Error::InvalidSemigroup("no generators".into()));
        }
        gens.sort();
        gens.dedup();
        // drop generators that are combinations of the others
        let mut minimal = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            let others: Vec<Exp> = gens
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| *h)
                .collect();
            if !combination_exists(g, &others) {
                minimal.push(*g);
            }
        }
        let geom = build_geometry(dim, &minimal)?;
        let max_coord = minimal.iter().map(|g| g.norm()).max().unwrap_or(1);
        let search_bound = 4 * max_coord * minimal.len() as i64;
        Ok(AffineSemigroup {
            dim,
            generators: minimal,
            search_bound,
            conductor: None,
            geom,
        })
    }

    pub fn numerical(generators: &[i64]) -> Result<Self> {
        Self::new(1, generators.iter().map(|&g| Exp::d1(g)))
    }

    pub fn planar(generators: &[(i64, i64)]) -> Result<Self> {
        Self::new(2, generators.iter().map(|&(a, b)| Exp::d2(a, b)))
    }

    pub fn from_spec(spec: &SemigroupSpec) -> Result<Self> {
        let mut s = Self::new(spec.dim, spec.generators.iter().copied())?;
        if let Some(b) = spec.search_bound {
            s = s.with_search_bound(b)?;
        }
        if let Some(c) = spec.conductor {
            s = s.with_conductor(c)?;
        }
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: SemigroupSpec =
            serde_json::from_str(text).map_err(|e| Error::Invalid(format!("semigroup JSON: {e}")))?;
        Self::from_spec(&spec)
    }

    pub fn spec(&self) -> SemigroupSpec {
        SemigroupSpec {
            dim: self.dim,
            generators: self.generators.clone(),
            conductor: self.conductor,
            search_bound: Some(self.search_bound),
        }
    }

    pub fn with_search_bound(mut self, bound: i64) -> Result<Self> {
        if bound <= 0 {
            return Err(Error::Invalid(format!("search bound must be positive, got {bound}")));
        }
        self.search_bound = bound;
        Ok(self)
    }

    pub fn with_conductor(mut self, c: Exp) -> Result<Self> {
        if c.dim() != self.dim {
            return Err(Error::Dimension(c.to_string()));
        }
        if !self.member(&c) {
            return Err(Error::NotInSemigroup(c.to_string()));
        }
        self.conductor = Some(c);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The minimal generating set, sorted.
    pub fn generators(&self) -> &[Exp] {
        &self.generators
    }

    pub fn search_bound(&self) -> i64 {
        self.search_bound
    }

    pub fn conductor(&self) -> Option<Exp> {
        self.conductor
    }

    pub fn zero(&self) -> Exp {
        Exp::zero(self.dim)
    }

    /// Rank of the group `ℤS` (1 or 2).
    pub fn rank(&self) -> usize {
        match self.geom {
            Geometry::Line(_) => 1,
            Geometry::Plane(_) => 2,
        }
    }

    /// Frobenius number of a rank-one semigroup (in units of the group
    /// generator); `-1` when `S` is saturated.
    pub fn frobenius(&self) -> Option<i64> {
        match &self.geom {
            Geometry::Line(l) => Some(l.frobenius),
            Geometry::Plane(_) => None,
        }
    }

    /// The Apéry set with respect to the extreme-ray generators.
    pub fn apery_set(&self) -> Vec<Exp> {
        match &self.geom {
            Geometry::Line(l) => {
                let mut out: Vec<Exp> = l.apery.iter().map(|&t| l.unit.scale(t)).collect();
                out.sort();
                out
            }
            Geometry::Plane(p) => p.apery.clone(),
        }
    }

    /// Whether `z` is an `ℕ`-combination of the generators.
    pub fn member(&self, z: &Exp) -> bool {
        if z.dim() != self.dim {
            return false;
        }
        match &self.geom {
            Geometry::Line(l) => l.coord(z).is_some_and(|t| l.contains_coord(t)),
            Geometry::Plane(p) => p.contains(z),
        }
    }

    /// Membership by enumerating coefficient vectors; exponential in the
    /// worst case, used as an independent route.
    pub fn member_by_enumeration(&self, z: &Exp) -> bool {
        z.dim() == self.dim && combination_exists(z, &self.generators)
    }

    pub fn in_group(&self, z: &Exp) -> bool {
        if z.dim() != self.dim {
            return false;
        }
        match &self.geom {
            Geometry::Line(l) => l.coord(z).is_some(),
            Geometry::Plane(p) => p.in_group(z),
        }
    }

    pub fn check_in_group(&self, z: &Exp) -> Result<()> {
        if z.dim() != self.dim {
            return Err(Error::Dimension(z.to_string()));
        }
        if !self.in_group(z) {
            return Err(Error::NotInGroup(z.to_string()));
        }
        Ok(())
    }

    /// Whether `z ∈ cone(S)`.
    pub fn in_cone(&self, z: &Exp) -> bool {
        match &self.geom {
            Geometry::Line(l) => z.cross(&l.unit) == 0 && z.dot(&l.unit) >= 0,
            Geometry::Plane(p) => p.alpha(z) >= 0 && p.beta(z) >= 0,
        }
    }

    /// Membership in the saturation `S̄ = cone(S) ∩ ℤS`.
    pub fn in_saturation(&self, z: &Exp) -> bool {
        self.in_group(z) && self.in_cone(z)
    }

    /// Group elements of the box `[lo, hi]`, in lexicographic order.
    pub fn group_points(&self, lo: Exp, hi: Exp) -> Vec<Exp> {
        let mut out = Vec::new();
        match self.dim {
            1 => {
                for a in lo.x()..=hi.x() {
                    let e = Exp::d1(a);
                    if self.in_group(&e) {
                        out.push(e);
                    }
                }
            }
            _ => {
                for a in lo.x()..=hi.x() {
                    for b in lo.y()..=hi.y() {
                        let e = Exp::d2(a, b);
                        if self.in_group(&e) {
                            out.push(e);
                        }
                    }
                }
            }
        }
        out
    }

    /// Group elements of `[-r, r]^d`, lexicographic.
    pub fn box_points(&self, radius: i64) -> Vec<Exp> {
        let r = radius.max(0);
        let (lo, hi) = match self.dim {
            1 => (Exp::d1(-r), Exp::d1(r)),
            _ => (Exp::d2(-r, -r), Exp::d2(r, r)),
        };
        self.group_points(lo, hi)
    }

    /// Group elements with `ℓ∞` norm exactly `r`, lexicographic.
    pub fn shell_points(&self, r: i64) -> Vec<Exp> {
        self.box_points(r).into_iter().filter(|e| e.norm() == r).collect()
    }

    /// Checks `c + h ∈ S` for every saturation element `h` in `[0, radius]^d`.
    pub fn verify_conductor(&self, radius: i64) -> Option<ConductorReport> {
        let c = self.conductor?;
        let hi = match self.dim {
            1 => Exp::d1(radius),
            _ => Exp::d2(radius, radius),
        };
        let counterexample = self
            .group_points(self.zero(), hi)
            .into_iter()
            .filter(|h| self.in_cone(h))
            .find(|h| !self.member(&(c + *h)));
        Some(ConductorReport {
            conductor: c,
            radius,
            holds_in_box: counterexample.is_none(),
            counterexample,
            tail_unchecked: true,
        })
    }

    /// Faces of the cone meeting `S`: `{0}`, the extreme rays (always
    /// populated by generators) and the full cone.
    pub fn faces(&self) -> Vec<Face> {
        match &self.geom {
            Geometry::Line(_) => vec![Face::Zero, Face::Full],
            Geometry::Plane(p) => {
                let mut rays = vec![Face::Ray(primitive(p.a1)), Face::Ray(primitive(p.a2))];
                rays.sort();
                let mut out = vec![Face::Zero];
                out.extend(rays);
                out.push(Face::Full);
                out
            }
        }
    }

    /// Smallest face containing `z ∈ cone(S)`.
    pub fn face_of(&self, z: &Exp) -> Face {
        if z.is_zero() {
            return Face::Zero;
        }
        match &self.geom {
            Geometry::Line(_) => Face::Full,
            Geometry::Plane(p) => {
                if p.beta(z) == 0 {
                    Face::Ray(primitive(p.a1))
                } else if p.alpha(z) == 0 {
                    Face::Ray(primitive(p.a2))
                } else {
                    Face::Full
                }
            }
        }
    }

    /// Whether the cone point `z` lies in `face`.
    pub fn in_face(&self, z: &Exp, face: &Face) -> bool {
        self.face_of(z).is_subface_of(face)
    }

    /// Extreme-ray generators `(a1, a2)` of a full-dimensional semigroup.
    pub fn ray_generators(&self) -> Option<(Exp, Exp)> {
        match &self.geom {
            Geometry::Line(_) => None,
            Geometry::Plane(p) => Some((p.a1, p.a2)),
        }
    }
}

impl PartialEq for AffineSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.generators == other.generators
            && self.search_bound == other.search_bound
            && self.conductor == other.conductor
    }
}

fn primitive(v: Exp) -> Exp {
    let g = gcd(v.x(), v.y());
    Exp::d2(v.x() / g, v.y() / g)
}

/// Bounded coefficient enumeration: is `z` an `ℕ`-combination of `gens`?
/// Coefficients are bounded because the generators are nonzero in `ℕ^d`.
fn combination_exists(z: &Exp, gens: &[Exp]) -> bool {
    fn go(rem: Exp, gens: &[Exp]) -> bool {
        if rem.is_zero() {
            return true;
        }
        let Some((g, rest)) = gens.split_first() else {
            return false;
        };
        let mut r = rem;
        loop {
            if go(r, rest) {
                return true;
            }
            r = r - *g;
            if !r.is_nonnegative() {
                return false;
            }
        }
    }
    z.is_nonnegative() && go(*z, gens)
}

fn build_geometry(dim: usize, gens: &[Exp]) -> Result<Geometry> {
    if dim == 1 {
        let ts: Vec<i64> = gens.iter().map(|g| g.x()).collect();
        if ts.iter().fold(0, |acc, &t| gcd(acc, t)) != 1 {
            return Err(Error::InvalidSemigroup(
                "numerical semigroup generators must have gcd 1".into(),
            ));
        }
        return Ok(Geometry::Line(LineGeom::new(Exp::d1(1), &ts)?));
    }
    // extreme rays: every generator lies counter-clockwise of `lo` and
    // clockwise of `hi`
    let lo = *gens
        .iter()
        .find(|g| gens.iter().all(|h| g.cross(h) >= 0))
        .expect("generators in ℕ² have a clockwise-most element");
    let hi = *gens
        .iter()
        .find(|g| gens.iter().all(|h| h.cross(g) >= 0))
        .expect("generators in ℕ² have a counter-clockwise-most element");
    if lo.cross(&hi) == 0 {
        let dir = primitive(lo);
        let ts: Vec<i64> = gens.iter().map(|g| g.dot(&dir) / dir.dot(&dir)).collect();
        let g0 = ts.iter().fold(0, |acc, &t| gcd(acc, t));
        let reduced: Vec<i64> = ts.iter().map(|t| t / g0).collect();
        return Ok(Geometry::Line(LineGeom::new(dir.scale(g0), &reduced)?));
    }
    let on_ray = |d: &Exp| {
        *gens
            .iter()
            .filter(|g| g.cross(d) == 0)
            .min_by_key(|g| (g.x() + g.y(), **g))
            .expect("the ray is spanned by a generator")
    };
    let (a1, a2) = (on_ray(&lo), on_ray(&hi));
    let plane = PlaneGeom::new(a1, a2, gens, |x| combination_exists(x, gens))?;
    Ok(Geometry::Plane(plane))
}
