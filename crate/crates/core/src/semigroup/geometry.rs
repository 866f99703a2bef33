//! Coordinates adapted to the cone of an affine semigroup, and its Apéry
//! set with respect to the extreme-ray generators.
//!
//! With `N` the free monoid on the extreme-ray generators, every element of
//! `S` is `w + n` for some `w` in the finite Apéry set `Ap = {s ∈ S :
//! s − aᵢ ∉ S}` and `n ∈ N`. This gives exact membership and, for any
//! intersection of translates of `S`, an explicit corner beyond which no
//! minimal generator can lie.

use std::collections::{BinaryHeap, HashSet};

use super::Exp;
use crate::{Error, Result};

/// Largest intermediate candidate set accepted while computing the Apéry set.
const APERY_CANDIDATE_CAP: usize = 1_000_000;

#[derive(Clone, Debug)]
pub(crate) enum Geometry {
    Line(LineGeom),
    Plane(PlaneGeom),
}

/// Rank-one semigroups: `S = {t·u : t ∈ T}` with `T ⊆ ℕ` numerical.
#[derive(Clone, Debug)]
pub(crate) struct LineGeom {
    /// Generator of the group `ℤS`.
    pub unit: Exp,
    /// Smallest generator of `T`, the modulus of the Apéry set.
    pub modulus: i64,
    /// `apery[r]` is the least element of `T` congruent to `r`.
    pub apery: Vec<i64>,
    pub frobenius: i64,
}

impl LineGeom {
    pub fn new(unit: Exp, numerical_gens: &[i64]) -> Result<Self> {
        let modulus = *numerical_gens.iter().min().expect("nonempty generators");
        let m = modulus as usize;
        // shortest paths on residues mod `modulus`
        let mut dist = vec![i64::MAX; m];
        dist[0] = 0;
        let mut heap = BinaryHeap::from([std::cmp::Reverse((0i64, 0usize))]);
        while let Some(std::cmp::Reverse((d, r))) = heap.pop() {
            if d > dist[r] {
                continue;
            }
            for &g in numerical_gens {
                let nr = (r + g as usize) % m;
                if d + g < dist[nr] {
                    dist[nr] = d + g;
                    heap.push(std::cmp::Reverse((d + g, nr)));
                }
            }
        }
        if dist.contains(&i64::MAX) {
            return Err(Error::InvalidSemigroup("generators have a common factor".into()));
        }
        let frobenius = dist.iter().max().copied().unwrap_or(0) - modulus;
        Ok(LineGeom {
            unit,
            modulus,
            apery: dist,
            frobenius,
        })
    }

    /// Coordinate `t` with `x = t·unit`, if `x` is in the group.
    pub fn coord(&self, x: &Exp) -> Option<i64> {
        if x.cross(&self.unit) != 0 {
            return None;
        }
        let uu = self.unit.dot(&self.unit);
        let xu = x.dot(&self.unit);
        (xu % uu == 0).then_some(xu / uu)
    }

    pub fn contains_coord(&self, t: i64) -> bool {
        t >= 0 && t >= self.apery[(t % self.modulus) as usize]
    }

    pub fn max_apery(&self) -> i64 {
        self.frobenius + self.modulus
    }
}

/// Full-dimensional semigroups in `ℕ²`, with extreme rays spanned by `a1`
/// and `a2` (`a1 × a2 > 0`). `alpha(x) = x × a2` and `beta(x) = a1 × x` are
/// the coordinates of `x` in the basis `a1, a2`, scaled by `det = a1 × a2`.
#[derive(Clone, Debug)]
pub(crate) struct PlaneGeom {
    pub a1: Exp,
    pub a2: Exp,
    pub det: i64,
    pub apery: Vec<Exp>,
    apery_coords: Vec<(i64, i64)>,
}

impl PlaneGeom {
    /// `gens` must be a generating set with `a1`, `a2` on the two extreme
    /// rays; `member` decides membership without using the Apéry set.
    pub fn new(a1: Exp, a2: Exp, gens: &[Exp], member: impl Fn(&Exp) -> bool) -> Result<Self> {
        let det = a1.cross(&a2);
        debug_assert!(det > 0);
        let alpha = |x: &Exp| x.cross(&a2);
        let beta = |x: &Exp| a1.cross(x);
        let mut candidates: HashSet<Exp> = HashSet::from([Exp::zero(2)]);
        for g in gens.iter().filter(|g| **g != a1 && **g != a2) {
            // smallest k with k·g ∈ ℕa1 + ℕa2
            let order = |c: i64| det / gcd(det, c);
            let k = lcm(order(alpha(g)), order(beta(g)));
            let mut next = HashSet::with_capacity(candidates.len() * k as usize);
            for c in &candidates {
                for j in 0..k {
                    next.insert(*c + g.scale(j));
                }
            }
            if next.len() > APERY_CANDIDATE_CAP {
                return Err(Error::InvalidSemigroup(format!(
                    "Apéry candidate set exceeds {APERY_CANDIDATE_CAP} elements"
                )));
            }
            candidates = next;
        }
        let mut apery: Vec<Exp> = candidates
            .into_iter()
            .filter(|c| !member(&(*c - a1)) && !member(&(*c - a2)))
            .collect();
        apery.sort();
        let apery_coords = apery.iter().map(|w| (alpha(w), beta(w))).collect();
        Ok(PlaneGeom {
            a1,
            a2,
            det,
            apery,
            apery_coords,
        })
    }

    pub fn alpha(&self, x: &Exp) -> i64 {
        x.cross(&self.a2)
    }

    pub fn beta(&self, x: &Exp) -> i64 {
        self.a1.cross(x)
    }

    pub fn contains(&self, x: &Exp) -> bool {
        let (a, b) = (self.alpha(x), self.beta(x));
        if a < 0 || b < 0 {
            return false;
        }
        self.apery_coords.iter().any(|&(wa, wb)| {
            let (da, db) = (a - wa, b - wb);
            da >= 0 && db >= 0 && da % self.det == 0 && db % self.det == 0
        })
    }

    pub fn in_group(&self, x: &Exp) -> bool {
        let (a, b) = (self.alpha(x), self.beta(x));
        self.apery_coords
            .iter()
            .any(|&(wa, wb)| (a - wa).rem_euclid(self.det) == 0 && (b - wb).rem_euclid(self.det) == 0)
    }

    pub fn max_apery_coords(&self) -> (i64, i64) {
        let a = self.apery_coords.iter().map(|c| c.0).max().unwrap_or(0);
        let b = self.apery_coords.iter().map(|c| c.1).max().unwrap_or(0);
        (a, b)
    }

    /// Smallest box of `ℤ²` containing every `x` with scaled coordinates in
    /// `[alo, ahi] × [blo, bhi]`.
    pub fn bounding_box(&self, (alo, ahi): (i64, i64), (blo, bhi): (i64, i64)) -> (Exp, Exp) {
        let lo = |i: usize| {
            let c = |a: &Exp| if i == 0 { a.x() } else { a.y() };
            (alo * c(&self.a1) + blo * c(&self.a2)).div_euclid(self.det)
        };
        let hi = |i: usize| {
            let c = |a: &Exp| if i == 0 { a.x() } else { a.y() };
            ceil_div(ahi * c(&self.a1) + bhi * c(&self.a2), self.det)
        };
        (Exp::d2(lo(0), lo(1)), Exp::d2(hi(0), hi(1)))
    }
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}
