//! Independent brute-force oracles over boxes of exponents.
#![allow(dead_code)]

use std::collections::BTreeSet;

use overring_core::semigroup::{AffineSemigroup, Exp, Face, FracIdeal, MonomialIdeal};

pub fn corpus() -> Vec<(&'static str, AffineSemigroup)> {
    vec![
        ("<3,5>", AffineSemigroup::numerical(&[3, 5]).unwrap()),
        ("<2,3>", AffineSemigroup::numerical(&[2, 3]).unwrap()),
        ("<4,6,7>", AffineSemigroup::numerical(&[4, 6, 7]).unwrap()),
        ("N^2", AffineSemigroup::planar(&[(1, 0), (0, 1)]).unwrap()),
        (
            "<(1,0),(1,1),(1,2)>",
            AffineSemigroup::planar(&[(1, 0), (1, 1), (1, 2)]).unwrap(),
        ),
        (
            "S2",
            AffineSemigroup::planar(&[(2, 0), (3, 0), (1, 1), (0, 1)]).unwrap(),
        ),
    ]
}

pub fn radius_for(s: &AffineSemigroup) -> i64 {
    if s.dim() == 1 {
        20
    } else {
        12
    }
}

/// Reachability table of `S ∩ [0, m]^d`, filled by dynamic programming
/// over the generators as given (no minimalization, no Apéry sets).
pub struct DpOracle {
    dim: usize,
    m: i64,
    table: Vec<bool>,
}

impl DpOracle {
    pub fn new(dim: usize, gens: &[Exp], m: i64) -> Self {
        let side = (m + 1) as usize;
        let size = if dim == 1 { side } else { side * side };
        let mut table = vec![false; size];
        table[0] = true;
        let idx = |a: i64, b: i64| {
            if dim == 1 {
                a as usize
            } else {
                a as usize * side + b as usize
            }
        };
        // coordinates in increasing lexicographic order: predecessors first
        for a in 0..=m {
            for b in 0..=(if dim == 1 { 0 } else { m }) {
                if a == 0 && b == 0 {
                    continue;
                }
                let reach = gens.iter().any(|g| {
                    let (pa, pb) = (a - g.x(), b - if dim == 1 { 0 } else { g.y() });
                    pa >= 0 && pb >= 0 && table[idx(pa, pb)]
                });
                table[idx(a, b)] = reach;
            }
        }
        DpOracle { dim, m, table }
    }

    pub fn for_semigroup(s: &AffineSemigroup, m: i64) -> Self {
        Self::new(s.dim(), s.generators(), m)
    }

    pub fn member(&self, z: &Exp) -> bool {
        if !z.is_nonnegative() {
            return false;
        }
        assert!(z.norm() <= self.m, "{z} outside the DP table of side {}", self.m);
        let side = (self.m + 1) as usize;
        let i = if self.dim == 1 {
            z.x() as usize
        } else {
            z.x() as usize * side + z.y() as usize
        };
        self.table[i]
    }
}

pub fn box_points(dim: usize, lo: i64, hi: i64) -> Vec<Exp> {
    let mut out = Vec::new();
    for a in lo..=hi {
        if dim == 1 {
            out.push(Exp::d1(a));
        } else {
            for b in lo..=hi {
                out.push(Exp::d2(a, b));
            }
        }
    }
    out
}

/// Points of the box lying in `⋃ (g + S)`.
pub fn generated(dp: &DpOracle, dim: usize, gens: &[Exp], lo: i64, hi: i64) -> BTreeSet<Exp> {
    box_points(dim, lo, hi)
        .into_iter()
        .filter(|x| gens.iter().any(|g| dp.member(&(*x - *g))))
        .collect()
}

/// `{s ∈ S ∩ [0, r]^d : s + z ∈ I}`.
pub fn colon_set(dp: &DpOracle, dim: usize, ideal: &[Exp], z: Exp, r: i64) -> BTreeSet<Exp> {
    box_points(dim, 0, r)
        .into_iter()
        .filter(|s| dp.member(s) && ideal.iter().any(|g| dp.member(&(*s + z - *g))))
        .collect()
}

/// `{z ∈ [-r, r]^d : z + j ∈ S for all generators j}`.
pub fn fractional_colon_set(dp: &DpOracle, dim: usize, j: &[Exp], r: i64) -> BTreeSet<Exp> {
    box_points(dim, -r, r)
        .into_iter()
        .filter(|z| j.iter().all(|g| dp.member(&(*z + *g))))
        .collect()
}

/// `rad(I) ∩ [0, r]^d` from the definition: some multiple `k·m` lies in `I`.
pub fn radical_set(dp: &DpOracle, dim: usize, ideal: &[Exp], r: i64, kmax: i64) -> BTreeSet<Exp> {
    box_points(dim, 0, r)
        .into_iter()
        .filter(|m| dp.member(m))
        .filter(|m| (1..=kmax).any(|k| ideal.iter().any(|g| dp.member(&(m.scale(k) - *g)))))
        .collect()
}

/// `⋂_{F ∈ class} P_F ∩ [0, r]^d`.
pub fn radical_from_class(s: &AffineSemigroup, dp: &DpOracle, class: &[Face], r: i64) -> BTreeSet<Exp> {
    box_points(s.dim(), 0, r)
        .into_iter()
        .filter(|m| dp.member(m) && class.iter().all(|f| !s.in_face(m, f)))
        .collect()
}

/// A family of test ideals: the maximal ideal, the monomial primes,
/// principal ideals on generators and sums of two generators.
pub fn sample_ideals(s: &AffineSemigroup) -> Vec<MonomialIdeal> {
    let mut out = vec![MonomialIdeal::maximal(s), MonomialIdeal::unit(s)];
    for f in s.faces() {
        if let Some(p) = s.prime_ideal(&f) {
            out.push(p);
        }
    }
    let gens = s.generators();
    for (i, g) in gens.iter().enumerate() {
        out.push(MonomialIdeal::new(s, [*g]).unwrap());
        out.push(MonomialIdeal::new(s, [g.scale(2)]).unwrap());
        for h in &gens[i + 1..] {
            out.push(MonomialIdeal::new(s, [*g + *h]).unwrap());
            out.push(MonomialIdeal::new(s, [g.scale(2), h.scale(3)]).unwrap());
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn sample_fractional(s: &AffineSemigroup) -> Vec<FracIdeal> {
    let mut out: Vec<FracIdeal> = sample_ideals(s).into_iter().map(FracIdeal::from).collect();
    let gens = s.generators();
    for g in gens {
        out.push(FracIdeal::principal(s, -*g).unwrap());
    }
    if let [a, .., b] = gens {
        out.push(FracIdeal::new(s, [*a - *b, *b]).unwrap());
    }
    out.sort();
    out.dedup();
    out
}
