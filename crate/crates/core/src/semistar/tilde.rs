use std::collections::BTreeMap;

use serde::Serialize;

use super::{s_delta_member, PrimeSet};
use crate::semigroup::{AffineSemigroup, Completeness, Exp, FracIdeal};
use crate::{Error, Result};

/// Largest generator count tried for `E`.
const MAX_E_GENERATORS: usize = 3;

/// Result of the bounded search for `E` in the `⋆̃` arm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum TildeOutcome {
    /// `E` generated by these monomials has `1 ∈ E^{s_Δ}` and `z + E ⊆ I`.
    Found {
        e: Vec<Exp>,
    },
    NotFoundWithinBound {
        radius: i64,
    },
}

impl TildeOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, TildeOutcome::Found { .. })
    }
}

/// Searches for a monomial ideal `E ⊆ D` with at most three generators in
/// `[0, radius]^d` such that `z + E ⊆ I` and `E ⊄ P` for every `P ∈ Δ`.
pub fn tilde_member(
    s: &AffineSemigroup,
    ideal: &impl AsRef<FracIdeal>,
    delta: &PrimeSet,
    z: Exp,
    radius: i64,
) -> Result<TildeOutcome> {
    if delta.is_empty() {
        return Err(Error::InvalidPrimeSet("Δ is empty".into()));
    }
    s.check_in_group(&z)?;
    let ideal = ideal.as_ref();
    let full: u32 = (1 << delta.len()) - 1;
    // smallest candidate for each set of avoided primes
    let mut by_mask: BTreeMap<u32, Exp> = BTreeMap::new();
    for e in s.box_points(radius) {
        if !s.member(&e) || !ideal.contains(s, &(z + e)) {
            continue;
        }
        let mask = delta
            .faces()
            .iter()
            .enumerate()
            .filter(|(_, p)| !s.prime_contains(p, &e))
            .fold(0u32, |acc, (i, _)| acc | (1 << i));
        if mask != 0 {
            by_mask.entry(mask).or_insert(e);
        }
    }
    let cands: Vec<(u32, Exp)> = by_mask.into_iter().collect();
    let n = cands.len();
    for k in 1..=MAX_E_GENERATORS.min(n) {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if idx.iter().fold(0, |acc, &i| acc | cands[i].0) == full {
                let mut e: Vec<Exp> = idx.iter().map(|&i| cands[i].1).collect();
                e.sort();
                return Ok(TildeOutcome::Found { e });
            }
            // next k-subset in lexicographic order
            let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
                break;
            };
            idx[pos] += 1;
            for q in pos + 1..k {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
    Ok(TildeOutcome::NotFoundWithinBound { radius })
}

/// Comparison of `s_Δ` with the `⋆̃` arm on a box of monomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma55Report {
    pub delta: PrimeSet,
    pub radius: i64,
    pub e_radius: i64,
    pub points: usize,
    pub agreements: usize,
    /// `⋆̃` found `E` although `z ∉ I^{s_Δ}`.
    pub disagreements: Vec<Exp>,
    /// `z ∈ I^{s_Δ}` but no `E` within the bound.
    pub not_found_within_bound: Vec<Exp>,
    pub completeness: Completeness,
}

impl Lemma55Report {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Checks `I^{s_Δ} = I^{s̃_Δ}` on the monomials of `[-radius, radius]^d`,
/// searching `E` in twice that radius.
pub fn check_lemma_55(
    s: &AffineSemigroup,
    delta: &PrimeSet,
    ideal: &impl AsRef<FracIdeal>,
    radius: i64,
) -> Result<Lemma55Report> {
    let e_radius = 2 * radius;
    let mut report = Lemma55Report {
        delta: delta.clone(),
        radius,
        e_radius,
        points: 0,
        agreements: 0,
        disagreements: Vec::new(),
        not_found_within_bound: Vec::new(),
        completeness: Completeness::Certified,
    };
    for z in s.box_points(radius) {
        let sd = s_delta_member(s, ideal, delta, z)?;
        report.completeness = report.completeness.and(sd.completeness);
        let tilde = tilde_member(s, ideal, delta, z, e_radius)?;
        report.points += 1;
        match (sd.value, tilde.is_found()) {
            (false, true) => report.disagreements.push(z),
            (true, false) => report.not_found_within_bound.push(z),
            _ => report.agreements += 1,
        }
    }
    Ok(report)
}
