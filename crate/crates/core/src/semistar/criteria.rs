use serde::Serialize;

use super::{s_delta_member, PrimeSet, TSpectrum};
use crate::semigroup::{
    AffineSemigroup, Certified, Completeness, Exp, Face, FracIdeal, MonomialIdeal, PrincipalRadical,
};
use crate::{Error, Result, MONOMIAL_LAYER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// Whether `rad((D :_D z))` is the radical of a principal ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QrVerdict {
    pub z: Exp,
    pub verdict: Verdict,
    pub colon: MonomialIdeal,
    pub radical: PrincipalRadical,
    pub completeness: Completeness,
    pub note: String,
}

pub fn qr_criterion_for(s: &AffineSemigroup, z: Exp) -> Result<QrVerdict> {
    let colon = s.colon_d(z)?;
    let radical = s.is_radical_of_principal(&colon.value);
    let verdict = Verdict::from_bool(radical.holds);
    let note = match verdict {
        Verdict::Fail => format!(
            "{MONOMIAL_LAYER}: rad((D:_D {z})) is not the radical of a principal ideal, \
             so the space of quotient rings of D is not proconstructible"
        ),
        Verdict::Pass => format!("{MONOMIAL_LAYER}: rad((D:_D {z})) = rad(wD) for the witness w"),
    };
    Ok(QrVerdict {
        z,
        verdict,
        colon: colon.value,
        radical,
        completeness: colon.completeness,
        note,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RayPrimeVerdict {
    pub prime: String,
    pub face: Face,
    pub verdict: Verdict,
    pub witness: Option<Exp>,
}

/// Height-one monomial primes as radicals of principal ideals, and
/// whether `D` is the intersection of the localizations at them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cor45Report {
    pub applicable: bool,
    pub rays: Vec<RayPrimeVerdict>,
    pub radius: i64,
    /// `D_{P₁} ∩ D_{P₂}` and `D` have the same monomials in the box.
    pub intersection_is_d: Option<bool>,
    pub counterexample: Option<Exp>,
    pub completeness: Completeness,
    pub note: String,
}

pub fn cor45_monomial_report(s: &AffineSemigroup, radius: i64) -> Result<Cor45Report> {
    let mut ray_faces: Vec<Face> = s.faces().into_iter().filter(|f| matches!(f, Face::Ray(_))).collect();
    ray_faces.sort_by_key(|f| f.prime_label());
    if ray_faces.is_empty() {
        return Ok(Cor45Report {
            applicable: false,
            rays: Vec::new(),
            radius,
            intersection_is_d: None,
            counterexample: None,
            completeness: Completeness::Certified,
            note: "not applicable: the cone has no ray faces, so there are no height-one monomial primes".into(),
        });
    }
    let rays = ray_faces
        .iter()
        .map(|f| {
            let p = s.prime_ideal(f).expect("ray primes are nonzero");
            let r = s.is_radical_of_principal(&p);
            RayPrimeVerdict {
                prime: f.prime_label(),
                face: *f,
                verdict: Verdict::from_bool(r.holds),
                witness: r.witness,
            }
        })
        .collect();
    let delta = PrimeSet::new(s, ray_faces)?;
    let d = FracIdeal::unit(s);
    let mut completeness = Completeness::Certified;
    let mut counterexample = None;
    for z in s.box_points(radius) {
        let m = s_delta_member(s, &d, &delta, z)?;
        completeness = completeness.and(m.completeness);
        if m.value != s.member(&z) {
            counterexample = Some(z);
            break;
        }
    }
    Ok(Cor45Report {
        applicable: true,
        rays,
        radius,
        intersection_is_d: Some(counterexample.is_none()),
        counterexample,
        completeness,
        note: MONOMIAL_LAYER.into(),
    })
}

fn check_t_down_set(s: &AffineSemigroup, tspec: &TSpectrum, delta: &PrimeSet) -> Result<()> {
    if delta.is_empty() {
        return Err(Error::InvalidPrimeSet("Δ is empty".into()));
    }
    if !delta.is_subset(&tspec.primes) {
        return Err(Error::InvalidPrimeSet(format!(
            "{:?} is not contained in the t-spectrum",
            delta.labels()
        )));
    }
    if delta.down_closure(s).intersection(&tspec.primes) != *delta {
        return Err(Error::InvalidPrimeSet(format!(
            "{:?} is not a down-set of the t-spectrum",
            delta.labels()
        )));
    }
    Ok(())
}

/// `z ∈ π_t(Δ) = D^{s_Δ}` for a nonempty down-set `Δ` of the t-spectrum.
pub fn pi_t_member(s: &AffineSemigroup, tspec: &TSpectrum, delta: &PrimeSet, z: Exp) -> Result<Certified<bool>> {
    check_t_down_set(s, tspec, delta)?;
    s_delta_member(s, &FracIdeal::unit(s), delta, z)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Distinction {
    /// `z` lies in `π_t(Δ)` (if `in_first`) or in `π_t(Λ)`, not both.
    Witness { z: Exp, in_first: bool, radius: i64 },
    /// No monomial witness within `radius`; not a proof of equality.
    Indeterminate { radius: i64 },
}

/// Searches monomials by increasing `ℓ∞` norm, in stages of radius `B`,
/// `2B`, `4B`, `8B`, for an element of exactly one of `π_t(Δ)`, `π_t(Λ)`.
pub fn pi_t_distinguish(
    s: &AffineSemigroup,
    tspec: &TSpectrum,
    delta: &PrimeSet,
    lambda: &PrimeSet,
) -> Result<Distinction> {
    if delta == lambda {
        return Err(Error::InvalidPrimeSet("Δ and Λ coincide".into()));
    }
    check_t_down_set(s, tspec, delta)?;
    check_t_down_set(s, tspec, lambda)?;
    let b = s.search_bound();
    let stages = [b, 2 * b, 4 * b, 8 * b];
    let d = FracIdeal::unit(s);
    let mut r = 0;
    for stage in stages {
        while r <= stage {
            for z in s.shell_points(r) {
                let a = s_delta_member(s, &d, delta, z)?.value;
                let l = s_delta_member(s, &d, lambda, z)?.value;
                if a != l {
                    return Ok(Distinction::Witness {
                        z,
                        in_first: a,
                        radius: stage,
                    });
                }
            }
            r += 1;
        }
    }
    Ok(Distinction::Indeterminate { radius: 8 * b })
}

/// `D^{s_Δ}` against `D^{s_Λ}`, `Λ = Δ↓ ∩ t-spectrum`, on a box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop58Report {
    pub delta: PrimeSet,
    pub lambda: PrimeSet,
    pub radius: i64,
    pub points: usize,
    pub agree: bool,
    pub counterexample: Option<Exp>,
    pub completeness: Completeness,
}

pub fn check_prop_58(s: &AffineSemigroup, tspec: &TSpectrum, delta: &PrimeSet, radius: i64) -> Result<Prop58Report> {
    if delta.is_empty() {
        return Err(Error::InvalidPrimeSet("Δ is empty".into()));
    }
    let lambda = delta.down_closure(s).intersection(&tspec.primes);
    if lambda.is_empty() {
        return Err(Error::InvalidPrimeSet("Δ meets no t-prime".into()));
    }
    let d = FracIdeal::unit(s);
    let mut completeness = Completeness::Certified;
    let mut counterexample = None;
    let points = s.box_points(radius);
    for z in &points {
        let a = s_delta_member(s, &d, delta, *z)?;
        let b = s_delta_member(s, &d, &lambda, *z)?;
        completeness = completeness.and(a.completeness).and(b.completeness);
        if a.value != b.value {
            counterexample = Some(*z);
            break;
        }
    }
    Ok(Prop58Report {
        delta: delta.clone(),
        lambda,
        radius,
        points: points.len(),
        agree: counterexample.is_none(),
        counterexample,
        completeness,
    })
}

/// `z ∈ (D ∖ 𝒬)⁻¹ D` for the semigroup prime `𝒬 = ⋃ Q`: some generator
/// of `(D :_D z)` avoids every `Q`.
pub fn lambda_qr_member(s: &AffineSemigroup, q: &PrimeSet, z: Exp) -> Result<Certified<bool>> {
    if q.is_empty() || !q.is_antichain() {
        return Err(Error::InvalidPrimeSet(
            "a semigroup prime is a nonempty antichain".into(),
        ));
    }
    let colon = s.colon_d(z)?;
    Ok(colon.map(|c| c.generators().iter().any(|g| q.faces().iter().all(|f| s.in_face(g, f)))))
}
