//! Semistar operations on the monomial layer of `k[S]`.
//!
//! A set `Δ` of monomial primes gives the spectral operation `s_Δ`, with
//! `z ∈ I^{s_Δ}` iff `(I :_D z) ⊄ P` for every `P ∈ Δ`. On top of it sit the
//! `v`- and `t`-operations, the brute-force `⋆̃` arm, and the decision
//! procedures for quotient rings and sublocalizations.

mod closure;
mod criteria;
mod tilde;

use serde::{Serialize, Serializer};

use crate::semigroup::{AffineSemigroup, Certified, Exp, Face, FracIdeal};
use crate::{Error, Result};

pub use closure::{t_spectrum_monomial, v_closure, TSpectrum};
pub use criteria::{
    check_prop_58, cor45_monomial_report, lambda_qr_member, pi_t_distinguish, pi_t_member, qr_criterion_for,
    Cor45Report, Distinction, Prop58Report, QrVerdict, RayPrimeVerdict, Verdict,
};
pub use tilde::{check_lemma_55, tilde_member, Lemma55Report, TildeOutcome};

/// A set `Δ` of monomial primes of one semigroup, stored by face and
/// sorted by prime label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeSet {
    faces: Vec<Face>,
}

impl PrimeSet {
    pub fn new(s: &AffineSemigroup, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        let known = s.faces();
        let mut faces: Vec<Face> = faces.into_iter().collect();
        if let Some(f) = faces.iter().find(|f| !known.contains(f)) {
            return Err(Error::InvalidPrimeSet(format!("{f} is not a face of the semigroup")));
        }
        faces.sort_by_key(|f| f.prime_label());
        faces.dedup();
        Ok(PrimeSet { faces })
    }

    /// Parses prime labels such as `(0)`, `P_x`, `m`.
    pub fn from_labels<L: AsRef<str>>(s: &AffineSemigroup, labels: impl IntoIterator<Item = L>) -> Result<Self> {
        let faces = labels
            .into_iter()
            .map(|l| s.face_of_prime(l.as_ref().trim()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(s, faces)
    }

    /// Every monomial prime of `s`.
    pub fn all(s: &AffineSemigroup) -> Self {
        Self::new(s, s.faces()).expect("faces of s")
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn labels(&self) -> Vec<String> {
        self.faces.iter().map(|f| f.prime_label()).collect()
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.faces.contains(face)
    }

    /// Primes contained in some member: `P_G ⊆ P_F` iff `F ⊆ G`.
    pub fn down_closure(&self, s: &AffineSemigroup) -> PrimeSet {
        let faces = s
            .faces()
            .into_iter()
            .filter(|g| self.faces.iter().any(|f| f.is_subface_of(g)));
        Self::new(s, faces).expect("faces of s")
    }

    pub fn is_down_set(&self, s: &AffineSemigroup) -> bool {
        self.down_closure(s) == *self
    }

    pub fn intersection(&self, other: &PrimeSet) -> PrimeSet {
        PrimeSet {
            faces: self.faces.iter().filter(|f| other.contains(f)).copied().collect(),
        }
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.faces.iter().all(|f| other.contains(f))
    }

    /// No two members comparable under inclusion.
    pub fn is_antichain(&self) -> bool {
        self.faces
            .iter()
            .all(|f| self.faces.iter().all(|g| f == g || !f.is_subface_of(g)))
    }
}

impl Serialize for PrimeSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.labels())
    }
}

/// `z ∈ D_P`: `(D :_D z) ⊄ P`, i.e. some colon generator lies in the face.
pub fn in_localization(s: &AffineSemigroup, z: Exp, prime: &Face) -> Result<Certified<bool>> {
    let colon = s.colon_d(z)?;
    Ok(colon.map(|c| c.generators().iter().any(|g| s.in_face(g, prime))))
}

/// `z ∈ I^{s_Δ} = ⋂_{P ∈ Δ} I D_P`.
pub fn s_delta_member(
    s: &AffineSemigroup,
    ideal: &impl AsRef<FracIdeal>,
    delta: &PrimeSet,
    z: Exp,
) -> Result<Certified<bool>> {
    if delta.is_empty() {
        return Err(Error::InvalidPrimeSet("Δ is empty".into()));
    }
    let colon = s.colon_by_element(ideal, z)?;
    Ok(colon.map(|c| {
        delta
            .faces()
            .iter()
            .all(|p| c.generators().iter().any(|g| s.in_face(g, p)))
    }))
}

/// Where an [`OverringOracle`] comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "primes", rename_all = "kebab-case")]
pub enum Provenance {
    /// `D_P`.
    Localization(PrimeSet),
    /// `D^{s_Δ}`.
    SDelta(PrimeSet),
    /// `(D ∖ 𝒬)⁻¹ D` for the semigroup prime `𝒬 = ⋃ Q`.
    LambdaQr(PrimeSet),
}

/// Membership of monomials in an overring of `D`.
#[derive(Clone, Debug)]
pub struct OverringOracle<'a> {
    s: &'a AffineSemigroup,
    provenance: Provenance,
}

impl<'a> OverringOracle<'a> {
    pub fn localization(s: &'a AffineSemigroup, prime: Face) -> Result<Self> {
        Ok(OverringOracle {
            s,
            provenance: Provenance::Localization(PrimeSet::new(s, [prime])?),
        })
    }

    pub fn s_delta(s: &'a AffineSemigroup, delta: PrimeSet) -> Result<Self> {
        if delta.is_empty() {
            return Err(Error::InvalidPrimeSet("Δ is empty".into()));
        }
        Ok(OverringOracle {
            s,
            provenance: Provenance::SDelta(delta),
        })
    }

    pub fn lambda_qr(s: &'a AffineSemigroup, q: PrimeSet) -> Result<Self> {
        if q.is_empty() || !q.is_antichain() {
            return Err(Error::InvalidPrimeSet(
                "a semigroup prime is a nonempty antichain".into(),
            ));
        }
        Ok(OverringOracle {
            s,
            provenance: Provenance::LambdaQr(q),
        })
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn member(&self, z: Exp) -> Result<Certified<bool>> {
        match &self.provenance {
            Provenance::Localization(p) => in_localization(self.s, z, &p.faces()[0]),
            Provenance::SDelta(d) => s_delta_member(self.s, &FracIdeal::unit(self.s), d, z),
            Provenance::LambdaQr(q) => lambda_qr_member(self.s, q, z),
        }
    }

    /// A boxed member `z` and generator `g` with `z + g` not a member; the
    /// oracle of a `D`-module has none.
    pub fn module_violation(&self, radius: i64) -> Result<Option<(Exp, Exp)>> {
        for z in self.s.box_points(radius) {
            if !self.member(z)?.value {
                continue;
            }
            for g in self.s.generators() {
                if !self.member(z + *g)?.value {
                    return Ok(Some((z, *g)));
                }
            }
        }
        Ok(None)
    }
}
