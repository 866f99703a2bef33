//! Semigroup primes (unions of prime ideals) and the Zariski topology on
//! them, for `ℤ/n` and for the monomial primes of `k[S]`.
//!
//! A semigroup prime is stored as the antichain of primes whose union it
//! is. Over `ℤ/n` the subbasic opens `D(x) = {𝒬 : x ∉ 𝒬}` range over every
//! residue. Over `k[S]` only monomials `x` are used, which can leave points
//! that no subbasic open separates; such pairs are reported. The ring-level
//! order `𝒬 ⊆ 𝒬'` is decided by prime avoidance in both cases.

use serde::Serialize;

use crate::semigroup::{AffineSemigroup, Exp, Face};
use crate::semistar::{lambda_qr_member, PrimeSet};
use crate::topo::{is_embedding, FinitePoset, FiniteSpace, PointSet, SpectralMapModel, SpectralReport};
use crate::{Error, Result, MONOMIAL_LAYER};

/// Largest modulus accepted by [`scal_zn`].
pub const MAX_MODULUS: u64 = 1 << 16;

/// A nonempty antichain of primes of the base spectrum, denoting their
/// union.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SemigroupPrime {
    primes: Vec<String>,
    #[serde(skip)]
    members: PointSet,
}

impl SemigroupPrime {
    pub fn new(spectrum: &FinitePoset, members: PointSet) -> Result<Self> {
        if members.is_empty() || !spectrum.is_antichain(&members) {
            return Err(Error::InvalidPrimeSet(format!(
                "{:?} is not a nonempty antichain",
                spectrum.set_labels(&members)
            )));
        }
        Ok(SemigroupPrime {
            primes: spectrum.set_labels(&members),
            members,
        })
    }

    pub fn primes(&self) -> &[String] {
        &self.primes
    }

    /// Indices into the spectrum.
    pub fn members(&self) -> &PointSet {
        &self.members
    }

    pub fn label(&self) -> String {
        format!("{{{}}}", self.primes.join(","))
    }
}

#[derive(Clone, Debug)]
enum Base {
    Zn { n: u64, primes: Vec<u64> },
    Monomial { s: AffineSemigroup, faces: Vec<Face> },
}

#[derive(Clone, Debug)]
pub struct ScalSpace {
    base: Base,
    spectrum: FinitePoset,
    points: Vec<SemigroupPrime>,
    /// Ring elements indexing the subbasis, as text.
    elements: Vec<String>,
    subbasis: Vec<PointSet>,
    space: FiniteSpace,
    order: FinitePoset,
}

/// JSON form of a [`ScalSpace`].
#[derive(Clone, Debug, Serialize)]
pub struct ScalDump {
    pub base: String,
    pub spectrum: Vec<String>,
    pub points: Vec<String>,
    pub incidence: Vec<Incidence>,
    pub indistinguishable_pairs: Vec<(String, String)>,
    pub spectral: bool,
    pub note: String,
}

/// The points of `D_scal(element)`.
#[derive(Clone, Debug, Serialize)]
pub struct Incidence {
    pub element: String,
    pub points: Vec<String>,
}

/// Outcome of checking one point of `𝒮cal(ℤ/n)` against the definition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub point: String,
    pub absorbs_multiples: bool,
    pub complement_multiplicative: bool,
    pub proper: bool,
    pub avoids_units: bool,
}

impl AxiomCheck {
    pub fn holds(&self) -> bool {
        self.absorbs_multiples && self.complement_multiplicative && self.proper && self.avoids_units
    }
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Nonempty antichains of `poset`, sorted by label.
fn antichains(poset: &FinitePoset) -> Result<Vec<SemigroupPrime>> {
    let n = poset.len();
    if n > 16 {
        return Err(Error::SizeLimit { size: n, limit: 16 });
    }
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let set = PointSet::from_indices(n, (0..n).filter(|i| mask & (1 << i) != 0));
        if poset.is_antichain(&set) {
            out.push(SemigroupPrime::new(poset, set)?);
        }
    }
    out.sort_by_key(|p| p.label());
    Ok(out)
}

/// `𝒬 ⊆ 𝒬'` for unions of primes: by prime avoidance, every member of `𝒬`
/// lies in some member of `𝒬'`.
fn union_leq(spectrum: &FinitePoset, a: &SemigroupPrime, b: &SemigroupPrime) -> bool {
    a.members.iter().all(|p| b.members.iter().any(|q| spectrum.leq(p, q)))
}

fn assemble(
    base: Base,
    spectrum: FinitePoset,
    points: Vec<SemigroupPrime>,
    rows: Vec<(String, PointSet)>,
) -> Result<ScalSpace> {
    let labels: Vec<String> = points.iter().map(SemigroupPrime::label).collect();
    let (elements, subbasis): (Vec<String>, Vec<PointSet>) = rows.into_iter().unzip();
    let space = FiniteSpace::generated_by(labels.clone(), subbasis.clone())?;
    let order = FinitePoset::from_order(labels, |a, b| union_leq(&spectrum, &points[a], &points[b]))?;
    Ok(ScalSpace {
        base,
        spectrum,
        points,
        elements,
        subbasis,
        space,
        order,
    })
}

/// `𝒮cal(ℤ/n)`: the spectrum is the antichain of `(p)`, `p | n`.
pub fn scal_zn(n: u64) -> Result<ScalSpace> {
    if n < 2 {
        return Err(Error::Modulus(n));
    }
    if n > MAX_MODULUS {
        return Err(Error::SizeLimit {
            size: n as usize,
            limit: MAX_MODULUS as usize,
        });
    }
    let primes = prime_divisors(n);
    let names: Vec<String> = primes.iter().map(|p| format!("({p})")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let spectrum = FinitePoset::antichain(&refs);
    // spectrum labels are sorted as strings; keep the primes aligned
    let primes: Vec<u64> = spectrum
        .labels()
        .iter()
        .map(|l| l.trim_matches(['(', ')']).parse().expect("numeric label"))
        .collect();
    let points = antichains(&spectrum)?;
    let contains = |pt: &SemigroupPrime, x: u64| pt.members.iter().any(|i| x.is_multiple_of(primes[i]));
    let rows = (0..n)
        .map(|x| {
            let d = PointSet::from_indices(points.len(), (0..points.len()).filter(|&i| !contains(&points[i], x)));
            (x.to_string(), d)
        })
        .collect();
    assemble(Base::Zn { n, primes }, spectrum, points, rows)
}

/// The monomial semigroup primes of `k[S]`, with subbasic opens
/// `D(z)` for the monomials `z ∈ S ∩ [0, r]^d`, `r` twice the largest
/// generator coordinate.
pub fn scal_monomial(s: &AffineSemigroup) -> Result<ScalSpace> {
    let spectrum = s.monomial_primes();
    let faces: Vec<Face> = spectrum
        .labels()
        .iter()
        .map(|l| s.face_of_prime(l))
        .collect::<Result<_>>()?;
    let points = antichains(&spectrum)?;
    let r = 2 * s.generators().iter().map(Exp::norm).max().unwrap_or(1);
    let hi = match s.dim() {
        1 => Exp::d1(r),
        _ => Exp::d2(r, r),
    };
    let contains = |pt: &SemigroupPrime, z: &Exp| pt.members.iter().any(|i| s.prime_contains(&faces[i], z));
    let rows = s
        .group_points(s.zero(), hi)
        .into_iter()
        .filter(|z| s.member(z))
        .map(|z| {
            let d = PointSet::from_indices(points.len(), (0..points.len()).filter(|&i| !contains(&points[i], &z)));
            (z.to_string(), d)
        })
        .collect();
    assemble(Base::Monomial { s: s.clone(), faces }, spectrum, points, rows)
}

impl ScalSpace {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[SemigroupPrime] {
        &self.points
    }

    pub fn labels(&self) -> Vec<String> {
        self.points.iter().map(SemigroupPrime::label).collect()
    }

    pub fn spectrum(&self) -> &FinitePoset {
        &self.spectrum
    }

    /// The topology generated by the subbasic opens `D(x)`.
    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    /// Inclusion of unions.
    pub fn order(&self) -> &FinitePoset {
        &self.order
    }

    pub fn describe_base(&self) -> String {
        match &self.base {
            Base::Zn { n, .. } => format!("Z/{n}"),
            Base::Monomial { s, .. } => {
                let g: Vec<String> = s.generators().iter().map(Exp::to_string).collect();
                format!("k[S], S = <{}>", g.join(", "))
            }
        }
    }

    /// `D_scal(x)` for a residue `x` of `ℤ/n`.
    pub fn d_scal_residue(&self, x: u64) -> Result<PointSet> {
        let Base::Zn { n, primes } = &self.base else {
            return Err(Error::Invalid("residues apply to Z/n only".into()));
        };
        let x = x % n;
        Ok(PointSet::from_indices(
            self.len(),
            (0..self.len()).filter(|&i| self.points[i].members.iter().all(|p| !x.is_multiple_of(primes[p]))),
        ))
    }

    /// `D_scal(z)` for a monomial `z ∈ S`.
    pub fn d_scal_monomial(&self, z: &Exp) -> Result<PointSet> {
        let Base::Monomial { s, faces } = &self.base else {
            return Err(Error::Invalid("monomials apply to k[S] only".into()));
        };
        if !s.member(z) {
            return Err(Error::NotInSemigroup(z.to_string()));
        }
        Ok(PointSet::from_indices(
            self.len(),
            (0..self.len()).filter(|&i| self.points[i].members.iter().all(|p| !s.prime_contains(&faces[p], z))),
        ))
    }

    /// Checks every point of `𝒮cal(ℤ/n)` against the definition of a
    /// semigroup prime by running over all residues.
    pub fn check_axioms_zn(&self) -> Result<Vec<AxiomCheck>> {
        let Base::Zn { n, primes } = &self.base else {
            return Err(Error::Invalid("axiom check applies to Z/n only".into()));
        };
        let n = *n;
        Ok(self
            .points
            .iter()
            .map(|pt| {
                let q: Vec<bool> = (0..n).map(|x| pt.members.iter().any(|p| x % primes[p] == 0)).collect();
                let absorbs_multiples = (0..n).all(|r| (0..n).all(|x| !q[x as usize] || q[(r * x % n) as usize]));
                let complement_multiplicative =
                    (0..n).all(|a| (0..n).all(|b| q[a as usize] || q[b as usize] || !q[(a * b % n) as usize]));
                let proper = q.iter().any(|&m| !m) && q.iter().any(|&m| m);
                let avoids_units = (0..n).all(|x| gcd(x, n) != 1 || !q[x as usize]);
                AxiomCheck {
                    point: pt.label(),
                    absorbs_multiples,
                    complement_multiplicative,
                    proper,
                    avoids_units,
                }
            })
            .collect())
    }

    /// The residue set of each point of `𝒮cal(ℤ/n)`.
    pub fn unions_zn(&self) -> Result<Vec<PointSet>> {
        let Base::Zn { n, primes } = &self.base else {
            return Err(Error::Invalid("unions apply to Z/n only".into()));
        };
        let n = *n as usize;
        Ok(self
            .points
            .iter()
            .map(|pt| {
                PointSet::from_indices(
                    n,
                    (0..n).filter(|&x| pt.members.iter().any(|p| (x as u64).is_multiple_of(primes[p]))),
                )
            })
            .collect())
    }

    /// Pairs of points lying in exactly the same subbasic opens.
    pub fn indistinguishable_pairs(&self) -> Vec<(String, String)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.subbasis.iter().all(|d| d.contains(a) == d.contains(b)) {
                    out.push((self.points[a].label(), self.points[b].label()));
                }
            }
        }
        out
    }

    /// Spectrality of the subbasis topology.
    pub fn subbasis_report(&self) -> SpectralReport {
        self.space.is_spectral()
    }

    /// Spectrality of the inclusion order with its down-set topology.
    pub fn order_report(&self) -> SpectralReport {
        FiniteSpace::from_poset(&self.order).is_spectral()
    }

    /// `P ↦ {P}` from the spectrum, and whether it is a topological
    /// embedding for the subbasis topology.
    pub fn embed_spec(&self) -> Result<(SpectralMapModel, bool)> {
        let n = self.spectrum.len();
        let assignment = (0..n)
            .map(|p| {
                let label = format!("{{{}}}", self.spectrum.label(p));
                self.order.index_of(&label)
            })
            .collect::<Result<Vec<_>>>()?;
        let f = SpectralMapModel::new(self.spectrum.clone(), self.order.clone(), assignment)?;
        let ok = is_embedding(&f, &self.space)?;
        Ok((f, ok))
    }

    /// Pairs of monomial points whose localization oracles agree on every
    /// monomial of `[-radius, radius]^d`.
    pub fn oracle_collisions(&self, radius: i64) -> Result<Vec<(String, String)>> {
        let Base::Monomial { s, faces } = &self.base else {
            return Err(Error::Invalid("oracles apply to k[S] only".into()));
        };
        let sets: Vec<PrimeSet> = self
            .points
            .iter()
            .map(|pt| PrimeSet::new(s, pt.members.iter().map(|i| faces[i])))
            .collect::<Result<_>>()?;
        let boxed = s.box_points(radius);
        let mut table = Vec::with_capacity(sets.len());
        for q in &sets {
            let row = boxed
                .iter()
                .map(|z| lambda_qr_member(s, q, *z).map(|c| c.value))
                .collect::<Result<Vec<bool>>>()?;
            table.push(row);
        }
        let mut out = Vec::new();
        for a in 0..sets.len() {
            for b in a + 1..sets.len() {
                if table[a] == table[b] {
                    out.push((self.points[a].label(), self.points[b].label()));
                }
            }
        }
        Ok(out)
    }

    /// Prime set of a point, for the monomial base.
    pub fn prime_set(&self, point: usize) -> Result<PrimeSet> {
        let Base::Monomial { s, faces } = &self.base else {
            return Err(Error::Invalid("prime sets apply to k[S] only".into()));
        };
        PrimeSet::new(s, self.points[point].members.iter().map(|i| faces[i]))
    }

    pub fn to_dot(&self, name: &str) -> String {
        self.order.to_dot(name)
    }

    pub fn dump(&self) -> ScalDump {
        let labels = self.labels();
        let indistinguishable_pairs = self.indistinguishable_pairs();
        let note = match self.base {
            Base::Zn { .. } => "subbasic opens D(x) for every residue x".to_string(),
            Base::Monomial { .. } => format!("{MONOMIAL_LAYER}: subbasic opens D(x) for monomials x only"),
        };
        let mut incidence: Vec<Incidence> = self
            .elements
            .iter()
            .zip(&self.subbasis)
            .map(|(e, d)| Incidence {
                element: e.clone(),
                points: d.iter().map(|i| labels[i].clone()).collect(),
            })
            .collect();
        if matches!(self.base, Base::Monomial { .. }) {
            incidence.sort_by(|a, b| a.points.cmp(&b.points).then_with(|| a.element.cmp(&b.element)));
            incidence.dedup_by(|a, b| a.points == b.points);
        }
        ScalDump {
            base: self.describe_base(),
            spectrum: self.spectrum.labels().to_vec(),
            points: labels,
            incidence,
            indistinguishable_pairs,
            spectral: self.order_report().is_spectral(),
            note,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels_of(space: &ScalSpace, set: &PointSet) -> Vec<String> {
        set.iter().map(|i| space.points()[i].label()).collect()
    }

    #[test]
    fn zn_points() {
        let z12 = scal_zn(12).unwrap();
        assert_eq!(z12.labels(), ["{(2),(3)}", "{(2)}", "{(3)}"]);
        assert_eq!(labels_of(&z12, &z12.d_scal_residue(4).unwrap()), ["{(3)}"]);
        assert_eq!(z12.d_scal_residue(5).unwrap().len(), 3);
        assert!(z12.d_scal_residue(0).unwrap().is_empty());
        assert_eq!(scal_zn(27).unwrap().len(), 1);
        assert_eq!(scal_zn(30).unwrap().len(), 7);
        assert!(matches!(scal_zn(1), Err(Error::Modulus(1))));
    }

    #[test]
    fn zn_axioms_and_spectrality() {
        for n in [12, 30, 49] {
            let sp = scal_zn(n).unwrap();
            assert!(sp.check_axioms_zn().unwrap().iter().all(AxiomCheck::holds));
            assert!(sp.subbasis_report().is_spectral());
            assert!(sp.indistinguishable_pairs().is_empty());
            let (_, ok) = sp.embed_spec().unwrap();
            assert!(ok);
        }
    }

    #[test]
    fn monomial_points() {
        let s = AffineSemigroup::numerical(&[3, 5]).unwrap();
        let sp = scal_monomial(&s).unwrap();
        assert_eq!(sp.labels(), ["{(0)}", "{m}"]);
        assert!(sp.indistinguishable_pairs().is_empty());
        let s2 = AffineSemigroup::planar(&[(2, 0), (3, 0), (1, 1), (0, 1)]).unwrap();
        let sp = scal_monomial(&s2).unwrap();
        assert_eq!(sp.labels(), ["{(0)}", "{P_x,P_y}", "{P_x}", "{P_y}", "{m}"]);
        assert_eq!(
            sp.indistinguishable_pairs(),
            [("{P_x,P_y}".to_string(), "{m}".to_string())]
        );
        assert!(sp.order_report().is_spectral());
        assert!(!sp.subbasis_report().is_spectral());
        assert!(sp.embed_spec().unwrap().1);
        let d = sp.d_scal_monomial(&Exp::d2(2, 0)).unwrap();
        assert_eq!(labels_of(&sp, &d), ["{(0)}", "{P_x}"]);
        assert!(sp.d_scal_monomial(&Exp::d2(1, 0)).is_err());
    }

    #[test]
    fn oracle_collisions_match_monomial_unions() {
        let s2 = AffineSemigroup::planar(&[(2, 0), (3, 0), (1, 1), (0, 1)]).unwrap();
        let sp = scal_monomial(&s2).unwrap();
        assert_eq!(sp.oracle_collisions(4).unwrap(), sp.indistinguishable_pairs());
        let s = AffineSemigroup::numerical(&[3, 5]).unwrap();
        assert!(scal_monomial(&s).unwrap().oracle_collisions(10).unwrap().is_empty());
    }

    #[test]
    fn dump_is_sorted() {
        let sp = scal_zn(12).unwrap();
        let dump = sp.dump();
        assert_eq!(dump.incidence.len(), 12);
        assert_eq!(dump.incidence[4].points, ["{(3)}"]);
        assert!(dump.spectral);
    }
}
