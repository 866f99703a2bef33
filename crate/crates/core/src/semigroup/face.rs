use std::fmt;

use serde::{Serialize, Serializer};

use super::{AffineSemigroup, Exp, MonomialIdeal};
use crate::topo::FinitePoset;
use crate::{Error, Result};

/// A face of `cone(S)` meeting `S`. Rays are named by their primitive
/// direction. Faces index the monomial primes: `P_F = S ∖ F`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Face {
    Zero,
    Ray(Exp),
    Full,
}

impl Face {
    pub fn is_subface_of(&self, other: &Face) -> bool {
        match (self, other) {
            (Face::Zero, _) | (_, Face::Full) => true,
            (Face::Ray(a), Face::Ray(b)) => a == b,
            _ => false,
        }
    }

    /// Label of `P_F`: `(0)` for the full cone, `m` for `{0}`, `P_x` and
    /// `P_y` for the coordinate rays, `P_(a,b)` otherwise.
    pub fn prime_label(&self) -> String {
        match self {
            Face::Full => "(0)".into(),
            Face::Zero => "m".into(),
            Face::Ray(d) if *d == Exp::d2(1, 0) => "P_x".into(),
            Face::Ray(d) if *d == Exp::d2(0, 1) => "P_y".into(),
            Face::Ray(d) => format!("P_{d}"),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Face::Zero => "{0}".into(),
            Face::Ray(d) => format!("ray{d}"),
            Face::Full => "cone".into(),
        }
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.name())
    }
}

/// Outcome of the principal-radical test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipalRadical {
    pub holds: bool,
    /// Faces avoided by the ideal, i.e. the primes containing it.
    pub class: Vec<Face>,
    /// A monomial `w` with `rad(wD) = rad(I)`.
    pub witness: Option<Exp>,
}

impl AffineSemigroup {
    /// Whether `z ∈ S` lies in the monomial prime `P_F`.
    pub fn prime_contains(&self, face: &Face, z: &Exp) -> bool {
        self.member(z) && !self.in_face(z, face)
    }

    /// `P_F ⊆ P_G`, i.e. `G ⊆ F`.
    pub fn prime_leq(&self, f: &Face, g: &Face) -> bool {
        g.is_subface_of(f)
    }

    /// Generators of `P_F`: the semigroup generators outside `F`. `None`
    /// for the zero ideal `P_cone`.
    pub fn prime_ideal(&self, face: &Face) -> Option<MonomialIdeal> {
        let gens: Vec<Exp> = self
            .generators()
            .iter()
            .filter(|g| !self.in_face(g, face))
            .copied()
            .collect();
        if gens.is_empty() {
            return None;
        }
        Some(MonomialIdeal::new(self, gens).expect("semigroup generators lie in S"))
    }

    /// The face whose prime carries `label`.
    pub fn face_of_prime(&self, label: &str) -> Result<Face> {
        self.faces()
            .into_iter()
            .find(|f| f.prime_label() == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    /// The monomial primes `P_F`, ordered by inclusion.
    pub fn monomial_primes(&self) -> FinitePoset {
        let faces = self.faces();
        let labels = faces.iter().map(|f| f.prime_label()).collect();
        FinitePoset::from_order(labels, |i, j| self.prime_leq(&faces[i], &faces[j]))
            .expect("inclusion of monomial primes is a partial order")
    }

    /// Faces containing no generator of `I`: `P_F ⊇ I` exactly for these,
    /// so two ideals have the same radical iff the classes agree.
    pub fn radical_class(&self, ideal: &MonomialIdeal) -> Vec<Face> {
        self.faces()
            .into_iter()
            .filter(|f| ideal.generators().iter().all(|g| !self.in_face(g, f)))
            .collect()
    }

    /// Faces of the minimal primes over `I` (maximal faces of the class).
    pub fn minimal_primes(&self, ideal: &MonomialIdeal) -> Vec<Face> {
        let class = self.radical_class(ideal);
        class
            .iter()
            .filter(|f| !class.iter().any(|g| g != *f && f.is_subface_of(g)))
            .copied()
            .collect()
    }

    /// Whether `rad(I) = rad(wD)` for a monomial `w`. The class of `wD` is
    /// `{F : face(w) ⊄ F}`, so it suffices to try one `w` per face. The
    /// unit ideal is matched by `w = 0`.
    pub fn is_radical_of_principal(&self, ideal: &MonomialIdeal) -> PrincipalRadical {
        let class = self.radical_class(ideal);
        let faces = self.faces();
        for g in &faces {
            let principal: Vec<Face> = faces.iter().filter(|f| !g.is_subface_of(f)).copied().collect();
            if principal == class {
                return PrincipalRadical {
                    holds: true,
                    class,
                    witness: Some(self.face_witness(g)),
                };
            }
        }
        PrincipalRadical {
            holds: false,
            class,
            witness: None,
        }
    }

    /// A monomial in the relative interior of `face`: the smallest generator
    /// there, else the sum of the generators in the face.
    fn face_witness(&self, face: &Face) -> Exp {
        if let Some(g) = self.generators().iter().find(|g| self.face_of(g) == *face) {
            return *g;
        }
        self.generators()
            .iter()
            .filter(|g| self.in_face(g, face))
            .fold(self.zero(), |acc, g| acc + *g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s2() -> AffineSemigroup {
        AffineSemigroup::planar(&[(2, 0), (3, 0), (1, 1), (0, 1)]).unwrap()
    }

    fn rays() -> (Face, Face) {
        (Face::Ray(Exp::d2(1, 0)), Face::Ray(Exp::d2(0, 1)))
    }

    #[test]
    fn prime_posets() {
        let s = AffineSemigroup::numerical(&[3, 5]).unwrap();
        let p = s.monomial_primes();
        assert_eq!(p.labels(), ["(0)", "m"]);
        assert!(p.leq(0, 1));
        let n2 = AffineSemigroup::planar(&[(1, 0), (0, 1)]).unwrap();
        let q = n2.monomial_primes();
        assert_eq!(q.labels(), ["(0)", "P_x", "P_y", "m"]);
        let idx = |l: &str| q.index_of(l).unwrap();
        assert!(q.leq(idx("(0)"), idx("P_x")) && q.leq(idx("P_y"), idx("m")));
        assert!(!q.leq(idx("P_x"), idx("P_y")));
        assert_eq!(s2().monomial_primes().labels(), q.labels());
        let slanted = AffineSemigroup::planar(&[(1, 0), (1, 1), (1, 2)]).unwrap();
        assert_eq!(slanted.monomial_primes().labels(), ["(0)", "P_(1,2)", "P_x", "m"]);
    }

    #[test]
    fn prime_generators() {
        let s = s2();
        let (x, y) = rays();
        assert_eq!(s.prime_ideal(&x).unwrap().generators(), [Exp::d2(0, 1), Exp::d2(1, 1)]);
        assert_eq!(
            s.prime_ideal(&y).unwrap().generators(),
            [Exp::d2(1, 1), Exp::d2(2, 0), Exp::d2(3, 0)]
        );
        assert_eq!(s.prime_ideal(&Face::Zero).unwrap(), MonomialIdeal::maximal(&s));
        assert!(s.prime_ideal(&Face::Full).is_none());
        assert_eq!(s.face_of_prime("P_y").unwrap(), y);
        assert!(s.face_of_prime("P_z").is_err());
    }

    #[test]
    fn radical_classes() {
        let s = AffineSemigroup::numerical(&[3, 5]).unwrap();
        let i6 = MonomialIdeal::new(&s, [Exp::d1(6)]).unwrap();
        assert_eq!(s.radical_class(&i6), [Face::Zero]);
        assert_eq!(s.minimal_primes(&i6), [Face::Zero]);
        assert!(s.radical_class(&MonomialIdeal::unit(&s)).is_empty());
        let t = s2();
        let (x, _) = rays();
        let px = t.prime_ideal(&x).unwrap();
        assert_eq!(t.radical_class(&px), [Face::Zero, x]);
        assert_eq!(t.minimal_primes(&px), [x]);
        assert_eq!(t.minimal_primes(&MonomialIdeal::maximal(&t)), [Face::Zero]);
    }

    #[test]
    fn principal_radicals() {
        let t = s2();
        let (x, y) = rays();
        let m = t.is_radical_of_principal(&MonomialIdeal::maximal(&t));
        assert!(!m.holds && m.witness.is_none());
        let px = t.is_radical_of_principal(&t.prime_ideal(&x).unwrap());
        assert_eq!(px.witness, Some(Exp::d2(0, 1)));
        let py = t.is_radical_of_principal(&t.prime_ideal(&y).unwrap());
        assert_eq!(py.witness, Some(Exp::d2(2, 0)));
        let s = AffineSemigroup::numerical(&[3, 5]).unwrap();
        let r = s.is_radical_of_principal(&MonomialIdeal::maximal(&s));
        assert_eq!(r.witness, Some(Exp::d1(3)));
        let d = s.is_radical_of_principal(&MonomialIdeal::unit(&s));
        assert_eq!(d.witness, Some(Exp::d1(0)));
    }

    #[test]
    fn interior_witness_falls_back_to_sum() {
        let n2 = AffineSemigroup::planar(&[(1, 0), (0, 1)]).unwrap();
        let i = MonomialIdeal::new(&n2, [Exp::d2(2, 3)]).unwrap();
        let r = n2.is_radical_of_principal(&i);
        assert_eq!(r.witness, Some(Exp::d2(1, 1)));
    }
}
