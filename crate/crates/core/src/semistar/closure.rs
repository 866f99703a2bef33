use serde::Serialize;

use super::PrimeSet;
use crate::semigroup::{AffineSemigroup, Certified, Face, FracIdeal};
use crate::topo::FinitePoset;
use crate::Result;

/// `I^v = (D : (D : I))`. On finitely generated ideals this is also `I^t`.
pub fn v_closure(s: &AffineSemigroup, ideal: &impl AsRef<FracIdeal>) -> Result<Certified<FracIdeal>> {
    let inner = s.colon_fractional(ideal)?;
    let outer = s.colon_fractional(&inner.value)?;
    Ok(Certified {
        value: outer.value,
        completeness: inner.completeness.and(outer.completeness),
    })
}

/// The monomial `t`-spectrum with its inclusion order.
#[derive(Clone, Debug, Serialize)]
pub struct TSpectrum {
    pub primes: PrimeSet,
    #[serde(skip)]
    pub poset: FinitePoset,
    pub completeness: crate::semigroup::Completeness,
}

/// Monomial primes `P` with `P^v = P`, together with `(0)`.
pub fn t_spectrum_monomial(s: &AffineSemigroup) -> Result<TSpectrum> {
    let mut faces = vec![Face::Full];
    let mut completeness = crate::semigroup::Completeness::Certified;
    for face in s.faces() {
        let Some(p) = s.prime_ideal(&face) else {
            continue;
        };
        let pv = v_closure(s, &p)?;
        completeness = completeness.and(pv.completeness);
        if pv.value == *p.as_frac() {
            faces.push(face);
        }
    }
    let primes = PrimeSet::new(s, faces)?;
    let all = s.monomial_primes();
    let poset = all.restrict(&all.point_set(primes.labels())?)?;
    Ok(TSpectrum {
        primes,
        poset,
        completeness,
    })
}
