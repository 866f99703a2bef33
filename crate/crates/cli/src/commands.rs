use anyhow::{anyhow, bail, Result};
use overring_core::scal::{scal_monomial, scal_zn};
use overring_core::semistar::{
    check_lemma_55, check_prop_58, cor45_monomial_report, in_localization, pi_t_distinguish, pi_t_member,
    qr_criterion_for, t_spectrum_monomial, v_closure, PrimeSet, TSpectrum, Verdict,
};
use overring_core::topo::{constructible_is_discrete, DEFAULT_ENUMERATION_LIMIT};
use overring_core::xcal::build_xcal;
use overring_core::{AffineSemigroup, Completeness, Exp, FinitePoset, FiniteSpace, FracIdeal, MonomialIdeal};
use serde_json::{json, Value};

use crate::config::{CommandKind, Instance, Query};

const DEFAULT_LEMMA55_RADIUS: i64 = 10;
const DEFAULT_QR_RADIUS: i64 = 3;

/// What a command produced.
#[derive(Debug, Default)]
pub struct Outcome {
    pub result: Value,
    pub dot: Option<String>,
    pub warnings: Vec<String>,
}

impl Outcome {
    fn new(result: Value) -> Self {
        Outcome {
            result,
            ..Outcome::default()
        }
    }

    fn with_dot(mut self, dot: String) -> Self {
        self.dot = Some(dot);
        self
    }

    fn track(&mut self, what: &str, c: Completeness) {
        if let Completeness::WithinBox { radius } = c {
            self.warnings
                .push(format!("{what}: complete only within radius {radius}"));
        }
    }
}

pub fn execute(instance: &Instance, query: &Query, radius: Option<i64>) -> Result<Outcome> {
    let radius = query.radius.or(radius);
    match query.cmd {
        CommandKind::Poset => poset(&base_poset(instance)?),
        CommandKind::Xcal => xcal(&base_poset(instance)?),
        CommandKind::Scal => scal(instance),
        cmd => {
            let s = semigroup(instance, cmd)?;
            match cmd {
                CommandKind::Colon => colon(s, query),
                CommandKind::Vclosure => vclosure(s, query),
                CommandKind::Radical => radical(s, query),
                CommandKind::Tspec => tspec(s),
                CommandKind::QrCriterion => qr(s, query, radius),
                CommandKind::Cor45 => cor45(s, radius),
                CommandKind::Pit => pit(s, query),
                CommandKind::Prop58 => prop58(s, query, radius),
                CommandKind::Lemma55 => lemma55(s, query, radius),
                _ => unreachable!("handled above"),
            }
        }
    }
}

fn semigroup(instance: &Instance, cmd: CommandKind) -> Result<&AffineSemigroup> {
    match instance {
        Instance::Semigroup { semigroup, .. } => Ok(semigroup),
        _ => bail!("`{cmd}` needs a semigroup instance"),
    }
}

/// The poset itself, the monomial primes of `k[S]`, or `Spec ℤ/n`.
fn base_poset(instance: &Instance) -> Result<FinitePoset> {
    Ok(match instance {
        Instance::Poset { poset, .. } => poset.clone(),
        Instance::Semigroup { semigroup, .. } => semigroup.monomial_primes(),
        Instance::Zn(n) => scal_zn(*n)?.spectrum().clone(),
    })
}

fn labels_of(x: &FinitePoset, pairs: &[(usize, usize)]) -> Vec<[String; 2]> {
    pairs
        .iter()
        .map(|&(a, b)| [x.label(a).to_string(), x.label(b).to_string()])
        .collect()
}

fn poset(x: &FinitePoset) -> Result<Outcome> {
    let spectral = FiniteSpace::from_poset(x).is_spectral();
    let opens = x.down_sets(DEFAULT_ENUMERATION_LIMIT).ok().map(|d| d.len());
    let result = json!({
        "points": x.labels(),
        "covers": labels_of(x, &x.covers()),
        "open_sets": opens,
        "spectral": spectral.is_spectral(),
        "spectral_report": spectral,
        "constructible_discrete": constructible_is_discrete(x).discrete,
        "inverse_covers": labels_of(x, &x.inverse_space().covers()),
    });
    Ok(Outcome::new(result).with_dot(x.to_dot("poset")))
}

fn xcal(x: &FinitePoset) -> Result<Outcome> {
    let xc = build_xcal(x)?;
    let result = json!({
        "points": xc.len(),
        "labels": xc.labels(),
        "specialization_is_inclusion": xc.specialization_is_inclusion(),
        "principal_embedding": xc.principal_embedding_holds()?,
        "dump": xc.dump(),
    });
    Ok(Outcome::new(result).with_dot(xc.to_dot("xcal")))
}

fn scal(instance: &Instance) -> Result<Outcome> {
    let (space, axioms) = match instance {
        Instance::Zn(n) => {
            let space = scal_zn(*n)?;
            let axioms = space.check_axioms_zn()?;
            (space, Some(axioms))
        }
        Instance::Semigroup { semigroup, .. } => (scal_monomial(semigroup)?, None),
        Instance::Poset { .. } => bail!("`scal` needs a semigroup or a modulus"),
    };
    let (_, embedding) = space.embed_spec()?;
    let mut result = json!({
        "points": space.len(),
        "labels": space.labels(),
        "base": space.describe_base(),
        "subbasis_spectral": space.subbasis_report().is_spectral(),
        "order_spectral": space.order_report().is_spectral(),
        "spec_embedding": embedding,
        "dump": space.dump(),
    });
    if let Some(axioms) = axioms {
        result["axioms_hold"] = json!(axioms.iter().all(|a| a.holds()));
        result["axioms"] = json!(axioms);
    }
    Ok(Outcome::new(result).with_dot(space.to_dot("scal")))
}

fn need_x(q: &Query) -> Result<Exp> {
    q.x.ok_or_else(|| anyhow!("`{}` needs --x", q.cmd))
}

fn frac(s: &AffineSemigroup, gens: &Option<Vec<Exp>>) -> Result<FracIdeal> {
    Ok(match gens {
        Some(g) => FracIdeal::new(s, g.iter().copied())?,
        None => FracIdeal::unit(s),
    })
}

fn prime_set(s: &AffineSemigroup, labels: &[String]) -> Result<PrimeSet> {
    let set = PrimeSet::from_labels(s, labels)?;
    if set.is_empty() {
        bail!("empty set of primes");
    }
    Ok(set)
}

fn colon(s: &AffineSemigroup, q: &Query) -> Result<Outcome> {
    let z = need_x(q)?;
    let ideal = frac(s, &q.ideal)?;
    let c = s.colon_by_element(&ideal, z)?;
    let mut out = Outcome::new(json!({
        "z": z,
        "ideal": ideal.generators(),
        "colon": c.value.generators(),
        "is_maximal": c.value == MonomialIdeal::maximal(s),
        "completeness": c.completeness,
    }));
    out.track("colon", c.completeness);
    Ok(out)
}

fn vclosure(s: &AffineSemigroup, q: &Query) -> Result<Outcome> {
    let Some(gens) = &q.ideal else {
        bail!("`vclosure` needs --ideal");
    };
    let ideal = FracIdeal::new(s, gens.iter().copied())?;
    let dual = s.colon_fractional(&ideal)?;
    let v = v_closure(s, &ideal)?;
    let mut out = Outcome::new(json!({
        "ideal": ideal.generators(),
        "dual": dual.value.generators(),
        "v_closure": v.value.generators(),
        "divisorial": v.value == ideal,
        "completeness": v.completeness,
    }));
    out.track("v-closure", v.completeness);
    Ok(out)
}

fn radical(s: &AffineSemigroup, q: &Query) -> Result<Outcome> {
    let mut out = Outcome::default();
    let ideal = match (&q.ideal, q.x) {
        (Some(g), _) => MonomialIdeal::new(s, g.iter().copied())?,
        (None, Some(z)) => {
            let c = s.colon_d(z)?;
            out.track("colon", c.completeness);
            c.value
        }
        (None, None) => bail!("`radical` needs --ideal or --x"),
    };
    let class = s.radical_class(&ideal);
    let principal = s.is_radical_of_principal(&ideal);
    out.result = json!({
        "ideal": ideal.generators(),
        "primes_containing": class.iter().map(|f| f.prime_label()).collect::<Vec<_>>(),
        "minimal_primes": s.minimal_primes(&ideal).iter().map(|f| f.prime_label()).collect::<Vec<_>>(),
        "radical_of_principal": Verdict::from_bool(principal.holds),
        "witness": principal.witness,
    });
    Ok(out)
}

fn tspec(s: &AffineSemigroup) -> Result<Outcome> {
    let t = t_spectrum_monomial(s)?;
    let all = PrimeSet::all(s);
    let mut out = Outcome::new(json!({
        "t_primes": t.primes.labels(),
        "other_primes": all.labels().into_iter().filter(|l| !t.primes.labels().contains(l)).collect::<Vec<_>>(),
        "completeness": t.completeness,
    }));
    out.track("t-spectrum", t.completeness);
    Ok(out.with_dot(t.poset.to_dot("tspec")))
}

fn qr(s: &AffineSemigroup, q: &Query, radius: Option<i64>) -> Result<Outcome> {
    let mut out = Outcome::default();
    if let Some(z) = q.x {
        let v = qr_criterion_for(s, z)?;
        out.track("qr-criterion", v.completeness);
        out.result = json!({
            "z": z,
            "verdict": v.verdict,
            "note": v.note,
            "detail": v,
        });
        return Ok(out);
    }
    let r = radius.unwrap_or(DEFAULT_QR_RADIUS);
    let mut verdicts = Vec::new();
    for z in s.box_points(r) {
        let v = qr_criterion_for(s, z)?;
        out.track("qr-criterion", v.completeness);
        verdicts.push(v);
    }
    let failures: Vec<Exp> = verdicts
        .iter()
        .filter(|v| v.verdict == Verdict::Fail)
        .map(|v| v.z)
        .collect();
    out.warnings.dedup();
    out.result = json!({
        "radius": r,
        "verdict": Verdict::from_bool(failures.is_empty()),
        "failures": failures,
        "verdicts": verdicts,
    });
    Ok(out)
}

fn cor45(s: &AffineSemigroup, radius: Option<i64>) -> Result<Outcome> {
    let report = cor45_monomial_report(s, radius.unwrap_or(s.search_bound()))?;
    let mut out = Outcome::default();
    out.track("cor45", report.completeness);
    out.result = json!(report);
    Ok(out)
}

fn pit(s: &AffineSemigroup, q: &Query) -> Result<Outcome> {
    let Some(delta) = &q.delta else {
        bail!("`pit` needs --delta");
    };
    let t = t_spectrum_monomial(s)?;
    let mut out = Outcome::default();
    out.track("t-spectrum", t.completeness);
    let delta = t_down_set(s, &t, delta, &mut out)?;
    if let Some(lambda) = &q.lambda {
        let lambda = t_down_set(s, &t, lambda, &mut out)?;
        let d = pi_t_distinguish(s, &t, &delta, &lambda)?;
        out.result = json!({
            "delta": delta,
            "lambda": lambda,
            "distinction": d,
        });
        return Ok(out);
    }
    let z = q.x.ok_or_else(|| anyhow!("`pit` needs --x or --lambda"))?;
    let member = pi_t_member(s, &t, &delta, z)?;
    out.track("pit", member.completeness);
    let mut localizations = Vec::new();
    for f in PrimeSet::all(s).faces() {
        let m = in_localization(s, z, f)?;
        out.track("localization", m.completeness);
        localizations.push(json!({ "prime": f.prime_label(), "member": m.value }));
    }
    out.result = json!({
        "z": z,
        "delta": delta,
        "member": member.value,
        "localizations": localizations,
    });
    Ok(out)
}

/// Closes a set of t-primes downward; `(0)` lies below every prime and
/// does not change the intersection of localizations.
fn t_down_set(s: &AffineSemigroup, t: &TSpectrum, labels: &[String], out: &mut Outcome) -> Result<PrimeSet> {
    let given = prime_set(s, labels)?;
    if !given.is_subset(&t.primes) {
        bail!(
            "{:?} is not contained in the t-spectrum {:?}",
            given.labels(),
            t.primes.labels()
        );
    }
    let closed = given.down_closure(s).intersection(&t.primes);
    if closed != given {
        out.warnings
            .push(format!("{:?} closed downward to {:?}", given.labels(), closed.labels()));
    }
    Ok(closed)
}

/// The given Δ, or every nonempty set of monomial primes.
fn deltas(s: &AffineSemigroup, q: &Query) -> Result<Vec<PrimeSet>> {
    if let Some(d) = &q.delta {
        return Ok(vec![prime_set(s, d)?]);
    }
    let faces = PrimeSet::all(s).faces().to_vec();
    (1u32..(1 << faces.len()))
        .map(|mask| {
            let pick = faces
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, f)| *f);
            Ok(PrimeSet::new(s, pick)?)
        })
        .collect()
}

fn prop58(s: &AffineSemigroup, q: &Query, radius: Option<i64>) -> Result<Outcome> {
    let t = t_spectrum_monomial(s)?;
    let r = radius.unwrap_or(s.search_bound());
    let mut out = Outcome::default();
    let mut reports = Vec::new();
    for delta in deltas(s, q)? {
        let rep = check_prop_58(s, &t, &delta, r)?;
        out.track("prop58", rep.completeness);
        reports.push(rep);
    }
    out.warnings.dedup();
    out.result = json!({
        "radius": r,
        "t_primes": t.primes,
        "all_agree": reports.iter().all(|r| r.agree),
        "reports": reports,
    });
    Ok(out)
}

fn lemma55(s: &AffineSemigroup, q: &Query, radius: Option<i64>) -> Result<Outcome> {
    let ideal = frac(s, &q.ideal)?;
    let r = radius.unwrap_or(DEFAULT_LEMMA55_RADIUS);
    let mut out = Outcome::default();
    let mut reports = Vec::new();
    for delta in deltas(s, q)? {
        let rep = check_lemma_55(s, &delta, &ideal, r)?;
        out.track("lemma55", rep.completeness);
        if !rep.not_found_within_bound.is_empty() {
            out.warnings.push(format!(
                "Δ = {:?}: {} points without E within radius {}",
                delta.labels(),
                rep.not_found_within_bound.len(),
                rep.e_radius
            ));
        }
        reports.push(rep);
    }
    out.warnings.dedup();
    out.result = json!({
        "radius": r,
        "ideal": ideal.generators(),
        "disagreements": reports.iter().map(|r| r.disagreements.len()).sum::<usize>(),
        "passed": reports.iter().all(|r| r.passed()),
        "reports": reports,
    });
    Ok(out)
}
