//! Closure operations on monomial ideals and instance checks of their axioms.
//!
//! Every check here is falsification on concrete instances: a pass means no
//! counterexample was found among the inputs, and each failure carries the
//! ideals that exhibit it.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{power_witness, ExponentVector, MonomialIdeal};
use crate::newton::{
    contains_special_integral, eventually_in_higher_power, integral_closure,
    special_integral_closure,
};
use crate::parse::{default_var_names, format_monomial_ideal};

pub type IdealMap = Arc<dyn Fn(&MonomialIdeal) -> Result<MonomialIdeal> + Send + Sync>;

/// A named closure on monomial ideals with an optional special part.
///
/// `close` maps the zero and unit ideals to themselves and `special_part`
/// maps the zero ideal to itself; other inputs go to the supplied maps.
#[derive(Clone)]
pub struct ClosureOperation {
    name: String,
    closure: IdealMap,
    special: Option<IdealMap>,
}

impl fmt::Debug for ClosureOperation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClosureOperation")
            .field("name", &self.name)
            .field("has_special_part", &self.special.is_some())
            .finish()
    }
}

impl ClosureOperation {
    pub fn new<F>(name: impl Into<String>, closure: F) -> Self
    where
        F: Fn(&MonomialIdeal) -> Result<MonomialIdeal> + Send + Sync + 'static,
    {
        ClosureOperation {
            name: name.into(),
            closure: Arc::new(closure),
            special: None,
        }
    }

    pub fn with_special<F>(mut self, special: F) -> Self
    where
        F: Fn(&MonomialIdeal) -> Result<MonomialIdeal> + Send + Sync + 'static,
    {
        self.special = Some(Arc::new(special));
        self
    }

    /// Integral closure with sp(I) as its special part.
    pub fn integral() -> Self {
        ClosureOperation::new("integral", integral_closure).with_special(special_integral_closure)
    }

    /// The trivial closure I ↦ I with special part mI.
    pub fn identity() -> Self {
        ClosureOperation::new("identity", |i| Ok(i.clone())).with_special(MonomialIdeal::m_times)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn has_special_part(&self) -> bool {
        self.special.is_some()
    }

    pub fn close(&self, ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
        if ideal.is_zero() || ideal.is_unit() {
            return Ok(ideal.clone());
        }
        (self.closure)(ideal)
    }

    pub fn special_part(&self, ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
        let special = self.special.as_ref().ok_or_else(|| {
            Error::InvalidArgument(format!("closure '{}' has no special part", self.name))
        })?;
        if ideal.is_zero() {
            return Ok(ideal.clone());
        }
        special(ideal)
    }
}

fn ideal_text(ideal: &MonomialIdeal) -> String {
    format_monomial_ideal(ideal, &default_var_names(ideal.nvars()))
}

/// One counterexample: the instance index, the ideals involved (first the
/// instance itself), and what went wrong.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomFailure {
    pub instance: usize,
    pub witness: Vec<String>,
    #[serde(skip)]
    pub ideals: Vec<MonomialIdeal>,
    pub detail: String,
}

impl AxiomFailure {
    fn new(instance: usize, ideals: Vec<MonomialIdeal>, detail: impl Into<String>) -> Self {
        AxiomFailure {
            instance,
            witness: ideals.iter().map(ideal_text).collect(),
            ideals,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomStatus {
    pub axiom: &'static str,
    pub checked: usize,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomStatus {
    fn new(axiom: &'static str) -> Self {
        AxiomStatus {
            axiom,
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub operation: String,
    pub instances: usize,
    pub axioms: Vec<AxiomStatus>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.axioms.iter().all(AxiomStatus::passed)
    }

    pub fn status(&self, axiom: &str) -> Option<&AxiomStatus> {
        self.axioms.iter().find(|s| s.axiom == axiom)
    }
}

/// Tallies one check into `status`; an `Err` from the check counts as a
/// failure.
fn record(
    status: &mut AxiomStatus,
    instance: usize,
    ideals: impl FnOnce() -> Vec<MonomialIdeal>,
    outcome: Result<Option<String>>,
) {
    status.checked += 1;
    match outcome {
        Ok(None) => {}
        Ok(Some(detail)) => status.failures.push(AxiomFailure::new(instance, ideals(), detail)),
        Err(e) => status
            .failures
            .push(AxiomFailure::new(instance, ideals(), format!("error: {e}"))),
    }
}

fn first_missing(big: &MonomialIdeal, small: &MonomialIdeal) -> Result<Option<ExponentVector>> {
    for g in small.generators() {
        if !big.contains_monomial(g)? {
            return Ok(Some(g.clone()));
        }
    }
    Ok(None)
}

fn missing_detail(
    big: &MonomialIdeal,
    small: &MonomialIdeal,
    what: &str,
) -> Result<Option<String>> {
    Ok(first_missing(big, small)?.map(|g| {
        let names = default_var_names(small.nvars());
        format!("{what}: {} is missing", crate::parse::format_monomial(&g, &names))
    }))
}

/// Extensivity, idempotence, and monotonicity over ⊆-comparable pairs.
pub fn check_closure_axioms(c: &ClosureOperation, instances: &[MonomialIdeal]) -> AxiomReport {
    let closed: Vec<Result<MonomialIdeal>> = instances.par_iter().map(|i| c.close(i)).collect();
    let twice: Vec<Option<Result<MonomialIdeal>>> = closed
        .par_iter()
        .map(|cl| cl.as_ref().ok().map(|cl| c.close(cl)))
        .collect();

    let mut extensive = AxiomStatus::new("extensive");
    let mut idempotent = AxiomStatus::new("idempotent");
    let mut monotone = AxiomStatus::new("monotone");
    for (k, ideal) in instances.iter().enumerate() {
        let outcome = match &closed[k] {
            Ok(cl) => missing_detail(cl, ideal, "I is not inside its closure"),
            Err(e) => Err(e.clone()),
        };
        record(&mut extensive, k, || vec![ideal.clone()], outcome);
        if let (Ok(cl), Some(again)) = (&closed[k], &twice[k]) {
            let outcome = match again {
                Ok(again) if again == cl => Ok(None),
                Ok(again) => Ok(Some(format!(
                    "closure of the closure is ({}), not ({})",
                    ideal_text(again),
                    ideal_text(cl)
                ))),
                Err(e) => Err(e.clone()),
            };
            record(&mut idempotent, k, || vec![ideal.clone(), cl.clone()], outcome);
        }
    }
    for (a, small) in instances.iter().enumerate() {
        for (b, big) in instances.iter().enumerate() {
            if a == b || small.nvars() != big.nvars() || !big.contains_ideal(small).unwrap_or(false)
            {
                continue;
            }
            let (Ok(cs), Ok(cb)) = (&closed[a], &closed[b]) else {
                continue;
            };
            let outcome = missing_detail(cb, cs, "closure does not preserve inclusion");
            record(&mut monotone, a, || vec![small.clone(), big.clone()], outcome);
        }
    }
    AxiomReport {
        operation: c.name().to_string(),
        instances: instances.len(),
        axioms: vec![extensive, idempotent, monotone],
    }
}

/// A generator subset J of instance I, as a bitmask over I's generators.
#[derive(Clone, Copy, Debug)]
struct SubsetPair {
    instance: usize,
    mask: u64,
}

const MAX_SUBSET_GENERATORS: usize = 20;

fn sample_pairs(instances: &[MonomialIdeal], pairs: usize, seed: u64) -> Vec<SubsetPair> {
    let mut out: Vec<SubsetPair> = (0..instances.len())
        .map(|instance| SubsetPair { instance, mask: 0 })
        .collect();
    if instances.is_empty() {
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..pairs {
        let instance = rng.gen_range(0..instances.len());
        let r = instances[instance].len().min(MAX_SUBSET_GENERATORS);
        let mask = if r >= 2 {
            rng.gen_range(1..(1u64 << r) - 1)
        } else {
            0
        };
        out.push(SubsetPair { instance, mask });
    }
    out
}

fn subset(ideal: &MonomialIdeal, mask: u64) -> MonomialIdeal {
    let idx: Vec<usize> = (0..ideal.len()).filter(|&i| mask >> i & 1 == 1).collect();
    ideal.subideal(&idx)
}

/// Axioms of a special part: sp(I) is an ideal of the same ring;
/// mI ⊆ sp(I) ⊆ I^c; sp(I^c) = sp(I) = sp(I)^c; and the Nakayama property
/// J ⊆ I ⊆ (J + sp(I))^c ⇒ I ⊆ J^c on `pairs` sampled generator subsets J
/// plus J = 0 for every instance. mI^c ⊆ sp(I), which follows from the
/// first three, is reported as well.
pub fn check_special_axioms(
    c: &ClosureOperation,
    instances: &[MonomialIdeal],
    pairs: usize,
    seed: u64,
) -> Result<AxiomReport> {
    if !c.has_special_part() {
        return Err(Error::InvalidArgument(format!(
            "closure '{}' has no special part",
            c.name()
        )));
    }
    struct Parts {
        closure: Result<MonomialIdeal>,
        special: Result<MonomialIdeal>,
    }
    let parts: Vec<Parts> = instances
        .par_iter()
        .map(|i| Parts {
            closure: c.close(i),
            special: c.special_part(i),
        })
        .collect();

    type Outcomes = [Result<Option<String>>; 4];
    let per_instance: Vec<Outcomes> = instances
        .par_iter()
        .zip(&parts)
        .map(|(ideal, part)| -> Outcomes {
            let sp = match &part.special {
                Ok(sp) => sp,
                Err(e) => return std::array::from_fn(|_| Err(e.clone())),
            };
            let cl = match &part.closure {
                Ok(cl) => cl,
                Err(e) => return std::array::from_fn(|_| Err(e.clone())),
            };
            let ideal_ok = if sp.nvars() == ideal.nvars() {
                Ok(None)
            } else {
                Ok(Some("special part lives in a different ring".to_string()))
            };
            let sandwich = (|| {
                if let Some(d) = missing_detail(sp, &ideal.m_times()?, "mI is not inside sp(I)")? {
                    return Ok(Some(d));
                }
                missing_detail(cl, sp, "sp(I) is not inside the closure")
            })();
            let commute = (|| {
                let sp_of_closure = c.special_part(cl)?;
                if &sp_of_closure != sp {
                    return Ok(Some(format!(
                        "sp of the closure is ({}), sp(I) is ({})",
                        ideal_text(&sp_of_closure),
                        ideal_text(sp)
                    )));
                }
                let closure_of_sp = c.close(sp)?;
                if &closure_of_sp != sp {
                    return Ok(Some(format!(
                        "sp(I) is not closed: its closure is ({})",
                        ideal_text(&closure_of_sp)
                    )));
                }
                Ok(None)
            })();
            let m_closure = cl
                .m_times()
                .and_then(|mc| missing_detail(sp, &mc, "m times the closure is not inside sp(I)"));
            [ideal_ok, sandwich, commute, m_closure]
        })
        .collect();

    let mut statuses = [
        AxiomStatus::new("special-part-is-ideal"),
        AxiomStatus::new("m-ideal-inside-special-inside-closure"),
        AxiomStatus::new("special-of-closure-and-closure-of-special"),
        AxiomStatus::new("m-closure-inside-special"),
    ];
    for (k, outcomes) in per_instance.into_iter().enumerate() {
        for (status, outcome) in statuses.iter_mut().zip(outcomes) {
            record(status, k, || vec![instances[k].clone()], outcome);
        }
    }

    let sampled = sample_pairs(instances, pairs, seed);
    let nakayama_outcomes: Vec<(SubsetPair, MonomialIdeal, Result<Option<String>>)> = sampled
        .par_iter()
        .map(|&pair| {
            let ideal = &instances[pair.instance];
            let j = subset(ideal, pair.mask);
            let outcome = (|| {
                let sp = parts[pair.instance].special.clone()?;
                let hypothesis = c.close(&j.sum(&sp)?)?.contains_ideal(ideal)?;
                if !hypothesis {
                    return Ok(None);
                }
                missing_detail(
                    &c.close(&j)?,
                    ideal,
                    "I ⊆ (J + sp(I))^c but I is not inside J^c",
                )
            })();
            (pair, j, outcome)
        })
        .collect();
    let mut nakayama = AxiomStatus::new("nakayama");
    for (pair, j, outcome) in nakayama_outcomes {
        record(
            &mut nakayama,
            pair.instance,
            || vec![instances[pair.instance].clone(), j],
            outcome,
        );
    }

    let mut axioms: Vec<AxiomStatus> = statuses.into_iter().collect();
    axioms.push(nakayama);
    Ok(AxiomReport {
        operation: c.name().to_string(),
        instances: instances.len(),
        axioms,
    })
}

/// Nakayama closure: K ⊆ L ⊆ (K + mL)^c ⇒ K^c = L^c, for every generator
/// subset K of each instance L with at most `MAX_SUBSET_GENERATORS`
/// generators.
pub fn check_nakayama_closure(c: &ClosureOperation, instances: &[MonomialIdeal]) -> AxiomReport {
    let outcomes: Vec<Vec<(MonomialIdeal, Result<Option<String>>)>> = instances
        .par_iter()
        .map(|l| {
            if l.len() > MAX_SUBSET_GENERATORS || l.is_unit() {
                return Vec::new();
            }
            (0..(1u64 << l.len()))
                .map(|mask| {
                    let k = subset(l, mask);
                    let outcome = (|| {
                        let hypothesis = c.close(&k.sum(&l.m_times()?)?)?.contains_ideal(l)?;
                        if !hypothesis {
                            return Ok(None);
                        }
                        let (ck, cl) = (c.close(&k)?, c.close(l)?);
                        Ok((ck != cl).then(|| {
                            format!(
                                "L ⊆ (K + mL)^c but K^c = ({}) and L^c = ({})",
                                ideal_text(&ck),
                                ideal_text(&cl)
                            )
                        }))
                    })();
                    (k, outcome)
                })
                .collect()
        })
        .collect();
    let mut status = AxiomStatus::new("nakayama-closure");
    for (idx, list) in outcomes.into_iter().enumerate() {
        for (k, outcome) in list {
            record(&mut status, idx, || vec![instances[idx].clone(), k], outcome);
        }
    }
    AxiomReport {
        operation: c.name().to_string(),
        instances: instances.len(),
        axioms: vec![status],
    }
}

/// Index of a generator lying in the closure of the others.
pub fn dependent_generator(ideal: &MonomialIdeal, c: &ClosureOperation) -> Result<Option<usize>> {
    if ideal.is_unit() {
        return Err(Error::InvalidArgument("the unit ideal is not allowed here".into()));
    }
    for i in 0..ideal.len() {
        let others: Vec<usize> = (0..ideal.len()).filter(|&j| j != i).collect();
        let closure = c.close(&ideal.subideal(&others))?;
        if closure.contains_monomial(&ideal.generators()[i])? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// No minimal generator lies in the closure of the others.
pub fn is_c_independent(ideal: &MonomialIdeal, c: &ClosureOperation) -> Result<bool> {
    Ok(dependent_generator(ideal, c)?.is_none())
}

/// A generator subset J ⊆ I with J^c = I^c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetReduction {
    pub indices: Vec<usize>,
    pub ideal: MonomialIdeal,
}

/// All ⊆-minimal generator subsets J with I ⊆ J^c, smallest first.
///
/// For J ⊆ I, J^c = I^c iff I ⊆ J^c, and a superset of a reduction is a
/// reduction, so a breadth-first scan by size that skips supersets of found
/// reductions yields exactly the minimal ones.
pub fn minimal_subset_reductions(
    ideal: &MonomialIdeal,
    c: &ClosureOperation,
) -> Result<Vec<SubsetReduction>> {
    if ideal.is_unit() {
        return Err(Error::InvalidArgument("the unit ideal is not allowed here".into()));
    }
    let r = ideal.len();
    if r > MAX_SUBSET_GENERATORS {
        return Err(Error::Unsupported(format!(
            "subset search over {r} generators exceeds {MAX_SUBSET_GENERATORS}"
        )));
    }
    let mut found: Vec<u64> = Vec::new();
    for size in 0..=r as u32 {
        let candidates: Vec<u64> = (0..(1u64 << r))
            .filter(|m| m.count_ones() == size && !found.iter().any(|f| f & m == *f))
            .collect();
        let hits: Vec<Option<u64>> = candidates
            .par_iter()
            .map(|&mask| {
                let closure = c.close(&subset(ideal, mask))?;
                Ok(closure.contains_ideal(ideal)?.then_some(mask))
            })
            .collect::<Result<_>>()?;
        found.extend(hits.into_iter().flatten());
    }
    Ok(found
        .into_iter()
        .map(|mask| {
            let indices: Vec<usize> = (0..r).filter(|&i| mask >> i & 1 == 1).collect();
            SubsetReduction {
                ideal: ideal.subideal(&indices),
                indices,
            }
        })
        .collect())
}

/// The common size of all minimal subset reductions, when there is one.
pub fn spread_over_subsets(ideal: &MonomialIdeal, c: &ClosureOperation) -> Result<Option<usize>> {
    let reductions = minimal_subset_reductions(ideal, c)?;
    let first = reductions.first().map(|r| r.indices.len());
    Ok(first.filter(|&n| reductions.iter().all(|r| r.indices.len() == n)))
}

/// Containments sp(I^{n+w}) ⊆ m·I^{w+1} and (I^{n+w})‾ ⊆ I^{w+1}, where n is
/// the number of generators of I.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrianconSkodaReport {
    pub generators: usize,
    pub w: u32,
    pub special_checked: usize,
    pub special_violations: Vec<ExponentVector>,
    pub integral_checked: usize,
    pub integral_violations: Vec<ExponentVector>,
}

impl BrianconSkodaReport {
    pub fn holds(&self) -> bool {
        self.special_violations.is_empty() && self.integral_violations.is_empty()
    }
}

pub fn briancon_skoda_check(ideal: &MonomialIdeal, w: u32) -> Result<BrianconSkodaReport> {
    ideal.require_proper_nonzero()?;
    let n = u32::try_from(ideal.len()).map_err(|_| Error::Overflow)?;
    let big = ideal.power(n.checked_add(w).ok_or(Error::Overflow)?)?;
    let target = ideal.power(w + 1)?;
    let m_target = target.m_times()?;
    let special = special_integral_closure(&big)?;
    let integral = integral_closure(&big)?;
    let violations = |gens: &MonomialIdeal, into: &MonomialIdeal| -> Result<Vec<ExponentVector>> {
        let mut out = Vec::new();
        for g in gens.generators() {
            if !into.contains_monomial(g)? {
                out.push(g.clone());
            }
        }
        Ok(out)
    };
    Ok(BrianconSkodaReport {
        generators: ideal.len(),
        w,
        special_checked: special.len(),
        special_violations: violations(&special, &m_target)?,
        integral_checked: integral.len(),
        integral_violations: violations(&integral, &target)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum ConditionStatus {
    Holds,
    /// No counterexample with n ≤ n_max.
    HoldsUpTo { n_max: u32 },
    /// A minimal generator of I violating the condition, with the n found
    /// by the search when the condition is existential in n.
    Fails { witness: ExponentVector, n: Option<u32> },
}

impl ConditionStatus {
    pub fn fails(&self) -> bool {
        matches!(self, ConditionStatus::Fails { .. })
    }
}

/// The conditions I ∩ S = mI for S = sp(I) (SP), {f : fⁿ ∈ mIⁿ} (AR), and
/// {f : fⁿ ∈ Iⁿ⁺¹} (NN), tested on monomials, plus bar-independence.
///
/// A monomial of I outside mI is a minimal generator, so each condition
/// reduces to asking whether some minimal generator lies in S.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvolutionReport {
    pub sp: ConditionStatus,
    pub ar: ConditionStatus,
    pub nn: ConditionStatus,
    pub bar_independent: bool,
}

impl EvolutionReport {
    /// bar-independent ⇒ (SP) ⇒ (AR) ⇒ (NN), read on the computed statuses.
    pub fn chain_consistent(&self) -> bool {
        (!self.bar_independent || !self.sp.fails())
            && (self.sp.fails() || !self.ar.fails())
            && (self.ar.fails() || !self.nn.fails())
    }

    pub fn all_hold(&self) -> bool {
        !self.sp.fails() && !self.ar.fails() && !self.nn.fails()
    }
}

pub fn evolution_conditions(ideal: &MonomialIdeal, n_max: u32) -> Result<EvolutionReport> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be positive".into()));
    }
    ideal.require_proper_nonzero()?;
    let mut sp = ConditionStatus::Holds;
    for g in ideal.generators() {
        if contains_special_integral(ideal, g)?.is_in() {
            sp = ConditionStatus::Fails {
                witness: g.clone(),
                n: None,
            };
            break;
        }
    }
    let mut ar = ConditionStatus::HoldsUpTo { n_max };
    'ar: for g in ideal.generators() {
        for n in 1..=n_max {
            if power_witness(&g.checked_scale(n)?, ideal, n, true)?.is_some() {
                ar = ConditionStatus::Fails {
                    witness: g.clone(),
                    n: Some(n),
                };
                break 'ar;
            }
        }
    }
    let mut nn = ConditionStatus::HoldsUpTo { n_max };
    for g in ideal.generators() {
        if let Some(n) = eventually_in_higher_power(g, ideal, n_max)? {
            nn = ConditionStatus::Fails {
                witness: g.clone(),
                n: Some(n),
            };
            break;
        }
    }
    Ok(EvolutionReport {
        sp,
        ar,
        nn,
        bar_independent: is_c_independent(ideal, &ClosureOperation::integral())?,
    })
}

/// Agreement of α ∈ sp(I) with "x^{nα} ∈ I^{n+1} for some n ≤ n_max" over
/// a box, for m-primary I.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReesValuationReport {
    pub points: usize,
    pub agreements: usize,
    /// Special by the LP, but the search found no n ≤ n_max.
    pub bound_insufficient: Vec<ExponentVector>,
    /// Not special by the LP, yet the search found an n.
    pub contradictions: Vec<ExponentVector>,
}

impl ReesValuationReport {
    pub fn passes(&self) -> bool {
        self.contradictions.is_empty()
    }

    pub fn full_agreement(&self) -> bool {
        self.agreements == self.points
    }
}

pub fn reesvalsp_equivalence_check(
    ideal: &MonomialIdeal,
    upper: &[u32],
    n_max: u32,
) -> Result<ReesValuationReport> {
    ideal.require_proper_nonzero()?;
    if !ideal.is_m_primary() {
        return Err(Error::Unsupported("the ideal is not m-primary".into()));
    }
    crate::error::check_dim(ideal.nvars(), upper.len())?;
    let points = crate::monomial::lattice_box(upper);
    let verdicts: Vec<(bool, bool)> = points
        .par_iter()
        .map(|alpha| {
            Ok((
                contains_special_integral(ideal, alpha)?.is_in(),
                eventually_in_higher_power(alpha, ideal, n_max)?.is_some(),
            ))
        })
        .collect::<Result<_>>()?;
    let mut report = ReesValuationReport {
        points: points.len(),
        agreements: 0,
        bound_insufficient: Vec::new(),
        contradictions: Vec::new(),
    };
    for (alpha, (lp, found)) in points.into_iter().zip(verdicts) {
        match (lp, found) {
            (a, b) if a == b => report.agreements += 1,
            (true, false) => report.bound_insufficient.push(alpha),
            _ => report.contradictions.push(alpha),
        }
    }
    Ok(report)
}

/// A proper nonzero monomial ideal with at most `max_gens` generators whose
/// exponents lie in `[0, max_exp]`.
pub fn random_monomial_ideal<R: Rng>(
    rng: &mut R,
    nvars: usize,
    max_exp: u32,
    max_gens: usize,
) -> MonomialIdeal {
    assert!(nvars > 0 && max_exp > 0 && max_gens > 0, "empty sampling range");
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count).map(|_| loop {
        let v: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect();
        if v.iter().any(|&e| e > 0) {
            break ExponentVector::new(v);
        }
    });
    let gens: Vec<ExponentVector> = gens.collect();
    MonomialIdeal::new(nvars, gens).expect("uniform widths")
}

/// `count` ideals in 1..=`max_vars` variables from a seeded generator.
pub fn random_instances(
    seed: u64,
    count: usize,
    max_vars: usize,
    max_exp: u32,
    max_gens: usize,
) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_vars);
            random_monomial_ideal(&mut rng, n, max_exp, max_gens)
        })
        .collect()
}
