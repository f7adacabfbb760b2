//! Frobenius closure and its special part in R = F_p[x₁…xₙ]/J.
//!
//! z is in the Frobenius closure of I when z^q ∈ I^{[q]} for some q = p^e,
//! and in its special part when z^q ∈ m·I^{[q]}, with m = (x₁,…,xₙ). The
//! existential over q is searched up to a bound and a failed search is
//! reported as `NotInUpTo`, never as non-membership.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{ideal_membership, ExtendedBasis, QuotientRing};
use crate::poly::{frobenius_element_power, frobenius_q, qth_root, PolyFp};

pub const DEFAULT_E_MAX: u32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WitnessKind {
    Closure,
    SpecialPart,
}

/// q = p^e at which the defining membership holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusWitness {
    pub e: u32,
    pub kind: WitnessKind,
}

impl FrobeniusWitness {
    /// Re-decides z^q ∈ I^{[q]} (or m·I^{[q]}) at the recorded e.
    pub fn replays(&self, z: &PolyFp, gens: &[PolyFp], ring: &QuotientRing) -> Result<bool> {
        member_at(z, gens, ring, self.e, self.kind)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum BoundedVerdict {
    In(FrobeniusWitness),
    NotInUpTo { e_max: u32 },
}

impl BoundedVerdict {
    pub fn witness(&self) -> Option<FrobeniusWitness> {
        match self {
            BoundedVerdict::In(w) => Some(*w),
            BoundedVerdict::NotInUpTo { .. } => None,
        }
    }

    pub fn is_in(&self) -> bool {
        matches!(self, BoundedVerdict::In(_))
    }
}

impl std::fmt::Display for BoundedVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundedVerdict::In(w) => write!(f, "In at e={}", w.e),
            BoundedVerdict::NotInUpTo { e_max } => write!(f, "NotIn up to e={e_max}"),
        }
    }
}

fn bracket(gens: &[PolyFp], q: u64) -> Result<Vec<PolyFp>> {
    gens.iter().map(|g| frobenius_element_power(g, q)).collect()
}

/// x_k·g for every variable x_k and every g.
fn times_maximal(gens: &[PolyFp], ring: &QuotientRing) -> Vec<PolyFp> {
    let mut out = Vec::with_capacity(gens.len() * ring.nvars());
    for g in gens {
        for k in 0..ring.nvars() {
            out.push(&ring.variable(k) * g);
        }
    }
    out
}

fn check_inputs(z: Option<&PolyFp>, gens: &[PolyFp], ring: &QuotientRing) -> Result<()> {
    if let Some(z) = z {
        ring.check_element(z)?;
    }
    if ring.ideal_basis(gens)?.is_unit() {
        return Err(Error::InvalidArgument("the ideal is the unit ideal".into()));
    }
    Ok(())
}

fn member_at(
    z: &PolyFp,
    gens: &[PolyFp],
    ring: &QuotientRing,
    e: u32,
    kind: WitnessKind,
) -> Result<bool> {
    let q = frobenius_q(ring.characteristic(), e)?;
    let zq = frobenius_element_power(z, q)?;
    let bracket = bracket(gens, q)?;
    let target = match kind {
        WitnessKind::Closure => bracket,
        WitnessKind::SpecialPart => times_maximal(&bracket, ring),
    };
    ideal_membership(&zq, &target, ring)
}

fn search(
    z: &PolyFp,
    gens: &[PolyFp],
    ring: &QuotientRing,
    e_max: u32,
    kind: WitnessKind,
) -> Result<BoundedVerdict> {
    check_inputs(Some(z), gens, ring)?;
    for e in 0..=e_max {
        if member_at(z, gens, ring, e, kind)? {
            return Ok(BoundedVerdict::In(FrobeniusWitness { e, kind }));
        }
    }
    Ok(BoundedVerdict::NotInUpTo { e_max })
}

/// Smallest e ≤ `e_max` with z^{p^e} ∈ I^{[p^e]}.
pub fn frobenius_member(
    z: &PolyFp,
    gens: &[PolyFp],
    ring: &QuotientRing,
    e_max: u32,
) -> Result<BoundedVerdict> {
    search(z, gens, ring, e_max, WitnessKind::Closure)
}

/// Smallest e ≤ `e_max` with z^{p^e} ∈ m·I^{[p^e]}.
pub fn special_frobenius_member(
    z: &PolyFp,
    gens: &[PolyFp],
    ring: &QuotientRing,
    e_max: u32,
) -> Result<BoundedVerdict> {
    search(z, gens, ring, e_max, WitnessKind::SpecialPart)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum Independence {
    /// No gᵢ^q lies in the bracket power of the others for q ≤ p^e_max.
    IndependentUpTo { e_max: u32 },
    /// g_index^q lies in the bracket power of the others at q = p^e.
    Dependent { index: usize, e: u32 },
}

impl Independence {
    pub fn is_independent(&self) -> bool {
        matches!(self, Independence::IndependentUpTo { .. })
    }
}

fn without(items: &[PolyFp], i: usize) -> Vec<PolyFp> {
    items
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, g)| g.clone())
        .collect()
}

/// Bounded F-independence: no generator is in the Frobenius closure of the
/// others, checked for every q ≤ p^e_max.
pub fn f_independent(gens: &[PolyFp], ring: &QuotientRing, e_max: u32) -> Result<Independence> {
    if gens.is_empty() {
        return Err(Error::InvalidArgument("empty generator list".into()));
    }
    check_inputs(None, gens, ring)?;
    for e in 0..=e_max {
        let q = frobenius_q(ring.characteristic(), e)?;
        let bracket = bracket(gens, q)?;
        for (i, gq) in bracket.iter().enumerate() {
            if ideal_membership(gq, &without(&bracket, i), ring)? {
                return Ok(Independence::Dependent { index: i, e });
            }
        }
    }
    Ok(Independence::IndependentUpTo { e_max })
}

fn require_graded(gens: &[PolyFp], ring: &QuotientRing) -> Result<()> {
    if !ring.is_graded() {
        return Err(Error::Unsupported(
            "minimal generator counts need a graded quotient ring".into(),
        ));
    }
    if !gens.iter().all(PolyFp::is_homogeneous) {
        return Err(Error::Unsupported(
            "minimal generator counts need homogeneous generators".into(),
        ));
    }
    Ok(())
}

/// Indices of a minimal generating subset of (items), chosen greedily in
/// order by graded Nakayama: an element is dropped when it lies in the
/// remaining ones plus m·(items).
fn nakayama_minimal(items: &[PolyFp], ring: &QuotientRing) -> Result<Vec<usize>> {
    let m_times = times_maximal(items, ring);
    let mut kept: Vec<usize> = (0..items.len()).collect();
    for i in 0..items.len() {
        let mut target: Vec<PolyFp> = kept
            .iter()
            .filter(|&&j| j != i)
            .map(|&j| items[j].clone())
            .collect();
        target.extend(m_times.iter().cloned());
        if ideal_membership(&items[i], &target, ring)? {
            kept.retain(|&j| j != i);
        }
    }
    Ok(kept)
}

/// The images of gᵢ^q are linearly independent in L^{[q]}/m·L^{[q]}.
pub fn analytically_f_independent_at_q(
    gens: &[PolyFp],
    ring: &QuotientRing,
    q: u64,
) -> Result<bool> {
    require_graded(gens, ring)?;
    check_inputs(None, gens, ring)?;
    let bracket = bracket(gens, q)?;
    let m_times = times_maximal(&bracket, ring);
    for (i, gq) in bracket.iter().enumerate() {
        let mut target = without(&bracket, i);
        target.extend(m_times.iter().cloned());
        if ideal_membership(gq, &target, ring)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// z = i + s with i ∈ I and s in the special part of the Frobenius closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialDecomposition {
    pub ideal_part: PolyFp,
    pub special_part: PolyFp,
    /// The exponent at which z^q ∈ I^{[q]} was found; s^q ∈ m·I^{[q]} holds
    /// at the same q.
    pub e: u32,
}

impl SpecialDecomposition {
    /// Checks z = i + s in R, i ∈ I, and s^q ∈ m·I^{[q]}.
    pub fn replays(&self, z: &PolyFp, gens: &[PolyFp], ring: &QuotientRing) -> Result<bool> {
        let sum = &self.ideal_part + &self.special_part;
        if ring.reduce(&sum)? != ring.reduce(z)? {
            return Ok(false);
        }
        if !ideal_membership(&self.ideal_part, gens, ring)? {
            return Ok(false);
        }
        member_at(&self.special_part, gens, ring, self.e, WitnessKind::SpecialPart)
    }
}

/// Splits a Frobenius-closure member as z = Σuᵢgᵢ + s.
///
/// From z^q = Σaᵢgᵢ^q, let cᵢ be the constant term of aᵢ and uᵢ its q-th
/// root in F_p. Then (z − Σuᵢgᵢ)^q = Σ(aᵢ − cᵢ)gᵢ^q ∈ m·I^{[q]}.
pub fn special_decompose(
    z: &PolyFp,
    gens: &[PolyFp],
    ring: &QuotientRing,
    e_max: u32,
) -> Result<SpecialDecomposition> {
    let e = match frobenius_member(z, gens, ring, e_max)? {
        BoundedVerdict::In(w) => w.e,
        BoundedVerdict::NotInUpTo { e_max } => {
            return Err(Error::NoWitness(format!(
                "no q = p^e with e <= {e_max} puts z^q in the bracket power"
            )))
        }
    };
    let p = ring.characteristic();
    let n = ring.nvars();
    let q = frobenius_q(p, e)?;
    let mut lift_gens = bracket(gens, q)?;
    lift_gens.extend(ring.relations().elements().iter().cloned());
    let zq = frobenius_element_power(z, q)?;
    let coeffs = ExtendedBasis::new(p, n, &lift_gens)
        .lift(&zq, lift_gens.len())
        .ok_or_else(|| Error::NoWitness("membership could not be lifted".into()))?;

    let mut ideal_part = PolyFp::zero(p, n);
    for (a, g) in coeffs.iter().zip(gens) {
        let u = qth_root(a.constant_term(), q, p);
        if u != 0 {
            ideal_part = &ideal_part + &g.scale(u);
        }
    }
    let ideal_part = ring.reduce(&ideal_part)?;
    let special_part = ring.reduce(&(z - &ideal_part))?;
    let out = SpecialDecomposition {
        ideal_part,
        special_part,
        e,
    };
    if !out.replays(z, gens, ring)? {
        return Err(Error::NoWitness(
            "the split did not replay; constant terms are not well defined in this ring".into(),
        ));
    }
    Ok(out)
}

/// μ(I^{[q]}) for q = p^0, …, p^e_max.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpreadTable {
    pub e: Vec<u32>,
    pub mu: Vec<usize>,
    /// The last three values agree.
    pub stable: bool,
}

impl SpreadTable {
    pub fn eventual(&self) -> Option<usize> {
        if self.stable {
            self.mu.last().copied()
        } else {
            None
        }
    }
}

/// Minimal generator counts of the bracket powers of a homogeneous ideal.
pub fn f_spread(gens: &[PolyFp], ring: &QuotientRing, e_max: u32) -> Result<SpreadTable> {
    require_graded(gens, ring)?;
    check_inputs(None, gens, ring)?;
    let mut e_list = Vec::new();
    let mut mu = Vec::new();
    for e in 0..=e_max {
        let q = frobenius_q(ring.characteristic(), e)?;
        let bracket = bracket(gens, q)?;
        e_list.push(e);
        mu.push(nakayama_minimal(&bracket, ring)?.len());
    }
    let stable = mu.len() >= 3 && mu[mu.len() - 3..].windows(2).all(|w| w[0] == w[1]);
    Ok(SpreadTable {
        e: e_list,
        mu,
        stable,
    })
}
