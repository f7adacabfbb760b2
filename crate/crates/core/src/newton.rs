//! Integral closure of monomial ideals and its special part.
//!
//! For a monomial ideal minimally generated by x^{β₁},…,x^{β_r}:
//!
//! * α ∈ Γ(Ī) iff some convex combination Σcᵢβᵢ (cᵢ ≥ 0, Σcᵢ = 1) is ≤ α;
//! * α ∈ Γ(sp(I)) iff some convex combination is ≤ α and differs from it.
//!
//! Both are decided by exact-rational linear programs. The strict version
//! maximizes the total slack Σⱼ(αⱼ − Σᵢcᵢβᵢⱼ); since the feasible region is
//! convex, a point with some nonzero slack exists iff that maximum is
//! positive.
//!
//! Closures are computed by scanning a finite box. A minimal generator α of
//! Ī satisfies αⱼ ≤ maxᵢβᵢⱼ: otherwise α − eⱼ still dominates the same
//! convex combination. For sp(I) the bound is maxᵢβᵢⱼ + 1, since at
//! αⱼ ≥ maxᵢβᵢⱼ + 2 the decremented point keeps a strict coordinate at j.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::lp::{integer, LinearProgram, LpOutcome, Rational};
use crate::monomial::{lattice_box, minimalize, power_witness, ExponentVector, MonomialIdeal};

/// Nonnegative rationals c₁,…,c_r summing to one with Σcᵢβᵢ ≤ α.
///
/// `strict_variable` (0-based) names a coordinate where the inequality is
/// strict. In JSON it is written 1-based as `strict_coordinate`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexCertificate {
    pub coefficients: Vec<Rational>,
    pub strict_variable: Option<usize>,
}

impl ConvexCertificate {
    /// Σcᵢβᵢ for the generators of `ideal`.
    pub fn combination(&self, ideal: &MonomialIdeal) -> Vec<Rational> {
        let mut point = vec![Rational::zero(); ideal.nvars()];
        for (c, g) in self.coefficients.iter().zip(ideal.generators()) {
            if c.is_zero() {
                continue;
            }
            for (p, &e) in point.iter_mut().zip(g.coords()) {
                *p += c * integer(i64::from(e));
            }
        }
        point
    }

    /// Re-checks every defining condition with exact arithmetic.
    pub fn replays(&self, ideal: &MonomialIdeal, alpha: &ExponentVector) -> bool {
        if self.coefficients.len() != ideal.len() || alpha.len() != ideal.nvars() {
            return false;
        }
        if self.coefficients.iter().any(Signed::is_negative) {
            return false;
        }
        let total = self
            .coefficients
            .iter()
            .fold(Rational::zero(), |a, c| a + c);
        if !total.is_one() {
            return false;
        }
        let point = self.combination(ideal);
        let dominated = point
            .iter()
            .zip(alpha.coords())
            .all(|(p, &a)| *p <= integer(i64::from(a)));
        if !dominated {
            return false;
        }
        match self.strict_variable {
            None => true,
            Some(j) => j < point.len() && point[j] < integer(i64::from(alpha.coords()[j])),
        }
    }
}

impl Serialize for ConvexCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ConvexCertificate", 2)?;
        let coeffs: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        s.serialize_field("coefficients", &coeffs)?;
        s.serialize_field("strict_coordinate", &self.strict_variable.map(|j| j + 1))?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for ConvexCertificate {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            coefficients: Vec<String>,
            #[serde(default)]
            strict_coordinate: Option<usize>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let coefficients = raw
            .coefficients
            .iter()
            .map(|s| s.parse::<Rational>().map_err(de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let strict_variable = match raw.strict_coordinate {
            Some(0) => return Err(de::Error::custom("strict_coordinate is 1-based")),
            Some(j) => Some(j - 1),
            None => None,
        };
        Ok(ConvexCertificate {
            coefficients,
            strict_variable,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    In,
    NotIn,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipResult {
    pub verdict: Verdict,
    pub certificate: Option<ConvexCertificate>,
}

impl MembershipResult {
    fn member(certificate: ConvexCertificate) -> Self {
        MembershipResult {
            verdict: Verdict::In,
            certificate: Some(certificate),
        }
    }

    fn non_member() -> Self {
        MembershipResult {
            verdict: Verdict::NotIn,
            certificate: None,
        }
    }

    pub fn is_in(&self) -> bool {
        self.verdict == Verdict::In
    }
}

fn unit_certificate(r: usize, i: usize, strict_variable: Option<usize>) -> ConvexCertificate {
    let mut coefficients = vec![Rational::zero(); r];
    coefficients[i] = Rational::one();
    ConvexCertificate {
        coefficients,
        strict_variable,
    }
}

/// Variables are c₁..c_r followed by slacks s₁..s_n.
fn membership_program(ideal: &MonomialIdeal, alpha: &ExponentVector) -> LinearProgram {
    let r = ideal.len();
    let n = ideal.nvars();
    let mut lp = LinearProgram::new(r + n);
    for j in 0..n {
        let mut row: Vec<Rational> = ideal
            .generators()
            .iter()
            .map(|g| integer(i64::from(g.coords()[j])))
            .collect();
        row.extend((0..n).map(|k| if k == j { Rational::one() } else { Rational::zero() }));
        lp.add_equality(row, integer(i64::from(alpha.coords()[j])));
    }
    let mut row = vec![Rational::one(); r];
    row.extend(std::iter::repeat_n(Rational::zero(), n));
    lp.add_equality(row, Rational::one());
    lp
}

fn check_args(ideal: &MonomialIdeal, alpha: &ExponentVector) -> Result<()> {
    ideal.require_proper_nonzero()?;
    check_dim(ideal.nvars(), alpha.len())
}

/// α ∈ Γ(Ī), with a replayable certificate on success.
pub fn contains_integral(ideal: &MonomialIdeal, alpha: &ExponentVector) -> Result<MembershipResult> {
    check_args(ideal, alpha)?;
    if let Some(i) = ideal.generators().iter().position(|g| g.divides(alpha)) {
        return Ok(MembershipResult::member(unit_certificate(ideal.len(), i, None)));
    }
    if alpha.degree() < ideal.min_degree().unwrap_or(0) {
        return Ok(MembershipResult::non_member());
    }
    match membership_program(ideal, alpha).solve() {
        LpOutcome::Optimal { point, .. } => {
            let coefficients = point[..ideal.len()].to_vec();
            Ok(MembershipResult::member(ConvexCertificate {
                coefficients,
                strict_variable: None,
            }))
        }
        LpOutcome::Infeasible => Ok(MembershipResult::non_member()),
        LpOutcome::Unbounded => unreachable!("zero objective cannot be unbounded"),
    }
}

/// α ∈ Γ(sp(I)): a convex combination of generators lies strictly below α.
pub fn contains_special_integral(
    ideal: &MonomialIdeal,
    alpha: &ExponentVector,
) -> Result<MembershipResult> {
    check_args(ideal, alpha)?;
    if let Some(i) = ideal
        .generators()
        .iter()
        .position(|g| g.strictly_divides(alpha))
    {
        let g = &ideal.generators()[i];
        let j = (0..alpha.len()).find(|&j| g.coords()[j] < alpha.coords()[j]);
        return Ok(MembershipResult::member(unit_certificate(ideal.len(), i, j)));
    }
    // Σcᵢ|βᵢ| ≥ min|βᵢ|, and strictness needs it below |α|.
    if alpha.degree() <= ideal.min_degree().unwrap_or(0) {
        return Ok(MembershipResult::non_member());
    }
    let r = ideal.len();
    let n = ideal.nvars();
    let mut lp = membership_program(ideal, alpha);
    let mut objective = vec![Rational::zero(); r];
    objective.extend(std::iter::repeat_n(Rational::one(), n));
    lp.set_objective(objective);
    match lp.solve() {
        LpOutcome::Optimal { point, value } if value.is_positive() => {
            let strict = (0..n).find(|&j| point[r + j].is_positive());
            Ok(MembershipResult::member(ConvexCertificate {
                coefficients: point[..r].to_vec(),
                strict_variable: strict,
            }))
        }
        LpOutcome::Optimal { .. } | LpOutcome::Infeasible => Ok(MembershipResult::non_member()),
        LpOutcome::Unbounded => unreachable!("slack is bounded by α"),
    }
}

fn scan(
    ideal: &MonomialIdeal,
    upper: &[u32],
    test: fn(&MonomialIdeal, &ExponentVector) -> Result<MembershipResult>,
) -> Result<Vec<ExponentVector>> {
    let points = lattice_box(upper);
    let hits: Vec<Option<ExponentVector>> = points
        .into_par_iter()
        .map(|alpha| Ok(test(ideal, &alpha)?.is_in().then_some(alpha)))
        .collect::<Result<_>>()?;
    Ok(hits.into_iter().flatten().collect())
}

/// Exponents of Ī inside `[0, upper]`.
pub fn integral_points_in_box(ideal: &MonomialIdeal, upper: &[u32]) -> Result<Vec<ExponentVector>> {
    ideal.require_proper_nonzero()?;
    check_dim(ideal.nvars(), upper.len())?;
    scan(ideal, upper, contains_integral)
}

/// Exponents of sp(I) inside `[0, upper]`.
pub fn special_points_in_box(ideal: &MonomialIdeal, upper: &[u32]) -> Result<Vec<ExponentVector>> {
    ideal.require_proper_nonzero()?;
    check_dim(ideal.nvars(), upper.len())?;
    scan(ideal, upper, contains_special_integral)
}

/// The box `[0, maxβ + pad]`.
pub fn closure_box(ideal: &MonomialIdeal, pad: u32) -> Vec<u32> {
    ideal.max_exponents().into_iter().map(|m| m + pad).collect()
}

pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let points = integral_points_in_box(ideal, &closure_box(ideal, 0))?;
    minimalize(ideal.nvars(), points)
}

pub fn special_integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let points = special_points_in_box(ideal, &closure_box(ideal, 1))?;
    minimalize(ideal.nvars(), points)
}

/// low(conv(S)) ∩ ℕⁿ for the generator set S: the exponents of Ī that are
/// not in sp(I).
pub fn low_points(ideal: &MonomialIdeal) -> Result<Vec<ExponentVector>> {
    let upper = closure_box(ideal, 0);
    let integral = integral_points_in_box(ideal, &upper)?;
    let mut out = Vec::new();
    for alpha in integral {
        if !contains_special_integral(ideal, &alpha)?.is_in() {
            out.push(alpha);
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Outcome of testing Ī = I + sp(I).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub holds: bool,
    /// An exponent in the symmetric difference of the generators and the
    /// low points.
    pub witness: Option<ExponentVector>,
    /// Whether `integral_closure(I) == I + special_integral_closure(I)`
    /// agreed with `holds`.
    pub cross_check_agrees: bool,
}

pub fn decomposition_holds(ideal: &MonomialIdeal) -> Result<Decomposition> {
    let low = low_points(ideal)?;
    let gens = ideal.generators();
    let witness = low
        .iter()
        .find(|p| !gens.contains(p))
        .or_else(|| gens.iter().find(|g| !low.contains(g)))
        .cloned();
    let holds = witness.is_none();
    let closure = integral_closure(ideal)?;
    let split = ideal.sum(&special_integral_closure(ideal)?)?;
    Ok(Decomposition {
        holds,
        witness,
        cross_check_agrees: (closure == split) == holds,
    })
}

pub const DEFAULT_N_MAX: u32 = 32;

/// Smallest n ≤ `n_max` with x^{nα} ∈ I^{n+1}, searched by integer
/// feasibility.
pub fn eventually_in_higher_power(
    alpha: &ExponentVector,
    ideal: &MonomialIdeal,
    n_max: u32,
) -> Result<Option<u32>> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be positive".into()));
    }
    check_args(ideal, alpha)?;
    for n in 1..=n_max {
        let scaled = alpha.checked_scale(n)?;
        if power_witness(&scaled, ideal, n + 1, false)?.is_some() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// A monomial valuation v(x^α) = a·α from a bounded edge of a 2-variable
/// Newton polygon, with its value on the ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FacetValuation {
    pub normal: [u64; 2],
    pub value: u64,
}

impl FacetValuation {
    pub fn evaluate(&self, alpha: &ExponentVector) -> u64 {
        self.normal[0] * u64::from(alpha.coords()[0]) + self.normal[1] * u64::from(alpha.coords()[1])
    }
}

impl fmt::Display for FacetValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "normal ({}, {}), value {}", self.normal[0], self.normal[1], self.value)
    }
}

/// Inner normals of the bounded edges of the Newton polygon of an m-primary
/// ideal in two variables.
pub fn staircase_valuations_2d(ideal: &MonomialIdeal) -> Result<Vec<FacetValuation>> {
    if ideal.nvars() != 2 {
        return Err(Error::Unsupported("staircase valuations need exactly two variables".into()));
    }
    if !ideal.is_m_primary() {
        return Err(Error::Unsupported("staircase valuations need an m-primary ideal".into()));
    }
    let mut pts: Vec<(i64, i64)> = ideal
        .generators()
        .iter()
        .map(|g| (i64::from(g.coords()[0]), i64::from(g.coords()[1])))
        .collect();
    // Staircase order: x ascending, hence y descending.
    pts.sort();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // Keep only counter-clockwise turns (lower-left convex chain).
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let facets = hull
        .windows(2)
        .map(|w| {
            let (p, q) = (w[0], w[1]);
            let dx = (q.0 - p.0) as u64;
            let dy = (p.1 - q.1) as u64;
            let g = num_integer::gcd(dx, dy);
            let normal = [dy / g, dx / g];
            FacetValuation {
                normal,
                value: normal[0] * p.0 as u64 + normal[1] * p.1 as u64,
            }
        })
        .collect();
    Ok(facets)
}
