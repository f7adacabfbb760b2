//! Exponent vectors and monomial ideals kept in canonical staircase form.
//!
//! A monomial ideal is stored by its minimal generators: an antichain under
//! the componentwise order, sorted in decreasing lexicographic order (the lex
//! monomial order with x₁ > x₂ > …) so that two ideals are equal exactly when
//! their generator lists are.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};

/// A point of ℕⁿ, the exponent of the monomial x^α.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(coords: Vec<u32>) -> Self {
        ExponentVector(coords)
    }

    pub fn zeros(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars])
    }

    /// The exponent of the variable `x_j`.
    pub fn unit(nvars: usize, j: usize) -> Self {
        let mut v = vec![0; nvars];
        v[j] = 1;
        ExponentVector(v)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise `self ≤ other`, i.e. x^self divides x^other.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self ≤ other` and `self ≠ other`.
    pub fn strictly_divides(&self, other: &ExponentVector) -> bool {
        self.divides(other) && self != other
    }

    pub fn checked_add(&self, other: &ExponentVector) -> Result<ExponentVector> {
        check_dim(self.len(), other.len())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn checked_scale(&self, k: u32) -> Result<ExponentVector> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Componentwise difference, `None` unless `other ≤ self`.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        if self.len() != other.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Componentwise maximum (the exponent of the lcm).
    pub fn join(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

/// A monomial ideal given by its minimal generators.
///
/// The zero ideal has no generators; the unit ideal is generated by the zero
/// vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<ExponentVector>,
}

/// The homogeneous maximal ideal (x₁,…,xₙ).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MaximalIdeal {
    pub nvars: usize,
}

impl MaximalIdeal {
    pub fn new(nvars: usize) -> Self {
        MaximalIdeal { nvars }
    }

    pub fn to_ideal(self) -> MonomialIdeal {
        MonomialIdeal {
            nvars: self.nvars,
            gens: (0..self.nvars)
                .map(|j| ExponentVector::unit(self.nvars, j))
                .collect(),
        }
    }
}

/// The canonical staircase of the ideal generated by `gens`.
pub fn minimalize<I>(nvars: usize, gens: I) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = ExponentVector>,
{
    let mut all: Vec<ExponentVector> = Vec::new();
    for g in gens {
        check_dim(nvars, g.len())?;
        all.push(g);
    }
    // Sorting by degree first means any divisor of a vector is seen before it.
    all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    all.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    for g in all {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    Ok(MonomialIdeal { nvars, gens: kept })
}

impl MonomialIdeal {
    pub fn new<I>(nvars: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        minimalize(nvars, gens)
    }

    /// Shorthand for tests and examples: `from_exponents(2, &[&[2, 0], &[0, 2]])`.
    pub fn from_exponents(nvars: usize, gens: &[&[u32]]) -> Result<Self> {
        minimalize(nvars, gens.iter().map(|g| ExponentVector::new(g.to_vec())))
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![ExponentVector::zeros(nvars)],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    /// No generators; the same as [`MonomialIdeal::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(ExponentVector::is_zero)
    }

    /// Nonzero and contained in the maximal ideal.
    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub(crate) fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::InvalidArgument("the zero ideal is not allowed here".into()))
        } else if self.is_unit() {
            Err(Error::InvalidArgument("the unit ideal is not allowed here".into()))
        } else {
            Ok(())
        }
    }

    /// True when some pure power of every variable lies in the ideal.
    pub fn is_m_primary(&self) -> bool {
        (0..self.nvars).all(|j| {
            self.gens
                .iter()
                .any(|g| g.coords().iter().enumerate().all(|(i, &e)| i == j || e == 0))
        }) && !self.is_unit()
    }

    pub fn contains_monomial(&self, alpha: &ExponentVector) -> Result<bool> {
        check_dim(self.nvars, alpha.len())?;
        Ok(self.gens.iter().any(|g| g.divides(alpha)))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dim(self.nvars, other.nvars)?;
        Ok(other
            .gens
            .iter()
            .all(|g| self.gens.iter().any(|h| h.divides(g))))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.nvars, other.nvars)?;
        minimalize(self.nvars, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.nvars, other.nvars)?;
        let mut sums = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                sums.push(a.checked_add(b)?);
            }
        }
        minimalize(self.nvars, sums)
    }

    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::InvalidArgument("power exponent must be positive".into()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// I^{[q]}: every generator scaled by q.
    pub fn bracket_power(&self, q: u32) -> Result<MonomialIdeal> {
        if q == 0 {
            return Err(Error::InvalidArgument("bracket power must be positive".into()));
        }
        minimalize(
            self.nvars,
            self.gens
                .iter()
                .map(|g| g.checked_scale(q))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn m_times(&self) -> Result<MonomialIdeal> {
        self.product(&MaximalIdeal::new(self.nvars).to_ideal())
    }

    /// Componentwise maximum over the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.nvars];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.coords()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    pub fn min_degree(&self) -> Option<u64> {
        self.gens.iter().map(ExponentVector::degree).min()
    }

    /// The ideal generated by a subset of the generators, by index.
    pub fn subideal(&self, indices: &[usize]) -> MonomialIdeal {
        let mut gens: Vec<ExponentVector> =
            indices.iter().map(|&i| self.gens[i].clone()).collect();
        // A subset of an antichain is an antichain; only the order needs fixing.
        gens.sort_by(|a, b| b.cmp(a));
        gens.dedup();
        MonomialIdeal {
            nvars: self.nvars,
            gens,
        }
    }
}

/// Every lattice point of the box `[0, upper₁] × … × [0, upperₙ]`, in
/// lexicographic order.
pub fn lattice_box(upper: &[u32]) -> Vec<ExponentVector> {
    let mut out = vec![ExponentVector::new(Vec::new())];
    for &u in upper {
        let mut next = Vec::with_capacity(out.len() * (u as usize + 1));
        for v in &out {
            for e in 0..=u {
                let mut c = v.coords().to_vec();
                c.push(e);
                next.push(ExponentVector::new(c));
            }
        }
        out = next;
    }
    out
}

/// Decides α ∈ Iᵏ by integer feasibility: nonnegative integers p with Σp = k
/// and Σ pᵢβᵢ ≤ α. With `strict`, additionally Σ pᵢβᵢ ≠ α, which is
/// membership in m·Iᵏ. Returns the multiplicities when feasible.
pub fn power_witness(
    alpha: &ExponentVector,
    ideal: &MonomialIdeal,
    k: u32,
    strict: bool,
) -> Result<Option<Vec<u32>>> {
    check_dim(ideal.nvars(), alpha.len())?;
    let gens = ideal.generators();
    if gens.is_empty() {
        return Ok(None);
    }
    // suffix_min_deg[i] = smallest generator degree among gens[i..]
    let mut suffix_min_deg = vec![u64::MAX; gens.len() + 1];
    for i in (0..gens.len()).rev() {
        suffix_min_deg[i] = suffix_min_deg[i + 1].min(gens[i].degree());
    }
    let mut search = PowerSearch {
        gens,
        suffix_min_deg,
        strict,
        failed: HashSet::new(),
        counts: vec![0; gens.len()],
    };
    if search.run(0, k, alpha.coords().to_vec()) {
        Ok(Some(search.counts))
    } else {
        Ok(None)
    }
}

/// α ∈ Iᵏ.
pub fn power_membership(alpha: &ExponentVector, ideal: &MonomialIdeal, k: u32) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidArgument("power exponent must be positive".into()));
    }
    Ok(power_witness(alpha, ideal, k, false)?.is_some())
}

struct PowerSearch<'a> {
    gens: &'a [ExponentVector],
    suffix_min_deg: Vec<u64>,
    strict: bool,
    failed: HashSet<(usize, u32, Vec<u32>)>,
    counts: Vec<u32>,
}

impl PowerSearch<'_> {
    fn run(&mut self, i: usize, remaining: u32, budget: Vec<u32>) -> bool {
        if remaining == 0 {
            return !self.strict || budget.iter().any(|&b| b > 0);
        }
        if i == self.gens.len() {
            return false;
        }
        let budget_deg: u64 = budget.iter().map(|&b| u64::from(b)).sum();
        let need = u64::from(remaining).saturating_mul(self.suffix_min_deg[i]);
        if need > budget_deg {
            return false;
        }
        let key = (i, remaining, budget);
        if self.failed.contains(&key) {
            return false;
        }
        let budget = key.2.clone();
        let g = self.gens[i].coords();
        let fit = g
            .iter()
            .zip(&budget)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, &b)| b / e)
            .min()
            .unwrap_or(remaining)
            .min(remaining);
        let last = i + 1 == self.gens.len();
        let lowest = if last { remaining } else { 0 };
        let mut p = fit;
        while p >= lowest {
            let next: Vec<u32> = budget.iter().zip(g).map(|(&b, &e)| b - e * p).collect();
            self.counts[i] = p;
            if self.run(i + 1, remaining - p, next) {
                return true;
            }
            if p == 0 {
                break;
            }
            p -= 1;
        }
        self.counts[i] = 0;
        self.failed.insert(key);
        false
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = crate::parse::default_var_names(self.nvars);
        f.write_str(&crate::parse::format_monomial_ideal(self, &names))
    }
}
