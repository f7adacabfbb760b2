//! Brute-force certificate search, independent of the LP.
//!
//! A rational certificate c with common denominator q is an integer vector
//! p = q·c with Σp = q. Enumerating every such p for q up to a bound decides
//! membership exactly whenever some vertex of the feasible region has
//! denominator at most the bound. For r ≤ 3 generators with exponents ≤ 4
//! vertex denominators are at most 16 (twice the area of a lattice triangle
//! in [0,4]²), so the default bound of 24 is exact there.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{check_dim, Result};
use crate::monomial::{lattice_box, ExponentVector, MonomialIdeal};
use crate::newton::{closure_box, contains_integral, contains_special_integral};

pub const DEFAULT_DENOMINATOR_BOUND: u32 = 24;

/// Σ numeratorsᵢ = denominator and Σ numeratorsᵢβᵢ ≤ denominator·α.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleCertificate {
    pub denominator: u32,
    pub numerators: Vec<u32>,
}

struct Enumeration<'a> {
    gens: &'a [ExponentVector],
    target: Vec<u64>,
    strict: bool,
    counts: Vec<u32>,
}

impl Enumeration<'_> {
    fn run(&mut self, i: usize, remaining: u32, acc: &mut [u64]) -> bool {
        if i + 1 == self.gens.len() {
            let g = self.gens[i].coords();
            let mut strict_somewhere = false;
            for (j, (&a, &t)) in acc.iter().zip(&self.target).enumerate() {
                let v = a + u64::from(remaining) * u64::from(g[j]);
                if v > t {
                    return false;
                }
                strict_somewhere |= v < t;
            }
            self.counts[i] = remaining;
            return !self.strict || strict_somewhere;
        }
        let g = self.gens[i].coords();
        for p in 0..=remaining {
            let fits = acc
                .iter()
                .zip(&self.target)
                .zip(g)
                .all(|((&a, &t), &e)| a + u64::from(p) * u64::from(e) <= t);
            if !fits {
                break;
            }
            for (a, &e) in acc.iter_mut().zip(g) {
                *a += u64::from(p) * u64::from(e);
            }
            self.counts[i] = p;
            let found = self.run(i + 1, remaining - p, acc);
            for (a, &e) in acc.iter_mut().zip(g) {
                *a -= u64::from(p) * u64::from(e);
            }
            if found {
                return true;
            }
        }
        false
    }
}

fn search(
    ideal: &MonomialIdeal,
    alpha: &ExponentVector,
    bound: u32,
    strict: bool,
) -> Result<Option<OracleCertificate>> {
    check_dim(ideal.nvars(), alpha.len())?;
    ideal.require_proper_nonzero()?;
    let gens = ideal.generators();
    for q in 1..=bound {
        let mut e = Enumeration {
            gens,
            target: alpha.coords().iter().map(|&a| u64::from(a) * u64::from(q)).collect(),
            strict,
            counts: vec![0; gens.len()],
        };
        let mut acc = vec![0u64; ideal.nvars()];
        if e.run(0, q, &mut acc) {
            return Ok(Some(OracleCertificate {
                denominator: q,
                numerators: e.counts,
            }));
        }
    }
    Ok(None)
}

/// A certificate for α ∈ Γ(Ī) with denominator ≤ `bound`.
pub fn oracle_integral(
    ideal: &MonomialIdeal,
    alpha: &ExponentVector,
    bound: u32,
) -> Result<Option<OracleCertificate>> {
    search(ideal, alpha, bound, false)
}

/// A certificate for α ∈ Γ(sp(I)) with denominator ≤ `bound`.
pub fn oracle_special(
    ideal: &MonomialIdeal,
    alpha: &ExponentVector,
    bound: u32,
) -> Result<Option<OracleCertificate>> {
    search(ideal, alpha, bound, true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleDisagreement {
    pub alpha: ExponentVector,
    pub strict: bool,
    pub lp: bool,
    pub oracle: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleComparison {
    pub points: usize,
    pub disagreements: Vec<OracleDisagreement>,
}

impl OracleComparison {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Compares both LP membership tests with the oracle on `[0, maxβ + 1]`.
pub fn compare_with_lp(ideal: &MonomialIdeal, bound: u32) -> Result<OracleComparison> {
    ideal.require_proper_nonzero()?;
    let points = lattice_box(&closure_box(ideal, 1));
    let per_point: Vec<Vec<OracleDisagreement>> = points
        .par_iter()
        .map(|alpha| {
            let mut out = Vec::new();
            let lp = contains_integral(ideal, alpha)?.is_in();
            let oracle = oracle_integral(ideal, alpha, bound)?.is_some();
            if lp != oracle {
                out.push(OracleDisagreement {
                    alpha: alpha.clone(),
                    strict: false,
                    lp,
                    oracle,
                });
            }
            let lp = contains_special_integral(ideal, alpha)?.is_in();
            let oracle = oracle_special(ideal, alpha, bound)?.is_some();
            if lp != oracle {
                out.push(OracleDisagreement {
                    alpha: alpha.clone(),
                    strict: true,
                    lp,
                    oracle,
                });
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(OracleComparison {
        points: points.len(),
        disagreements: per_point.into_iter().flatten().collect(),
    })
}
