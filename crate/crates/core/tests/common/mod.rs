#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use spclosure::monomial::{ExponentVector, MonomialIdeal};
use spclosure::poly::{inv_mod, PolyFp};

/// Exponent vectors with at least one positive coordinate.
pub fn nonzero_vector(nvars: usize, max_exp: u32) -> impl Strategy<Value = ExponentVector> {
    prop::collection::vec(0..=max_exp, nvars).prop_map(|mut v| {
        if v.iter().all(|&e| e == 0) {
            v[0] = 1;
        }
        ExponentVector::new(v)
    })
}

/// Proper nonzero monomial ideals in `nvars` variables.
pub fn ideal_in(nvars: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(nonzero_vector(nvars, max_exp), 1..=max_gens)
        .prop_map(move |gens| MonomialIdeal::new(nvars, gens).unwrap())
}

/// Proper nonzero monomial ideals in 1 to `max_vars` variables.
pub fn ideal(max_vars: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_vars).prop_flat_map(move |n| ideal_in(n, max_exp, max_gens))
}

pub fn ideal_with_point(
    max_vars: usize,
    max_exp: u32,
    max_gens: usize,
) -> impl Strategy<Value = (MonomialIdeal, ExponentVector)> {
    (1..=max_vars).prop_flat_map(move |n| {
        (
            ideal_in(n, max_exp, max_gens),
            prop::collection::vec(0..=max_exp + 1, n).prop_map(ExponentVector::new),
        )
    })
}

pub fn ev(coords: &[u32]) -> ExponentVector {
    ExponentVector::new(coords.to_vec())
}

pub fn mono(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(n, gens).unwrap()
}

/// A random polynomial with up to `max_terms` terms of degree ≤ `max_deg`
/// per variable.
pub fn random_poly<R: Rng>(rng: &mut R, p: u64, nvars: usize, max_terms: usize, max_deg: u32) -> PolyFp {
    let mut f = PolyFp::zero(p, nvars);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let exp: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=max_deg)).collect();
        f.add_term(rng.gen_range(1..p), ExponentVector::new(exp));
    }
    f
}

/// lcm(a, b) of exponent vectors.
pub fn lcm(a: &ExponentVector, b: &ExponentVector) -> ExponentVector {
    a.join(b)
}

/// The S-polynomial of f and g, built directly from leading terms.
pub fn s_polynomial(f: &PolyFp, g: &PolyFp) -> PolyFp {
    let p = f.characteristic();
    let (lf, cf) = f.leading_term().unwrap();
    let (lg, cg) = g.leading_term().unwrap();
    let l = lcm(lf, lg);
    let a = f.mul_term(inv_mod(cf, p), &l.checked_sub(lf).unwrap());
    let b = g.mul_term(inv_mod(cg, p), &l.checked_sub(lg).unwrap());
    &a - &b
}
