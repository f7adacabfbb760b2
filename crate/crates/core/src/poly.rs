//! Sparse multivariate polynomials over a prime field F_p.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;

/// Largest characteristic accepted; keeps products of residues inside u64.
pub const MAX_CHARACTERISTIC: u64 = u32::MAX as u64;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if p > MAX_CHARACTERISTIC || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not a supported prime characteristic")));
    }
    Ok(())
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p), "inverse of zero");
    pow_mod(a, p - 2, p)
}

/// The q-th root of `c` in F_p, using that Frobenius is a bijection on F_p:
/// raise to the inverse of q modulo p − 1.
pub fn qth_root(c: u64, q: u64, p: u64) -> u64 {
    let c = c % p;
    if c == 0 || p == 2 {
        return c;
    }
    let order = p - 1;
    let e = inv_mod_general(q % order, order).expect("q is a power of p, hence coprime to p - 1");
    pow_mod(c, e, p)
}

fn inv_mod_general(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Graded reverse lexicographic comparison.
pub fn grevlex_cmp(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.coords().iter().zip(b.coords()).rev() {
            if x != y {
                // A smaller exponent in the last differing variable wins.
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// A monomial ordered by grevlex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub ExponentVector);

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `nvars` variables with coefficients in F_p; zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyFp {
    p: u64,
    nvars: usize,
    terms: BTreeMap<Monomial, u64>,
}

impl PolyFp {
    pub fn zero(p: u64, nvars: usize) -> Self {
        PolyFp {
            p,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(p: u64, nvars: usize, c: u64) -> Self {
        Self::term(p, nvars, c, ExponentVector::zeros(nvars))
    }

    pub fn one(p: u64, nvars: usize) -> Self {
        Self::constant(p, nvars, 1)
    }

    pub fn variable(p: u64, nvars: usize, j: usize) -> Self {
        Self::term(p, nvars, 1, ExponentVector::unit(nvars, j))
    }

    pub fn term(p: u64, nvars: usize, c: u64, exp: ExponentVector) -> Self {
        assert_eq!(exp.len(), nvars, "monomial width");
        let mut terms = BTreeMap::new();
        let c = c % p;
        if c != 0 {
            terms.insert(Monomial(exp), c);
        }
        PolyFp { p, nvars, terms }
    }

    pub fn monomial(p: u64, exp: ExponentVector) -> Self {
        let n = exp.len();
        Self::term(p, n, 1, exp)
    }

    /// Builds from (coefficient, exponent) pairs, combining like terms.
    pub fn from_terms<I>(p: u64, nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, ExponentVector)>,
    {
        let mut out = PolyFp::zero(p, nvars);
        for (c, e) in terms {
            out.add_term(c, e);
        }
        out
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing grevlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, u64)> + '_ {
        self.terms.iter().rev().map(|(m, &c)| (&m.0, c))
    }

    pub fn leading_term(&self) -> Option<(&ExponentVector, u64)> {
        self.terms.iter().next_back().map(|(m, &c)| (&m.0, c))
    }

    pub fn leading_monomial(&self) -> Option<&ExponentVector> {
        self.leading_term().map(|(m, _)| m)
    }

    pub fn coefficient(&self, exp: &ExponentVector) -> u64 {
        self.terms.get(&Monomial(exp.clone())).copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> u64 {
        self.coefficient(&ExponentVector::zeros(self.nvars))
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.0.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn same_ring(&self, other: &PolyFp) -> bool {
        self.p == other.p && self.nvars == other.nvars
    }

    pub fn add_term(&mut self, c: u64, exp: ExponentVector) {
        assert_eq!(exp.len(), self.nvars, "monomial width");
        let c = c % self.p;
        if c == 0 {
            return;
        }
        let key = Monomial(exp);
        let p = self.p;
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v = (*v + c) % p;
                if *v == 0 {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn scale(&self, c: u64) -> PolyFp {
        let c = c % self.p;
        if c == 0 {
            return PolyFp::zero(self.p, self.nvars);
        }
        let p = self.p;
        PolyFp {
            p,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, &v)| (m.clone(), v * c % p)).collect(),
        }
    }

    /// c·x^shift·self.
    pub fn mul_term(&self, c: u64, shift: &ExponentVector) -> PolyFp {
        let c = c % self.p;
        if c == 0 {
            return PolyFp::zero(self.p, self.nvars);
        }
        let p = self.p;
        let terms = self
            .terms
            .iter()
            .map(|(m, &v)| {
                let e = m.0.checked_add(shift).expect("exponent overflow in polynomial product");
                (Monomial(e), v * c % p)
            })
            .collect();
        PolyFp {
            p,
            nvars: self.nvars,
            terms,
        }
    }

    /// self − c·x^shift·g, in place.
    pub(crate) fn sub_scaled(&mut self, c: u64, shift: &ExponentVector, g: &PolyFp) {
        let neg = (self.p - c % self.p) % self.p;
        for (m, &v) in &g.terms {
            let e = m.0.checked_add(shift).expect("exponent overflow in reduction");
            self.add_term(v * neg % self.p, e);
        }
    }

    pub fn monic(&self) -> PolyFp {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(inv_mod(c, self.p)),
        }
    }

    pub fn pow(&self, mut k: u64) -> PolyFp {
        let mut acc = PolyFp::one(self.p, self.nvars);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Drops every term of degree other than `d`.
    pub fn homogeneous_part(&self, d: u64) -> PolyFp {
        PolyFp {
            p: self.p,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0.degree() == d)
                .map(|(m, &c)| (m.clone(), c))
                .collect(),
        }
    }

    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (exp, c)) in self.terms().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let mono = crate::parse::format_monomial(exp, names);
            match (c, mono.as_str()) {
                (_, "1") => out.push_str(&c.to_string()),
                (1, m) => out.push_str(m),
                (c, m) => {
                    out.push_str(&c.to_string());
                    out.push('*');
                    out.push_str(m);
                }
            }
        }
        out
    }
}

/// f^q for q a power of p, computed termwise: (Σ cₐx^α)^q = Σ cₐ x^{qα}
/// because c^q = c in F_p and the cross terms vanish.
pub fn frobenius_element_power(f: &PolyFp, q: u64) -> Result<PolyFp> {
    if !is_power_of(q, f.p) {
        return Err(Error::InvalidArgument(format!(
            "{q} is not a power of the characteristic {}",
            f.p
        )));
    }
    let scale = u32::try_from(q).map_err(|_| Error::Overflow)?;
    let mut out = PolyFp::zero(f.p, f.nvars);
    for (m, &c) in &f.terms {
        out.terms.insert(Monomial(m.0.checked_scale(scale)?), c);
    }
    Ok(out)
}

pub fn is_power_of(q: u64, p: u64) -> bool {
    if q == 0 || p < 2 {
        return false;
    }
    let mut q = q;
    while q.is_multiple_of(p) {
        q /= p;
    }
    q == 1
}

/// p^e, checked.
pub fn frobenius_q(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e)
        .filter(|&q| q <= u64::from(u32::MAX))
        .ok_or(Error::Overflow)
}

impl fmt::Debug for PolyFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = crate::parse::default_var_names(self.nvars);
        write!(f, "{} (mod {})", self.format_with(&names), self.p)
    }
}

impl fmt::Display for PolyFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = crate::parse::default_var_names(self.nvars);
        f.write_str(&self.format_with(&names))
    }
}

impl Add for &PolyFp {
    type Output = PolyFp;
    fn add(self, rhs: &PolyFp) -> PolyFp {
        assert!(self.same_ring(rhs), "polynomials from different rings");
        let mut out = self.clone();
        for (m, &c) in &rhs.terms {
            out.add_term(c, m.0.clone());
        }
        out
    }
}

impl Neg for &PolyFp {
    type Output = PolyFp;
    fn neg(self) -> PolyFp {
        self.scale(self.p - 1)
    }
}

impl Sub for &PolyFp {
    type Output = PolyFp;
    fn sub(self, rhs: &PolyFp) -> PolyFp {
        self + &(-rhs)
    }
}

impl Mul for &PolyFp {
    type Output = PolyFp;
    fn mul(self, rhs: &PolyFp) -> PolyFp {
        assert!(self.same_ring(rhs), "polynomials from different rings");
        let mut out = PolyFp::zero(self.p, self.nvars);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &rhs.terms {
                let e = a.0.checked_add(&b.0).expect("exponent overflow in polynomial product");
                out.add_term(ca * cb % self.p, e);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(p: u64, n: usize, j: usize) -> PolyFp {
        PolyFp::variable(p, n, j)
    }

    #[test]
    fn grevlex_order() {
        let e = |v: [u32; 3]| ExponentVector::from(v);
        assert_eq!(grevlex_cmp(&e([3, 0, 0]), &e([0, 3, 0])), Ordering::Greater);
        assert_eq!(grevlex_cmp(&e([0, 3, 0]), &e([0, 0, 3])), Ordering::Greater);
        // x y z² vs x² z²? same degree 4 vs 4: last var equal, then y: 1 vs 0.
        assert_eq!(grevlex_cmp(&e([1, 1, 2]), &e([2, 0, 2])), Ordering::Less);
        assert_eq!(grevlex_cmp(&e([1, 1, 0]), &e([2, 0, 1])), Ordering::Less);
    }

    #[test]
    fn characteristic_vanishes() {
        let x = var(3, 2, 0);
        let y = var(3, 2, 1);
        let f = &x + &y;
        let three = &(&f + &f) + &f;
        assert!(three.is_zero());
    }

    #[test]
    fn freshmans_dream_examples() {
        let y = var(2, 3, 1);
        let z = var(2, 3, 2);
        let f = &y - &z;
        assert_eq!(frobenius_element_power(&f, 2).unwrap(), &y.pow(2) + &z.pow(2));
        assert_eq!(frobenius_element_power(&f, 1).unwrap(), f);
        let x3 = var(3, 2, 0);
        let y3 = var(3, 2, 1);
        let g = &x3 + &y3;
        assert_eq!(frobenius_element_power(&g, 3).unwrap(), &x3.pow(3) + &y3.pow(3));
        assert_eq!(g.pow(3), &x3.pow(3) + &y3.pow(3));
        assert!(matches!(frobenius_element_power(&g, 6), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn qth_roots_invert_frobenius() {
        for p in [2u64, 3, 5, 7, 11] {
            for e in 0..4 {
                let q = p.pow(e);
                for c in 0..p {
                    let r = qth_root(c, q, p);
                    assert_eq!(pow_mod(r, q, p), c);
                }
            }
        }
    }

    #[test]
    fn leading_term_is_grevlex_max() {
        let f = PolyFp::from_terms(
            5,
            3,
            [
                (1, ExponentVector::from([0, 0, 3])),
                (2, ExponentVector::from([1, 1, 1])),
                (3, ExponentVector::from([3, 0, 0])),
            ],
        );
        assert_eq!(f.leading_term(), Some((&ExponentVector::from([3, 0, 0]), 3)));
        assert!(f.is_homogeneous());
        assert_eq!(f.monic().leading_term().unwrap().1, 1);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(3) && is_prime(65_537));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(0));
        assert!(is_power_of(8, 2) && is_power_of(1, 5) && !is_power_of(12, 2));
    }
}
