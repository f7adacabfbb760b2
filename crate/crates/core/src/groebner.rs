//! Buchberger's algorithm over F_p in grevlex order, multivariate division,
//! and ideal membership in quotient rings F_p[x₁…xₙ]/J.

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;
use crate::poly::{check_prime, PolyFp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
}

/// A reduced Gröbner basis: monic elements, and no term of any element is
/// divisible by the leading monomial of another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    p: u64,
    nvars: usize,
    basis: Vec<PolyFp>,
}

impl GroebnerBasis {
    pub fn empty(p: u64, nvars: usize) -> Self {
        GroebnerBasis {
            order: MonomialOrder::Grevlex,
            p,
            nvars,
            basis: Vec::new(),
        }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn elements(&self) -> &[PolyFp] {
        &self.basis
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|g| g.leading_monomial().is_some_and(ExponentVector::is_zero))
    }

    fn check_poly(&self, f: &PolyFp) -> Result<()> {
        if f.characteristic() != self.p {
            return Err(Error::CharacteristicMismatch(f.characteristic(), self.p));
        }
        crate::error::check_dim(self.nvars, f.nvars())
    }
}

/// Remainder of complete multivariate division by `basis`.
fn reduce(f: &PolyFp, basis: &[PolyFp]) -> PolyFp {
    let (_, r) = divide(f, basis);
    r
}

/// f = Σ quotients[k]·basis[k] + remainder, with no term of the remainder
/// divisible by any leading monomial.
pub(crate) fn divide(f: &PolyFp, basis: &[PolyFp]) -> (Vec<PolyFp>, PolyFp) {
    let p = f.characteristic();
    let n = f.nvars();
    let mut work = f.clone();
    let mut remainder = PolyFp::zero(p, n);
    let mut quotients = vec![PolyFp::zero(p, n); basis.len()];
    let leads: Vec<(ExponentVector, u64)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term().expect("zero polynomial in divisor list");
            (m.clone(), c)
        })
        .collect();
    while let Some((m, c)) = work.leading_term().map(|(m, c)| (m.clone(), c)) {
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(k) => {
                let shift = m.checked_sub(&leads[k].0).expect("divisibility checked");
                let factor = c * crate::poly::inv_mod(leads[k].1, p) % p;
                work.sub_scaled(factor, &shift, &basis[k]);
                quotients[k].add_term(factor, shift);
            }
            None => {
                work.add_term(p - c, m.clone());
                remainder.add_term(c, m);
            }
        }
    }
    (quotients, remainder)
}

pub fn normal_form(f: &PolyFp, gb: &GroebnerBasis) -> Result<PolyFp> {
    gb.check_poly(f)?;
    Ok(reduce(f, &gb.basis))
}

/// A polynomial with its expression in terms of the input generators.
#[derive(Clone)]
struct Tracked {
    poly: PolyFp,
    cofactors: Vec<PolyFp>,
}

impl Tracked {
    fn scale(&self, c: u64) -> Tracked {
        Tracked {
            poly: self.poly.scale(c),
            cofactors: self.cofactors.iter().map(|h| h.scale(c)).collect(),
        }
    }

    fn monic(&self) -> Tracked {
        let c = self.poly.leading_term().expect("nonzero").1;
        self.scale(crate::poly::inv_mod(c, self.poly.characteristic()))
    }

    fn sub_scaled(&mut self, c: u64, shift: &ExponentVector, g: &Tracked) {
        self.poly.sub_scaled(c, shift, &g.poly);
        for (h, gh) in self.cofactors.iter_mut().zip(&g.cofactors) {
            h.sub_scaled(c, shift, gh);
        }
    }

    /// Full reduction against `basis`, carrying cofactors along.
    fn reduce(&self, basis: &[Tracked]) -> Tracked {
        let p = self.poly.characteristic();
        let n = self.poly.nvars();
        let mut work = self.clone();
        let mut remainder = PolyFp::zero(p, n);
        while let Some((m, c)) = work.poly.leading_term().map(|(m, c)| (m.clone(), c)) {
            match basis
                .iter()
                .find(|g| g.poly.leading_monomial().is_some_and(|lm| lm.divides(&m)))
            {
                Some(g) => {
                    let (lm, lc) = g.poly.leading_term().expect("nonzero");
                    let shift = m.checked_sub(lm).expect("divisibility checked");
                    let factor = c * crate::poly::inv_mod(lc, p) % p;
                    work.sub_scaled(factor, &shift, g);
                }
                None => {
                    work.poly.add_term(p - c, m.clone());
                    remainder.add_term(c, m);
                }
            }
        }
        // work.poly is now zero; the remainder was moved out term by term, so
        // remainder = Σ cofactors·inputs still holds for the returned value.
        Tracked {
            poly: remainder,
            cofactors: work.cofactors,
        }
    }
}

fn s_polynomial(f: &Tracked, g: &Tracked) -> Tracked {
    let lf = f.poly.leading_monomial().expect("nonzero");
    let lg = g.poly.leading_monomial().expect("nonzero");
    let lcm = lf.join(lg);
    let sf = lcm.checked_sub(lf).expect("lcm");
    let sg = lcm.checked_sub(lg).expect("lcm");
    let p = f.poly.characteristic();
    // Both inputs are monic.
    let mut out = Tracked {
        poly: f.poly.mul_term(1, &sf),
        cofactors: f.cofactors.iter().map(|h| h.mul_term(1, &sf)).collect(),
    };
    out.sub_scaled(1 % p, &sg, g);
    out
}

fn coprime(a: &ExponentVector, b: &ExponentVector) -> bool {
    a.coords().iter().zip(b.coords()).all(|(x, y)| *x == 0 || *y == 0)
}

/// Buchberger's algorithm. With `track`, every basis element carries its
/// cofactors with respect to `gens`; without it the cofactor lists are empty.
fn buchberger_tracked(gens: &[PolyFp], p: u64, nvars: usize, track: bool) -> Vec<Tracked> {
    let k = if track { gens.len() } else { 0 };
    let mut basis: Vec<Tracked> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut cofactors = vec![PolyFp::zero(p, nvars); k];
        if track {
            cofactors[i] = PolyFp::one(p, nvars);
        }
        let t = Tracked {
            poly: g.clone(),
            cofactors,
        }
        .reduce(&basis);
        if !t.poly.is_zero() {
            basis.push(t.monic());
        }
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        // Normal selection strategy: smallest lcm degree first.
        let pos = (0..pairs.len())
            .min_by_key(|&t| {
                let (i, j) = pairs[t];
                let a = basis[i].poly.leading_monomial().expect("nonzero");
                let b = basis[j].poly.leading_monomial().expect("nonzero");
                (a.join(b).degree(), j, i)
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(pos);
        let (li, lj) = (
            basis[i].poly.leading_monomial().expect("nonzero"),
            basis[j].poly.leading_monomial().expect("nonzero"),
        );
        if coprime(li, lj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]).reduce(&basis);
        if s.poly.is_zero() {
            continue;
        }
        let s = s.monic();
        let new = basis.len();
        basis.push(s);
        for t in 0..new {
            pairs.push((t, new));
        }
    }
    basis
}

/// Drops elements whose leading monomial is divisible by another's, keeping
/// the first of equal leading monomials.
fn minimal_leads<T>(basis: Vec<T>, lead: impl Fn(&T) -> &ExponentVector) -> Vec<T> {
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (a, b) = (lead(&basis[j]), lead(&basis[i]));
            if a.divides(b) && (a != b || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    basis
        .into_iter()
        .zip(keep)
        .filter_map(|(t, k)| k.then_some(t))
        .collect()
}

/// The reduced Gröbner basis of the ideal generated by `gens`, in a ring
/// with characteristic `p` and `nvars` variables.
pub fn buchberger_in(p: u64, nvars: usize, gens: &[PolyFp]) -> Result<GroebnerBasis> {
    check_prime(p)?;
    for g in gens {
        if g.characteristic() != p {
            return Err(Error::CharacteristicMismatch(g.characteristic(), p));
        }
        crate::error::check_dim(nvars, g.nvars())?;
    }
    let raw = buchberger_tracked(gens, p, nvars, false);
    let polys: Vec<PolyFp> = raw.into_iter().map(|t| t.poly).collect();
    let mut minimal = minimal_leads(polys, |g| g.leading_monomial().expect("nonzero"));
    // Interreduce: the leading monomials are fixed, only tails change.
    for i in 0..minimal.len() {
        let others: Vec<PolyFp> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let (lm, _) = minimal[i].leading_term().expect("nonzero");
        let lm = lm.clone();
        let mut tail = minimal[i].clone();
        tail.add_term(p - 1, lm.clone());
        let reduced_tail = reduce(&tail, &others);
        let mut g = reduced_tail;
        g.add_term(1, lm);
        minimal[i] = g;
    }
    minimal.sort_by(|a, b| {
        crate::poly::grevlex_cmp(
            a.leading_monomial().expect("nonzero"),
            b.leading_monomial().expect("nonzero"),
        )
    });
    Ok(GroebnerBasis {
        order: MonomialOrder::Grevlex,
        p,
        nvars,
        basis: minimal,
    })
}

/// Reduced Gröbner basis of a nonempty generator list.
pub fn buchberger(gens: &[PolyFp]) -> Result<GroebnerBasis> {
    let first = gens
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty generator list; use buchberger_in".into()))?;
    buchberger_in(first.characteristic(), first.nvars(), gens)
}

/// A Gröbner basis whose elements remember how they were built from the
/// generators, used to express a member explicitly as a combination.
pub(crate) struct ExtendedBasis {
    basis: Vec<Tracked>,
}

impl ExtendedBasis {
    pub(crate) fn new(p: u64, nvars: usize, gens: &[PolyFp]) -> Self {
        let raw = buchberger_tracked(gens, p, nvars, true);
        ExtendedBasis {
            basis: minimal_leads(raw, |t| t.poly.leading_monomial().expect("nonzero")),
        }
    }

    /// Coefficients aᵢ with f = Σ aᵢ·gensᵢ, or `None` when f is not in the
    /// ideal.
    pub(crate) fn lift(&self, f: &PolyFp, ngens: usize) -> Option<Vec<PolyFp>> {
        let polys: Vec<PolyFp> = self.basis.iter().map(|t| t.poly.clone()).collect();
        let (quotients, remainder) = divide(f, &polys);
        if !remainder.is_zero() {
            return None;
        }
        let mut coeffs = vec![PolyFp::zero(f.characteristic(), f.nvars()); ngens];
        for (q, t) in quotients.iter().zip(&self.basis) {
            if q.is_zero() {
                continue;
            }
            for (a, h) in coeffs.iter_mut().zip(&t.cofactors) {
                *a = &*a + &(q * h);
            }
        }
        Some(coeffs)
    }
}

/// F_p[x₁…xₙ]/J with J given by a reduced Gröbner basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    names: Vec<String>,
    relations: GroebnerBasis,
}

impl QuotientRing {
    pub fn new(p: u64, names: Vec<String>, relations: &[PolyFp]) -> Result<Self> {
        let gb = buchberger_in(p, names.len(), relations)?;
        Ok(QuotientRing {
            names,
            relations: gb,
        })
    }

    pub fn polynomial_ring(p: u64, names: Vec<String>) -> Result<Self> {
        Self::new(p, names, &[])
    }

    pub fn characteristic(&self) -> u64 {
        self.relations.p
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &GroebnerBasis {
        &self.relations
    }

    pub fn variable(&self, j: usize) -> PolyFp {
        PolyFp::variable(self.characteristic(), self.nvars(), j)
    }

    /// True when J is generated by homogeneous polynomials (so R is graded).
    /// A reduced grevlex basis of a homogeneous ideal is homogeneous.
    pub fn is_graded(&self) -> bool {
        self.relations.basis.iter().all(PolyFp::is_homogeneous)
    }

    pub fn check_element(&self, f: &PolyFp) -> Result<()> {
        self.relations.check_poly(f)
    }

    /// The canonical representative of f modulo J.
    pub fn reduce(&self, f: &PolyFp) -> Result<PolyFp> {
        normal_form(f, &self.relations)
    }

    /// Gröbner basis of I + J for generators of I.
    pub fn ideal_basis(&self, gens: &[PolyFp]) -> Result<GroebnerBasis> {
        for g in gens {
            self.check_element(g)?;
        }
        let mut all: Vec<PolyFp> = gens.to_vec();
        all.extend(self.relations.basis.iter().cloned());
        buchberger_in(self.characteristic(), self.nvars(), &all)
    }

    pub fn format(&self, f: &PolyFp) -> String {
        f.format_with(&self.names)
    }
}

/// f ∈ (gens) in R.
pub fn ideal_membership(f: &PolyFp, gens: &[PolyFp], ring: &QuotientRing) -> Result<bool> {
    ring.check_element(f)?;
    let gb = ring.ideal_basis(gens)?;
    Ok(normal_form(f, &gb)?.is_zero())
}
