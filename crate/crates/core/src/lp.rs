//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Problems are taken in standard equality form
//!
//! ```text
//! maximize  cᵀx   subject to  A x = b,  x ≥ 0
//! ```
//!
//! Every comparison is exact, so a strictly positive optimum is a proof and
//! not a rounding artifact. Bland's smallest-index rule guarantees
//! termination on degenerate problems, which the membership programs built
//! from staircases hit constantly.

use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { point: Vec<Rational>, value: Rational },
}

impl LpOutcome {
    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LinearProgram {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    objective: Vec<Rational>,
}

impl LinearProgram {
    /// A program over `nvars` nonnegative variables with a zero objective.
    pub fn new(nvars: usize) -> Self {
        LinearProgram {
            rows: Vec::new(),
            rhs: Vec::new(),
            objective: vec![Rational::zero(); nvars],
        }
    }

    pub fn nvars(&self) -> usize {
        self.objective.len()
    }

    pub fn add_equality(&mut self, coeffs: Vec<Rational>, rhs: Rational) {
        assert_eq!(coeffs.len(), self.nvars(), "constraint width");
        self.rows.push(coeffs);
        self.rhs.push(rhs);
    }

    pub fn set_objective(&mut self, objective: Vec<Rational>) {
        assert_eq!(objective.len(), self.nvars(), "objective width");
        self.objective = objective;
    }

    pub fn solve(&self) -> LpOutcome {
        let n = self.nvars();
        let m = self.rows.len();
        let width = n + m;

        // Tableau rows are [A | I_art | b] with b made nonnegative.
        let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
        for (i, (row, b)) in self.rows.iter().zip(&self.rhs).enumerate() {
            let flip = b.is_negative();
            let mut t = Vec::with_capacity(width + 1);
            for a in row {
                t.push(if flip { -a.clone() } else { a.clone() });
            }
            for k in 0..m {
                t.push(if k == i { Rational::one() } else { Rational::zero() });
            }
            t.push(if flip { -b.clone() } else { b.clone() });
            tab.push(t);
        }
        let mut basis: Vec<usize> = (n..n + m).collect();

        let mut phase1 = vec![Rational::zero(); width];
        for c in &mut phase1[n..] {
            *c = -Rational::one();
        }
        // Phase one is bounded above by zero, so it always reaches an optimum.
        let _ = run_simplex(&mut tab, &mut basis, &phase1, width);
        if objective_value(&tab, &basis, &phase1).is_negative() {
            return LpOutcome::Infeasible;
        }

        // Pivot artificial variables out of the basis, dropping rows that
        // turn out to be redundant.
        let mut i = 0;
        while i < tab.len() {
            if basis[i] >= n {
                match (0..n).find(|&j| !tab[i][j].is_zero()) {
                    Some(j) => pivot(&mut tab, &mut basis, i, j),
                    None => {
                        tab.remove(i);
                        basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        for row in &mut tab {
            let b = row.pop().expect("rhs column");
            row.truncate(n);
            row.push(b);
        }

        match run_simplex(&mut tab, &mut basis, &self.objective, n) {
            Err(Unbounded) => LpOutcome::Unbounded,
            Ok(()) => {
                let mut point = vec![Rational::zero(); n];
                for (row, &b) in tab.iter().zip(&basis) {
                    point[b] = row[row.len() - 1].clone();
                }
                let value = self
                    .objective
                    .iter()
                    .zip(&point)
                    .map(|(c, x)| c * x)
                    .fold(Rational::zero(), |a, b| a + b);
                LpOutcome::Optimal { point, value }
            }
        }
    }
}

struct Unbounded;

fn objective_value(tab: &[Vec<Rational>], basis: &[usize], cost: &[Rational]) -> Rational {
    tab.iter()
        .zip(basis)
        .map(|(row, &b)| &cost[b] * &row[row.len() - 1])
        .fold(Rational::zero(), |a, b| a + b)
}

fn run_simplex(
    tab: &mut [Vec<Rational>],
    basis: &mut [usize],
    cost: &[Rational],
    width: usize,
) -> Result<(), Unbounded> {
    loop {
        // Bland: the lowest-index column with positive reduced cost enters.
        let entering = (0..width).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let mut reduced = cost[j].clone();
            for (row, &b) in tab.iter().zip(basis.iter()) {
                if !cost[b].is_zero() && !row[j].is_zero() {
                    reduced -= &cost[b] * &row[j];
                }
            }
            reduced.is_positive()
        });
        let Some(j) = entering else {
            return Ok(());
        };

        // Minimum ratio test, ties broken by the smallest basic index.
        let mut leaving: Option<(usize, Rational)> = None;
        for (i, row) in tab.iter().enumerate() {
            if row[j].is_positive() {
                let ratio = &row[row.len() - 1] / &row[j];
                let better = match &leaving {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
        }
        let Some((i, _)) = leaving else {
            return Err(Unbounded);
        };
        pivot(tab, basis, i, j);
    }
}

fn pivot(tab: &mut [Vec<Rational>], basis: &mut [usize], i: usize, j: usize) {
    let p = tab[i][j].clone();
    for v in tab[i].iter_mut() {
        if !v.is_zero() {
            *v /= &p;
        }
    }
    let pivot_row = tab[i].clone();
    for (k, row) in tab.iter_mut().enumerate() {
        if k == i || row[j].is_zero() {
            continue;
        }
        let f = row[j].clone();
        for (v, pv) in row.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
    basis[i] = j;
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
