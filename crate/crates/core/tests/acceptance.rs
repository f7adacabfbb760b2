//! Acceptance criteria. Each prints one PASS/FAIL line; a criterion that
//! exceeds its time bound fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{ev, mono, random_poly, s_polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spclosure::framework::{
    briancon_skoda_check, check_special_axioms, random_instances, reesvalsp_equivalence_check,
    ClosureOperation,
};
use spclosure::frobenius::{
    f_spread, frobenius_member, special_decompose, special_frobenius_member, BoundedVerdict,
    FrobeniusWitness, WitnessKind,
};
use spclosure::groebner::{buchberger, ideal_membership, normal_form, QuotientRing};
use spclosure::monomial::{lattice_box, minimalize, ExponentVector, MonomialIdeal};
use spclosure::newton::{
    closure_box, decomposition_holds, integral_closure, integral_points_in_box, low_points,
    special_integral_closure, special_points_in_box,
};
use spclosure::oracle::{compare_with_lp, DEFAULT_DENOMINATOR_BOUND};
use spclosure::parse::{parse_polynomial, parse_polynomial_list, parse_ring};
use spclosure::poly::{frobenius_element_power, PolyFp};

type Outcome = Result<String, String>;

const SEED: u64 = 0x5eed;
const SAMPLED_3D: usize = 3000;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn worked_example() -> Outcome {
    let i = mono(2, &[&[2, 0], &[0, 2]]);
    let closure = lib(integral_closure(&i))?;
    ensure(closure == mono(2, &[&[2, 0], &[1, 1], &[0, 2]]), || format!("closure {closure:?}"))?;
    let sp = lib(special_integral_closure(&i))?;
    ensure(sp == lib(i.m_times())?, || format!("special part {sp:?}"))?;
    let d = lib(decomposition_holds(&i))?;
    ensure(!d.holds && d.witness == Some(ev(&[1, 1])), || format!("{d:?}"))?;
    ensure(d.cross_check_agrees, || "cross-check disagrees".into())?;
    Ok("closure, special part and witness (1,1) as expected".into())
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn gcd_criterion() -> Outcome {
    let mut cases = 0;
    for a in 1..=6 {
        for b in 1..=6 {
            let d = lib(decomposition_holds(&mono(2, &[&[a, 0], &[0, b]])))?;
            ensure(d.holds == (gcd(a, b) == 1), || format!("(x^{a}, y^{b}): holds = {}", d.holds))?;
            ensure(d.cross_check_agrees, || format!("(x^{a}, y^{b}): cross-check disagrees"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases"))
}

fn hundred_ideals() -> Vec<MonomialIdeal> {
    random_instances(SEED, 100, 3, 5, 4)
}

fn disjoint_union() -> Outcome {
    let mut points = 0;
    for i in hundred_ideals() {
        let upper = closure_box(&i, 1);
        let integral: BTreeSet<ExponentVector> = lib(integral_points_in_box(&i, &upper))?.into_iter().collect();
        let special: BTreeSet<ExponentVector> = lib(special_points_in_box(&i, &upper))?.into_iter().collect();
        let low: BTreeSet<ExponentVector> = lib(low_points(&i))?.into_iter().collect();
        ensure(special.is_disjoint(&low), || format!("{i:?}: special part meets low points"))?;
        let union: BTreeSet<ExponentVector> = special.union(&low).cloned().collect();
        ensure(union == integral, || format!("{i:?}: union differs from the closure"))?;
        points += lattice_box(&upper).len();
    }
    Ok(format!("100 ideals, {points} box points"))
}

fn special_axioms() -> Outcome {
    let instances = hundred_ideals();
    let report = lib(check_special_axioms(&ClosureOperation::integral(), &instances, 500, SEED))?;
    for status in &report.axioms {
        ensure(status.passed(), || format!("{}: {:?}", status.axiom, status.failures.first()))?;
    }
    let nakayama = report.status("nakayama").ok_or("no nakayama status")?;
    ensure(nakayama.checked >= 500, || format!("only {} pairs", nakayama.checked))?;
    for i in &instances {
        let d = i.min_degree().ok_or("zero ideal")?;
        for g in lib(special_integral_closure(i))?.generators() {
            ensure(g.degree() > d, || format!("{i:?}: special generator {g:?} of degree ≤ {d}"))?;
        }
    }
    let summary: Vec<String> = report.axioms.iter().map(|s| format!("{}={}", s.axiom, s.checked)).collect();
    Ok(summary.join(" "))
}

/// Every ideal with 1 to 3 generators from the nonzero points of [0,4]^n,
/// after minimalization.
fn all_small_ideals(nvars: usize) -> Vec<MonomialIdeal> {
    let pts: Vec<ExponentVector> = lattice_box(&vec![4; nvars]).into_iter().filter(|p| !p.is_zero()).collect();
    let mut seen = BTreeSet::new();
    let mut add = |gens: &[&ExponentVector]| {
        let ideal = minimalize(nvars, gens.iter().map(|&g| g.clone())).unwrap();
        seen.insert(ideal.generators().to_vec());
    };
    let n = pts.len();
    for a in 0..n {
        add(&[&pts[a]]);
        for b in a + 1..n {
            add(&[&pts[a], &pts[b]]);
            for c in b + 1..n {
                add(&[&pts[a], &pts[b], &pts[c]]);
            }
        }
    }
    seen.into_iter().map(|g| MonomialIdeal::new(nvars, g).unwrap()).collect()
}

fn oracle_equivalence() -> Outcome {
    let mut ideals = all_small_ideals(1);
    ideals.extend(all_small_ideals(2));
    let exhaustive = ideals.len();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..SAMPLED_3D {
        ideals.push(spclosure::framework::random_monomial_ideal(&mut rng, 3, 4, 3));
    }
    let mut points = 0;
    for i in &ideals {
        let cmp = lib(compare_with_lp(i, DEFAULT_DENOMINATOR_BOUND))?;
        ensure(cmp.agrees(), || format!("{i:?}: {:?}", cmp.disagreements[0]))?;
        points += cmp.points;
    }
    Ok(format!(
        "{exhaustive} ideals in 1-2 variables (all), {SAMPLED_3D} in 3 variables (sampled), {points} points"
    ))
}

fn rees_valuations() -> Outcome {
    let mut out = Vec::new();
    for i in [mono(2, &[&[2, 0], &[0, 2]]), mono(2, &[&[3, 0], &[0, 2]]), lib(mono(2, &[&[1, 0], &[0, 1]]).power(2))?] {
        let r = lib(reesvalsp_equivalence_check(&i, &[5, 5], 24))?;
        ensure(r.passes(), || format!("{i:?}: contradictions at {:?}", r.contradictions))?;
        out.push(format!("{}/{} agree, {} bound-insufficient", r.agreements, r.points, r.bound_insufficient.len()));
    }
    Ok(out.join("; "))
}

fn cubic() -> QuotientRing {
    parse_ring("F2[x,y,z]/(x^3+y^3+z^3)").unwrap()
}

fn frobenius_certificate() -> Outcome {
    let ring = cubic();
    let gens = lib(parse_polynomial_list("x,y", ring.names(), 2))?;
    let z2 = lib(parse_polynomial("z^2", ring.names(), 2))?;
    let expected = |kind| BoundedVerdict::In(FrobeniusWitness { e: 1, kind });
    let f = lib(frobenius_member(&z2, &gens, &ring, 5))?;
    ensure(f == expected(WitnessKind::Closure), || format!("frobenius_member: {f}"))?;
    let s = lib(special_frobenius_member(&z2, &gens, &ring, 5))?;
    ensure(s == expected(WitnessKind::SpecialPart), || format!("special_frobenius_member: {s}"))?;
    ensure(!lib(ideal_membership(&z2, &gens, &ring))?, || "z^2 ∈ (x, y)".into())?;

    // Independent check at q = 2 with a basis built here: z^4 ∈ (x^2, y^2) + J.
    let mut rel = lib(gens.iter().map(|g| frobenius_element_power(g, 2)).collect::<spclosure::Result<Vec<_>>>())?;
    rel.extend(ring.relations().elements().iter().cloned());
    let gb = lib(buchberger(&rel))?;
    ensure(lib(normal_form(&z2.pow(2), &gb))?.is_zero(), || "z^4 does not reduce to 0".into())?;
    let linear = lib(buchberger(&[gens.clone(), ring.relations().elements().to_vec()].concat()))?;
    ensure(!lib(normal_form(&z2, &linear))?.is_zero(), || "z^2 reduces to 0 modulo (x, y) + J".into())?;

    let d = lib(special_decompose(&z2, &gens, &ring, 5))?;
    ensure(d.ideal_part.is_zero() && d.special_part == z2 && d.e == 1, || format!("{d:?}"))?;
    ensure(lib(d.replays(&z2, &gens, &ring))?, || "decomposition does not replay".into())?;
    Ok("In(e=1) for both, z^2 ∉ (x,y), z^2 = 0 + z^2".into())
}

fn frobenius_spread() -> Outcome {
    let ring = parse_ring("F2[x,y]").unwrap();
    for (text, mu) in [("x,y", 2), ("x^2,x*y,y^2", 3)] {
        let gens = lib(parse_polynomial_list(text, ring.names(), 2))?;
        let t = lib(f_spread(&gens, &ring, 5))?;
        ensure(t.e == (0..=5).collect::<Vec<u32>>(), || format!("{text}: e = {:?}", t.e))?;
        ensure(t.mu == vec![mu; 6] && t.stable, || format!("({text}): mu = {:?}", t.mu))?;
    }
    Ok("mu = 2 and 3 for e = 0..5".into())
}

fn briancon_skoda() -> Outcome {
    let mut checked = 0;
    for i in [mono(2, &[&[1, 0], &[0, 1]]), mono(2, &[&[2, 0], &[0, 2]]), mono(2, &[&[2, 0], &[1, 1]])] {
        for w in 0..=2 {
            let r = lib(briancon_skoda_check(&i, w))?;
            ensure(r.special_violations.is_empty(), || format!("{i:?}, w={w}: special {:?}", r.special_violations))?;
            ensure(r.integral_violations.is_empty(), || format!("{i:?}, w={w}: integral {:?}", r.integral_violations))?;
            ensure(r.special_checked > 0 && r.integral_checked > 0, || format!("{i:?}, w={w}: nothing checked"))?;
            checked += r.special_checked + r.integral_checked;
        }
    }
    Ok(format!("9 cases, {checked} generators checked"))
}

const CASES: usize = 1000;
const PRIMES: [u64; 4] = [2, 3, 5, 7];

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);

    for k in 0..CASES {
        let p = PRIMES[k % 4];
        let f = random_poly(&mut rng, p, 3, 4, 3);
        let g = random_poly(&mut rng, p, 3, 4, 3);
        for q in [p, p * p] {
            let lhs = lib(frobenius_element_power(&(&f + &g), q))?;
            let rhs = &lib(frobenius_element_power(&f, q))? + &lib(frobenius_element_power(&g, q))?;
            ensure(lhs == rhs, || format!("freshman's dream fails for p={p}, q={q}"))?;
        }
        ensure((&f + &g).pow(p) == lib(frobenius_element_power(&(&f + &g), p))?, || {
            format!("(f+g)^p differs from the termwise power, p={p}")
        })?;
    }

    for k in 0..CASES {
        let p = PRIMES[k % 4];
        let gens: Vec<PolyFp> = (0..3).map(|_| random_poly(&mut rng, p, 3, 3, 2)).collect();
        let gb = lib(buchberger(&gens))?;
        for f in gb.elements() {
            for g in gb.elements() {
                if f != g {
                    ensure(lib(normal_form(&s_polynomial(f, g), &gb))?.is_zero(), || {
                        format!("S-polynomial does not reduce to 0 (case {k})")
                    })?;
                }
            }
        }
        for g in &gens {
            ensure(lib(normal_form(g, &gb))?.is_zero(), || format!("input does not reduce to 0 (case {k})"))?;
        }
    }

    for k in 0..CASES {
        let nvars = 1 + k % 3;
        let gens: Vec<ExponentVector> = (0..rng.gen_range(1..=6))
            .map(|_| ExponentVector::new((0..nvars).map(|_| rng.gen_range(0..=5)).collect()))
            .collect();
        let once = lib(minimalize(nvars, gens.clone()))?;
        let twice = lib(minimalize(nvars, once.generators().to_vec()))?;
        ensure(once == twice, || format!("staircase not idempotent for {gens:?}"))?;
        let mut reversed = gens.clone();
        reversed.reverse();
        ensure(lib(minimalize(nvars, reversed))? == once, || format!("staircase depends on order for {gens:?}"))?;
        for (a, x) in once.generators().iter().enumerate() {
            for (b, y) in once.generators().iter().enumerate() {
                ensure(a == b || !x.divides(y), || format!("staircase not an antichain for {gens:?}"))?;
            }
        }
    }

    let ring = cubic();
    let gens = lib(parse_polynomial_list("x,y", ring.names(), 2))?;
    let z2 = lib(parse_polynomial("z^2", ring.names(), 2))?;
    for k in 0..CASES {
        let mut z = PolyFp::zero(2, 3);
        for g in &gens {
            z = &z + &(&random_poly(&mut rng, 2, 3, 3, 2) * g);
        }
        if rng.gen_bool(0.5) {
            z = &z + &(&random_poly(&mut rng, 2, 3, 1, 0) * &z2);
        }
        let BoundedVerdict::In(w) = lib(frobenius_member(&z, &gens, &ring, 2))? else {
            return Err(format!("constructed member not found (case {k})"));
        };
        for e in w.e..=w.e + 2 {
            let later = FrobeniusWitness { e, ..w };
            ensure(lib(later.replays(&z, &gens, &ring))?, || format!("witness at e={} fails at e={e} (case {k})", w.e))?;
        }
    }

    Ok(format!("4 suites × {CASES} cases"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "worked example t=2", limit: secs(1), run: worked_example },
        Criterion { id: 2, name: "gcd criterion", limit: secs(10), run: gcd_criterion },
        Criterion { id: 3, name: "disjoint union", limit: secs(60), run: disjoint_union },
        Criterion { id: 4, name: "special-part axioms", limit: secs(120), run: special_axioms },
        Criterion { id: 5, name: "oracle equivalence", limit: secs(120), run: oracle_equivalence },
        Criterion { id: 6, name: "m-primary Rees valuation equivalence", limit: secs(60), run: rees_valuations },
        Criterion { id: 7, name: "Frobenius closure certificate", limit: secs(5), run: frobenius_certificate },
        Criterion { id: 8, name: "F-spread", limit: secs(5), run: frobenius_spread },
        Criterion { id: 9, name: "Briancon-Skoda replay", limit: secs(60), run: briancon_skoda },
        Criterion { id: 10, name: "property suites", limit: secs(120), run: property_suites },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.limit => Err(format!("{detail}; exceeded {:?}", c.limit)),
            other => other,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("{tag} [{}] {} ({:.2}s): {detail}", c.id, c.name, elapsed.as_secs_f64());
        failed += usize::from(outcome.is_err());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
