//! The `closure` command-line front end.
//!
//! Arguments are kept as text in [`Request`] so that a request prints back to
//! the exact argument vector it was parsed from; grammars are applied in
//! [`execute`]. Exit codes: 0 on success, 1 when the computed mathematical
//! condition fails, 2 on usage or input errors.

use std::ffi::OsString;
use std::fmt;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, ParseError};
use crate::framework::{
    briancon_skoda_check, check_closure_axioms, check_special_axioms, evolution_conditions,
    minimal_subset_reductions, random_instances, reesvalsp_equivalence_check,
    spread_over_subsets, AxiomReport, ClosureOperation, ConditionStatus,
};
use crate::frobenius::{
    analytically_f_independent_at_q, f_independent, f_spread, frobenius_member,
    special_decompose, special_frobenius_member, Independence, DEFAULT_E_MAX,
};
use crate::groebner::QuotientRing;
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::newton::{
    decomposition_holds, integral_closure, low_points, special_integral_closure, DEFAULT_N_MAX,
};
use crate::oracle::{compare_with_lp, DEFAULT_DENOMINATOR_BOUND};
use crate::parse::{
    format_monomial, format_monomial_ideal, parse_monomial_ideal, parse_polynomial,
    parse_polynomial_list, parse_ring_spec, parse_var_list,
};
use crate::poly::PolyFp;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Clone, Debug, PartialEq, Eq)]
#[command(
    name = "closure",
    version,
    about = "Integral and Frobenius closures of ideals and their special parts"
)]
pub struct Request {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for box scans and instance checks.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Subcommand, Clone, Debug, PartialEq, Eq)]
pub enum Command {
    /// Minimal generators of the integral closure of a monomial ideal.
    Integral(MonomialArgs),
    /// Minimal generators of the special part of the integral closure.
    SpecialIntegral(MonomialArgs),
    /// Lattice points of the closure outside its special part.
    LowPoints(MonomialArgs),
    /// Whether the closure splits as I plus its special part.
    Decomposition(MonomialArgs),
    /// Bounded search for z^q in the bracket power I^[q].
    Frobenius(ElementArgs),
    /// Bounded search for z^q in m·I^[q].
    SpecialFrobenius(ElementArgs),
    /// Split a Frobenius-closure member into an ideal part and a special part.
    DecomposeF(ElementArgs),
    /// Minimal generator counts of the bracket powers.
    FSpread(RingIdealArgs),
    /// Bounded F-independence, or analytic F-independence at --q.
    Independence(IndependenceArgs),
    /// Minimal generator-subset reductions.
    Reductions(ReductionArgs),
    /// Common size of the minimal generator-subset reductions.
    Spread(ReductionArgs),
    /// Briançon-Skoda containments for I^(n+w).
    BsCheck(BrianconSkodaArgs),
    /// The (SP), (AR), (NN) conditions and bar-independence.
    Evolution(EvolutionArgs),
    /// Closure and special-part axioms on an ideal or seeded random ideals.
    Axioms(AxiomArgs),
    /// LP membership against brute-force certificate enumeration.
    OracleCheck(OracleArgs),
}

#[derive(Args, Clone, Debug, PartialEq, Eq)]
pub struct MonomialArgs {
    /// Comma-separated variable names, e.g. x,y.
    #[arg(long)]
    pub vars: String,
    /// Comma-separated monomials, e.g. "x^2*y, y^3".
    #[arg(long)]
    pub ideal: String,
}

#[derive(Args, Clone, Debug, PartialEq, Eq)]
pub struct RingIdealArgs {
    /// Ring declaration, e.g. "F2[x,y,z]/(x^3+y^3+z^3)".
    #[arg(long)]
    pub ring: String,
    /// Comma-separated polynomials.
    #[arg(long)]
    pub ideal: String,
    #[arg(long, default_value_t = DEFAULT_E_MAX)]
    pub max_e: u32,
}

#[derive(Args, Clone, Debug, PartialEq, Eq)]
pub struct ElementArgs {
    #[command(flatten)]
    pub base: RingIdealArgs,
    /// The polynomial z.
    #[arg(long)]
    pub element: String,
}

#[derive(Args, Clone, Debug, PartialEq, Eq)]
pub struct IndependenceArgs {
    #[command(flatten)]
    pub base: RingIdealArgs,
    /// Test analytic F-independence at this power of p instead.
    #[arg(long)]
    pub q: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureKind {
    Integral,
    Identity,
}

impl ClosureKind {
    fn operation(self) -> ClosureOperation {
        match self {
            ClosureKind::Integral => ClosureOperation::integral(),
            ClosureKind::Identity => ClosureOperation::identity(),
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            ClosureKind::Integral => "integral",
            ClosureKind::Identity => "identity",
        }
    }
}

#[derive(Args, Clone, Debug, PartialEq, Eq)]
pub struct ReductionArgs {
    #[command(flatten)]
    pub base: MonomialArgs,
    #[arg(long, value_enum, default_value_t = ClosureKind::Integral)]
    pub closure: ClosureKind,
}

#[derive(Args, Clone, Debug, PartialEq, Eq)]
pub struct BrianconSkodaArgs {
    #[command(flatten)]
    pub base: MonomialArgs,
    #[arg(long, default_value_t = 0)]
    pub w: u32,
}

#[derive(Args, Clone, Debug, PartialEq, Eq)]
pub struct EvolutionArgs {
    #[command(flatten)]
    pub base: MonomialArgs,
    #[arg(long, default_value_t = DEFAULT_N_MAX)]
    pub max_n: u32,
    /// Also compare sp membership with the x^n ∈ I^(n+1) search on this
    /// box, e.g. 5,5 (m-primary ideals only).
    #[arg(long = "box", value_delimiter = ',')]
    pub bounds: Option<Vec<u32>>,
}

#[derive(Args, Clone, Debug, PartialEq, Eq)]
pub struct AxiomArgs {
    #[arg(long, value_enum, default_value_t = ClosureKind::Integral)]
    pub closure: ClosureKind,
    /// Check a single ideal instead of random ones (needs --vars).
    #[arg(long, requires = "vars")]
    pub ideal: Option<String>,
    #[arg(long)]
    pub vars: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 50)]
    pub count: usize,
    /// Sampled (J, I) pairs for the Nakayama axiom.
    #[arg(long, default_value_t = 200)]
    pub pairs: usize,
}

#[derive(Args, Clone, Debug, PartialEq, Eq)]
pub struct OracleArgs {
    /// Check a single ideal instead of random ones (needs --vars).
    #[arg(long, requires = "vars")]
    pub ideal: Option<String>,
    #[arg(long)]
    pub vars: Option<String>,
    #[arg(long, default_value_t = DEFAULT_DENOMINATOR_BOUND)]
    pub denominator_bound: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub count: usize,
}

fn push(out: &mut Vec<String>, flag: &str, value: impl fmt::Display) {
    out.push(format!("--{flag}={value}"));
}

impl MonomialArgs {
    fn to_args(&self, out: &mut Vec<String>) {
        push(out, "vars", &self.vars);
        push(out, "ideal", &self.ideal);
    }
}

impl RingIdealArgs {
    fn to_args(&self, out: &mut Vec<String>) {
        push(out, "ring", &self.ring);
        push(out, "ideal", &self.ideal);
        push(out, "max-e", self.max_e);
    }
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Integral(_) => "integral",
            Command::SpecialIntegral(_) => "special-integral",
            Command::LowPoints(_) => "low-points",
            Command::Decomposition(_) => "decomposition",
            Command::Frobenius(_) => "frobenius",
            Command::SpecialFrobenius(_) => "special-frobenius",
            Command::DecomposeF(_) => "decompose-f",
            Command::FSpread(_) => "f-spread",
            Command::Independence(_) => "independence",
            Command::Reductions(_) => "reductions",
            Command::Spread(_) => "spread",
            Command::BsCheck(_) => "bs-check",
            Command::Evolution(_) => "evolution",
            Command::Axioms(_) => "axioms",
            Command::OracleCheck(_) => "oracle-check",
        }
    }
}

impl Request {
    /// Parses an argument vector whose first element is the program name.
    pub fn parse_args<I, T>(args: I) -> Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        Request::try_parse_from(args)
    }

    /// The argument vector that parses back to this request.
    pub fn to_args(&self) -> Vec<String> {
        let mut out = vec!["closure".to_string(), self.command.name().to_string()];
        match &self.command {
            Command::Integral(a)
            | Command::SpecialIntegral(a)
            | Command::LowPoints(a)
            | Command::Decomposition(a) => a.to_args(&mut out),
            Command::Frobenius(a) | Command::SpecialFrobenius(a) | Command::DecomposeF(a) => {
                a.base.to_args(&mut out);
                push(&mut out, "element", &a.element);
            }
            Command::FSpread(a) => a.to_args(&mut out),
            Command::Independence(a) => {
                a.base.to_args(&mut out);
                if let Some(q) = a.q {
                    push(&mut out, "q", q);
                }
            }
            Command::Reductions(a) | Command::Spread(a) => {
                a.base.to_args(&mut out);
                push(&mut out, "closure", a.closure.as_str());
            }
            Command::BsCheck(a) => {
                a.base.to_args(&mut out);
                push(&mut out, "w", a.w);
            }
            Command::Evolution(a) => {
                a.base.to_args(&mut out);
                push(&mut out, "max-n", a.max_n);
                if let Some(b) = &a.bounds {
                    let b: Vec<String> = b.iter().map(u32::to_string).collect();
                    push(&mut out, "box", b.join(","));
                }
            }
            Command::Axioms(a) => {
                push(&mut out, "closure", a.closure.as_str());
                if let Some(i) = &a.ideal {
                    push(&mut out, "ideal", i);
                }
                if let Some(v) = &a.vars {
                    push(&mut out, "vars", v);
                }
                push(&mut out, "seed", a.seed);
                push(&mut out, "count", a.count);
                push(&mut out, "pairs", a.pairs);
            }
            Command::OracleCheck(a) => {
                if let Some(i) = &a.ideal {
                    push(&mut out, "ideal", i);
                }
                if let Some(v) = &a.vars {
                    push(&mut out, "vars", v);
                }
                push(&mut out, "denominator-bound", a.denominator_bound);
                push(&mut out, "seed", a.seed);
                push(&mut out, "count", a.count);
            }
        }
        if self.json {
            out.push("--json".to_string());
        }
        if let Some(t) = self.threads {
            push(&mut out, "threads", t);
        }
        out
    }

    pub fn format(&self) -> OutputFormat {
        if self.json {
            OutputFormat::Json
        } else {
            OutputFormat::Text
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("--{flag}: {source}\n  {text}\n  {caret}")]
    Grammar {
        flag: &'static str,
        text: String,
        caret: String,
        source: ParseError,
    },
    #[error(transparent)]
    Library(#[from] Error),
}

fn grammar<T>(
    flag: &'static str,
    text: &str,
    parsed: std::result::Result<T, ParseError>,
) -> Result<T, CliError> {
    parsed.map_err(|source| CliError::Grammar {
        flag,
        text: text.to_string(),
        caret: format!("{}^", " ".repeat(text[..source.pos.min(text.len())].chars().count())),
        source,
    })
}

/// The outcome of one command: human-readable text, a JSON payload, and
/// whether the mathematical condition it tests holds.
#[derive(Clone, Debug, PartialEq)]
pub struct Response {
    pub command: &'static str,
    pub holds: bool,
    pub text: String,
    pub payload: Value,
}

impl Response {
    fn new(command: &'static str, holds: bool, text: String, payload: Value) -> Self {
        Response {
            command,
            holds,
            text,
            payload,
        }
    }

    pub fn exit_code(&self) -> u8 {
        if self.holds {
            0
        } else {
            1
        }
    }

    /// The JSON document: the payload's fields plus `schema_version` and
    /// `command`.
    pub fn to_json(&self) -> Value {
        let mut doc = serde_json::Map::new();
        doc.insert("schema_version".into(), json!(SCHEMA_VERSION));
        doc.insert("command".into(), json!(self.command));
        match &self.payload {
            Value::Object(fields) => doc.extend(fields.clone()),
            other => {
                doc.insert("result".into(), other.clone());
            }
        }
        Value::Object(doc)
    }
}

pub fn print(response: &Response, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => response.text.clone(),
        OutputFormat::Json => {
            serde_json::to_string_pretty(&response.to_json()).expect("JSON values serialize")
        }
    }
}

fn monomial_input(args: &MonomialArgs) -> Result<(Vec<String>, MonomialIdeal), CliError> {
    let names = grammar("vars", &args.vars, parse_var_list(&args.vars))?;
    let ideal = grammar("ideal", &args.ideal, parse_monomial_ideal(&args.ideal, &names))?;
    Ok((names, ideal))
}

fn ring_input(args: &RingIdealArgs) -> Result<(QuotientRing, Vec<PolyFp>), CliError> {
    let spec = grammar("ring", &args.ring, parse_ring_spec(&args.ring))?;
    let gens = grammar(
        "ideal",
        &args.ideal,
        parse_polynomial_list(&args.ideal, &spec.names, spec.p),
    )?;
    Ok((spec.build()?, gens))
}

fn element_input(args: &ElementArgs) -> Result<(QuotientRing, Vec<PolyFp>, PolyFp), CliError> {
    let (ring, gens) = ring_input(&args.base)?;
    let z = grammar(
        "element",
        &args.element,
        parse_polynomial(&args.element, ring.names(), ring.characteristic()),
    )?;
    Ok((ring, gens, z))
}

fn monomials_json(points: &[ExponentVector], names: &[String]) -> Value {
    json!({
        "generators": points.iter().map(|p| format_monomial(p, names)).collect::<Vec<_>>(),
        "exponents": points,
    })
}

fn ideal_response(command: &'static str, ideal: &MonomialIdeal, names: &[String]) -> Response {
    Response::new(
        command,
        true,
        format_monomial_ideal(ideal, names),
        monomials_json(ideal.generators(), names),
    )
}

fn condition_text(status: &ConditionStatus, names: &[String]) -> String {
    match status {
        ConditionStatus::Holds => "holds".to_string(),
        ConditionStatus::HoldsUpTo { n_max } => format!("holds up to n={n_max}"),
        ConditionStatus::Fails { witness, n } => {
            let mut s = format!("fails at {}", format_monomial(witness, names));
            if let Some(n) = n {
                s.push_str(&format!(" with n={n}"));
            }
            s
        }
    }
}

fn axiom_text(reports: &[AxiomReport]) -> String {
    let mut lines = Vec::new();
    for report in reports {
        for s in &report.axioms {
            let verdict = if s.passed() { "pass" } else { "FAIL" };
            lines.push(format!("{}: {} ({} checked)", s.axiom, verdict, s.checked));
            for f in s.failures.iter().take(3) {
                lines.push(format!(
                    "  instance {}: ({}) {}",
                    f.instance,
                    f.witness.join("), ("),
                    f.detail
                ));
            }
        }
    }
    lines.join("\n")
}

pub fn execute(request: &Request) -> Result<Response, CliError> {
    let name = request.command.name();
    Ok(match &request.command {
        Command::Integral(a) => {
            let (names, ideal) = monomial_input(a)?;
            ideal_response(name, &integral_closure(&ideal)?, &names)
        }
        Command::SpecialIntegral(a) => {
            let (names, ideal) = monomial_input(a)?;
            ideal_response(name, &special_integral_closure(&ideal)?, &names)
        }
        Command::LowPoints(a) => {
            let (names, ideal) = monomial_input(a)?;
            let low = low_points(&ideal)?;
            let text: Vec<String> = low.iter().map(|p| format_monomial(p, &names)).collect();
            Response::new(name, true, text.join(", "), monomials_json(&low, &names))
        }
        Command::Decomposition(a) => {
            let (names, ideal) = monomial_input(a)?;
            let d = decomposition_holds(&ideal)?;
            let mut text = if d.holds {
                "holds".to_string()
            } else {
                let w = d.witness.as_ref().map(|w| format_monomial(w, &names));
                format!("fails, witness {}", w.unwrap_or_default())
            };
            if !d.cross_check_agrees {
                text.push_str("\ncross-check DISAGREES");
            }
            Response::new(name, d.holds && d.cross_check_agrees, text, serde_json::to_value(&d).expect("serializable"))
        }
        Command::Frobenius(a) | Command::SpecialFrobenius(a) => {
            let (ring, gens, z) = element_input(a)?;
            let v = if matches!(request.command, Command::Frobenius(_)) {
                frobenius_member(&z, &gens, &ring, a.base.max_e)?
            } else {
                special_frobenius_member(&z, &gens, &ring, a.base.max_e)?
            };
            Response::new(name, v.is_in(), v.to_string(), serde_json::to_value(v).expect("serializable"))
        }
        Command::DecomposeF(a) => {
            let (ring, gens, z) = element_input(a)?;
            let d = special_decompose(&z, &gens, &ring, a.base.max_e)?;
            let (i, s) = (ring.format(&d.ideal_part), ring.format(&d.special_part));
            Response::new(
                name,
                true,
                format!("i = {i}\ns = {s}\ne = {}", d.e),
                json!({ "ideal_part": i, "special_part": s, "e": d.e }),
            )
        }
        Command::FSpread(a) => {
            let (ring, gens) = ring_input(a)?;
            let t = f_spread(&gens, &ring, a.max_e)?;
            let row = |v: Vec<String>| v.join(" ");
            let text = format!(
                "e:  {}\nmu: {}\nstable: {}",
                row(t.e.iter().map(u32::to_string).collect()),
                row(t.mu.iter().map(usize::to_string).collect()),
                t.stable
            );
            Response::new(name, true, text, serde_json::to_value(&t).expect("serializable"))
        }
        Command::Independence(a) => {
            let (ring, gens) = ring_input(&a.base)?;
            match a.q {
                Some(q) => {
                    let ok = analytically_f_independent_at_q(&gens, &ring, q)?;
                    let text = format!(
                        "{} at q={q}",
                        if ok { "analytically independent" } else { "analytically dependent" }
                    );
                    Response::new(name, ok, text, json!({ "q": q, "independent": ok }))
                }
                None => {
                    let r = f_independent(&gens, &ring, a.base.max_e)?;
                    let text = match r {
                        Independence::IndependentUpTo { e_max } => {
                            format!("independent up to e={e_max}")
                        }
                        Independence::Dependent { index, e } => {
                            format!("dependent: generator {} at e={e}", index + 1)
                        }
                    };
                    Response::new(name, r.is_independent(), text, serde_json::to_value(r).expect("serializable"))
                }
            }
        }
        Command::Reductions(a) => {
            let (names, ideal) = monomial_input(&a.base)?;
            let reds = minimal_subset_reductions(&ideal, &a.closure.operation())?;
            let texts: Vec<String> =
                reds.iter().map(|r| format_monomial_ideal(&r.ideal, &names)).collect();
            Response::new(
                name,
                true,
                texts.iter().map(|t| format!("({t})")).collect::<Vec<_>>().join("\n"),
                json!({ "closure": a.closure.as_str(), "reductions": texts }),
            )
        }
        Command::Spread(a) => {
            let (_, ideal) = monomial_input(&a.base)?;
            let s = spread_over_subsets(&ideal, &a.closure.operation())?;
            let text = s.map_or("none".to_string(), |s| s.to_string());
            Response::new(name, s.is_some(), text, json!({ "closure": a.closure.as_str(), "subset_spread": s }))
        }
        Command::BsCheck(a) => {
            let (names, ideal) = monomial_input(&a.base)?;
            let r = briancon_skoda_check(&ideal, a.w)?;
            let list = |v: &[ExponentVector]| {
                v.iter().map(|p| format_monomial(p, &names)).collect::<Vec<_>>().join(", ")
            };
            let text = format!(
                "special: {} generators checked, {} violations {}\nintegral: {} generators checked, {} violations {}",
                r.special_checked,
                r.special_violations.len(),
                list(&r.special_violations),
                r.integral_checked,
                r.integral_violations.len(),
                list(&r.integral_violations),
            );
            Response::new(name, r.holds(), text.replace(" \n", "\n").trim_end().to_string(), serde_json::to_value(&r).expect("serializable"))
        }
        Command::Evolution(a) => {
            let (names, ideal) = monomial_input(&a.base)?;
            let r = evolution_conditions(&ideal, a.max_n)?;
            let mut text = format!(
                "SP: {}\nAR: {}\nNN: {}\nbar-independent: {}",
                condition_text(&r.sp, &names),
                condition_text(&r.ar, &names),
                condition_text(&r.nn, &names),
                r.bar_independent
            );
            let mut payload = serde_json::to_value(&r).expect("serializable");
            let mut holds = r.all_hold() && r.chain_consistent();
            if let Some(bounds) = &a.bounds {
                let rv = reesvalsp_equivalence_check(&ideal, bounds, a.max_n)?;
                text.push_str(&format!(
                    "\nrees-valuation check: {}/{} agree, {} bound-insufficient, {} contradictions",
                    rv.agreements,
                    rv.points,
                    rv.bound_insufficient.len(),
                    rv.contradictions.len()
                ));
                holds &= rv.passes();
                payload["rees_valuation_check"] = serde_json::to_value(&rv).expect("serializable");
            }
            Response::new(name, holds, text, payload)
        }
        Command::Axioms(a) => {
            let instances = match &a.ideal {
                Some(text) => {
                    let vars = a.vars.clone().unwrap_or_default();
                    let (_, ideal) = monomial_input(&MonomialArgs {
                        vars,
                        ideal: text.clone(),
                    })?;
                    vec![ideal]
                }
                None => random_instances(a.seed, a.count, 3, 5, 4),
            };
            let c = a.closure.operation();
            let reports = vec![
                check_closure_axioms(&c, &instances),
                check_special_axioms(&c, &instances, a.pairs, a.seed)?,
            ];
            let holds = reports.iter().all(AxiomReport::passed);
            Response::new(name, holds, axiom_text(&reports), json!({ "reports": reports }))
        }
        Command::OracleCheck(a) => {
            let instances = match &a.ideal {
                Some(text) => {
                    let vars = a.vars.clone().unwrap_or_default();
                    let (_, ideal) = monomial_input(&MonomialArgs {
                        vars,
                        ideal: text.clone(),
                    })?;
                    vec![ideal]
                }
                None => random_instances(a.seed, a.count, 3, 4, 3),
            };
            let mut points = 0;
            let mut disagreements = Vec::new();
            for ideal in &instances {
                let c = compare_with_lp(ideal, a.denominator_bound)?;
                points += c.points;
                for d in c.disagreements {
                    disagreements.push(json!({ "ideal": ideal.to_string(), "disagreement": d }));
                }
            }
            let text = format!(
                "{} ideals, {} points, {} disagreements",
                instances.len(),
                points,
                disagreements.len()
            );
            Response::new(
                name,
                disagreements.is_empty(),
                text,
                json!({ "ideals": instances.len(), "points": points, "disagreements": disagreements }),
            )
        }
    })
}

/// Parses, configures the thread pool, executes, prints, and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let request = match Request::parse_args(args) {
        Ok(r) => r,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = request.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: --threads: {e}");
            return ExitCode::from(2);
        }
    }
    match execute(&request) {
        Ok(response) => {
            println!("{}", print(&response, request.format()));
            ExitCode::from(response.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
