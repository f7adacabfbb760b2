use std::process::Command;

use proptest::prelude::*;
use serde_json::Value;
use spclosure::cli::{self, ClosureKind, Request};

fn text() -> impl Strategy<Value = String> {
    "[a-z0-9^*+, ()\\[\\]/-]{1,20}"
}

fn monomial_args() -> impl Strategy<Value = cli::MonomialArgs> {
    (text(), text()).prop_map(|(vars, ideal)| cli::MonomialArgs { vars, ideal })
}

fn ring_args() -> impl Strategy<Value = cli::RingIdealArgs> {
    (text(), text(), 0u32..10).prop_map(|(ring, ideal, max_e)| cli::RingIdealArgs { ring, ideal, max_e })
}

fn closure_kind() -> impl Strategy<Value = ClosureKind> {
    prop_oneof![Just(ClosureKind::Integral), Just(ClosureKind::Identity)]
}

fn command() -> impl Strategy<Value = cli::Command> {
    use cli::Command as C;
    prop_oneof![
        monomial_args().prop_map(C::Integral),
        monomial_args().prop_map(C::SpecialIntegral),
        monomial_args().prop_map(C::LowPoints),
        monomial_args().prop_map(C::Decomposition),
        (ring_args(), text()).prop_map(|(base, element)| C::Frobenius(cli::ElementArgs { base, element })),
        (ring_args(), text()).prop_map(|(base, element)| C::SpecialFrobenius(cli::ElementArgs { base, element })),
        (ring_args(), text()).prop_map(|(base, element)| C::DecomposeF(cli::ElementArgs { base, element })),
        ring_args().prop_map(C::FSpread),
        (ring_args(), proptest::option::of(1u64..100))
            .prop_map(|(base, q)| C::Independence(cli::IndependenceArgs { base, q })),
        (monomial_args(), closure_kind()).prop_map(|(base, closure)| C::Reductions(cli::ReductionArgs { base, closure })),
        (monomial_args(), closure_kind()).prop_map(|(base, closure)| C::Spread(cli::ReductionArgs { base, closure })),
        (monomial_args(), 0u32..5).prop_map(|(base, w)| C::BsCheck(cli::BrianconSkodaArgs { base, w })),
        (monomial_args(), 1u32..64, proptest::option::of(prop::collection::vec(0u32..9, 1..4)))
            .prop_map(|(base, max_n, bounds)| C::Evolution(cli::EvolutionArgs { base, max_n, bounds })),
        (closure_kind(), proptest::option::of((text(), text())), any::<u64>(), 0usize..100, 0usize..1000)
            .prop_map(|(closure, single, seed, count, pairs)| {
                let (ideal, vars) = match single {
                    Some((i, v)) => (Some(i), Some(v)),
                    None => (None, None),
                };
                C::Axioms(cli::AxiomArgs { closure, ideal, vars, seed, count, pairs })
            }),
        (proptest::option::of((text(), text())), 1u32..40, any::<u64>(), 0usize..100)
            .prop_map(|(single, denominator_bound, seed, count)| {
                let (ideal, vars) = match single {
                    Some((i, v)) => (Some(i), Some(v)),
                    None => (None, None),
                };
                C::OracleCheck(cli::OracleArgs { ideal, vars, denominator_bound, seed, count })
            }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn printed_requests_parse_back(command in command(), json in any::<bool>(), threads in proptest::option::of(1usize..16)) {
        let request = Request { command, json, threads };
        let args = request.to_args();
        let parsed = Request::parse_args(&args);
        prop_assert!(parsed.is_ok(), "{:?}: {:?}", args, parsed.err());
        prop_assert_eq!(parsed.unwrap(), request);
    }
}

fn closure(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_closure"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn binary_prints_documented_results() {
    let (code, out, _) = closure(&["integral", "--vars", "x,y", "--ideal", "x^2,y^2"]);
    assert_eq!((code, out.trim()), (0, "x^2, x*y, y^2"));
    let (code, out, _) = closure(&["special-integral", "--vars", "x,y", "--ideal", "x^2,y^2"]);
    assert_eq!((code, out.trim()), (0, "x^3, x^2*y, x*y^2, y^3"));
    let (code, out, _) = closure(&[
        "frobenius",
        "--ring",
        "F2[x,y,z]/(x^3+y^3+z^3)",
        "--ideal",
        "x,y",
        "--element",
        "z^2",
        "--max-e",
        "3",
    ]);
    assert_eq!((code, out.trim()), (0, "In at e=1"));
}

#[test]
fn binary_exit_codes() {
    let (code, out, _) = closure(&["decomposition", "--vars", "x,y", "--ideal", "x^2,y^2"]);
    assert_eq!(code, 1, "{out}");
    let (code, _, err) = closure(&["integral", "--vars", "x,y", "--ideal", "x^2,,y"]);
    assert_eq!(code, 2);
    assert!(err.contains("position 4"), "{err}");
    let (code, _, _) = closure(&["no-such-command"]);
    assert_eq!(code, 2);
    let (code, _, _) = closure(&["integral", "--vars", "x,y"]);
    assert_eq!(code, 2);
    let (code, _, _) = closure(&["frobenius", "--ring", "F2[x,y,z]/(x^3+y^3+z^3)", "--ideal", "x,y", "--element", "z", "--max-e", "2"]);
    assert_eq!(code, 1);
    let (code, _, _) = closure(&["--help"]);
    assert_eq!(code, 0);
}

fn json(args: &[&str]) -> Value {
    let mut v: Vec<&str> = args.to_vec();
    v.push("--json");
    let (_, out, err) = closure(&v);
    serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}"))
}

#[test]
fn json_outputs_follow_their_schemas() {
    let v = json(&["integral", "--vars", "x,y", "--ideal", "x^2,y^2"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "integral");
    assert_eq!(v["generators"], serde_json::json!(["x^2", "x*y", "y^2"]));
    assert_eq!(v["exponents"], serde_json::json!([[2, 0], [1, 1], [0, 2]]));

    let v = json(&["f-spread", "--ring", "F2[x,y]", "--ideal", "x,y", "--max-e", "2"]);
    assert_eq!(v["e"], serde_json::json!([0, 1, 2]));
    assert_eq!(v["mu"], serde_json::json!([2, 2, 2]));
    assert_eq!(v["stable"], true);

    let v = json(&["special-frobenius", "--ring", "F2[x,y,z]/(x^3+y^3+z^3)", "--ideal", "x,y", "--element", "z^2"]);
    assert_eq!((v["verdict"].as_str(), v["e"].as_u64(), v["kind"].as_str()), (Some("In"), Some(1), Some("SpecialPart")));

    let v = json(&["frobenius", "--ring", "F2[x,y]", "--ideal", "x", "--element", "y", "--max-e", "2"]);
    assert_eq!(v["verdict"], "NotInUpTo");
    assert_eq!(v["e_max"], 2);

    let v = json(&["axioms", "--vars", "x,y", "--ideal", "x^2,y^2", "--pairs", "4"]);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    for r in reports {
        for a in r["axioms"].as_array().unwrap() {
            assert!(a["axiom"].is_string() && a["checked"].is_u64() && a["failures"].is_array());
        }
    }

    let v = json(&["evolution", "--vars", "x,y", "--ideal", "x^2,y^2", "--max-n", "8", "--box", "3,3"]);
    assert_eq!(v["sp"]["status"], "Holds");
    assert_eq!(v["rees_valuation_check"]["contradictions"], serde_json::json!([]));

    let v = json(&["decompose-f", "--ring", "F2[x,y,z]/(x^3+y^3+z^3)", "--ideal", "x,y", "--element", "z^2"]);
    assert_eq!((v["ideal_part"].as_str(), v["special_part"].as_str(), v["e"].as_u64()), (Some("0"), Some("z^2"), Some(1)));
}

#[test]
fn every_command_runs() {
    let cases: &[&[&str]] = &[
        &["low-points", "--vars", "x,y", "--ideal", "x^2,y^3"],
        &["independence", "--ring", "F2[x,y]", "--ideal", "x+y,y", "--max-e", "2"],
        &["independence", "--ring", "F2[x,y]", "--ideal", "x^2,x*y", "--q", "2"],
        &["reductions", "--vars", "x,y", "--ideal", "x^2,x*y,y^2"],
        &["spread", "--vars", "x,y", "--ideal", "x^2,x*y,y^2"],
        &["bs-check", "--vars", "x,y", "--ideal", "x^2,x*y", "--w", "1"],
        &["oracle-check", "--seed", "3", "--count", "2", "--threads", "2"],
        &["axioms", "--closure", "identity", "--count", "5", "--pairs", "10"],
    ];
    for args in cases {
        let (code, out, err) = closure(args);
        assert_eq!(code, 0, "{args:?}: {out} {err}");
    }
}
