use std::path::PathBuf;

use aalie_cli::{run, EXIT_CONTRACT, EXIT_OK, EXIT_PARSE};
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("aalie").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = invoke(args);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn parse_errors_exit_2() {
    for f in [
        "malformed.json",
        "bad_scalar.json",
        "not_prime.json",
        "missing.json",
    ] {
        let (code, out, err) = invoke(&["analyze", &data(f)]);
        assert_eq!(code, EXIT_PARSE, "{f}");
        assert!(out.is_empty());
        assert!(err.starts_with("parse error"), "{err}");
    }
    assert_eq!(invoke(&["bogus"]).0, EXIT_PARSE);
    assert_eq!(
        invoke(&["check-map", &data("heis.json"), &data("heis_identity.json")]).0,
        EXIT_PARSE
    );
    assert_eq!(
        invoke(&["--format", "xml", "analyze", &data("heis.json")]).0,
        EXIT_PARSE
    );
}

#[test]
fn contract_violations_exit_3() {
    assert_eq!(invoke(&["analyze", &data("zero.json")]).0, EXIT_CONTRACT);
    assert_eq!(
        invoke(&["isomorphic", &data("bi7.json"), &data("bi7_f5.json")]).0,
        EXIT_CONTRACT
    );
    assert_eq!(
        invoke(&[
            "analyze",
            &data("heis.json"),
            "--ideal",
            &data("heis_line.json")
        ])
        .0,
        EXIT_CONTRACT
    );
    // a 2x2 map against a 3-dimensional algebra
    assert_eq!(
        invoke(&[
            "check-map",
            &data("heis.json"),
            &data("axb_diag.json"),
            "--kind",
            "aut"
        ])
        .0,
        EXIT_CONTRACT
    );
}

#[test]
fn help_exits_0() {
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("uea-center"));
}

#[test]
fn check_map_verdicts() {
    let v = json(&[
        "check-map",
        &data("heis.json"),
        &data("heis_identity.json"),
        "--kind",
        "aut",
    ]);
    assert_eq!(
        (v["holds"].clone(), v["clause"].clone()),
        (true.into(), "aut/heisenberg-form".into())
    );
    let v = json(&[
        "check-map",
        &data("heis.json"),
        &data("heis_beta1.json"),
        "--kind",
        "aut",
    ]);
    assert_eq!(v["holds"], false);
    let v = json(&[
        "check-map",
        &data("heis.json"),
        &data("heis_identity.json"),
        "--kind",
        "lo",
    ]);
    assert_eq!(v["holds"], true);
    let v = json(&[
        "check-map",
        &data("heis.json"),
        &data("heis_identity.json"),
        "--kind",
        "der",
    ]);
    assert_eq!(v["holds"], false);
    let v = json(&[
        "check-map",
        &data("axb.json"),
        &data("axb_diag.json"),
        "--kind",
        "lo",
    ]);
    assert_eq!(
        (v["holds"].clone(), v["clause"].clone()),
        (false.into(), "lo/sl2".into())
    );
    let v = json(&[
        "check-map",
        &data("axb.json"),
        &data("axb_diag.json"),
        "--kind",
        "hom",
        "--target",
        &data("axb3.json"),
    ]);
    assert_eq!(v["holds"], false);
}

#[test]
fn derivations_and_decompose() {
    let v = json(&["derivations", &data("heis.json")]);
    assert_eq!(
        (
            v["dim"].clone(),
            v["inner_dim"].clone(),
            v["outer_exist"].clone()
        ),
        (6.into(), 2.into(), true.into())
    );
    let v = json(&["derivations", &data("axb.json")]);
    assert_eq!(
        (v["dim"].clone(), v["outer_exist"].clone()),
        (2.into(), false.into())
    );
    let v = json(&["decompose", &data("heis_plus_line.json")]);
    assert_eq!(
        (v["core_kind"].clone(), v["w_dim"].clone()),
        ("Heisenberg".into(), 1.into())
    );
    assert_eq!(v["change_of_basis"].as_array().unwrap().len(), 4);
}

#[test]
fn analyze_ideal_quotient() {
    let v = json(&[
        "analyze",
        &data("heis.json"),
        "--ideal",
        &data("heis_center.json"),
    ]);
    assert_eq!(v["ideal"]["class"], "AbelianIdeal_inV");
    assert_eq!(v["ideal"]["quotient"]["kind"], "abelian");
    assert_eq!(v["ideal"]["quotient"]["dim"], 2);
}
