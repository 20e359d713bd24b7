use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    manifest()
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn aalie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aalie"))
        .args(args)
        .output()
        .expect("run aalie")
}

fn stdout_of(args: &[&str]) -> String {
    let out = aalie(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8")
}

fn golden(name: &str) -> String {
    fs::read_to_string(manifest().join("tests/golden").join(name)).expect("golden file")
}

fn check(name: &str, args: &[&str]) -> Value {
    let first = stdout_of(args);
    let second = stdout_of(args);
    assert_eq!(first, second, "rerun differs for {name}");
    assert_eq!(first, golden(name), "golden mismatch for {name}");
    serde_json::from_str(&first).unwrap_or(Value::Null)
}

#[test]
fn analyze_named_algebras() {
    for (alg, kind, center, nilpotent) in [
        ("axb", "AxB", 0, false),
        ("heis", "Heisenberg", 1, true),
        ("bi7", "Other", 0, false),
    ] {
        let v = check(
            &format!("analyze_{alg}.json"),
            &["analyze", &data(&format!("{alg}.json"))],
        );
        assert_eq!(v["core_kind"], kind);
        assert_eq!(v["center"]["dim"], center);
        assert_eq!(v["nilpotent"], nilpotent);
        // the embedded core spec parses back into an algebra
        let core: aalie_cli::schema::AlgebraSpec =
            serde_json::from_value(v["core"]["spec"].clone()).unwrap();
        assert!(core.to_algebra().is_ok());
    }
}

#[test]
fn analyze_text_format() {
    let text = check(
        "analyze_heis_plus_line.txt",
        &["--format", "text", "analyze", &data("heis_plus_line.json")],
    );
    assert_eq!(text, Value::Null);
}

#[test]
fn isomorphic_pairs() {
    let v = check(
        "isomorphic_axb_axb3.json",
        &["isomorphic", &data("axb.json"), &data("axb3.json")],
    );
    assert_eq!(v["isomorphic"], true);
    assert_eq!(v["lambda"], "1/3");
    let back = stdout_of(&["isomorphic", &data("axb3.json"), &data("axb.json")]);
    assert_eq!(serde_json::from_str::<Value>(&back).unwrap()["lambda"], "3");

    let v = check(
        "isomorphic_bi7_bi7.json",
        &["isomorphic", &data("bi7.json"), &data("bi7.json")],
    );
    assert_eq!(v["isomorphic"], true);
    for (name, a, b) in [
        ("isomorphic_axb_heis.json", "axb.json", "heis.json"),
        ("isomorphic_heis_bi7.json", "heis.json", "bi7.json"),
    ] {
        let v = check(name, &["isomorphic", &data(a), &data(b)]);
        assert_eq!(v["isomorphic"], false);
        assert_eq!(v["witness"], Value::Null);
    }
}

#[test]
fn uea_center_named_algebras() {
    for alg in ["axb", "heis", "bi7"] {
        check(
            &format!("uea_center_{alg}.json"),
            &[
                "uea-center",
                "--max-degree",
                "3",
                &data(&format!("{alg}.json")),
            ],
        );
    }
    let v: Value = serde_json::from_str(&stdout_of(&[
        "uea-center",
        &data("bi7.json"),
        "--max-degree",
        "2",
    ]))
    .unwrap();
    assert_eq!(v["degrees"][0]["basis"], serde_json::json!([]));
    assert_eq!(v["degrees"][1]["basis"], serde_json::json!(["x1^2 + x2^2"]));
}

#[test]
fn seeds_are_reproducible() {
    for seed in ["0", "7", "12345"] {
        let args = [
            "--seed",
            seed,
            "isomorphic",
            &data("bi7.json"),
            &data("bi7_f5.json"),
        ];
        let a = aalie(&args);
        assert_eq!(a.stdout, aalie(&args).stdout);
        // different fields
        assert_eq!(a.status.code(), Some(3));
    }
    let args = [
        "--seed",
        "9",
        "isomorphic",
        &data("heis_plus_line.json"),
        &data("heis_plus_line.json"),
    ];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}
