use std::process::{Command, Output};

use serde_json::Value;

fn pcurv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcurv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const CORPUS: &[&str] = &[
    "(3x-4)/(2x^2-6x+4)",
    "(7x^2-3x-4)/(2x^3+4x^2-6x+4)",
    "(x+2)/(2x^2+x-1)",
    "1/(x^2-3818929)",
    "1/(x^2-4)",
    "(2x+1)/(x^2+x+1)",
    "1/x",
    "-7/(3x)",
    "x^2/(x+1)",
    "1/x^2",
    "0",
    "5",
];

fn is_decimal(v: &Value) -> bool {
    v.as_str().is_some_and(|s| {
        let digits = s.strip_prefix('-').unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    })
}

fn is_rational(v: &Value) -> bool {
    v.as_str().is_some_and(|s| {
        let mut parts = s.splitn(2, '/');
        let num = parts.next().unwrap();
        is_decimal(&Value::from(num)) && parts.next().is_none_or(|d| is_decimal(&Value::from(d)))
    })
}

fn check_decide_schema(v: &Value) {
    let obj = v.as_object().expect("object");
    for key in obj.keys() {
        assert!(
            ["verdict", "reason", "witness_prime", "residues", "delta", "sigma", "checked_up_to"].contains(&key.as_str()),
            "unexpected key {key}"
        );
    }
    let verdict = obj["verdict"].as_str().unwrap();
    assert!(["algebraic", "transcendental", "inconclusive"].contains(&verdict));
    assert!(is_decimal(&obj["delta"]));
    if let Some(s) = obj.get("sigma") {
        assert!(is_decimal(s));
    }
    if let Some(c) = obj.get("checked_up_to") {
        assert!(is_decimal(c));
    }
    if let Some(p) = obj.get("witness_prime") {
        assert!(p.is_u64());
    }
    if let Some(r) = obj.get("residues") {
        assert!(r.as_array().unwrap().iter().all(is_rational));
    }
    if let Some(r) = obj.get("reason") {
        assert!(r.is_string());
    }
    match verdict {
        "algebraic" => assert!(obj.contains_key("residues")),
        "transcendental" => assert!(obj.contains_key("reason")),
        _ => assert!(obj.contains_key("checked_up_to")),
    }
}

#[test]
fn decide_json_follows_schema_on_corpus() {
    for expr in CORPUS {
        let o = pcurv(&["decide", expr, "--json", "--max-prime", "2000"]);
        assert_eq!(o.status.code(), Some(0), "{expr}");
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        check_decide_schema(&v);
        let o = pcurv(&["decide", expr, "--json", "--method", "roots"]);
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        check_decide_schema(&v);
    }
}

#[test]
fn other_subcommands_emit_json() {
    for expr in CORPUS {
        let o = pcurv(&["pcurvature", expr, "-p", "7", "--json"]);
        assert_eq!(o.status.code(), Some(0), "{expr}");
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert!(["zero", "nonzero", "bad_prime"].contains(&v["outcome"].as_str().unwrap()));
        assert_eq!(v["p"], 7);

        let o = pcurv(&["bounds", expr, "--json"]);
        match o.status.code() {
            Some(0) => {
                let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
                for key in ["delta", "m", "n", "sigma"] {
                    assert!(is_decimal(&v[key]), "{expr}: {key}");
                }
                assert!(is_rational(&v["b"]) && is_rational(&v["delta_cubed_upper"]));
                assert!(v["exceeds_prime_range"].is_boolean());
            }
            code => assert_eq!(code, Some(2), "{expr}"),
        }
    }
    let o = pcurv(&["kronecker", "w^3 - w", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "splits");
    assert_eq!(v["roots"], serde_json::json!(["-1", "0", "1"]));
    assert!(is_decimal(&v["sigma"]));
    let o = pcurv(&["hp-verify", "-M", "1", "-N", "2", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lead"], "1/5040");
    assert_eq!(v["approximants"].as_array().unwrap().len(), 3);
}

#[test]
fn worked_examples_in_text_mode() {
    let o = pcurv(&["decide", "(3*x-4)/(2*x^2-6*x+4)", "--method", "pcurv"]);
    let text = stdout(&o);
    assert!(text.starts_with("Algebraic\n"));
    assert!(text.contains("sigma=265\n"));
    let o = pcurv(&["pcurvature", "1/(x^2-3818929)", "-p", "47"]);
    assert!(stdout(&o).starts_with("NonZero"));
    let o = pcurv(&["pcurvature", "1/(x^2-3818929)", "-p", "43"]);
    assert!(stdout(&o).starts_with("Zero"));
    let o = pcurv(&["decide", "0"]);
    assert!(stdout(&o).starts_with("Algebraic"));
    let o = pcurv(&["kronecker", "x^2 - 2"]);
    assert!(stdout(&o).contains("witness_prime=3"));
}

#[test]
fn exit_codes() {
    assert_eq!(pcurv(&["decide", "x/0"]).status.code(), Some(2));
    let o = pcurv(&["decide", "(x+1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column 5"));
    assert_eq!(pcurv(&["decide", "1/(x^2-4)", "--max-prime", "1000"]).status.code(), Some(0));
    assert_eq!(pcurv(&["decide", "1/(x^2-4)", "--max-prime", "1000", "--strict"]).status.code(), Some(3));
    assert_eq!(pcurv(&["decide", "1/x", "--strict"]).status.code(), Some(0));
    assert_eq!(pcurv(&["pcurvature", "1/x", "-p", "8"]).status.code(), Some(2));
    assert_eq!(pcurv(&["bounds", "x^2/(x+1)"]).status.code(), Some(2));
    assert_eq!(pcurv(&["hp-verify", "-M", "3", "-N", "5"]).status.code(), Some(2));
    assert_eq!(pcurv(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(pcurv(&["--help"]).status.code(), Some(0));
}

fn strip_times(csv: &str) -> String {
    csv.lines()
        .map(|l| l.rsplit_once(',').unwrap().0)
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn bench_is_deterministic() {
    let args = ["bench", "--degree", "5", "--height-bits", "8", "--count", "8", "--seed", "42"];
    let a = stdout(&pcurv(&args));
    let b = stdout(&pcurv(&args));
    let mut threaded = args.to_vec();
    threaded.extend(["--threads", "4"]);
    let c = stdout(&pcurv(&threaded));
    assert!(a.starts_with("degree,height_bits,seed,case_index,verdict,witness_prime,time_ms\n"));
    assert_eq!(a.lines().count(), 9);
    assert_eq!(strip_times(&a), strip_times(&b));
    assert_eq!(strip_times(&a), strip_times(&c));

    let dir = std::env::temp_dir().join(format!("pcurv-bench-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rows.csv");
    let mut to_file = args.to_vec();
    let p = path.to_str().unwrap();
    to_file.extend(["--csv", p]);
    let o = pcurv(&to_file);
    assert!(stdout(&o).starts_with("cases=8"));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(strip_times(&written), strip_times(&a));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn printed_inputs_reparse() {
    for expr in CORPUS {
        let parsed = pcurv_cli::parse::parse_ratfun(expr).unwrap();
        let again = pcurv_cli::parse::parse_ratfun(&parsed.to_string()).unwrap();
        assert!(again.same_function(&parsed), "{expr}");
    }
}
