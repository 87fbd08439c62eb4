//! End-to-end checks of the command-line contract: output formats agree,
//! parallelism does not reorder records, and bad parameters exit with
//! diagnostics instead of panics.

use std::collections::BTreeMap;
use std::process::{Command, Output};

use umbral_mix::rational::{parse_rational, Rational};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_umbral-mix"))
        .args(args)
        .env_remove("UMBRAL_MIX_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

/// Decode the payload cell of a JSON record into rationals.
fn json_payloads(text: &str) -> Vec<Vec<Rational>> {
    text.lines()
        .map(|line| {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            match &v["payload"] {
                serde_json::Value::String(s) => vec![parse_rational(s).unwrap()],
                serde_json::Value::Array(items) => items
                    .iter()
                    .map(|x| parse_rational(x.as_str().unwrap()).unwrap())
                    .collect(),
                other => panic!("unexpected payload {other}"),
            }
        })
        .collect()
}

/// Decode the payload column of a CSV table into rationals.
fn csv_payloads(text: &str) -> Vec<Vec<Rational>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    reader
        .records()
        .map(|record| {
            record.unwrap()[2]
                .split(';')
                .map(|s| parse_rational(s).unwrap())
                .collect()
        })
        .collect()
}

#[test]
fn csv_and_json_tables_decode_identically() {
    for family_args in [
        vec!["--family", "barnes", "--n", "0..6", "--a", "1/2,3"],
        vec![
            "--family", "mixed", "--n", "0..5", "--r", "2", "--k", "-1", "--a", "1,2",
        ],
        vec!["--family", "bernoulli-numbers", "--n", "0..8"],
        vec!["--family", "stirling2", "--n", "0..6"],
    ] {
        let mut json_args = vec!["table"];
        json_args.extend(&family_args);
        let mut csv_args = json_args.clone();
        csv_args.extend(["--format", "csv"]);

        let json_out = run(&json_args);
        let csv_out = run(&csv_args);
        assert!(json_out.status.success());
        assert!(csv_out.status.success());
        assert_eq!(
            json_payloads(&stdout(&json_out)),
            csv_payloads(&stdout(&csv_out)),
            "formats disagree for {family_args:?}"
        );
    }
}

#[test]
fn verify_formats_and_parallelism_are_stable() {
    let base = ["verify", "--suite", "t6", "--max-n", "4"];
    let sequential = run(&base);
    assert_eq!(sequential.status.code(), Some(0));

    let mut jobs4 = base.to_vec();
    jobs4.extend(["--jobs", "4"]);
    let parallel = run(&jobs4);
    assert_eq!(
        stdout(&sequential),
        stdout(&parallel),
        "--jobs must not reorder records"
    );

    let env_override = Command::new(env!("CARGO_BIN_EXE_umbral-mix"))
        .args(base)
        .env("UMBRAL_MIX_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(
        stdout(&sequential),
        stdout(&env_override),
        "env override must not reorder records"
    );

    let mut csv_args = base.to_vec();
    csv_args.extend(["--format", "csv"]);
    let csv_out = run(&csv_args);
    let csv_text = stdout(&csv_out);
    let mut csv_reader = csv::Reader::from_reader(csv_text.as_bytes());
    let csv_rows: Vec<csv::StringRecord> = csv_reader.records().map(|r| r.unwrap()).collect();
    let json_lines: Vec<String> = stdout(&sequential).lines().map(String::from).collect();
    assert_eq!(csv_rows.len(), json_lines.len());
    for (row, line) in csv_rows.iter().zip(&json_lines) {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(&row[0], v["theorem_id"].as_str().unwrap());
        assert_eq!(
            &row[2],
            if v["equal"].as_bool().unwrap() {
                "true"
            } else {
                "false"
            }
        );
        // the flattened params decode to the same key/value map
        let mut from_csv = BTreeMap::new();
        for pair in row[1].split(';') {
            let (key, value) = pair.split_once('=').unwrap();
            from_csv.insert(key.to_string(), value.to_string());
        }
        let from_json: BTreeMap<String, String> = v["params"]
            .as_object()
            .unwrap()
            .iter()
            .map(|(k, v)| (k.clone(), v.as_str().unwrap().to_string()))
            .collect();
        assert_eq!(from_csv, from_json);
    }
}

#[test]
fn verify_record_schema_is_frozen() {
    let out = run(&[
        "verify", "--suite", "t5", "--max-n", "0", "--r-list", "1", "--k-list", "1", "--a-sets",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"theorem_id\":\"T5\",\"params\":{\"a\":\"1\",\"k\":\"1\",\"n\":\"0\",\"r\":\"1\"},\"equal\":true,\"lhs\":\"1\",\"rhs\":\"1\",\"first_diff\":null}\n"
    );
    assert!(stderr(&out).contains("1 passed, 0 failed"));
}

#[test]
fn trivial_sweep_has_one_record_per_key() {
    // max_n = 0 leaves one T5 point per (r, k, a) key; the default grid
    // has 42 of them
    let out = run(&["verify", "--suite", "t5", "--max-n", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 42);
    assert!(stdout(&out).lines().all(|l| l.contains("\"equal\":true")));
}

#[test]
fn parameter_errors_exit_two_with_diagnostics() {
    let cases: Vec<(&[&str], &str)> = vec![
        (
            &["verify", "--suite", "t8", "--lambda-list", "1"],
            "lambda must differ from 1",
        ),
        (
            &["verify", "--suite", "t1", "--r-list", "0"],
            "r must be at least 1",
        ),
        (&["verify", "--suite", "t1", "--a-sets", "1|0,2"], "nonzero"),
        (
            &["verify", "--suite", "t1", "--k-list", "1,x"],
            "invalid k value",
        ),
        (
            &["table", "--family", "barnes", "--n", "0..2", "--a", "0"],
            "nonzero",
        ),
        (
            &["table", "--family", "barnes", "--n", "0..2", "--a", "1.5"],
            "unparseable rational",
        ),
        (
            &[
                "table",
                "--family",
                "frobenius-euler",
                "--n",
                "0..2",
                "--s",
                "1",
                "--lambda",
                "1",
            ],
            "lambda",
        ),
        (
            &[
                "table", "--family", "mixed", "--n", "2", "--r", "3", "--k", "0", "--a", "1,2",
            ],
            "--r 3 does not match",
        ),
        (
            &["table", "--family", "barnes", "--n", "5..2", "--a", "1"],
            "empty degree range",
        ),
    ];
    for (args, needle) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(
            stderr(&out).contains(needle),
            "diagnostic for {args:?} was: {}",
            stderr(&out)
        );
        assert!(stdout(&out).is_empty());
    }
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = run(&["verify", "--suite", "t99"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown suite"));
}
