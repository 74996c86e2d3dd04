//! End-to-end tests of the binary: output contracts, exit codes,
//! determinism, and the JSON round trip.

use std::process::{Command, Output};

use deformed_hermite::serialize::GenDoc;

fn dhermite(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dhermite"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn gen_plain_examples() {
    let out = dhermite(&[
        "gen", "--family", "M", "--n", "1", "--s", "sym", "--alpha", "+1", "--format", "plain",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2z + 2s\n");

    let weight = dhermite(&["gen", "--family", "D", "--s", "0", "--format", "plain"]);
    assert_eq!(stdout(&weight), "1\n");

    let c2 = dhermite(&[
        "gen", "--family", "C", "--n", "2", "--s", "1", "--alpha", "+1", "--format", "plain",
    ]);
    assert_eq!(stdout(&c2), "4z^2 - 8z - 10\n");

    let h = dhermite(&["gen", "--family", "H", "--n-max", "2", "--format", "plain"]);
    assert_eq!(stdout(&h), "1\n2z\n4z^2 - 2\n");
}

#[test]
fn gen_negative_alpha_and_latex() {
    let out = dhermite(&[
        "gen", "--family", "M", "--n", "2", "--s", "sym", "--alpha", "-1", "--format", "latex",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4z^{2} - 8sz + 4s^{2} + 4s - 2\n");
}

#[test]
fn gen_usage_errors_exit_2() {
    // symbolic level is rejected for the orthogonal family
    let out = dhermite(&["gen", "--family", "C", "--n", "2", "--s", "sym"]);
    assert_eq!(out.status.code(), Some(2));

    // unknown flags are parser errors, also 2
    let out = dhermite(&["gen", "--family", "M", "--wat"]);
    assert_eq!(out.status.code(), Some(2));

    // ceiling enforcement
    let out = dhermite(&["gen", "--family", "H", "--n", "40"]);
    assert_eq!(out.status.code(), Some(2));
    let raised = dhermite(&["gen", "--family", "H", "--n", "40", "--ceiling", "64"]);
    assert!(raised.status.success());

    // missing index selection
    let out = dhermite(&["gen", "--family", "M"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_cells_match_published_values() {
    let csv = dhermite(&["table", "--n-max", "2", "--s", "0", "--format", "csv"]);
    let text = stdout(&csv);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n\\m,0,1,2");
    // diagonal 1, 2, 8
    assert_eq!(lines[1], "0,1,0,0");
    assert_eq!(lines[2], "1,0,2,0");
    assert_eq!(lines[3], "2,0,0,8");

    let json = dhermite(&[
        "table", "--n-max", "2", "--s", "1", "--alpha", "+1", "--format", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(doc["entries"][2][1], "-16");

    let zero = dhermite(&["table", "--n-max", "1", "--s", "4", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&zero)).unwrap();
    assert_eq!(doc["entries"][1][0], "0");

    let plain = dhermite(&["table", "--n-max", "1", "--s", "1", "--format", "plain"]);
    let text = stdout(&plain);
    assert_eq!(text.lines().count(), 2);
    assert_eq!(text.lines().nth(1).unwrap().trim(), "0 -2");
}

#[test]
fn decompose_matches_published_table() {
    let out = dhermite(&[
        "decompose",
        "--n",
        "1",
        "--s",
        "2",
        "--alpha",
        "+1",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["coeffs"]["1"], "-2");
    assert_eq!(doc["coeffs"]["2"], "1/2");
    assert_eq!(doc["coeffs"]["3"], "-1/2");
}

#[test]
fn ode_emits_triangular_system() {
    let out = dhermite(&["ode", "--n", "3", "--alpha", "+1", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["rows"][3]["sub"][1], "-48s");
    assert_eq!(doc["rows"][3]["diag_shift"], 6);
    for r in doc["residuals"].as_array().unwrap() {
        assert_eq!(r, "0");
    }
}

#[test]
fn verify_small_grid_passes_and_is_deterministic() {
    let args = ["verify", "--n-max", "3", "--s-max", "1", "--paper-table"];
    let first = dhermite(&args);
    assert_eq!(first.status.code(), Some(0));
    let text = stdout(&first);
    assert!(text.contains("I_n1 closed form: PASS"));
    assert!(text.contains("z^2 decomposition: PASS"));
    assert!(text.contains("M explicit list: PASS"));
    assert!(text.contains("singular Gram points: none"));
    assert!(text.contains(", 0 failed"));

    let second = dhermite(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_trivial_grid_passes() {
    let out = dhermite(&["verify", "--n-max", "0", "--s-max", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains(", 0 failed"));
}

#[test]
fn verify_default_grid_passes() {
    let out = dhermite(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("singular Gram points: none"));
    assert!(text.contains(", 0 failed"));
}

#[test]
fn gen_json_round_trips_bytewise() {
    for family in ["H", "M"] {
        for alpha in ["+1", "-1"] {
            let out = dhermite(&[
                "gen", "--family", family, "--n-max", "5", "--alpha", alpha, "--format", "json",
            ]);
            let text = stdout(&out);
            let doc: GenDoc = serde_json::from_str(&text).unwrap();
            for p in &doc.polys {
                p.poly.to_zpoly().unwrap();
            }
            let mut rendered = serde_json::to_string_pretty(&doc).unwrap();
            rendered.push('\n');
            assert_eq!(rendered, text, "family {family} alpha {alpha}");
        }
    }
    for family in ["C", "W", "D"] {
        for alpha in ["+1", "-1"] {
            let mut args = vec![
                "gen", "--family", family, "--s", "2", "--alpha", alpha, "--format", "json",
            ];
            if family != "D" {
                args.extend(["--n-max", "4"]);
            }
            let out = dhermite(&args);
            let text = stdout(&out);
            let doc: GenDoc = serde_json::from_str(&text).unwrap();
            let mut rendered = serde_json::to_string_pretty(&doc).unwrap();
            rendered.push('\n');
            assert_eq!(rendered, text, "family {family} alpha {alpha}");
        }
    }
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join("dhermite-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.json");
    let piped = dhermite(&["gen", "--family", "M", "--n", "3", "--format", "json"]);
    let to_file = dhermite(&[
        "gen",
        "--family",
        "M",
        "--n",
        "3",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(to_file.status.success());
    assert!(to_file.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), piped.stdout);
}
