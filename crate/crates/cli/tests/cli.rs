use std::process::{Command, Output};

use clifford_width::ExactReal;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clifford-width"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn width_rp5_json() {
    let v = json(&["width", "RP5", "--format", "json"]);
    assert_eq!(v["exact"], "2 * pi^2");
    assert_eq!(v["decimal"], "19.739208802179");
    assert_eq!(v["valueKind"], "Exact");
    assert_eq!(v["paperBacked"], true);
    assert_eq!(v["candidates"].as_array().unwrap().len(), 3);
    let winner = &v["candidates"][v["winner"].as_u64().unwrap() as usize];
    assert_eq!(
        (winner["n1"].as_u64(), winner["n2"].as_u64()),
        (Some(2), Some(2))
    );
}

#[test]
fn width_cp2_banner() {
    let out = stdout(&["width", "CP2"]);
    assert!(out.contains("UPPER BOUND"));
    assert!(out.contains("3/8 * sqrt(3) * pi^2"));
}

#[test]
fn digits_flag() {
    let v = json(&["width", "RP3", "--format", "json", "--digits", "40"]);
    assert_eq!(v["decimal"], "9.8696044010893586188344909998761511353137");
    assert_eq!(
        run(&["width", "RP3", "--digits", "1001"]).status.code(),
        Some(2)
    );
}

#[test]
fn exit_codes() {
    let hp = run(&["width", "HP2"]);
    assert_eq!(hp.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&hp.stderr).contains("quaternionic"));
    assert_eq!(run(&["width", "RP"]).status.code(), Some(2));
    assert_eq!(run(&["width", "RP2"]).status.code(), Some(3));
    assert_eq!(run(&["index", "1;1"]).status.code(), Some(2));
    assert_eq!(run(&["index", "1,2@RP4x"]).status.code(), Some(2));
    assert_eq!(
        run(&["spectrum", "1,1", "--below", "pi"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn index_examples() {
    let v = json(&["index", "1,1@RP3", "--format", "json"]);
    assert_eq!(v["quotientIndex"], "1");
    assert_eq!(v["sphereIndex"], "5");
    let v = json(&["index", "3,3@CP3", "--format", "json"]);
    assert_eq!(v["quotientIndex"], "1");
    let v = json(&["index", "1,2", "--format", "json"]);
    assert_eq!(v["sphereIndex"], "6");
    assert!(v["quotientIndex"].is_null());
}

#[test]
fn enumerate_and_spectrum_counts() {
    let v = json(&["enumerate", "RP7", "--format", "json"]);
    assert_eq!(v["candidates"].as_array().unwrap().len(), 3);
    let v = json(&["spectrum", "1,1", "--below", "4", "--format", "json"]);
    assert_eq!(v["entries"].as_array().unwrap().len(), 3);
    let csv = stdout(&["enumerate", "RP7", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 4);
}

#[test]
fn verify_passes() {
    let out = run(&["verify", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], v["total"]);
}

#[test]
fn exact_fields_parse_back() {
    for space in ["RP3", "RP4", "RP6", "RP7", "CP2", "CP3", "RP12"] {
        let v = json(&["width", space, "--format", "json"]);
        let top = ExactReal::parse(v["exact"].as_str().unwrap()).unwrap();
        let winner = &v["candidates"][v["winner"].as_u64().unwrap() as usize];
        let eff = ExactReal::parse(winner["effective"].as_str().unwrap()).unwrap();
        assert_eq!(
            top.compare(&eff).unwrap(),
            std::cmp::Ordering::Equal,
            "{space}"
        );
        for c in v["candidates"].as_array().unwrap() {
            ExactReal::parse(c["exact"].as_str().unwrap()).unwrap();
        }
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "RP3", "RP7", "CP3", "--format", "latex"][..],
        &["width", "RP6", "--format", "csv"],
        &["index", "2,4@RP7", "--format", "json"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn latex_brace_table() {
    let out = stdout(&["table", "RP4", "RP6", "--format", "latex"]);
    assert!(out.contains("\\left\\{ \\begin{array}{lcc}"));
    assert!(out.contains("=\\frac{8\\pi^{2}}{3\\sqrt{3}} &  {\\rm if}  & i=4"));
    assert!(out.contains("=\\frac{24}{25}\\sqrt{\\frac{3}{5}}\\pi^{3} &  {\\rm if}  & i=6"));
}
