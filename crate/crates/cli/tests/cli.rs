use std::process::{Command, Output};

use serde_json::Value;

fn pellmat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pellmat"))
        .args(args)
        .env_remove("PELLMAT_MAX_EXPANSION")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn pell_max_zero_prints_zero() {
    let o = pellmat(&["pell", "--max", "0", "--format", "text"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn pell_routes_agree() {
    let a = pellmat(&["pell", "--max", "150"]);
    let b = pellmat(&["pell", "--max", "150", "--via", "det"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    let lines = json_lines(&a);
    assert_eq!(lines.len(), 151);
    assert_eq!(lines[6]["pell"], "70");
}

#[test]
fn pell_csv_has_header() {
    let o = pellmat(&["pell", "--max", "3", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,pell\n0,0\n1,1\n2,2\n3,5\n");
}

#[test]
fn det_of_small_pell_matrices() {
    for (n, re, im) in [(1, "0", "2"), (3, "0", "-12"), (4, "29", "0")] {
        for engine in ["permutation", "bareiss", "continuant", "laplace"] {
            let o = pellmat(&["det", "--n", &n.to_string(), "--engine", engine]);
            assert!(o.status.success(), "{engine} n={n}");
            let v = &json_lines(&o)[0];
            assert_eq!(v["det"]["re"], re, "{engine} n={n}");
            assert_eq!(v["det"]["im"], im, "{engine} n={n}");
            assert_eq!(v["order"], n);
        }
    }
}

#[test]
fn det_reads_matrix_file() {
    let dir = std::env::temp_dir().join(format!("pellmat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.json");
    let m = r#"[[{"re":"1","im":"0"},{"re":"0","im":"1"}],[{"re":"0","im":"1"},{"re":"1","im":"0"}]]"#;
    std::fs::write(&path, m).unwrap();
    let o = pellmat(&["det", "--input", path.to_str().unwrap(), "--format", "text"]);
    std::fs::remove_dir_all(&dir).ok();
    assert!(o.status.success());
    assert_eq!(stdout(&o), "det = 2\n");
}

#[test]
fn det_dump_includes_matrix() {
    let o = pellmat(&["det", "--n", "2", "--dump"]);
    let v = &json_lines(&o)[0];
    assert_eq!(v["matrix"][0][1]["re"], "1");
    assert_eq!(v["matrix"][1][1]["im"], "2");
}

#[test]
fn expand_lists_nonzero_blocks() {
    let o = pellmat(&["expand", "--n", "4", "--rows", "1,2"]);
    assert!(o.status.success());
    let v = &json_lines(&o)[0];
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
    assert_eq!(v["total"]["re"], "29");

    let o = pellmat(&["expand", "--n", "4", "--rows", "1,2", "--show-zero-terms"]);
    assert_eq!(json_lines(&o)[0]["terms"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_counts() {
    let o = pellmat(&["verify", "--suite", "doubling", "--to", "50"]);
    assert!(o.status.success());
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 51);
    assert_eq!(lines[50]["summary"]["reports"], 50);
    assert_eq!(lines[50]["summary"]["identity_failures"], 0);

    let o = pellmat(&["verify", "--suite", "convolution", "--to", "30"]);
    let lines = json_lines(&o);
    assert_eq!(lines[lines.len() - 1]["summary"]["reports"], 465);
}

#[test]
fn verify_reports_ascend() {
    let o = pellmat(&["verify", "--suite", "det-equation", "--from", "1", "--to", "12"]);
    let lines = json_lines(&o);
    let ns: Vec<i64> = lines[..lines.len() - 1]
        .iter()
        .map(|r| r["parameters"]["n"].as_i64().unwrap())
        .collect();
    assert_eq!(ns, (2..=12).collect::<Vec<_>>());
    assert!(lines.iter().take(ns.len()).all(|r| r["verdict"] == true));
}

#[test]
fn verify_cofactor_tables_agree_with_computation() {
    let o = pellmat(&["verify", "--suite", "cofactor-tables", "--to", "16", "--engine", "laplace"]);
    assert!(o.status.success());
    let lines = json_lines(&o);
    let summary = &lines[lines.len() - 1];
    assert_eq!(summary["summary"]["paper_discrepancies"], 0);
    assert_eq!(summary["paper_discrepancy"].as_array().unwrap().len(), 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "all", "--to", "10", "--engine", "laplace"];
    assert_eq!(pellmat(&args).stdout, pellmat(&args).stdout);
    let args = ["expand", "--n", "9", "--rows", "2,4,5"];
    assert_eq!(pellmat(&args).stdout, pellmat(&args).stdout);
}

#[test]
fn bench_reports_agreement_and_skips() {
    let o = pellmat(&["bench", "--sizes", "5,12", "--engines", "permutation,laplace,bareiss,continuant"]);
    assert!(o.status.success());
    let cells = json_lines(&o);
    assert_eq!(cells.len(), 8);
    for c in &cells {
        if c["engine"] == "permutation" && c["n"] == 12 {
            assert_eq!(c["status"], "skipped");
        } else {
            assert_eq!(c["status"], "ok");
            assert_eq!(c["matches_continuant"], true);
        }
    }
}

#[test]
fn bad_configuration_exits_2() {
    for args in [
        &["verify", "--suite", "doubling", "--from", "5", "--to", "2"][..],
        &["expand", "--n", "4", "--rows", "2,1"],
        &["expand", "--n", "4", "--rows", "1,5"],
        &["det", "--n", "0"],
        &["det", "--n", "3", "--engine", "gauss"],
        &["pell"],
    ] {
        assert_eq!(pellmat(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn guards_exit_3() {
    let o = Command::new(env!("CARGO_BIN_EXE_pellmat"))
        .args(["expand", "--n", "4", "--rows", "1,2"])
        .env("PELLMAT_MAX_EXPANSION", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());

    assert_eq!(pellmat(&["det", "--n", "10", "--engine", "permutation"]).status.code(), Some(3));
}
