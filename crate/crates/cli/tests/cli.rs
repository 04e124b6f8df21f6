//! End-to-end CLI tests: exit codes and round trips through the
//! interchange formats.

use std::path::PathBuf;
use std::process::{Command, Output};

fn ipbd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ipbd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ipbd-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn admissible_exit_codes() {
    let out = ipbd(&["admissible", "ipbd", "--v", "7", "--w", "3", "--K", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all conditions hold"));

    let out = ipbd(&["admissible", "ipbd", "--v", "6", "--w", "3", "--K", "3"]);
    assert_eq!(out.status.code(), Some(1));

    let out = ipbd(&["admissible", "pbd", "--v", "7", "--K", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["admissible"], serde_json::Value::Bool(true));
}

#[test]
fn search_exception_is_negative() {
    let out = ipbd(&["search", "ipbd", "--v", "7", "--w", "2", "--K", "3,4,5,6,7"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("NONEXISTENT"));
}

#[test]
fn search_budget_exhaustion_is_exit_3() {
    let out = ipbd(&[
        "search",
        "ipbd",
        "--v",
        "13",
        "--w",
        "2",
        "--K",
        "3,4,5,6,7,8,9,10,11,12,13",
        "--nodes",
        "2000",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("BUDGET_EXHAUSTED"));
}

#[test]
fn generate_then_verify_round_trip() {
    let path = tmp("fano.json");
    let out = ipbd(&["gen", "fano", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = ipbd(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn construct_verify_round_trip() {
    let path = tmp("ipbd_13_4.json");
    let out = ipbd(&[
        "construct",
        "ipbd",
        "--v",
        "13",
        "--w",
        "4",
        "--K",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = ipbd(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn json_output_reparses_identically() {
    let out = ipbd(&[
        "construct",
        "ipbd",
        "--v",
        "7",
        "--w",
        "3",
        "--K",
        "3",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let design = ipbd_core::io::design_from_json(&text).unwrap();
    let again = ipbd_core::io::design_to_json(&design).unwrap();
    assert_eq!(design, ipbd_core::io::design_from_json(&again).unwrap());
}

#[test]
fn verify_detects_invalid_and_malformed() {
    // a Fano plane missing one block is invalid
    let out = ipbd(&["gen", "fano"]);
    let mut v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let blocks = v["blocks"].as_array_mut().unwrap();
    blocks.pop();
    let path = tmp("broken.json");
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let out = ipbd(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    let path = tmp("garbage.json");
    std::fs::write(&path, "{not json").unwrap();
    let out = ipbd(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = ipbd(&["verify", "/no/such/file.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_rejects_unavailable_orders() {
    let out = ipbd(&["gen", "mols", "--q", "6", "--t", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ipbd(&["gen", "sts", "--v", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn app_packing_reports_stats() {
    let out = ipbd(&["app", "packing", "--v", "11", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("b = 17"), "{text}");
    assert!(text.contains("johnson = 18"), "{text}");
}

#[test]
fn catalog_list_and_show() {
    let out = ipbd(&["catalog", "list"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("kts(15)"));
    let out = ipbd(&["catalog", "show", "kts(15)"]);
    assert_eq!(out.status.code(), Some(0));
    let out = ipbd(&["catalog", "show", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parallel_search_finds_designs() {
    let out = ipbd(&["--workers", "4", "search", "pbd", "--v", "9", "--K", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn catalog_add_stores_verified_objects() {
    let dir = std::env::temp_dir().join(format!("ipbd-catalog-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let design = tmp("sts9.json");
    let out = ipbd(&["gen", "sts", "--v", "9", "--out", design.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let out = Command::new(env!("CARGO_BIN_EXE_ipbd"))
        .env("IPBD_CATALOG_DIR", &dir)
        .args([
            "catalog",
            "add",
            design.to_str().unwrap(),
            "--key",
            "sts(9)",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_ipbd"))
        .env("IPBD_CATALOG_DIR", &dir)
        .args(["catalog", "show", "sts(9)"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    // an invalid object is refused
    let mut v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&design).unwrap()).unwrap();
    v["blocks"].as_array_mut().unwrap().pop();
    let broken = tmp("sts9_broken.json");
    std::fs::write(&broken, serde_json::to_string(&v).unwrap()).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_ipbd"))
        .env("IPBD_CATALOG_DIR", &dir)
        .args([
            "catalog",
            "add",
            broken.to_str().unwrap(),
            "--key",
            "broken",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn latin_file_verification() {
    let path = tmp("mols9.json");
    let out = ipbd(&[
        "gen",
        "mols",
        "--q",
        "9",
        "--t",
        "8",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = ipbd(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    // corrupt one cell: both the latin conditions and orthogonality break
    let text = std::fs::read_to_string(&path).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["squares"][0][4] = serde_json::json!(0);
    let bad = tmp("mols9_bad.json");
    std::fs::write(&bad, serde_json::to_string(&v).unwrap()).unwrap();
    let out = ipbd(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}
