//! End-to-end tests of the command-line binary: output bytes, exit codes
//! and the cache-directory environment override.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_levelone"))
}

#[test]
fn anomaly_json_is_deterministic() {
    let run = || {
        let out = bin().args(["anomaly", "A2+E6", "1"]).output().unwrap();
        assert!(out.status.success());
        out.stdout
    };
    let first = run();
    assert_eq!(first, run(), "identical inputs must give identical bytes");
    let text = String::from_utf8(first).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["conformal_anomaly"], "8");
}

#[test]
fn verlinde_dimension_and_exit_code() {
    let out = bin().args(["verlinde", "A8", "1", "--genus", "3"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dimension"], 729);
}

#[test]
fn branch_d8_row() {
    let out = bin()
        .args(["branch", "E8:D8", "0", "--cutoff", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
    assert_eq!(entries[1]["weight"], serde_json::json!([0, 0, 0, 0, 0, 0, 1, 0]));
    assert_eq!(entries[1]["shift"], 1);
}

#[test]
fn domain_error_exits_one() {
    let out = bin().args(["anomaly", "Q7", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn verify_filter_runs_subset() {
    let out = bin().args(["verify", "--only", "heisenberg"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1);
    assert!(lines[0].starts_with("PASS heisenberg"));
}

#[test]
fn verify_with_corrupt_embedding_exits_two() {
    let dir = std::env::temp_dir().join("levelone-cli-bad-embedding");
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, "{\"ambient\":\"E8\",\"sub\":\"G2+F4\",\"restriction\":[],\"declared_index\":[1,1]}").unwrap();
    let out = bin()
        .args(["verify", "--only", "conformal", "--embedding-file"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("FAIL conformal"), "{text}");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn cache_dir_env_override() {
    let dir = std::env::temp_dir().join("levelone-cli-cache-env");
    let _ = std::fs::remove_dir_all(&dir);
    let out = bin()
        .args(["verlinde", "D4", "1", "--genus", "2"])
        .env("LEVELONE_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    let names: Vec<String> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    assert!(names.iter().any(|n| n.starts_with("rootsys-D4")), "{names:?}");
    assert!(names.iter().any(|n| n.starts_with("smatrix-D4")), "{names:?}");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn heisenberg_scenario_file() {
    let dir = std::env::temp_dir().join("levelone-cli-scenario");
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sc.json");
    std::fs::write(&path, r#"{"center":[3],"genus":1,"samples":4,"seed":9}"#).unwrap();
    let out = bin().arg("heisenberg").arg(&path).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["all_one"], true);
    assert_eq!(v["invariant_dims"].as_array().unwrap().len(), 4);
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn high_precision_mode_accepted() {
    let out = bin()
        .args(["duality", "G2:F4", "--genus", "2", "--precision", "high:30"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dim_a"], 5);
    assert_eq!(v["equal"], true);
}
