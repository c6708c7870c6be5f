//! End-to-end checks of the command-line interface: flags, formats and
//! exit codes.

use std::process::Command;

fn hdsets() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hdsets"))
}

#[test]
fn verify_bundled_catalog_exits_zero() {
    let out = hdsets().arg("verify").output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("35/35 rows pass"));
    // deterministic across runs (modulo the timing line)
    let strip = |s: &str| {
        s.lines()
            .filter(|l| !l.starts_with("elapsed"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let again = hdsets().arg("verify").output().unwrap();
    assert_eq!(strip(&text), strip(&String::from_utf8_lossy(&again.stdout)));
}

#[test]
fn verify_allow_inverse_also_passes() {
    let out = hdsets().args(["verify", "--allow-inverse"]).output().unwrap();
    assert!(out.status.success());
}

#[test]
fn verify_missing_file_exits_two() {
    let out = hdsets()
        .args(["verify", "--catalog", "/nonexistent/x.txt"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_bad_catalog_exits_two() {
    let dir = std::env::temp_dir().join("hdsets-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.txt");
    std::fs::write(&path, "group g1 <a: a^3>\n").unwrap();
    let out = hdsets()
        .args(["verify", "--catalog"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("order"), "{err}");
}

#[test]
fn search_then_classify_round_trip() {
    let out = hdsets()
        .args(["search", "--group", "g3", "--method", "spread"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let sets = String::from_utf8_lossy(&out.stdout);
    assert!(!sets.trim().is_empty());
    let summary = String::from_utf8_lossy(&out.stderr);
    assert!(summary.contains("classes: 1"), "{summary}");

    let dir = std::env::temp_dir().join("hdsets-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g3_sets.txt");
    std::fs::write(&path, sets.as_bytes()).unwrap();
    let out = hdsets()
        .args(["classify", "--group", "g3", "--input"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let classified = String::from_utf8_lossy(&out.stdout);
    assert_eq!(classified.lines().count(), 1, "{classified}");
}

#[test]
fn rds_search_in_g1_is_empty() {
    let out = hdsets()
        .args(["search", "--group", "g1", "--method", "rds"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).trim().is_empty());
}

#[test]
fn identities_pass() {
    let out = hdsets().arg("identities").output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("hold exactly"));
}

#[test]
fn repcheck_d33_and_rejects_spread_rows() {
    let out = hdsets().args(["repcheck", "--row", "D33"]).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("representation 12"));
    assert!(text.contains("36"));

    let out = hdsets().args(["repcheck", "--row", "D1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = hdsets().args(["repcheck", "--row", "D99"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn product_demos_pass() {
    for demo in ["menon16", "dillon16"] {
        let out = hdsets().args(["product", "--demo", demo]).output().unwrap();
        assert!(out.status.success());
        assert!(String::from_utf8_lossy(&out.stdout).contains("holds"));
    }
}

#[test]
fn export_formats() {
    let out = hdsets()
        .args(["export", "--group", "g1", "--format", "sets"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let sets = String::from_utf8_lossy(&out.stdout);
    assert_eq!(sets.lines().count(), 4);
    for line in sets.lines() {
        assert_eq!(line.split(',').count(), 15);
    }

    let out = hdsets()
        .args(["export", "--group", "g9", "--format", "transforms"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let transforms = String::from_utf8_lossy(&out.stdout);
    assert_eq!(transforms.lines().count(), 3);
    for line in transforms.lines() {
        assert_eq!(line.split(" + ").count(), 36);
    }

    let out = hdsets()
        .args(["export", "--group", "g77", "--format", "sets"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
