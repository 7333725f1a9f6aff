use std::process::Command;

use serde_json::Value;

fn ddecomp(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_ddecomp"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn bounds_subcommand() {
    let v: Value = serde_json::from_str(&ddecomp(&["bounds", "--t", "2", "--d", "2"])).unwrap();
    assert_eq!(v["planar"], 79);
    let v: Value = serde_json::from_str(&ddecomp(&["bounds", "--t", "2", "--d", "1", "--matrix", "--discrete"])).unwrap();
    assert_eq!(v["warren"], 3456);
}

#[test]
fn analyze_writes_json_and_svg() {
    let dir = std::env::temp_dir().join(format!("ddecomp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (json, svg) = (dir.join("ex5.json"), dir.join("ex5.svg"));
    ddecomp(&[
        "analyze",
        "fixtures/ex5.txt",
        "--json",
        json.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
        "--box",
        "-3:3:-3:3",
        "--grid",
        "64",
    ]);
    let text = std::fs::read_to_string(&json).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    // Top-level keys at two-space indent, in emission order.
    let at: Vec<usize> =
        ["border", "degree", "bounds", "points", "region_count", "has_stable_region", "components", "warnings"]
            .iter()
            .map(|k| text.find(&format!("\n  \"{k}\":")).unwrap_or_else(|| panic!("missing {k}")))
            .collect();
    assert!(at.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(v["region_count"], 11);
    assert_eq!(v["bounds"]["lemma1"], 11);
    let regions: std::collections::BTreeSet<u64> =
        v["points"].as_array().unwrap().iter().map(|pt| pt["region"].as_u64().unwrap()).collect();
    assert_eq!(regions.len(), 11);
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<?xml"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_input_fails_with_location() {
    let dir = std::env::temp_dir().join(format!("ddecomp-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("bad.txt");
    std::fs::write(&file, "poly: s^2 + r*\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_ddecomp")).args(["analyze", file.to_str().unwrap()]).output().unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.txt:1"));
    std::fs::remove_dir_all(&dir).unwrap();
}
