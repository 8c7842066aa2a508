use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ribbondb"))
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

#[test]
fn single_invariants() {
    assert_eq!(
        stdout(&["invariants", "--knot", "6_1", "--which", "det"]),
        "9\n"
    );
    assert_eq!(
        stdout(&["invariants", "--knot", "10_42", "--which", "components"]),
        "1\n"
    );
    assert_eq!(
        stdout(&["invariants", "--pd", "X_{1,1,2,2}", "--which", "jones"]),
        "1\n"
    );
    assert_eq!(
        stdout(&[
            "invariants",
            "--pd",
            "X_{1,4,2,5} X_{3,6,4,1} X_{5,2,6,3}",
            "--which",
            "jones"
        ]),
        "-t^-4 + t^-3 + t^-1\n"
    );
}

#[test]
fn parse_canonicalizes() {
    assert_eq!(
        stdout(&["parse", "--pd", "$X_{1,~4,~2,~5}$ X[3,6,4,1]; X(5 2 6 3)"])
            .lines()
            .next(),
        Some("X_{1,4,2,5} X_{3,6,4,1} X_{5,2,6,3}")
    );
}

#[test]
fn closures() {
    let both = stdout(&["close", "--untangle", "4", "--closure", "both"]);
    assert!(both.contains("crossings: 0"), "{both}");
    assert!(both.contains("free_loops: 2"), "{both}");
    let top = stdout(&["close", "--untangle", "2", "--closure", "top"]);
    assert!(
        top.contains("tops: []") && top.contains("bottoms: [2,4]"),
        "{top}"
    );
    let full = stdout(&[
        "close",
        "--knot",
        "6_1",
        "--closure",
        "full",
        "--stitch",
        "t1:t4",
    ]);
    let pd = full
        .lines()
        .next()
        .unwrap()
        .strip_prefix("pd: ")
        .unwrap()
        .to_string();
    assert_eq!(
        stdout(&["invariants", "--pd", &pd, "--which", "jones"]),
        stdout(&["invariants", "--knot", "6_1", "--which", "jones"])
    );
}

#[test]
fn simplify_certifies_6_1_candidate() {
    let out = stdout(&["simplify", "--candidate", "6_1"]);
    assert!(out.contains("crossings: 11 -> 0"), "{out}");
    assert!(out.contains("free_loops: 2"), "{out}");
}

#[test]
fn verify_json_schema_and_strict_exit() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["verify", "--all", "--json"])).unwrap();
    assert_eq!(json["schema"], "ribbondb-report/1");
    assert_eq!(json["entries"].as_array().unwrap().len(), 21);
    let again: serde_json::Value =
        serde_json::from_str(&stdout(&["verify", "--all", "--json"])).unwrap();
    assert_eq!(json, again);

    assert!(run(&["verify", "--all"]).status.success());
    assert_eq!(run(&["verify", "--all", "--strict"]).status.code(), Some(3));
    assert_eq!(
        run(&["verify", "--knot", "6_1", "--strict"]).status.code(),
        Some(0)
    );
}

#[test]
fn json_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    stdout(&["verify", "--knot", "10_3", "--json", path.to_str().unwrap()]);
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["entries"][0]["unlink_check"], "degenerate");
}

#[test]
fn errors_exit_one() {
    let out = run(&["parse", "--pd", "X_{1,2,3}"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("fewer than 4 labels"));
    assert_eq!(run(&["invariants", "--knot", "3_1"]).status.code(), Some(1));
}

#[test]
fn list_and_export() {
    let list = stdout(&["list"]);
    assert_eq!(list.lines().count(), 21);
    let export = stdout(&["list", "--export"]);
    let first: Vec<&str> = export.lines().next().unwrap().split('\t').collect();
    assert_eq!(first[0], "6_1");
    assert!(first[1].starts_with("X_{2,8,3,7}"));
}
