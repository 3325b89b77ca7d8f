use std::process::{Command, Output};

fn isosub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isosub"))
        .args(args)
        .output()
        .expect("run isosub")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn strip_runtime(json: &str) -> String {
    json.lines()
        .filter(|l| !l.contains("\"runtime_ms\""))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn psi_echoes_canonical_layout() {
    let o = isosub(&["psi", "4x2", "--brute"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("Z_2 x Z_4"), "{s}");
    assert!(s.contains("psi     23"));
    assert!(s.contains("brute   23"));
}

#[test]
fn closed_form_handles_large_groups() {
    let o = isosub(&["psi", "101x101x10201"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(isosub(&["psi", "101x101x10201", "--brute"]).status.code() == Some(3));
}

#[test]
fn exit_codes() {
    assert_eq!(isosub(&["psi", "2x0"]).status.code(), Some(2));
    assert_eq!(
        isosub(&["quotient", "2x4", "--subgroup", "(1)"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(isosub(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(
        isosub(&["subgroups", "2x2x2x2x2x2x2"]).status.code(),
        Some(3)
    );
    assert_eq!(
        isosub(&["verify", "psi-equivalence", "--order-max", "99999999"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        isosub(&["verify", "example-2-6", "--param", "p_max=3"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        isosub(&["verify", "lemma-2-1", "--order-max", "12"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn parse_errors_name_the_column() {
    let o = isosub(&["psi", "2x4y"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("column 4"), "{err}");
}

#[test]
fn isolated_methods_agree() {
    let outputs: Vec<String> = ["brute", "psi", "structural"]
        .iter()
        .map(|m| {
            let s = stdout(&isosub(&["isolated", "2x2x4", "--method", m]));
            s.lines()
                .filter(|l| !l.starts_with("method"))
                .collect::<Vec<_>>()
                .join("\n")
        })
        .collect();
    assert!(outputs[0].contains("count   12"));
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0], outputs[2]);
}

#[test]
fn subgroups_by_order_and_backend() {
    let s = stdout(&isosub(&["subgroups", "2x4", "--order", "2"]));
    assert!(s.contains("count   3"));
    let j = stdout(&isosub(&["subgroups", "4x6"]));
    let g = stdout(&isosub(&["subgroups", "4x6", "--backend", "goursat"]));
    assert_eq!(j.replace("join-closure", "goursat"), g);
}

#[test]
fn json_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = isosub(&[
            "verify",
            "isolation-equivalence",
            "--order-max",
            "16",
            "--param",
            "p3_max=27",
            "--json",
            p.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    let (ja, jb) = (
        std::fs::read_to_string(&a).unwrap(),
        std::fs::read_to_string(&b).unwrap(),
    );
    assert_eq!(strip_runtime(&ja), strip_runtime(&jb));
    let v: serde_json::Value = serde_json::from_str(&ja).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["suite"], "isolation-equivalence");
    assert_eq!(v["summary"]["failed"], 0);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 6);
    let first = &v["cases"][0];
    for k in [
        "group",
        "subgroup_generators",
        "check",
        "expected",
        "actual",
        "pass",
    ] {
        assert!(first.get(k).is_some(), "missing {k}");
    }
}

#[test]
fn failing_cases_name_group_and_subgroup() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = isosub(&[
        "verify",
        "lemma-2-1",
        "--order-max",
        "36",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL [componentwise-law] G=2x3"));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let bad: Vec<&serde_json::Value> = v["cases"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .collect();
    assert!(!bad.is_empty());
    assert!(bad
        .iter()
        .all(|c| c["group"].is_string() && c["subgroup_generators"].is_array()));
}

#[test]
fn cache_is_reused_and_verified() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let c = cache.to_str().unwrap();
    let args = [
        "verify",
        "omega1-containment",
        "--order-max",
        "16",
        "--param",
        "p3_max=27",
        "--cache-dir",
        c,
    ];
    assert_eq!(isosub(&args).status.code(), Some(0));
    let entries = std::fs::read_dir(&cache).unwrap().count();
    assert!(entries > 10);
    let mut verify = args.to_vec();
    verify.push("--verify-cache");
    assert_eq!(isosub(&verify).status.code(), Some(0));
    assert_eq!(std::fs::read_dir(&cache).unwrap().count(), entries);

    // Truncate every entry: the run warns, recomputes and still passes.
    for e in std::fs::read_dir(&cache).unwrap() {
        let p = e.unwrap().path();
        let text = std::fs::read_to_string(&p).unwrap();
        std::fs::write(&p, &text[..text.len() / 3]).unwrap();
    }
    let o = isosub(&verify);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8(o.stderr).unwrap().contains("corrupt"));
}
