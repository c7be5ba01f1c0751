use std::process::Command;

fn khp(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_khp")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn bracket_from_file() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/knots/unknot.pd");
    let (code, out, _) = khp(&["bracket", "--flavor", "q", "--pd", path]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "q + q^-1");
}

#[test]
fn every_subcommand_emits_versioned_json() {
    let graph = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/graphs/triangle.json");
    let runs: &[&[&str]] = &[
        &["jones", "--pd", "builtin:trefoil"],
        &["khovanov", "--pd", "builtin:hopf", "--ring", "gf2", "--dr"],
        &["dichromatic", "--graph", graph, "--method", "sum"],
        &["potts", "--graph", graph, "--q", "3", "--coupling", "0.5,-0.25", "--method", "dichromatic"],
        &["stosic", "--graph", graph, "--n", "2"],
        &["amplitude", "--pd", "builtin:hopf", "--theta", "-0.4", "--shots", "500", "--seed", "9"],
        &["potts-quantum", "--graph", graph, "--q", "2"],
    ];
    for args in runs {
        let mut full = vec!["--format", "json", "--threads", "2"];
        full.extend_from_slice(args);
        let (code, out, err) = khp(&full);
        assert_eq!(code, 0, "{args:?}: {err}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema_version"], 1, "{args:?}");
        assert_eq!(v["command"], args[0]);
    }
}

#[test]
fn amplitude_is_seeded() {
    let args = ["--format", "json", "amplitude", "--pd", "builtin:trefoil", "--theta", "1", "--shots", "1000", "--seed", "4"];
    assert_eq!(khp(&args).1, khp(&args).1);
}

#[test]
fn env_caps_and_errors() {
    let out = Command::new(env!("CARGO_BIN_EXE_khp"))
        .args(["potts", "--graph", "builtin:square", "--q", "4", "--coupling", "1,0"])
        .env("KHP_MAX_STATES", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(v["error"]["kind"], "too-large");
    assert_eq!(khp(&["khovanov", "--pd", "/nonexistent.pd"]).0, 1);
    assert_eq!(khp(&["potts", "--graph", "builtin:square"]).0, 2);
}
