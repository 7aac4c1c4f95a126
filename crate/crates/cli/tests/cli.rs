//! End-to-end runs of the `symsig` binary.
//!
//! Golden reports live in `tests/golden`. Set `SYMSIG_UPDATE_GOLDEN=1` to rewrite them.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Runs the binary from the data directory so paths in reports stay relative.
fn symsig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symsig"))
        .args(args)
        .current_dir(data_dir())
        .env_remove("SYMSIG_LIMIT_PAIRS")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

/// Runs with `--json -` and returns the parsed report.
fn report(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json", "-"];
    full.extend_from_slice(args);
    let out = symsig(&full);
    let stdout = String::from_utf8(out.stdout.clone()).unwrap();
    let value = serde_json::from_str(&stdout).unwrap_or_else(|e| {
        panic!("bad report ({e}): {stdout}\nstderr: {}", String::from_utf8_lossy(&out.stderr))
    });
    (code(&out), value)
}

/// Report text with the timing field zeroed.
fn canonical(text: &str) -> String {
    let mut v: Value = serde_json::from_str(text).unwrap();
    v["wall_time_ms"] = Value::from(0);
    serde_json::to_string_pretty(&v).unwrap() + "\n"
}

fn run_to_file(args: &[&str], dir: &Path, name: &str) -> (i32, PathBuf) {
    let path = dir.join(name);
    let mut full = vec!["--json", path.to_str().unwrap()];
    full.extend_from_slice(args);
    let out = symsig(&full);
    (code(&out), path)
}

fn verify(path: &Path) -> (i32, Value) {
    report(&["verify", path.to_str().unwrap()])
}

fn tamper(path: &Path, edit: impl FnOnce(&mut Value)) {
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    edit(&mut v);
    std::fs::write(path, serde_json::to_string_pretty(&v).unwrap()).unwrap();
}

#[test]
fn quadric_in_four_variables_has_signature_zero() {
    let (c, r) = report(&["hypersurface", "--ring", "rings/xyzw.ring", "--poly", "x*y-z*w", "--assume-domain"]);
    assert_eq!(c, 0);
    assert_eq!(r["verdict"]["status"], "determined");
    assert_eq!(r["verdict"]["signature"], "0");
    let result = &r["result"];
    assert_eq!(result["kind"], "hypersurface");
    assert_eq!(result["omega_column_test"]["verdict"], "zero");
    assert_eq!(result["omega_syzygy_test"]["verdict"], "zero");
    assert_eq!(result["sym_checks"].as_array().unwrap().len(), 3);
    assert!(r["warnings"].as_array().unwrap().contains(&Value::from("domain assumed")));
}

#[test]
fn quotient_by_minus_identity_has_signature_one_half() {
    let (c, r) = report(&["quotient", "--group", "groups/neg2.grp", "--max-degree", "200"]);
    assert_eq!(c, 0);
    assert_eq!(r["verdict"]["status"], "determined");
    assert_eq!(r["verdict"]["signature"], "1/2");
    let coefficients = r["result"]["molien"]["coefficients"].as_array().unwrap();
    assert_eq!(coefficients.len(), 201);
    // Invariants of -I are the even-degree forms: a_q = q + 1 for even q.
    for (q, a) in coefficients.iter().enumerate() {
        let expected = if q % 2 == 0 { q + 1 } else { 0 };
        assert_eq!(a.as_str().unwrap(), expected.to_string());
    }
    let last = r["result"]["table"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(last["degree"], 200);
    assert!(last["error_approx"].as_f64().unwrap() < 0.01);
}

#[test]
fn three_variable_quadric_is_undecided() {
    let (c, r) = report(&["hypersurface", "--ring", "rings/xyz.ring", "--poly", "x^2-y*z", "--assume-domain"]);
    assert_eq!(c, 0);
    assert_eq!(r["verdict"]["status"], "undecided");
    assert_eq!(r["verdict"]["signature"], Value::Null);
    let failed: Vec<&str> = r["hypotheses"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|h| h["status"] == "failed")
        .map(|h| h["name"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"n>=4"), "{failed:?}");
}

#[test]
fn missing_domain_assertion_is_undecided_not_an_error() {
    let (c, r) = report(&["hypersurface", "--ring", "rings/xyzw.ring", "--poly", "x*y-z*w"]);
    assert_eq!(c, 0);
    assert_eq!(r["verdict"]["status"], "undecided");
    let domain = r["hypotheses"].as_array().unwrap().iter().find(|h| h["name"] == "domain").unwrap().clone();
    assert_eq!(domain["status"], "not-asserted");
}

#[test]
fn minors_ring_is_conditional_on_reflexivity() {
    let (c, r) = report(&["ci-freerank", "--ideal", "ideals/minors.ideal"]);
    assert_eq!(c, 0);
    assert_eq!(r["verdict"]["status"], "conditional-on-reflexivity");
    assert_eq!(r["verdict"]["signature"], "0");
    let sym = r["result"]["sym_checks"].as_array().unwrap();
    let counts: Vec<(u64, u64)> = sym
        .iter()
        .map(|c| (c["generators"].as_u64().unwrap(), c["relations"].as_u64().unwrap()))
        .collect();
    // C(6+q-1, q) generators and 3 * C(6+q-2, q-1) relations.
    assert_eq!(counts, vec![(6, 3), (21, 18), (56, 63)]);
}

#[test]
fn non_small_group_and_dividing_characteristic_are_undecided() {
    let (c, r) = report(&["quotient", "--group", "groups/swap2.grp"]);
    assert_eq!(c, 0);
    assert_eq!(r["verdict"]["status"], "undecided");
    assert_eq!(r["result"]["small"], false);
    assert!(r["result"]["witness"].is_string());

    let (c, r) = report(&["--char", "2", "quotient", "--group", "groups/neg2.grp"]);
    assert_eq!(c, 0);
    assert_eq!(r["verdict"]["status"], "undecided");
    assert_eq!(r["result"]["coprime"], false);

    let (c, r) = report(&["--char", "3", "quotient", "--group", "groups/neg2.grp", "--max-degree", "20"]);
    assert_eq!(c, 0);
    assert_eq!(r["verdict"]["signature"], "1/2");
    assert_eq!(r["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn cyclotomic_groups_give_one_over_order() {
    for (file, sig) in [("groups/cyclic3.grp", "1/3"), ("groups/quaternion.grp", "1/8")] {
        let (c, r) = report(&["quotient", "--group", file, "--max-degree", "40"]);
        assert_eq!(c, 0, "{file}");
        assert_eq!(r["verdict"]["signature"], sig, "{file}");
    }
}

#[test]
fn utility_subcommands() {
    let (c, r) = report(&["groebner", "--ring", "rings/xyz.ring", "--poly", "x^2-y", "--poly", "x*y-z", "--order", "lex"]);
    assert_eq!(c, 0);
    let basis: Vec<&str> = r["result"]["basis"].as_array().unwrap().iter().map(|p| p.as_str().unwrap()).collect();
    assert!(basis.contains(&"y^3 - z^2"), "{basis:?}");

    let (c, r) = report(&["nf", "--ring", "rings/xyz.ring", "--poly", "x^2-y", "--poly", "x*y-z", "--target", "x^3-z"]);
    assert_eq!(c, 0);
    assert_eq!(r["result"]["member"], true);
    assert_eq!(r["result"]["remainder"], "0");

    let (c, r) = report(&["dim", "--ideal", "ideals/minors.ideal"]);
    assert_eq!(c, 0);
    assert_eq!(r["result"]["dimension"], 4);

    // Cone over P^1 x P^2: h(q) = (q+1) * C(q+2, 2).
    let (c, r) = report(&["hilbert", "--ideal", "ideals/minors.ideal", "--max-degree", "5"]);
    assert_eq!(c, 0);
    let values: Vec<u64> = r["result"]["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().parse().unwrap())
        .collect();
    let expected: Vec<u64> = (0..=5u64).map(|q| (q + 1) * (q + 1) * (q + 2) / 2).collect();
    assert_eq!(values, expected);
}

#[test]
fn input_errors_exit_2() {
    for args in [
        vec!["hypersurface", "--ring", "rings/missing.ring", "--poly", "x"],
        vec!["hypersurface", "--ring", "rings/xyz.ring", "--poly", "x^2-+"],
        vec!["hypersurface", "--ring", "rings/xyz.ring", "--poly", "x^2", "--poly", "y^2"],
        vec!["hypersurface", "--ring", "rings/xyz.ring", "--poly", "x^2-y", "--assume-domain"],
        vec!["hypersurface", "--ring", "rings/xyz.ring"],
        vec!["no-such-command"],
    ] {
        let out = symsig(&args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn pair_limit_exits_3() {
    let out = symsig(&["--limit-pairs", "1", "ci-freerank", "--ideal", "ideals/minors.ideal"]);
    assert_eq!(code(&out), 3);
    let out = Command::new(env!("CARGO_BIN_EXE_symsig"))
        .args(["dim", "--ideal", "ideals/minors.ideal"])
        .current_dir(data_dir())
        .env("SYMSIG_LIMIT_PAIRS", "1")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
}

#[test]
fn reports_verify_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&str, Vec<&str>); 5] = [
        ("xyzw.json", vec!["hypersurface", "--ring", "rings/xyzw.ring", "--poly", "x*y-z*w", "--assume-domain"]),
        ("double.json", vec!["hypersurface", "--ring", "rings/xyzw.ring", "--poly", "x^2", "--assume-domain", "--max-q", "2"]),
        ("minors.json", vec!["ci-freerank", "--ideal", "ideals/minors.ideal"]),
        ("neg2.json", vec!["quotient", "--group", "groups/neg2.grp", "--max-degree", "50"]),
        ("nf.json", vec!["nf", "--ring", "rings/xyz.ring", "--poly", "x^2-y", "--poly", "x*y-z", "--target", "x^3-z+y"]),
    ];
    let mut paths = Vec::new();
    for (name, args) in &cases {
        let (c, path) = run_to_file(args, dir.path(), name);
        assert_eq!(c, 0, "{name}");
        let (c, v) = verify(&path);
        assert_eq!(c, 0, "{name}: {v}");
        assert_eq!(v["result"]["ok"], true);
        paths.push(path);
    }

    tamper(&paths[0], |v| v["verdict"]["signature"] = Value::from("1/2"));
    tamper(&paths[1], |v| {
        let syz = &mut v["result"]["omega_syzygy_test"]["certificate"]["syzygy"];
        syz[3] = Value::from("x");
    });
    tamper(&paths[2], |v| v["result"]["sym_checks"][1]["relations"] = Value::from(17));
    tamper(&paths[3], |v| v["result"]["molien"]["coefficients"][50] = Value::from("52"));
    tamper(&paths[4], |v| v["result"]["cofactors"][0] = Value::from("x + 1"));
    for path in &paths {
        let (c, v) = verify(path);
        assert_eq!(c, 4, "{}: {v}", path.display());
        assert_eq!(v["result"]["ok"], false);
    }
}

#[test]
fn verify_rejects_other_schema_versions() {
    let dir = tempfile::tempdir().unwrap();
    let (_, path) = run_to_file(&["quotient", "--group", "groups/neg2.grp", "--max-degree", "10"], dir.path(), "r.json");
    tamper(&path, |v| v["schema_version"] = Value::from(99));
    let out = symsig(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn human_output_goes_to_stdout_when_json_is_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = symsig(&["--json", path.to_str().unwrap(), "quotient", "--group", "groups/neg2.grp", "--max-degree", "10"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("verdict: determined (signature 1/2)"), "{text}");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema_version"], 1);
}

const GOLDEN: [(&str, &[&str]); 5] = [
    ("hypersurface_xyzw.json", &["hypersurface", "--ring", "rings/xyzw.ring", "--poly", "x*y-z*w", "--assume-domain"]),
    ("hypersurface_xyz.json", &["hypersurface", "--ring", "rings/xyz.ring", "--poly", "x^2-y*z", "--assume-domain"]),
    ("quotient_neg2.json", &["quotient", "--group", "groups/neg2.grp", "--max-degree", "200"]),
    ("quotient_cyclic3.json", &["quotient", "--group", "groups/cyclic3.grp", "--max-degree", "30"]),
    ("ci_minors.json", &["ci-freerank", "--ideal", "ideals/minors.ideal"]),
];

#[test]
fn golden_reports_are_byte_stable() {
    let update = std::env::var_os("SYMSIG_UPDATE_GOLDEN").is_some();
    for (name, args) in GOLDEN {
        let mut full = vec!["--json", "-"];
        full.extend_from_slice(args);
        let first = canonical(&String::from_utf8(symsig(&full).stdout).unwrap());
        let second = canonical(&String::from_utf8(symsig(&full).stdout).unwrap());
        assert_eq!(first, second, "{name} differs between runs");
        let path = golden_dir().join(name);
        if update {
            std::fs::create_dir_all(golden_dir()).unwrap();
            std::fs::write(&path, &first).unwrap();
            continue;
        }
        let stored = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {name}"));
        assert_eq!(first, stored, "{name} drifted from the golden file");
    }
}
