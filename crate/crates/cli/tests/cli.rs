use std::process::{Command, Output};

fn torcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torcert"))
        .args(args)
        .env_remove("TORCERT_MAX_S")
        .env_remove("TORCERT_MAX_T")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn certify_writes_an_empty_certificate() {
    let o = torcert(&["certify", "--s", "1", "--t", "3", "--delta", "6", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["survivors"], 0);
    assert_eq!(v["params"]["s"], 1);
}

#[test]
fn certify_prints_a_table() {
    let o = torcert(&["certify", "--s", "1", "--t", "3", "--delta", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("negative-size-bound"), "{out}");
    assert!(out.contains("survivors: 0"), "{out}");
}

#[test]
fn oversized_case_hits_the_scale_limit() {
    let o = torcert(&["certify", "--s", "9", "--t", "9", "--delta", "6"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(torcert(&["certify", "--bogus"]).status.code(), Some(64));
    assert_eq!(torcert(&["lemma", "no-such-check"]).status.code(), Some(64));
    assert_eq!(torcert(&["perm", "--n", "4", "--alpha", "1", "--epsilon", "2"]).status.code(), Some(64));
    let o = Command::new(env!("CARGO_BIN_EXE_torcert"))
        .args(["certify", "--s", "1", "--t", "3", "--delta", "6"])
        .env("TORCERT_MAX_S", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn help_exits_zero() {
    assert_eq!(torcert(&["--help"]).status.code(), Some(0));
}

#[test]
fn klein_reports_the_distance_two_slope() {
    let o = torcert(&["klein", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("q = 1"), "{out}");
    assert!(out.contains("distance 2"), "{out}");
    let none = stdout(&torcert(&["klein", "--m", "3"]));
    assert!(none.contains("none"), "{none}");
}

#[test]
fn perm_lists_orbits() {
    let o = torcert(&["perm", "--n", "6", "--alpha", "3", "--epsilon", "-1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("orbit: [1, 4]"), "{out}");
    assert!(out.contains("orbits: 3 (closed form 3)"), "{out}");
}

#[test]
fn lemma_checks_graph_files() {
    let torus = data("three_loops.graph");
    let o = torcert(&["lemma", "torus", "--input", &torus]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = torcert(&["lemma", "torus", "--input", &data("planar_loop.graph")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violated"));
    let o = torcert(&["lemma", "reduced-torus-degrees", "--input", &torus]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn lemma_size_forcing_needs_t() {
    assert_eq!(torcert(&["lemma", "size-forcing"]).status.code(), Some(64));
    assert_eq!(torcert(&["lemma", "size-forcing", "--t", "4"]).status.code(), Some(0));
}

#[test]
fn verify_json_is_independent_of_workers() {
    let run = |w: &str| {
        let o = torcert(&["verify-all", "--only", "2,3,4,7", "--workers", w, "--json", "-"]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        o.stdout
    };
    let one = run("1");
    assert_eq!(one, run("8"));
    let v: serde_json::Value = serde_json::from_slice(&one).unwrap();
    assert_eq!(v["criteria"].as_array().unwrap().len(), 4);
}

#[test]
fn injected_fault_is_detected() {
    let o = torcert(&["verify-all", "--only", "1", "--inject-fault", "negative-size-bound"]);
    assert_ne!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[FAIL]"), "{}", stdout(&o));
}
