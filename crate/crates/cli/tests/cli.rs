use std::path::Path;
use std::process::{Command, Output};

use hfl_core::constructions::{prop2_construction, ConstructionDescriptor};
use hfl_core::{q, WeightedCompleteGraph};

fn hfl(dir: &Path, args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hfl"));
    cmd.args(args)
        .current_dir(dir)
        .env_remove("HFL_SOLVER_CAP")
        .env_remove("HFL_RETRY_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn generate_round_trips_the_construction() {
    let dir = tempfile::tempdir().unwrap();
    let o = hfl(
        dir.path(),
        &[
            "generate", "--kind", "prop2", "--r", "3", "--t", "2/3", "--n", "9", "--out", "g.json",
        ],
        &[],
    );
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(dir.path().join("g.json")).unwrap();
    let parsed = WeightedCompleteGraph::from_json(&text).unwrap();
    let (expected, descriptor) = prop2_construction(3, &q(2, 3), 9).unwrap();
    assert_eq!(parsed, expected);
    let d: ConstructionDescriptor = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("g.json.descriptor.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(d, descriptor);
    assert_eq!(d.build().unwrap(), parsed);
}

#[test]
fn strict_solve_of_scaled_construction_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    hfl(
        dir.path(),
        &[
            "generate", "--kind", "prop2", "--r", "3", "--t", "2/3", "--n", "9", "--out", "g.json",
        ],
        &[],
    );
    let o = hfl(
        dir.path(),
        &[
            "solve", "--graph", "g.json", "--r", "3", "--t", "2/3", "--strict", "--scale",
            "999/1000",
        ],
        &[],
    );
    assert_eq!(code(&o), 1);
    let cert: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(cert["outcome"], "exhausted");
    for method in ["backtrack", "hypergraph", "oracle"] {
        let o = hfl(
            dir.path(),
            &[
                "solve", "--graph", "g.json", "--r", "3", "--t", "2/3", "--method", method,
            ],
            &[],
        );
        assert_eq!(code(&o), 0, "{method}");
    }
}

#[test]
fn decimals_and_bad_input_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let o = hfl(
        dir.path(),
        &[
            "generate", "--kind", "prop2", "--r", "3", "--t", "0.5", "--n", "9",
        ],
        &[],
    );
    assert_eq!(code(&o), 2);
    let o = hfl(
        dir.path(),
        &[
            "generate", "--kind", "prop2", "--r", "4", "--t", "1/2", "--n", "9",
        ],
        &[],
    );
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("does not divide"));
    let o = hfl(dir.path(), &["solve", "--bogus"], &[]);
    assert_eq!(code(&o), 2);
    std::fs::write(
        dir.path().join("bad.json"),
        "{\"n\": 3,\n \"edges\": [[0, 1, \"1/2\"], [0, 1]]}",
    )
    .unwrap();
    let o = hfl(
        dir.path(),
        &["solve", "--graph", "bad.json", "--r", "3", "--t", "1/2"],
        &[],
    );
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn solver_cap_from_environment_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    hfl(
        dir.path(),
        &[
            "generate", "--kind", "prop2", "--r", "3", "--t", "1/2", "--n", "12", "--out", "g.json",
        ],
        &[],
    );
    let args = ["solve", "--graph", "g.json", "--r", "3", "--t", "1/2"];
    assert_eq!(code(&hfl(dir.path(), &args, &[("HFL_SOLVER_CAP", "9")])), 3);
    assert_eq!(code(&hfl(dir.path(), &args, &[])), 0);
}

#[test]
fn retry_budget_from_environment_bounds_scheme2() {
    let dir = tempfile::tempdir().unwrap();
    hfl(
        dir.path(),
        &[
            "generate", "--kind", "prop2", "--r", "3", "--t", "1/2", "--n", "9", "--out", "g.json",
        ],
        &[],
    );
    let o = hfl(
        dir.path(),
        &["scheme2", "--graph", "g.json", "--r", "3", "--t", "1/2"],
        &[("HFL_RETRY_BUDGET", "2")],
    );
    assert_eq!(code(&o), 3);
    let out: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(out["stats"]["attempts"], 2);
}

#[test]
fn scan_writes_one_row_per_cell() {
    let dir = tempfile::tempdir().unwrap();
    let o = hfl(
        dir.path(),
        &["scan", "--r", "2,3", "--t", "1/3,1/2,2/3", "--n", "12"],
        &[],
    );
    assert_eq!(code(&o), 0);
    let csv = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines[0],
        "r,t,n,prop2_value,adversarial_value,conjecture,upper_bound,certified"
    );
    assert_eq!(lines.len(), 7);
    assert!(lines[6].starts_with("3,2/3,12,"));
    assert!(lines[6].ends_with(",7/9,5/6,true"));
}

#[test]
fn estimate_record_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let o = hfl(
        dir.path(),
        &[
            "estimate",
            "--r",
            "2",
            "--t",
            "1/2",
            "--n",
            "6",
            "--budget",
            "100",
            "--weighting-out",
            "w.json",
            "--out",
            "rec.json",
        ],
        &[],
    );
    assert_eq!(code(&o), 0);
    let o = hfl(dir.path(), &["verify", "record", "rec.json"], &[]);
    assert_eq!(code(&o), 0);
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "verified\n");
    // Raising one weight to 1 can only break the record.
    let mut g = WeightedCompleteGraph::from_json(
        &std::fs::read_to_string(dir.path().join("w.json")).unwrap(),
    )
    .unwrap();
    for (i, j) in [(0, 1), (2, 3), (4, 5)] {
        g = g.with_weight(i, j, q(1, 1)).unwrap();
    }
    std::fs::write(dir.path().join("w2.json"), g.to_json()).unwrap();
    let o = hfl(
        dir.path(),
        &["verify", "record", "rec.json", "--weighting", "w2.json"],
        &[],
    );
    assert_eq!(code(&o), 1);
}

#[test]
fn zero_threshold_estimate_is_degenerate() {
    let dir = tempfile::tempdir().unwrap();
    let o = hfl(
        dir.path(),
        &["estimate", "--r", "3", "--t", "0", "--n", "9"],
        &[],
    );
    assert_eq!(code(&o), 1);
    let rec: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rec["degenerate"], true);
    assert_eq!(rec["certified"], false);
}

#[test]
fn localsearch_and_sampling_succeed_on_easy_inputs() {
    let dir = tempfile::tempdir().unwrap();
    hfl(
        dir.path(),
        &[
            "generate", "--kind", "prop2", "--r", "3", "--t", "1/2", "--n", "9", "--out", "g.json",
        ],
        &[],
    );
    let o = hfl(
        dir.path(),
        &["localsearch", "--graph", "g.json", "--r", "3", "--t", "1/2"],
        &[],
    );
    assert_eq!(code(&o), 0);
    let out: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(out["size"], 3);
    let o = hfl(
        dir.path(),
        &[
            "verify", "theorem3", "--r", "3", "--t", "0", "--n", "9", "--trials", "3",
        ],
        &[],
    );
    assert_eq!(code(&o), 0);
}

#[test]
fn help_lists_every_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let o = hfl(dir.path(), &["--help"], &[]);
    assert_eq!(code(&o), 0);
    let help = String::from_utf8(o.stdout).unwrap();
    for sub in [
        "generate",
        "solve",
        "scheme2",
        "localsearch",
        "estimate",
        "scan",
        "verify",
    ] {
        assert!(help.contains(sub), "{sub}");
    }
}
