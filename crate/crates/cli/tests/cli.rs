//! End-to-end CLI checks: exit codes and JSON shapes per subcommand.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_thetacolor"))
}

fn write(dir: &std::path::Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not json ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn tempdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("thetacolor-cli-{tag}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn oracle_color_roundtrip() {
    let dir = tempdir("oracle");
    let graph = write(
        &dir,
        "g.json",
        r#"{"vertices":["a","b"],"edges":[["a","b"]]}"#,
    );
    let lists = write(&dir, "l.json", r#"{"lists":{"a":[1,2],"b":[3,4]}}"#);
    let out = run(&[
        "oracle",
        "color",
        "--graph",
        graph.to_str().unwrap(),
        "--lists",
        lists.to_str().unwrap(),
        "--b",
        "1",
    ]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["fold"], 1);

    // uncolourable instance exits 1
    let lists = write(&dir, "l2.json", r#"{"lists":{"a":[1],"b":[1]}}"#);
    let out = run(&[
        "oracle",
        "color",
        "--graph",
        graph.to_str().unwrap(),
        "--lists",
        lists.to_str().unwrap(),
        "--b",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn oracle_choosable_modes() {
    let dir = tempdir("choosable");
    let theta = write(&dir, "t.json", r#"{"theta":{"lengths":[2,2,2,2]}}"#);
    let out = run(&[
        "oracle",
        "choosable",
        "--graph",
        theta.to_str().unwrap(),
        "--a",
        "2",
        "--b",
        "1",
        "--mode",
        "exhaustive",
        "--palette",
        "8",
    ]);
    assert_eq!(out.status.code(), Some(1), "witness means exit 1");
    let v = json_of(&out);
    assert_eq!(v["verdict"], "witness");

    let path = write(
        &dir,
        "p.json",
        r#"{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]}"#,
    );
    let out = run(&[
        "oracle",
        "choosable",
        "--graph",
        path.to_str().unwrap(),
        "--a",
        "2",
        "--b",
        "1",
        "--mode",
        "exhaustive",
        "--palette",
        "6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["verdict"], "choosable_over_palette");

    let out = run(&[
        "oracle",
        "choosable",
        "--graph",
        path.to_str().unwrap(),
        "--a",
        "2",
        "--b",
        "1",
        "--mode",
        "random",
        "--samples",
        "50",
        "--seed",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["verdict"], "no_counterexample_found");
}

#[test]
fn path_commands() {
    let dir = tempdir("path");
    let lists = write(&dir, "l.json", r#"{"lists":[[1,2,5],[2,3,4],[2,3,5]]}"#);
    let out = run(&["path", "slp", "--lists", lists.to_str().unwrap()]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["slp"], 7);
    assert_eq!(v["lambda"], serde_json::json!([2]));
    assert_eq!(v["hat_head"], serde_json::json!([1, 5]));
    assert_eq!(v["hat_tail"], serde_json::json!([5]));

    let out = run(&[
        "path",
        "damage",
        "--lists",
        lists.to_str().unwrap(),
        "--S",
        "1",
        "--T",
        "5",
    ]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["damage"], 2);
    assert_eq!(v["reduced_slp"], 5);

    let out = run(&[
        "path",
        "color",
        "--lists",
        lists.to_str().unwrap(),
        "--m",
        "1",
    ]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["found"], true);

    // named lists are rejected for path commands: exit 2
    let named = write(&dir, "named.json", r#"{"lists":{"u":[1,2]}}"#);
    let out = run(&["path", "slp", "--lists", named.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cycle_command_matches_trace() {
    let dir = tempdir("cycle");
    let lists = write(
        &dir,
        "l.json",
        r#"{"lists":[[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5],[1,2,3,4,5]]}"#,
    );
    let out = run(&[
        "cycle",
        "color",
        "--k",
        "2",
        "--a",
        "5",
        "--b",
        "2",
        "--lists",
        lists.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["assignment"]["v0"], serde_json::json!([3, 5]));
    assert_eq!(v["assignment"]["v3"], serde_json::json!([1, 3]));
}

#[test]
fn pairs_and_theta_commands() {
    let dir = tempdir("theta");
    let theta = write(&dir, "t.json", r#"{"theta":{"lengths":[4,4,4]}}"#);
    let mut lists = String::from(r#"{"lists":{"u":[0,1,2],"v":[0,1,2]"#);
    for i in 0..3 {
        for j in 1..=3 {
            lists.push_str(&format!(r#","p{i}_{j}":[0,1,2]"#));
        }
    }
    lists.push_str("}}");
    let lists = write(&dir, "l.json", &lists);

    let out = run(&[
        "pairs",
        "classify",
        "--theta",
        theta.to_str().unwrap(),
        "--lists",
        lists.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["couples"], serde_json::json!([[0, 0], [1, 1], [2, 2]]));

    let out = run(&[
        "pairs",
        "find",
        "--theta",
        theta.to_str().unwrap(),
        "--lists",
        lists.to_str().unwrap(),
        "--m",
        "1",
    ]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["found"], true);

    let coloring = dir.join("c.json");
    let out = run(&[
        "theta",
        "solve",
        "--theta",
        theta.to_str().unwrap(),
        "--lists",
        lists.to_str().unwrap(),
        "--m",
        "1",
        "--out",
        coloring.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let out = run(&[
        "theta",
        "verify",
        "--theta",
        theta.to_str().unwrap(),
        "--lists",
        lists.to_str().unwrap(),
        "--m",
        "1",
        "--coloring",
        coloring.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["valid"], true);

    // tamper with the colouring: verification fails with exit 1
    let mut phi: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&coloring).unwrap()).unwrap();
    phi["assignment"]["u"] = serde_json::json!([9]);
    fs::write(&coloring, serde_json::to_string(&phi).unwrap()).unwrap();
    let out = run(&[
        "theta",
        "verify",
        "--theta",
        theta.to_str().unwrap(),
        "--lists",
        lists.to_str().unwrap(),
        "--m",
        "1",
        "--coloring",
        coloring.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn lemma_sweep_and_classify() {
    let out = run(&["lemma", "sweep", "--lmax", "8", "--section5"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["violations"], serde_json::json!([]));
    assert!(v["section_identities"]["adjudications"][0]
        .as_str()
        .unwrap()
        .contains("binom(ell,k)"));

    let dir = tempdir("classify");
    let theta = write(&dir, "t.json", r#"{"theta":{"lengths":[4,4,4]}}"#);
    let out = run(&["classify", "--graph", theta.to_str().unwrap()]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["two_choosable"], false);
    assert_eq!(v["three_choice_critical"], true);
    assert_eq!(v["family"], "ThetaEven");
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempdir("bad");
    let bad = write(&dir, "bad.json", r#"{"nonsense": true}"#);
    let out = run(&[
        "oracle",
        "color",
        "--graph",
        bad.to_str().unwrap(),
        "--lists",
        bad.to_str().unwrap(),
        "--b",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // a plain graph file is not a theta description
    let graph = write(
        &dir,
        "g.json",
        r#"{"vertices":["a","b"],"edges":[["a","b"]]}"#,
    );
    let lists = write(&dir, "l.json", r#"{"lists":{"a":[1],"b":[2]}}"#);
    let out = run(&[
        "theta",
        "solve",
        "--theta",
        graph.to_str().unwrap(),
        "--lists",
        lists.to_str().unwrap(),
        "--m",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exhausted_budget_exits_3() {
    let dir = tempdir("budget");
    let theta = write(&dir, "t.json", r#"{"theta":{"lengths":[4,4,4]}}"#);
    let mut lists = String::from(r#"{"lists":{"u":[0,1,2,3,4],"v":[0,1,2,3,4]"#);
    for i in 0..3 {
        for j in 1..=3 {
            lists.push_str(&format!(r#","p{i}_{j}":[0,1,2,3,4]"#));
        }
    }
    lists.push_str("}}");
    let lists = write(&dir, "l.json", &lists);
    let out = run(&[
        "oracle",
        "color",
        "--graph",
        theta.to_str().unwrap(),
        "--lists",
        lists.to_str().unwrap(),
        "--b",
        "2",
        "--budget",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn suite_quick_runs_and_reports() {
    let dir = tempdir("suite");
    let report_path = dir.join("report.json");
    let out = run(&[
        "suite",
        "--quick",
        "--seed",
        "7",
        "--out",
        report_path.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["all_passed"], true);
    assert_eq!(report["criteria"].as_array().unwrap().len(), 11);

    // identical config and seed produce byte-identical reports
    let second = dir.join("report2.json");
    let out = run(&[
        "suite",
        "--quick",
        "--seed",
        "7",
        "--out",
        second.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(fs::read(&report_path).unwrap(), fs::read(&second).unwrap());
}
