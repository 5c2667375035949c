use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn isoseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isoseq"))
        .args(args)
        .env_remove("ISOSEQ_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

// diagonals are `a`, sides `b`
const SQUARE: &str = r#"{"n":4,"colors":["a","b"],
  "edges":[[0,1,1],[1,2,1],[2,3,1],[0,3,1],[0,2,0],[1,3,0]]}"#;

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn seq_text_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let sq = write(dir.path(), "sq.json", SQUARE);
    let o = isoseq(&["seq", &sq]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1 2 1 1");
    let o = isoseq(&["seq", &sq, "--json"]);
    assert_eq!(json(&o), serde_json::json!([1, 2, 1, 1]));
}

#[test]
fn seq_reads_points_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let pts = write(
        dir.path(),
        "oct.json",
        r#"{"dim":3,"points":[[1,0,0],[-1,0,0],[0,1,0],[0,-1,0],[0,0,1],[0,0,-1]]}"#,
    );
    assert_eq!(stdout(&isoseq(&["seq", &pts])).trim(), "1 2 2 2 1 1");
    let r2 = 2f64.sqrt();
    let csv = format!("0,1,{r2},1\n1,0,1,{r2}\n{r2},1,0,1\n1,{r2},1,0\n");
    let path = write(dir.path(), "sq.csv", &csv);
    assert_eq!(stdout(&isoseq(&["seq", &path])).trim(), "1 2 1 1");
}

#[test]
fn square_embeds_in_the_plane() {
    let dir = tempfile::tempdir().unwrap();
    let sq = write(dir.path(), "sq.json", SQUARE);
    let o = isoseq(&["embed", &sq, "--values", "a=2,b=1", "--squared", "--coords"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["is_euclidean"], true);
    assert_eq!(v["m_X"], 2);
    // read as plain distances the same numbers give diagonal² = 4 > 2 · side²
    let o = isoseq(&["embed", &sq, "--values", "a=2,b=1", "--tol", "1e-9"]);
    assert_eq!(json(&o)["is_euclidean"], false);
    let o = isoseq(&["embed", &sq, "--values", "a=3,b=1", "--squared"]);
    assert_eq!(json(&o)["is_euclidean"], false);
}

#[test]
fn construct_round_trips_through_seq() {
    let dir = tempfile::tempdir().unwrap();
    let o = isoseq(&["construct", "pentagon"]);
    assert!(o.status.success());
    let p = write(dir.path(), "pent.json", &stdout(&o));
    assert_eq!(stdout(&isoseq(&["seq", &p])).trim(), "1 2 2 1 1");

    let o = isoseq(&[
        "construct",
        "complete_bipartite",
        "--left",
        "3",
        "--right",
        "3",
        "--values",
        "alpha=1,beta=1.5",
    ]);
    let v = json(&o);
    assert_eq!(v["values"]["beta"], 1.5);
    let p = write(dir.path(), "k33.json", &stdout(&o));
    assert_eq!(stdout(&isoseq(&["seq", &p])).trim(), "1 2 2 2 1 1");
}

#[test]
fn output_is_byte_stable() {
    let a = isoseq(&["construct", "antipodal_simplices", "--m", "4", "--points"]);
    let b = isoseq(&["construct", "antipodal_simplices", "--m", "4", "--points"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_reports_and_exit_codes() {
    let o = isoseq(&["verify", "--n", "5", "--colors", "2", "--checks", "thm:25"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["total"], 17);
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["checks"]["thm:25"]["passed"], 5);

    let dir = tempfile::tempdir().unwrap();
    let sq = write(dir.path(), "sq.json", SQUARE);
    let o = isoseq(&["verify", &sq]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o)["theorems"].is_array());
}

#[test]
fn failed_self_check_exits_one() {
    let o = isoseq(&["construct", "two_squares", "--points"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["passed"], false);
}

#[test]
fn errors_exit_two() {
    assert_eq!(
        isoseq(&["seq", "/nonexistent/x.json"]).status.code(),
        Some(2)
    );
    assert_eq!(isoseq(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        isoseq(&["verify", "--n", "5", "--colors", "2", "--checks", "thm:99"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        isoseq(&["enumerate", "--n", "9", "--colors", "3"])
            .status
            .code(),
        Some(2)
    );
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"n":3,"colors":["a"],"edges":[[0,1,0]]}"#,
    );
    assert_eq!(isoseq(&["seq", &bad]).status.code(), Some(2));
}

#[test]
fn jobs_do_not_change_the_report() {
    let run = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_isoseq"))
            .args(["verify", "--n", "6", "--max-colors", "2", "--checks", "all"])
            .env("ISOSEQ_JOBS", jobs)
            .output()
            .unwrap()
    };
    let one = run("1");
    assert!(one.status.success());
    assert_eq!(one.stdout, run("4").stdout);
    assert_eq!(run("0").status.code(), Some(2));
}

#[test]
fn enumerate_lists_configurations() {
    let v = json(&isoseq(&["enumerate", "--n", "4", "--colors", "2"]));
    assert_eq!(v["configurations"].as_array().map(Vec::len), Some(5));
}

#[test]
fn pretty_prints_a_table() {
    let o = isoseq(&["ftable", "--m", "2", "--t", "2", "--pretty"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(
        text.lines()
            .any(|l| l.contains("holds") && l.trim_end().ends_with("true")),
        "{text}"
    );
}
