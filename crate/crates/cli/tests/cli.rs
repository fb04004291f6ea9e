use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use kpartite_core::ColoringDocument;
use tempfile::TempDir;

fn kpartite(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kpartite"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn construct(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut all = vec!["construct"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let o = kpartite(&all);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    path
}

fn last_column(o: &Output) -> Vec<String> {
    stdout(o)
        .lines()
        .map(|l| l.rsplit(' ').next().unwrap().to_string())
        .collect()
}

fn load(path: &Path) -> ColoringDocument {
    ColoringDocument::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn theorem3_k4_n2_has_nine_colors() {
    let dir = TempDir::new().unwrap();
    let path = construct(
        dir.path(),
        "a.json",
        &["--k", "4", "--n", "2", "--method", "theorem3"],
    );
    let doc = load(&path);
    assert_eq!(doc.t, 9);
    assert_eq!(doc.colors.len(), 24);
    assert_eq!(kpartite(&["verify", p(&path)]).status.code(), Some(0));
}

#[test]
fn blowup_k4_n1_has_three_colors() {
    let dir = TempDir::new().unwrap();
    let path = construct(
        dir.path(),
        "b.json",
        &["--k", "4", "--n", "1", "--method", "blowup"],
    );
    assert_eq!(load(&path).t, 3);
}

#[test]
fn solver_on_triangle_is_proven_infeasible() {
    let o = kpartite(&[
        "construct",
        "--k",
        "3",
        "--n",
        "1",
        "--method",
        "solver",
        "--t",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("proven infeasible"), "{}", stderr(&o));
    let o = kpartite(&[
        "construct",
        "--k",
        "3",
        "--n",
        "1",
        "--method",
        "solver",
        "--t",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("proven infeasible"));
}

#[test]
fn solver_writes_a_witness() {
    let o = kpartite(&[
        "construct",
        "--k",
        "2",
        "--n",
        "3",
        "--method",
        "solver",
        "--t",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc = ColoringDocument::parse(&stdout(&o)).unwrap();
    assert_eq!(doc.t, 5);
    assert!(doc.verify().unwrap().passed());
}

#[test]
fn verify_detects_mutation_and_truncation() {
    let dir = TempDir::new().unwrap();
    let path = construct(
        dir.path(),
        "a.json",
        &["--k", "4", "--n", "1", "--method", "theorem3"],
    );
    let mut doc = load(&path);
    doc.colors[0] += 1;
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, doc.to_json()).unwrap();
    let o = kpartite(&["verify", p(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));

    let o = kpartite(&["verify", p(&bad), "--format", "structured"]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!report["violations"].as_array().unwrap().is_empty());

    doc.colors.pop();
    let short = dir.path().join("short.json");
    std::fs::write(&short, doc.to_json()).unwrap();
    assert_eq!(kpartite(&["verify", p(&short)]).status.code(), Some(3));
    assert_eq!(
        kpartite(&["verify", "/nonexistent/x.json"]).status.code(),
        Some(3)
    );
}

#[test]
fn structured_verify_report_on_pass() {
    let dir = TempDir::new().unwrap();
    let path = construct(
        dir.path(),
        "a.json",
        &["--k", "2", "--n", "2", "--method", "theorem3"],
    );
    let o = kpartite(&["verify", p(&path), "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["proper"], true);
    assert_eq!(report["interval_at_every_vertex"], true);
    assert_eq!(report["all_colors_used"], true);
    assert_eq!(report["t"], 3);
}

#[test]
fn oracle_spectra() {
    let o = kpartite(&["spectrum", "--k", "2", "--n", "2", "--mode", "oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("{2:F,3:F,4:I}"), "{}", stdout(&o));

    let o = kpartite(&[
        "spectrum", "--k", "3", "--n", "1", "--mode", "oracle", "--t-max", "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("{2:I,3:I}"), "{}", stdout(&o));
}

#[test]
fn construct_spectrum_writes_one_file_per_t() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("spec");
    let o = kpartite(&[
        "spectrum",
        "--k",
        "4",
        "--n",
        "2",
        "--mode",
        "construct",
        "--out-dir",
        p(&out),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    for t in 6..=9 {
        let doc = load(&out.join(format!("t{t}.json")));
        assert_eq!(doc.t, t);
        assert!(doc.verify().unwrap().passed());
    }
    let o = kpartite(&[
        "spectrum",
        "--k",
        "3",
        "--n",
        "2",
        "--mode",
        "construct",
        "--out-dir",
        p(&out),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = kpartite(&[
        "spectrum",
        "--k",
        "3",
        "--n",
        "3",
        "--mode",
        "construct",
        "--out-dir",
        p(&out),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bounds_are_deterministic_and_correct() {
    let args = [
        "bounds",
        "--k-range",
        "2-12",
        "--n-range",
        "1-3",
        "--oracle-max-edges",
        "6",
    ];
    let first = kpartite(&args);
    let second = kpartite(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "k,n,delta,chi_prime,colorable,w,thm3_bound,thm4_bound,best_bound,oracle_W"
    );
    assert_eq!(lines.len(), 1 + 11 * 3);
    assert!(lines.contains(&"8,1,7,7,true,7,10,11,11,"));
    assert!(lines.contains(&"12,2,22,22,true,22,33,37,37,"));
    assert!(lines.contains(&"3,3,6,7,false,,,,,"));
    assert!(lines.contains(&"4,1,3,3,true,3,4,4,4,4"));
    assert!(lines.contains(&"2,2,2,2,true,2,3,3,3,3"));
}

#[test]
fn export_formats() {
    let dir = TempDir::new().unwrap();
    let k2 = dir.path().join("k2.json");
    std::fs::write(
        &k2,
        r#"{"format_version":"1","kind":"kpartite","k":2,"n":1,"t":1,"colors":[1]}"#,
    )
    .unwrap();
    let o = kpartite(&["export", p(&k2), "--format", "edgelist"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 1 2 1 1\n");

    let path = construct(
        dir.path(),
        "a.json",
        &["--k", "4", "--n", "1", "--method", "theorem3"],
    );
    let o = kpartite(&["export", p(&path)]);
    let colors = last_column(&o);
    assert_eq!(colors, ["1", "2", "3", "3", "2", "4"]);

    let o = kpartite(&["export", p(&path), "--format", "matrix"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with('#')).count(), 6);

    std::fs::write(dir.path().join("junk.json"), "{not json").unwrap();
    let o = kpartite(&["export", p(&dir.path().join("junk.json"))]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn lift_of_k2_base_with_n2() {
    let dir = TempDir::new().unwrap();
    let base = dir.path().join("base.json");
    std::fs::write(
        &base,
        r#"{"format_version":"1","kind":"complete","m":2,"t":1,"colors":[1]}"#,
    )
    .unwrap();
    let path = construct(
        dir.path(),
        "lift.json",
        &["--method", "lift", "--base", p(&base), "--n", "2"],
    );
    let o = kpartite(&["export", p(&path)]);
    let colors = last_column(&o);
    assert_eq!(colors, ["1", "2", "2", "3"]);

    let o = kpartite(&["construct", "--method", "lift", "--n", "2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn base_then_lift_then_compress() {
    let dir = TempDir::new().unwrap();
    let base = dir.path().join("k4.json");
    let o = kpartite(&["base", "--m", "4", "--out", p(&base)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(load(&base).t, 4);

    let lift = construct(
        dir.path(),
        "lift.json",
        &["--method", "lift", "--base", p(&base), "--n", "3"],
    );
    assert_eq!(load(&lift).t, 14);

    let small = dir.path().join("small.json");
    let o = kpartite(&["compress", p(&lift), "--steps", "5", "--out", p(&small)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(load(&small).t, 9);
    let o = kpartite(&["compress", p(&small)]);
    assert_eq!(o.status.code(), Some(1));

    assert_eq!(kpartite(&["base", "--m", "5"]).status.code(), Some(3));
}

#[test]
fn usage_and_help() {
    assert_eq!(kpartite(&["--help"]).status.code(), Some(0));
    assert_eq!(kpartite(&["construct", "--help"]).status.code(), Some(0));
    assert_eq!(kpartite(&[]).status.code(), Some(3));
    assert_eq!(kpartite(&["construct", "--k", "4"]).status.code(), Some(3));
    let o = kpartite(&["construct", "--k", "3", "--n", "1", "--method", "theorem3"]);
    assert_eq!(o.status.code(), Some(3));
    let o = kpartite(&["construct", "--k", "4", "--n", "1", "--method", "solver"]);
    assert_eq!(o.status.code(), Some(3));
}
