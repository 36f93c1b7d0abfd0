use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn hyperdisc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperdisc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Feeds a labeling report back through `validate`.
fn assert_validates(dir: &Path, hg: &Path, report: &str) {
    let lbl = write(dir, "out.lbl", report);
    let out = hyperdisc(&["validate", s(hg), "--labels", s(&lbl)]);
    assert_eq!(out.status.code(), Some(0), "{report}\n{}", stdout(&out));
    assert!(stdout(&out).starts_with("valid\n"));
}

#[test]
fn path_family_weight() {
    let out = hyperdisc(&["family", "path", "--m", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\ntotal 5\n"));
}

#[test]
fn census_three_reports_gap() {
    let out = hyperdisc(&["census", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("n=3 instances=96\n"));
    assert!(text.contains("w=5 non-attainable\n"));
}

#[test]
fn census_is_independent_of_workers() {
    let one = hyperdisc(&["census", "--n", "3", "--workers", "1"]);
    let three = hyperdisc(&["census", "--n", "3", "--workers", "3"]);
    assert_eq!(one.stdout, three.stdout);
}

#[test]
fn solve_disjoint_singletons() {
    let dir = TempDir::new().unwrap();
    let hg = write(dir.path(), "d.hg", "a\nb\nc\n");
    let out = hyperdisc(&["solve", s(&hg)]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\ntotal 6\n"));
    assert_validates(dir.path(), &hg, &stdout(&out));
}

#[test]
fn every_labeling_output_validates() {
    let dir = TempDir::new().unwrap();
    let hg = write(dir.path(), "h.hg", "# sample\na b c\nb d\nc d e\ne\na e\n");
    for args in [
        vec!["construct"],
        vec!["construct", "--hitting-heuristic"],
        vec!["construct", "--order", "e,d,c,b,a", "--init", "a=2,d=1"],
        vec!["solve"],
    ] {
        let mut full = args.clone();
        full.push(s(&hg));
        let out = hyperdisc(&full);
        assert!(out.status.success(), "{args:?}");
        assert_validates(dir.path(), &hg, &stdout(&out));
    }

    let families: [&[&str]; 7] = [
        &["path", "--m", "7"],
        &["cycle", "--m", "6"],
        &["powerset", "--m", "3"],
        &["star", "--m", "4"],
        &["nested", "--m", "4"],
        &["disjoint", "--m", "3"],
        &["rpartite", "--sizes", "3,2"],
    ];
    for args in families {
        let fam_hg = dir.path().join("fam.hg");
        let mut full = vec!["family"];
        full.extend_from_slice(args);
        full.extend(["--hg", s(&fam_hg)]);
        let out = hyperdisc(&full);
        assert!(out.status.success(), "{args:?}");
        assert_validates(dir.path(), &fam_hg, &stdout(&out));
    }

    let uniform = write(dir.path(), "k.hg", "a b\na c\nb c\nc d\n");
    let out = hyperdisc(&["sidon", "label", s(&uniform), "--r", "2"]);
    assert!(out.status.success());
    assert_validates(dir.path(), &uniform, &stdout(&out));
}

#[test]
fn invalid_labeling_exits_one() {
    let dir = TempDir::new().unwrap();
    let hg = write(dir.path(), "h.hg", "a\nb\n");
    let lbl = write(dir.path(), "bad.lbl", "v a 1\nv b 1\n");
    let out = hyperdisc(&["validate", s(&hg), "--labels", s(&lbl)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "violation: edges 1 and 2 both weigh 1\n");
}

#[test]
fn errors_and_usage() {
    let dir = TempDir::new().unwrap();
    let dup = write(dir.path(), "dup.hg", "a b\nb a\n");
    let out = hyperdisc(&["solve", s(&dup)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    assert_eq!(hyperdisc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(hyperdisc(&["family", "path"]).status.code(), Some(2));
    assert_eq!(hyperdisc(&["census"]).status.code(), Some(2));
    assert_eq!(hyperdisc(&["census", "--n", "9"]).status.code(), Some(1));
}

#[test]
fn node_cap_is_reported() {
    let out = hyperdisc(&["family", "cycle", "--m", "8"]);
    let dir = TempDir::new().unwrap();
    let hg = dir.path().join("c.hg");
    let text: String = stdout(&out)
        .lines()
        .filter_map(|l| l.strip_prefix("# edge "))
        .map(|l| format!("{l}\n"))
        .collect();
    fs::write(&hg, text).unwrap();
    let out = hyperdisc(&["solve", s(&hg), "--node-cap", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("node cap"));
}

#[test]
fn sidon_sets() {
    let out = hyperdisc(&["sidon", "--h", "3", "--count", "4"]);
    assert_eq!(stdout(&out), "h=3 elements=1,2,5,14\nvalid\n");
}

#[test]
fn geometric_placement() {
    let dir = TempDir::new().unwrap();
    let rg = write(
        dir.path(),
        "nested.rg",
        "# three nested squares\nrect -1 -1 1 1\nrect -2 -2 2 2\nrect -3 -3 3 3\n",
    );
    let out = hyperdisc(&["geom", s(&rg)]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.ends_with("total 3\n"), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("region")).count(), 3);

    let rg = write(dir.path(), "iv.rg", "interval 0 1/2\ninterval 0.25 1\n");
    let out = hyperdisc(&["geom", s(&rg)]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("point 0.375 cell="), "{}", stdout(&out));
}

#[test]
fn output_is_deterministic() {
    let a = hyperdisc(&["census", "--n", "2", "--dedup"]);
    let b = hyperdisc(&["census", "--n", "2", "--dedup"]);
    assert_eq!(a.stdout, b.stdout);
}
