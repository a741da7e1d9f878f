use std::io::Write;
use std::process::{Command, Output, Stdio};

use antikekule::ReportDocument;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_antikekule"))
        .args(args)
        .env_remove("ANTIKEKULE_JOBS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_then_convert_pipeline() {
    let out = run(&["gen", "t36", "2"], "");
    assert!(out.status.success());
    let g6 = stdout(&out);
    let out = run(&["convert", "-", "--to", "edgelist"], &g6);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("12 18\n"), "{text}");
    let out = run(&["convert", "-", "--to", "graph6"], &text);
    assert_eq!(stdout(&out), g6);
}

#[test]
fn ak_of_k4_lists_the_triangles() {
    let out = run(&["ak", "--g6", "C~", "--all-sets"], "");
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("ak = 3\nsmallest sets: 4\n"), "{text}");
    assert!(text.contains("  [0,1] [0,2] [1,2]\n"));
    assert!(text.contains("  [1,2] [1,3] [2,3]\n"));
}

#[test]
fn json_report_is_parseable() {
    let out = run(&["ak", "--family", "cube", "--json", "--no-prune"], "");
    assert!(out.status.success());
    let doc = ReportDocument::from_json(&stdout(&out)).unwrap();
    assert_eq!((doc.n, doc.m, doc.ak), (8, 12, 4));
    assert!(doc.bipartite && doc.cubic && !doc.pruning_used);
    assert_eq!(doc.bridge_count, 0);
}

#[test]
fn jobs_from_environment() {
    let plain = run(&["ak", "--family", "petersen", "--json", "--no-timing"], "");
    let mut threaded = Command::new(env!("CARGO_BIN_EXE_antikekule"))
        .args(["ak", "--family", "petersen", "--json", "--no-timing"])
        .env("ANTIKEKULE_JOBS", "3")
        .output()
        .unwrap();
    assert!(threaded.status.success());
    threaded.stderr.clear();
    assert_eq!(plain.stdout, threaded.stdout);
}

#[test]
fn match_prints_certificates() {
    let out = run(&["match", "--family", "no_pm_gadget"], "");
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("no perfect matching"));
    assert!(text.contains("tutte witness: U = [0]"));

    let out = run(&["match", "-"], "4 2\n0 1\n2 3\n");
    assert!(stdout(&out).contains("perfect matching"));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str], stdin: &str| run(args, stdin).status.code().unwrap();
    assert_eq!(code(&["ak", "-"], "4 2\n0 1\n2 3\n"), 2);
    assert_eq!(code(&["ak", "--g6", "C~~"], ""), 3);
    assert_eq!(code(&["ak", "-"], "3 2\n0 1\n1 2\n"), 4);
    assert_eq!(code(&["ak", "-", "--no-prune"], "3 2\n0 1\n1 2\n"), 0);
    assert_eq!(
        code(
            &["ak", "--family", "prism:3", "--no-prune", "--kmax", "2"],
            ""
        ),
        1
    );
    assert_eq!(code(&["gen", "nope"], ""), 3);
    assert_eq!(code(&["ak"], ""), 2);
    assert_eq!(code(&["ak", "--g6", "C~", "--family", "k4"], ""), 2);
}

#[test]
fn verify_reports_a_table() {
    let out = run(&["verify", "--suite", "fullerene36", "--max-n", "12"], "");
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("t36:1"));
    assert!(text.contains("suite fullerene36: 2/2 passed"));
}

#[test]
fn not_cubic_hint() {
    let out = run(&["ak", "-"], "3 2\n0 1\n1 2\n");
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--no-prune"), "{err}");
}
