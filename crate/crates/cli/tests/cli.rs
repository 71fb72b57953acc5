use std::io::Write;
use std::process::{Command, Output};

fn starcrit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_starcrit"))
        .args(args)
        .output()
        .expect("run starcrit")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn chis_horn_6() {
    let o = starcrit(&["chis", "--family", "horn", "--n", "6", "--self-check"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("5"));
    assert!(lines.next().unwrap().starts_with("coloring: 0:"));
}

#[test]
fn chis_json_has_schema() {
    let o = starcrit(&["chis", "--graph6", "Ch", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "chis");
    assert_eq!(v["chi_s"], 3);
    assert_eq!(v["coloring"].as_array().unwrap().len(), 4);
}

#[test]
fn chi_of_c5() {
    let o = starcrit(&["chi", "--family", "cycle", "--n", "5"]);
    assert_eq!(stdout(&o).lines().next(), Some("3"));
}

#[test]
fn verify_three_critical() {
    let o = starcrit(&["verify", "--claim", "3critical", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 counterexamples / 142 connected graphs of order ≤ 6 examined"));
}

#[test]
fn verify_failing_claim_exits_one() {
    let o = starcrit(&["verify", "--claim", "lem-free-n2", "--n", "6", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["holds"], false);
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_unknown_claim_is_usage_error() {
    let o = starcrit(&["verify", "--claim", "nope", "--n", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_external_input() {
    let dir = std::env::temp_dir().join(format!("starcrit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graphs.g6");
    let enumerated = starcrit(&["enumerate", "--n", "5", "--connected"]);
    std::fs::File::create(&path)
        .unwrap()
        .write_all(&enumerated.stdout)
        .unwrap();
    let o = starcrit(&[
        "verify",
        "--claim",
        "lem-free",
        "--input",
        path.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["examined"], 21);
    assert_eq!(v["applicable"], 20);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn detect_2k2_on_c6() {
    let o = starcrit(&[
        "detect",
        "--pattern",
        "2k2",
        "--graph6",
        "EhEG",
        "--self-check",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2K2: (0,1),(3,4)\n");
    let o = starcrit(&[
        "detect",
        "--pattern",
        "2k2",
        "--graph6",
        "EhEG",
        "--one-based",
    ]);
    assert_eq!(stdout(&o), "2K2: (1,2),(4,5)\n");
}

#[test]
fn detect_reports_free() {
    let o = starcrit(&["detect", "--pattern", "i3", "--family", "horn", "--n", "6"]);
    assert_eq!(stdout(&o), "I3: free\n");
}

#[test]
fn malformed_graph6_reports_offset() {
    let o = starcrit(&["chis", "--graph6", "C~x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("byte offset 2"));
    let o = starcrit(&["chis", "--graph6", "D\x01"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("byte offset 1"));
}

#[test]
fn unknown_family_is_usage_error() {
    let o = starcrit(&["gen", "--family", "wheel", "--n", "6"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn missing_graph_is_usage_error() {
    let o = starcrit(&["chis"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn critical_exit_codes() {
    let o = starcrit(&["critical", "--family", "horn", "--n", "7", "--self-check"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("6-critical: yes"));
    let o = starcrit(&["critical", "--family", "cycle", "--n", "6"]);
    assert_eq!(o.status.code(), Some(1));
    let o = starcrit(&["critical", "--family", "path", "--n", "4", "--k", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("premise fails"));
    let o = starcrit(&["critical", "--family", "independent", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_labels() {
    let o = starcrit(&["classify", "--family", "path", "--n", "4"]);
    assert_eq!(stdout(&o).lines().next(), Some("3-critical"));
    let o = starcrit(&["classify", "--family", "horn", "--n", "6", "--self-check"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("(n-1)-critical"));
    let o = starcrit(&["classify", "--family", "double-horn", "--n", "7", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["label"], "(n-2)-critical");
}

#[test]
fn classify_c6_dumps_disagreement() {
    let o = starcrit(&["classify", "--graph6", "EhEG", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["label"], "not-critical");
    assert_eq!(v["disagreement"]["direct_holds"], false);
    assert_eq!(v["report"]["chi_s"], 3);
}

#[test]
fn check_coloring() {
    let o = starcrit(&["check-coloring", "--graph6", "Ch", "--coloring", "1 2 1 3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = starcrit(&[
        "check-coloring",
        "--family",
        "path",
        "--n",
        "4",
        "--coloring",
        "1,2,1,2",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("bicolored P4: 0-1-2-3 colored 1/2"));
    let o = starcrit(&[
        "check-coloring",
        "--family",
        "path",
        "--n",
        "4",
        "--coloring",
        "1 2 1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = starcrit(&[
        "check-coloring",
        "--family",
        "path",
        "--n",
        "4",
        "--coloring",
        "1 0 1 2",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_and_convert_round_trip() {
    let o = starcrit(&["gen", "--family", "cycle", "--n", "6"]);
    assert_eq!(stdout(&o), "EhEG\n");
    let o = starcrit(&["convert", "--graph6", "EhEG", "--to", "edgelist"]);
    let text = stdout(&o);
    assert!(text.starts_with("6 6\n"));
    let dir = std::env::temp_dir().join(format!("starcrit-conv-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c6.txt");
    std::fs::write(&path, text).unwrap();
    let o = starcrit(&["convert", "--edgelist", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "EhEG\n");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn enumerate_counts() {
    let o = starcrit(&["enumerate", "--n", "6", "--connected", "--format", "graph6"]);
    assert_eq!(stdout(&o).lines().count(), 112);
    let o = starcrit(&["enumerate", "--n", "5", "--count"]);
    assert_eq!(stdout(&o), "34\n");
    let o = starcrit(&["enumerate", "--n", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn audit_kind_exit_code() {
    let o = starcrit(&["audit", "--family", "horn", "--n", "6", "--kind", "n1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = starcrit(&["audit", "--family", "horn", "--n", "6", "--kind", "n2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = starcrit(&["audit", "--family", "double-horn", "--n", "7", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["bounds"][1]["checks"][0]["bound"], "14/3");
    assert_eq!(v["complement"]["k4_free"], true);
}

#[test]
fn output_is_independent_of_jobs() {
    let one = starcrit(&[
        "--jobs", "1", "verify", "--claim", "all", "--n", "6", "--json",
    ]);
    let four = starcrit(&[
        "--jobs", "4", "verify", "--claim", "all", "--n", "6", "--json",
    ]);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.status.code(), four.status.code());
    let a = starcrit(&[
        "--jobs",
        "1",
        "classify",
        "--family",
        "double-horn",
        "--n",
        "8",
    ]);
    let b = starcrit(&[
        "--jobs",
        "3",
        "classify",
        "--family",
        "double-horn",
        "--n",
        "8",
    ]);
    assert_eq!(a.stdout, b.stdout);
}
