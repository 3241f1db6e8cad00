use std::process::{Command, Output};

fn aww(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aww")).args(args).output().expect("run aww")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn reports(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

#[test]
fn weyl_suite_reports_group_order() {
    let o = aww(&["verify", "weyl", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0));
    let r = reports(&o);
    assert!(r.iter().all(|x| x["schema"] == 1 && x["status"] == "PASS"));
    let g = r.iter().find(|x| x["check_id"] == "weyl.group").unwrap();
    assert_eq!(g["details"]["order"], 192);
    assert!(String::from_utf8_lossy(&o.stderr).contains("11 PASS"));
}

#[test]
fn reports_are_sorted_and_reproducible() {
    let a = aww(&["verify", "skein", "--no-timing"]);
    let b = aww(&["verify", "skein", "--no-timing"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let ids: Vec<String> = reports(&a).iter().map(|x| x["check_id"].as_str().unwrap().to_string()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn json_file_mirrors_stdout() {
    let path = std::env::temp_dir().join(format!("aww-cli-test-{}.jsonl", std::process::id()));
    let o = aww(&["verify", "yang-baxter", "--no-timing", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), o.stdout);
    let _ = std::fs::remove_file(path);
}

#[test]
fn configuration_errors_exit_2() {
    assert_eq!(aww(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(aww(&["verify", "tensor", "--dims", "2,2"]).status.code(), Some(2));
    assert_eq!(aww(&["verify", "tensor", "--dims", "2,x,2"]).status.code(), Some(2));
    assert_eq!(aww(&["verify", "rkrk", "--mode", "sideways"]).status.code(), Some(2));
    assert_eq!(aww(&["verify", "classical-limit", "--order", "1"]).status.code(), Some(2));
    assert_eq!(aww(&["skein", "twist", "--word", "s9", "--loop", "A12"]).status.code(), Some(2));
}

#[test]
fn failures_exit_1() {
    let o = aww(&["verify", "sdet", "--no-timing"]);
    assert_eq!(o.status.code(), Some(1));
    let r = reports(&o);
    assert!(r.iter().filter(|x| x["status"] == "FAIL").all(|x| x["witness"].is_string()));
}

#[test]
fn undecided_warns_and_strict_fails() {
    let o = aww(&["verify", "daha", "--table", "exchanged"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("UNDECIDED"));
    let o = aww(&["verify", "daha", "--table", "exchanged", "--strict"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn skein_queries() {
    let o = aww(&["skein", "twist", "--word", "s2^-1", "--loop", "A12"]);
    assert_eq!(stdout(&o).trim(), "(1) A13d");
    let o = aww(&["skein", "twist", "--word", "s2", "--loop", "A23"]);
    assert_eq!(stdout(&o).trim(), "(1) A23");
    let o = aww(&["skein", "crossing", "--x", "A13d", "--y", "A24d"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "4");
    let o = aww(&["skein", "product", "--x", "A23", "--y", "A12", "-n", "3"]);
    assert!(stdout(&o).contains("A13d"));
}

#[test]
fn weyl_orbit_lists_its_points() {
    let o = aww(&["weyl", "orbit", "--m", "1,2,3,4"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    let size: usize = lines.next().unwrap().strip_prefix("orbit size ").unwrap().parse().unwrap();
    assert_eq!(size, lines.count());
    assert_eq!(192 % size, 0);
}

#[test]
fn expand_four_point_product() {
    let o = aww(&["expand", "--product", "Q13d*Q24d", "--dims", "2,2,2,2", "--basis", "pbw4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "Q14d*Q23\t1*qh^4"));
    assert!(out.lines().any(|l| l == "Q1234\t-1*qh^-2 - 1*qh^2"));
}

#[test]
fn dump_rules_lists_anchored_rules() {
    let o = aww(&["dump-rules", "--algebra", "aw3"]);
    let out = stdout(&o);
    assert!(out.lines().count() >= 3);
    assert!(out.lines().all(|l| l.starts_with('[')));
}
