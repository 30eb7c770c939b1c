use std::process::{Command, Output};

fn hgs(args: &[&str]) -> Output {
    hgs_env(args, &[])
}

fn hgs_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hgs"));
    c.args(args);
    for (k, v) in env {
        c.env(k, v);
    }
    c.output().expect("hgs runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn catalog_list_names_the_labels() {
    let o = hgs(&["catalog", "list"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("M10") && s.contains("PGL(2,q)") && s.contains("AxCp(A,p)"));
    let j = json(&hgs(&["catalog", "list", "--json"]));
    assert_eq!(j["schema_version"], 1);
    assert!(j["labels"].as_array().unwrap().len() >= 10);
}

#[test]
fn info_reports_structure() {
    let j = json(&hgs(&["info", "-G", "S4", "--json"]));
    assert_eq!(j["order"], 24);
    assert_eq!(j["aut_order"], 24);
    assert_eq!(j["solvable"], true);
    assert_eq!(j["center_order"], 1);
}

#[test]
fn formula_and_byott_agree_on_s5() {
    for (n, value) in [("S5", 32), ("AxCp(A5,2)", 20)] {
        for method in ["formula", "byott"] {
            let o = hgs(&["count", "-G", "S5", "-N", n, "--method", method, "--json"]);
            assert_eq!(o.status.code(), Some(0), "{n} {method}");
            let j = json(&o);
            assert_eq!(j["schema_version"], 1);
            assert_eq!(j["rows"][0]["value"], value, "{n} {method}");
        }
    }
    let j = json(&hgs(&["count", "-G", "S5", "-N", "AxCp(A5,2)", "--method", "fpf", "--json"]));
    assert_eq!(j["rows"][0]["value"], 20);
    assert_eq!(j["rows"][0]["method"], "fpf-inhol");
}

#[test]
fn table_output_is_one_row_per_result() {
    let o = hgs(&["count", "-G", "S5", "-N", "S5", "--method", "formula"]);
    let s = stdout(&o);
    let rows: Vec<&str> = s.lines().filter(|l| !l.starts_with("    ")).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("G "));
    assert!(rows[1].contains("formula-self") && rows[1].contains(" 32 "));
}

#[test]
fn brute_names_both_types() {
    let j = json(&hgs(&["count", "-G", "V4", "-N", "C4", "--method", "brute", "--json"]));
    let rows = j["rows"].as_array().unwrap();
    let get = |n: &str| rows.iter().find(|r| r["n"] == n).map(|r| r["value"].clone());
    assert_eq!(get("C4"), Some(3.into()));
    assert_eq!(get("V4"), Some(1.into()));
}

#[test]
fn exit_codes() {
    assert_eq!(hgs(&["count", "-G", "X9", "-N", "C9", "--method", "byott"]).status.code(), Some(2));
    assert_eq!(hgs(&["count", "-G", "S5"]).status.code(), Some(2));
    assert_eq!(hgs(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(hgs(&["count", "-G", "C9", "-N", "C9", "--method", "brute"]).status.code(), Some(3));
    assert_eq!(hgs_env(&["info", "-G", "S5"], &[("HGS_MAX_TABLE", "100")]).status.code(), Some(3));
    // no closed formula for a cyclic N
    assert_eq!(hgs(&["count", "-G", "S5", "-N", "C120", "--method", "formula"]).status.code(), Some(1));
}

#[test]
fn screen_reports_condition_three() {
    let o = hgs(&["screen", "-G", "S5", "-N", "SL(2,5)", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let j = json(&o);
    assert_eq!(j["kind"], "screen");
    assert_eq!(j["verdict"], "excluded");
    assert_eq!(j["cond3"]["status"], "fails");
    assert_eq!(j["certificate"]["certificate"], "lifting-fails");
}

#[test]
fn verify_suite_json() {
    let o = hgs(&["verify", "--suite", "paper-120", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let j = json(&o);
    assert_eq!(j["kind"], "verify");
    assert_eq!(j["passed"], true);
    let items = j["items"].as_array().unwrap();
    assert_eq!(items.len(), 7);
    assert!(items.iter().all(|i| i["status"] == "pass" && i["expected"] == i["observed"]));
}

#[test]
fn checkpoint_resume_gives_the_same_count() {
    let dir = tempfile::tempdir().unwrap();
    let ck = dir.path().join("s4.ckpt");
    let ck = ck.to_str().unwrap();
    let fresh = json(&hgs(&["count", "-G", "S4", "-N", "S4", "--method", "byott", "--checkpoint", ck, "--json"]));
    let resumed = json(&hgs(&["count", "-G", "S4", "-N", "S4", "--method", "byott", "--resume", ck, "--json"]));
    assert_eq!(fresh["rows"][0]["value"], resumed["rows"][0]["value"]);
    assert!(resumed["rows"][0]["checkpoint_id"].is_string());
    // a checkpoint for another pair is refused
    let o = hgs(&["count", "-G", "D4", "-N", "Q8", "--method", "byott", "--resume", ck]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn worker_count_does_not_change_results() {
    let run = |jobs: &str| {
        let j = json(&hgs_env(
            &["count", "-G", "D6", "-N", "S3xC2", "--method", "byott", "--json"],
            &[("HGS_JOBS", jobs)],
        ));
        (j["rows"][0]["value"].clone(), j["rows"][0]["notes"].clone())
    };
    assert_eq!(run("1"), run("4"));
}
