use std::process::{Command, Output};

fn hurwitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz")).args(args).env_remove("HURWITZ_TRUNC_N").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn count_examples() {
    let o = hurwitz(&["count", "--alpha", "3", "--genus", "1", "--method", "closed"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "alpha,g,r,c,mu\n(3),1,4,27,9\n");

    let o = hurwitz(&["count", "--alpha", "1", "--genus", "1"]);
    assert_eq!(stdout(&o), "alpha,g,r,c,mu\n(1),1,2,0,0\n");

    let o = hurwitz(&["count", "--alpha", "2,1", "--genus", "0", "--method", "oracle"]);
    assert_eq!(stdout(&o), "alpha,g,r,c,mu\n\"(2,1)\",0,3,8,4\n");

    let o = hurwitz(&["count", "--alpha", "2,1", "--genus", "1", "--method", "cutjoin", "--format", "json"]);
    assert_eq!(
        stdout(&o),
        "{\"alpha\":[2,1],\"genus\":1,\"r\":5,\"c\":\"80\",\"mu\":\"40\",\"method\":\"cutjoin\"}\n"
    );
}

#[test]
fn count_refusals_and_parse_errors() {
    let o = hurwitz(&["count", "--alpha", "8", "--method", "oracle"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("error"));
    assert!(stdout(&o).is_empty());

    let o = hurwitz(&["count", "--alpha", "3,,1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = hurwitz(&["count"]);
    assert_eq!(o.status.code(), Some(2));

    let o = hurwitz(&["count", "--alpha", "1,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("reordered to (3,1)"));
}

#[test]
fn tables() {
    let o = hurwitz(&["table", "--n", "1"]);
    assert_eq!(stdout(&o), "alpha,c0,mu0,c1,mu1\n(1),1,1,0,0\n");

    let o = hurwitz(&["table", "--n", "2"]);
    assert_eq!(stdout(&o), "alpha,c0,mu0,c1,mu1\n(2),1,1/2,1,1/2\n\"(1,1)\",1,1/2,1,1/2\n");

    let cj = hurwitz(&["table", "--n", "6", "--method", "cutjoin"]);
    let cl = hurwitz(&["table", "--n", "6", "--method", "closed"]);
    assert_eq!(cj.status.code(), Some(0));
    assert_eq!(stdout(&cj), stdout(&cl));
    assert_eq!(stdout(&cj).lines().count(), 1 + 11);

    let long = stdout(&hurwitz(&["table", "--n", "3", "--long"]));
    assert_eq!(
        long,
        "alpha,g,r,c,mu\n(3),0,2,3,1\n(3),1,4,27,9\n\"(2,1)\",0,3,8,4\n\"(2,1)\",1,5,80,40\n\
         \"(1,1,1)\",0,4,24,4\n\"(1,1,1)\",1,6,240,40\n"
    );

    let json: serde_json::Value =
        serde_json::from_str(&stdout(&hurwitz(&["table", "--n", "3", "--format", "json"]))).unwrap();
    assert_eq!(json[1]["alpha"], serde_json::json!([2, 1]));
    assert_eq!(json[1]["c1"], "80");
}

#[test]
fn output_is_deterministic() {
    let a = hurwitz(&["table", "--n", "5", "--format", "json"]);
    let b = hurwitz(&["table", "--n", "5", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_passes_and_reports_json() {
    let o = hurwitz(&["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.len() >= 20);
    assert!(checks.iter().all(|c| c["status"] == "pass" && c.get("witness").is_none()));
    for name in ["residual_closed", "u1_exact", "u2_exact", "u3_exact", "symmetrized_C", "elementary_symmetric_extraction"] {
        assert!(checks.iter().any(|c| c["name"] == name), "missing {name}");
    }
    assert_eq!(report["config"]["N"], 8);
    assert_eq!(report["config"]["K"], 8);
    assert_eq!(report["config"]["G"], 1);
}

#[test]
fn verify_at_larger_truncation() {
    let o = hurwitz(&["verify", "--N", "10"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn truncation_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(["verify"])
        .env("HURWITZ_TRUNC_N", "6")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["config"]["N"], 6);
}

#[test]
fn injected_faults_fail_with_witnesses() {
    for fault in ["g1", "A0", "C3", "E1"] {
        let o = hurwitz(&["verify", "--inject-fault", fault]);
        assert_eq!(o.status.code(), Some(1), "fault {fault}");
        let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        let failed: Vec<_> = report["checks"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|c| c["status"] == "fail")
            .collect();
        assert!(!failed.is_empty());
        assert!(failed.iter().all(|c| c["witness"].is_string()));
        assert_eq!(report["config"]["faults"][0], fault);
    }
    assert_eq!(hurwitz(&["verify", "--inject-fault", "Q9"]).status.code(), Some(2));
}

#[test]
fn compare_runs() {
    let o = hurwitz(&["compare", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("0 disagreement"));
    let out = stdout(&o);
    assert!(out.starts_with("alpha,g,oracle,cutjoin,closed,agree\n(4),0,16,16,16,true\n"));
    assert!(!out.contains("false"));

    let o = hurwitz(&["compare", "--n", "5", "--genus-max", "1"]);
    assert_eq!(o.status.code(), Some(0));

    let o = hurwitz(&["compare", "--n", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("oracle skipped"));
    assert!(stdout(&o).contains("(8),0,-,"));
}

#[test]
fn compare_beyond_closed_forms() {
    let o = hurwitz(&["compare", "--n", "3", "--genus-max", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let genus_two: Vec<_> = rows.as_array().unwrap().iter().filter(|r| r["genus"] == 2).collect();
    assert_eq!(genus_two.len(), 3);
    assert!(genus_two.iter().all(|r| r["closed"].is_null() && r["oracle"] == r["cutjoin"]));
}
