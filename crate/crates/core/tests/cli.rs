use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use zhu_lab::wz::term::striplet_term;
use zhu_lab::wz::zeilberger::striplet_certificate;

fn zhu_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zhu-lab"))
        .args(args)
        .env_remove("ZHULAB_JOBS")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn strip_runtimes(mut v: Value) -> Value {
    if let Some(claims) = v["claims"].as_array_mut() {
        for c in claims {
            c.as_object_mut().unwrap().remove("runtime_ms");
        }
    }
    v
}

fn statuses(v: &Value) -> Vec<(String, String)> {
    v["claims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["id"].as_str().unwrap().to_string(), c["status"].as_str().unwrap().to_string()))
        .collect()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn triplet_sweep_reports_three_claims_per_parameter() {
    let out = zhu_lab(&["verify", "triplet-ct", "--p-min", "2", "--p-max", "4", "--format", "json"]);
    let v = json_of(&out);
    let claims = v["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 9);
    let failed: Vec<(String, u64)> = claims
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| (c["id"].as_str().unwrap().to_string(), c["params"]["p"].as_u64().unwrap()))
        .collect();
    // only the (-1)^p reflection sign fails, and only for even p
    assert_eq!(failed, vec![("steps-skew-triplet".into(), 2), ("steps-skew-triplet".into(), 4)]);
    assert_eq!(v["summary"]["failed"], 2);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn out_of_range_parameter_exits_with_two() {
    let out = zhu_lab(&["verify", "triplet-ct", "--p-min", "1", "--p-max", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of range"));
    let diag = zhu_lab(&["verify", "striplet-ct", "--m-min", "0", "--m-max", "0", "--diagnostic", "--format", "json"]);
    assert_eq!(diag.status.code(), Some(0));
    assert_eq!(json_of(&diag)["claims"][0]["computed"], "-t");
}

#[test]
fn zhu_c0_json_report() {
    let out = zhu_lab(&["zhu", "c0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let a = &v["artifacts"][0];
    assert_eq!(a["total"], 38);
    assert_eq!(a["center"]["poly_degree"], 20);
    assert_eq!(a["max_nilpotent_rank"], 3);
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn twisted_flag_selects_the_twisted_algebra() {
    let out = zhu_lab(&["zhu", "striplet", "--twisted", "--m-min", "1", "--m-max", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["artifacts"][0]["total"], 20);
    assert_eq!(zhu_lab(&["zhu", "c0", "--twisted"]).status.code(), Some(2));
}

#[test]
fn catalog_is_stable() {
    let a = zhu_lab(&["catalog"]);
    let b = zhu_lab(&["catalog"]);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("thm-identity-triplet\t") && l.ends_with("\tG_p(t)=H_p(t)")));
    assert!(text.lines().any(|l| l.starts_with("appendix-zeil1\t") && l.ends_with("\tmethod of creative telescoping")));
}

#[test]
fn reruns_are_identical_apart_from_runtimes() {
    let args = ["poisson", "striplet", "--m-min", "1", "--m-max", "2", "--format", "json"];
    let a = strip_runtimes(json_of(&zhu_lab(&args)));
    let b = strip_runtimes(json_of(&zhu_lab(&args)));
    assert_eq!(a, b);
    let text_args = ["poisson", "striplet", "--m-min", "1", "--m-max", "2"];
    assert_eq!(zhu_lab(&text_args).stdout, zhu_lab(&text_args).stdout);
}

#[test]
fn text_and_json_agree_on_statuses() {
    let json = json_of(&zhu_lab(&["verify", "twisted-ct", "--m-min", "1", "--m-max", "2", "--format", "json"]));
    let text = String::from_utf8(zhu_lab(&["verify", "twisted-ct", "--m-min", "1", "--m-max", "2"]).stdout).unwrap();
    let from_text: Vec<(String, String)> = text
        .lines()
        .filter(|l| !l.starts_with(' ') && !l.starts_with("task") && !l.starts_with("summary"))
        .map(|l| {
            let mut it = l.split_whitespace();
            let status = it.next().unwrap().to_string();
            (it.next().unwrap().to_string(), status)
        })
        .collect();
    assert_eq!(from_text, statuses(&json));
    assert!(from_text.iter().any(|(id, s)| id == "tw-nova-ii" && s == "proportional-pass(1)"));
}

#[test]
fn job_count_does_not_change_the_report() {
    let run = |jobs: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_zhu-lab"))
            .args(["verify", "k-identity", "--format", "json"])
            .env("ZHULAB_JOBS", jobs)
            .output()
            .unwrap();
        (out.status.code(), out.stdout)
    };
    let (c1, one) = run("1");
    let (c4, four) = run("4");
    assert_eq!((c1, c4), (Some(0), Some(0)));
    let one = strip_runtimes(serde_json::from_slice(&one).unwrap());
    let four = strip_runtimes(serde_json::from_slice(&four).unwrap());
    assert_eq!(one, four);
    assert_eq!(run("zero").0, Some(2));
}

#[test]
fn output_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = zhu_lab(&["poisson", "triplet", "--p-min", "2", "--p-max", "3", "--format", "json", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["task"], "poisson-triplet");
    assert_eq!(v["summary"]["passed"], 4);
}

#[test]
fn ct_eval_reads_an_expression_file() {
    let dir = tempfile::tempdir().unwrap();
    let expr = write(
        dir.path(),
        "expr.json",
        r#"{
            "variables": ["x"],
            "atoms": [
                {"kind": "power", "var": "x", "exponent": {"const": "-3"}},
                {"kind": "one_plus_pow", "var": "x", "exponent": {"const": "1/2", "t_coeff": 1}}
            ],
            "residue_orders": {"x": 1}
        }"#,
    );
    let out = zhu_lab(&["ct", "eval", "--expr", &expr, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    // C(t + 1/2, 2) = t^2/2 - 1/8
    let v = json_of(&out);
    assert_eq!(v["artifacts"][0]["coefficients"], serde_json::json!(["-1/8", "0/1", "1/2"]));
    let bad = write(dir.path(), "bad.json", "{\"variables\": 3}");
    assert_eq!(zhu_lab(&["ct", "eval", "--expr", &bad]).status.code(), Some(2));
    assert_eq!(zhu_lab(&["ct", "eval", "--expr", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn wz_subcommands_on_term_files() {
    let dir = tempfile::tempdir().unwrap();
    let term = write(dir.path(), "term.json", &striplet_term().to_json());
    let cert = write(dir.path(), "cert.json", &striplet_certificate().to_json());

    let z = zhu_lab(&["wz", "zeilberger", "--term", &term, "--format", "json"]);
    assert_eq!(z.status.code(), Some(0));
    let zv = json_of(&z);
    assert_eq!(zv["artifacts"][0]["found"], true);

    let ok = zhu_lab(&["wz", "verify-cert", "--term", &term, "--cert", &cert, "--format", "json"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json_of(&ok)["claims"][0]["status"], "pass");

    let found = write(dir.path(), "found.json", &zv["artifacts"][0]["certificate"].to_string());
    let again = zhu_lab(&["wz", "verify-cert", "--term", &term, "--cert", &found]);
    assert_eq!(again.status.code(), Some(0));

    let mut broken: Value = serde_json::from_str(&striplet_certificate().to_json()).unwrap();
    broken["coefficients"][0][0] = Value::from("1/1");
    let broken = write(dir.path(), "broken.json", &broken.to_string());
    assert_eq!(zhu_lab(&["wz", "verify-cert", "--term", &term, "--cert", &broken]).status.code(), Some(1));

    let g = zhu_lab(&["wz", "gosper", "--term", &term, "--format", "json"]);
    assert_eq!(g.status.code(), Some(0));
    assert_eq!(json_of(&g)["artifacts"][0]["summable"], false);
}

#[test]
fn gosper_finds_a_summable_term() {
    // C(n, i) (-1)^i is Gosper-summable in i
    let dir = tempfile::tempdir().unwrap();
    let term = write(
        dir.path(),
        "t.json",
        r#"{"sign": {"c0": 0, "cn": 0, "ci": 1}, "factors": [{"top": {"c0": 0, "cn": 1, "ci": 0}, "bottom": {"c0": 0, "cn": 0, "ci": 1}}]}"#,
    );
    let out = zhu_lab(&["wz", "gosper", "--term", &term, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["artifacts"][0]["summable"], true);
}
