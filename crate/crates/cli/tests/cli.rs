use std::process::{Command, Output};

fn hgreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hgreg")).args(args).env_remove("HGREG_PREC").output().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn legendre_table_matches_and_is_deterministic() {
    let a = hgreg(&["table", "legendre", "--format", "json", "--no-timing", "--jobs", "2"]);
    assert_eq!(a.status.code(), Some(0));
    let rows = json(&a);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 17);
    assert!(rows.iter().all(|r| r["status"] == "match" && r["runtime_ms"].is_null()));
    let b = hgreg(&["table", "legendre", "--format", "json", "--no-timing", "--jobs", "1"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn beilinson_at_minus_three() {
    let o = hgreg(&["verify", "beilinson", "--family", "legendre", "--t", "-3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["R_rational"], "6");
}

#[test]
fn beilinson_non_integral() {
    let o = hgreg(&["--prec", "20", "verify", "beilinson", "--family", "legendre", "--t", "1/3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = hgreg(&["--prec", "20", "verify", "beilinson", "--family", "legendre", "--t", "1/3", "--allow-nonintegral"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not integral"));
    assert!(matches!(o.status.code(), Some(0) | Some(3)));
}

#[test]
fn exit_codes() {
    assert_eq!(hgreg(&["reg", "legendre", "--t", "0"]).status.code(), Some(1));
    assert_eq!(hgreg(&["reg", "legendre", "--t", "0.5"]).status.code(), Some(2));
    assert_eq!(hgreg(&["reg", "nonsense"]).status.code(), Some(2));
    assert_eq!(hgreg(&["--prec", "12", "reg", "legendre", "--t", "2"]).status.code(), Some(2));
    assert_eq!(hgreg(&["reg", "family2", "--t", "2"]).status.code(), Some(1));
}

#[test]
fn identities_count_zero_and_negative_control() {
    let o = hgreg(&["verify", "identities", "--seed", "1", "--count", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().is_empty());
    let o = hgreg(&["--prec", "30", "verify", "identities", "--count", "1", "--perturb", "1e-6"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn reg_outputs() {
    let o = hgreg(&["--format", "text", "reg", "legendre", "--t", "-3"]);
    assert_eq!(o.status.code(), Some(0));
    // mpmath: sqrt(1/4) * hyper([1/2]*3, [1, 3/2], 1/4)
    assert!(String::from_utf8_lossy(&o.stdout).contains("reg: 0.51142406705350372228327442647590644618"));
    let o = hgreg(&["reg", "fermat", "--n", "2", "--m", "3", "--nu1", "1", "--nu2", "1", "--t", "-1/2", "--cycle", "gamma"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["ambiguity"], "ModQ2");
    let o = hgreg(&["reg", "gauss", "--N", "3", "--a", "1", "--b", "2", "--d", "1", "--lambda", "1,0", "--t", "3", "--cycle", "gamma1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn curve_info_and_lvalue() {
    let o = hgreg(&["curve", "info", "--family", "legendre", "--t", "-3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["conductor"], "24");
    let o = hgreg(&["--format", "csv", "lvalue", "--model", "0,0,0,-1,0"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.starts_with("model,conductor,root_number,terms,L2,P"));
}

#[test]
fn hyper_eval() {
    let o = hgreg(&["hyper", "eval", "--pfq", "1/2,1/2;1;1/2"]);
    assert_eq!(o.status.code(), Some(0));
    // mpmath hyp2f1(0.5, 0.5, 1, 0.5)
    assert!(json(&o)["value"]["re"].as_str().unwrap().starts_with("1.18034059901609622604533794055848"));
    assert_eq!(hgreg(&["hyper", "eval", "--pfq", "1,2"]).status.code(), Some(2));
}
