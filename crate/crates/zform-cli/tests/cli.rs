//! End-to-end runs of the `zform` binary.

use std::process::{Command, Output};

fn zform(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zform"))
        .args(args)
        .env_remove("ZFORM_ORDER")
        .output()
        .expect("run zform")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn straighten_bracket() {
    let o = zform(&["straighten", "x+[0]*x-[1]", "--algebra", "a2_2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("x-[1]*x+[0] + h[1]"));
    assert!(stdout(&o).contains("integral: true"));
}

#[test]
fn verify_passes_with_exit_zero() {
    let o = zform(&["verify", "ZZK", "--order", "10", "--algebra", "a1_1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("PASS ZZK"));
}

#[test]
fn verify_json_schema() {
    let o = zform(&["verify", "EFU", "--order", "4", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let r = &v.as_array().unwrap()[0];
    for key in ["tag", "paper_ref", "order", "pass", "first_diff", "elapsed_ms"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
    assert_eq!(r["pass"], serde_json::Value::Bool(true));
    assert_eq!(r["order"], 4);
}

#[test]
fn env_var_sets_the_order() {
    let o = Command::new(env!("CARGO_BIN_EXE_zform"))
        .args(["verify", "EFU", "--format", "json"])
        .env("ZFORM_ORDER", "3")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["order"], 3);
    let o = Command::new(env!("CARGO_BIN_EXE_zform"))
        .args(["verify", "EFU", "--format", "json", "--order", "5"])
        .env("ZFORM_ORDER", "3")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["order"], 5);
}

#[test]
fn deterministic_output() {
    let strip = |s: String| -> String {
        s.lines()
            .filter(|l| !l.contains("elapsed_ms"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let args = ["verify", "all", "--algebra", "sl2", "--order", "6", "--format", "json"];
    let a = strip(stdout(&zform(&args)));
    let b = strip(stdout(&zform(&args)));
    assert_eq!(a, b);
    let s = ["straighten", "exp(x+[0]*u)*exp(x-[1]*v)", "--algebra", "a2_2", "--order", "4"];
    assert_eq!(stdout(&zform(&s)), stdout(&zform(&s)));
}

#[test]
fn symfun_is_integral_witness() {
    let o = zform(&["symfun", "is-integral", "--series", "d", "--family", "hat", "--upto", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("false (witness n=4"), "{}", stdout(&o));
    let o = zform(&[
        "symfun", "is-integral", "--series", "d", "--family", "hat", "--upto", "4", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["integral"], false);
    assert_eq!(v["witness"]["n"], 4);
}

#[test]
fn symfun_other_commands() {
    let o = zform(&["symfun", "garland", "--upto", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("PASS"));
    let o = zform(&["symfun", "tilde", "--upto", "2"]);
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn coords_mitzman() {
    let o = zform(&["coords", "X+[1]^(2)", "--algebra", "a2_2", "--basis", "mitzman"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "16  y+[1]^(2)");
}

#[test]
fn errors_exit_nonzero() {
    let o = zform(&["straighten", "x+[0]^(2) * X-[2]", "--algebra", "a2_2"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 12"));
    let o = zform(&["straighten", "x+[0] *", "--algebra", "a1_1"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("expected"));
    let o = zform(&["straighten", "e*f", "--algebra", "a1_1"]);
    assert!(!o.status.success());
    let o = zform(&["verify", "NOPE"]);
    assert!(!o.status.success());
    let o = zform(&["verify", "X0X1", "--order", "30"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("ceiling"));
}

#[test]
fn algebra_mismatch_exits_nonzero() {
    let o = zform(&["verify", "CEF", "--algebra", "a2_2"]);
    assert!(!o.status.success());
}
