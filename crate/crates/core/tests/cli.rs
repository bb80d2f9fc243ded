use std::path::Path;
use std::process::{Command, Output};

fn qwalk3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qwalk3"))
        .args(args)
        .output()
        .expect("spawn qwalk3")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const GROVER: &str = "model = \"grover\"\nlambda = { angle = 3.141592653589793 }\nwindow = [-10, 10]\n";

#[test]
fn lists_models() {
    let out = qwalk3(&["models"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for name in ["grover", "grover-defect", "fourier"] {
        assert!(text.lines().any(|l| l.starts_with(name)), "{text}");
    }
}

#[test]
fn grover_csv_to_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "g.toml", GROVER);
    let out = qwalk3(&["run", &cfg]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("x,re_L,im_L,re_O,im_O,re_R,im_R,mu"));
    assert_eq!(text.lines().count(), 22);
    assert!(String::from_utf8_lossy(&out.stderr).contains("uniform"));
}

#[test]
fn defect_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "d.toml",
        "model = { name = \"grover-defect\", phase = 3.141592653589793 }\nlambda = [-1.0, 0.0]\nwindow = [-5, 5]\noracle_steps = 2\n",
    );
    let out = qwalk3(&["run", &cfg]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let row = text.lines().find(|l| l.starts_with("1,")).unwrap();
    let mu: f64 = row.rsplit(',').next().unwrap().parse().unwrap();
    assert!((mu - 6.0).abs() < 1e-12, "{row}");
}

#[test]
fn singular_denominator_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let id = "[[1,0],[0,0],[0,0],[0,0],[1,0],[0,0],[0,0],[0,0],[1,0]]";
    let cfg = write(
        dir.path(),
        "s.toml",
        &format!("model = {{ default_coin = {id} }}\nlambda = [1.0, 0.0]\nwindow = [-3, 3]\noracle_steps = 1\n"),
    );
    let out = qwalk3(&["run", &cfg]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn invalid_lambda_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "bad.toml", "model = \"grover\"\nlambda = [2.0, 0.0]\n");
    let out = qwalk3(&["run", &cfg]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lambda"));
}

#[test]
fn missing_file_exits_1() {
    let out = qwalk3(&["run", "/nonexistent/config.toml"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn overrides_apply() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "g.toml", GROVER);
    let json = dir.path().join("out.json");
    let out = qwalk3(&[
        "run",
        &cfg,
        "--window",
        "-4",
        "4",
        "--steps",
        "3",
        "--format",
        "json",
        "--out",
        json.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&json).unwrap()).unwrap();
    assert_eq!(v["metadata"]["window"], serde_json::json!([-4, 4]));
    assert_eq!(v["metadata"]["oracle_steps"], 3);
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);
}

#[test]
fn out_with_several_configs_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.toml", GROVER);
    let b = write(dir.path(), "b.toml", GROVER);
    let out = qwalk3(&["run", &a, &b, "--out", "x.csv"]);
    assert_eq!(out.status.code(), Some(1));
}
