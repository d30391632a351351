use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn bduplex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bduplex"))
        .args(args)
        .env_remove("BDUPLEX_CAP")
        .output()
        .unwrap()
}

fn read_json(path: &std::path::Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn duality_example_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.json");
    let o = bduplex(&[
        "duality",
        "--r",
        "1",
        "--m",
        "2",
        "--side",
        "levi",
        "--mode",
        "eval",
        "--seed",
        "7",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = read_json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["reports"][0]["seed"], 7);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("PASS"));
}

#[test]
fn cap_violation_is_skipped_not_failed() {
    let o = bduplex(&["duality", "--r", "9", "--m", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["reports"][0]["status"], "skipped");
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}

#[test]
fn cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_bduplex"))
        .args(["relations", "--family", "heckeB"])
        .env("BDUPLEX_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["reports"][0]["status"], "skipped");
}

#[test]
fn usage_errors_exit_nonzero() {
    assert_eq!(bduplex(&["nonsense"]).status.code(), Some(2));
    assert_eq!(bduplex(&["relations", "--family", "typeC"]).status.code(), Some(2));
    let o = bduplex(&["omega", "--m", "3", "--I", "1,2", "--J", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("overlap"));
}

#[test]
fn empty_config_uses_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    fs::write(&cfg, "").unwrap();
    let out = dir.path().join("s.json");
    let o = bduplex(&[
        "semisimple",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rep = &read_json(&out)["reports"][0];
    assert_eq!(rep["params"]["r"], "1");
    assert_eq!(rep["params"]["m"], "2");
    assert_eq!(rep["params"]["mode"], "eval");
    assert_eq!(rep["seed"], 0);
}

#[test]
fn omega_prints_word_and_rank() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("o.json");
    let o = bduplex(&[
        "omega",
        "--r",
        "1",
        "--m",
        "3",
        "--I",
        "2,3",
        "--J",
        "1",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("rank=16"));
    assert!(text.contains("word: T_0^-1"));
}

#[test]
fn qaction_dump_format() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("q.json");
    let o = bduplex(&[
        "qaction",
        "--gen",
        "B1",
        "--dump",
        dir.path().to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let dump = fs::read_to_string(dir.path().join("B1.txt")).unwrap();
    let mut lines = dump.lines();
    assert_eq!(lines.next(), Some("dim 36 basisOrder lex"));
    for line in lines {
        let parts: Vec<&str> = line.splitn(3, ' ').collect();
        assert_eq!(parts.len(), 3);
        assert!(parts[0].parse::<usize>().unwrap() < 36);
        assert!(parts[1].parse::<usize>().unwrap() < 36);
    }
}

#[test]
fn relations_dump_writes_every_generator() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = bduplex(&[
        "relations",
        "--family",
        "heckeB",
        "--dump",
        dir.path().to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(dir.path().join("H0.txt").exists());
    assert!(dir.path().join("H1.txt").exists());
}

#[test]
fn timings_are_opt_in() {
    let o = bduplex(&["relations", "--family", "duplex"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["reports"][0].get("wall_time_ms").is_none());
    let o = bduplex(&["relations", "--family", "duplex", "--timings"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["reports"][0]["wall_time_ms"].is_u64());
}
