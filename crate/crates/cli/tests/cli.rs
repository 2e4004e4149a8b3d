use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mode3-sif"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

const SCENARIO: &str = r#"
label = "thin-interface"
[material]
eta = [-0.5, 0.5]
[load]
a = 1.0
b = 0.2
[interface]
amplitude = 0.1
center = 0.5
half_width = 0.2
[sweep]
parameter = "interface.center"
from = 0.2
to = 1.0
samples = 9
output = "k1b_over_k0"
"#;

#[test]
fn preset_sweep_writes_csv_and_script() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &[
            "sweep",
            "--preset",
            "table1a",
            "--out",
            "a.csv",
            "--plot",
            "a.gp",
            "--samples",
            "11",
        ],
        dir.path(),
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let csv = fs::read_to_string(dir.path().join("a.csv")).unwrap();
    assert_eq!(csv.lines().count(), 1 + 5 * 11);
    let script = fs::read_to_string(dir.path().join("a.gp")).unwrap();
    assert_eq!(script.matches("'a.csv'").count(), 5);
    assert!(script.contains("set xlabel 'b/a'"));
}

#[test]
fn eta_override_and_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &[
            "sweep",
            "--preset",
            "table2d",
            "--eta",
            "-0.3,0.7",
            "--samples",
            "4",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let etas: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(etas.len(), 8);
    assert!(etas[..4].iter().all(|e| e.starts_with("-3.0")));
    assert!(etas[4..].iter().all(|e| e.starts_with("7.0")));
}

#[test]
fn scenario_file_round() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("s.toml"), SCENARIO).unwrap();
    let v = run(&["validate", "s.toml"], dir.path());
    assert!(v.status.success());
    assert!(String::from_utf8_lossy(&v.stdout).contains("18 configurations"));
    let s = run(
        &["sweep", "--scenario", "s.toml", "--workers", "2"],
        dir.path(),
    );
    assert!(s.status.success());
    assert_eq!(String::from_utf8_lossy(&s.stdout).lines().count(), 19);
}

#[test]
fn invalid_scenarios_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    // Interface profile reaching the tip somewhere in the sweep.
    fs::write(
        dir.path().join("bad.toml"),
        SCENARIO.replace("from = 0.2", "from = 0.1"),
    )
    .unwrap();
    let v = run(&["validate", "bad.toml"], dir.path());
    assert_eq!(v.status.code(), Some(1));
    let msg = String::from_utf8_lossy(&v.stderr);
    assert!(
        msg.contains("interface.center") && msg.contains("crack tip"),
        "{msg}"
    );
    let s = run(
        &["sweep", "--scenario", "bad.toml", "--out", "x.csv"],
        dir.path(),
    );
    assert_eq!(s.status.code(), Some(1));
    assert!(!dir.path().join("x.csv").exists());

    fs::write(dir.path().join("garbled.toml"), "[material\neta = 0").unwrap();
    assert_eq!(
        run(&["validate", "garbled.toml"], dir.path()).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["validate", "missing.toml"], dir.path()).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["sweep", "--preset", "table9z"], dir.path())
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(
            &["sweep", "--plot", "p.gp", "--preset", "table1a"],
            dir.path()
        )
        .status
        .code(),
        Some(1)
    );
}

#[test]
fn integrals_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["integrals", "--beta", "4,-1"], dir.path());
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let row: Vec<f64> = text
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .map(|v| v.parse().unwrap())
        .collect();
    assert!((row[1] - 0.086_688_981_972_451_5).abs() < 1e-15);
    assert_eq!(
        run(&["integrals", "--beta", "0"], dir.path()).status.code(),
        Some(1)
    );
}
