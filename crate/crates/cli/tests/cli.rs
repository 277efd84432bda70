use std::path::PathBuf;
use std::process::{Command, Output};

fn periswarm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_periswarm")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("periswarm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

const SMALL_RUN: [&str; 13] = [
    "run",
    "--problem",
    "g06",
    "--engine",
    "deps",
    "--mode",
    "random",
    "--particles",
    "8",
    "--generations",
    "40",
    "--runs",
    "4",
];

#[test]
fn list_problems_shows_every_entry() {
    let out = periswarm(&["list-problems"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for name in ["g01", "g10", "wb", "sr", "tb", "ts"] {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name} missing");
    }
    assert!(text.contains("-30665.54") && text.contains("on-boundary"));
}

#[test]
fn verify_optima_succeeds() {
    let out = periswarm(&["verify-optima"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!String::from_utf8(out.stdout).unwrap().contains("FAILED"));
}

#[test]
fn run_output_is_byte_identical_across_invocations() {
    let a = periswarm(&SMALL_RUN);
    let b = periswarm(&[&SMALL_RUN[..], &["--jobs", "1"]].concat());
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert_eq!(text.lines().count(), 5);
    assert!(String::from_utf8(a.stderr).unwrap().contains("failure_rate"));
}

#[test]
fn run_writes_files_and_summary() {
    let (out_path, summary_path) = (scratch("runs.json"), scratch("summary.txt"));
    let out = periswarm(
        &[
            &SMALL_RUN[..],
            &["--format", "json", "--out", out_path.to_str().unwrap(), "--summary", summary_path.to_str().unwrap()],
        ]
        .concat(),
    );
    assert!(out.status.success());
    let json = std::fs::read_to_string(&out_path).unwrap();
    assert!(json.contains("\"failure_rate\"") && json.contains("\"run_index\": 3"));
    assert!(std::fs::read_to_string(&summary_path).unwrap().starts_with("g06 deps random N=8 T=40 runs=4 seed=1"));
}

#[test]
fn config_errors_exit_1() {
    let unknown = periswarm(&[
        "run",
        "--problem",
        "g03",
        "--engine",
        "lps",
        "--mode",
        "periodic",
        "--particles",
        "5",
        "--generations",
        "5",
    ]);
    assert_eq!(unknown.status.code(), Some(1));
    assert!(String::from_utf8(unknown.stderr).unwrap().contains("g01"));

    let bad_mode = periswarm(&[
        "run",
        "--problem",
        "g06",
        "--engine",
        "lps",
        "--mode",
        "reflect",
        "--particles",
        "5",
        "--generations",
        "5",
    ]);
    assert_eq!(bad_mode.status.code(), Some(1));

    let few = periswarm(&[
        "run",
        "--problem",
        "g06",
        "--engine",
        "deps",
        "--mode",
        "periodic",
        "--particles",
        "4",
        "--generations",
        "5",
    ]);
    assert_eq!(few.status.code(), Some(1));

    let zero_runs = periswarm(&[&SMALL_RUN[..11], &["--runs", "0"]].concat());
    assert_eq!(zero_runs.status.code(), Some(1));

    assert_eq!(periswarm(&["reproduce", "--table", "t5"]).status.code(), Some(1));
    assert_eq!(periswarm(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(periswarm(&["--help"]).status.code(), Some(0));
}

#[test]
fn unwritable_output_exits_2() {
    let out = periswarm(&[&SMALL_RUN[..], &["--out", "/nonexistent-dir/for/sure/out.csv"]].concat());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reproduce_prints_published_values() {
    let out = periswarm(&["reproduce", "--table", "t6", "--runs", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("2994.50") && text.contains("3060.91"), "{text}");
    assert_eq!(text.lines().count(), 13);
}
