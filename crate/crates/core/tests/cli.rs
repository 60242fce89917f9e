use std::io::Write;
use std::process::{Command, Stdio};

use interval_coloring::cli::run;

const BIN: &str = env!("CARGO_BIN_EXE_intervalcol");

fn call(args: &[&str], stdin: &[u8]) -> (i32, Vec<u8>) {
    let mut input = stdin;
    let mut out = Vec::new();
    let argv = std::iter::once("intervalcol").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut std::io::sink());
    (code, out)
}

#[test]
fn construct_then_verify_for_every_k() {
    for k in 1..=200u32 {
        let n = k.to_string();
        let (code, coloring) = call(&["construct", "--n", &n], b"");
        assert_eq!(code, 0);
        let (code, verdict) = call(&["verify"], &coloring);
        assert_eq!(code, 0, "k={k}: {}", String::from_utf8_lossy(&verdict));
        assert!(verdict.starts_with(b"PASS"));
    }
}

#[test]
fn case_counts_sum_to_edge_count() {
    for k in 1..=80u32 {
        let (code, out) = call(&["cases", "--n", &k.to_string()], b"");
        assert_eq!(code, 0);
        let text = String::from_utf8(out).unwrap();
        let total: u32 = text
            .lines()
            .filter(|l| l.starts_with("case "))
            .map(|l| {
                let edges = l.split("edges ").nth(1).unwrap();
                edges.split(',').next().unwrap().parse::<u32>().unwrap()
            })
            .sum();
        assert_eq!(total, k * (2 * k - 1));
    }
}

#[test]
fn binary_pipeline() {
    let construct = Command::new(BIN)
        .args(["construct", "--n", "5"])
        .output()
        .unwrap();
    assert!(construct.status.success());
    assert!(construct.stdout.starts_with(b"c 10 13\n"));

    let mut verify = Command::new(BIN)
        .arg("verify")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    verify
        .stdin
        .take()
        .unwrap()
        .write_all(&construct.stdout)
        .unwrap();
    let out = verify.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.starts_with(b"PASS"));
}

#[test]
fn binary_files_and_exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    let coloring = dir.join("k8.col");
    let graph = dir.join("k8.g");
    let status = Command::new(BIN)
        .args(["construct", "--n", "4", "--out"])
        .arg(&coloring)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&coloring).unwrap();
    assert!(text.starts_with("c 8 10\n"));

    let mut g = String::from("p 8 28\n");
    for i in 1..=8 {
        for j in i + 1..=8 {
            g += &format!("e {i} {j}\n");
        }
    }
    std::fs::write(&graph, g).unwrap();
    let out = Command::new(BIN)
        .args(["verify", "--coloring"])
        .arg(&coloring)
        .arg("--graph")
        .arg(&graph)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    // A gap at vertex 8: (7, 8) moves from 10 to 1.
    std::fs::write(&coloring, text.replace("e 7 8 10\n", "e 7 8 1\n")).unwrap();
    let out = Command::new(BIN)
        .args(["verify", "--coloring"])
        .arg(&coloring)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let report = String::from_utf8(out.stdout).unwrap();
    assert!(report.starts_with("FAIL"));
    assert!(report.contains("ColorUnused color 10"));

    let out = Command::new(BIN)
        .args(["bounds", "--graph"])
        .arg(&graph)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("best_lower=10\nbest_upper=12\n"));

    let out = Command::new(BIN)
        .args(["search", "--graph"])
        .arg(dir.join("missing"))
        .arg("--t")
        .arg("3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let out = Command::new(BIN)
        .args(["construct", "--n", "x"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let help = Command::new(BIN).arg("--help").output().unwrap();
    assert!(String::from_utf8(help.stdout)
        .unwrap()
        .contains("Exit codes:"));
}
