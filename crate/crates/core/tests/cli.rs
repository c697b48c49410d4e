use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kt-extremal"))
        .args(args)
        .env_remove("EXTREMAL_MAX_EDGES")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn binary");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], &str, i32)] = &[
        (
            &["value", "--t", "3", "--delta", "3", "--edges", "13"],
            "",
            0,
        ),
        (
            &["value", "--total", "--delta", "3", "--edges", "10"],
            "",
            0,
        ),
        (&["value", "--delta", "3", "--edges", "10"], "", 2),
        (
            &["value", "--t", "3", "--delta", "0", "--edges", "10"],
            "",
            2,
        ),
        (
            &["construct", "--t", "3", "--delta", "4", "--edges", "14"],
            "",
            0,
        ),
        (
            &["construct", "--t", "3", "--delta", "1", "--edges", "40"],
            "",
            2,
        ),
        (&["count", "--all"], "C~\n", 0),
        (&["count", "--t", "3"], "0 1\n1 2\n2 0\n", 0),
        (&["count", "--t", "3"], "not a graph\n", 2),
        (&["check", "--t", "3", "--delta", "3"], "C~\n", 0),
        (
            &["verify", "--t", "3", "--delta", "3", "--edges", "6"],
            "",
            0,
        ),
        (
            &["verify", "--t", "3", "--delta", "3", "--edges", "15"],
            "",
            2,
        ),
        (
            &[
                "verify", "--t", "3", "--delta", "3", "--edges", "6", "--jobs", "0",
            ],
            "",
            2,
        ),
        (&["kk", "--edges", "8", "--t", "3"], "", 0),
        (&["props"], "", 0),
        (&["props", "--grid-scale", "0"], "", 2),
        (&["enumerate", "--edges", "3"], "", 0),
        (&["bogus"], "", 2),
        (&["--help"], "", 0),
    ];
    for (args, stdin, code) in cases {
        let out = run(args, stdin);
        assert_eq!(
            out.status.code(),
            Some(*code),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        if *code == 2 {
            assert!(!out.stderr.is_empty(), "{args:?} should explain itself");
        }
    }
}

#[test]
fn value_output() {
    let v = json(&run(
        &["value", "--t", "3", "--delta", "3", "--edges", "13"],
        "",
    ));
    assert_eq!((v["q"].as_u64(), v["b"].as_u64()), (Some(2), Some(1)));
    assert_eq!(v["value"], "8");
}

#[test]
fn construct_then_check_round_trips() {
    let g6 = run(
        &["construct", "--t", "3", "--delta", "4", "--edges", "23"],
        "",
    );
    let text = String::from_utf8(g6.stdout).unwrap();
    let v = json(&run(&["check", "--t", "3", "--delta", "4"], &text));
    assert_eq!(v["is_extremal"], true);
    let edges = run(
        &[
            "construct",
            "--t",
            "3",
            "--delta",
            "4",
            "--edges",
            "23",
            "--format",
            "edges",
        ],
        "",
    );
    let v = json(&run(
        &["count", "--t", "3"],
        &String::from_utf8(edges.stdout).unwrap(),
    ));
    assert_eq!(v["m"], 23);
    assert_eq!(v["counts"]["3"], "21");
}

#[test]
fn enumerate_matches_verify_corpus() {
    for (edges, delta) in [("7", "3"), ("9", "4")] {
        let listed = run(&["enumerate", "--edges", edges, "--delta", delta], "");
        let lines = String::from_utf8(listed.stdout).unwrap().lines().count();
        let v = json(&run(
            &["verify", "--t", "3", "--delta", delta, "--edges", edges],
            "",
        ));
        assert_eq!(v["corpus_size"].as_u64(), Some(lines as u64));
    }
}

#[test]
fn edge_cap_precedence() {
    let args = ["verify", "--t", "3", "--delta", "3", "--edges", "5"];
    let blocked = Command::new(env!("CARGO_BIN_EXE_kt-extremal"))
        .args(args)
        .env("EXTREMAL_MAX_EDGES", "4")
        .output()
        .unwrap();
    assert_eq!(blocked.status.code(), Some(2));
    let flag_wins = Command::new(env!("CARGO_BIN_EXE_kt-extremal"))
        .args(args)
        .args(["--max-edges", "5"])
        .env("EXTREMAL_MAX_EDGES", "4")
        .output()
        .unwrap();
    assert_eq!(flag_wins.status.code(), Some(0));
}

#[test]
fn verify_emits_one_report_per_check() {
    let out = run(
        &[
            "verify", "--t", "3", "--delta", "3", "--edges", "10", "--kr1", "--kk",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    let reports: Vec<serde_json::Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let kinds: Vec<&str> = reports
        .iter()
        .map(|r| r["check"].as_str().unwrap())
        .collect();
    assert_eq!(kinds, ["main", "total", "kk"]);
    assert_eq!(reports[1]["oracle_max"], "16");
    assert_eq!(reports[1]["argmax"].as_array().unwrap().len(), 2);
}
