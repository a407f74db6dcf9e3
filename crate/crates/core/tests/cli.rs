use std::path::PathBuf;
use std::process::Command;

use certcheck::cli::{cli_main, EXIT_ACCEPT, EXIT_ERROR, EXIT_REJECT};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "testdata", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("certcheck").chain(args.iter().copied());
    let code = cli_main(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn check(cmd: &str, files: &[&str]) -> (i32, String) {
    let paths: Vec<String> = files.iter().map(|f| data(f)).collect();
    let mut args = vec![cmd];
    args.extend(paths.iter().map(String::as_str));
    let (code, out, _) = run(&args);
    (code, out)
}

#[test]
fn accepts_reference_witnesses() {
    for (cmd, files) in [
        ("check-connected", vec!["connected5.graph", "connected5.tree"]),
        ("check-connected", vec!["connected5.triple"]),
        ("check-connected", vec!["split.graph", "split.cut"]),
        ("check-sp", vec!["zero_cycle.graph", "zero_cycle.sp"]),
        ("check-matching", vec!["matching12.graph", "matching12.matching"]),
        ("check-gcd", vec!["bezout.gcd"]),
    ] {
        assert_eq!(
            check(cmd, &files),
            (EXIT_ACCEPT, "ACCEPT\n".to_string()),
            "{cmd} {files:?}"
        );
    }
}

#[test]
fn rejections_name_the_failed_clause() {
    let cases = [
        ("check-sp", ["zero_cycle.graph", "zero_cycle_bad_trian.sp"], "trian"),
        ("check-sp", ["zero_cycle.graph", "zero_cycle_circular.sp"], "just"),
        (
            "check-matching",
            ["matching12.graph", "matching12_short.matching"],
            "weight",
        ),
        ("check-connected", ["connected5.graph", "split.cut"], "cut"),
    ];
    for (cmd, files, clause) in cases {
        let (code, out) = check(cmd, &files);
        assert_eq!(code, EXIT_REJECT, "{files:?}");
        assert_eq!(out, format!("REJECT: {clause}\n"));
    }
    assert_eq!(
        check("check-gcd", &["wrong.gcd"]),
        (EXIT_REJECT, "REJECT: bezout\n".to_string())
    );
}

#[test]
fn malformed_input_and_preconditions_exit_with_2() {
    let (code, out) = check("check-gcd", &["both_zero.gcd"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(out.starts_with("ERROR:"), "{out}");

    let (code, out) = check("check-connected", &["bad_edge.graph", "connected5.tree"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(out.contains("bad_edge.graph"), "{out}");

    // no costs in the graph file
    let (code, _) = check("check-sp", &["connected5.graph", "zero_cycle.sp"]);
    assert_eq!(code, EXIT_ERROR);

    let (code, _) = check("check-connected", &["does_not_exist.graph"]);
    assert_eq!(code, EXIT_ERROR);

    let (code, _, err) = run(&["check-frobnicate"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(!err.is_empty());
}

#[test]
fn solvers_reproduce_the_golden_witnesses() {
    for (cmd, graph, expected) in [
        ("solve-connected", "connected5.graph", "connected5.tree"),
        ("solve-sp", "zero_cycle.graph", "zero_cycle.sp"),
        ("solve-matching", "matching12.graph", "matching12.matching"),
    ] {
        let (code, out, _) = run(&[cmd, &data(graph)]);
        assert_eq!(code, EXIT_ACCEPT);
        assert_eq!(out, std::fs::read_to_string(data(expected)).unwrap(), "{cmd}");
    }
    let (code, out, _) = run(&["solve-gcd", "240", "46"]);
    assert_eq!(code, EXIT_ACCEPT);
    assert_eq!(out, std::fs::read_to_string(data("bezout.gcd")).unwrap());
    assert_eq!(run(&["solve-gcd", "0", "0"]).0, EXIT_ERROR);
    assert_eq!(
        run(&["solve-sp", &data("zero_cycle.graph"), "--source", "9"]).0,
        EXIT_ERROR
    );
}

#[test]
fn solve_then_check_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("w.sp");
    let w = witness.to_str().unwrap();
    let (code, out, _) = run(&["solve-sp", &data("zero_cycle.graph"), "--source", "1", "-o", w]);
    assert_eq!((code, out.as_str()), (EXIT_ACCEPT, ""));
    let (code, out, _) = run(&["check-sp", &data("zero_cycle.graph"), w]);
    assert_eq!((code, out.as_str()), (EXIT_ACCEPT, "ACCEPT\n"));

    let graph = dir.path().join("split.graph");
    std::fs::copy(data("split.graph"), &graph).unwrap();
    let (_, out, _) = run(&["solve-connected", graph.to_str().unwrap()]);
    assert!(out.starts_with("cut "));
    let triple = dir.path().join("split.triple");
    std::fs::write(&triple, std::fs::read_to_string(&graph).unwrap() + &out).unwrap();
    let (code, out, _) = run(&["check-connected", triple.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (EXIT_ACCEPT, "ACCEPT\n"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_certcheck");
    let status = |args: &[String]| Command::new(bin).args(args).output().unwrap();
    let o = status(&[
        "check-matching".into(),
        data("matching12.graph"),
        data("matching12.matching"),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&o.stdout), "ACCEPT\n");
    let o = status(&[
        "check-sp".into(),
        data("zero_cycle.graph"),
        data("zero_cycle_bad_trian.sp"),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
    let o = status(&["check-gcd".into(), data("both_zero.gcd")]);
    assert_eq!(o.status.code(), Some(2));
}
