use std::fs;
use std::path::Path;
use std::process::Command;

use bintutte::groups::PermutationGroup;
use bintutte::{Gf2Matrix, Hypergraph};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bintutte"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn emitted_files_reparse() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.txt", "# a comment\n2 4\n1 1 0 1\n0 1 1 1\n");
    let (code, dual) = run(&["dual", &m]);
    assert_eq!(code, 0);
    let d = Gf2Matrix::parse(&dual).unwrap();
    assert_eq!((d.rows(), d.cols()), (2, 4));

    let h = write(dir.path(), "h.txt", "4 2\n1 2 3\n2 3 4\n");
    let (code, red) = run(&["reduce", "hyper2matroid", &h, "--epsilon", "1", "--N", "5", "--seed", "9"]);
    assert_eq!(code, 0);
    let r = Gf2Matrix::parse(&red).unwrap();
    assert_eq!((r.rows(), r.cols()), (4, 10));
    assert!(red.contains("# N 5 seed 9 heuristic true"));

    let wout = dir.path().join("w.txt");
    let (code, ext) = run(&[
        "gadget", "series", &m, "--element", "2", "--q", "2", "--gamma", "2/3", "--gamma1", "2",
        "--weights-out", wout.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let e = Gf2Matrix::parse(&ext).unwrap();
    assert_eq!((e.rows(), e.cols()), (3, 5));
    assert_eq!(fs::read_to_string(&wout).unwrap(), "2/3\n2\n2/3\n2/3\n2\n");

    let hg = Hypergraph::parse(&fs::read_to_string(&h).unwrap()).unwrap();
    assert_eq!(Hypergraph::parse(&hg.to_text()).unwrap(), hg);
    let g = PermutationGroup::symmetric(4);
    assert_eq!(PermutationGroup::parse(&g.to_text()).unwrap(), g);
}

#[test]
fn deterministic_output() {
    let dir = tempfile::tempdir().unwrap();
    let h = write(dir.path(), "h.txt", "3 1\n1 2 3\n");
    let args = ["verify", "lemma2", &h, "--epsilon", "1", "--trials", "12", "--seed", "5"];
    let (c1, a) = run(&args);
    let (c2, b) = run(&args);
    let mut threaded = args.to_vec();
    threaded.extend(["--threads", "3"]);
    let (c3, c) = run(&threaded);
    assert_eq!((c1, c2, c3), (0, 0, 0));
    assert_eq!(a, b);
    assert_eq!(a, c);
    assert_eq!(a.lines().count(), 12);
    for line in a.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        for key in ["seed", "N", "ratio_lo", "ratio_hi", "pass"] {
            assert!(v.get(key).is_some(), "{key} missing in {line}");
        }
    }
}

#[test]
fn verification_failure_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    // N = 2 is far too small for ε = 1/10: most trials miss the band
    let h = write(dir.path(), "h.txt", "4 2\n1 2 3\n2 3 4\n");
    let (code, _) = run(&["verify", "reduction", &h, "--epsilon", "1/10", "--N", "2", "--trials", "20"]);
    assert_eq!(code, 4);
}

#[test]
fn subcommand_surface() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.txt", "1 2\n1 1\n");
    let g = write(dir.path(), "g.txt", "3 3\n1 2\n2 3\n1 3\n");
    let h = write(dir.path(), "h.txt", "3 1\n1 2 3\n");
    let grp = write(dir.path(), "s3.txt", "3 2\n2 1 3\n2 3 1\n");
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["eval", "tutte", &m, "--q", "2", "--gamma", "1"], "5/2\n"),
        (vec!["eval", "T", &m, "--x", "2", "--y", "3"], "5\n"),
        (vec!["eval", "rc", &g, "--q", "2", "--gamma", "1"], "28\n"),
        (vec!["eval", "potts", &m, "--q", "2", "--gamma", "1"], "5\n"),
        (vec!["eval", "ising", &m, "--gamma", "3"], "17\n"),
        (vec!["eval", "spectrum", &m], "1 0 1\n"),
        (vec!["eval", "hyper", &h, "--q", "2", "--gamma", "1"], "10\n"),
        (vec!["eval", "we", &m, "--lambda", "1/2"], "5/4\n"),
        (vec!["eval", "ci", &grp, "--x", "2"], "4\n"),
        (vec!["eval", "var", &m, "--N", "1"], "17/2\n"),
        (vec!["orbits", &grp, "--x", "2"], "4\n"),
    ];
    for (args, expect) in cases {
        let (code, out) = run(&args);
        assert_eq!((code, out.as_str()), (0, expect), "{args:?}");
    }
    for args in [
        vec!["verify", "eq9", &m, "--gamma", "2/7"],
        vec!["verify", "eq5", &g, "--q", "3", "--gamma", "1/2"],
        vec!["verify", "eq3", &m, "--x", "3", "--y", "1/2"],
        vec!["verify", "greene", &m, "--lambda", "-2"],
        vec!["verify", "cor8", &m, "--x", "5/2"],
        vec!["verify", "duality", &m, "--q", "3", "--gamma", "2"],
        vec!["verify", "lemma3", &m, "--element", "1", "--q", "2", "--gamma", "3", "--gamma1", "1"],
        vec!["verify", "lemma4", &m, "--element", "1", "--q", "2", "--gamma", "2/3", "--gamma1", "2"],
    ] {
        let (code, out) = run(&args);
        assert_eq!(code, 0, "{args:?}: {out}");
        assert!(out.contains("\"pass\":true"), "{out}");
    }
    let (code, out) = run(&["gadget", "apply", &m, "--element", "1", "--plan", "S(2,2)"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# prefactor 3\n"));
    let (code, out) = run(&["gadget", "parallel", &m, "--element", "2", "--gamma", "3", "--gamma1", "1", "--gamma2", "1"]);
    assert_eq!(code, 0);
    assert_eq!(Gf2Matrix::parse(&out).unwrap().cols(), 3);
    let (code, out) = run(&["reduce", "weight-shift", &m, "--N", "3", "--gamma-avail", "2", "--epsilon", "1/2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("\"in_target\":true"));
}
