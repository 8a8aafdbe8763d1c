use std::path::PathBuf;
use std::process::Command as Process;

use clap::Parser;
use eulerlab_cli::{execute, run, Cli, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("eulerlab").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn free_zero_set_example_bound() {
    let ex = data("example.json");
    let (code, out, _) = call(&["bound", "--theorem", "free-zero-set", "-i", &ex]);
    assert_eq!(code, 0);
    assert!(out.contains("bound: 4"), "{out}");
}

#[test]
fn flag_ring_verification_passes() {
    let (code, out, err) = call(&["flag-ring", "-n", "3", "-l", "2", "--verify"]);
    assert_eq!(code, 0, "{err}");
    assert!(!out.contains(": fail"));
}

#[test]
fn non_coprime_circle_is_an_input_error() {
    let (code, _, err) = call(&["torus-example", "-a", "2", "-b", "4", "-c", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("gcd(a,b) must be 1"), "{err}");
}

#[test]
fn failed_hypothesis_names_the_item() {
    let doc = r#"{"group":{"kind":"elem_abelian_2","rank":1},
        "module":{"entries":[{"char":[1],"mult":1}]},
        "target":{"entries":[{"char":[1],"mult":2}]}}"#;
    let (code, out, err) = call(&["bound", "--theorem", "free-zero-set", "--doc", doc]);
    assert_eq!(code, 1);
    assert!(out.contains("bound: not applicable"));
    assert!(
        err.contains("hypothesis failed: dim U - dim V > dim U^E"),
        "{err}"
    );
}

#[test]
fn malformed_input_exits_two() {
    assert_eq!(call(&["euler-check", "--doc", "{"]).0, 2);
    assert_eq!(
        call(&[
            "euler-check",
            "--doc",
            r#"{"group":{"kind":"torus","rank":1},"extra":1}"#
        ])
        .0,
        2
    );
    assert_eq!(call(&["euler-check"]).0, 2);
    assert_eq!(call(&["no-such-command"]).0, 2);
    assert_eq!(call(&["reduce", "-g", "T1^2", "-p", "T3"]).0, 2);
    assert_eq!(
        call(&[
            "bound",
            "--theorem",
            "stiefel-complex",
            "-i",
            &data("example.json"),
            "-n",
            "3"
        ])
        .0,
        2
    );
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("flag-ring"));
}

#[test]
fn flags_override_document_fields() {
    let doc = r#"{"n": 5, "l": 2}"#;
    let cli = Cli::try_parse_from(["eulerlab", "--doc", doc, "flag-ring", "-n", "3"]).unwrap();
    match execute(&cli).unwrap() {
        Output::FlagRing(r) => {
            assert_eq!((r.n, r.l), (3, 2));
            assert_eq!(r.quotient_dimension, 6);
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn reduce_over_both_fields() {
    let (code, out, _) = call(&["reduce", "-g", "T1^2", "-g", "T2^3 + T1*T2", "-p", "T2^4"]);
    assert_eq!(code, 0);
    assert!(out.contains("normal form of T2^4: T1*T2^2"), "{out}");
    let (code, out, _) = call(&["reduce", "--field", "q", "-g", "T1^2 - 1", "-p", "T1^3"]);
    assert_eq!(code, 0);
    assert!(out.contains(": T1\n"), "{out}");
}

#[test]
fn binary_reads_stdin_and_honours_seed_variable() {
    use std::io::Write;
    let bin = env!("CARGO_BIN_EXE_eulerlab");
    let doc = std::fs::read(data("example.json")).unwrap();
    let mut child = Process::new(bin)
        .args(["--output", "machine", "-i", "-", "euler-check"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&doc).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let parsed: Output = serde_json::from_slice(&out.stdout).unwrap();
    assert!(matches!(parsed, Output::EulerCheck(ref r) if r.nonzero));

    let seeded = |env: Option<&str>, flag: Option<&str>| {
        let mut p = Process::new(bin);
        p.args([
            "--output",
            "machine",
            "flag-ring",
            "-n",
            "4",
            "-l",
            "2",
            "--verify",
            "--samples",
            "5",
        ]);
        if let Some(s) = flag {
            p.args(["--seed", s]);
        }
        match env {
            Some(s) => p.env("EULERLAB_SEED", s),
            None => p.env_remove("EULERLAB_SEED"),
        };
        String::from_utf8(p.output().unwrap().stdout).unwrap()
    };
    assert!(seeded(None, None).contains("seed 0"));
    assert!(seeded(Some("17"), None).contains("seed 17"));
    assert!(seeded(Some("17"), Some("3")).contains("seed 3"));
}
