use std::path::PathBuf;
use std::process::{Command, Output};

fn bindsig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bindsig"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bindsig-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn check_signature_files() {
    let ulc = scratch(
        "ulc.sig",
        "signature ulc\nop app : (*, *) -> *\nop abs : ([*] *) -> *\n",
    );
    let out = bindsig(&["check", ulc.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));

    let dup = scratch(
        "dup.sig",
        "signature dup\nop app : (*, *) -> *\nop app : ([*] *) -> *\n",
    );
    let out = bindsig(&["check", dup.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("DuplicateName app"), "{}", stderr(&out));

    let out = bindsig(&["check", "/nonexistent/missing.sig"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumeration() {
    let out = bindsig(&["enum", "ulc", "--ctx", "0", "--depth", "3", "--count"]);
    assert_eq!(stdout(&out), "5\n");
    let out = bindsig(&["enum", "ulc", "--ctx", "0", "--depth", "2"]);
    assert_eq!(stdout(&out), "(op abs (var 0))\n");
    let out = bindsig(&["enum", "ulc", "--ctx", "0", "--depth", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "");
}

#[test]
fn unbounded_parameters_need_a_bound() {
    let out = bindsig(&["enum", "stlc", "--sort", "iota", "--depth", "2", "--count"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("Unbounded"), "{}", stderr(&out));
    let out = bindsig(&[
        "enum", "stlc", "--sort", "iota", "--depth", "2", "--count", "--max-sort-depth", "1",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
}

#[test]
fn substitution() {
    let term = "(op app (var 0) (op abs (var 1)))";
    let out = bindsig(&["subst", "ulc", "--ctx", "1", "--term", term, "--assign", "(assign (op abs (var 0)))"]);
    assert_eq!(
        stdout(&out),
        "(op app (op abs (var 0)) (op abs (op abs (var 0))))\n"
    );
    let out = bindsig(&["subst", "ulc", "--ctx", "1", "--term", term, "--assign", "(assign (var 0))"]);
    assert_eq!(stdout(&out), format!("{term}\n"));
    let out = bindsig(&["subst", "ulc", "--ctx", "2", "--term", "(var 0)", "--assign", "(assign (var 0))"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn law_suites() {
    let out = bindsig(&["laws", "ulc", "--depth", "3", "--seed", "42", "--cases", "1000"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = bindsig(&["laws", "ulc", "--model", "fv"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("suite morphism model fv"));
    let out = bindsig(&["laws", "stlc", "--model", "fv", "--max-sort-depth", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("TypedSignature"), "{}", stderr(&out));
}

#[test]
fn same_seed_same_report() {
    let args = ["laws", "ulc", "--seed", "7", "--cases", "200", "--format", "records"];
    let a = bindsig(&args);
    let b = bindsig(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn translations_and_free_variables() {
    let out = bindsig(&["translate", "--table", "fol2ll", "(op imp (op top) (op bot))"]);
    assert_eq!(stdout(&out), "(op lolli (op bang (op top)) (op bot))\n");
    let out = bindsig(&["translate", "--table", "stlc2ulc", "(op abs<iota,iota> (var 0))"]);
    assert_eq!(stdout(&out), "(op abs (var 0))\n");
    let out = bindsig(&["fv", "--ctx", "2", "(op app (var 0) (op abs (var 1)))"]);
    assert_eq!(stdout(&out), "{0}\n");
}

#[test]
fn table_files() {
    let table = scratch(
        "swap.table",
        "translate ulc -> ulc\nclause app = (op app (ph 1) (ph 0))\nclause abs = (op abs (ph 0))\n",
    );
    let out = bindsig(&[
        "translate",
        "--table",
        table.to_str().unwrap(),
        "--ctx",
        "2",
        "(op app (var 0) (op abs (var 2)))",
    ]);
    assert_eq!(stdout(&out), "(op app (op abs (var 2)) (var 0))\n", "{}", stderr(&out));
}

#[test]
fn chain_stages() {
    let out = bindsig(&["chain", "ulc", "--depth", "4"]);
    assert_eq!(stdout(&out), "stage count\n0 0\n1 0\n2 1\n3 5\n4 51\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bindsig(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bindsig(&["enum", "ulc"]).status.code(), Some(2));
}
