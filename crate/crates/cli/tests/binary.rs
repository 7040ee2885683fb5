use std::io::Write;
use std::process::{Command, Output, Stdio};

fn usv(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_usv"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn usv");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_arguments() {
    let o = usv(
        &[
            "eval",
            "reduce(p{3,1} * p{4,6})",
            "normsq(t{3,0,5})",
            "reduce(I^2)",
        ],
        None,
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o), "p{0,4}\n19\nm{[0,0,0];[1,0,0];[1,0,0]}\n");
}

#[test]
fn eval_stdin_batch() {
    let o = usv(&["eval"], Some("t{2,1,0} * t{0,2,1}\n\nreduce(JJ^2)\n"));
    assert!(o.status.success());
    assert_eq!(stdout(&o), "t{1,4,4}\nm{[0,0,0];[1,0,0];[1,0,0]}\n");
}

#[test]
fn eval_errors_exit_nonzero() {
    let o = usv(&["eval", "m{[0,3,2];[2,2,0];[1,0,3]"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("syntax error at 25"));
    let o = usv(&["eval", "p{1,2} + t{1,2,3}"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("type error"));
}

#[test]
fn repl_reads_until_eof() {
    let o = usv(&["repl"], Some("reduce(p{3,1} * p{4,6})\n"));
    assert!(o.status.success());
    assert!(stdout(&o).contains("usv> p{0,4}"));
}

#[test]
fn tables_machine_records() {
    let o = usv(&["tables", "--machine"], None);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 192);
    assert!(out.lines().all(|l| l.ends_with("\tPASS")));
}

#[test]
fn verify_is_reproducible_and_validates_samples() {
    let args = ["verify", "--samples", "25", "--seed", "7", "--machine"];
    let (a, b) = (usv(&args, None), usv(&args, None));
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let seq = usv(
        &[
            "verify",
            "--samples",
            "25",
            "--seed",
            "7",
            "--machine",
            "--sequential",
        ],
        None,
    );
    assert_eq!(stdout(&a), stdout(&seq));
    assert_eq!(
        usv(&["verify", "--samples", "0"], None).status.code(),
        Some(2)
    );
    assert_eq!(usv(&["frobnicate"], None).status.code(), Some(2));
}

#[test]
fn roots_report() {
    let o = usv(&["roots"], None);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("[PASS] square roots of 9"));
    assert!(out.contains("[PASS] named units squaring to -1"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn help_lists_unit_names() {
    let o = usv(&["eval", "--help"], None);
    let out = stdout(&o);
    assert!(out.contains("NJJ  = -j"), "{out}");
    assert!(out.contains("NEG1 = -1"), "{out}");
}
