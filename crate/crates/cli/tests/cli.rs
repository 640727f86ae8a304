//! End-to-end tests of the petrial binary: output bytes, exit codes, batch
//! behavior.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn petrial(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_petrial"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn petrial_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_petrial"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn poly_json_is_bit_exact() {
    let out = petrial(&["poly", "--rotation", "1 2 1 2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "{\"edges\":2,\"coeffs\":{\"1\":1,\"2\":3}}\n");
}

#[test]
fn poly_text_format() {
    let out = petrial(&["poly", "--rotation", "1 2 1 3 2 3", "--format", "text"]);
    assert_eq!(stdout(&out), "3z^2 + 5z^3\n");
}

#[test]
fn poly_parallel_matches_serial() {
    let serial = petrial(&["poly", "--rotation", "1 2 1 3 2 4 3 4"]);
    let parallel = petrial(&["poly", "--rotation", "1 2 1 3 2 4 3 4", "--threads", "4"]);
    assert_eq!(stdout(&serial), stdout(&parallel));
}

#[test]
fn trace_output() {
    let out = petrial(&["trace", "--rotation", "1 -1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "f=1 \u{3c7}=1 \u{3b5}=1\n");
}

#[test]
fn parse_error_exits_2() {
    let out = petrial(&["poly", "--rotation", "1 2 3"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn unknown_flag_exits_2() {
    let out = petrial(&["poly", "--bogus"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn batch_stdin_line_counts() {
    let input = "# two rotations\n1 1\n\n1 2 1 2\n";
    let out = petrial_stdin(&["poly"], input);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], "{\"edges\":1,\"coeffs\":{\"0\":1,\"1\":1}}");
}

#[test]
fn malformed_batch_line_fails_whole_run_with_line_number() {
    let input = "1 1\n# fine\n0 0\n1 2 1 2\n";
    let out = petrial_stdin(&["trace"], input);
    assert_eq!(code(&out), 2);
    let stderr = String::from_utf8(out.stderr).expect("utf-8 stderr");
    assert!(stderr.contains("line 3"), "stderr: {stderr}");
}

#[test]
fn igraph_with_canonical_hex() {
    let out = petrial(&["igraph", "--rotation", "1 2 -1 2", "--canonical"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "edges=[1-2] signs=[1:-,2:+] canonical=0280\n");
}

#[test]
fn igraph_canonical_cap_exits_4() {
    let tokens: Vec<String> = (1..=9).chain(1..=9).map(|k| k.to_string()).collect();
    let word = tokens.join(" ");
    let out = petrial(&["igraph", "--rotation", &word, "--canonical"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn petrial_subcommand_applies_subset() {
    let out = petrial(&["petrial", "--set", "1", "--rotation", "1 2 1 2"]);
    assert_eq!(stdout(&out), "1 2 -1 2\n");
    let absent = petrial(&["petrial", "--set", "7", "--rotation", "1 2 1 2"]);
    assert_eq!(code(&absent), 2);
}

#[test]
fn reduce_logs_steps_and_terminal() {
    let out = petrial(&["reduce", "--rotation", "1 2 -1 2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("rotation \"1 2 -1 2\" f=1\n"), "{text}");
    assert!(text.contains("op2"), "{text}");
    assert!(text.trim_end().ends_with("terminal isolated-vertex steps=3"), "{text}");

    let non_path = petrial(&["reduce", "--rotation", "1 2 3 1 2 3"]);
    assert_eq!(code(&non_path), 2);
}

#[test]
fn formula_matches_poly_output() {
    let formula = petrial(&["formula", "--family", "pn", "--n", "4"]);
    assert_eq!(stdout(&formula), "{\"edges\":4,\"coeffs\":{\"3\":5,\"4\":11}}\n");
    let poly = petrial(&["poly", "--rotation", "1 2 1 3 2 4 3 4"]);
    assert_eq!(stdout(&formula), stdout(&poly));

    let too_small = petrial(&["formula", "--family", "kn", "--n", "1"]);
    assert_eq!(code(&too_small), 2);
}

#[test]
fn catalog_streams_classes() {
    let out = petrial(&["catalog", "--n", "1", "--signed"]);
    assert_eq!(stdout(&out), "1 1\n1 -1\n");
    let over_cap = petrial(&["catalog", "--n", "7"]);
    assert_eq!(code(&over_cap), 4);
}

#[test]
fn verify_suite_exit_codes() {
    let ok = petrial(&["verify", "--suite", "kn"]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).starts_with("PASS suite=kn"));
    let unknown = petrial(&["verify", "--suite", "nope"]);
    assert_eq!(code(&unknown), 2);
}

#[test]
fn explore_binomial_lists_paths() {
    let out = petrial(&["explore-binomial", "--max-n", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(
        text.lines().any(|l| l.contains("\"1 2 1 3 2 3\"") && l.contains("path=true")),
        "{text}"
    );
    assert!(!text.contains("\"1 2 3 1 2 3\""), "{text}");

    let over_cap = petrial(&["explore-binomial", "--max-n", "9"]);
    assert_eq!(code(&over_cap), 4);
}

#[test]
fn poly_cap_exits_4() {
    let tokens: Vec<String> = (1..=31).chain(1..=31).map(|k| k.to_string()).collect();
    let word = tokens.join(" ");
    let out = petrial(&["poly", "--rotation", &word]);
    assert_eq!(code(&out), 4);
    // A tighter user cap rejects smaller inputs the same way.
    let out = petrial(&["poly", "--rotation", "1 2 1 2", "--max-n", "1"]);
    assert_eq!(code(&out), 4);
    // Caps above the 64-bit-safe limit are usage errors.
    let out = petrial(&["poly", "--rotation", "1 1", "--max-n", "40"]);
    assert_eq!(code(&out), 2);
}
