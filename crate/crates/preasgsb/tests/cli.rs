//! End-to-end tests of the `preasgsb` binary: output formats, exit codes,
//! and round-trips through the presentation format.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_preasgsb"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn write_file(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).expect("fixture written");
    path.to_str().expect("utf-8 path").to_string()
}

const FREE_T: &str = "preasgsb-format 1\nalphabet: t\n";
const SQUARE_T: &str = "preasgsb-format 1\nalphabet: t\nrel: t*t\n";

#[test]
fn normal_form_prints_the_reduced_polynomial() {
    let dir = TempDir::new().unwrap();
    let pres = write_file(&dir, "sq.pres", SQUARE_T);
    let out = run(&["normal-form", &pres, "t*t + (t t)"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "(t t)\n");
}

#[test]
fn normal_form_prints_zero_for_the_zero_class() {
    let dir = TempDir::new().unwrap();
    let pres = write_file(&dir, "free.pres", FREE_T);
    // t ≻ t is the planar product, so this input is already zero.
    let out = run(&["normal-form", &pres, "t>t - (t t)"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "ZERO\n");
}

#[test]
fn bad_polynomial_is_exit_two_with_a_position() {
    let dir = TempDir::new().unwrap();
    let pres = write_file(&dir, "free.pres", FREE_T);
    let out = run(&["normal-form", &pres, "t + qq"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown generator `qq`"));
}

#[test]
fn missing_file_is_exit_two() {
    let out = run(&["dims", "/nonexistent.pres", "--max-deg", "2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("error:"));
}

#[test]
fn dims_on_the_free_algebra_are_catalan() {
    let dir = TempDir::new().unwrap();
    let pres = write_file(&dir, "free.pres", FREE_T);
    let out = run(&["dims", &pres, "--max-deg", "8"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1 2 5 14 42 132 429 1430\n");
}

#[test]
fn dims_oracle_match_and_mismatch() {
    let dir = TempDir::new().unwrap();
    let zin = dir.path().join("zin.pres");
    let gen = run(&[
        "instances",
        "zinbiel",
        "--gens",
        "1",
        "--max-deg",
        "4",
        "-o",
        zin.to_str().unwrap(),
    ]);
    assert_eq!(code(&gen), 0);
    let out = run(&["dims", zin.to_str().unwrap(), "--max-deg", "4", "--oracle"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "reduced: 1 1 1 1\noracle: 1 1 1 1\nMATCH\n");

    // {t*t} alone is not closed: the naive reduced count overshoots the
    // true quotient dimension in degree three.
    let sq = write_file(&dir, "sq.pres", SQUARE_T);
    let out = run(&["dims", &sq, "--max-deg", "3", "--oracle"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "reduced: 1 1 4\noracle: 1 1 2\nMISMATCH\n");
}

#[test]
fn dims_oracle_is_seed_independent() {
    let dir = TempDir::new().unwrap();
    let sq = write_file(&dir, "sq.pres", SQUARE_T);
    let base = run(&["dims", &sq, "--max-deg", "3", "--oracle"]);
    let seeded = run(&["--seed", "7", "dims", &sq, "--max-deg", "3", "--oracle"]);
    assert_eq!(stdout(&base), stdout(&seeded));
    assert_eq!(code(&base), code(&seeded));
}

#[test]
fn basis_lists_reduced_words_ascending() {
    let dir = TempDir::new().unwrap();
    let zin = dir.path().join("zin.pres");
    run(&[
        "instances",
        "zinbiel",
        "--gens",
        "1",
        "--max-deg",
        "3",
        "-o",
        zin.to_str().unwrap(),
    ]);
    let out = run(&["basis", zin.to_str().unwrap(), "--max-deg", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "x\n(x x)\n((x x) x)\n");
}

#[test]
fn check_reports_success_on_a_closed_system() {
    let dir = TempDir::new().unwrap();
    let zin = dir.path().join("zin.pres");
    run(&[
        "instances",
        "zinbiel",
        "--gens",
        "1",
        "--max-deg",
        "4",
        "-o",
        zin.to_str().unwrap(),
    ]);
    let out = run(&["check", zin.to_str().unwrap(), "--max-deg", "4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("all reduce to zero"), "got: {text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn check_reports_failures_with_exit_one() {
    let dir = TempDir::new().unwrap();
    // The square relation without its consequences is not closed.
    let pres = write_file(
        &dir,
        "m.pres",
        "preasgsb-format 1\nalphabet: t\nrel: t*t - 2 (t t)\n",
    );
    let out = run(&["check", &pres, "--max-deg", "4"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("FAIL"));
    assert!(text.contains("compositions do not reduce to zero"));
}

#[test]
fn complete_converges_and_reports_on_stderr() {
    let dir = TempDir::new().unwrap();
    let pres = write_file(&dir, "sq.pres", SQUARE_T);
    let out = run(&["complete", &pres, "--max-deg", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "preasgsb-format 1\n\
         alphabet: t\n\
         rel: (t (t t))\n\
         rel: ((t t) (t t)) - (((t t) t) t)\n\
         rel: (t (t (t t)))\n\
         rel: t*t\n\
         rel: (t t)*t - ((t t) t)\n\
         rel: ((t t) t)*t\n\
         rel: (t (t t))*t\n"
    );
    let report = stderr(&out);
    assert!(
        report.contains("converged after 2 round(s); 7 relations"),
        "got: {report}"
    );
}

#[test]
fn complete_is_idempotent_on_closed_input() {
    let dir = TempDir::new().unwrap();
    let pres = write_file(&dir, "sq.pres", SQUARE_T);
    let closed = dir.path().join("closed.pres");
    let first = run(&[
        "complete",
        &pres,
        "--max-deg",
        "4",
        "-o",
        closed.to_str().unwrap(),
    ]);
    assert_eq!(code(&first), 0);
    assert_eq!(stdout(&first), "");
    let second = run(&["complete", closed.to_str().unwrap(), "--max-deg", "4"]);
    assert_eq!(code(&second), 0);
    assert_eq!(stdout(&second), fs::read_to_string(&closed).unwrap());
    assert!(stderr(&second).contains("converged after 0 round(s)"));
}

#[test]
fn complete_with_no_budget_echoes_and_exits_one() {
    let dir = TempDir::new().unwrap();
    let pres = write_file(&dir, "sq.pres", SQUARE_T);
    let out = run(&["complete", &pres, "--max-deg", "4", "--max-rounds", "0"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), SQUARE_T);
    assert!(stderr(&out).contains("no convergence within 0 round(s)"));
}

#[test]
fn complete_with_too_small_a_budget_exits_one() {
    let dir = TempDir::new().unwrap();
    let pres = write_file(&dir, "sq.pres", SQUARE_T);
    let out = run(&["complete", &pres, "--max-deg", "4", "--max-rounds", "1"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("no convergence within 1 round(s)"));
}

#[test]
fn zinbiel_instance_prints_a_parsable_presentation() {
    let out = run(&["instances", "zinbiel", "--gens", "2", "--max-deg", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("preasgsb-format 1\nalphabet: x, y\n"));
    assert!(text.contains("rel: x*y - (x y) - (y x)\n"));
    let pres = preasgsb::presentation::Presentation::parse(&text).unwrap();
    assert!(!pres.relations().is_empty());
}

#[test]
fn envelope_instance_records_its_table() {
    let dir = TempDir::new().unwrap();
    let table = write_file(&dir, "sq.tbl", "basis: t\nt*t = 0\n");
    let out = run(&["instances", "envelope", "--table", &table, "--max-deg", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains(&format!("table: {}\n", table)));
    assert!(Path::new(&table).exists());
    preasgsb::presentation::Presentation::parse(&text).unwrap();
}

#[test]
fn non_associative_table_is_exit_one() {
    let dir = TempDir::new().unwrap();
    let table = write_file(&dir, "bad.tbl", "basis: u, v\nu*u = v\nu*v = u\n");
    let out = run(&["instances", "envelope", "--table", &table, "--max-deg", "3"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("not associative"));
}

#[test]
fn malformed_table_is_exit_two() {
    let dir = TempDir::new().unwrap();
    let table = write_file(&dir, "bad.tbl", "basis: u\nu*u = 3 w\n");
    let out = run(&["instances", "envelope", "--table", &table, "--max-deg", "3"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn presentation_errors_carry_line_numbers() {
    let dir = TempDir::new().unwrap();
    let pres = write_file(
        &dir,
        "bad.pres",
        "preasgsb-format 1\nalphabet: t\nrel: t - t\n",
    );
    let out = run(&["dims", &pres, "--max-deg", "2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 3"));
}
