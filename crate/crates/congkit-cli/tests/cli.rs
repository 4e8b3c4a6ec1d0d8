//! CLI contract tests: exit codes, JSON round-trips, DOT well-formedness.

use std::process::Command;

use congkit::algebra::{ideal_lattice, SemigroupAlgebra};
use congkit::correspondence::build_phi_context;
use congkit::gf::PrimeField;
use congkit::semigroup::{build, FamilySpec};
use congkit::Guards;
use congkit_cli::output::{self, AlgebraReport, SemigroupReport};

fn congkit_cmd(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_congkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn exit_code_zero_when_all_checks_pass() {
    let out = congkit_cmd(&["algebra", "--family", "rect-band:2,2", "--prime", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = congkit_cmd(&["semigroup", "--family", "cyclic:4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn exit_code_one_on_check_failure() {
    let out = congkit_cmd(&["algebra", "--family", "cyclic:4", "--prime", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let out = congkit_cmd(&["semigroup", "--family", "chain-semilattice:3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exit_code_two_on_bad_input() {
    let out = congkit_cmd(&["semigroup", "--family", "cyclic:0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = congkit_cmd(&["algebra", "--family", "cyclic:4", "--prime", "6"]);
    assert_eq!(out.status.code(), Some(2));
    let out = congkit_cmd(&["semigroup", "--family", "no-such-family:1"]);
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.tbl");
    std::fs::write(&bad, "2\ne f\n0 7\n0 1\n").unwrap(); // entry out of range
    let out = congkit_cmd(&["semigroup", "--table", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_code_three_on_guard_exceeded() {
    // Bell guard: 11 elements exceeds the partition-enumeration carrier.
    let out = congkit_cmd(&["semigroup", "--family", "left-zero:11"]);
    assert_eq!(out.status.code(), Some(3));
    // Subspace-count guard: dim 6 at p=5.
    let out = congkit_cmd(&["algebra", "--family", "rect-band:2,3", "--prime", "5"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn guard_overrides_via_flag_and_env() {
    // Raising the Bell guard lets an 11-element group through (a prime
    // order keeps the congruence list tiny even though all 678570
    // partitions get filtered).
    let out = congkit_cmd(&[
        "semigroup",
        "--family",
        "cyclic:11",
        "--guard-partitions",
        "11",
    ]);
    assert_eq!(out.status.code(), Some(0), "{:?}", out);
    // Tightening the subspace guard through the environment blocks an
    // otherwise fine enumeration.
    let out = Command::new(env!("CARGO_BIN_EXE_congkit"))
        .args(["algebra", "--family", "cyclic:4", "--prime", "2"])
        .env("CONGKIT_GUARD_SUBSPACES", "3")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn table_file_round_trips_through_the_cli() {
    let s = build(FamilySpec::RectangularBand(2, 2)).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("band.tbl");
    std::fs::write(&path, s.to_text()).unwrap();
    let out = congkit_cmd(&["semigroup", "--table", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: SemigroupReport =
        serde_json::from_slice(&out.stdout).expect("valid semigroup JSON");
    assert_eq!(report.n, 4);
    assert_eq!(report.table, s.table());
    assert_eq!(report.congruences.len(), 4);
}

#[test]
fn semigroup_json_round_trip() {
    let out = congkit_cmd(&["semigroup", "--family", "cyclic:4", "--format", "json"]);
    let report: SemigroupReport = serde_json::from_slice(&out.stdout).expect("valid JSON");
    let reprinted = serde_json::to_string_pretty(&report).unwrap();
    let reparsed: SemigroupReport = serde_json::from_str(&reprinted).unwrap();
    assert_eq!(reparsed, report);
    assert_eq!(report.congruences.len(), 3);
}

#[test]
fn algebra_json_round_trip_matches_in_process_report() {
    let out = congkit_cmd(&[
        "algebra", "--family", "cyclic:4", "--prime", "2", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: AlgebraReport = serde_json::from_slice(&out.stdout).expect("valid JSON");

    // Rebuild the same report in-process; everything except timings must
    // agree, and parse(print(report)) must equal the report.
    let algebra = SemigroupAlgebra::new(
        build(FamilySpec::CyclicGroup(4)).unwrap(),
        PrimeField::new(2).unwrap(),
    );
    let ctx = build_phi_context(algebra, &Guards::default()).unwrap();
    let checks = vec![
        ctx.check_meet_homomorphism().unwrap(),
        ctx.check_join_compatible_kernel().unwrap(),
        ctx.check_circ_homomorphism().unwrap(),
    ];
    let mut local = output::algebra_report(&ctx, checks).unwrap();
    let reprinted = serde_json::to_string_pretty(&local).unwrap();
    let reparsed: AlgebraReport = serde_json::from_str(&reprinted).unwrap();
    assert_eq!(reparsed, local);

    for check in &mut local.checks {
        check.timing_ms = 0;
    }
    let mut normalized = parsed.clone();
    for check in &mut normalized.checks {
        check.timing_ms = 0;
    }
    assert_eq!(normalized, local);
}

#[test]
fn dot_output_is_well_formed_and_matches_the_cover_relation() {
    let out = congkit_cmd(&[
        "algebra", "--family", "rect-band:2,2", "--prime", "3", "--format", "dot",
    ]);
    let dot = String::from_utf8(out.stdout).unwrap();

    // Grammar: a digraph wrapper, node lines, optional rank groups, edges.
    let mut lines = dot.lines();
    assert_eq!(lines.next(), Some("digraph ideal_lattice {"));
    let mut edges = Vec::new();
    let mut nodes = Vec::new();
    for line in lines {
        let line = line.trim_end();
        if line == "}" {
            break;
        }
        let l = line.trim_start();
        if l == "rankdir=BT;" || l == "node [shape=box];" {
            continue;
        }
        if let Some(rest) = l.strip_prefix("{ rank=same; ") {
            assert!(rest.ends_with("; }"), "rank group: {l}");
            continue;
        }
        if l.starts_with('n') && l.contains(" [label=\"") {
            assert!(l.ends_with("\"];"), "node line: {l}");
            nodes.push(l.split(' ').next().unwrap().to_string());
            continue;
        }
        if let Some((a, b)) = l.strip_suffix(';').and_then(|e| e.split_once(" -> ")) {
            let a: usize = a.strip_prefix('n').unwrap().parse().unwrap();
            let b: usize = b.strip_prefix('n').unwrap().parse().unwrap();
            edges.push((a, b));
            continue;
        }
        panic!("unexpected DOT line: {l}");
    }
    assert_eq!(nodes.len(), 6);

    let algebra = SemigroupAlgebra::new(
        build(FamilySpec::RectangularBand(2, 2)).unwrap(),
        PrimeField::new(3).unwrap(),
    );
    let ideals = algebra.enumerate_ideals(&Guards::default()).unwrap();
    assert_eq!(edges, ideal_lattice(&ideals).unwrap());
}

#[test]
fn verify_paper_json_format() {
    let out = congkit_cmd(&["verify-paper", "--format", "json", "--primes", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<congkit_cli::verify::RowResult> =
        serde_json::from_slice(&out.stdout).expect("valid JSON rows");
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r.pass));
}

#[test]
fn out_flag_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = congkit_cmd(&[
        "semigroup", "--family", "two-semilattice", "--format", "json",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report: SemigroupReport =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.n, 2);
}
