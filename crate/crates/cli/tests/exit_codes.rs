//! Every exit status reachable from the command line.

mod common;

use std::fs;

use common::run;
use graph_energy::error::{CliError, ExitStatus};
use graph_energy_core::energy::EnergyError;
use graph_energy_core::proofkit::{CaseTag, CertificateError};
use graph_energy_core::GraphError;

fn star_file(dir: &tempfile::TempDir, n: usize) -> String {
    let mut text = format!("n {n}\n");
    for v in 1..n {
        text.push_str(&format!("0 {v}\n"));
    }
    let path = dir.path().join("star.edges");
    fs::write(&path, text).unwrap();
    format!("file:{}", path.display())
}

#[test]
fn success_paths_exit_zero() {
    for args in [
        &["energy", "cycle:6"][..],
        &["energy", "p6:8", "--xcheck"],
        &["compare", "cycle:9", "p6:9", "--expect", "positive"],
        &["compare", "cycle:18", "p6:18", "--expect", "negative"],
        &["quasi-order", "path:6", "path:6"],
        &["verify-theorem", "8", "20"],
        &["certify", "2mod4", "--grid-points", "64"],
        &["exhaustive-small", "7"],
        &["paper-constants"],
        &["--help"],
    ] {
        let r = run(args);
        assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
    }
}

#[test]
fn energy_of_hexagon_prints_eight() {
    let r = run(&["energy", "cycle:6"]);
    assert!(r.stdout.contains("8.000000"), "{}", r.stdout);
}

#[test]
fn contradicted_expectation_exits_one() {
    let r = run(&["compare", "cycle:10", "p6:10", "--expect", "negative"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("violation"), "{}", r.stderr);
    // the report is still printed
    assert!(r.stdout.contains("positive"));
}

#[test]
fn usage_and_input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad_edge = dir.path().join("bad.edges");
    fs::write(&bad_edge, "n 3\n0 1\n1 5\n").unwrap();
    let split = dir.path().join("split.edges");
    fs::write(&split, "n 4\n0 1\n2 3\n").unwrap();
    let bad_edge = format!("file:{}", bad_edge.display());
    let split = format!("file:{}", split.display());
    for args in [
        &["energy", "bogus"][..],
        &["energy", "cycle:x"],
        &["energy", "cycle:2"],
        &["energy", "file:/nonexistent/graph.edges"],
        &["energy", &bad_edge],
        &["energy", &split],
        &["compare", "cycle:8", "p6:9"],
        &["quasi-order", "cycle:7", "cycle:7"],
        &["verify-theorem", "7", "20"],
        &["verify-theorem", "20", "16"],
        &["verify-theorem", "16", "401"],
        &["certify", "5mod4"],
        &["certify", "all", "--samples", "10"],
        &["certify", "2mod4", "--samples", "11"],
        &["exhaustive-small", "9"],
        &["exhaustive-small", "6"],
        &["energy", "cycle:6", "--tol", "1"],
        &["energy", "cycle:6", "--threads", "0"],
        &["compare", "cycle:9", "p6:9", "--expect", "maybe"],
        &["frobnicate"],
        &[],
    ] {
        let r = run(args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stderr);
    }
}

#[test]
fn unreachable_accuracy_exits_three() {
    // a star on 120 vertices needs more than 1e-11 of eigenvalue slack
    let dir = tempfile::tempdir().unwrap();
    let spec = star_file(&dir, 120);
    let r = run(&["energy", &spec]);
    assert_eq!(r.code, 3, "{}", r.stderr);
    assert!(r.stderr.contains("numerical"), "{}", r.stderr);
    // a smaller star is fine
    let spec = star_file(&dir, 20);
    assert_eq!(run(&["energy", &spec]).code, 0);
}

#[test]
fn error_classes_map_to_statuses() {
    let cases: Vec<(CliError, ExitStatus)> = vec![
        (GraphError::MalformedSpec("x".into()).into(), ExitStatus::Usage),
        (GraphError::Disconnected.into(), ExitStatus::Usage),
        (EnergyError::InvalidTolerance(1.0).into(), ExitStatus::Usage),
        (
            EnergyError::NoConvergence {
                rotations: 1,
                partial: vec![],
            }
            .into(),
            ExitStatus::Numerical,
        ),
        (
            EnergyError::QuadratureFailed {
                value: 0.0,
                err_estimate: 1.0,
            }
            .into(),
            ExitStatus::Numerical,
        ),
        (
            CertificateError::Refused {
                case: CaseTag::TwoMod4,
                check: "q",
                n: 10,
                x: 1.0,
                value: 1.0,
            }
            .into(),
            ExitStatus::Violation,
        ),
        (
            CertificateError::Quadrature {
                what: "first",
                value: 0.0,
                err: 1.0,
            }
            .into(),
            ExitStatus::Numerical,
        ),
        (CertificateError::BadScanRange.into(), ExitStatus::Usage),
    ];
    for (e, want) in cases {
        assert_eq!(e.status(), want, "{e}");
    }
    assert_eq!(
        [ExitStatus::Success, ExitStatus::Violation, ExitStatus::Usage, ExitStatus::Numerical]
            .map(ExitStatus::code),
        [0, 1, 2, 3]
    );
}
