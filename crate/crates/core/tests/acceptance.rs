//! Acceptance suite: one integration test per verification criterion, at
//! full scale. Each test prints its PASS/FAIL line; `cargo test` fails if
//! any criterion fails. Criterion 13 additionally runs the installed CLI
//! twice and compares the report bytes end to end.

use rankone::verify::{run_criterion, Tier};

fn run(id: usize) {
    let rep = run_criterion(id, Tier::Full);
    println!(
        "{:>2} {} {} | {}",
        rep.id,
        if rep.passed { "PASS" } else { "FAIL" },
        rep.name,
        rep.summary
    );
    assert!(
        rep.passed,
        "criterion {id} ({}) failed: {}",
        rep.name, rep.summary
    );
}

#[test]
fn criterion_01_catalog_fidelity() {
    run(1);
}

#[test]
fn criterion_02_jacobi_oracle_triangle() {
    run(2);
}

#[test]
fn criterion_03_spherical_normalisation() {
    run(3);
}

#[test]
fn criterion_04_hypergeometric_agreement() {
    run(4);
}

#[test]
fn criterion_05_dimension_anchors() {
    run(5);
}

#[test]
fn criterion_06_decay_exponents() {
    run(6);
}

#[test]
fn criterion_07_asymptotic_residual() {
    run(7);
}

#[test]
fn criterion_08_route_equivalence() {
    run(8);
}

#[test]
fn criterion_09_series_matrix() {
    run(9);
}

#[test]
fn criterion_10_logarithmic_divergence() {
    run(10);
}

#[test]
fn criterion_11_trig_closed_forms() {
    run(11);
}

#[test]
fn criterion_12_expansion_residual() {
    run(12);
}

#[test]
fn criterion_13_deterministic_report() {
    run(13);
    // end to end: two consecutive CLI runs must produce identical bytes
    let exe = env!("CARGO_BIN_EXE_rankone");
    let run_cli = || {
        let out = std::process::Command::new(exe)
            .args(["verify", "--quick"])
            .output()
            .expect("verify runs");
        (out.status.code(), out.stdout)
    };
    let (code1, bytes1) = run_cli();
    let (code2, bytes2) = run_cli();
    assert_eq!(code1, Some(0), "first verify --quick run failed");
    assert_eq!(code2, Some(0), "second verify --quick run failed");
    assert_eq!(bytes1, bytes2, "verify --quick reports differ between runs");
    println!("13 PASS cli double run | {} identical bytes", bytes1.len());
}
