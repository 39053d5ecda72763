//! Acceptance suite: every criterion at its pinned bound, one pass/fail
//! line per criterion (run with `--nocapture` to see the lines).

use trmap_cli::suites::{
    big_phi_bijection_check, chu_vandermonde_check, counting_check, evolution_check,
    fixtures_check, isomorphism_check, lambda_round_trip_check, orientation_oracle_check,
    orientation_round_trip_check, phi_psi_check, prefix_propositions_check, psi_phi_check,
    xi_inv_round_trip_check, xi_round_trip_check, Check,
};

fn report(criterion: &str, check: Check) {
    println!("criterion {criterion}: {}", check.line());
    assert!(check.pass, "criterion {criterion}: {}", check.line());
}

#[test]
fn criterion_1_counting_theorem() {
    // 1, 2, 10, 70, 588, 5544, 56628 tree-rooted maps for n = 0..6.
    report(
        "1 (counting, n <= 6)",
        counting_check(6, &[1, 2, 10, 70, 588, 5544, 56628]),
    );
}

#[test]
fn criterion_2_chu_vandermonde() {
    report("2 (Chu-Vandermonde, n <= 10)", chu_vandermonde_check(10));
}

#[test]
fn criterion_3_round_trips() {
    report("3a (xi of xi-inv, n <= 5)", xi_round_trip_check(5));
    report(
        "3b (xi-inv of xi over enumerated maps, n <= 4)",
        xi_inv_round_trip_check(4),
    );
    report(
        "3c (gamma/delta round trips, n <= 5)",
        orientation_round_trip_check(5),
    );
    report("3d (psi of phi, n <= 5)", psi_phi_check(5));
    report("3e (phi of psi over pairs, n <= 4)", phi_psi_check(4));
    report("3f (lambda round trip, n <= 5)", lambda_round_trip_check(5));
}

#[test]
fn criterion_4_main_bijection() {
    report("4 (main bijection, n <= 4)", big_phi_bijection_check(4));
}

#[test]
fn criterion_5_isomorphism_theorem() {
    report("5 (isomorphism theorem, n <= 5)", isomorphism_check(5));
}

#[test]
fn criterion_6_structural_propositions() {
    report(
        "6a (structural propositions, |w| <= 8)",
        prefix_propositions_check(8),
    );
    report("6b (evolution lemmas, |w| <= 7)", evolution_check(7));
}

#[test]
fn criterion_7_word_fixtures() {
    report("7 (word fixtures)", fixtures_check());
}

#[test]
fn criterion_8_orientation_oracle() {
    report("8 (orientation oracle, n <= 3)", orientation_oracle_check(3));
}
