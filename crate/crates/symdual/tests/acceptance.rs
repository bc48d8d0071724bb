//! One test per acceptance criterion; each prints a PASS/FAIL line.

use symdual::verify::{run_criterion, DEFAULT_SEED};

fn criterion(id: u32) {
    let report = run_criterion(id, DEFAULT_SEED);
    println!("{report}");
    for d in &report.details {
        println!("    {d}");
    }
    assert!(report.passed, "criterion {id} failed: {:#?}", report.details);
}

#[test]
fn criterion_01_transform_tables() {
    criterion(1);
}

#[test]
fn criterion_02_round_trips() {
    criterion(2);
}

#[test]
fn criterion_03_reciprocal_growth() {
    criterion(3);
}

#[test]
fn criterion_04_one_point_dimension_grid() {
    criterion(4);
}

#[test]
fn criterion_05_product_rules() {
    criterion(5);
}

#[test]
fn criterion_06_ideal_iff_differentially_closed() {
    criterion(6);
}

#[test]
fn criterion_07_intersection_sum() {
    criterion(7);
}

#[test]
fn criterion_08_alpha_beta_duality() {
    criterion(8);
}

#[test]
fn criterion_09_jet_index() {
    criterion(9);
}

#[test]
fn criterion_10_additivity() {
    criterion(10);
}

#[test]
fn criterion_11_closed_forms() {
    criterion(11);
}

#[test]
fn criterion_12_jms_pattern() {
    criterion(12);
}

#[test]
fn criterion_13_monomial_suite() {
    criterion(13);
}
