//! One test per acceptance criterion. Each prints the same pass/fail line
//! the `check` subcommand emits, then asserts it.
//!
//! Run with `--nocapture` to see the lines for passing criteria too.

use liegiambelli_cli::check::run_criterion;
use liegiambelli_core::DEFAULT_MAX_CELLS;

fn criterion(index: usize) {
    let result = run_criterion(index, DEFAULT_MAX_CELLS);
    println!("{}", result.line());
    assert!(result.pass, "{}", result.line());
}

#[test]
fn criterion_01_worked_examples() {
    criterion(1);
}

#[test]
fn criterion_02_class_tables() {
    criterion(2);
}

#[test]
fn criterion_03_integrality() {
    criterion(3);
}

#[test]
fn criterion_04_hall_witt() {
    criterion(4);
}

#[test]
fn criterion_05_pbw() {
    criterion(5);
}

#[test]
fn criterion_06_duality() {
    criterion(6);
}

#[test]
fn criterion_07_depth_counts() {
    criterion(7);
}

#[test]
fn criterion_08_dimension_bounds() {
    criterion(8);
}

#[test]
fn criterion_09_defect_enumeration() {
    criterion(9);
}

#[test]
fn criterion_10_ring_properties() {
    criterion(10);
}
