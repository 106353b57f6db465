//! Walks the inequality catalog: lists every statement, checks a scalar
//! and an operator instance, and runs a representing-function consistency
//! probe for GM <= AM.
//!
//! ```bash
//! cargo run -p opmeans --example catalog_check
//! ```

use opmeans::catalog::{
    check_operator_instance, check_scalar_instance, kubo_ando_consistency, list_statements,
    statement, ParamValues,
};
use opmeans::hermit::{HermitianMatrix, DEFAULT_TOL};
use opmeans::means::{MeanKind, Weight};
use opmeans::sampling::log_grid;

fn main() -> opmeans::Result<()> {
    for stmt in list_statements() {
        println!("{:12} {}", stmt.id, stmt.description);
    }

    // scalar instance: A := 1, B := t
    let prop11 = statement("PROP11_I")?;
    let scalar = check_scalar_instance(&prop11, &ParamValues::r(2.0), 4.0, DEFAULT_TOL)?;
    println!(
        "\nPROP11_I at t = 4, r = 2: {:?}, margin {:.6}",
        scalar.verdict, scalar.margin
    );

    // operator instance on a commuting pair
    let a = HermitianMatrix::diagonal(&[1.0, 2.0]);
    let b = HermitianMatrix::diagonal(&[3.0, 5.0]);
    let young = statement("YOUNG_AM_GM")?;
    let op = check_operator_instance(&young, &a, &b, &ParamValues::nu(0.25), DEFAULT_TOL)?;
    println!(
        "YOUNG_AM_GM on diag pair: {:?}, margin {:.6}",
        op.verdict, op.margin
    );

    let grid = log_grid(1e-3, 1e3, 301)?;
    let report = kubo_ando_consistency(
        MeanKind::Geometric,
        MeanKind::Arithmetic,
        Weight::new(0.25)?,
        Weight::new(0.25)?,
        &grid,
        50,
        &[1, 2, 3],
        7,
        DEFAULT_TOL,
    )?;
    println!(
        "GM vs AM at nu = 1/4: scalar dominant = {}, operator violations = {}/{}, inconsistent = {}",
        report.scalar_dominant, report.operator_violations, report.operator_trials,
        report.inconsistent
    );
    Ok(())
}
