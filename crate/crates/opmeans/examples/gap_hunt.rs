//! Hunts the gap region 1 < r < 2 where the r-combination bounds fail in
//! both directions: a scalar scan over r, then a concrete operator
//! counter-example, then a randomized certification at a safe r.
//!
//! ```bash
//! cargo run -p opmeans --example gap_hunt
//! ```

use opmeans::catalog::ParamValues;
use opmeans::hermit::DEFAULT_TOL;
use opmeans::search::{
    certify_statement, default_t_grid, find_operator_counterexample, scan_gap_scalar, PairFamily,
};

fn main() -> opmeans::Result<()> {
    let r_grid = [1.1, 1.25, 1.5, 1.75, 1.9];
    for finding in scan_gap_scalar(&r_grid, &default_t_grid())? {
        let pos = finding.positive_witness.map(|w| (w.t, w.value));
        let neg = finding.negative_witness.map(|w| (w.t, w.value));
        println!("r = {:<5} positive {:?} negative {:?}", finding.r, pos, neg);
    }

    let witness = find_operator_counterexample(
        "PROP11_I",
        &[ParamValues::r(1.5)],
        200,
        &[1, 2, 3],
        0,
        DEFAULT_TOL,
    )?;
    match witness {
        Some(w) => println!(
            "\noperator counter-example at r = 1.5: dim {}, trial seed {}, margin {:.6}",
            w.a.dim(),
            w.trial_seed,
            w.result.margin
        ),
        None => println!("\nno counter-example found (unexpected at r = 1.5)"),
    }

    let report = certify_statement(
        "PROP11_I",
        &[ParamValues::r(2.0), ParamValues::r(5.0)],
        200,
        &[1, 2, 3, 4],
        0,
        DEFAULT_TOL,
        PairFamily::Unordered,
    )?;
    println!(
        "certification at r >= 2: holds {} violated {} min margin {:?}",
        report.holds, report.violated, report.min_margin
    );
    Ok(())
}
