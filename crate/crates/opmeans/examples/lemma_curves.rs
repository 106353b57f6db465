//! Samples the scalar proof functions on a log grid and reports their
//! sign behavior, including the inflection point of the k function.
//!
//! ```bash
//! cargo run -p opmeans --example lemma_curves
//! ```

use opmeans::sampling::log_grid;
use opmeans::scalarfn::{gap_expr, inflection_t, lemma_f, lemma_g, lemma_h};

fn sign_summary(name: &str, values: &[(f64, f64)]) {
    let pos = values.iter().filter(|(_, v)| *v > 1e-12).count();
    let neg = values.iter().filter(|(_, v)| *v < -1e-12).count();
    let (t_min, min) = values
        .iter()
        .copied()
        .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
        .unwrap();
    println!("{name:8} positive at {pos:4} points, negative at {neg:4}, min {min:+.6} at t = {t_min:.4}");
}

fn main() -> opmeans::Result<()> {
    let grid = log_grid(1e-4, 1e4, 201)?;

    // each of f, g, h is nonnegative on its branch regime (t >= 1 for
    // nu <= 1/2) but not on all of (0, inf), as the counts below show
    let nu = 0.3;
    let eval = |f: &dyn Fn(f64, f64) -> opmeans::Result<f64>| -> opmeans::Result<Vec<(f64, f64)>> {
        grid.iter().map(|&t| Ok((t, f(nu, t)?))).collect()
    };
    sign_summary("lemma_f", &eval(&lemma_f)?);
    sign_summary("lemma_g", &eval(&lemma_g)?);
    sign_summary("lemma_h", &eval(&lemma_h)?);

    // the gap expression changes sign for 1 < r < 2
    let gap: Vec<(f64, f64)> = grid
        .iter()
        .map(|&t| Ok((t, gap_expr(1.5, t)?)))
        .collect::<opmeans::Result<_>>()?;
    sign_summary("gap", &gap);

    println!(
        "k inflection point at nu = 0.3: t = {:.6}",
        inflection_t(0.3)?
    );
    println!(
        "k inflection point near nu = 1/2 (series branch): t = {:.12}",
        inflection_t(0.5 + 1e-9)?
    );
    Ok(())
}
