//! Eigendecomposition and spectral calculus on Hermitian matrices:
//! square root, inverse, PSD verdicts and Loewner comparison.
//!
//! ```bash
//! cargo run -p opmeans --example spectral_toolkit
//! ```

use opmeans::hermit::{loewner_compare, HermitianMatrix, DEFAULT_TOL};

fn main() -> opmeans::Result<()> {
    let h = HermitianMatrix::from_real(2, &[2.0, 1.0, 1.0, 2.0])?;

    let d = h.eigh()?;
    println!("eigenvalues of [[2,1],[1,2]]: {:?}", d.eigenvalues);

    let s = h.sqrt()?;
    println!(
        "sqrt diagonal: {:.6}, off-diagonal: {:.6}",
        s.get(0, 0).re,
        s.get(0, 1).re
    );

    let inv = h.inverse()?;
    let product = inv.as_complex().mul(&h.as_complex())?;
    println!("inverse check (H^-1 H)[0][0] = {:.12}", product[(0, 0)].re);

    let indefinite = HermitianMatrix::from_real(2, &[1.0, 2.0, 2.0, 1.0])?;
    let verdict = indefinite.psd_verdict(DEFAULT_TOL)?;
    println!(
        "[[1,2],[2,1]] PSD: {} (lambda_min = {})",
        verdict.is_psd, verdict.lambda_min
    );

    let a = HermitianMatrix::diagonal(&[1.0, 2.0]);
    let b = HermitianMatrix::diagonal(&[2.0, 3.0]);
    let cmp = loewner_compare(&a, &b, DEFAULT_TOL)?;
    println!(
        "diag(1,2) vs diag(2,3): {:?}, margin_le = {:?}",
        cmp.relation, cmp.margin_le
    );
    Ok(())
}
