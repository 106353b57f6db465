//! Reproducible sampling: positive-definite draws, Loewner-ordered pairs,
//! commuting pairs, and matrix JSON round-trips.
//!
//! ```bash
//! cargo run -p opmeans --example sample_matrices
//! ```

use opmeans::hermit::{loewner_compare, MatrixJson, DEFAULT_TOL};
use opmeans::sampling::{
    random_commuting_pair, random_hpd, random_ordered_pair, SampleConfig,
};

fn main() -> opmeans::Result<()> {
    let cfg = SampleConfig::new(3, 99);

    let h = random_hpd(&cfg)?;
    let again = random_hpd(&cfg)?;
    println!(
        "same seed, same matrix: {}",
        h.sub(&again)?.fro_norm() == 0.0
    );
    println!("eigenvalues: {:?}", h.eigh()?.eigenvalues);

    let (lo, hi) = random_ordered_pair(&cfg)?;
    let cmp = loewner_compare(&lo, &hi, DEFAULT_TOL)?;
    println!("ordered pair relation: {:?}", cmp.relation);

    let (a, b) = random_commuting_pair(&cfg)?;
    let ab = a.as_complex().mul(&b.as_complex())?;
    let ba = b.as_complex().mul(&a.as_complex())?;
    let mut comm = ab.clone();
    for i in 0..3 {
        for j in 0..3 {
            comm[(i, j)] = ab[(i, j)] - ba[(i, j)];
        }
    }
    println!("commutator norm: {:.3e}", comm.fro_norm());

    let json = serde_json::to_string(&MatrixJson::from_matrix(&h)).unwrap();
    let back: MatrixJson = serde_json::from_str(&json).unwrap();
    println!(
        "JSON round-trip exact: {}",
        back.to_matrix()?.sub(&h)?.fro_norm() == 0.0
    );
    Ok(())
}
