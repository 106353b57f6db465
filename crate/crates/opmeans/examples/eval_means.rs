//! Computes the three weighted means of a positive-definite pair and
//! verifies the Young chain AM >= GM >= HM in the Loewner order.
//!
//! ```bash
//! cargo run -p opmeans --example eval_means
//! ```

use opmeans::hermit::{loewner_compare, DEFAULT_TOL};
use opmeans::means::{arithmetic_mean, geometric_mean, harmonic_mean, Weight};
use opmeans::sampling::{random_hpd, SampleConfig};

fn main() -> opmeans::Result<()> {
    let a = random_hpd(&SampleConfig::new(3, 42))?;
    let b = random_hpd(&SampleConfig::new(3, 43))?;
    let nu = Weight::new(0.3)?;

    let am = arithmetic_mean(&a, &b, nu)?;
    let gm = geometric_mean(&a, &b, nu)?;
    let hm = harmonic_mean(&a, &b, nu)?;

    for (name, m) in [("arithmetic", &am), ("geometric", &gm), ("harmonic", &hm)] {
        let eigs = m.eigh()?.eigenvalues;
        println!("{name:10} mean eigenvalues: {eigs:?}");
    }

    let upper = loewner_compare(&gm, &am, DEFAULT_TOL)?;
    let lower = loewner_compare(&hm, &gm, DEFAULT_TOL)?;
    println!(
        "GM <= AM: {:?} (margin {:.3e})",
        upper.relation, upper.margin_le
    );
    println!(
        "HM <= GM: {:?} (margin {:.3e})",
        lower.relation, lower.margin_le
    );
    Ok(())
}
