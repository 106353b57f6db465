//! Reproducible random generation of positive-definite matrices,
//! Loewner-ordered pairs, commuting pairs, and scalar grids.
//!
//! All generators are pure functions of their `SampleConfig`: the RNG is
//! ChaCha8 seeded from the config, so identical configs give bit-identical
//! output on every platform and under any parallel schedule.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hermit::{ComplexMatrix, HermitianMatrix};

#[derive(Debug, Clone, Copy)]
pub struct SampleConfig {
    pub dim: usize,
    pub seed: u64,
    pub cond_cap: f64,
    pub eigenvalue_range: (f64, f64),
}

impl SampleConfig {
    pub fn new(dim: usize, seed: u64) -> Self {
        SampleConfig {
            dim,
            seed,
            cond_cap: 1e8,
            eigenvalue_range: (0.1, 10.0),
        }
    }

    fn validate(&self) -> Result<()> {
        let (lo, hi) = self.eigenvalue_range;
        if self.dim < 1 {
            return Err(Error::InvalidParameter("dim must be >= 1".into()));
        }
        if !(lo > 0.0 && hi >= lo) {
            return Err(Error::InvalidParameter(format!(
                "eigenvalue range [{lo}, {hi}] must satisfy 0 < lo <= hi"
            )));
        }
        Ok(())
    }
}

/// SplitMix64 step, used to derive per-trial seeds from a master seed so
/// that trial i is independent of execution order.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master
        .wrapping_add(0x9e3779b97f4a7c15)
        .wrapping_add(index.wrapping_mul(0xbf58476d1ce4e5b9));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn rng_for(cfg: &SampleConfig, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(
        cfg.seed,
        (cfg.dim as u64).wrapping_mul(0x100).wrapping_add(stream),
    ))
}

fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller; two uniform draws per normal keeps the stream simple.
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Random unitary from orthonormalized complex Gaussian columns
/// (modified Gram-Schmidt).
fn random_unitary(dim: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let n = dim;
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| Complex64::new(standard_normal(rng), standard_normal(rng)))
                .collect()
        })
        .collect();
    for j in 0..n {
        for k in 0..j {
            let proj: Complex64 = (0..n).map(|i| cols[k][i].conj() * cols[j][i]).sum();
            for i in 0..n {
                let c = cols[k][i];
                cols[j][i] -= proj * c;
            }
        }
        let norm: f64 = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in cols[j].iter_mut() {
            *z /= norm;
        }
    }
    let mut q = ComplexMatrix::zeros(n);
    for j in 0..n {
        for i in 0..n {
            q[(i, j)] = cols[j][i];
        }
    }
    q
}

fn assemble(q: &ComplexMatrix, eigs: &[f64]) -> HermitianMatrix {
    let n = eigs.len();
    let mut out = ComplexMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..n {
                acc += q[(i, k)] * q[(j, k)].conj() * eigs[k];
            }
            out[(i, j)] = acc;
        }
    }
    out.hermitize()
}

/// Q diag(lambda) Q* with lambda uniform in the configured range; the
/// smallest eigenvalue is raised if needed to respect `cond_cap`.
pub fn random_hpd(cfg: &SampleConfig) -> Result<HermitianMatrix> {
    cfg.validate()?;
    let mut rng = rng_for(cfg, 0);
    Ok(random_hpd_with(cfg, &mut rng))
}

fn random_hpd_with(cfg: &SampleConfig, rng: &mut ChaCha8Rng) -> HermitianMatrix {
    let (lo, hi) = cfg.eigenvalue_range;
    let q = random_unitary(cfg.dim, rng);
    let mut eigs: Vec<f64> = (0..cfg.dim)
        .map(|_| if lo == hi { lo } else { rng.gen_range(lo..hi) })
        .collect();
    let max = eigs.iter().cloned().fold(f64::MIN, f64::max);
    let floor = max / cfg.cond_cap;
    for e in eigs.iter_mut() {
        if *e < floor {
            *e = floor;
        }
    }
    assemble(&q, &eigs)
}

/// (A, B) with A <= B exactly by construction: B = A + P for a random PSD
/// perturbation P drawn with eigenvalues in [0, hi].
pub fn random_ordered_pair(cfg: &SampleConfig) -> Result<(HermitianMatrix, HermitianMatrix)> {
    cfg.validate()?;
    let mut rng = rng_for(cfg, 1);
    let a = random_hpd_with(cfg, &mut rng);
    let (_, hi) = cfg.eigenvalue_range;
    let q = random_unitary(cfg.dim, &mut rng);
    let eigs: Vec<f64> = (0..cfg.dim).map(|_| rng.gen_range(0.0..hi)).collect();
    let p = assemble(&q, &eigs);
    let b = a.add(&p)?;
    Ok((a, b))
}

/// Commuting pair sharing one random eigenbasis.
pub fn random_commuting_pair(cfg: &SampleConfig) -> Result<(HermitianMatrix, HermitianMatrix)> {
    let (a, b, _, _) = random_commuting_pair_with_spectra(cfg)?;
    Ok((a, b))
}

/// Same as `random_commuting_pair` but also hands back the shared-basis
/// spectra, which oracle checks need when eigenvalues collide.
pub fn random_commuting_pair_with_spectra(
    cfg: &SampleConfig,
) -> Result<(HermitianMatrix, HermitianMatrix, Vec<f64>, Vec<f64>)> {
    cfg.validate()?;
    let mut rng = rng_for(cfg, 2);
    let (lo, hi) = cfg.eigenvalue_range;
    let q = random_unitary(cfg.dim, &mut rng);
    let draw = |rng: &mut ChaCha8Rng| -> Vec<f64> {
        (0..cfg.dim)
            .map(|_| if lo == hi { lo } else { rng.gen_range(lo..hi) })
            .collect()
    };
    let a_eigs = draw(&mut rng);
    let b_eigs = draw(&mut rng);
    Ok((assemble(&q, &a_eigs), assemble(&q, &b_eigs), a_eigs, b_eigs))
}

/// Geometrically spaced grid with exact endpoints.
pub fn log_grid(t_lo: f64, t_hi: f64, n: usize) -> Result<Vec<f64>> {
    if !(t_lo > 0.0 && t_hi > t_lo) || n < 2 {
        return Err(Error::InvalidParameter(format!(
            "log_grid: need 0 < t_lo < t_hi and n >= 2, got ({t_lo}, {t_hi}, {n})"
        )));
    }
    let lo_ln = t_lo.ln();
    let hi_ln = t_hi.ln();
    let mut grid: Vec<f64> = (0..n)
        .map(|i| (lo_ln + (hi_ln - lo_ln) * i as f64 / (n - 1) as f64).exp())
        .collect();
    grid[0] = t_lo;
    grid[n - 1] = t_hi;
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermit::{loewner_compare, LoewnerRelation, DEFAULT_TOL};

    #[test]
    fn hpd_dim1_range() {
        let m = random_hpd(&SampleConfig::new(1, 42)).unwrap();
        let x = m.get(0, 0).re;
        assert!((0.1..=10.0).contains(&x));
    }

    #[test]
    fn hpd_deterministic() {
        let cfg = SampleConfig::new(4, 99);
        let a = random_hpd(&cfg).unwrap();
        let b = random_hpd(&cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn hpd_is_pd_in_range() {
        for seed in 0..20 {
            let m = random_hpd(&SampleConfig::new(3, seed)).unwrap();
            let v = m.psd_verdict(DEFAULT_TOL).unwrap();
            assert!(v.is_psd);
            assert!(v.lambda_min >= 0.1 - 1e-12, "lambda_min {}", v.lambda_min);
        }
    }

    #[test]
    fn ordered_pair_is_ordered() {
        for seed in 0..20 {
            let (a, b) = random_ordered_pair(&SampleConfig::new(4, seed)).unwrap();
            let v = loewner_compare(&a, &b, DEFAULT_TOL).unwrap();
            assert!(matches!(v.relation, LoewnerRelation::Le | LoewnerRelation::Eq));
            let back = loewner_compare(&b, &a, DEFAULT_TOL).unwrap();
            assert!(matches!(back.relation, LoewnerRelation::Ge | LoewnerRelation::Eq));
        }
    }

    #[test]
    fn commuting_pair_commutes() {
        for seed in 0..10 {
            let (a, b) = random_commuting_pair(&SampleConfig::new(4, seed)).unwrap();
            let ab = a.as_complex().mul(&b.as_complex()).unwrap();
            let ba = b.as_complex().mul(&a.as_complex()).unwrap();
            let mut diff = 0.0_f64;
            for i in 0..4 {
                for j in 0..4 {
                    diff += (ab[(i, j)] - ba[(i, j)]).norm_sqr();
                }
            }
            assert!(diff.sqrt() <= 1e-12 * a.fro_norm() * b.fro_norm());
        }
    }

    #[test]
    fn log_grid_examples() {
        let g = log_grid(1.0, 100.0, 3).unwrap();
        assert_eq!(g[0], 1.0);
        assert!((g[1] - 10.0).abs() < 1e-12);
        assert_eq!(g[2], 100.0);

        let g = log_grid(1e-4, 1e4, 9).unwrap();
        assert_eq!(g[0], 1e-4);
        assert_eq!(g[8], 1e4);
        assert!((g[4] - 1.0).abs() < 1e-12);

        assert!(log_grid(0.0, 1.0, 5).is_err());
        assert!(log_grid(1.0, 2.0, 1).is_err());
    }

    #[test]
    fn derive_seed_spreads() {
        let s0 = derive_seed(7, 0);
        let s1 = derive_seed(7, 1);
        assert_ne!(s0, s1);
        assert_eq!(s0, derive_seed(7, 0));
    }
}
