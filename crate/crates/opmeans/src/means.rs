//! The three weighted operator means and their scalar representing
//! functions. The geometric mean uses the explicit formula
//! A^{1/2} (A^{-1/2} B A^{-1/2})^nu A^{1/2} via spectral calculus.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hermit::{HermitianMatrix, SpectralDecomposition, COND_CAP};

/// Relative eigenvalue floor below which an input counts as singular.
const SINGULAR_FLOOR: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MeanKind {
    Arithmetic,
    Geometric,
    Harmonic,
}

impl MeanKind {
    pub fn short_name(self) -> &'static str {
        match self {
            MeanKind::Arithmetic => "am",
            MeanKind::Geometric => "gm",
            MeanKind::Harmonic => "hm",
        }
    }
}

impl std::str::FromStr for MeanKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "am" | "arithmetic" => Ok(MeanKind::Arithmetic),
            "gm" | "geometric" => Ok(MeanKind::Geometric),
            "hm" | "harmonic" => Ok(MeanKind::Harmonic),
            other => Err(Error::InvalidParameter(format!("unknown mean kind: {other}"))),
        }
    }
}

/// Weight parameter nu in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Weight(f64);

impl Weight {
    pub fn new(nu: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&nu) {
            return Err(Error::InvalidParameter(format!(
                "weight nu = {nu} outside [0, 1]"
            )));
        }
        Ok(Weight(nu))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub const HALF: Weight = Weight(0.5);
}

fn checked_pd_decomposition(m: &HermitianMatrix) -> Result<SpectralDecomposition> {
    let d = m.eigh()?;
    let lambda_min = d.eigenvalues[0];
    let lambda_max = *d.eigenvalues.last().unwrap();
    if lambda_min <= 0.0 {
        return Err(Error::NotPositiveDefinite { lambda_min });
    }
    if lambda_min <= SINGULAR_FLOOR * lambda_max {
        return Err(Error::NumericallySingular {
            lambda_min,
            lambda_max,
        });
    }
    if lambda_max / lambda_min > COND_CAP {
        return Err(Error::IllConditioned {
            cond: lambda_max / lambda_min,
            cap: COND_CAP,
        });
    }
    Ok(d)
}

fn check_pd_pair(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
) -> Result<(SpectralDecomposition, SpectralDecomposition)> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok((checked_pd_decomposition(a)?, checked_pd_decomposition(b)?))
}

/// (1 - nu) A + nu B.
pub fn arithmetic_mean(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    nu: Weight,
) -> Result<HermitianMatrix> {
    check_pd_pair(a, b)?;
    let nu = nu.value();
    if nu == 0.0 {
        return Ok(a.clone());
    }
    if nu == 1.0 {
        return Ok(b.clone());
    }
    a.scale(1.0 - nu).add(&b.scale(nu))
}

fn map_spectrum(d: &SpectralDecomposition, f: impl Fn(f64) -> f64) -> HermitianMatrix {
    let mapped: Vec<f64> = d.eigenvalues.iter().map(|&l| f(l)).collect();
    d.reconstruct_with(&mapped)
}

/// A #_nu B = A^{1/2} (A^{-1/2} B A^{-1/2})^nu A^{1/2}. The inner product
/// and the final result are Hermitized. Endpoint weights return A or B
/// exactly without spectral computation.
pub fn geometric_mean(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    nu: Weight,
) -> Result<HermitianMatrix> {
    let (d_a, _) = check_pd_pair(a, b)?;
    let nu = nu.value();
    if nu == 0.0 {
        return Ok(a.clone());
    }
    if nu == 1.0 {
        return Ok(b.clone());
    }
    let a_sqrt = map_spectrum(&d_a, f64::sqrt);
    let a_inv_sqrt = map_spectrum(&d_a, |l| 1.0 / l.sqrt());
    let inner = a_inv_sqrt
        .as_complex()
        .mul(&b.as_complex())?
        .mul(&a_inv_sqrt.as_complex())?
        .hermitize();
    let inner_pow = inner.powf(nu)?;
    Ok(a_sqrt
        .as_complex()
        .mul(&inner_pow.as_complex())?
        .mul(&a_sqrt.as_complex())?
        .hermitize())
}

/// {(1 - nu) A^{-1} + nu B^{-1}}^{-1}.
pub fn harmonic_mean(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    nu: Weight,
) -> Result<HermitianMatrix> {
    let (d_a, d_b) = check_pd_pair(a, b)?;
    let nu = nu.value();
    if nu == 0.0 {
        return Ok(a.clone());
    }
    if nu == 1.0 {
        return Ok(b.clone());
    }
    let a_inv = map_spectrum(&d_a, |l| 1.0 / l);
    let b_inv = map_spectrum(&d_b, |l| 1.0 / l);
    let sum = a_inv.scale(1.0 - nu).add(&b_inv.scale(nu))?;
    sum.inverse()
}

pub fn mean(
    kind: MeanKind,
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    nu: Weight,
) -> Result<HermitianMatrix> {
    match kind {
        MeanKind::Arithmetic => arithmetic_mean(a, b, nu),
        MeanKind::Geometric => geometric_mean(a, b, nu),
        MeanKind::Harmonic => harmonic_mean(a, b, nu),
    }
}

/// Scalar representing function f_m(t) = 1 m t of the mean `kind`:
/// arithmetic (1-nu)+nu t, geometric t^nu, harmonic {(1-nu)+nu/t}^{-1}.
pub fn representing_function(kind: MeanKind, nu: Weight, t: f64) -> Result<f64> {
    if t <= 0.0 {
        return Err(Error::Domain {
            function: "representing_function".into(),
            eigenvalue: t,
        });
    }
    let nu = nu.value();
    Ok(match kind {
        MeanKind::Arithmetic => (1.0 - nu) + nu * t,
        MeanKind::Geometric => (nu * t.ln()).exp(),
        MeanKind::Harmonic => 1.0 / ((1.0 - nu) + nu / t),
    })
}
