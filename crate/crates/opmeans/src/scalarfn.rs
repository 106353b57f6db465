//! Scalar functions backing the operator inequalities: the gap expression
//! in the region 1 < r < 2, the three lemma functions, the r-combination
//! k_{r,nu}, and the inflection point of f_nu. Powers t^nu are computed as
//! exp(nu ln t) for uniform accuracy across log grids.

use crate::error::{Error, Result};

fn check_t(t: f64, function: &str) -> Result<()> {
    if t <= 0.0 || !t.is_finite() {
        return Err(Error::Domain {
            function: function.into(),
            eigenvalue: t,
        });
    }
    Ok(())
}

fn check_nu(nu: f64, function: &str) -> Result<()> {
    if !(0.0..=1.0).contains(&nu) {
        return Err(Error::InvalidParameter(format!(
            "{function}: nu = {nu} outside [0, 1]"
        )));
    }
    Ok(())
}

pub fn powt(t: f64, p: f64) -> f64 {
    (p * t.ln()).exp()
}

/// 2t/(t+1) - r sqrt(t) - (1-r)(t+1)/2. Nonnegative for r >= 2 and
/// nonpositive for r <= 1; takes both signs in the gap region 1 < r < 2.
pub fn gap_expr(r: f64, t: f64) -> Result<f64> {
    check_t(t, "gap_expr")?;
    Ok(2.0 * t / (t + 1.0) - r * t.sqrt() - (1.0 - r) * (t + 1.0) / 2.0)
}

/// f_nu(t) = t^nu - sqrt(t) - (nu - 1/2)(t - 1).
pub fn lemma_f(nu: f64, t: f64) -> Result<f64> {
    check_t(t, "lemma_f")?;
    check_nu(nu, "lemma_f")?;
    Ok(powt(t, nu) - t.sqrt() - (nu - 0.5) * (t - 1.0))
}

/// g_nu(t) = (1-nu) + nu t + t/((1-nu)t + nu) - 2 t^nu.
pub fn lemma_g(nu: f64, t: f64) -> Result<f64> {
    check_t(t, "lemma_g")?;
    check_nu(nu, "lemma_g")?;
    Ok((1.0 - nu) + nu * t + t / ((1.0 - nu) * t + nu) - 2.0 * powt(t, nu))
}

/// h_nu(t) = (1-nu) + nu t - {(1-nu)t + nu} t^{2 nu - 1}.
pub fn lemma_h(nu: f64, t: f64) -> Result<f64> {
    check_t(t, "lemma_h")?;
    check_nu(nu, "lemma_h")?;
    Ok((1.0 - nu) + nu * t - ((1.0 - nu) * t + nu) * powt(t, 2.0 * nu - 1.0))
}

/// k_{r,nu}(t) = r t^nu + (1-r){(1-nu) + nu t}; monotone non-increasing in r.
pub fn k_fn(r: f64, nu: f64, t: f64) -> Result<f64> {
    check_t(t, "k_fn")?;
    check_nu(nu, "k_fn")?;
    Ok(r * powt(t, nu) + (1.0 - r) * ((1.0 - nu) + nu * t))
}

/// Inflection point t_nu = {4 nu (1-nu)}^{2/(1-2nu)} of f_nu. The formula is
/// 0/0 at nu = 1/2; near that point the exponent 2 ln(1-d^2)/d with
/// d = 1 - 2nu is evaluated by series, giving the limit value 1 at nu = 1/2.
pub fn inflection_t(nu: f64) -> Result<f64> {
    if !(nu > 0.0 && nu < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "inflection_t: nu = {nu} outside (0, 1)"
        )));
    }
    let d = 1.0 - 2.0 * nu;
    if d.abs() < 1e-8 {
        // 2 ln(1 - d^2) / d = -2d - d^3 + O(d^5)
        return Ok((-2.0 * d - d * d * d).exp());
    }
    Ok(powt(4.0 * nu * (1.0 - nu), 2.0 / d))
}
