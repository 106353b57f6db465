//! Counter-example scanning in the gap region 1 < r < 2 and margin
//! certification of catalog statements over randomized instance families.

use serde::{Deserialize, Serialize};

use crate::catalog::{
    check_operator_instance_with, statement, CheckResult, ParamValues, Verdict,
};
use crate::error::Result;
use crate::hermit::HermitianMatrix;
use crate::sampling::{derive_seed, log_grid, random_hpd, random_ordered_pair, SampleConfig};
use crate::scalarfn::gap_expr;

/// Default scalar scan grid: 2001 log-spaced points over [1e-4, 1e4].
pub fn default_t_grid() -> Vec<f64> {
    log_grid(1e-4, 1e4, 2001).expect("static grid bounds")
}

/// Extremal witnesses of `gap_expr` over a t-grid for one value of r.
/// A positive witness violates direction (ii), a negative one direction (i).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GapFinding {
    pub r: f64,
    pub positive_witness: Option<ScalarWitness>,
    pub negative_witness: Option<ScalarWitness>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ScalarWitness {
    pub t: f64,
    pub value: f64,
}

/// Evaluates the gap expression over the t-grid for each r and records the
/// most positive and most negative values found, when present.
pub fn scan_gap_scalar(r_grid: &[f64], t_grid: &[f64]) -> Result<Vec<GapFinding>> {
    let mut findings = Vec::with_capacity(r_grid.len());
    for &r in r_grid {
        let mut positive: Option<ScalarWitness> = None;
        let mut negative: Option<ScalarWitness> = None;
        for &t in t_grid {
            let value = gap_expr(r, t)?;
            if value > 1e-12 && positive.is_none_or(|w| value > w.value) {
                positive = Some(ScalarWitness { t, value });
            }
            if value < -1e-12 && negative.is_none_or(|w| value < w.value) {
                negative = Some(ScalarWitness { t, value });
            }
        }
        findings.push(GapFinding {
            r,
            positive_witness: positive,
            negative_witness: negative,
        });
    }
    Ok(findings)
}

/// A violated operator instance together with everything needed to replay it.
#[derive(Debug, Clone)]
pub struct OperatorWitness {
    pub statement_id: String,
    pub params: ParamValues,
    pub a: HermitianMatrix,
    pub b: HermitianMatrix,
    pub trial_seed: u64,
    pub result: CheckResult,
}

/// Searches random instances, including the scalar-embedding dimension 1,
/// for a violated verdict. Parameter-range conditions are deliberately not
/// enforced (the interesting parameters live outside them); ordering
/// conditions on the pair still gate applicability.
#[allow(clippy::too_many_arguments)]
pub fn find_operator_counterexample(
    stmt_id: &str,
    param_grid: &[ParamValues],
    trials: usize,
    dims: &[usize],
    seed: u64,
    tol: f64,
) -> Result<Option<OperatorWitness>> {
    let stmt = statement(stmt_id)?;
    for i in 0..trials {
        let dim = dims[i % dims.len()];
        let trial_seed = derive_seed(seed, i as u64);
        let cfg = SampleConfig::new(dim, trial_seed);
        let a = random_hpd(&cfg)?;
        let b = random_hpd(&SampleConfig::new(dim, derive_seed(trial_seed, 1)))?;
        for params in param_grid {
            let result = check_operator_instance_with(&stmt, &a, &b, params, tol, false)?;
            if result.verdict == Verdict::Violated {
                return Ok(Some(OperatorWitness {
                    statement_id: stmt_id.to_string(),
                    params: *params,
                    a,
                    b,
                    trial_seed,
                    result,
                }));
            }
        }
    }
    Ok(None)
}

/// Aggregate of a randomized certification run for one statement.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificationReport {
    pub statement_id: String,
    pub trials: usize,
    pub holds: usize,
    pub violated: usize,
    pub not_applicable: usize,
    /// Minimum margin over applicable instances; absent for a vacuous run.
    pub min_margin: Option<f64>,
    pub seed: u64,
}

/// How instance pairs are drawn for certification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairFamily {
    /// Independent PD pairs.
    Unordered,
    /// Pairs with A <= B by construction; when the statement has two
    /// branches, nu >= 1/2 instances get the pair swapped so that the
    /// branch hypothesis is met.
    OrderedForBranch,
}

/// Runs `trials` checks of the statement over the parameter grid and
/// counts verdicts. Deterministic given (statement, grid, trials, dims,
/// seed); trial i draws from a seed derived from the master seed alone.
#[allow(clippy::too_many_arguments)]
pub fn certify_statement(
    stmt_id: &str,
    param_grid: &[ParamValues],
    trials: usize,
    dims: &[usize],
    seed: u64,
    tol: f64,
    family: PairFamily,
) -> Result<CertificationReport> {
    let stmt = statement(stmt_id)?;
    let mut holds = 0;
    let mut violated = 0;
    let mut not_applicable = 0;
    let mut min_margin: Option<f64> = None;

    for i in 0..trials {
        let dim = dims[i % dims.len()];
        let trial_seed = derive_seed(seed, i as u64);
        let params = param_grid[i % param_grid.len()];

        let (a, b) = match family {
            PairFamily::Unordered => {
                let a = random_hpd(&SampleConfig::new(dim, trial_seed))?;
                let b = random_hpd(&SampleConfig::new(dim, derive_seed(trial_seed, 1)))?;
                (a, b)
            }
            PairFamily::OrderedForBranch => {
                let (lo, hi) = random_ordered_pair(&SampleConfig::new(dim, trial_seed))?;
                if params.nu.is_some_and(|nu| nu > 0.5) {
                    (hi, lo)
                } else {
                    (lo, hi)
                }
            }
        };

        let result = check_operator_instance_with(&stmt, &a, &b, &params, tol, true)?;
        match result.verdict {
            Verdict::Holds => holds += 1,
            Verdict::Violated => violated += 1,
            Verdict::NotApplicable => not_applicable += 1,
        }
        if result.applicable {
            min_margin = Some(min_margin.map_or(result.margin, |m| m.min(result.margin)));
        }
    }

    Ok(CertificationReport {
        statement_id: stmt_id.to_string(),
        trials,
        holds,
        violated,
        not_applicable,
        min_margin,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermit::DEFAULT_TOL;

    #[test]
    fn gap_scan_reproduces_reference_values() {
        let findings = scan_gap_scalar(&[1.5], &[0.01, 1.0, 2.0]).unwrap();
        let f = &findings[0];
        let pos = f.positive_witness.unwrap();
        let neg = f.negative_witness.unwrap();
        assert_eq!(pos.t, 0.01);
        assert!((pos.value - 0.122302).abs() < 1e-6);
        assert_eq!(neg.t, 2.0);
        assert!((neg.value + 0.037987).abs() < 1e-6);
    }

    #[test]
    fn gap_scan_boundary_r() {
        let grid = default_t_grid();
        let findings = scan_gap_scalar(&[2.0, 1.0], &grid).unwrap();
        // r = 2: direction (i) holds, no negative witness
        assert!(findings[0].negative_witness.is_none());
        // r = 1: direction (ii) holds, no positive witness
        assert!(findings[1].positive_witness.is_none());
    }

    #[test]
    fn operator_counterexample_in_gap_region() {
        let w = find_operator_counterexample(
            "PROP11_I",
            &[ParamValues::r(1.5)],
            200,
            &[1],
            13,
            DEFAULT_TOL,
        )
        .unwrap()
        .expect("gap-region witness must exist at dim 1");
        assert_eq!(w.result.verdict, Verdict::Violated);
        assert!(w.result.margin < 0.0);
    }

    #[test]
    fn no_counterexample_for_young() {
        let grid: Vec<ParamValues> = (0..=4).map(|i| ParamValues::nu(i as f64 / 4.0)).collect();
        let w =
            find_operator_counterexample("YOUNG_AM_GM", &grid, 100, &[1, 2, 3], 5, DEFAULT_TOL)
                .unwrap();
        assert!(w.is_none());
    }

    #[test]
    fn certify_vacuous_run() {
        let rep = certify_statement(
            "THM21_LOWER",
            &[ParamValues::nu(0.25)],
            0,
            &[2],
            1,
            DEFAULT_TOL,
            PairFamily::OrderedForBranch,
        )
        .unwrap();
        assert_eq!(rep.trials, 0);
        assert!(rep.min_margin.is_none());
    }

    #[test]
    fn certify_is_deterministic() {
        let grid = [ParamValues::nu(0.25), ParamValues::nu(0.75)];
        let run = || {
            certify_statement(
                "THM21_LOWER",
                &grid,
                50,
                &[1, 2, 3],
                42,
                DEFAULT_TOL,
                PairFamily::OrderedForBranch,
            )
            .unwrap()
        };
        let a = run();
        let b = run();
        assert_eq!(a.min_margin, b.min_margin);
        assert_eq!(a.holds, b.holds);
        assert_eq!(a.violated, 0);
    }

    #[test]
    fn unknown_statement_rejected() {
        assert!(certify_statement(
            "NOSUCH",
            &[ParamValues::default()],
            1,
            &[1],
            1,
            DEFAULT_TOL,
            PairFamily::Unordered,
        )
        .is_err());
    }
}
