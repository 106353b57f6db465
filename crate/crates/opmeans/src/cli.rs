//! Library side of the command-line front end: verification suites,
//! machine-readable reports, curve emission, and the matrix eval command.
//! The binary in `src/bin/opmeans.rs` only parses flags and forwards here.
//!
//! Reports deliberately carry no timestamp so that identical invocations
//! produce byte-identical JSON.

use serde::{Deserialize, Serialize};

use crate::catalog::{
    check_scalar_instance, kubo_ando_consistency, statement, ParamValues, Verdict,
};
use crate::error::{Error, Result};
use crate::hermit::{HermitianMatrix, MatrixJson};
use crate::means::{mean, MeanKind, Weight};
use crate::sampling::{derive_seed, log_grid};
use crate::scalarfn::{gap_expr, k_fn, lemma_f, lemma_g, lemma_h};
use crate::search::{certify_statement, scan_gap_scalar, GapFinding, PairFamily};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Young,
    Prop11,
    Thm21,
    Lemmas,
    Rem22,
    Cor27,
    Kubo,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "young" => Suite::Young,
            "prop11" => Suite::Prop11,
            "thm21" => Suite::Thm21,
            "lemmas" => Suite::Lemmas,
            "rem22" => Suite::Rem22,
            "cor27" => Suite::Cor27,
            "kubo" => Suite::Kubo,
            other => return Err(Error::InvalidParameter(format!("unknown suite: {other}"))),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub suite: String,
    pub trials: usize,
    pub dims: Vec<usize>,
    pub seed: u64,
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct Counts {
    pub holds: usize,
    pub violated: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StatementReport {
    pub id: String,
    /// Parameter grid the statement was exercised on.
    pub params: serde_json::Value,
    pub counts: Counts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_margin: Option<f64>,
    /// Replay seed for randomized runs; scalar grid checks have none.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub witnesses: Vec<serde_json::Value>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub config: VerifyConfig,
    pub statements: Vec<StatementReport>,
    pub tool_version: String,
}

impl Report {
    pub fn total_violations(&self) -> usize {
        self.statements.iter().map(|s| s.counts.violated).sum()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite {} (trials={}, seed={}, tol={:e})\n",
            self.config.suite, self.config.trials, self.config.seed, self.config.tol
        ));
        for s in &self.statements {
            let margin = s
                .min_margin
                .map_or("n/a".to_string(), |m| format!("{m:.9e}"));
            out.push_str(&format!(
                "  {:<14} holds={:<7} violated={:<5} not-applicable={:<5} min_margin={}\n",
                s.id, s.counts.holds, s.counts.violated, s.counts.not_applicable, margin
            ));
        }
        out
    }
}

fn nu_grid(steps: usize) -> Vec<f64> {
    (0..=steps).map(|i| i as f64 / steps as f64).collect()
}

fn param_grid_nu(steps: usize) -> Vec<ParamValues> {
    nu_grid(steps).into_iter().map(ParamValues::nu).collect()
}

fn cross_nu_r(nus: &[f64], rs: &[f64]) -> Vec<ParamValues> {
    let mut out = Vec::with_capacity(nus.len() * rs.len());
    for &r in rs {
        for &nu in nus {
            out.push(ParamValues::nu_r(nu, r));
        }
    }
    out
}

fn certified_entry(
    stmt_id: &str,
    grid: &[ParamValues],
    cfg: &VerifyConfig,
    stream: u64,
    family: PairFamily,
) -> Result<StatementReport> {
    let seed = derive_seed(cfg.seed, stream);
    let rep = certify_statement(stmt_id, grid, cfg.trials, &cfg.dims, seed, cfg.tol, family)?;
    Ok(StatementReport {
        id: stmt_id.to_string(),
        params: serde_json::to_value(grid).expect("grid serializes"),
        counts: Counts {
            holds: rep.holds,
            violated: rep.violated,
            not_applicable: rep.not_applicable,
        },
        min_margin: rep.min_margin,
        seed: Some(seed),
        witnesses: Vec::new(),
    })
}

/// Grid check of one scalar function over both theorem regimes.
fn scalar_grid_entry(
    id: &str,
    f: impl Fn(f64, f64) -> Result<f64>,
    threshold: f64,
) -> Result<StatementReport> {
    let mut counts = Counts::default();
    let mut min_margin = f64::INFINITY;
    let mut witnesses = Vec::new();
    let nus_i: Vec<f64> = (0..=32).map(|i| i as f64 / 64.0).collect();
    let nus_ii: Vec<f64> = (32..=64).map(|i| i as f64 / 64.0).collect();
    for (nus, grid) in [
        (&nus_i, log_grid(1.0, 1e4, 2001)?),
        (&nus_ii, log_grid(1e-4, 1.0, 2001)?),
    ] {
        for &nu in nus.iter() {
            for &t in &grid {
                let v = f(nu, t)?;
                min_margin = min_margin.min(v);
                if v >= -threshold {
                    counts.holds += 1;
                } else {
                    counts.violated += 1;
                    if witnesses.len() < 5 {
                        witnesses.push(serde_json::json!({"nu": nu, "t": t, "value": v}));
                    }
                }
            }
        }
    }
    Ok(StatementReport {
        id: id.to_string(),
        params: serde_json::json!({"nu_step": "1/64", "t_grid": "2001 log points per regime"}),
        counts,
        min_margin: Some(min_margin),
        seed: None,
        witnesses,
    })
}

/// Scalar certification of LEM25 / LEM26 over their printed regimes.
fn lemma_statement_entry(stmt_id: &str, rs: &[f64], tol: f64) -> Result<StatementReport> {
    let stmt = statement(stmt_id)?;
    let nus: Vec<f64> = (0..=16).map(|i| i as f64 / 16.0).collect();
    let grid = log_grid(1e-4, 1e4, 201)?;
    let mut counts = Counts::default();
    let mut min_margin: Option<f64> = None;
    let mut witnesses = Vec::new();
    for &r in rs {
        for &nu in &nus {
            for &t in &grid {
                let res = check_scalar_instance(&stmt, &ParamValues::nu_r(nu, r), t, tol)?;
                match res.verdict {
                    Verdict::Holds => counts.holds += 1,
                    Verdict::Violated => {
                        counts.violated += 1;
                        if witnesses.len() < 5 {
                            witnesses.push(serde_json::json!({
                                "nu": nu, "r": r, "t": t, "margin": res.margin
                            }));
                        }
                    }
                    Verdict::NotApplicable => counts.not_applicable += 1,
                }
                if res.applicable {
                    min_margin = Some(min_margin.map_or(res.margin, |m| m.min(res.margin)));
                }
            }
        }
    }
    Ok(StatementReport {
        id: stmt_id.to_string(),
        params: serde_json::json!({"r": rs, "nu_step": "1/16", "t_grid": "201 log points [1e-4, 1e4]"}),
        counts,
        min_margin,
        seed: None,
        witnesses,
    })
}

/// Monotonicity of k_{r,nu} in r on an 11-point r-grid over [-5, 5].
fn k_monotone_entry() -> Result<StatementReport> {
    let rs: Vec<f64> = (0..11).map(|i| -5.0 + i as f64).collect();
    let nus: Vec<f64> = (0..=16).map(|i| i as f64 / 16.0).collect();
    let ts = log_grid(1e-3, 1e3, 61)?;
    let mut counts = Counts::default();
    let mut min_margin = f64::INFINITY;
    let mut witnesses = Vec::new();
    for &nu in &nus {
        for &t in &ts {
            for w in rs.windows(2) {
                let margin = k_fn(w[0], nu, t)? - k_fn(w[1], nu, t)?;
                min_margin = min_margin.min(margin);
                if margin >= -1e-12 {
                    counts.holds += 1;
                } else {
                    counts.violated += 1;
                    if witnesses.len() < 5 {
                        witnesses.push(serde_json::json!({
                            "nu": nu, "t": t, "r_low": w[0], "r_high": w[1], "margin": margin
                        }));
                    }
                }
            }
        }
    }
    Ok(StatementReport {
        id: "K_MONOTONE".to_string(),
        params: serde_json::json!({"r_grid": rs, "nu_step": "1/16", "t_grid": "61 log points"}),
        counts,
        min_margin: Some(min_margin),
        seed: None,
        witnesses,
    })
}

fn kubo_entry(
    id: &str,
    m_kind: MeanKind,
    n_kind: MeanKind,
    cfg: &VerifyConfig,
    stream: u64,
) -> Result<StatementReport> {
    let nus: Vec<f64> = (0..=8).map(|i| i as f64 / 8.0).collect();
    let t_grid = log_grid(1e-3, 1e3, 101)?;
    let per_nu = cfg.trials / nus.len();
    let mut counts = Counts::default();
    let mut witnesses = Vec::new();
    let seed = derive_seed(cfg.seed, stream);
    for (i, &nu) in nus.iter().enumerate() {
        let w = Weight::new(nu)?;
        let rep = kubo_ando_consistency(
            m_kind,
            n_kind,
            w,
            w,
            &t_grid,
            per_nu,
            &cfg.dims,
            derive_seed(seed, i as u64),
            cfg.tol,
        )?;
        if !rep.scalar_dominant {
            // Forward direction only: a scalar-dominance failure on the
            // grid is reported, not counted as an operator violation.
            witnesses.push(serde_json::json!({
                "nu": nu,
                "scalar_witness": rep.scalar_witness.map(|(t, fm, fnv)| {
                    serde_json::json!({"t": t, "f_m": fm, "f_n": fnv})
                }),
            }));
        }
        counts.holds += rep.operator_trials - rep.operator_violations;
        counts.violated += rep.operator_violations;
    }
    Ok(StatementReport {
        id: id.to_string(),
        params: serde_json::json!({"nu_step": "1/8", "t_grid": "101 log points [1e-3, 1e3]"}),
        counts,
        min_margin: None,
        seed: Some(seed),
        witnesses,
    })
}

/// Runs one verification suite and assembles the report. The caller maps
/// `total_violations() > 0` to exit code 1.
pub fn run_verify(suite: Suite, cfg: &VerifyConfig) -> Result<Report> {
    let mut statements = Vec::new();
    let nu16 = param_grid_nu(16);
    let inner_nus: Vec<f64> = (1..16).map(|i| i as f64 / 16.0).collect();

    let want = |s: Suite| suite == Suite::All || suite == s;

    if want(Suite::Young) {
        statements.push(certified_entry(
            "YOUNG_AM_GM",
            &nu16,
            cfg,
            1,
            PairFamily::Unordered,
        )?);
        statements.push(certified_entry(
            "YOUNG_GM_HM",
            &nu16,
            cfg,
            2,
            PairFamily::Unordered,
        )?);
    }
    if want(Suite::Prop11) {
        let rs_i: Vec<ParamValues> = [2.0, 2.5, 5.0, 10.0].map(ParamValues::r).to_vec();
        let rs_ii: Vec<ParamValues> = [-1.0, 0.0, 0.5, 1.0].map(ParamValues::r).to_vec();
        statements.push(certified_entry(
            "PROP11_I",
            &rs_i,
            cfg,
            3,
            PairFamily::Unordered,
        )?);
        statements.push(certified_entry(
            "PROP11_II",
            &rs_ii,
            cfg,
            4,
            PairFamily::Unordered,
        )?);
    }
    if want(Suite::Thm21) {
        statements.push(certified_entry(
            "THM21_LOWER",
            &nu16,
            cfg,
            5,
            PairFamily::OrderedForBranch,
        )?);
        statements.push(certified_entry(
            "THM21_UPPER",
            &nu16,
            cfg,
            6,
            PairFamily::OrderedForBranch,
        )?);
    }
    if want(Suite::Rem22) {
        statements.push(certified_entry(
            "REM22",
            &nu16,
            cfg,
            7,
            PairFamily::OrderedForBranch,
        )?);
    }
    if want(Suite::Lemmas) {
        statements.push(scalar_grid_entry("LEMMA_F", lemma_f, 1e-12)?);
        statements.push(scalar_grid_entry("LEMMA_G", lemma_g, 1e-12)?);
        statements.push(scalar_grid_entry("LEMMA_H", lemma_h, 1e-12)?);
        statements.push(lemma_statement_entry("LEM25", &[2.0, 3.0, 10.0], cfg.tol)?);
        statements.push(lemma_statement_entry("LEM26", &[1.0, 0.0, -2.0], cfg.tol)?);
        statements.push(k_monotone_entry()?);
    }
    if want(Suite::Cor27) {
        let nus: Vec<f64> = nu_grid(16);
        statements.push(certified_entry(
            "COR27_I",
            &cross_nu_r(&nus, &[2.0, 3.0, 10.0]),
            cfg,
            8,
            PairFamily::OrderedForBranch,
        )?);
        statements.push(certified_entry(
            "COR27_II",
            &cross_nu_r(&inner_nus, &[1.0, 0.0, -2.0]),
            cfg,
            9,
            PairFamily::Unordered,
        )?);
    }
    if want(Suite::Kubo) {
        statements.push(kubo_entry(
            "KUBO_GM_LE_AM",
            MeanKind::Geometric,
            MeanKind::Arithmetic,
            cfg,
            10,
        )?);
        statements.push(kubo_entry(
            "KUBO_HM_LE_GM",
            MeanKind::Harmonic,
            MeanKind::Geometric,
            cfg,
            11,
        )?);
    }

    Ok(Report {
        command: "verify".to_string(),
        config: cfg.clone(),
        statements,
        tool_version: TOOL_VERSION.to_string(),
    })
}

/// Loads a matrix from the JSON file format, validating Hermiticity.
pub fn load_matrix(path: &std::path::Path) -> anyhow::Result<HermitianMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    let json: MatrixJson = serde_json::from_str(&text)
        .map_err(|e| anyhow::anyhow!("cannot parse {}: {e}", path.display()))?;
    Ok(json.to_matrix()?)
}

/// Evaluates one weighted mean of two matrix files; returns the result in
/// the same JSON format or as aligned scientific-notation text.
pub fn run_eval(
    kind: MeanKind,
    nu: f64,
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    json_output: bool,
) -> Result<String> {
    let result = mean(kind, a, b, Weight::new(nu)?)?;
    if json_output {
        let json = MatrixJson::from_matrix(&result);
        Ok(serde_json::to_string_pretty(&json).expect("matrix serializes"))
    } else {
        Ok(render_matrix_text(&result))
    }
}

/// Human rendering: scientific notation, 9 digits.
pub fn render_matrix_text(m: &HermitianMatrix) -> String {
    let n = m.dim();
    let mut out = String::new();
    for i in 0..n {
        for j in 0..n {
            let z = m.get(i, j);
            if j > 0 {
                out.push_str("  ");
            }
            if z.im == 0.0 {
                out.push_str(&format!("{:+.9e}", z.re));
            } else {
                out.push_str(&format!("{:+.9e}{:+.9e}i", z.re, z.im));
            }
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveFn {
    GapExpr,
    LemmaF,
    LemmaG,
    LemmaH,
    KFn,
}

impl std::str::FromStr for CurveFn {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "gap_expr" => CurveFn::GapExpr,
            "lemma_f" => CurveFn::LemmaF,
            "lemma_g" => CurveFn::LemmaG,
            "lemma_h" => CurveFn::LemmaH,
            "k_fn" => CurveFn::KFn,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown curve function: {other}"
                )))
            }
        })
    }
}

/// CSV with header `t,value`, one row per log-grid point, 17 significant
/// digits, locale-independent.
pub fn run_curve(
    function: CurveFn,
    r: Option<f64>,
    nu: Option<f64>,
    t_lo: f64,
    t_hi: f64,
    n: usize,
) -> Result<String> {
    let need_r = || r.ok_or_else(|| Error::InvalidParameter("function requires --r".into()));
    let need_nu = || nu.ok_or_else(|| Error::InvalidParameter("function requires --nu".into()));
    let grid = log_grid(t_lo, t_hi, n)?;
    let mut out = String::from("t,value\n");
    for &t in &grid {
        let value = match function {
            CurveFn::GapExpr => gap_expr(need_r()?, t)?,
            CurveFn::LemmaF => lemma_f(need_nu()?, t)?,
            CurveFn::LemmaG => lemma_g(need_nu()?, t)?,
            CurveFn::LemmaH => lemma_h(need_nu()?, t)?,
            CurveFn::KFn => k_fn(need_r()?, need_nu()?, t)?,
        };
        out.push_str(&format!("{:.16e},{:.16e}\n", t, value));
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GapSearchReport {
    pub command: String,
    pub r_grid: Vec<f64>,
    pub t_lo: f64,
    pub t_hi: f64,
    pub t_steps: usize,
    pub findings: Vec<GapFinding>,
    pub tool_version: String,
}

/// Scans the gap expression over an r-grid and the log t-grid.
pub fn run_gap_search(
    r_lo: f64,
    r_hi: f64,
    r_steps: usize,
    t_lo: f64,
    t_hi: f64,
    t_steps: usize,
) -> Result<GapSearchReport> {
    if r_steps < 1 {
        return Err(Error::InvalidParameter("r_steps must be >= 1".into()));
    }
    let r_grid: Vec<f64> = if r_steps == 1 {
        vec![r_lo]
    } else {
        (0..r_steps)
            .map(|i| r_lo + (r_hi - r_lo) * i as f64 / (r_steps - 1) as f64)
            .collect()
    };
    let t_grid = log_grid(t_lo, t_hi, t_steps)?;
    let findings = scan_gap_scalar(&r_grid, &t_grid)?;
    Ok(GapSearchReport {
        command: "gap-search".to_string(),
        r_grid,
        t_lo,
        t_hi,
        t_steps,
        findings,
        tool_version: TOOL_VERSION.to_string(),
    })
}

pub fn render_gap_text(report: &GapSearchReport) -> String {
    let mut out = String::new();
    for f in &report.findings {
        out.push_str(&format!("r = {:.6}\n", f.r));
        match &f.positive_witness {
            Some(w) => out.push_str(&format!(
                "  positive witness (violates direction ii): t = {:.6e}, value = {:+.6e}\n",
                w.t, w.value
            )),
            None => out.push_str("  no positive witness\n"),
        }
        match &f.negative_witness {
            Some(w) => out.push_str(&format!(
                "  negative witness (violates direction i):  t = {:.6e}, value = {:+.6e}\n",
                w.t, w.value
            )),
            None => out.push_str("  no negative witness\n"),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_cfg(suite: &str, trials: usize) -> VerifyConfig {
        VerifyConfig {
            suite: suite.to_string(),
            trials,
            dims: vec![1, 2, 3],
            seed: 7,
            tol: 1e-9,
        }
    }

    #[test]
    fn suite_parsing() {
        assert_eq!("young".parse::<Suite>().unwrap(), Suite::Young);
        assert!("nosuch".parse::<Suite>().is_err());
    }

    #[test]
    fn young_suite_small_run() {
        let report = run_verify(Suite::Young, &quick_cfg("young", 30)).unwrap();
        assert_eq!(report.statements.len(), 2);
        assert_eq!(report.total_violations(), 0);
        assert!(report.render_text().contains("YOUNG_AM_GM"));
    }

    #[test]
    fn vacuous_run_is_empty() {
        let report = run_verify(Suite::Thm21, &quick_cfg("thm21", 0)).unwrap();
        assert_eq!(report.total_violations(), 0);
        for s in &report.statements {
            assert_eq!(s.counts.holds, 0);
            assert!(s.min_margin.is_none());
        }
    }

    #[test]
    fn verify_reports_are_deterministic() {
        let cfg = quick_cfg("prop11", 20);
        let a = serde_json::to_string(&run_verify(Suite::Prop11, &cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&run_verify(Suite::Prop11, &cfg).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn curve_gap_expr_signs() {
        let csv = run_curve(CurveFn::GapExpr, Some(1.5), None, 0.001, 10.0, 101).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "t,value");
        let rows: Vec<(f64, f64)> = lines
            .map(|l| {
                let (t, v) = l.split_once(',').unwrap();
                (t.parse().unwrap(), v.parse().unwrap())
            })
            .collect();
        assert_eq!(rows.len(), 101);
        // positive near t = 0.01, negative near t = 2
        let near = |target: f64| {
            rows.iter()
                .min_by(|a, b| {
                    (a.0 - target)
                        .abs()
                        .partial_cmp(&(b.0 - target).abs())
                        .unwrap()
                })
                .unwrap()
        };
        assert!(near(0.01).1 > 0.0);
        assert!(near(2.0).1 < 0.0);
    }

    #[test]
    fn curve_lemma_f_half_is_zero() {
        let csv = run_curve(CurveFn::LemmaF, None, Some(0.5), 0.01, 100.0, 21).unwrap();
        for line in csv.lines().skip(1) {
            let v: f64 = line.split_once(',').unwrap().1.parse().unwrap();
            assert!(v.abs() < 1e-13);
        }
    }

    #[test]
    fn curve_missing_param_is_error() {
        assert!(run_curve(CurveFn::GapExpr, None, None, 0.1, 1.0, 5).is_err());
        assert!(run_curve(CurveFn::KFn, Some(1.0), None, 0.1, 1.0, 5).is_err());
    }

    #[test]
    fn gap_search_r_endpoints() {
        let rep = run_gap_search(2.0, 2.0, 1, 1e-4, 1e4, 2001).unwrap();
        assert!(rep.findings[0].negative_witness.is_none());
        let rep = run_gap_search(1.0, 1.0, 1, 1e-4, 1e4, 2001).unwrap();
        assert!(rep.findings[0].positive_witness.is_none());
    }

    #[test]
    fn eval_means_text_and_json() {
        let a = HermitianMatrix::identity(2);
        let b = HermitianMatrix::diagonal(&[4.0, 9.0]);
        let json = run_eval(MeanKind::Geometric, 0.5, &a, &b, true).unwrap();
        let parsed: MatrixJson = serde_json::from_str(&json).unwrap();
        assert!((parsed.real[0][0] - 2.0).abs() < 1e-10);
        assert!((parsed.real[1][1] - 3.0).abs() < 1e-10);
        let text = run_eval(MeanKind::Geometric, 0.5, &a, &b, false).unwrap();
        assert!(text.contains("e0"));
    }
}
