//! Machine-checkable encodings of the inequality statements: an expression
//! tree for each side, applicability conditions, and evaluation at scalar
//! or operator instances. Every statement is normalized to the direction
//! LHS <= RHS, so a nonnegative margin (RHS - LHS) certifies it.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hermit::{loewner_compare, HermitianMatrix, LoewnerRelation};
use crate::means::{mean, MeanKind, Weight};

/// Coefficient of a `Scale` node, possibly depending on the statement
/// parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coeff {
    Const(f64),
    R,
    OneMinusR,
    NuMinusHalf,
}

impl Coeff {
    fn eval(self, params: &ParamValues) -> Result<f64> {
        Ok(match self {
            Coeff::Const(c) => c,
            Coeff::R => params.require_r()?,
            Coeff::OneMinusR => 1.0 - params.require_r()?,
            Coeff::NuMinusHalf => params.require_nu()? - 0.5,
        })
    }
}

/// The nu argument of a `Mean` node: either the statement's nu parameter
/// or a fixed weight (the unweighted means use 1/2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NuSlot {
    Param,
    Fixed(f64),
}

impl NuSlot {
    fn resolve(self, params: &ParamValues) -> Result<f64> {
        match self {
            NuSlot::Param => params.require_nu(),
            NuSlot::Fixed(v) => Ok(v),
        }
    }
}

/// Expression tree over the operands A and B.
#[derive(Debug, Clone, PartialEq)]
pub enum MeanExpression {
    OperandA,
    OperandB,
    Identity,
    Scale(Coeff, Box<MeanExpression>),
    Sum(Box<MeanExpression>, Box<MeanExpression>),
    Inverse(Box<MeanExpression>),
    Mean(MeanKind, NuSlot, Box<MeanExpression>, Box<MeanExpression>),
}

impl MeanExpression {
    /// Evaluates the tree with scalar operands a, b (means reduce to their
    /// representing functions).
    pub fn eval_scalar(&self, a: f64, b: f64, params: &ParamValues) -> Result<f64> {
        Ok(match self {
            MeanExpression::OperandA => a,
            MeanExpression::OperandB => b,
            MeanExpression::Identity => 1.0,
            MeanExpression::Scale(c, e) => c.eval(params)? * e.eval_scalar(a, b, params)?,
            MeanExpression::Sum(l, r) => {
                l.eval_scalar(a, b, params)? + r.eval_scalar(a, b, params)?
            }
            MeanExpression::Inverse(e) => {
                let x = e.eval_scalar(a, b, params)?;
                if x == 0.0 {
                    return Err(Error::Domain {
                        function: "scalar inverse".into(),
                        eigenvalue: x,
                    });
                }
                1.0 / x
            }
            MeanExpression::Mean(kind, slot, l, r) => {
                let nu = slot.resolve(params)?;
                let x = l.eval_scalar(a, b, params)?;
                let y = r.eval_scalar(a, b, params)?;
                if x <= 0.0 || y <= 0.0 {
                    return Err(Error::Domain {
                        function: "scalar mean".into(),
                        eigenvalue: x.min(y),
                    });
                }
                match kind {
                    MeanKind::Arithmetic => (1.0 - nu) * x + nu * y,
                    MeanKind::Geometric => ((1.0 - nu) * x.ln() + nu * y.ln()).exp(),
                    // x y / ((1-nu) y + nu x): same rounding as the lemma form
                    MeanKind::Harmonic => x * y / ((1.0 - nu) * y + nu * x),
                }
            }
        })
    }

    /// Evaluates the tree with matrix operands.
    pub fn eval_operator(
        &self,
        a: &HermitianMatrix,
        b: &HermitianMatrix,
        params: &ParamValues,
    ) -> Result<HermitianMatrix> {
        Ok(match self {
            MeanExpression::OperandA => a.clone(),
            MeanExpression::OperandB => b.clone(),
            MeanExpression::Identity => HermitianMatrix::identity(a.dim()),
            MeanExpression::Scale(c, e) => e.eval_operator(a, b, params)?.scale(c.eval(params)?),
            MeanExpression::Sum(l, r) => l
                .eval_operator(a, b, params)?
                .add(&r.eval_operator(a, b, params)?)?,
            MeanExpression::Inverse(e) => e.eval_operator(a, b, params)?.inverse()?,
            MeanExpression::Mean(kind, slot, l, r) => {
                let nu = Weight::new(slot.resolve(params)?)?;
                let x = l.eval_operator(a, b, params)?;
                let y = r.eval_operator(a, b, params)?;
                mean(*kind, &x, &y, nu)?
            }
        })
    }
}

/// Parameter values supplied to a check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
pub struct ParamValues {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<f64>,
}

impl ParamValues {
    pub fn nu(nu: f64) -> Self {
        ParamValues {
            nu: Some(nu),
            r: None,
        }
    }

    pub fn r(r: f64) -> Self {
        ParamValues {
            nu: None,
            r: Some(r),
        }
    }

    pub fn nu_r(nu: f64, r: f64) -> Self {
        ParamValues {
            nu: Some(nu),
            r: Some(r),
        }
    }

    fn require_nu(&self) -> Result<f64> {
        self.nu
            .ok_or_else(|| Error::InvalidParameter("statement requires nu".into()))
    }

    fn require_r(&self) -> Result<f64> {
        self.r
            .ok_or_else(|| Error::InvalidParameter("statement requires r".into()))
    }
}

/// Admissible range for the r parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RCondition {
    Unused,
    Any,
    GeTwo,
    LeOne,
}

impl RCondition {
    fn admits(self, params: &ParamValues) -> bool {
        match self {
            RCondition::Unused => true,
            RCondition::Any => params.r.is_some(),
            RCondition::GeTwo => params.r.is_some_and(|r| r >= 2.0),
            RCondition::LeOne => params.r.is_some_and(|r| r <= 1.0),
        }
    }
}

/// Admissible range for the nu parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NuRange {
    Unused,
    /// [0, 1]
    ClosedUnit,
    /// (0, 1)
    OpenUnit,
    /// (0, 1]
    LeftOpenUnit,
}

impl NuRange {
    fn admits(self, params: &ParamValues) -> bool {
        match self {
            NuRange::Unused => true,
            NuRange::ClosedUnit => params.nu.is_some_and(|v| (0.0..=1.0).contains(&v)),
            NuRange::OpenUnit => params.nu.is_some_and(|v| v > 0.0 && v < 1.0),
            NuRange::LeftOpenUnit => params.nu.is_some_and(|v| v > 0.0 && v <= 1.0),
        }
    }
}

/// Ordering hypothesis on the operand pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderCondition {
    /// Any positive-definite pair.
    Unconditional,
    /// Branch (i): nu <= 1/2 and A <= B; branch (ii): nu >= 1/2 and B <= A.
    /// `branch_i_excludes_zero` encodes the printed "(i) 0 < nu <= 1/2" of
    /// the final corollary versus the theorem's closed "0 <= nu <= 1/2".
    TwoBranch { branch_i_excludes_zero: bool },
}

#[derive(Debug, Clone)]
pub struct InequalityStatement {
    pub id: &'static str,
    pub description: &'static str,
    pub r_condition: RCondition,
    pub nu_range: NuRange,
    pub order: OrderCondition,
    pub lhs: MeanExpression,
    pub rhs: MeanExpression,
}

impl InequalityStatement {
    pub fn uses_nu(&self) -> bool {
        self.nu_range != NuRange::Unused
    }

    pub fn uses_r(&self) -> bool {
        self.r_condition != RCondition::Unused
    }

    /// Parameter-range part of the applicability condition.
    pub fn params_admissible(&self, params: &ParamValues) -> bool {
        self.r_condition.admits(params) && self.nu_range.admits(params)
    }

    fn branch_i_admits_nu(&self, nu: f64) -> bool {
        match self.order {
            OrderCondition::Unconditional => true,
            OrderCondition::TwoBranch {
                branch_i_excludes_zero,
            } => {
                if branch_i_excludes_zero {
                    nu > 0.0 && nu <= 0.5
                } else {
                    (0.0..=0.5).contains(&nu)
                }
            }
        }
    }

    /// Scalar form of the ordering condition: A := 1, B := t turns
    /// "A <= B" into "t >= 1".
    pub fn scalar_order_holds(&self, params: &ParamValues, t: f64) -> bool {
        match self.order {
            OrderCondition::Unconditional => true,
            OrderCondition::TwoBranch { .. } => {
                let Some(nu) = params.nu else { return false };
                (self.branch_i_admits_nu(nu) && t >= 1.0)
                    || ((0.5..=1.0).contains(&nu) && t <= 1.0)
            }
        }
    }

    /// Operator ordering condition, decided through `loewner_compare`.
    pub fn operator_order_holds(
        &self,
        params: &ParamValues,
        a: &HermitianMatrix,
        b: &HermitianMatrix,
        tol: f64,
    ) -> Result<bool> {
        match self.order {
            OrderCondition::Unconditional => Ok(true),
            OrderCondition::TwoBranch { .. } => {
                let Some(nu) = params.nu else { return Ok(false) };
                let v = loewner_compare(a, b, tol)?;
                let a_le_b = matches!(v.relation, LoewnerRelation::Le | LoewnerRelation::Eq);
                let b_le_a = matches!(v.relation, LoewnerRelation::Ge | LoewnerRelation::Eq);
                Ok((self.branch_i_admits_nu(nu) && a_le_b)
                    || ((0.5..=1.0).contains(&nu) && b_le_a))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Violated,
    NotApplicable,
}

/// Witness attached to a violated check.
#[derive(Debug, Clone)]
pub enum Witness {
    Scalar { t: f64 },
    Eigenpair { eigenvalue: f64, vector: Vec<Complex64> },
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: String,
    pub params: ParamValues,
    pub applicable: bool,
    /// RHS - LHS for scalar checks; lambda_min(RHS - LHS) for operator checks.
    pub margin: f64,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

fn expr_a() -> Box<MeanExpression> {
    Box::new(MeanExpression::OperandA)
}

fn expr_b() -> Box<MeanExpression> {
    Box::new(MeanExpression::OperandB)
}

fn mean_expr(kind: MeanKind, slot: NuSlot) -> MeanExpression {
    MeanExpression::Mean(kind, slot, expr_a(), expr_b())
}

/// r (A # B) + (1-r) AM or the nu-weighted analogue.
fn r_combination(slot: NuSlot) -> MeanExpression {
    MeanExpression::Sum(
        Box::new(MeanExpression::Scale(
            Coeff::R,
            Box::new(mean_expr(MeanKind::Geometric, slot)),
        )),
        Box::new(MeanExpression::Scale(
            Coeff::OneMinusR,
            Box::new(mean_expr(MeanKind::Arithmetic, slot)),
        )),
    )
}

/// A # B + (nu - 1/2)(B - A).
fn thm21_lower_lhs() -> MeanExpression {
    MeanExpression::Sum(
        Box::new(mean_expr(MeanKind::Geometric, NuSlot::Fixed(0.5))),
        Box::new(MeanExpression::Scale(
            Coeff::NuMinusHalf,
            Box::new(MeanExpression::Sum(
                expr_b(),
                Box::new(MeanExpression::Scale(Coeff::Const(-1.0), expr_a())),
            )),
        )),
    )
}

/// (AM + HM) / 2.
fn thm21_upper_rhs() -> MeanExpression {
    MeanExpression::Sum(
        Box::new(MeanExpression::Scale(
            Coeff::Const(0.5),
            Box::new(mean_expr(MeanKind::Arithmetic, NuSlot::Param)),
        )),
        Box::new(MeanExpression::Scale(
            Coeff::Const(0.5),
            Box::new(mean_expr(MeanKind::Harmonic, NuSlot::Param)),
        )),
    )
}

/// All eleven statements, conditions encoded exactly as printed.
pub fn list_statements() -> Vec<InequalityStatement> {
    let half = NuSlot::Fixed(0.5);
    vec![
        InequalityStatement {
            id: "YOUNG_AM_GM",
            description: "A #_nu B <= (1-nu) A + nu B",
            r_condition: RCondition::Unused,
            nu_range: NuRange::ClosedUnit,
            order: OrderCondition::Unconditional,
            lhs: mean_expr(MeanKind::Geometric, NuSlot::Param),
            rhs: mean_expr(MeanKind::Arithmetic, NuSlot::Param),
        },
        InequalityStatement {
            id: "YOUNG_GM_HM",
            description: "{(1-nu) A^-1 + nu B^-1}^-1 <= A #_nu B",
            r_condition: RCondition::Unused,
            nu_range: NuRange::ClosedUnit,
            order: OrderCondition::Unconditional,
            lhs: mean_expr(MeanKind::Harmonic, NuSlot::Param),
            rhs: mean_expr(MeanKind::Geometric, NuSlot::Param),
        },
        InequalityStatement {
            id: "PROP11_I",
            description: "r >= 2: r A#B + (1-r)(A+B)/2 <= harmonic mean",
            r_condition: RCondition::GeTwo,
            nu_range: NuRange::Unused,
            order: OrderCondition::Unconditional,
            lhs: r_combination(half),
            rhs: mean_expr(MeanKind::Harmonic, half),
        },
        InequalityStatement {
            id: "PROP11_II",
            description: "r <= 1: harmonic mean <= r A#B + (1-r)(A+B)/2",
            r_condition: RCondition::LeOne,
            nu_range: NuRange::Unused,
            order: OrderCondition::Unconditional,
            lhs: mean_expr(MeanKind::Harmonic, half),
            rhs: r_combination(half),
        },
        InequalityStatement {
            id: "THM21_LOWER",
            description: "A#B + (nu - 1/2)(B - A) <= A #_nu B on the two branches",
            r_condition: RCondition::Unused,
            nu_range: NuRange::ClosedUnit,
            order: OrderCondition::TwoBranch {
                branch_i_excludes_zero: false,
            },
            lhs: thm21_lower_lhs(),
            rhs: mean_expr(MeanKind::Geometric, NuSlot::Param),
        },
        InequalityStatement {
            id: "THM21_UPPER",
            description: "A #_nu B <= (AM + HM)/2 on the two branches",
            r_condition: RCondition::Unused,
            nu_range: NuRange::ClosedUnit,
            order: OrderCondition::TwoBranch {
                branch_i_excludes_zero: false,
            },
            lhs: mean_expr(MeanKind::Geometric, NuSlot::Param),
            rhs: thm21_upper_rhs(),
        },
        InequalityStatement {
            id: "REM22",
            description: "A #_nu B <= A # B on the two branches",
            r_condition: RCondition::Unused,
            nu_range: NuRange::ClosedUnit,
            order: OrderCondition::TwoBranch {
                branch_i_excludes_zero: false,
            },
            lhs: mean_expr(MeanKind::Geometric, NuSlot::Param),
            rhs: mean_expr(MeanKind::Geometric, half),
        },
        InequalityStatement {
            id: "LEM25",
            description: "r >= 2, two branches: r GM_nu + (1-r) AM_nu <= HM_nu",
            r_condition: RCondition::GeTwo,
            nu_range: NuRange::ClosedUnit,
            order: OrderCondition::TwoBranch {
                branch_i_excludes_zero: false,
            },
            lhs: r_combination(NuSlot::Param),
            rhs: mean_expr(MeanKind::Harmonic, NuSlot::Param),
        },
        InequalityStatement {
            id: "LEM26",
            description: "r <= 1, 0 < nu <= 1: HM_nu <= r GM_nu + (1-r) AM_nu",
            r_condition: RCondition::LeOne,
            nu_range: NuRange::LeftOpenUnit,
            order: OrderCondition::Unconditional,
            lhs: mean_expr(MeanKind::Harmonic, NuSlot::Param),
            rhs: r_combination(NuSlot::Param),
        },
        InequalityStatement {
            id: "COR27_I",
            description: "r >= 2, two branches (branch i open at 0): r GM_nu + (1-r) AM_nu <= HM_nu",
            r_condition: RCondition::GeTwo,
            nu_range: NuRange::ClosedUnit,
            order: OrderCondition::TwoBranch {
                branch_i_excludes_zero: true,
            },
            lhs: r_combination(NuSlot::Param),
            rhs: mean_expr(MeanKind::Harmonic, NuSlot::Param),
        },
        InequalityStatement {
            id: "COR27_II",
            description: "r <= 1, 0 < nu < 1, all PD pairs: HM_nu <= r GM_nu + (1-r) AM_nu",
            r_condition: RCondition::LeOne,
            nu_range: NuRange::OpenUnit,
            order: OrderCondition::Unconditional,
            lhs: mean_expr(MeanKind::Harmonic, NuSlot::Param),
            rhs: r_combination(NuSlot::Param),
        },
    ]
}

pub fn statement(id: &str) -> Result<InequalityStatement> {
    list_statements()
        .into_iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownStatement(id.to_string()))
}

pub fn statement_ids() -> Vec<&'static str> {
    list_statements().iter().map(|s| s.id).collect()
}

/// Scalar instance: A := 1, B := t, evaluated through representing
/// functions. `enforce_params` off means the r/nu range condition is
/// ignored (counter-example exploration); the ordering condition on t is
/// always respected.
pub fn check_scalar_instance_with(
    stmt: &InequalityStatement,
    params: &ParamValues,
    t: f64,
    tol: f64,
    enforce_params: bool,
) -> Result<CheckResult> {
    if t <= 0.0 {
        return Err(Error::Domain {
            function: "check_scalar_instance".into(),
            eigenvalue: t,
        });
    }
    let lhs = stmt.lhs.eval_scalar(1.0, t, params)?;
    let rhs = stmt.rhs.eval_scalar(1.0, t, params)?;
    let margin = rhs - lhs;
    let applicable = (!enforce_params || stmt.params_admissible(params))
        && stmt.scalar_order_holds(params, t);
    let scale = 1.0_f64.max(lhs.abs()).max(rhs.abs());
    let verdict = if !applicable {
        Verdict::NotApplicable
    } else if margin >= -tol * scale {
        Verdict::Holds
    } else {
        Verdict::Violated
    };
    Ok(CheckResult {
        id: stmt.id.to_string(),
        params: *params,
        applicable,
        margin,
        verdict,
        witness: (verdict == Verdict::Violated).then_some(Witness::Scalar { t }),
    })
}

pub fn check_scalar_instance(
    stmt: &InequalityStatement,
    params: &ParamValues,
    t: f64,
    tol: f64,
) -> Result<CheckResult> {
    check_scalar_instance_with(stmt, params, t, tol, true)
}

/// Operator instance: margin is lambda_min(RHS - LHS); applicability is
/// decided via `loewner_compare` for ordering conditions.
pub fn check_operator_instance_with(
    stmt: &InequalityStatement,
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    params: &ParamValues,
    tol: f64,
    enforce_params: bool,
) -> Result<CheckResult> {
    let lhs = stmt.lhs.eval_operator(a, b, params)?;
    let rhs = stmt.rhs.eval_operator(a, b, params)?;
    let diff = rhs.sub(&lhs)?;
    let verdict_psd = diff.psd_verdict(tol.max(f64::MIN_POSITIVE))?;
    let margin = verdict_psd.lambda_min;
    let applicable = (!enforce_params || stmt.params_admissible(params))
        && stmt.operator_order_holds(params, a, b, tol)?;
    let scale = 1.0_f64.max(lhs.fro_norm()).max(rhs.fro_norm());
    let verdict = if !applicable {
        Verdict::NotApplicable
    } else if margin >= -tol * scale {
        Verdict::Holds
    } else {
        Verdict::Violated
    };
    Ok(CheckResult {
        id: stmt.id.to_string(),
        params: *params,
        applicable,
        margin,
        verdict,
        witness: (verdict == Verdict::Violated).then(|| Witness::Eigenpair {
            eigenvalue: verdict_psd.lambda_min,
            vector: verdict_psd.witness.clone(),
        }),
    })
}

pub fn check_operator_instance(
    stmt: &InequalityStatement,
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    params: &ParamValues,
    tol: f64,
) -> Result<CheckResult> {
    check_operator_instance_with(stmt, a, b, params, tol, true)
}

/// Outcome of a representing-function consistency run: scalar dominance of
/// f_m by f_n on a grid versus Loewner dominance of the means on sampled
/// operator pairs. The two must agree in the forward direction.
#[derive(Debug, Clone)]
pub struct KuboReport {
    pub scalar_dominant: bool,
    /// (t, f_m(t), f_n(t)) at the worst grid point when dominance fails.
    pub scalar_witness: Option<(f64, f64, f64)>,
    pub operator_trials: usize,
    pub operator_violations: usize,
    pub operator_witness_seed: Option<u64>,
    /// Scalar dominance held but some operator pair violated the order:
    /// this contradicts the representing-function correspondence and is
    /// always a bug, never an observation.
    pub inconsistent: bool,
}

/// Checks the correspondence "f_m <= f_n pointwise iff A m B <= A n B for
/// all PD pairs" in the forward direction on random samples.
#[allow(clippy::too_many_arguments)]
pub fn kubo_ando_consistency(
    m_kind: MeanKind,
    n_kind: MeanKind,
    nu_m: Weight,
    nu_n: Weight,
    t_grid: &[f64],
    trials: usize,
    dims: &[usize],
    seed: u64,
    tol: f64,
) -> Result<KuboReport> {
    use crate::means::representing_function;
    use crate::sampling::{derive_seed, random_hpd, SampleConfig};

    if t_grid.is_empty() || dims.is_empty() {
        return Err(Error::InvalidParameter(
            "kubo_ando_consistency: empty grid".into(),
        ));
    }

    let mut scalar_dominant = true;
    let mut scalar_witness = None;
    let mut worst = 0.0_f64;
    for &t in t_grid {
        let fm = representing_function(m_kind, nu_m, t)?;
        let fnv = representing_function(n_kind, nu_n, t)?;
        let gap = fm - fnv;
        if gap > tol * 1.0_f64.max(fm.abs()).max(fnv.abs()) && gap > worst {
            scalar_dominant = false;
            worst = gap;
            scalar_witness = Some((t, fm, fnv));
        }
    }

    let mut violations = 0;
    let mut witness_seed = None;
    for i in 0..trials {
        let dim = dims[i % dims.len()];
        let trial_seed = derive_seed(seed, i as u64);
        let cfg = SampleConfig::new(dim, trial_seed);
        let a = random_hpd(&cfg)?;
        let b = random_hpd(&SampleConfig::new(dim, derive_seed(trial_seed, 1)))?;
        let lhs = mean(m_kind, &a, &b, nu_m)?;
        let rhs = mean(n_kind, &a, &b, nu_n)?;
        let v = rhs.sub(&lhs)?.psd_verdict(tol)?;
        if !v.is_psd {
            violations += 1;
            if witness_seed.is_none() {
                witness_seed = Some(trial_seed);
            }
        }
    }

    Ok(KuboReport {
        scalar_dominant,
        scalar_witness,
        operator_trials: trials,
        operator_violations: violations,
        operator_witness_seed: witness_seed,
        inconsistent: scalar_dominant && violations > 0,
    })
}

/// Reference scalar grids for the two theorem regimes: branch (i) nu in
/// [0, 1/2] with t in [1, 1e4], branch (ii) nu in [1/2, 1] with t in
/// [1e-4, 1].
pub fn regime_grid(branch_i: bool, points: usize) -> Result<Vec<f64>> {
    if branch_i {
        crate::sampling::log_grid(1.0, 1e4, points)
    } else {
        crate::sampling::log_grid(1e-4, 1.0, points)
    }
}
