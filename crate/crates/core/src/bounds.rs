//! Numerical-radius inequalities as checkable reports.
//!
//! Each evaluator returns a [`BoundReport`] holding both sides of one
//! inequality, its oriented slack and the verdicts. Wherever `w_A` enters, the
//! side that would make the check easier gets the pessimistic end of the
//! enclosure: `rad.lower` when `w_A` must dominate, `rad.upper` when it must
//! be dominated.
//!
//! Notation used in the formulas below, for an operator `T`:
//!
//! - `N = ‖T‖_A`, `Q = ‖T♯T + TT♯‖_A`
//! - `R = ‖Re_A(T)‖_A`, `J = ‖Im_A(T)‖_A`
//! - `P = ‖Re_A(T) + Im_A(T)‖_A`, `M = ‖Re_A(T) − Im_A(T)‖_A`

use std::f64::consts::SQRT_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::TolerancePolicy;
use crate::radius::{disk_test, radius_theta_scan, DiskTestResult, RadiusEstimate, SupportFunction};
use crate::semi_hilbert::{generalized_commutator, AOperator, Sign};

const TWO_SQRT_2: f64 = 2.0 * SQRT_2;

/// Identifies which inequality a report checks. The serialized tags are the
/// stable identifiers used in JSON reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormulaId {
    /// `w ≥ N/2`
    #[serde(rename = "eqv_lower")]
    HalfNormLower,
    /// `w ≤ N`
    #[serde(rename = "eqv_upper")]
    NormUpper,
    /// `w² ≥ Q/4`
    #[serde(rename = "eqv1_lower")]
    QuarterFormLower,
    /// `w² ≤ Q/2`
    #[serde(rename = "eqv1_upper")]
    HalfFormUpper,
    /// `w ≥ N/2 + |R − J|/2`
    #[serde(rename = "th1")]
    ReImGap,
    /// `w ≥ √(Q/4 + |R² − J²|/2)`
    #[serde(rename = "th2")]
    ReImGapSquared,
    /// `w ≥ N/2 + |P − M|/(2√2)`
    #[serde(rename = "th3")]
    SumDiffGap,
    /// `w ≥ √(Q/4 + |P² − M²|/4)`
    #[serde(rename = "th4")]
    SumDiffGapSquared,
    /// `w(TX ± YT) ≤ max(‖X‖, ‖Y‖) √(2Q)`
    #[serde(rename = "lem1")]
    CommutatorForm,
    /// `w(TX ± YT) ≤ 2√2 max(‖X‖, ‖Y‖) √(w² − |R² − J²|/2)`
    #[serde(rename = "th5_i")]
    CommutatorReIm,
    /// `w(TX ± YT) ≤ 2√2 max(‖X‖, ‖Y‖) √(w² − |P² − M²|/4)`
    #[serde(rename = "th5_ii")]
    CommutatorSumDiff,
    /// `w(TS ± ST) ≤ 2√2 ‖S‖ √(w(T)² − |R² − J²|/2)`
    #[serde(rename = "cor5_i")]
    SymCommutatorReIm,
    /// `w(TS ± ST) ≤ 2√2 ‖S‖ √(w(T)² − |P² − M²|/4)`
    #[serde(rename = "cor5_ii")]
    SymCommutatorSumDiff,
    /// `w(TS ± ST) ≤ 2√2 min(α₁, α₂)`
    #[serde(rename = "ineq31")]
    SymCommutatorMinReIm,
    /// `w(TS ± ST) ≤ 2√2 min(β₁, β₂)`
    #[serde(rename = "ineq32")]
    SymCommutatorMinSumDiff,
    /// `w(TS ± ST) ≤ 2√2 min(‖T‖ w(S), ‖S‖ w(T))`
    #[serde(rename = "zamani")]
    SymCommutatorNormRadius,
}

impl FormulaId {
    pub fn kind(self) -> BoundKind {
        use FormulaId::*;
        match self {
            HalfNormLower | QuarterFormLower | ReImGap | ReImGapSquared | SumDiffGap | SumDiffGapSquared => {
                BoundKind::Lower
            }
            _ => BoundKind::Upper,
        }
    }

    /// The serialized tag.
    pub fn tag(self) -> &'static str {
        use FormulaId::*;
        match self {
            HalfNormLower => "eqv_lower",
            NormUpper => "eqv_upper",
            QuarterFormLower => "eqv1_lower",
            HalfFormUpper => "eqv1_upper",
            ReImGap => "th1",
            ReImGapSquared => "th2",
            SumDiffGap => "th3",
            SumDiffGapSquared => "th4",
            CommutatorForm => "lem1",
            CommutatorReIm => "th5_i",
            CommutatorSumDiff => "th5_ii",
            SymCommutatorReIm => "cor5_i",
            SymCommutatorSumDiff => "cor5_ii",
            SymCommutatorMinReIm => "ineq31",
            SymCommutatorMinSumDiff => "ineq32",
            SymCommutatorNormRadius => "zamani",
        }
    }
}

/// `Lower`: the report asserts `lhs ≥ rhs`. `Upper`: `lhs ≤ rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
}

/// One evaluated inequality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub formula_id: FormulaId,
    pub kind: BoundKind,
    pub lhs: f64,
    pub rhs: f64,
    /// Oriented so that a non-negative slack means the inequality holds.
    pub slack: f64,
    pub holds: bool,
    pub tight: bool,
    /// `max(|lhs|, |rhs|, λ_max(A))`, the reference for relative tolerances.
    pub scale: f64,
    /// Set when a radicand `w² − c` went negative through rounding and was
    /// clamped to zero.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub clamped: bool,
    /// Sign of the commutator, for commutator reports.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<Sign>,
}

impl BoundReport {
    pub fn new(formula_id: FormulaId, lhs: f64, rhs: f64, lambda_max: f64, tol: &TolerancePolicy) -> Self {
        let kind = formula_id.kind();
        let slack = match kind {
            BoundKind::Lower => lhs - rhs,
            BoundKind::Upper => rhs - lhs,
        };
        let scale = lhs.abs().max(rhs.abs()).max(lambda_max);
        let holds = slack >= -tol.check_rel_tol * scale;
        let tight = holds && slack.abs() <= tol.equality_rel_tol * scale;
        Self { formula_id, kind, lhs, rhs, slack, holds, tight, scale, clamped: false, sign: None }
    }

    fn with_clamp(mut self, clamped: bool) -> Self {
        self.clamped = clamped;
        self
    }

    fn with_sign(mut self, sign: Sign) -> Self {
        self.sign = Some(sign);
        self
    }

    /// Whether the slack is at least `-rel_tol · scale`.
    pub fn holds_within(&self, rel_tol: f64) -> bool {
        self.slack >= -rel_tol * self.scale
    }
}

/// The A-seminorms every bound is built from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CartesianNorms {
    /// `‖T‖_A`
    pub norm: f64,
    /// `‖T♯T + TT♯‖_A`
    pub sharp_sum: f64,
    /// `‖Re_A(T)‖_A`
    pub re: f64,
    /// `‖Im_A(T)‖_A`
    pub im: f64,
    /// `‖Re_A(T) + Im_A(T)‖_A`
    pub re_plus_im: f64,
    /// `‖Re_A(T) − Im_A(T)‖_A`
    pub re_minus_im: f64,
}

impl CartesianNorms {
    pub fn of(op: &AOperator) -> Self {
        let ctx = op.ctx();
        let sn = |m| crate::linalg::spectral_norm(&ctx.compress(m));
        Self {
            norm: op.seminorm(),
            sharp_sum: op.sharp_sum_seminorm(),
            re: op.re_seminorm(),
            im: op.im_seminorm(),
            re_plus_im: sn(&(op.re_part() + op.im_part())),
            re_minus_im: sn(&(op.re_part() - op.im_part())),
        }
    }

    /// `|R² − J²|/2`, the term subtracted in the first commutator refinement.
    pub fn re_im_square_gap(&self) -> f64 {
        (self.re * self.re - self.im * self.im).abs() / 2.0
    }

    /// `|P² − M²|/4`, the term subtracted in the second commutator refinement.
    pub fn sum_diff_square_gap(&self) -> f64 {
        (self.re_plus_im.powi(2) - self.re_minus_im.powi(2)).abs() / 4.0
    }
}

fn report(op: &AOperator, id: FormulaId, lhs: f64, rhs: f64) -> BoundReport {
    BoundReport::new(id, lhs, rhs, op.ctx().lambda_max(), op.ctx().tol())
}

/// The two-sided seminorm sandwich and its quadratic-form refinement:
/// `N/2 ≤ w ≤ N` and `Q/4 ≤ w² ≤ Q/2`.
pub fn classic_bounds(op: &AOperator, rad: &RadiusEstimate) -> [BoundReport; 4] {
    let n = CartesianNorms::of(op);
    [
        report(op, FormulaId::HalfNormLower, rad.lower, n.norm / 2.0),
        report(op, FormulaId::NormUpper, rad.upper, n.norm),
        report(op, FormulaId::QuarterFormLower, rad.lower * rad.lower, n.sharp_sum / 4.0),
        report(op, FormulaId::HalfFormUpper, rad.upper * rad.upper, n.sharp_sum / 2.0),
    ]
}

/// `w ≥ N/2 + |R − J|/2`.
pub fn re_im_gap_bound(op: &AOperator, rad: &RadiusEstimate) -> BoundReport {
    let n = CartesianNorms::of(op);
    report(op, FormulaId::ReImGap, rad.lower, re_im_gap_rhs(&n))
}

fn re_im_gap_rhs(n: &CartesianNorms) -> f64 {
    n.norm / 2.0 + (n.re - n.im).abs() / 2.0
}

/// `w ≥ √(Q/4 + |R² − J²|/2)`.
pub fn re_im_gap_squared_bound(op: &AOperator, rad: &RadiusEstimate) -> BoundReport {
    let n = CartesianNorms::of(op);
    report(op, FormulaId::ReImGapSquared, rad.lower, re_im_gap_squared_rhs(&n))
}

fn re_im_gap_squared_rhs(n: &CartesianNorms) -> f64 {
    (n.sharp_sum / 4.0 + n.re_im_square_gap()).sqrt()
}

/// `w ≥ N/2 + |P − M|/(2√2)`.
pub fn sum_diff_gap_bound(op: &AOperator, rad: &RadiusEstimate) -> BoundReport {
    let n = CartesianNorms::of(op);
    report(op, FormulaId::SumDiffGap, rad.lower, sum_diff_gap_rhs(&n))
}

fn sum_diff_gap_rhs(n: &CartesianNorms) -> f64 {
    n.norm / 2.0 + (n.re_plus_im - n.re_minus_im).abs() / TWO_SQRT_2
}

/// `w ≥ √(Q/4 + |P² − M²|/4)`.
pub fn sum_diff_gap_squared_bound(op: &AOperator, rad: &RadiusEstimate) -> BoundReport {
    let n = CartesianNorms::of(op);
    report(op, FormulaId::SumDiffGapSquared, rad.lower, sum_diff_gap_squared_rhs(&n))
}

fn sum_diff_gap_squared_rhs(n: &CartesianNorms) -> f64 {
    (n.sharp_sum / 4.0 + n.sum_diff_square_gap()).sqrt()
}

/// All eight single-operator reports: the four classical ones followed by the
/// four refinements.
pub fn single_operator_bounds(op: &AOperator, rad: &RadiusEstimate) -> Vec<BoundReport> {
    let n = CartesianNorms::of(op);
    let mut out = classic_bounds(op, rad).to_vec();
    out.push(report(op, FormulaId::ReImGap, rad.lower, re_im_gap_rhs(&n)));
    out.push(report(op, FormulaId::ReImGapSquared, rad.lower, re_im_gap_squared_rhs(&n)));
    out.push(report(op, FormulaId::SumDiffGap, rad.lower, sum_diff_gap_rhs(&n)));
    out.push(report(op, FormulaId::SumDiffGapSquared, rad.lower, sum_diff_gap_squared_rhs(&n)));
    out
}

/// Which refinement gave the larger lower bound on one operator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RefinementComparison {
    /// `rhs(ReImGap) − rhs(SumDiffGap)`.
    pub linear_gap: f64,
    /// `rhs(ReImGapSquared) − rhs(SumDiffGapSquared)`.
    pub squared_gap: f64,
}

pub fn compare_refinements(op: &AOperator) -> RefinementComparison {
    let n = CartesianNorms::of(op);
    RefinementComparison {
        linear_gap: re_im_gap_rhs(&n) - sum_diff_gap_rhs(&n),
        squared_gap: re_im_gap_squared_rhs(&n) - sum_diff_gap_squared_rhs(&n),
    }
}

/// Which equality case a diagnostic examines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EqualityCase {
    /// `w = N/2`
    HalfNorm,
    /// `w = √(Q/4)`
    QuarterForm,
}

/// Diagnostic for one equality case of the lower bounds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EqualityDiagnostic {
    pub case_id: EqualityCase,
    /// `w` equals `target` within `equality_rel_tol`.
    pub equality_holds: bool,
    /// `‖Re_A(e^{iθ}T)‖_A` and `‖Im_A(e^{iθ}T)‖_A` equal `target` on the whole grid.
    pub re_im_constant: bool,
    pub disk: DiskTestResult,
    pub target: f64,
}

impl EqualityDiagnostic {
    /// Equality must force both the constant-parts condition and the disk
    /// shape; anything else is a counterexample.
    pub fn consistent(&self) -> bool {
        !self.equality_holds || (self.re_im_constant && self.disk.is_disk)
    }
}

fn equality_diagnostic(
    op: &AOperator,
    rad: &RadiusEstimate,
    grid_n: usize,
    case_id: EqualityCase,
    target: f64,
) -> Result<EqualityDiagnostic> {
    let ctx = op.ctx();
    let eq_tol = ctx.tol().equality_rel_tol;
    let w = rad.lower;
    let scale = w.max(target).max(ctx.lambda_max());
    let equality_holds = (w - target).abs() <= eq_tol * scale;

    let f = SupportFunction::new(op);
    let grid_scale = target.max(ctx.lambda_max());
    let re_im_constant = (0..grid_n).all(|j| {
        let theta = j as f64 * std::f64::consts::PI / grid_n as f64;
        (f.re_norm(theta) - target).abs() <= eq_tol * grid_scale
            && (f.im_norm(theta) - target).abs() <= eq_tol * grid_scale
    });
    let disk = disk_test(op, grid_n)?;
    Ok(EqualityDiagnostic { case_id, equality_holds, re_im_constant, disk, target })
}

/// `w = N/2` and the conditions it forces: constant `‖Re_A(e^{iθ}T)‖_A =
/// ‖Im_A(e^{iθ}T)‖_A = N/2`, and `W_A(T)` a centered disk of radius `N/2`.
pub fn equality_half_norm(op: &AOperator, rad: &RadiusEstimate, grid_n: usize) -> Result<EqualityDiagnostic> {
    equality_diagnostic(op, rad, grid_n, EqualityCase::HalfNorm, op.seminorm() / 2.0)
}

/// `w = √(Q/4)` and the conditions it forces, as for [`equality_half_norm`].
pub fn equality_quarter_form(op: &AOperator, rad: &RadiusEstimate, grid_n: usize) -> Result<EqualityDiagnostic> {
    let target = (op.sharp_sum_seminorm() / 4.0).sqrt();
    equality_diagnostic(op, rad, grid_n, EqualityCase::QuarterForm, target)
}

/// Whether `op` has `‖Re_A(T)‖_A = ‖Im_A(T)‖_A = N/2` at θ = 0 while
/// `w > N/2`: the necessary condition holds at one angle without equality.
pub fn half_norm_converse_fails(op: &AOperator, rad: &RadiusEstimate) -> bool {
    let n = CartesianNorms::of(op);
    let tol = op.ctx().tol();
    let scale = n.norm.max(op.ctx().lambda_max());
    let half = n.norm / 2.0;
    let parts_match =
        (n.re - half).abs() <= tol.equality_rel_tol * scale && (n.im - half).abs() <= tol.equality_rel_tol * scale;
    parts_match && rad.lower - half > tol.equality_rel_tol * scale
}

fn radicand(w: f64, subtract: f64) -> (f64, bool) {
    let r = w * w - subtract;
    if r < 0.0 {
        (0.0, true)
    } else {
        (r.sqrt(), false)
    }
}

/// Reports for `w_A(TX ± YT)`, all sharing one radius scan of the commutator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommutatorReports {
    pub sign: Sign,
    pub commutator_radius: RadiusEstimate,
    /// `max(‖X‖, ‖Y‖) √(2Q)`
    pub form_bound: BoundReport,
    pub re_im: BoundReport,
    pub sum_diff: BoundReport,
}

impl CommutatorReports {
    pub fn reports(&self) -> [&BoundReport; 3] {
        [&self.form_bound, &self.re_im, &self.sum_diff]
    }
}

/// Evaluates the three upper bounds on `w_A(TX ± YT)`. `rad_t` is the
/// enclosure of `w_A(T)`; its upper end enters the radicands.
pub fn commutator_bounds(
    t: &AOperator,
    x: &AOperator,
    y: &AOperator,
    sign: Sign,
    rad_t: &RadiusEstimate,
    grid_n: usize,
) -> Result<CommutatorReports> {
    let comm = generalized_commutator(t, x, y, sign)?;
    let rad_c = radius_theta_scan(&comm, grid_n, true)?;
    let n = CartesianNorms::of(t);
    let xy = x.seminorm().max(y.seminorm());
    let lhs = rad_c.upper;

    let form_bound = report(t, FormulaId::CommutatorForm, lhs, xy * (2.0 * n.sharp_sum).sqrt()).with_sign(sign);
    let (r1, c1) = radicand(rad_t.upper, n.re_im_square_gap());
    let re_im = report(t, FormulaId::CommutatorReIm, lhs, TWO_SQRT_2 * xy * r1).with_clamp(c1).with_sign(sign);
    let (r2, c2) = radicand(rad_t.upper, n.sum_diff_square_gap());
    let sum_diff = report(t, FormulaId::CommutatorSumDiff, lhs, TWO_SQRT_2 * xy * r2).with_clamp(c2).with_sign(sign);

    Ok(CommutatorReports { sign, commutator_radius: rad_c, form_bound, re_im, sum_diff })
}

/// `w_A(TX ± YT) ≤ max(‖X‖_A, ‖Y‖_A) √(2‖T♯T + TT♯‖_A)`.
pub fn commutator_lemma(t: &AOperator, x: &AOperator, y: &AOperator, sign: Sign, grid_n: usize) -> Result<BoundReport> {
    let rad_t = radius_theta_scan(t, grid_n, true)?;
    Ok(commutator_bounds(t, x, y, sign, &rad_t, grid_n)?.form_bound)
}

/// The two refined commutator bounds, in the order `[re_im, sum_diff]`.
pub fn commutator_refined(
    t: &AOperator,
    x: &AOperator,
    y: &AOperator,
    sign: Sign,
    rad_t: &RadiusEstimate,
    grid_n: usize,
) -> Result<[BoundReport; 2]> {
    let r = commutator_bounds(t, x, y, sign, rad_t, grid_n)?;
    Ok([r.re_im, r.sum_diff])
}

/// The symmetric commutator `TS ± ST` against the refined bounds and the
/// plain `2√2 min(‖T‖ w(S), ‖S‖ w(T))` bound they sharpen.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommutatorComparison {
    /// `‖S‖ √(w(T)² − |R_T² − J_T²|/2)`
    pub alpha1: f64,
    /// `‖T‖ √(w(S)² − |R_S² − J_S²|/2)`
    pub alpha2: f64,
    /// `‖S‖ √(w(T)² − |P_T² − M_T²|/4)`
    pub beta1: f64,
    /// `‖T‖ √(w(S)² − |P_S² − M_S²|/4)`
    pub beta2: f64,
    pub zamani_bound: f64,
    /// `2√2 min(α₁, α₂)`
    pub refined31: f64,
    /// `2√2 min(β₁, β₂)`
    pub refined32: f64,
    /// Upper end of the enclosure of `w_A(TS + ST)`.
    pub w_plus: f64,
    /// Upper end of the enclosure of `w_A(TS − ST)`.
    pub w_minus: f64,
    /// Any radicand clamped at zero.
    pub clamped: bool,
    pub lambda_max: f64,
    /// Five reports per sign, `+` first. Carried in the suite's report list
    /// rather than serialized twice.
    #[serde(skip)]
    pub reports: Vec<BoundReport>,
}

impl CommutatorComparison {
    fn scale(&self) -> f64 {
        [self.zamani_bound, self.refined31, self.refined32, self.w_plus, self.w_minus, self.lambda_max]
            .into_iter()
            .fold(0.0, f64::max)
    }

    /// `refined31 ≤ zamani_bound` and `refined32 ≤ zamani_bound` within
    /// `rel_tol · scale`.
    pub fn refined_dominates(&self, rel_tol: f64) -> bool {
        let slack = rel_tol * self.scale();
        self.refined31 <= self.zamani_bound + slack && self.refined32 <= self.zamani_bound + slack
    }

    /// `w_A(TS ± ST)` below both refined bounds within `rel_tol · scale`.
    pub fn commutators_bounded(&self, rel_tol: f64) -> bool {
        let slack = rel_tol * self.scale();
        let bound = self.refined31.min(self.refined32) + slack;
        self.w_plus <= bound && self.w_minus <= bound
    }
}

/// Evaluates both signs of the symmetric commutator `TS ± ST`.
pub fn commutator_compare(
    t: &AOperator,
    s: &AOperator,
    rad_t: &RadiusEstimate,
    rad_s: &RadiusEstimate,
    grid_n: usize,
) -> Result<CommutatorComparison> {
    if !t.same_context(s) {
        return Err(Error::ContextMismatch);
    }
    let nt = CartesianNorms::of(t);
    let ns = CartesianNorms::of(s);
    let (wt, ws) = (rad_t.upper, rad_s.upper);

    let (rt1, ct1) = radicand(wt, nt.re_im_square_gap());
    let (rs1, cs1) = radicand(ws, ns.re_im_square_gap());
    let (rt2, ct2) = radicand(wt, nt.sum_diff_square_gap());
    let (rs2, cs2) = radicand(ws, ns.sum_diff_square_gap());
    let alpha1 = ns.norm * rt1;
    let alpha2 = nt.norm * rs1;
    let beta1 = ns.norm * rt2;
    let beta2 = nt.norm * rs2;
    let zamani_bound = TWO_SQRT_2 * (nt.norm * ws).min(ns.norm * wt);
    let refined31 = TWO_SQRT_2 * alpha1.min(alpha2);
    let refined32 = TWO_SQRT_2 * beta1.min(beta2);

    let mut w = [0.0; 2];
    let mut reports = Vec::with_capacity(10);
    for (k, sign) in Sign::BOTH.into_iter().enumerate() {
        let comm = generalized_commutator(t, s, s, sign)?;
        let wc = radius_theta_scan(&comm, grid_n, true)?.upper;
        w[k] = wc;
        for (id, rhs) in [
            (FormulaId::SymCommutatorReIm, TWO_SQRT_2 * alpha1),
            (FormulaId::SymCommutatorSumDiff, TWO_SQRT_2 * beta1),
            (FormulaId::SymCommutatorMinReIm, refined31),
            (FormulaId::SymCommutatorMinSumDiff, refined32),
            (FormulaId::SymCommutatorNormRadius, zamani_bound),
        ] {
            reports.push(report(t, id, wc, rhs).with_sign(sign));
        }
    }

    Ok(CommutatorComparison {
        alpha1,
        alpha2,
        beta1,
        beta2,
        zamani_bound,
        refined31,
        refined32,
        w_plus: w[0],
        w_minus: w[1],
        clamped: ct1 || cs1 || ct2 || cs2,
        lambda_max: t.ctx().lambda_max(),
        reports,
    })
}
