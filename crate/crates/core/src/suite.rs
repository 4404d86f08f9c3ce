//! The verification suite: generate an ensemble, evaluate every inequality
//! on every instance, and collect anything that fails.
//!
//! Instances are evaluated in parallel; the report lists them in index order
//! and every per-instance value depends only on the config, so two runs with
//! the same config agree everywhere except `wall_time`.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    commutator_bounds, commutator_compare, compare_refinements, equality_half_norm, equality_quarter_form,
    half_norm_converse_fails, single_operator_bounds, BoundReport, CartesianNorms, CommutatorComparison,
    EqualityDiagnostic, FormulaId, RefinementComparison,
};
use crate::error::{Error, Result};
use crate::instance::{gen_instance, BoundInstance, Construction, InstanceSpec, MAX_DIM, MIN_DIM};
use crate::linalg::TolerancePolicy;
use crate::radius::{
    radius_sampling, radius_theta_scan, RadiusEstimate, SampleEstimate, DEFAULT_DISK_N_THETA, DEFAULT_GRID_N,
    DEFAULT_SAMPLES,
};
use crate::semi_hilbert::{structural_residuals, Sign, StructuralResiduals};

/// Sampling may not exceed the certified upper end by more than this
/// fraction of the scale.
pub const SAMPLING_REL_TOL: f64 = 1e-9;
/// Tolerance for the algebraic dominance checks (refinements against their
/// base inequalities, refined commutator bounds against the plain one).
pub const DOMINANCE_REL_TOL: f64 = 1e-10;
/// Tolerance for the algebraic identities of the A-adjoint.
pub const STRUCTURAL_REL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Number of instances.
    pub n: usize,
    pub dim_min: usize,
    pub dim_max: usize,
    pub seed: u64,
    pub construction: Construction,
    pub grid_n: usize,
    /// Sampling-oracle draws per instance; 0 skips the oracle.
    pub samples: usize,
    pub disk_n_theta: usize,
    pub tol: TolerancePolicy,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            n: 200,
            dim_min: 2,
            dim_max: 8,
            seed: 42,
            construction: Construction::Random,
            grid_n: DEFAULT_GRID_N,
            samples: DEFAULT_SAMPLES,
            disk_n_theta: DEFAULT_DISK_N_THETA,
            tol: TolerancePolicy::default(),
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.dim_min < MIN_DIM || self.dim_max > MAX_DIM || self.dim_min > self.dim_max {
            return Err(Error::InvalidArgument(format!(
                "dims {}..{} must lie within {MIN_DIM}..{MAX_DIM}",
                self.dim_min, self.dim_max
            )));
        }
        if self.grid_n < 4 {
            return Err(Error::InvalidArgument(format!("grid_n must be at least 4, got {}", self.grid_n)));
        }
        if self.disk_n_theta < 8 {
            return Err(Error::InvalidArgument(format!("disk_n_theta must be at least 8, got {}", self.disk_n_theta)));
        }
        self.tol.validate()
    }

    /// The instance specs, in index order. Dimensions are uniform over
    /// `dim_min..=dim_max`; ranks uniform over `1..=dim` (`1..dim` for the
    /// non-adjointable probe).
    pub fn specs(&self) -> Vec<InstanceSpec> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.n)
            .map(|_| {
                let dim = rng.random_range(self.dim_min..=self.dim_max);
                let rank_a = match self.construction {
                    Construction::NonadjointableProbe => rng.random_range(1..dim),
                    _ => rng.random_range(1..=dim),
                };
                InstanceSpec::new(dim, rank_a, self.construction, rng.random())
            })
            .collect()
    }
}

/// What went wrong on one instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub index: usize,
    pub spec: InstanceSpec,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub index: usize,
    pub spec: InstanceSpec,
    pub adjointable: bool,
    /// Generation or evaluation failure, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<RadiusEstimate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sampling: Option<SampleEstimate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub norms: Option<CartesianNorms>,
    #[serde(default)]
    pub bounds: Vec<BoundReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equality: Option<[EqualityDiagnostic; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub commutator: Option<CommutatorComparison>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub refinements: Option<RefinementComparison>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structural: Option<StructuralResiduals>,
    /// Re/Im parts match `‖T‖_A/2` at θ = 0 yet `w_A(T) > ‖T‖_A/2`.
    #[serde(default)]
    pub converse_witness: bool,
}

/// How often each refinement gave the larger lower bound.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominanceTally {
    pub first: usize,
    pub second: usize,
    pub tie: usize,
}

impl DominanceTally {
    fn add(&mut self, gap: f64, scale: f64) {
        if gap.abs() <= DOMINANCE_REL_TOL * scale {
            self.tie += 1;
        } else if gap > 0.0 {
            self.first += 1;
        } else {
            self.second += 1;
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tallies {
    /// `ReImGap` (first) against `SumDiffGap` (second).
    pub linear: DominanceTally,
    /// `ReImGapSquared` (first) against `SumDiffGapSquared` (second).
    pub squared: DominanceTally,
    pub converse_witnesses: usize,
    pub adjointable: usize,
    pub not_adjointable: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub instances: Vec<InstanceReport>,
    pub counterexamples: Vec<Counterexample>,
    pub tallies: Tallies,
    /// Seconds.
    pub wall_time: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    config.validate()?;
    let start = Instant::now();
    let specs = config.specs();
    let evaluated: Vec<(InstanceReport, Vec<Counterexample>)> =
        specs.par_iter().enumerate().map(|(i, spec)| evaluate(i, spec, config)).collect();

    let mut tallies = Tallies::default();
    let mut instances = Vec::with_capacity(evaluated.len());
    let mut counterexamples = Vec::new();
    for (report, bad) in evaluated {
        if report.adjointable {
            tallies.adjointable += 1;
        } else {
            tallies.not_adjointable += 1;
        }
        if let (Some(r), Some(n)) = (&report.refinements, &report.norms) {
            let scale = n.norm.max(1.0);
            tallies.linear.add(r.linear_gap, scale);
            tallies.squared.add(r.squared_gap, scale);
        }
        tallies.converse_witnesses += report.converse_witness as usize;
        counterexamples.extend(bad);
        instances.push(report);
    }
    Ok(SuiteReport { config: *config, instances, counterexamples, tallies, wall_time: start.elapsed().as_secs_f64() })
}

fn empty_report(index: usize, spec: &InstanceSpec) -> InstanceReport {
    InstanceReport {
        index,
        spec: *spec,
        adjointable: false,
        error: None,
        radius: None,
        sampling: None,
        norms: None,
        bounds: Vec::new(),
        equality: None,
        commutator: None,
        refinements: None,
        structural: None,
        converse_witness: false,
    }
}

fn evaluate(index: usize, spec: &InstanceSpec, config: &SuiteConfig) -> (InstanceReport, Vec<Counterexample>) {
    let mut report = empty_report(index, spec);
    let mut bad = Vec::new();
    let mut flag = |check: &str, detail: String| {
        bad.push(Counterexample { index, spec: *spec, check: check.to_string(), detail });
    };

    let instance = match gen_instance(spec) {
        Ok(inst) => inst,
        Err(e) => {
            report.error = Some(e.to_string());
            flag("generation", e.to_string());
            return (report, bad);
        }
    };
    let bound = match instance.bind(config.tol) {
        Ok(b) => b,
        Err(e @ Error::NotAdjointable { .. }) => {
            if spec.construction != Construction::NonadjointableProbe {
                flag("adjointability", e.to_string());
            }
            report.error = Some(e.to_string());
            return (report, bad);
        }
        Err(e) => {
            report.error = Some(e.to_string());
            flag("evaluation", e.to_string());
            return (report, bad);
        }
    };
    report.adjointable = true;
    if spec.construction == Construction::NonadjointableProbe {
        flag("adjointability", "probe instance turned out adjointable".into());
    }

    if let Err(e) = evaluate_bound(&mut report, &bound, config, &mut flag) {
        report.error = Some(e.to_string());
        flag("evaluation", e.to_string());
    }
    (report, bad)
}

fn evaluate_bound(
    report: &mut InstanceReport,
    b: &BoundInstance,
    config: &SuiteConfig,
    flag: &mut impl FnMut(&str, String),
) -> Result<()> {
    let spec = report.spec;
    let t = &b.t;
    let lambda_max = b.ctx.lambda_max();
    let rad = radius_theta_scan(t, config.grid_n, true)?;
    report.radius = Some(rad);
    let norms = CartesianNorms::of(t);
    report.norms = Some(norms);

    if config.samples > 0 {
        let s = radius_sampling(t, config.samples, spec.seed);
        let scale = rad.upper.max(lambda_max);
        if s.value > rad.upper + SAMPLING_REL_TOL * scale {
            flag("sampling", format!("sampled {} above certified upper {}", s.value, rad.upper));
        }
        report.sampling = Some(s);
    }

    let mut reports = single_operator_bounds(t, &rad);

    // Each refinement must sit above the inequality it refines.
    let scale = norms.norm.max(norms.sharp_sum).max(lambda_max);
    let rhs = |id| reports.iter().find(|r: &&BoundReport| r.formula_id == id).map(|r| r.rhs).unwrap_or(0.0);
    let half = norms.norm / 2.0;
    let quarter = norms.sharp_sum / 4.0;
    for (id, value, base) in [
        (FormulaId::ReImGap, rhs(FormulaId::ReImGap), half),
        (FormulaId::SumDiffGap, rhs(FormulaId::SumDiffGap), half),
        (FormulaId::ReImGapSquared, rhs(FormulaId::ReImGapSquared).powi(2), quarter),
        (FormulaId::SumDiffGapSquared, rhs(FormulaId::SumDiffGapSquared).powi(2), quarter),
    ] {
        if value < base - DOMINANCE_REL_TOL * scale {
            flag("refinement", format!("{} gives {value} below its base {base}", id.tag()));
        }
    }
    report.refinements = Some(compare_refinements(t));

    if let (Some(x), Some(y)) = (&b.x, &b.y) {
        for sign in Sign::BOTH {
            let c = commutator_bounds(t, x, y, sign, &rad, config.grid_n)?;
            reports.extend(c.reports().into_iter().cloned());
        }
    }
    if let Some(s) = &b.s {
        let rad_s = radius_theta_scan(s, config.grid_n, true)?;
        let cmp = commutator_compare(t, s, &rad, &rad_s, config.grid_n)?;
        if !cmp.refined_dominates(DOMINANCE_REL_TOL) {
            flag(
                "commutator_dominance",
                format!("refined {} / {} above plain {}", cmp.refined31, cmp.refined32, cmp.zamani_bound),
            );
        }
        if !cmp.commutators_bounded(config.tol.check_rel_tol) {
            flag("commutator_bound", format!("w(TS±ST) = {} / {} above refined bounds", cmp.w_plus, cmp.w_minus));
        }
        reports.extend(cmp.reports.iter().cloned());
        report.structural = Some(structural_residuals(t, s)?);
        report.commutator = Some(cmp);
    }
    if let Some(st) = &report.structural {
        if st.max() > STRUCTURAL_REL_TOL {
            flag("structural", format!("{st:?}"));
        }
    }

    for r in &reports {
        if !r.holds {
            flag(r.formula_id.tag(), format!("lhs {} rhs {} slack {}", r.lhs, r.rhs, r.slack));
        }
    }
    let find = |id| reports.iter().find(|r: &&BoundReport| r.formula_id == id);
    match spec.construction {
        Construction::NilpotentHalf => {
            if let Some(r) = find(FormulaId::HalfNormLower).filter(|r| !r.tight) {
                flag("sharpness", format!("AT² = 0 but eqv_lower not tight: {r:?}"));
            }
        }
        Construction::SharedEigenbasisSelfadjoint => {
            if let Some(r) = find(FormulaId::NormUpper).filter(|r| !r.tight) {
                flag("sharpness", format!("AT = T*A but eqv_upper not tight: {r:?}"));
            }
        }
        _ => {}
    }

    let half = equality_half_norm(t, &rad, config.disk_n_theta)?;
    let quarter = equality_quarter_form(t, &rad, config.disk_n_theta)?;
    for d in [&half, &quarter] {
        if !d.consistent() {
            flag("equality", format!("{d:?}"));
        }
    }
    report.equality = Some([half, quarter]);
    report.converse_witness = half_norm_converse_fails(t, &rad);
    report.bounds = reports;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(n: usize, construction: Construction, dims: (usize, usize)) -> SuiteConfig {
        SuiteConfig {
            n,
            dim_min: dims.0,
            dim_max: dims.1,
            construction,
            samples: 500,
            grid_n: 360,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn empty_suite_is_valid() {
        let report = run_suite(&small(0, Construction::Random, (2, 8))).unwrap();
        assert!(report.instances.is_empty() && report.passed());
        let json = report.to_json().unwrap();
        let back: SuiteReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.config, report.config);
    }

    #[test]
    fn small_random_suite_passes() {
        let report = run_suite(&small(12, Construction::Random, (2, 5))).unwrap();
        assert!(report.passed(), "{:#?}", report.counterexamples);
        assert_eq!(report.tallies.adjointable, 12);
        for (i, inst) in report.instances.iter().enumerate() {
            assert_eq!(inst.index, i);
            // 8 single-operator, 3 per commutator sign, 5 per symmetric sign.
            assert_eq!(inst.bounds.len(), 8 + 6 + 10);
        }
    }

    #[test]
    fn nilpotent_dim2_suite_has_both_equalities() {
        let report = run_suite(&small(10, Construction::NilpotentHalf, (2, 2))).unwrap();
        assert!(report.passed(), "{:#?}", report.counterexamples);
        for inst in &report.instances {
            let [half, quarter] = inst.equality.as_ref().unwrap();
            assert!(half.equality_holds && quarter.equality_holds, "{inst:#?}");
        }
    }

    #[test]
    fn probe_suite_classifies_without_counterexamples() {
        let report = run_suite(&small(5, Construction::NonadjointableProbe, (2, 4))).unwrap();
        assert!(report.passed(), "{:#?}", report.counterexamples);
        assert_eq!(report.tallies.not_adjointable, 5);
        assert!(report.instances.iter().all(|i| !i.adjointable && i.bounds.is_empty()));
    }

    #[test]
    fn suite_is_deterministic() {
        let cfg = small(6, Construction::Random, (2, 4));
        let a = run_suite(&cfg).unwrap();
        let b = run_suite(&cfg).unwrap();
        assert_eq!(a.instances, b.instances);
        assert_eq!(a.tallies, b.tallies);
    }

    #[test]
    fn invalid_configs_are_rejected() {
        for cfg in [
            SuiteConfig { dim_min: 1, ..SuiteConfig::default() },
            SuiteConfig { dim_min: 5, dim_max: 4, ..SuiteConfig::default() },
            SuiteConfig { grid_n: 2, ..SuiteConfig::default() },
        ] {
            assert!(run_suite(&cfg).is_err());
        }
    }
}
