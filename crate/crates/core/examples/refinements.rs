// The four refined lower bounds against the classical ones on random instances.

use semihilbert::bounds::{single_operator_bounds, FormulaId};
use semihilbert::instance::{gen_instance, Construction, InstanceSpec};
use semihilbert::radius::radius_theta_scan;
use semihilbert::TolerancePolicy;

fn main() -> semihilbert::Result<()> {
    println!(
        "{:>4} {:>4} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "dim", "rank", "w lower", "N/2", "re/im", "sum/diff", "re/im²", "sum/diff²"
    );
    for seed in 0..8 {
        let dim = 2 + seed as usize % 5;
        let spec = InstanceSpec::new(dim, dim - seed as usize % 2, Construction::Random, seed);
        let inst = gen_instance(&spec)?.bind(TolerancePolicy::default())?;
        let rad = radius_theta_scan(&inst.t, 720, true)?;
        let reports = single_operator_bounds(&inst.t, &rad);
        let rhs = |id| reports.iter().find(|r| r.formula_id == id).unwrap().rhs;
        println!(
            "{:>4} {:>4} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>10.6}",
            dim,
            spec.rank_a,
            rad.lower,
            rhs(FormulaId::HalfNormLower),
            rhs(FormulaId::ReImGap),
            rhs(FormulaId::SumDiffGap),
            rhs(FormulaId::ReImGapSquared),
            rhs(FormulaId::SumDiffGapSquared),
        );
    }
    Ok(())
}
