// A small verification run, summarized instead of dumped as JSON.

use semihilbert::instance::Construction;
use semihilbert::suite::{run_suite, SuiteConfig};

fn main() -> semihilbert::Result<()> {
    for construction in [Construction::Random, Construction::NilpotentHalf, Construction::SharedEigenbasisSelfadjoint] {
        let config = SuiteConfig { n: 40, dim_min: 2, dim_max: 6, construction, ..SuiteConfig::default() };
        let report = run_suite(&config)?;
        let tight: usize = report.instances.iter().map(|i| i.bounds.iter().filter(|r| r.tight).count()).sum();
        println!(
            "{:<30} {} instances, {} tight reports, {} counterexamples, {:.2} s",
            construction.tag(),
            report.instances.len(),
            tight,
            report.counterexamples.len(),
            report.wall_time
        );
        let t = report.tallies;
        println!("  re/im vs sum/diff (linear):  {} / {} / {} ties", t.linear.first, t.linear.second, t.linear.tie);
        println!("  re/im vs sum/diff (squared): {} / {} / {} ties", t.squared.first, t.squared.second, t.squared.tie);
        for c in &report.counterexamples {
            println!("  instance {} {}: {}", c.index, c.check, c.detail);
        }
    }
    Ok(())
}
