// Upper bounds on w(TX ± YT) and the symmetric case TS ± ST.

use semihilbert::bounds::{commutator_bounds, commutator_compare};
use semihilbert::instance::{gen_instance, Construction, InstanceSpec};
use semihilbert::radius::radius_theta_scan;
use semihilbert::{Sign, TolerancePolicy};

fn main() -> semihilbert::Result<()> {
    let spec = InstanceSpec::new(4, 3, Construction::Random, 17);
    let inst = gen_instance(&spec)?.bind(TolerancePolicy::default())?;
    let (t, x, y, s) = (&inst.t, inst.x.as_ref().unwrap(), inst.y.as_ref().unwrap(), inst.s.as_ref().unwrap());
    let rad_t = radius_theta_scan(t, 720, true)?;
    let rad_s = radius_theta_scan(s, 720, true)?;

    for sign in Sign::BOTH {
        let c = commutator_bounds(t, x, y, sign, &rad_t, 720)?;
        println!("TX {} YT: w ≤ {:.6}", if sign == Sign::Plus { "+" } else { "-" }, c.commutator_radius.upper);
        for r in c.reports() {
            println!("  {:<7} bound {:.6} slack {:.6}", r.formula_id.tag(), r.rhs, r.slack);
        }
    }

    let cmp = commutator_compare(t, s, &rad_t, &rad_s, 720)?;
    println!("w(TS + ST) ≤ {:.6}, w(TS - ST) ≤ {:.6}", cmp.w_plus, cmp.w_minus);
    println!("alpha = ({:.6}, {:.6}), beta = ({:.6}, {:.6})", cmp.alpha1, cmp.alpha2, cmp.beta1, cmp.beta2);
    println!("plain bound   {:.6}", cmp.zamani_bound);
    println!("re/im bound   {:.6}", cmp.refined31);
    println!("sum/diff bound {:.6}", cmp.refined32);
    Ok(())
}
