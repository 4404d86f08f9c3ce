// Equality in w = ‖T‖/2: what it forces, and an operator showing the
// one-angle condition alone is not enough.

use std::sync::Arc;

use semihilbert::bounds::{equality_half_norm, equality_quarter_form, half_norm_converse_fails};
use semihilbert::radius::radius_theta_scan;
use semihilbert::{c64, AOperator, ComplexMatrix, PsdContext};

fn report(name: &str, t: &AOperator) -> semihilbert::Result<()> {
    let rad = radius_theta_scan(t, 720, true)?;
    let half = equality_half_norm(t, &rad, 360)?;
    let quarter = equality_quarter_form(t, &rad, 360)?;
    println!("{name}");
    println!("  w in [{:.9}, {:.9}], ‖T‖/2 = {:.9}", rad.lower, rad.upper, t.seminorm() / 2.0);
    println!("  ‖Re‖ = {:.9}, ‖Im‖ = {:.9}", t.re_seminorm(), t.im_seminorm());
    for d in [&half, &quarter] {
        println!(
            "  {:?}: equality {}, constant parts {}, disk {} (deviation {:.2e})",
            d.case_id, d.equality_holds, d.re_im_constant, d.disk.is_disk, d.disk.max_deviation
        );
    }
    println!("  parts match at θ = 0 without equality: {}", half_norm_converse_fails(t, &rad));
    Ok(())
}

fn main() -> semihilbert::Result<()> {
    let weight = ComplexMatrix::from_real_diagonal(&[3.0, 0.5, 1.0]);
    let ctx = Arc::new(PsdContext::with_default_tolerance(&weight)?);
    let z = |re| c64(re, 0.0);

    // T² = 0, so AT² = 0 and equality holds.
    let nilpotent = ComplexMatrix::from_rows(&[
        vec![z(0.0), z(1.0), z(2.0)],
        vec![z(0.0), z(0.0), z(0.0)],
        vec![z(0.0), z(0.0), z(0.0)],
    ])?;
    report("nilpotent", &AOperator::new(&ctx, nilpotent)?)?;

    // Jordan block plus an eigenvalue 0.4 + 0.4i: ‖Re‖ = ‖Im‖ = ‖T‖/2 still,
    // but |0.4 + 0.4i| > 1/2 pushes W(T) outside the disk.
    let identity = Arc::new(PsdContext::with_default_tolerance(&ComplexMatrix::identity(3))?);
    let bumped = ComplexMatrix::from_rows(&[
        vec![z(0.0), z(1.0), z(0.0)],
        vec![z(0.0), z(0.0), z(0.0)],
        vec![z(0.0), z(0.0), c64(0.4, 0.4)],
    ])?;
    report("jordan ⊕ (0.4 + 0.4i)", &AOperator::new(&identity, bumped)?)?;
    Ok(())
}
