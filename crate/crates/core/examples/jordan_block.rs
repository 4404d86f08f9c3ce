// The 2x2 Jordan block under A = I: w(T) = ‖T‖/2 and W(T) is a disk.

use std::sync::Arc;

use semihilbert::bounds::classic_bounds;
use semihilbert::radius::{disk_test, radius_theta_scan};
use semihilbert::{AOperator, ComplexMatrix, PsdContext};

fn main() -> semihilbert::Result<()> {
    let ctx = Arc::new(PsdContext::with_default_tolerance(&ComplexMatrix::identity(2))?);
    let t = AOperator::new(&ctx, ComplexMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]])?)?;

    println!("‖T‖_A      = {}", t.seminorm());
    println!("‖Re_A(T)‖_A = {}", t.re_seminorm());
    println!("‖Im_A(T)‖_A = {}", t.im_seminorm());

    let rad = radius_theta_scan(&t, 720, true)?;
    println!("w_A(T) in [{:.12}, {:.12}]", rad.lower, rad.upper);

    for r in classic_bounds(&t, &rad) {
        println!("{:<10} lhs {:.9} rhs {:.9} holds {} tight {}", r.formula_id.tag(), r.lhs, r.rhs, r.holds, r.tight);
    }

    let disk = disk_test(&t, 360)?;
    println!("disk: {} (radius {:.9}, max deviation {:.2e})", disk.is_disk, disk.radius_k, disk.max_deviation);
    Ok(())
}
