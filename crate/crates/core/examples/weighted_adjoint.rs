// A singular or non-identity weight changes the adjoint: T♯ = A†T*A.

use std::sync::Arc;

use semihilbert::radius::{radius_sampling, radius_theta_scan};
use semihilbert::{AOperator, ComplexMatrix, PsdContext};

fn main() -> semihilbert::Result<()> {
    let t = ComplexMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]])?;

    let weighted = Arc::new(PsdContext::with_default_tolerance(&ComplexMatrix::from_real_diagonal(&[2.0, 1.0]))?);
    let op = AOperator::new(&weighted, t.clone())?;
    println!("A = diag(2, 1)");
    println!("T♯ = {:?}", op.sharp());
    println!("‖T‖_A = {} (√2 = {})", op.seminorm(), 2f64.sqrt());
    let rad = radius_theta_scan(&op, 720, true)?;
    let s = radius_sampling(&op, 100_000, 1);
    println!("w_A(T) in [{:.9}, {:.9}], sampled {:.9}", rad.lower, rad.upper, s.value);

    // With A = diag(1, 0) the same T maps null(A) into range(A): no A-adjoint.
    let singular = PsdContext::with_default_tolerance(&ComplexMatrix::from_real_diagonal(&[1.0, 0.0]))?;
    let (residual, threshold) = singular.adjointability_residual(&t)?;
    println!(
        "A = diag(1, 0): adjointable {} (residual {residual:.2e}, threshold {threshold:.2e})",
        residual <= threshold
    );

    // Swapping the roles fixes it.
    let tt = ComplexMatrix::from_real_rows(&[[0.0, 0.0], [1.0, 0.0]])?;
    println!("A = diag(1, 0), T = [[0,0],[1,0]]: adjointable {}", singular.is_adjointable(&tt)?);
    Ok(())
}
