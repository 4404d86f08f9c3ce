// Boundary and interior points of W_A(T) as CSV on stdout.

use std::sync::Arc;

use semihilbert::radius::range_cloud;
use semihilbert::{c64, AOperator, ComplexMatrix, PsdContext};

fn main() -> semihilbert::Result<()> {
    let a = ComplexMatrix::from_real_rows(&[[2.0, 1.0, 0.0], [1.0, 2.0, 0.0], [0.0, 0.0, 0.0]])?;
    let ctx = Arc::new(PsdContext::with_default_tolerance(&a)?);
    let t = ComplexMatrix::from_rows(&[
        vec![c64(1.0, 0.0), c64(0.0, 2.0), c64(0.0, 0.0)],
        vec![c64(0.0, 0.0), c64(-1.0, 0.5), c64(0.0, 0.0)],
        vec![c64(3.0, 0.0), c64(1.0, 1.0), c64(7.0, 0.0)],
    ])?;
    let op = AOperator::new(&ctx, t)?;
    let cloud = range_cloud(&op, 90, 5)?;

    let mut w = csv::Writer::from_writer(std::io::stdout());
    w.write_record(["theta", "re", "im"])?;
    for (z, theta) in cloud.points.iter().zip(&cloud.thetas) {
        w.write_record([theta.map(|t| t.to_string()).unwrap_or_default(), z.re.to_string(), z.im.to_string()])?;
    }
    w.flush()?;
    Ok(())
}
