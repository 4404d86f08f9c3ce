//! Randomized invariants over small instances.

use std::f64::consts::PI;
use std::sync::Arc;

use proptest::prelude::*;
use semihilbert::bounds::{single_operator_bounds, BoundKind};
use semihilbert::instance::{gen_instance, BoundInstance, Construction, InstanceSpec};
use semihilbert::linalg::spectral_norm;
use semihilbert::radius::{radius_sampling, radius_theta_scan, SupportFunction};
use semihilbert::semi_hilbert::structural_residuals;
use semihilbert::{c64, AOperator, ComplexMatrix, ComplexVector, PsdContext, TolerancePolicy};

fn instance() -> impl Strategy<Value = BoundInstance> {
    (2usize..=6, any::<u64>(), 0.0f64..=1.0).prop_map(|(dim, seed, r)| {
        let rank = 1 + ((dim - 1) as f64 * r).round() as usize;
        let spec = InstanceSpec::new(dim, rank, Construction::Random, seed);
        gen_instance(&spec).unwrap().bind(TolerancePolicy::default()).unwrap()
    })
}

fn rel_close(a: f64, b: f64, tol: f64, scale: f64) -> bool {
    (a - b).abs() <= tol * scale.max(1e-300)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn adjoint_residual_is_small(b in instance()) {
        let t = &b.t;
        let at_sharp = b.ctx.a() * t.sharp();
        let tsa = &t.t().adjoint() * b.ctx.a();
        let scale = spectral_norm(&tsa).max(b.ctx.lambda_max());
        prop_assert!(spectral_norm(&(&at_sharp - &tsa)) <= 1e-10 * scale);
    }

    #[test]
    fn structural_identities_hold(b in instance()) {
        let s = b.s.as_ref().unwrap();
        let r = structural_residuals(&b.t, s).unwrap();
        prop_assert!(r.max() <= 1e-9, "{:?}", r);
    }

    #[test]
    fn cartesian_parts_are_a_selfadjoint(b in instance()) {
        prop_assert!(b.ctx.is_a_selfadjoint(b.t.re_part()).unwrap());
        prop_assert!(b.ctx.is_a_selfadjoint(b.t.im_part()).unwrap());
    }

    #[test]
    fn seminorm_is_submultiplicative(b in instance()) {
        let s = b.s.as_ref().unwrap();
        let ts = b.t.sibling(b.t.t() * s.t()).unwrap();
        let bound = b.t.seminorm() * s.seminorm();
        prop_assert!(ts.seminorm() <= bound * (1.0 + 1e-12) + 1e-14);
    }

    #[test]
    fn vector_seminorm_is_bounded_by_operator_seminorm(b in instance(), coeffs in prop::collection::vec(-1.0f64..1.0, 12)) {
        let n = b.ctx.dim();
        let g = ComplexVector::from_fn(n, |i, _| c64(coeffs[2 * i], coeffs[2 * i + 1]));
        let x = b.ctx.proj().mul_vec(&g);
        let tx = b.t.t().mul_vec(&x);
        let lhs = b.ctx.a_norm_vec(&tx).unwrap();
        let rhs = b.t.seminorm() * b.ctx.a_norm_vec(&x).unwrap();
        prop_assert!(lhs <= rhs * (1.0 + 1e-10) + 1e-12);
    }

    #[test]
    fn enclosure_brackets_sampling_and_seminorm_sandwich(b in instance(), seed in any::<u64>()) {
        let rad = radius_theta_scan(&b.t, 360, true).unwrap();
        prop_assert!(rad.lower <= rad.upper);
        let s = radius_sampling(&b.t, 2000, seed);
        let scale = rad.upper.max(b.ctx.lambda_max());
        prop_assert!(s.value <= rad.upper + 1e-9 * scale);
        let n = b.t.seminorm();
        prop_assert!(rad.upper >= n / 2.0 - 1e-8 * scale);
        prop_assert!(rad.lower <= n + 1e-8 * scale);
    }

    #[test]
    fn radius_is_rotation_invariant(b in instance(), phi in 0.0f64..(2.0 * PI)) {
        let a = radius_theta_scan(&b.t, 720, true).unwrap();
        let r = radius_theta_scan(&b.t.rotated(phi), 720, true).unwrap();
        // Both enclosures contain the same w, so they must overlap.
        prop_assert!(a.lower <= r.upper && r.lower <= a.upper);
    }

    #[test]
    fn support_function_has_period_pi(b in instance(), theta in 0.0f64..PI) {
        let f = SupportFunction::new(&b.t);
        let scale = f.envelope().max(1.0);
        prop_assert!(rel_close(f.re_norm(theta), f.re_norm(theta + PI), 1e-12, scale));
        prop_assert!(rel_close(f.im_norm(theta), f.re_norm(theta + PI / 2.0), 1e-12, scale));
    }

    #[test]
    fn doubling_the_grid_only_tightens(b in instance()) {
        for refine in [false, true] {
            let coarse = radius_theta_scan(&b.t, 360, refine).unwrap();
            let fine = radius_theta_scan(&b.t, 720, refine).unwrap();
            prop_assert!(fine.lower >= coarse.lower && fine.upper <= coarse.upper);
        }
    }

    #[test]
    fn every_single_operator_bound_holds(b in instance()) {
        let rad = radius_theta_scan(&b.t, 720, true).unwrap();
        for r in single_operator_bounds(&b.t, &rad) {
            prop_assert!(r.holds, "{:?}", r);
            let oriented = match r.kind { BoundKind::Lower => r.lhs - r.rhs, BoundKind::Upper => r.rhs - r.lhs };
            prop_assert_eq!(oriented, r.slack);
        }
    }
}

/// Independent oracle: for `A = diag(a₁, a₂)` with `a₁, a₂ > 0` and real `T`,
/// enumerate unit-A-norm vectors `x = (cos t/√a₁, e^{iφ} sin t/√a₂)` on a
/// fine grid and take the largest `|x* A T x|`.
fn enumerate_diag2(a: [f64; 2], t: [[f64; 2]; 2], steps: usize) -> f64 {
    let mut best = 0.0f64;
    for i in 0..=steps {
        let th = i as f64 * PI / 2.0 / steps as f64;
        for j in 0..(2 * steps) {
            let phi = j as f64 * PI / steps as f64;
            let x0 = c64(th.cos() / a[0].sqrt(), 0.0);
            let x1 = c64(phi.cos(), phi.sin()) * (th.sin() / a[1].sqrt());
            let tx0 = x0 * t[0][0] + x1 * t[0][1];
            let tx1 = x0 * t[1][0] + x1 * t[1][1];
            let q = x0.conj() * tx0 * a[0] + x1.conj() * tx1 * a[1];
            best = best.max(q.norm());
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn enclosure_matches_enumeration_oracle(
        a0 in 0.2f64..5.0, a1 in 0.2f64..5.0,
        t in prop::array::uniform4(-2.0f64..2.0),
    ) {
        let ctx = Arc::new(PsdContext::with_default_tolerance(&ComplexMatrix::from_real_diagonal(&[a0, a1])).unwrap());
        let m = [[t[0], t[1]], [t[2], t[3]]];
        let op = AOperator::new(&ctx, ComplexMatrix::from_real_rows(&m).unwrap()).unwrap();
        let rad = radius_theta_scan(&op, 720, true).unwrap();
        let oracle = enumerate_diag2([a0, a1], m, 400);
        let scale = rad.upper.max(1.0);
        prop_assert!(oracle <= rad.upper + 1e-12 * scale, "oracle {} above {:?}", oracle, rad);
        // Enumeration step π/800 loses at most a relative 1e-4 or so.
        prop_assert!(oracle >= rad.lower * (1.0 - 1e-3), "oracle {} far below {:?}", oracle, rad);
    }
}
