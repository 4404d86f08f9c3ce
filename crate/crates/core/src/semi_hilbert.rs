//! The semi-Hilbertian structure induced by a positive semidefinite `A`.
//!
//! [`PsdContext`] owns `A` together with everything derived from its
//! eigendecomposition (square root, pseudoinverses, range projection).
//! [`AOperator`] binds an operator `T` to a context and caches its A-adjoint
//! `T♯ = A† T* A` and the Cartesian parts `Re_A(T)`, `Im_A(T)`.
//!
//! Operator seminorms are evaluated as `σ_max(A^{1/2} T (A^{1/2})†)`: the
//! substitution `y = A^{1/2} x` turns the supremum over unit-A-norm vectors
//! of `range(A)` into an ordinary spectral norm.

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{c64, hermitian_eig, spectral_norm, ComplexMatrix, ComplexVector, HermEig, TolerancePolicy};

/// `A` and its derived spectral data.
#[derive(Debug, Clone)]
pub struct PsdContext {
    dim: usize,
    a: ComplexMatrix,
    eig: HermEig,
    rank: usize,
    cutoff: f64,
    sqrt_a: ComplexMatrix,
    pinv_a: ComplexMatrix,
    pinv_sqrt_a: ComplexMatrix,
    proj: ComplexMatrix,
    /// Orthonormal basis of `range(A)`, one column per retained eigenvalue.
    range_basis: Option<ComplexMatrix>,
    tol: TolerancePolicy,
}

impl PsdContext {
    /// Decomposes a positive semidefinite `A`.
    ///
    /// The input is symmetrized first. Eigenvalues in
    /// `[-rank_rel_tol·λ_max, rank_rel_tol·λ_max]` are treated as zero; anything
    /// more negative is rejected.
    pub fn new(a_raw: &ComplexMatrix, tol: TolerancePolicy) -> Result<Self> {
        tol.validate()?;
        let dim = a_raw.dim()?;

        let norm = spectral_norm(a_raw);
        let asym = spectral_norm(&(a_raw - &a_raw.adjoint()));
        if asym > tol.check_rel_tol * norm {
            return Err(Error::NotHermitian(if norm > 0.0 { asym / norm } else { asym }));
        }

        let a = a_raw.hermitian_part();
        let eig = hermitian_eig(&a)?;
        let lambda_max = eig.lambda_max();
        let cutoff = tol.rank_rel_tol * lambda_max.max(0.0);
        if eig.lambda_min() < -cutoff || lambda_max < 0.0 {
            return Err(Error::NotPositiveSemidefinite { eigenvalue: eig.lambda_min(), cutoff: -cutoff });
        }

        let kept = |l: f64| l > cutoff;
        let rank = eig.eigenvalues.iter().filter(|&&l| kept(l)).count();
        let sqrt_a = eig.spectral_map(|l| if kept(l) { l.sqrt() } else { 0.0 });
        let pinv_a = eig.spectral_map(|l| if kept(l) { 1.0 / l } else { 0.0 });
        let pinv_sqrt_a = eig.spectral_map(|l| if kept(l) { 1.0 / l.sqrt() } else { 0.0 });
        let proj = eig.spectral_map(|l| if kept(l) { 1.0 } else { 0.0 });

        let range_basis = (rank > 0).then(|| {
            let u = eig.eigenvectors.inner();
            ComplexMatrix::wrap(u.columns(dim - rank, rank).into_owned())
        });

        Ok(Self { dim, a, eig, rank, cutoff, sqrt_a, pinv_a, pinv_sqrt_a, proj, range_basis, tol })
    }

    pub fn with_default_tolerance(a_raw: &ComplexMatrix) -> Result<Self> {
        Self::new(a_raw, TolerancePolicy::default())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The symmetrized `A`.
    pub fn a(&self) -> &ComplexMatrix {
        &self.a
    }

    pub fn eig(&self) -> &HermEig {
        &self.eig
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Largest eigenvalue of `A`, clamped at zero.
    pub fn lambda_max(&self) -> f64 {
        self.eig.lambda_max().max(0.0)
    }

    /// Eigenvalues at or below this value are treated as zero.
    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    pub fn sqrt_a(&self) -> &ComplexMatrix {
        &self.sqrt_a
    }

    pub fn pinv_a(&self) -> &ComplexMatrix {
        &self.pinv_a
    }

    pub fn pinv_sqrt_a(&self) -> &ComplexMatrix {
        &self.pinv_sqrt_a
    }

    /// Orthogonal projection onto `range(A)`.
    pub fn proj(&self) -> &ComplexMatrix {
        &self.proj
    }

    pub fn range_basis(&self) -> Option<&ComplexMatrix> {
        self.range_basis.as_ref()
    }

    pub fn tol(&self) -> &TolerancePolicy {
        &self.tol
    }

    fn check_vec(&self, x: &ComplexVector) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: x.len() });
        }
        Ok(())
    }

    fn check_square(&self, t: &ComplexMatrix) -> Result<()> {
        let n = t.dim()?;
        if n != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: n });
        }
        Ok(())
    }

    /// `⟨x, y⟩_A = y* A x`.
    pub fn a_inner(&self, x: &ComplexVector, y: &ComplexVector) -> Result<Complex64> {
        self.check_vec(x)?;
        self.check_vec(y)?;
        Ok(y.dotc(&self.a.mul_vec(x)))
    }

    /// `‖x‖_A`; zero on `null(A)`.
    pub fn a_norm_vec(&self, x: &ComplexVector) -> Result<f64> {
        Ok(self.a_inner(x, x)?.re.max(0.0).sqrt())
    }

    /// Residual `‖(I − P) T* A‖` of the range inclusion `R(T*A) ⊆ R(A)`,
    /// paired with the threshold it is compared against.
    pub fn adjointability_residual(&self, t: &ComplexMatrix) -> Result<(f64, f64)> {
        self.check_square(t)?;
        let ts_a = &t.adjoint() * &self.a;
        let outside = &ts_a - &(&self.proj * &ts_a);
        let threshold = self.tol.check_rel_tol * spectral_norm(&ts_a).max(self.lambda_max());
        Ok((spectral_norm(&outside), threshold))
    }

    /// Whether `T` admits an A-adjoint.
    pub fn is_adjointable(&self, t: &ComplexMatrix) -> Result<bool> {
        let (residual, threshold) = self.adjointability_residual(t)?;
        Ok(residual <= threshold)
    }

    /// Whether `AT = T*A` within tolerance.
    pub fn is_a_selfadjoint(&self, t: &ComplexMatrix) -> Result<bool> {
        self.check_square(t)?;
        let at = &self.a * t;
        let residual = spectral_norm(&(&at - &at.adjoint()));
        Ok(residual <= self.tol.check_rel_tol * spectral_norm(&at).max(self.lambda_max()))
    }

    /// `A^{1/2} M (A^{1/2})†`, the operator whose spectral norm is `‖M‖_A`.
    pub fn compress(&self, m: &ComplexMatrix) -> ComplexMatrix {
        &(&self.sqrt_a * m) * &self.pinv_sqrt_a
    }

    /// `‖M‖_A = σ_max(A^{1/2} M (A^{1/2})†)` for a square `M` of matching size.
    ///
    /// Only meaningful for adjointable `M`; callers holding an [`AOperator`]
    /// should use [`AOperator::seminorm`].
    pub fn op_seminorm(&self, m: &ComplexMatrix) -> Result<f64> {
        self.check_square(m)?;
        Ok(spectral_norm(&self.compress(m)))
    }
}

/// An operator `T` bound to a [`PsdContext`], with its A-adjoint and
/// A-Cartesian parts.
#[derive(Debug, Clone)]
pub struct AOperator {
    ctx: Arc<PsdContext>,
    t: ComplexMatrix,
    sharp: ComplexMatrix,
    re_a: ComplexMatrix,
    im_a: ComplexMatrix,
    adjoint_residual: f64,
}

impl AOperator {
    /// Binds `T` to `ctx`, computing `T♯ = A† T* A`.
    ///
    /// Fails with [`Error::NotAdjointable`] when `R(T*A) ⊄ R(A)`; test with
    /// [`PsdContext::is_adjointable`] first when that is an expected outcome.
    pub fn new(ctx: &Arc<PsdContext>, t: ComplexMatrix) -> Result<Self> {
        let (residual, threshold) = ctx.adjointability_residual(&t)?;
        if residual > threshold {
            return Err(Error::NotAdjointable { residual, threshold });
        }
        let ts_a = &t.adjoint() * ctx.a();
        let sharp = ctx.pinv_a() * &ts_a;
        let adjoint_residual = spectral_norm(&(&(ctx.a() * &sharp) - &ts_a));
        Ok(Self::from_parts(Arc::clone(ctx), t, sharp, adjoint_residual))
    }

    fn from_parts(ctx: Arc<PsdContext>, t: ComplexMatrix, sharp: ComplexMatrix, adjoint_residual: f64) -> Self {
        let re_a = (&t + &sharp).scale_real(0.5);
        let im_a = (&t - &sharp).scale(c64(0.0, -0.5));
        Self { ctx, t, sharp, re_a, im_a, adjoint_residual }
    }

    pub fn ctx(&self) -> &Arc<PsdContext> {
        &self.ctx
    }

    pub fn t(&self) -> &ComplexMatrix {
        &self.t
    }

    /// `T♯`.
    pub fn sharp(&self) -> &ComplexMatrix {
        &self.sharp
    }

    /// `Re_A(T) = (T + T♯)/2`.
    pub fn re_part(&self) -> &ComplexMatrix {
        &self.re_a
    }

    /// `Im_A(T) = (T − T♯)/(2i)`.
    pub fn im_part(&self) -> &ComplexMatrix {
        &self.im_a
    }

    /// `‖A T♯ − T* A‖` at construction time.
    pub fn adjoint_residual(&self) -> f64 {
        self.adjoint_residual
    }

    /// `‖T‖_A`.
    pub fn seminorm(&self) -> f64 {
        spectral_norm(&self.ctx.compress(&self.t))
    }

    /// `T♯T + TT♯`.
    pub fn sharp_sum(&self) -> ComplexMatrix {
        &(&self.sharp * &self.t) + &(&self.t * &self.sharp)
    }

    /// `‖T♯T + TT♯‖_A`.
    pub fn sharp_sum_seminorm(&self) -> f64 {
        spectral_norm(&self.ctx.compress(&self.sharp_sum()))
    }

    pub fn re_seminorm(&self) -> f64 {
        spectral_norm(&self.ctx.compress(&self.re_a))
    }

    pub fn im_seminorm(&self) -> f64 {
        spectral_norm(&self.ctx.compress(&self.im_a))
    }

    /// `e^{iφ} T`, reusing the cached adjoint (`(e^{iφ}T)♯ = e^{−iφ} T♯`).
    pub fn rotated(&self, phi: f64) -> Self {
        let z = Complex64::from_polar(1.0, phi);
        let t = self.t.scale(z);
        let sharp = self.sharp.scale(z.conj());
        Self::from_parts(Arc::clone(&self.ctx), t, sharp, self.adjoint_residual)
    }

    /// `Re_A(e^{iθ}T) = cos θ · Re_A(T) − sin θ · Im_A(T)`.
    pub fn rotated_re_part(&self, theta: f64) -> ComplexMatrix {
        let (s, c) = theta.sin_cos();
        &self.re_a.scale_real(c) - &self.im_a.scale_real(s)
    }

    /// `Im_A(e^{iθ}T) = sin θ · Re_A(T) + cos θ · Im_A(T)`.
    pub fn rotated_im_part(&self, theta: f64) -> ComplexMatrix {
        let (s, c) = theta.sin_cos();
        &self.re_a.scale_real(s) + &self.im_a.scale_real(c)
    }

    pub fn same_context(&self, other: &AOperator) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx.a() == other.ctx.a()
    }

    /// Binds another matrix to this operator's context.
    pub fn sibling(&self, m: ComplexMatrix) -> Result<Self> {
        Self::new(&self.ctx, m)
    }
}

/// `T X ± Y T` as an operator on the shared context.
pub fn generalized_commutator(t: &AOperator, x: &AOperator, y: &AOperator, sign: Sign) -> Result<AOperator> {
    if !t.same_context(x) || !t.same_context(y) {
        return Err(Error::ContextMismatch);
    }
    let tx = t.t() * x.t();
    let yt = y.t() * t.t();
    let m = match sign {
        Sign::Plus => &tx + &yt,
        Sign::Minus => &tx - &yt,
    };
    t.sibling(m)
}

/// Which of `TX + YT` / `TX − YT` is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];
}

/// Relative residuals of the algebraic identities the A-adjoint must satisfy.
/// Each entry is a residual divided by the size of the products forming it.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct StructuralResiduals {
    /// Worst of the four Penrose identities for `A` and `A†`.
    pub penrose: f64,
    /// `(T♯)♯ = P T P`.
    pub involution: f64,
    /// `(TS)♯ = S♯ T♯`.
    pub reverse_order: f64,
    /// `‖T♯T‖_A = ‖TT♯‖_A = ‖T♯‖_A² = ‖T‖_A²`.
    pub c_star: f64,
}

impl StructuralResiduals {
    pub fn max(&self) -> f64 {
        self.penrose.max(self.involution).max(self.reverse_order).max(self.c_star)
    }
}

fn rel(residual: f64, size: f64) -> f64 {
    if size > 0.0 {
        residual / size
    } else {
        residual
    }
}

/// Evaluates [`StructuralResiduals`] for `t` and a second operator `s` on the
/// same context.
pub fn structural_residuals(t: &AOperator, s: &AOperator) -> Result<StructuralResiduals> {
    if !t.same_context(s) {
        return Err(Error::ContextMismatch);
    }
    let ctx = t.ctx();
    let a = ctx.a();
    let ap = ctx.pinv_a();
    let a_size = spectral_norm(a);
    let ap_size = spectral_norm(ap);
    let aap = a * ap;
    let apa = ap * a;
    let penrose = [
        rel(spectral_norm(&(&(&aap * a) - a)), a_size),
        rel(spectral_norm(&(&(&apa * ap) - ap)), ap_size),
        spectral_norm(&(&aap - &aap.adjoint())),
        spectral_norm(&(&apa - &apa.adjoint())),
    ]
    .into_iter()
    .fold(0.0, f64::max);

    // An A-adjoint is the product A† · (M* A); rounding in it scales with
    // ‖A†‖·‖M* A‖, which is the size each identity is measured against.
    let sharp_size = |m: &ComplexMatrix| ap_size * spectral_norm(&(&m.adjoint() * a));
    let p = ctx.proj();
    let ptp = &(p * t.t()) * p;
    let double = t.sibling(t.sharp().clone())?;
    let involution = rel(spectral_norm(&(double.sharp() - &ptp)), sharp_size(t.sharp()).max(spectral_norm(&ptp)));

    let ts = t.sibling(t.t() * s.t())?;
    let law = s.sharp() * t.sharp();
    let law_size = spectral_norm(s.sharp()) * spectral_norm(t.sharp());
    let reverse_order = rel(spectral_norm(&(ts.sharp() - &law)), sharp_size(ts.t()).max(law_size));

    let n2 = t.seminorm().powi(2);
    let c_star =
        [ctx.op_seminorm(&(t.sharp() * t.t()))?, ctx.op_seminorm(&(t.t() * t.sharp()))?, double.seminorm().powi(2)]
            .into_iter()
            .map(|v| (v - n2).abs())
            .fold(0.0, f64::max);
    let c_star = rel(c_star, n2.max(ctx.lambda_max()));

    Ok(StructuralResiduals { penrose, involution, reverse_order, c_star })
}
