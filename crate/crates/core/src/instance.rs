//! Instance generation and the instance file format.
//!
//! An instance is a weight `A` plus an operator `T`, and for adjointable
//! constructions three partner operators `X`, `Y`, `S` on the same `A` that
//! feed the commutator checks. Every draw comes from a ChaCha8 stream seeded
//! with the spec's seed; Gaussians are `rand_distr::StandardNormal`, complex
//! entries `(g₁ + i g₂)/√2`.
//!
//! The file format is a JSON object
//! `{"dim": n, "A": [[[re, im], …], …], "T": …, "X": …, "Y": …, "S": …}`
//! with `X`, `Y`, `S` optional and every number written with 17 significant
//! digits, so a round trip through a file reproduces the matrices bit for bit.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix, TolerancePolicy};
use crate::semi_hilbert::{AOperator, PsdContext};

pub const MIN_DIM: usize = 2;
pub const MAX_DIM: usize = 64;
/// Attempts allowed when drawing a non-adjointable operator.
pub const PROBE_RETRY_BUDGET: usize = 100;

/// How `A` and `T` are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    /// `A = GG*` truncated to `rank_a`, `T` a Gaussian operator conditioned on
    /// being adjointable.
    Random,
    /// `T² = 0` exactly, so `AT² = 0` and `w_A(T) = ‖T‖_A / 2`.
    NilpotentHalf,
    /// `A` and `T` diagonal in a common unitary basis with `T` real, so
    /// `AT = T*A` and `w_A(T) = ‖T‖_A`.
    SharedEigenbasisSelfadjoint,
    /// Singular `A` and a dense `T` with `R(T*A) ⊄ R(A)`.
    NonadjointableProbe,
}

impl Construction {
    pub const ALL: [Construction; 4] = [
        Construction::Random,
        Construction::NilpotentHalf,
        Construction::SharedEigenbasisSelfadjoint,
        Construction::NonadjointableProbe,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Construction::Random => "random",
            Construction::NilpotentHalf => "nilpotent_half",
            Construction::SharedEigenbasisSelfadjoint => "shared_eigenbasis_selfadjoint",
            Construction::NonadjointableProbe => "nonadjointable_probe",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.tag() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown construction `{s}`")))
    }

    /// Whether instances of this construction carry partner operators.
    pub fn has_partners(self) -> bool {
        self != Construction::NonadjointableProbe
    }
}

fn default_scale() -> f64 {
    1.0
}

/// Parameters of one generated instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub dim: usize,
    pub rank_a: usize,
    pub construction: Construction,
    pub seed: u64,
    /// Entry magnitude of `T` and the partners.
    #[serde(default = "default_scale")]
    pub scale: f64,
}

impl InstanceSpec {
    pub fn new(dim: usize, rank_a: usize, construction: Construction, seed: u64) -> Self {
        Self { dim, rank_a, construction, seed, scale: 1.0 }
    }

    pub fn validate(&self) -> Result<()> {
        if !(MIN_DIM..=MAX_DIM).contains(&self.dim) {
            return Err(Error::InvalidSpec(format!("dim {} outside {MIN_DIM}..={MAX_DIM}", self.dim)));
        }
        if self.rank_a > self.dim {
            return Err(Error::InvalidSpec(format!("rank_a {} exceeds dim {}", self.rank_a, self.dim)));
        }
        if self.construction == Construction::NonadjointableProbe && self.rank_a == self.dim {
            return Err(Error::InvalidSpec("nonadjointable_probe needs rank_a < dim".into()));
        }
        if !(self.scale.is_finite() && self.scale > 0.0) {
            return Err(Error::InvalidSpec(format!("scale must be positive and finite, got {}", self.scale)));
        }
        Ok(())
    }
}

/// Matrices of one instance. `x`, `y`, `s` are present together or not at all
/// for generated instances; loaded files may carry any subset.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub dim: usize,
    pub a: ComplexMatrix,
    pub t: ComplexMatrix,
    pub x: Option<ComplexMatrix>,
    pub y: Option<ComplexMatrix>,
    pub s: Option<ComplexMatrix>,
}

/// An instance with its context built and operators bound.
#[derive(Debug, Clone)]
pub struct BoundInstance {
    pub ctx: Arc<PsdContext>,
    pub t: AOperator,
    pub x: Option<AOperator>,
    pub y: Option<AOperator>,
    pub s: Option<AOperator>,
}

impl Instance {
    /// Builds the context and binds every operator. Fails with
    /// [`Error::NotAdjointable`] if any operator lacks an A-adjoint.
    pub fn bind(&self, tol: TolerancePolicy) -> Result<BoundInstance> {
        let ctx = Arc::new(PsdContext::new(&self.a, tol)?);
        let bind = |m: &Option<ComplexMatrix>| m.as_ref().map(|m| AOperator::new(&ctx, m.clone())).transpose();
        Ok(BoundInstance {
            t: AOperator::new(&ctx, self.t.clone())?,
            x: bind(&self.x)?,
            y: bind(&self.y)?,
            s: bind(&self.s)?,
            ctx,
        })
    }

    fn matrices(&self) -> impl Iterator<Item = (&'static str, &ComplexMatrix)> {
        [
            ("A", Some(&self.a)),
            ("T", Some(&self.t)),
            ("X", self.x.as_ref()),
            ("Y", self.y.as_ref()),
            ("S", self.s.as_ref()),
        ]
        .into_iter()
        .filter_map(|(k, m)| m.map(|m| (k, m)))
    }

    /// Serializes to the instance file format. Output is a pure function of
    /// the matrices.
    pub fn to_json(&self) -> String {
        let mut out = format!("{{\n  \"dim\": {}", self.dim);
        for (key, m) in self.matrices() {
            write!(out, ",\n  \"{key}\": [").unwrap();
            for i in 0..m.rows() {
                out.push_str(if i == 0 { "\n    [" } else { ",\n    [" });
                for j in 0..m.cols() {
                    let z = m.get(i, j);
                    if j > 0 {
                        out.push_str(", ");
                    }
                    write!(out, "[{:.16e}, {:.16e}]", z.re, z.im).unwrap();
                }
                out.push(']');
            }
            out.push_str("\n  ]");
        }
        out.push_str("\n}\n");
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawInstance = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let dim = raw.dim;
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(Error::Format(format!("dim {dim} outside 1..={MAX_DIM}")));
        }
        let mat = |name: &str, rows: Vec<Vec<[f64; 2]>>| -> Result<ComplexMatrix> {
            if rows.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: rows.len() });
            }
            let mut entries = Vec::with_capacity(dim * dim);
            for row in &rows {
                if row.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, got: row.len() });
                }
                entries.extend(row.iter().map(|&[re, im]| Complex64::new(re, im)));
            }
            ComplexMatrix::from_row_major(dim, dim, &entries).map_err(|e| Error::Format(format!("{name}: {e}")))
        };
        let opt = |name: &str, m: Option<Vec<Vec<[f64; 2]>>>| m.map(|m| mat(name, m)).transpose();
        Ok(Self {
            dim,
            a: mat("A", raw.a)?,
            t: mat("T", raw.t)?,
            x: opt("X", raw.x)?,
            y: opt("Y", raw.y)?,
            s: opt("S", raw.s)?,
        })
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    dim: usize,
    #[serde(rename = "A")]
    a: Vec<Vec<[f64; 2]>>,
    #[serde(rename = "T")]
    t: Vec<Vec<[f64; 2]>>,
    #[serde(rename = "X", default)]
    x: Option<Vec<Vec<[f64; 2]>>>,
    #[serde(rename = "Y", default)]
    y: Option<Vec<Vec<[f64; 2]>>>,
    #[serde(rename = "S", default)]
    s: Option<Vec<Vec<[f64; 2]>>>,
}

fn gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

fn gaussian_matrix(rng: &mut ChaCha8Rng, n: usize, scale: f64) -> DMatrix<Complex64> {
    // Row-major fill keeps the draw order independent of storage layout.
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = gaussian(rng) * scale;
        }
    }
    m
}

/// Haar-distributed unitary: QR of a Gaussian matrix with the phases of
/// `diag(R)` moved into `Q`.
fn random_unitary(rng: &mut ChaCha8Rng, n: usize) -> DMatrix<Complex64> {
    let qr = gaussian_matrix(rng, n, 1.0).qr();
    let (mut q, r) = qr.unpack();
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    q
}

fn conjugate(u: &DMatrix<Complex64>, m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    u * m * u.adjoint()
}

fn diag(values: &[f64]) -> DMatrix<Complex64> {
    DMatrix::from_fn(values.len(), values.len(), |i, j| {
        if i == j {
            Complex64::new(values[i], 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// A Gaussian operator adjointable for `A = U diag(λ) U*`, where `in_range[k]`
/// marks the columns of `U` spanning `range(A)`. In the eigenbasis,
/// adjointability means the block mapping `null(A)` into `range(A)` vanishes.
fn adjointable_operator(rng: &mut ChaCha8Rng, u: &DMatrix<Complex64>, in_range: &[bool], scale: f64) -> ComplexMatrix {
    let n = in_range.len();
    let mut t = gaussian_matrix(rng, n, scale);
    for i in 0..n {
        for j in 0..n {
            if in_range[i] && !in_range[j] {
                t[(i, j)] = Complex64::new(0.0, 0.0);
            }
        }
    }
    ComplexMatrix::wrap(conjugate(u, &t))
}

/// Positive eigenvalues for a weight of the given rank, in `[0.25, 4)` on a
/// log scale so that `A` is well conditioned on its range.
fn weight_spectrum(rng: &mut ChaCha8Rng, n: usize, rank: usize) -> Vec<f64> {
    (0..n).map(|k| if k < rank { 4f64.powf(rng.random_range(-1.0..1.0)) } else { 0.0 }).collect()
}

/// Draws an instance. Deterministic per spec.
pub fn gen_instance(spec: &InstanceSpec) -> Result<Instance> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.dim;
    let r = spec.rank_a;
    let (a, t) = match spec.construction {
        Construction::Random => {
            let g = gaussian_matrix(&mut rng, n, 1.0);
            let gram = ComplexMatrix::wrap(&g * g.adjoint());
            let eig = hermitian_eig(&gram)?;
            // Keep the top `r` eigenvalues; eigenvalues are ascending.
            let kept: Vec<f64> =
                eig.eigenvalues.iter().enumerate().map(|(k, &l)| if k >= n - r { l.max(0.0) } else { 0.0 }).collect();
            let in_range: Vec<bool> = (0..n).map(|k| k >= n - r).collect();
            let u = eig.eigenvectors.inner().clone();
            let a = ComplexMatrix::wrap(conjugate(&u, &diag(&kept))).hermitian_part();
            let t = adjointable_operator(&mut rng, &u, &in_range, spec.scale);
            (a, t)
        }
        Construction::NilpotentHalf => nilpotent_half(&mut rng, n, r, spec.scale),
        Construction::SharedEigenbasisSelfadjoint => {
            let u = random_unitary(&mut rng, n);
            let mut lambda = weight_spectrum(&mut rng, n, r);
            lambda.shuffle(&mut rng);
            let mu: Vec<f64> = (0..n)
                .map(|_| spec.scale * <StandardNormal as Distribution<f64>>::sample(&StandardNormal, &mut rng))
                .collect();
            let a = ComplexMatrix::wrap(conjugate(&u, &diag(&lambda))).hermitian_part();
            let t = ComplexMatrix::wrap(conjugate(&u, &diag(&mu))).hermitian_part();
            (a, t)
        }
        Construction::NonadjointableProbe => {
            let u = random_unitary(&mut rng, n);
            let lambda = weight_spectrum(&mut rng, n, r);
            let a = ComplexMatrix::wrap(conjugate(&u, &diag(&lambda))).hermitian_part();
            let ctx = PsdContext::new(&a, TolerancePolicy::default())?;
            let mut found = None;
            for _ in 0..PROBE_RETRY_BUDGET {
                let t = ComplexMatrix::wrap(gaussian_matrix(&mut rng, n, spec.scale));
                if !ctx.is_adjointable(&t)? {
                    found = Some(t);
                    break;
                }
            }
            let t = found.ok_or(Error::RetryBudgetExhausted(PROBE_RETRY_BUDGET))?;
            return Ok(Instance { dim: n, a, t, x: None, y: None, s: None });
        }
    };

    // Partners are adjointable for the weight actually built, whatever the
    // construction.
    let eig = hermitian_eig(&a)?;
    let cutoff = TolerancePolicy::default().rank_rel_tol * eig.lambda_max().max(0.0);
    let in_range: Vec<bool> = eig.eigenvalues.iter().map(|&l| l > cutoff).collect();
    let u = eig.eigenvectors.inner();
    let mut partner = || adjointable_operator(&mut rng, u, &in_range, spec.scale);
    let (x, y, s) = (partner(), partner(), partner());
    Ok(Instance { dim: n, a, t, x: Some(x), y: Some(y), s: Some(s) })
}

/// `T` supported on rows `S₁` and columns `S₂` of a random permutation, with
/// `S₁ ∩ S₂ = ∅`, so every term of `(T²)ᵢⱼ = Σₖ TᵢₖTₖⱼ` is an exact zero.
/// `A` is block diagonal over `(S₁, S₂)` with a positive definite block on
/// `S₂`; that makes `R(T*A) ⊆ R(A)`, so `T` is adjointable.
fn nilpotent_half(rng: &mut ChaCha8Rng, n: usize, r: usize, scale: f64) -> (ComplexMatrix, ComplexMatrix) {
    let k = if r == 0 { n / 2 } else { (r / 2).clamp(1, n - 1) };
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let (s1, s2) = perm.split_at(n - k);

    let block = |rng: &mut ChaCha8Rng, m: usize, rank: usize| {
        let u = random_unitary(rng, m);
        let mut lambda = weight_spectrum(rng, m, rank);
        lambda.shuffle(rng);
        ComplexMatrix::wrap(conjugate(&u, &diag(&lambda))).hermitian_part()
    };
    let (a1, a2) = if r == 0 {
        (ComplexMatrix::zeros(n - k, n - k), ComplexMatrix::zeros(k, k))
    } else {
        (block(rng, n - k, r - k), block(rng, k, k))
    };

    let mut a = DMatrix::zeros(n, n);
    let mut t = DMatrix::zeros(n, n);
    for (bi, &i) in s1.iter().enumerate() {
        for (bj, &j) in s1.iter().enumerate() {
            a[(i, j)] = a1.get(bi, bj);
        }
        for &j in s2 {
            t[(i, j)] = gaussian(rng) * scale;
        }
    }
    for (bi, &i) in s2.iter().enumerate() {
        for (bj, &j) in s2.iter().enumerate() {
            a[(i, j)] = a2.get(bi, bj);
        }
    }
    (ComplexMatrix::wrap(a), ComplexMatrix::wrap(t))
}
