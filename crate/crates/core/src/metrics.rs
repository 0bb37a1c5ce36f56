//! Generalized metrics and symplectic structures as `𝒢₀(𝒦·, ·)` for an
//! injective endomorphism `𝒦`.
//!
//! With `𝒦 = [[H, σ], [τ, K]]` the form `𝒢₀(𝒦u, v)` has Gram matrix
//! `𝒦ᵀ·G₀ = ½[[τᵀ, Hᵀ], [Kᵀ, σᵀ]]`. Under the crate's index convention
//! `(τX)(Y) = Yᵀ τ X`, so `(τX)(Y) = (τY)(X)` for all `X, Y` is exactly
//! `τ = τᵀ`. For example at `n = 2`, `τ = [[1, 2], [2, 3]]` gives
//! `(τe₁)(e₂) = τ₂₁ = 2 = τ₁₂ = (τe₂)(e₁)`. The same holds for `σ`.

use alloc::vec::Vec;

use crate::canonical::g0_gram;
use crate::linalg::{block2, is_nondegenerate, symmetric_part, Matrix};
use crate::{BaseForm, BilinearForm, BlockOperator, Error, FormKind, Result, Sign, Tolerance};

/// A condition from the characterization that `𝒦` fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InducerViolation {
    NotInjective,
    /// Metric case: `K ≠ H*`.
    KBlockNotHDual,
    /// Symplectic case: `K ≠ −H*`.
    KBlockNotNegHDual,
    TauNotSymmetric,
    SigmaNotSymmetric,
    TauNotSkew,
    SigmaNotSkew,
}

impl InducerViolation {
    /// Stable identifier.
    pub fn as_str(self) -> &'static str {
        match self {
            InducerViolation::NotInjective => "NotInjective",
            InducerViolation::KBlockNotHDual => "KBlockNotHDual",
            InducerViolation::KBlockNotNegHDual => "KBlockNotNegHDual",
            InducerViolation::TauNotSymmetric => "TauNotSymmetric",
            InducerViolation::SigmaNotSymmetric => "SigmaNotSymmetric",
            InducerViolation::TauNotSkew => "TauNotSkew",
            InducerViolation::SigmaNotSkew => "SigmaNotSkew",
        }
    }
}

/// Whether `𝒦` induces the requested structure, and if not, why.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MetricInducerReport {
    violations: Vec<InducerViolation>,
}

impl MetricInducerReport {
    /// `true` iff there are no violations.
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[InducerViolation] {
        &self.violations
    }

    pub fn contains(&self, v: InducerViolation) -> bool {
        self.violations.contains(&v)
    }
}

/// Gram matrix of `(u, v) ↦ 𝒢₀(𝒦u, v)`.
pub fn induced_gram(op: &BlockOperator) -> Matrix {
    op.assemble().transpose() * g0_gram(op.dim().n())
}

fn report(op: &BlockOperator, sign: Sign, tol: Tolerance) -> MetricInducerReport {
    let mut violations = Vec::new();
    let s = sign.value();
    let h_dual = op.h().transpose() * s;
    let same_kind = |m: &Matrix| tol.close(m, &(m.transpose() * s));
    if !is_nondegenerate(&op.assemble(), tol) {
        violations.push(InducerViolation::NotInjective);
    }
    if !tol.close(op.k(), &h_dual) {
        violations.push(match sign {
            Sign::Plus => InducerViolation::KBlockNotHDual,
            Sign::Minus => InducerViolation::KBlockNotNegHDual,
        });
    }
    if !same_kind(op.tau()) {
        violations.push(match sign {
            Sign::Plus => InducerViolation::TauNotSymmetric,
            Sign::Minus => InducerViolation::TauNotSkew,
        });
    }
    if !same_kind(op.sigma()) {
        violations.push(match sign {
            Sign::Plus => InducerViolation::SigmaNotSymmetric,
            Sign::Minus => InducerViolation::SigmaNotSkew,
        });
    }
    MetricInducerReport { violations }
}

fn induced_form(op: &BlockOperator, preferred: FormKind, tol: Tolerance) -> BilinearForm {
    let gram = induced_gram(op);
    BilinearForm::with_tolerance(gram.clone(), preferred, tol)
        .unwrap_or_else(|_| BilinearForm::new(gram, FormKind::General).expect("even shape"))
}

/// `𝒢₀(𝒦·, ·)` with a report on the metric conditions: `K = H*`, `τ` and
/// `σ` symmetric, `𝒦` injective. The form is tagged `Symmetric` whenever its
/// Gram matrix is, and `General` otherwise.
pub fn metric_from_endomorphism(
    op: &BlockOperator,
    tol: Tolerance,
) -> (BilinearForm, MetricInducerReport) {
    (
        induced_form(op, FormKind::Symmetric, tol),
        report(op, Sign::Plus, tol),
    )
}

/// `𝒢₀(𝒦·, ·)` with a report on the symplectic conditions: `K = −H*`, `τ`
/// and `σ` skew, `𝒦` injective.
pub fn symplectic_from_endomorphism(
    op: &BlockOperator,
    tol: Tolerance,
) -> (BilinearForm, MetricInducerReport) {
    (
        induced_form(op, FormKind::Skew, tol),
        report(op, Sign::Minus, tol),
    )
}

/// The unique `𝒦` with `G = 𝒢₀(𝒦·, ·)`, i.e. `𝒦 = G₀⁻¹·Mᵀ`. With `M =
/// [[A, B], [C, D]]` this reads `H = 2Bᵀ, σ = 2Dᵀ, τ = 2Aᵀ, K = 2Cᵀ`.
pub fn endomorphism_from_metric(g: &BilinearForm, tol: Tolerance) -> Result<BlockOperator> {
    if g.kind() != FormKind::Symmetric {
        return Err(Error::FormKind("generalized metric must be symmetric"));
    }
    endomorphism_from_gram(g, tol)
}

/// Skew counterpart of [`endomorphism_from_metric`].
pub fn endomorphism_from_symplectic(w: &BilinearForm, tol: Tolerance) -> Result<BlockOperator> {
    if w.kind() != FormKind::Skew {
        return Err(Error::FormKind(
            "generalized symplectic structure must be skew",
        ));
    }
    endomorphism_from_gram(w, tol)
}

fn endomorphism_from_gram(f: &BilinearForm, tol: Tolerance) -> Result<BlockOperator> {
    if !f.is_nondegenerate(tol) {
        return Err(Error::DegenerateForm);
    }
    let n = f.dim().n();
    let m = f.gram();
    let block = |r: usize, c: usize| m.view((r * n, c * n), (n, n)).transpose() * 2.0;
    BlockOperator::new(block(0, 1), block(1, 1), block(0, 0), block(1, 0))
}

/// `𝒦_{λ,H} = [[H, 0], [0, λH*]]`.
pub fn diagonal_inducer(h: &Matrix, lambda: Sign) -> Result<BlockOperator> {
    if !is_nondegenerate(h, Tolerance::DEFAULT) {
        return Err(Error::NotInjective);
    }
    BlockOperator::diagonal(h.clone(), h.transpose() * lambda.value())
}

/// `ℱ_b = [[0, ♯_b], [♭_b, 0]]` for a nondegenerate metric or 2-form `b`.
pub fn musical_inducer(b: &BaseForm) -> Result<BlockOperator> {
    let m = b.musicals()?;
    BlockOperator::anti_diagonal(m.sharp, m.flat)
}

/// `𝒢_g(X + ξ, Y + η) = g(X, Y) + g(♯ξ, ♯η)`, Gram `[[G, 0], [0, G⁻¹]]`.
pub fn induced_metric(g: &BaseForm) -> Result<BilinearForm> {
    if g.kind() != FormKind::Symmetric {
        return Err(Error::FormKind("induced metric needs a symmetric g"));
    }
    let sharp = g.musicals()?.sharp;
    let n = g.dim().n();
    let z = Matrix::zeros(n, n);
    let lower = symmetric_part(&(sharp.transpose() * g.gram() * &sharp));
    BilinearForm::new(block2(g.gram(), &z, &z, &lower), FormKind::Symmetric)
}

/// `g(X, Y) + ½g(JX, ♯η) + ½g(♯ξ, JY) + g(♯ξ, ♯η)` for an almost complex `J`.
pub fn nannicini_metric(j: &Matrix, g: &BaseForm) -> Result<BilinearForm> {
    if g.kind() != FormKind::Symmetric {
        return Err(Error::FormKind("nannicini metric needs a symmetric g"));
    }
    let n = g.dim().n();
    if j.nrows() != n || j.ncols() != n {
        return Err(Error::Dimension {
            expected: n,
            found: j.nrows(),
        });
    }
    if !Tolerance::DEFAULT.close(&(j * j), &(-Matrix::identity(n, n))) {
        return Err(Error::NotComplex);
    }
    let sharp = g.musicals()?.sharp;
    let gm = g.gram();
    let xy = gm.clone();
    let x_eta = j.transpose() * gm * &sharp * 0.5;
    let xi_y = sharp.transpose() * gm * j * 0.5;
    let xi_eta = sharp.transpose() * gm * &sharp;
    let gram = block2(&xy, &x_eta, &xi_y, &xi_eta);
    BilinearForm::new(symmetric_part(&gram), FormKind::Symmetric)
}
