//! `(α, ε)`-metric structures on `V ⊕ V*`: builders, classification,
//! fundamental tensors and the base-fiber identities they rest on.
//!
//! A pair `(𝒦, 𝒢)` is an `(α, ε)`-metric structure when `𝒦² = α·Id` and
//! `𝒢(𝒦u, 𝒦v) = ε·𝒢(u, v)`. Its fundamental tensor is `Φ(u, v) = 𝒢(𝒦u, v)`.

mod extract;
mod families;
mod twin;

use core::fmt;

pub use extract::{extract_base_complex, extract_base_complex_traced};
pub use families::{
    build_diagonal, build_family, build_mixed, build_musical, build_triangular, BaseData, Family,
    Variant,
};
pub use twin::{closed_form, designated_form, twin_formula_check, DesignatedMetric};

use crate::linalg::{identity, skew_part, symmetric_part, Matrix};
use crate::{
    polynomial_class, BaseForm, BilinearForm, BlockOperator, Error, FiberDim, FormKind,
    PolynomialClass, Result, Sign, Tolerance,
};

/// Named kinds of `(α, ε)`-metric structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructureName {
    ProductRiemannian,
    ProductPseudoRiemannian,
    ParaNorden,
    ParaHermitian,
    Hermitian,
    IndefiniteHermitian,
    Norden,
    Incompatible,
}

impl StructureName {
    pub const ALL: [StructureName; 8] = [
        StructureName::ProductRiemannian,
        StructureName::ProductPseudoRiemannian,
        StructureName::ParaNorden,
        StructureName::ParaHermitian,
        StructureName::Hermitian,
        StructureName::IndefiniteHermitian,
        StructureName::Norden,
        StructureName::Incompatible,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StructureName::ProductRiemannian => "ProductRiemannian",
            StructureName::ProductPseudoRiemannian => "ProductPseudoRiemannian",
            StructureName::ParaNorden => "ParaNorden",
            StructureName::ParaHermitian => "ParaHermitian",
            StructureName::Hermitian => "Hermitian",
            StructureName::IndefiniteHermitian => "IndefiniteHermitian",
            StructureName::Norden => "Norden",
            StructureName::Incompatible => "Incompatible",
        }
    }
}

impl fmt::Display for StructureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of [`classify_pair`].
#[derive(Clone, Debug, PartialEq)]
pub struct StructureClass {
    pub name: StructureName,
    /// `𝒦² = α·Id`; `None` when `𝒦` is not polynomial.
    pub alpha: Option<Sign>,
    /// `𝒢(𝒦·, 𝒦·) = ε·𝒢`; `None` when neither sign holds.
    pub epsilon: Option<Sign>,
    /// Signature of the metric; `None` when it is degenerate or not symmetric.
    pub signature: Option<(usize, usize)>,
    pub polynomial: PolynomialClass,
}

/// `ε` with `opᵀ·M·op ≈ ε·M`, tested on the full Gram matrix. The sign with
/// the smaller residual is tried, against the rounding scale `‖op‖²‖M‖`.
pub fn isometry_sign(op: &BlockOperator, metric: &BilinearForm, tol: Tolerance) -> Option<Sign> {
    if op.dim() != metric.dim() {
        return None;
    }
    let a = op.assemble();
    let m = metric.gram();
    let pulled = a.transpose() * m * &a;
    let scale = a.norm_squared() * m.norm();
    let residual = |s: Sign| (&pulled - m * s.value()).norm();
    let best = if residual(Sign::Plus) <= residual(Sign::Minus) {
        Sign::Plus
    } else {
        Sign::Minus
    };
    tol.close_scaled(&pulled, &(m * best.value()), scale)
        .then_some(best)
}

/// Classify `(𝒦, 𝒢)`.
///
/// Positive definite metrics give the Riemannian names (`ProductRiemannian`,
/// `ParaNorden` when the eigenspaces have equal dimension, `Hermitian`); any
/// other nondegenerate signature gives the pseudo-Riemannian ones.
pub fn classify_pair(op: &BlockOperator, metric: &BilinearForm, tol: Tolerance) -> StructureClass {
    let polynomial = polynomial_class(op, tol);
    let alpha = polynomial.alpha();
    let epsilon = isometry_sign(op, metric, tol);
    let signature = metric.signature(tol).ok();
    let name = match (alpha, epsilon, signature) {
        (Some(a), Some(e), Some((_, s))) => {
            let definite = s == 0;
            match (a, e) {
                (Sign::Plus, Sign::Plus) if definite && polynomial.is_paracomplex() => {
                    StructureName::ParaNorden
                }
                (Sign::Plus, Sign::Plus) if definite => StructureName::ProductRiemannian,
                (Sign::Plus, Sign::Plus) => StructureName::ProductPseudoRiemannian,
                (Sign::Plus, Sign::Minus) => StructureName::ParaHermitian,
                (Sign::Minus, Sign::Plus) if definite => StructureName::Hermitian,
                (Sign::Minus, Sign::Plus) => StructureName::IndefiniteHermitian,
                (Sign::Minus, Sign::Minus) => StructureName::Norden,
            }
        }
        _ => StructureName::Incompatible,
    };
    StructureClass {
        name,
        alpha,
        epsilon,
        signature,
        polynomial,
    }
}

/// Symmetry type of a fundamental tensor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TensorKind {
    /// `αε = +1`: symmetric.
    TwinMetric,
    /// `αε = −1`: skew.
    FundamentalSymplectic,
}

impl TensorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TensorKind::TwinMetric => "TwinMetric",
            TensorKind::FundamentalSymplectic => "FundamentalSymplectic",
        }
    }
}

/// `Φ(u, v) = 𝒢(𝒦u, v)` together with its kind.
#[derive(Clone, Debug, PartialEq)]
pub struct FundamentalTensor {
    pub form: BilinearForm,
    pub kind: TensorKind,
}

/// [`fundamental_tensor_with`] at the default tolerance.
pub fn fundamental_tensor(op: &BlockOperator, metric: &BilinearForm) -> Result<FundamentalTensor> {
    fundamental_tensor_with(op, metric, Tolerance::DEFAULT)
}

/// Gram `𝒦ᵀ·M`, projected onto its symmetric or skew part according to `αε`.
pub fn fundamental_tensor_with(
    op: &BlockOperator,
    metric: &BilinearForm,
    tol: Tolerance,
) -> Result<FundamentalTensor> {
    let class = classify_pair(op, metric, tol);
    let (Some(a), Some(e)) = (class.alpha, class.epsilon) else {
        return Err(Error::IncompatiblePair);
    };
    if class.name == StructureName::Incompatible {
        return Err(Error::IncompatiblePair);
    }
    let raw = op.assemble().transpose() * metric.gram();
    let (gram, form_kind, kind) = if a * e == Sign::Plus {
        (
            symmetric_part(&raw),
            FormKind::Symmetric,
            TensorKind::TwinMetric,
        )
    } else {
        (
            skew_part(&raw),
            FormKind::Skew,
            TensorKind::FundamentalSymplectic,
        )
    };
    Ok(FundamentalTensor {
        form: BilinearForm::new(gram, form_kind)?,
        kind,
    })
}

/// An `(α, ε)`-metric structure `(J, g)` on `V`.
///
/// Fields are public so that deliberately inconsistent data can be fed to the
/// checkers; [`AeManifoldData::new`] and [`AeManifoldData::infer`] validate.
#[derive(Clone, Debug, PartialEq)]
pub struct AeManifoldData {
    pub j: Matrix,
    pub g: BaseForm,
    pub alpha: Sign,
    pub epsilon: Sign,
}

impl AeManifoldData {
    /// Checks `J² = α·I` and `g(J·, J·) = ε·g`.
    pub fn new(j: Matrix, g: BaseForm, alpha: Sign, epsilon: Sign, tol: Tolerance) -> Result<Self> {
        let data = AeManifoldData {
            j,
            g,
            alpha,
            epsilon,
        };
        data.validate(tol)?;
        Ok(data)
    }

    /// Reads `α` and `ε` off `(J, g)`.
    pub fn infer(j: Matrix, g: BaseForm, tol: Tolerance) -> Result<Self> {
        check_shapes(&j, &g)?;
        let alpha =
            square_sign(&j, tol).ok_or(Error::InvalidManifoldData("J² is neither I nor −I"))?;
        let epsilon = base_isometry_sign(&j, &g, tol)
            .ok_or(Error::InvalidManifoldData("g(J·, J·) is neither g nor −g"))?;
        Ok(AeManifoldData {
            j,
            g,
            alpha,
            epsilon,
        })
    }

    pub fn validate(&self, tol: Tolerance) -> Result<()> {
        check_shapes(&self.j, &self.g)?;
        if self.g.kind() != FormKind::Symmetric {
            return Err(Error::InvalidManifoldData("g must be symmetric"));
        }
        if !self.g.is_nondegenerate(tol) {
            return Err(Error::DegenerateForm);
        }
        if square_sign(&self.j, tol) != Some(self.alpha) {
            return Err(Error::InvalidManifoldData("J² ≠ α·I"));
        }
        if base_isometry_sign(&self.j, &self.g, tol) != Some(self.epsilon) {
            return Err(Error::InvalidManifoldData("g(J·, J·) ≠ ε·g"));
        }
        Ok(())
    }

    pub fn dim(&self) -> FiberDim {
        self.g.dim()
    }

    /// `φ(X, Y) = g(JX, Y)`, Gram `JᵀG`, symmetric when `αε = +1` and skew otherwise.
    pub fn phi(&self) -> BaseForm {
        let raw = self.j.transpose() * self.g.gram();
        let (gram, kind) = if self.alpha * self.epsilon == Sign::Plus {
            (symmetric_part(&raw), FormKind::Symmetric)
        } else {
            (skew_part(&raw), FormKind::Skew)
        };
        BaseForm::new(gram, kind).expect("projected gram has the declared kind")
    }
}

fn check_shapes(j: &Matrix, g: &BaseForm) -> Result<()> {
    let n = g.dim().n();
    if j.nrows() != n || j.ncols() != n {
        return Err(Error::Dimension {
            expected: n,
            found: if j.nrows() != n { j.nrows() } else { j.ncols() },
        });
    }
    Ok(())
}

/// `α` with `A² = α·I`, including `A = ±I`.
pub(crate) fn square_sign(a: &Matrix, tol: Tolerance) -> Option<Sign> {
    let n = a.nrows();
    let sq = a * a;
    let scale = crate::linalg::sqrt(n as f64);
    Sign::ALL
        .into_iter()
        .find(|s| tol.close_scaled(&sq, &(identity(n) * s.value()), scale))
}

fn base_isometry_sign(j: &Matrix, g: &BaseForm, tol: Tolerance) -> Option<Sign> {
    let m = g.gram();
    let pulled = j.transpose() * m * j;
    let scale = j.norm_squared() * m.norm();
    Sign::ALL
        .into_iter()
        .find(|s| tol.close_scaled(&pulled, &(m * s.value()), scale))
}

/// The base-fiber identities
///
/// ```text
/// ♭_φ = ♭_g J = αε J*♭_g
/// ε♯_φ = ♯_g J* = αε J♯_g
/// ```
///
/// as matrix equalities. The data is not validated first, so corrupted data
/// simply yields `false`.
pub fn check_flat_sharp_identities(data: &AeManifoldData, tol: Tolerance) -> Result<bool> {
    let phi = data.phi();
    let mp = phi.musicals_with(tol)?;
    let mg = data.g.musicals_with(tol)?;
    let ae = (data.alpha * data.epsilon).value();
    let e = data.epsilon.value();
    let j = &data.j;
    let jt = j.transpose();
    let flat_gj = &mg.flat * j;
    let sharp_gjt = &mg.sharp * &jt;
    Ok(tol.close(&mp.flat, &flat_gj)
        && tol.close(&flat_gj, &(&jt * &mg.flat * ae))
        && tol.close(&(&mp.sharp * e), &sharp_gjt)
        && tol.close(&sharp_gjt, &(j * &mg.sharp * ae)))
}
