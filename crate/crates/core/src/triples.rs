//! Commutation with `ℱ₀`, triple structures `(F, J, K = FJ)` and linear
//! combinations of anti-commuting triples.

use core::fmt;
use core::str::FromStr;

use alloc::string::ToString;

use crate::zoo::{build_family, isometry_sign, AeManifoldData, BaseData, Family};
use crate::{
    polynomial_class, BilinearForm, BlockOperator, Error, PolynomialClass, Result, Sign, Tolerance,
};

/// How an operator relates to `ℱ₀`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Commutation {
    Commutes,
    AntiCommutes,
    Neither,
}

impl Commutation {
    pub fn as_str(self) -> &'static str {
        match self {
            Commutation::Commutes => "Commutes",
            Commutation::AntiCommutes => "AntiCommutes",
            Commutation::Neither => "Neither",
        }
    }
}

/// Commutes with `ℱ₀` iff `σ = τ = 0`, anti-commutes iff `H = K = 0`.
pub fn f0_commutation(op: &BlockOperator, tol: Tolerance) -> Commutation {
    let scale = op.assemble().norm();
    let off = tol.negligible(op.sigma(), scale) && tol.negligible(op.tau(), scale);
    let diag = tol.negligible(op.h(), scale) && tol.negligible(op.k(), scale);
    match (off, diag) {
        (true, _) => Commutation::Commutes,
        (false, true) => Commutation::AntiCommutes,
        _ => Commutation::Neither,
    }
}

/// Kind of a triple `(F, J, K = FJ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TripleKind {
    /// `F² = J² = K² = −Id`.
    Hypercomplex,
    /// `F² = J² = −Id`, `K² = Id`.
    Bicomplex,
    /// `F² = J² = Id`, `K² = −Id`.
    Biparacomplex,
    /// `F² = J² = K² = Id`.
    Hyperproduct,
    None,
}

impl TripleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TripleKind::Hypercomplex => "Hypercomplex",
            TripleKind::Bicomplex => "Bicomplex",
            TripleKind::Biparacomplex => "Biparacomplex",
            TripleKind::Hyperproduct => "Hyperproduct",
            TripleKind::None => "None",
        }
    }
}

impl fmt::Display for TripleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of [`classify_triple`].
#[derive(Clone, Debug, PartialEq)]
pub struct TripleReport {
    pub kind: TripleKind,
    /// `JF = λ·FJ`; `None` when the operators neither commute nor anti-commute.
    pub lambda: Option<Sign>,
    /// `K = FJ`, present whenever `lambda` is.
    pub k: Option<BlockOperator>,
}

/// `λ` with `JF ≈ λ·FJ`.
pub fn commutation_sign(f: &BlockOperator, j: &BlockOperator, tol: Tolerance) -> Option<Sign> {
    if f.dim() != j.dim() {
        return None;
    }
    let (fa, ja) = (f.assemble(), j.assemble());
    let fj = &fa * &ja;
    let jf = &ja * &fa;
    let scale = fa.norm() * ja.norm();
    Sign::ALL
        .into_iter()
        .find(|s| tol.close_scaled(&jf, &(&fj * s.value()), scale))
}

/// Name the triple generated by `F` and `J`.
///
/// Both operators must square to the same `±Id`; a pair of one almost complex
/// and one almost product structure is reported as [`TripleKind::None`].
pub fn classify_triple(f: &BlockOperator, j: &BlockOperator, tol: Tolerance) -> TripleReport {
    let lambda = commutation_sign(f, j, tol);
    let k = lambda.map(|_| f * j);
    let kind = match (
        polynomial_class(f, tol).alpha(),
        polynomial_class(j, tol).alpha(),
        lambda,
    ) {
        (Some(a), Some(b), Some(l)) if a == b => {
            let expected = match (a, l) {
                (Sign::Minus, Sign::Minus) => TripleKind::Hypercomplex,
                (Sign::Minus, Sign::Plus) => TripleKind::Bicomplex,
                (Sign::Plus, Sign::Minus) => TripleKind::Biparacomplex,
                (Sign::Plus, Sign::Plus) => TripleKind::Hyperproduct,
            };
            // K² = λ·α_F·α_J
            let k_alpha = k.as_ref().and_then(|k| polynomial_class(k, tol).alpha());
            if k_alpha == Some(l * a * b) {
                expected
            } else {
                TripleKind::None
            }
        }
        _ => TripleKind::None,
    };
    TripleReport { kind, lambda, k }
}

/// Named triples built from `(α, ε)`-metric data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TripleName {
    /// `(𝒥_g, 𝒥_{ε,J}, 𝒥_φ)`, `α = −1`.
    HyperC,
    /// `(𝒥_g, 𝒥_{−ε,J}, ℱ_φ)`, `α = −1`.
    BiCPhi,
    /// `(𝒥_φ, 𝒥_{−ε,J}, −ℱ_g)`, `α = −1`.
    BiCFg,
    /// `(ℱ_g, ℱ_φ, 𝒥_{ε,J})`, `α = −1`.
    BiparaC,
    /// `(ℱ_g, ℱ_{ε,F}, ℱ_φ)`, `α = +1`.
    HyperP,
    /// `(ℱ_g, ℱ_{−ε,F}, 𝒥_φ)`, `α = +1`.
    BiparaP1,
    /// `(ℱ_φ, ℱ_{−ε,F}, 𝒥_g)`, `α = +1`.
    BiparaP2,
    /// `(𝒥_g, 𝒥_φ, −ℱ_{ε,F})`, `α = +1`.
    BiCProduct,
}

impl TripleName {
    pub const ALL: [TripleName; 8] = [
        TripleName::HyperC,
        TripleName::BiCPhi,
        TripleName::BiCFg,
        TripleName::BiparaC,
        TripleName::HyperP,
        TripleName::BiparaP1,
        TripleName::BiparaP2,
        TripleName::BiCProduct,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TripleName::HyperC => "hyperC",
            TripleName::BiCPhi => "biC-phi",
            TripleName::BiCFg => "biC-Fg",
            TripleName::BiparaC => "biparaC",
            TripleName::HyperP => "hyperP",
            TripleName::BiparaP1 => "biparaP-1",
            TripleName::BiparaP2 => "biparaP-2",
            TripleName::BiCProduct => "biC-product",
        }
    }

    /// `α` the base data must have.
    pub fn alpha(self) -> Sign {
        match self {
            TripleName::HyperC | TripleName::BiCPhi | TripleName::BiCFg | TripleName::BiparaC => {
                Sign::Minus
            }
            _ => Sign::Plus,
        }
    }

    pub fn expected_kind(self) -> TripleKind {
        match self {
            TripleName::HyperC => TripleKind::Hypercomplex,
            TripleName::HyperP => TripleKind::Hyperproduct,
            TripleName::BiCPhi | TripleName::BiCFg | TripleName::BiCProduct => {
                TripleKind::Bicomplex
            }
            TripleName::BiparaC | TripleName::BiparaP1 | TripleName::BiparaP2 => {
                TripleKind::Biparacomplex
            }
        }
    }
}

impl fmt::Display for TripleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TripleName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TripleName::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// The named triple `(F, J, K)` on `data`.
pub fn canonical_triple(
    name: TripleName,
    data: &AeManifoldData,
) -> Result<(BlockOperator, BlockOperator, BlockOperator)> {
    if data.alpha != name.alpha() {
        return Err(Error::WrongAlpha {
            expected: name.alpha(),
            found: data.alpha,
        });
    }
    let base = BaseData::from_ae(data);
    let tol = Tolerance::DEFAULT;
    let build = |family: Family| build_family(family, &base, tol);
    let e = data.epsilon;
    let (a, b, c) = match name {
        TripleName::HyperC => (
            build(Family::Jg)?,
            build(Family::JlamJ(e))?,
            build(Family::Jphi)?,
        ),
        TripleName::BiCPhi => (
            build(Family::Jg)?,
            build(Family::JlamJ(-e))?,
            build(Family::Fphi)?,
        ),
        TripleName::BiCFg => (
            build(Family::Jphi)?,
            build(Family::JlamJ(-e))?,
            -build(Family::Fg)?,
        ),
        TripleName::BiparaC => (
            build(Family::Fg)?,
            build(Family::Fphi)?,
            build(Family::JlamJ(e))?,
        ),
        TripleName::HyperP => (
            build(Family::Fg)?,
            build(Family::FlamF(e))?,
            build(Family::Fphi)?,
        ),
        TripleName::BiparaP1 => (
            build(Family::Fg)?,
            build(Family::FlamF(-e))?,
            build(Family::Jphi)?,
        ),
        TripleName::BiparaP2 => (
            build(Family::Fphi)?,
            build(Family::FlamF(-e))?,
            build(Family::Jg)?,
        ),
        TripleName::BiCProduct => (
            build(Family::Jg)?,
            build(Family::Jphi)?,
            -build(Family::FlamF(e))?,
        ),
    };
    Ok((a, b, c))
}

/// Output of [`combine`].
#[derive(Clone, Debug, PartialEq)]
pub struct Combination {
    pub op: BlockOperator,
    pub class: PolynomialClass,
    /// `q` with `op² = q·Id`: `a²F² + b²F'² + c²J²` read as scalars.
    pub quadratic: f64,
}

fn anticommute(a: &BlockOperator, b: &BlockOperator, tol: Tolerance) -> bool {
    commutation_sign(a, b, tol) == Some(Sign::Minus)
}

/// `aF + bF' + cJ` for a pairwise anti-commuting triple of polynomial
/// structures. For `F² = F'² = Id`, `J² = −Id` the square is
/// `(a² + b² − c²)·Id`.
pub fn combine(
    coefficients: (f64, f64, f64),
    triple: (&BlockOperator, &BlockOperator, &BlockOperator),
    tol: Tolerance,
) -> Result<Combination> {
    let (a, b, c) = coefficients;
    let (f, f2, j) = triple;
    if !(anticommute(f, f2, tol) && anticommute(f, j, tol) && anticommute(f2, j, tol)) {
        return Err(Error::NotAnticommuting);
    }
    let alphas = [f, f2, j].map(|op| polynomial_class(op, tol).alpha());
    let [Some(af), Some(af2), Some(aj)] = alphas else {
        return Err(Error::NotPolynomial);
    };
    let op = f.scaled(a).try_add(&f2.scaled(b))?.try_add(&j.scaled(c))?;
    let class = polynomial_class(&op, tol);
    let quadratic = a * a * af.value() + b * b * af2.value() + c * c * aj.value();
    Ok(Combination {
        op,
        class,
        quadratic,
    })
}

/// Compatibility signs of `F`, `J` and `K = FJ` with a metric.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EpsilonProduct {
    pub epsilon1: Sign,
    pub epsilon2: Sign,
    /// Sign found for `K`; `None` when `K` is not isometric up to sign.
    pub epsilon_k: Option<Sign>,
    /// `epsilon_k == ε₁ε₂`.
    pub verified: bool,
}

/// Check `G(KX, KY) = ε₁ε₂·G(X, Y)` for `K = FJ`.
pub fn triple_epsilon_product(
    f: &BlockOperator,
    j: &BlockOperator,
    metric: &BilinearForm,
    tol: Tolerance,
) -> Result<EpsilonProduct> {
    let epsilon1 = isometry_sign(f, metric, tol).ok_or(Error::IncompatiblePair)?;
    let epsilon2 = isometry_sign(j, metric, tol).ok_or(Error::IncompatiblePair)?;
    let epsilon_k = isometry_sign(&(f * j), metric, tol);
    Ok(EpsilonProduct {
        epsilon1,
        epsilon2,
        epsilon_k,
        verified: epsilon_k == Some(epsilon1 * epsilon2),
    })
}
