//! Generalized almost Kähler pairs and their base data `(b, g, J₁, J₂)`.
//!
//! A pair `(𝒥₁, 𝒥₂)` of commuting, `𝒢₀`-isometric generalized almost complex
//! structures is almost Kähler when `𝒢₀(−𝒥₁𝒥₂·, ·)` is positive definite.
//! Integrability is not checked.

use crate::canonical::g0_gram;
use crate::linalg::{inverse, symmetric_eigenvalues, symmetric_part, Matrix};
use crate::metrics::endomorphism_from_metric;
use crate::zoo::isometry_sign;
use crate::{
    canonical, polynomial_class, relative_residual, BaseForm, BilinearForm, BlockOperator, Error,
    FiberDim, FormKind, PolynomialClass, Result, Sign, Tolerance,
};

/// A 2-form `b`, a Riemannian metric `g` and two `g`-orthogonal almost
/// complex structures on `V`.
#[derive(Clone, Debug, PartialEq)]
pub struct KahlerData {
    dim: FiberDim,
    b: Matrix,
    g: BaseForm,
    j1: Matrix,
    j2: Matrix,
}

impl KahlerData {
    pub fn new(b: Matrix, g: BaseForm, j1: Matrix, j2: Matrix, tol: Tolerance) -> Result<Self> {
        let dim = g.dim();
        let n = dim.n();
        if [&b, &j1, &j2].iter().any(|m| m.shape() != (n, n)) {
            return Err(Error::InvalidKahlerData("b, J1 and J2 must be n × n"));
        }
        if !tol.close(&b, &(-b.transpose())) {
            return Err(Error::InvalidKahlerData("b is not skew-symmetric"));
        }
        if g.kind() != FormKind::Symmetric {
            return Err(Error::InvalidKahlerData("g is not symmetric"));
        }
        if g.signature(tol).map(|(_, s)| s) != Ok(0) {
            return Err(Error::InvalidKahlerData("g is not positive definite"));
        }
        let id = Matrix::identity(n, n);
        let gm = g.gram();
        for j in [&j1, &j2] {
            if !tol.close_scaled(&(j * j), &(-&id), id.norm()) {
                return Err(Error::InvalidKahlerData("J is not almost complex"));
            }
            if !tol.close(&(j.transpose() * gm * j), gm) {
                return Err(Error::InvalidKahlerData("J is not g-isometric"));
            }
        }
        Ok(KahlerData { dim, b, g, j1, j2 })
    }

    pub fn dim(&self) -> FiberDim {
        self.dim
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn g(&self) -> &BaseForm {
        &self.g
    }

    pub fn j1(&self) -> &Matrix {
        &self.j1
    }

    pub fn j2(&self) -> &Matrix {
        &self.j2
    }

    /// `σ` with `(σX)(Y) = b(X, Y)`.
    pub fn sigma(&self) -> Matrix {
        self.b.transpose()
    }
}

/// The metric `𝒢₀(−𝒥₁𝒥₂·, ·)` when `(𝒥₁, 𝒥₂)` is generalized almost Kähler,
/// `None` otherwise.
pub fn is_almost_kahler(
    j1: &BlockOperator,
    j2: &BlockOperator,
    tol: Tolerance,
) -> Option<BilinearForm> {
    if j1.dim() != j2.dim() {
        return None;
    }
    let dim = j1.dim();
    let g0 = canonical::g0(dim);
    for j in [j1, j2] {
        if polynomial_class(j, tol) != PolynomialClass::AlmostComplex
            || isometry_sign(j, &g0, tol) != Some(Sign::Plus)
        {
            return None;
        }
    }
    let (a, b) = (j1.assemble(), j2.assemble());
    let ab = &a * &b;
    if !tol.close_scaled(&ab, &(&b * &a), a.norm() * b.norm()) {
        return None;
    }
    let gram = -ab.transpose() * g0_gram(dim.n());
    if !tol.close(&gram, &gram.transpose()) {
        return None;
    }
    let gram = symmetric_part(&gram);
    if symmetric_eigenvalues(&gram).min() <= tol.abs() {
        return None;
    }
    BilinearForm::new(gram, FormKind::Symmetric).ok()
}

/// `½·S·[[J₁ ± J₂, −(♯₁ ∓ ♯₂)], [♭₁ ∓ ♭₂, −(J₁* ± J₂*)]]·S⁻¹` with
/// `S = [[Id, 0], [σ, Id]]`, `♭ᵢ = ♭_{φᵢ}` and `φᵢ = g(Jᵢ·, ·)`.
pub fn kahler_from_data(kd: &KahlerData) -> Result<(BlockOperator, BlockOperator)> {
    let gm = kd.g.gram();
    let flat1 = gm * &kd.j1;
    let flat2 = gm * &kd.j2;
    let degenerate = || Error::InvalidKahlerData("φ is degenerate");
    let sharp1 = inverse(&flat1).ok_or_else(degenerate)?;
    let sharp2 = inverse(&flat2).ok_or_else(degenerate)?;
    let (j1, j2) = (&kd.j1, &kd.j2);
    let (j1t, j2t) = (j1.transpose(), j2.transpose());
    let half = |h: Matrix, s: Matrix, t: Matrix, k: Matrix| -> Result<BlockOperator> {
        BlockOperator::new(h * 0.5, s * 0.5, t * 0.5, k * 0.5)?.sheared(&kd.sigma())
    };
    let first = half(
        j1 + j2,
        -(&sharp1 - &sharp2),
        &flat1 - &flat2,
        -(&j1t + &j2t),
    )?;
    let second = half(
        j1 - j2,
        -(&sharp1 + &sharp2),
        &flat1 + &flat2,
        -(&j1t - &j2t),
    )?;
    Ok((first, second))
}

/// Outcome of [`kahler_roundtrip`].
#[derive(Clone, Debug, PartialEq)]
pub struct RoundtripReport {
    pub ok: bool,
    /// Largest relative residual over `b`, `g`, `J₁`, `J₂`.
    pub max_error: f64,
    pub diagnostic: Option<&'static str>,
}

impl RoundtripReport {
    fn failed(diagnostic: &'static str) -> Self {
        RoundtripReport {
            ok: false,
            max_error: f64::INFINITY,
            diagnostic: Some(diagnostic),
        }
    }
}

/// Build `(𝒥₁, 𝒥₂)` from `kd`, then recover `(b, g, J₁, J₂)` from the pair.
///
/// `g` and `σ` are read off the endomorphism `S·[[0, g⁻¹], [g, 0]]·S⁻¹` of the
/// induced metric, whose blocks are `[[−g⁻¹σ, g⁻¹], [g − σg⁻¹σ, σg⁻¹]]`; the
/// structures are then sheared back and `J₁`, `J₂` read from the top-left
/// blocks of `𝒥₁ ± 𝒥₂`.
pub fn kahler_roundtrip(kd: &KahlerData, tol: Tolerance) -> RoundtripReport {
    let Ok((first, second)) = kahler_from_data(kd) else {
        return RoundtripReport::failed("construction failed");
    };
    let Some(metric) = is_almost_kahler(&first, &second, tol) else {
        return RoundtripReport::failed("pair is not generalized almost Kähler");
    };
    let Ok(inducer) = endomorphism_from_metric(&metric, tol) else {
        return RoundtripReport::failed("metric has no inducing endomorphism");
    };
    let Some(g) = inverse(inducer.sigma()) else {
        return RoundtripReport::failed("recovered g⁻¹ is singular");
    };
    let sigma = -(&g * inducer.h());
    let b = sigma.transpose();
    let (Ok(p1), Ok(p2)) = (first.sheared(&-&sigma), second.sheared(&-&sigma)) else {
        return RoundtripReport::failed("shear failed");
    };
    let j1 = p1.h() + p2.h();
    let j2 = p1.h() - p2.h();
    let pairs = [(&b, &kd.b), (&g, kd.g.gram()), (&j1, &kd.j1), (&j2, &kd.j2)];
    let max_error = pairs
        .iter()
        .map(|(a, b)| relative_residual(a, b))
        .fold(0.0, f64::max);
    let ok = pairs.iter().all(|(a, b)| tol.close(a, b));
    RoundtripReport {
        ok,
        max_error,
        diagnostic: (!ok).then_some("recovered data differs"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::identity;
    use crate::zoo::{build_diagonal, build_musical, AeManifoldData};

    fn jstd() -> Matrix {
        Matrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0])
    }

    fn simple(b: Matrix) -> KahlerData {
        let g = BaseForm::metric(identity(2)).unwrap();
        KahlerData::new(b, g, jstd(), jstd(), Tolerance::DEFAULT).unwrap()
    }

    #[test]
    fn equal_structures_give_main_example() {
        let tol = Tolerance::DEFAULT;
        let kd = simple(Matrix::zeros(2, 2));
        let (first, second) = kahler_from_data(&kd).unwrap();
        assert!(first.approx_eq(&build_diagonal(&jstd(), Sign::Minus).unwrap(), tol));
        let data = AeManifoldData::infer(jstd(), kd.g.clone(), tol).unwrap();
        assert!(second.approx_eq(&build_musical(&data.phi(), Sign::Minus).unwrap(), tol));
        assert!(is_almost_kahler(&first, &second, tol).is_some());
        assert!(kahler_roundtrip(&kd, tol).ok);
    }

    #[test]
    fn sheared_roundtrip() {
        let b = Matrix::from_row_slice(2, 2, &[0.0, 0.7, -0.7, 0.0]);
        let r = kahler_roundtrip(&simple(b), Tolerance::DEFAULT);
        assert!(r.ok, "{r:?}");
        assert!(r.max_error < 1e-12);
    }

    #[test]
    fn opposite_structures() {
        let tol = Tolerance::DEFAULT;
        let jp = build_diagonal(&jstd(), Sign::Plus).unwrap();
        let jm = build_diagonal(&jstd(), Sign::Minus).unwrap();
        assert!(is_almost_kahler(&jp, &jm, tol).is_none());
    }

    #[test]
    fn invalid_data() {
        let g = BaseForm::metric(identity(2)).unwrap();
        let j = Matrix::from_row_slice(2, 2, &[0.0, -2.0, 0.5, 0.0]);
        assert!(matches!(
            KahlerData::new(Matrix::zeros(2, 2), g, j, jstd(), Tolerance::DEFAULT),
            Err(Error::InvalidKahlerData(_))
        ));
    }
}
