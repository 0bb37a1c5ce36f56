//! Oracles and data helpers shared by the integration suites.
//!
//! Oracles evaluate forms and operators entry by entry from their defining
//! formulas instead of going through the library's matrix shortcuts.

#![allow(dead_code)]

use gentangent_core::generators::{random_ae_pair, random_symplectic, AeKind, Seed};
use gentangent_core::zoo::{AeManifoldData, BaseData, DesignatedMetric, Family, StructureName};
use gentangent_core::{BlockOperator, FiberDim, GeneralizedVector, Matrix, Sign};
use nalgebra::DVector;

pub fn dim(n: usize) -> FiberDim {
    FiberDim::new(n).unwrap()
}

pub fn basis(n: usize, k: usize) -> GeneralizedVector {
    let mut c = vec![0.0; 2 * n];
    c[k] = 1.0;
    GeneralizedVector::new(dim(n), c).unwrap()
}

fn parts(u: &GeneralizedVector) -> (DVector<f64>, DVector<f64>) {
    (u.vector_part(), u.covector_part())
}

/// Gram of `f` over the standard basis of `V ⊕ V*`.
pub fn gram_from(
    n: usize,
    f: impl Fn(&DVector<f64>, &DVector<f64>, &DVector<f64>, &DVector<f64>) -> f64,
) -> Matrix {
    Matrix::from_fn(2 * n, 2 * n, |r, c| {
        let (x, xi) = parts(&basis(n, r));
        let (y, eta) = parts(&basis(n, c));
        f(&x, &xi, &y, &eta)
    })
}

/// `½(ξ(Y) + η(X))`.
pub fn g0(n: usize) -> Matrix {
    gram_from(n, |x, xi, y, eta| 0.5 * (xi.dot(y) + eta.dot(x)))
}

/// `½(ξ(Y) − η(X))`.
pub fn omega0(n: usize) -> Matrix {
    gram_from(n, |x, xi, y, eta| 0.5 * (xi.dot(y) - eta.dot(x)))
}

/// `X + ξ ↦ −X + ξ`.
pub fn f0(n: usize) -> Matrix {
    Matrix::from_fn(2 * n, 2 * n, |r, c| match (r == c, r < n) {
        (true, true) => -1.0,
        (true, false) => 1.0,
        _ => 0.0,
    })
}

/// Gram of `(u, v) ↦ M(op·u, v)`, applying `op` vector by vector.
pub fn pulled_gram(op: &BlockOperator, m: &Matrix) -> Matrix {
    let n = op.dim().n();
    let images: Vec<DVector<f64>> = (0..2 * n)
        .map(|k| op.apply(&basis(n, k)).unwrap().coords().clone())
        .collect();
    Matrix::from_fn(2 * n, 2 * n, |r, c| {
        images[r].dot(&(m * basis(n, c).coords()))
    })
}

/// Gram of `(u, v) ↦ M(op·u, op·v)`, applying `op` vector by vector.
pub fn isometry_gram(op: &BlockOperator, m: &Matrix) -> Matrix {
    let n = op.dim().n();
    let images: Vec<DVector<f64>> = (0..2 * n)
        .map(|k| op.apply(&basis(n, k)).unwrap().coords().clone())
        .collect();
    Matrix::from_fn(2 * n, 2 * n, |r, c| images[r].dot(&(m * &images[c])))
}

pub fn max_abs_diff(a: &Matrix, b: &Matrix) -> f64 {
    assert_eq!(a.shape(), b.shape());
    (a - b).amax()
}

pub fn rel_diff(a: &Matrix, b: &Matrix) -> f64 {
    let scale = a.norm().max(b.norm()).max(1.0);
    (a - b).norm() / scale
}

pub fn jstd() -> Matrix {
    Matrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0])
}

/// Dimensions at which `kind` exists, up to 4.
pub fn dims_for(kind: AeKind) -> Vec<usize> {
    (1..=4).filter(|&n| kind.supports(n)).collect()
}

/// Base data for `family` drawn from a pair of `kind`.
pub fn family_base(family: Family, data: &AeManifoldData, seed: u64) -> BaseData {
    let mut base = BaseData::from_ae(data);
    if matches!(family, Family::Jom | Family::Fom) {
        base.omega = Some(random_symplectic(data.dim().n(), Seed(seed ^ 0x5a5a)).unwrap());
    }
    base
}

pub fn pair(kind: AeKind, n: usize, seed: u64) -> AeManifoldData {
    random_ae_pair(kind, n, Seed(seed)).unwrap()
}

pub fn is_definite(kind: AeKind) -> bool {
    matches!(kind, AeKind::Hermitian | AeKind::ProductRiemannian)
}

/// Name of a compatible pair from its `(α, ε)`, whether the metric is
/// definite and whether the structure is paracomplex.
pub fn named(alpha: Sign, epsilon: Sign, definite: bool, paracomplex: bool) -> StructureName {
    match (alpha, epsilon) {
        (Sign::Plus, Sign::Plus) if definite && paracomplex => StructureName::ParaNorden,
        (Sign::Plus, Sign::Plus) if definite => StructureName::ProductRiemannian,
        (Sign::Plus, Sign::Plus) => StructureName::ProductPseudoRiemannian,
        (Sign::Plus, Sign::Minus) => StructureName::ParaHermitian,
        (Sign::Minus, Sign::Plus) if definite => StructureName::Hermitian,
        (Sign::Minus, Sign::Plus) => StructureName::IndefiniteHermitian,
        (Sign::Minus, Sign::Minus) => StructureName::Norden,
    }
}

/// Whether a product structure on `V ⊕ V*` has eigenspaces of equal
/// dimension, read off the trace.
pub fn trace_free(op: &BlockOperator) -> bool {
    op.assemble().trace().abs() < 0.5
}

/// Expected classification of `family` on data of `kind` with `metric`, as
/// stated by the compatibility propositions. `None` for cells without a
/// statement.
pub fn expected_class(
    family: Family,
    metric: DesignatedMetric,
    kind: AeKind,
    op: &BlockOperator,
) -> Option<StructureName> {
    let (alpha, epsilon) = kind.signs();
    let phi_symmetric = alpha * epsilon == Sign::Plus;
    let incompatible = StructureName::Incompatible;
    match metric {
        DesignatedMetric::Natural => Some(match family {
            Family::Jg => StructureName::Norden,
            Family::Fg => StructureName::ProductPseudoRiemannian,
            Family::Jom => StructureName::IndefiniteHermitian,
            Family::Fom => StructureName::ParaHermitian,
            Family::JlamJ(Sign::Minus) => StructureName::IndefiniteHermitian,
            Family::JlamJ(Sign::Plus) => StructureName::Norden,
            Family::FlamF(Sign::Minus) => StructureName::ParaHermitian,
            Family::FlamF(Sign::Plus) => StructureName::ProductPseudoRiemannian,
            Family::JJgFlat | Family::JJgSharp if epsilon == Sign::Plus => StructureName::Norden,
            Family::JJgFlat | Family::JJgSharp => incompatible,
            Family::FFgFlat | Family::FFgSharp if epsilon == Sign::Minus => {
                StructureName::ProductPseudoRiemannian
            }
            Family::FFgFlat | Family::FFgSharp => incompatible,
            Family::FJg if epsilon == Sign::Plus => StructureName::ProductPseudoRiemannian,
            Family::FJg => incompatible,
            Family::JFg if epsilon == Sign::Minus => StructureName::Norden,
            Family::JFg => incompatible,
            Family::Jphi if phi_symmetric => StructureName::Norden,
            Family::Jphi => StructureName::IndefiniteHermitian,
            Family::Fphi if phi_symmetric => StructureName::ProductPseudoRiemannian,
            Family::Fphi => StructureName::ParaHermitian,
        }),
        DesignatedMetric::Induced => {
            let definite = is_definite(kind);
            let para = trace_free(op);
            Some(match family {
                Family::Jg => named(Sign::Minus, Sign::Plus, definite, para),
                Family::Fg => named(Sign::Plus, Sign::Plus, definite, para),
                Family::Jphi => named(Sign::Minus, epsilon, definite, para),
                Family::Fphi => named(Sign::Plus, epsilon, definite, para),
                Family::JlamJ(_) => named(Sign::Minus, epsilon, definite, para),
                Family::FlamF(_) => named(Sign::Plus, epsilon, definite, para),
                Family::FJg if epsilon == Sign::Minus => StructureName::ProductPseudoRiemannian,
                Family::FJg => incompatible,
                Family::JFg if epsilon == Sign::Minus => StructureName::IndefiniteHermitian,
                Family::JFg => incompatible,
                _ => return None,
            })
        }
    }
}

/// Families that can be built from data of `kind` at dimension `n`.
pub fn families_for(kind: AeKind, n: usize) -> Vec<Family> {
    let (alpha, _) = kind.signs();
    Family::ALL
        .into_iter()
        .filter(|f| f.base_alpha().is_none_or(|a| a == alpha))
        .filter(|f| n.is_multiple_of(2) || !matches!(f, Family::Jom | Family::Fom))
        .collect()
}
