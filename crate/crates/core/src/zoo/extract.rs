//! Base almost complex structure from a `𝒢₀`-isometric generalized one.
//!
//! Builds a `𝒢₀`-positive, `𝒥`-stable subspace `L₊` of dimension `n` and
//! conjugates `𝒥` through the projection `π(X + ξ) = X`, which is injective on
//! `L₊` because `V*` is `𝒢₀`-isotropic.

use alloc::vec::Vec;

use nalgebra::{DVector, SymmetricEigen};

use super::{classify_pair, StructureName};
use crate::canonical::{g0, g0_gram};
use crate::linalg::{inverse, is_nondegenerate, sqrt, symmetric_part, Matrix};
use crate::{BlockOperator, Error, Result, Tolerance};

const MIN_NORM: f64 = 1e-3;

/// Projection conditioning accepted without trying further seeds.
pub const GOOD_CONDITION: f64 = 10.0;

/// `J = π ∘ 𝒥 ∘ (π|_{L₊})⁻¹`, with `J² = −I`.
pub fn extract_base_complex(op: &BlockOperator, tol: Tolerance) -> Result<Matrix> {
    extract_base_complex_traced(op, tol).map(|(j, _)| j)
}

/// As [`extract_base_complex`], also returning the number of attempts used.
///
/// Attempt `k` seeds the greedy search with `e_k + e^k` and cycles through the
/// following indices. The first attempt whose projection has condition number
/// at most [`GOOD_CONDITION`] is used; otherwise the best of all `n`.
pub fn extract_base_complex_traced(op: &BlockOperator, tol: Tolerance) -> Result<(Matrix, usize)> {
    let dim = op.dim();
    if classify_pair(op, &g0(dim), tol).name != StructureName::IndefiniteHermitian {
        return Err(Error::Precondition(
            "operator must be almost complex and 𝒢₀-isometric",
        ));
    }
    let n = dim.n();
    let a = op.assemble();
    let m = g0_gram(n);
    let mut best: Option<(f64, Matrix)> = None;
    let mut attempts = 0;
    for offset in 0..n {
        attempts = offset + 1;
        let Some(basis) = positive_stable_subspace(&a, &m, n, offset) else {
            continue;
        };
        let top = basis.rows(0, n).into_owned();
        if !is_nondegenerate(&top, tol) {
            continue;
        }
        let Some(top_inv) = inverse(&top) else {
            continue;
        };
        let condition = top.norm() * top_inv.norm();
        let j = (&a * &basis).rows(0, n).into_owned() * top_inv;
        if best.as_ref().is_none_or(|(c, _)| condition < *c) {
            best = Some((condition, j));
        }
        if condition <= GOOD_CONDITION {
            break;
        }
    }
    best.map(|(_, j)| (j, attempts))
        .ok_or(Error::ProjectionSingular { attempts: n })
}

fn form(m: &Matrix, u: &DVector<f64>, v: &DVector<f64>) -> f64 {
    u.dot(&(m * v))
}

/// Remove the components along a `𝒢₀`-orthonormal positive basis.
fn project_off(m: &Matrix, basis: &[DVector<f64>], v: &DVector<f64>) -> DVector<f64> {
    let mut w = v.clone();
    for b in basis {
        w -= b * form(m, b, v);
    }
    w
}

fn seed(n: usize, k: usize) -> DVector<f64> {
    let mut s = DVector::zeros(2 * n);
    s[k] = 1.0;
    s[n + k] = 1.0;
    s
}

/// Best positive direction in the `𝒢₀`-orthogonal complement of `basis`:
/// top eigenvector of `𝒢₀` restricted to the image of `Q = I − B·Bᵀ·M`.
fn complement_direction(m: &Matrix, basis: &[DVector<f64>]) -> Option<DVector<f64>> {
    let total = m.nrows();
    let mut q = Matrix::identity(total, total);
    if !basis.is_empty() {
        let b = Matrix::from_columns(basis);
        q -= &b * b.transpose() * m;
    }
    let restricted = symmetric_part(&(q.transpose() * m * &q));
    let eig = SymmetricEigen::new(restricted);
    let (idx, _) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))?;
    let w = &q * eig.eigenvectors.column(idx);
    let w = project_off(m, basis, &w);
    (form(m, &w, &w) > MIN_NORM).then_some(w)
}

fn normalized(m: &Matrix, w: DVector<f64>) -> DVector<f64> {
    let norm = sqrt(form(m, &w, &w));
    w / norm
}

fn positive_stable_subspace(a: &Matrix, m: &Matrix, n: usize, offset: usize) -> Option<Matrix> {
    let mut basis: Vec<DVector<f64>> = Vec::with_capacity(n);
    while basis.len() < n {
        let first = project_off(m, &basis, &seed(n, offset % n));
        let candidate = if basis.is_empty() && form(m, &first, &first) > MIN_NORM {
            first
        } else {
            (0..n)
                .map(|i| project_off(m, &basis, &seed(n, (offset + i) % n)))
                .map(|w| (form(m, &w, &w), w))
                .filter(|(q, _)| *q > MIN_NORM)
                .max_by(|a, b| a.0.total_cmp(&b.0))
                .map(|(_, w)| w)
                .or_else(|| complement_direction(m, &basis))?
        };
        let v = normalized(m, candidate);
        basis.push(v.clone());
        let jv = project_off(m, &basis, &(a * &v));
        if form(m, &jv, &jv) <= MIN_NORM {
            return None;
        }
        basis.push(normalized(m, jv));
    }
    (basis.len() == n).then(|| Matrix::from_columns(&basis))
}
