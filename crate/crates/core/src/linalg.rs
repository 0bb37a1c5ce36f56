//! Small dense helpers shared by the modules.

use nalgebra::{DMatrix, DVector};

use crate::Tolerance;

/// Dense real matrix used for every block and Gram matrix.
pub type Matrix = DMatrix<f64>;

pub(crate) fn sqrt(x: f64) -> f64 {
    nalgebra::ComplexField::sqrt(x)
}

pub(crate) fn round(x: f64) -> f64 {
    nalgebra::ComplexField::round(x)
}

pub(crate) fn identity(n: usize) -> Matrix {
    Matrix::identity(n, n)
}

/// Singular values, largest first.
pub(crate) fn singular_values(m: &Matrix) -> DVector<f64> {
    m.clone().svd(false, false).singular_values
}

/// Smallest singular value above `tol.abs()` times the largest one.
pub(crate) fn is_nondegenerate(m: &Matrix, tol: Tolerance) -> bool {
    if m.nrows() != m.ncols() || m.nrows() == 0 {
        return false;
    }
    let sv = singular_values(m);
    let max = sv.max();
    let min = sv.min();
    max > 0.0 && min > tol.abs() * max
}

/// Ratio of extreme singular values; infinite for singular input.
pub(crate) fn condition_number(m: &Matrix) -> f64 {
    let sv = singular_values(m);
    let min = sv.min();
    if min == 0.0 {
        f64::INFINITY
    } else {
        sv.max() / min
    }
}

pub(crate) fn inverse(m: &Matrix) -> Option<Matrix> {
    m.clone().try_inverse()
}

pub(crate) fn symmetric_part(m: &Matrix) -> Matrix {
    (m + m.transpose()) * 0.5
}

pub(crate) fn skew_part(m: &Matrix) -> Matrix {
    (m - m.transpose()) * 0.5
}

/// Eigenvalues of the symmetric part of `m`, ascending.
pub(crate) fn symmetric_eigenvalues(m: &Matrix) -> DVector<f64> {
    let mut ev = nalgebra::SymmetricEigen::new(symmetric_part(m)).eigenvalues;
    ev.as_mut_slice().sort_by(|a, b| a.total_cmp(b));
    ev
}

/// Assemble `[[a, b], [c, d]]` from four equally sized square blocks.
pub(crate) fn block2(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
    let n = a.nrows();
    let mut m = Matrix::zeros(2 * n, 2 * n);
    m.view_mut((0, 0), (n, n)).copy_from(a);
    m.view_mut((0, n), (n, n)).copy_from(b);
    m.view_mut((n, 0), (n, n)).copy_from(c);
    m.view_mut((n, n), (n, n)).copy_from(d);
    m
}

/// Split a `2n × 2n` matrix into its four `n × n` blocks.
pub(crate) fn split2(m: &Matrix) -> [Matrix; 4] {
    let n = m.nrows() / 2;
    [
        m.view((0, 0), (n, n)).into_owned(),
        m.view((0, n), (n, n)).into_owned(),
        m.view((n, 0), (n, n)).into_owned(),
        m.view((n, n), (n, n)).into_owned(),
    ]
}
