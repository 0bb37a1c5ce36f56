use super::BlockOperator;
use crate::linalg::{identity, round, sqrt, Matrix};
use crate::{Sign, Tolerance};

/// Minimal-polynomial class of an endomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolynomialClass {
    /// `J² = −Id`.
    AlmostComplex,
    /// `F² = Id`, `F ≠ ±Id`, with `plus`/`minus` the dimensions of the
    /// `±1`-eigenspaces. `plus == minus` is almost paracomplex.
    AlmostProduct {
        plus: usize,
        minus: usize,
    },
    Neither,
}

impl PolynomialClass {
    /// `α` with `op² = α·Id`.
    pub fn alpha(self) -> Option<Sign> {
        match self {
            PolynomialClass::AlmostComplex => Some(Sign::Minus),
            PolynomialClass::AlmostProduct { .. } => Some(Sign::Plus),
            PolynomialClass::Neither => None,
        }
    }

    pub fn is_paracomplex(self) -> bool {
        matches!(self, PolynomialClass::AlmostProduct { plus, minus } if plus == minus)
    }
}

/// Class of the assembled `2n × 2n` matrix of `op`.
pub fn polynomial_class(op: &BlockOperator, tol: Tolerance) -> PolynomialClass {
    matrix_polynomial_class(&op.assemble(), tol)
}

/// Class of a square matrix. `op² ∓ Id` is compared against `Id` in
/// relative Frobenius norm; `±Id` themselves are `Neither`.
pub fn matrix_polynomial_class(m: &Matrix, tol: Tolerance) -> PolynomialClass {
    let n = m.nrows();
    if n == 0 || m.ncols() != n {
        return PolynomialClass::Neither;
    }
    let id = identity(n);
    let scale = sqrt(n as f64);
    let sq = m * m;
    if tol.close_scaled(&sq, &(-&id), scale) {
        return PolynomialClass::AlmostComplex;
    }
    if tol.close_scaled(&sq, &id, scale) {
        if tol.close_scaled(m, &id, scale) || tol.close_scaled(m, &(-&id), scale) {
            return PolynomialClass::Neither;
        }
        // eigenvalues are ±1, so p − q = tr and p + q = dim
        let plus = round((n as f64 + m.trace()) / 2.0).clamp(0.0, n as f64) as usize;
        return PolynomialClass::AlmostProduct {
            plus,
            minus: n - plus,
        };
    }
    PolynomialClass::Neither
}
