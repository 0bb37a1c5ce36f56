//! The natural structures of `V ⊕ V*`.

use crate::linalg::{block2, identity, Matrix};
use crate::{BilinearForm, BlockOperator, FiberDim, FormKind};

/// `𝒢₀(X + ξ, Y + η) = ½(ξ(Y) + η(X))`, Gram `[[0, ½I], [½I, 0]]`.
pub fn g0(dim: FiberDim) -> BilinearForm {
    BilinearForm::new(g0_gram(dim.n()), FormKind::Symmetric).expect("g0 gram is symmetric")
}

/// `Ω₀(X + ξ, Y + η) = ½(ξ(Y) − η(X))`, Gram `[[0, −½I], [½I, 0]]`.
pub fn omega0(dim: FiberDim) -> BilinearForm {
    let n = dim.n();
    let h = identity(n) * 0.5;
    let z = Matrix::zeros(n, n);
    BilinearForm::new(block2(&z, &(-&h), &h, &z), FormKind::Skew).expect("omega0 gram is skew")
}

/// `ℱ₀(X + ξ) = −X + ξ`.
pub fn f0(dim: FiberDim) -> BlockOperator {
    let n = dim.n();
    BlockOperator::diagonal(-identity(n), identity(n)).expect("square blocks")
}

pub(crate) fn g0_gram(n: usize) -> Matrix {
    let h = identity(n) * 0.5;
    let z = Matrix::zeros(n, n);
    block2(&z, &h, &h, &z)
}
