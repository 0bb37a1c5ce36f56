//! Basis-fixed model of one fiber `V ⊕ V*`.
//!
//! Coordinates of a [`GeneralizedVector`] `X + ξ` are `(X_1..X_n, ξ_1..ξ_n)`,
//! with `ξ` expressed in the dual basis so that `ξ(X) = Σ ξ_i X_i`.
//!
//! Index conventions, fixed once for the whole crate:
//!
//! * a bilinear form `b` with Gram matrix `B` evaluates as `b(X, Y) = XᵀBY`;
//! * its flat map sends `X` to the covector `Y ↦ b(X, Y)`, whose coordinates
//!   are `(♭X)_j = Σ_i X_i B_ij`, i.e. the flat matrix is `Bᵀ`;
//! * the sharp map is the inverse of the flat matrix;
//! * the dual `A*` of `A: V → V`, defined by `(A*ξ)(X) = ξ(AX)`, is `Aᵀ`.

mod block;
mod form;
mod polynomial;
mod vector;

pub use block::BlockOperator;
pub use form::{dual_map, musicals, signature, BaseForm, BilinearForm, Form, FormKind, Musicals};
pub use polynomial::{matrix_polynomial_class, polynomial_class, PolynomialClass};
pub use vector::GeneralizedVector;

use crate::{Error, Result};

/// Dimension `n` of `V`; the fiber `V ⊕ V*` has dimension `2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiberDim(usize);

impl FiberDim {
    /// `n ≥ 1`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedDimension {
                n,
                reason: "fiber dimension must be at least 1",
            });
        }
        Ok(FiberDim(n))
    }

    /// `n`.
    pub fn n(self) -> usize {
        self.0
    }

    /// `2n`.
    pub fn total(self) -> usize {
        2 * self.0
    }

    pub(crate) fn check(self, other: FiberDim) -> Result<()> {
        if self != other {
            return Err(Error::Dimension {
                expected: self.0,
                found: other.0,
            });
        }
        Ok(())
    }
}
