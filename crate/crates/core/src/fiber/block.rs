use core::ops::{Add, Mul, Neg, Sub};

use nalgebra::DVector;

use super::{FiberDim, GeneralizedVector};
use crate::linalg::{block2, identity, split2, Matrix};
use crate::{Error, Result, Tolerance};

/// An endomorphism of `V ⊕ V*` in block form
///
/// ```text
/// [[H, σ],     H: V → V,   σ: V* → V,
///  [τ, K]]     τ: V → V*,  K: V* → V*
/// ```
///
/// acting as `X + ξ ↦ (HX + σξ) + (τX + Kξ)`. All products and applications
/// are carried out blockwise; [`BlockOperator::assemble`] gives the dense
/// `2n × 2n` matrix for independent cross-checks.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockOperator {
    dim: FiberDim,
    h: Matrix,
    sigma: Matrix,
    tau: Matrix,
    k: Matrix,
}

impl BlockOperator {
    /// Build from the four `n × n` blocks.
    pub fn new(h: Matrix, sigma: Matrix, tau: Matrix, k: Matrix) -> Result<Self> {
        let dim = FiberDim::new(h.nrows())?;
        for m in [&h, &sigma, &tau, &k] {
            if m.nrows() != dim.n() || m.ncols() != dim.n() {
                return Err(Error::Dimension {
                    expected: dim.n(),
                    found: if m.nrows() != dim.n() {
                        m.nrows()
                    } else {
                        m.ncols()
                    },
                });
            }
        }
        Ok(BlockOperator {
            dim,
            h,
            sigma,
            tau,
            k,
        })
    }

    /// Split a dense `2n × 2n` matrix into blocks.
    pub fn from_dense(m: &Matrix) -> Result<Self> {
        if m.nrows() != m.ncols() || !m.nrows().is_multiple_of(2) {
            return Err(Error::Dimension {
                expected: 2 * (m.nrows() / 2).max(1),
                found: m.ncols(),
            });
        }
        let [h, sigma, tau, k] = split2(m);
        BlockOperator::new(h, sigma, tau, k)
    }

    /// `[[H, 0], [0, K]]`.
    pub fn diagonal(h: Matrix, k: Matrix) -> Result<Self> {
        let n = h.nrows();
        BlockOperator::new(h, Matrix::zeros(n, n), Matrix::zeros(n, n), k)
    }

    /// `[[0, σ], [τ, 0]]`.
    pub fn anti_diagonal(sigma: Matrix, tau: Matrix) -> Result<Self> {
        let n = sigma.nrows();
        BlockOperator::new(Matrix::zeros(n, n), sigma, tau, Matrix::zeros(n, n))
    }

    /// The identity of `V ⊕ V*`.
    pub fn identity(dim: FiberDim) -> Self {
        let n = dim.n();
        BlockOperator {
            dim,
            h: identity(n),
            sigma: Matrix::zeros(n, n),
            tau: Matrix::zeros(n, n),
            k: identity(n),
        }
    }

    /// The zero endomorphism.
    pub fn zero(dim: FiberDim) -> Self {
        let n = dim.n();
        BlockOperator {
            dim,
            h: Matrix::zeros(n, n),
            sigma: Matrix::zeros(n, n),
            tau: Matrix::zeros(n, n),
            k: Matrix::zeros(n, n),
        }
    }

    pub fn dim(&self) -> FiberDim {
        self.dim
    }

    /// `H: V → V`.
    pub fn h(&self) -> &Matrix {
        &self.h
    }

    /// `σ: V* → V`.
    pub fn sigma(&self) -> &Matrix {
        &self.sigma
    }

    /// `τ: V → V*`.
    pub fn tau(&self) -> &Matrix {
        &self.tau
    }

    /// `K: V* → V*`.
    pub fn k(&self) -> &Matrix {
        &self.k
    }

    /// Dense `[[H, σ], [τ, K]]`.
    pub fn assemble(&self) -> Matrix {
        block2(&self.h, &self.sigma, &self.tau, &self.k)
    }

    /// `(HX + σξ) + (τX + Kξ)`.
    pub fn apply(&self, v: &GeneralizedVector) -> Result<GeneralizedVector> {
        self.dim.check(v.dim())?;
        let x = v.vector_part();
        let xi = v.covector_part();
        let top: DVector<f64> = &self.h * &x + &self.sigma * &xi;
        let bottom: DVector<f64> = &self.tau * &x + &self.k * &xi;
        GeneralizedVector::from_parts(&top, &bottom)
    }

    /// `self ∘ rhs` by the block product rule.
    pub fn compose(&self, rhs: &BlockOperator) -> Result<BlockOperator> {
        self.dim.check(rhs.dim)?;
        Ok(BlockOperator {
            dim: self.dim,
            h: &self.h * &rhs.h + &self.sigma * &rhs.tau,
            sigma: &self.h * &rhs.sigma + &self.sigma * &rhs.k,
            tau: &self.tau * &rhs.h + &self.k * &rhs.tau,
            k: &self.tau * &rhs.sigma + &self.k * &rhs.k,
        })
    }

    /// `self ∘ self`.
    pub fn square(&self) -> BlockOperator {
        self * self
    }

    /// Blockwise sum.
    pub fn try_add(&self, rhs: &BlockOperator) -> Result<BlockOperator> {
        self.dim.check(rhs.dim)?;
        Ok(self.zip_blocks(rhs, |a, b| a + b))
    }

    /// `c · self`.
    pub fn scaled(&self, c: f64) -> BlockOperator {
        self.map_blocks(|m| m * c)
    }

    /// Conjugate `self` by the shear `[[I, 0], [s, I]]`:
    /// returns `[[I, 0], [s, I]] · self · [[I, 0], [−s, I]]`.
    pub fn sheared(&self, s: &Matrix) -> Result<BlockOperator> {
        let n = self.dim.n();
        let fwd = BlockOperator::new(identity(n), Matrix::zeros(n, n), s.clone(), identity(n))?;
        let back = BlockOperator::new(identity(n), Matrix::zeros(n, n), -s, identity(n))?;
        fwd.compose(self)?.compose(&back)
    }

    /// Compare the assembled matrices.
    pub fn approx_eq(&self, other: &BlockOperator, tol: Tolerance) -> bool {
        self.dim == other.dim && tol.close(&self.assemble(), &other.assemble())
    }

    fn map_blocks(&self, f: impl Fn(&Matrix) -> Matrix) -> BlockOperator {
        BlockOperator {
            dim: self.dim,
            h: f(&self.h),
            sigma: f(&self.sigma),
            tau: f(&self.tau),
            k: f(&self.k),
        }
    }

    fn zip_blocks(
        &self,
        rhs: &BlockOperator,
        f: impl Fn(&Matrix, &Matrix) -> Matrix,
    ) -> BlockOperator {
        BlockOperator {
            dim: self.dim,
            h: f(&self.h, &rhs.h),
            sigma: f(&self.sigma, &rhs.sigma),
            tau: f(&self.tau, &rhs.tau),
            k: f(&self.k, &rhs.k),
        }
    }
}

// Operator impls panic on dimension mismatch, like nalgebra's.

impl Mul<&BlockOperator> for &BlockOperator {
    type Output = BlockOperator;

    fn mul(self, rhs: &BlockOperator) -> BlockOperator {
        self.compose(rhs)
            .expect("block operator dimension mismatch")
    }
}

impl Add<&BlockOperator> for &BlockOperator {
    type Output = BlockOperator;

    fn add(self, rhs: &BlockOperator) -> BlockOperator {
        self.try_add(rhs)
            .expect("block operator dimension mismatch")
    }
}

impl Sub<&BlockOperator> for &BlockOperator {
    type Output = BlockOperator;

    fn sub(self, rhs: &BlockOperator) -> BlockOperator {
        self.dim
            .check(rhs.dim)
            .expect("block operator dimension mismatch");
        self.zip_blocks(rhs, |a, b| a - b)
    }
}

impl Neg for &BlockOperator {
    type Output = BlockOperator;

    fn neg(self) -> BlockOperator {
        self.scaled(-1.0)
    }
}

impl Neg for BlockOperator {
    type Output = BlockOperator;

    fn neg(self) -> BlockOperator {
        self.scaled(-1.0)
    }
}

impl Mul<&BlockOperator> for f64 {
    type Output = BlockOperator;

    fn mul(self, rhs: &BlockOperator) -> BlockOperator {
        rhs.scaled(self)
    }
}
