//! Seeded, reproducible test data.
//!
//! Every scalar comes from SplitMix64 with its state initialised to the seed:
//! `x += 0x9e3779b97f4a7c15`, then
//! `z = (x ^ x >> 30) · 0xbf58476d1ce4e5b9`, `z = (z ^ z >> 27) · 0x94d049bb133111eb`,
//! output `z ^ z >> 31`. A 64-bit output `u` maps to `(u >> 11)·2⁻⁵³·2 − 1`
//! in `[−1, 1)`. Matrices are filled row by row.
//!
//! Compatible pairs are built on a model fiber and transported by a random
//! invertible `P` via `g ↦ PᵀgP`, `J ↦ P⁻¹JP`.

use core::fmt;
use core::str::FromStr;

use alloc::string::ToString;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::kahler::KahlerData;
use crate::linalg::{block2, condition_number, identity, inverse, singular_values, Matrix};
use crate::zoo::AeManifoldData;
use crate::{BaseForm, BlockOperator, Error, FiberDim, Result, Sign, Tolerance};

/// Largest condition number accepted for random changes of basis.
pub const MAX_CONDITION: f64 = 20.0;

/// Smallest singular value accepted for random changes of basis.
pub const MIN_SINGULAR: f64 = 0.25;

const MAX_TRIES: usize = 256;

/// A 64-bit generator seed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Seed(pub u64);

/// Model-then-transport kinds of `(α, ε)`-metric data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AeKind {
    Hermitian,
    IndefiniteHermitian,
    Norden,
    ParaHermitian,
    ProductRiemannian,
}

impl AeKind {
    pub const ALL: [AeKind; 5] = [
        AeKind::Hermitian,
        AeKind::IndefiniteHermitian,
        AeKind::Norden,
        AeKind::ParaHermitian,
        AeKind::ProductRiemannian,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AeKind::Hermitian => "Hermitian",
            AeKind::IndefiniteHermitian => "IndefiniteHermitian",
            AeKind::Norden => "Norden",
            AeKind::ParaHermitian => "ParaHermitian",
            AeKind::ProductRiemannian => "ProductRiemannian",
        }
    }

    /// `(α, ε)` of the generated pairs.
    pub fn signs(self) -> (Sign, Sign) {
        match self {
            AeKind::Hermitian | AeKind::IndefiniteHermitian => (Sign::Minus, Sign::Plus),
            AeKind::Norden => (Sign::Minus, Sign::Minus),
            AeKind::ParaHermitian => (Sign::Plus, Sign::Minus),
            AeKind::ProductRiemannian => (Sign::Plus, Sign::Plus),
        }
    }

    /// Whether a pair of this kind exists on an `n`-dimensional fiber.
    pub fn supports(self, n: usize) -> bool {
        match self {
            AeKind::Hermitian | AeKind::Norden | AeKind::ParaHermitian => {
                n >= 2 && n.is_multiple_of(2)
            }
            AeKind::IndefiniteHermitian => n >= 4 && n.is_multiple_of(2),
            AeKind::ProductRiemannian => n >= 2,
        }
    }
}

impl fmt::Display for AeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AeKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

fn diag(entries: impl IntoIterator<Item = f64>) -> Matrix {
    let v: alloc::vec::Vec<f64> = entries.into_iter().collect();
    Matrix::from_diagonal(&nalgebra::DVector::from_vec(v))
}

/// `diag(+1 × r, −1 × s)`.
fn sign_diagonal(r: usize, s: usize) -> Matrix {
    diag(core::iter::repeat_n(1.0, r).chain(core::iter::repeat_n(-1.0, s)))
}

/// `[[0, −I], [I, 0]]` on `ℝ^{2m}`.
fn standard_complex(m: usize) -> Matrix {
    let z = Matrix::zeros(m, m);
    let i = identity(m);
    block2(&z, &(-&i), &i, &z)
}

/// Source of random matrices.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: SplitMix64,
}

impl Sampler {
    pub fn new(seed: Seed) -> Self {
        Sampler {
            rng: SplitMix64::seed_from_u64(seed.0),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform in `[−1, 1)`.
    pub fn uniform(&mut self) -> f64 {
        let unit = (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        2.0 * unit - 1.0
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        let data: alloc::vec::Vec<f64> = (0..rows * cols).map(|_| self.uniform()).collect();
        Matrix::from_row_slice(rows, cols, &data)
    }

    /// Random matrix with condition number below [`MAX_CONDITION`] and
    /// singular values at least [`MIN_SINGULAR`]; falls back to the identity
    /// after a fixed number of rejections.
    pub fn invertible(&mut self, n: usize) -> Matrix {
        for _ in 0..MAX_TRIES {
            let m = self.matrix(n, n);
            let sv = singular_values(&m);
            if sv.min() >= MIN_SINGULAR && sv.max() < MAX_CONDITION * sv.min() {
                return m;
            }
        }
        identity(n)
    }

    /// Orthogonal factor of a random invertible matrix.
    pub fn orthogonal(&mut self, n: usize) -> Matrix {
        let qr = self.invertible(n).qr();
        let (q, r) = (qr.q(), qr.r());
        let signs = diag((0..n).map(|i| if r[(i, i)] < 0.0 { -1.0 } else { 1.0 }));
        q * signs
    }

    pub fn symmetric(&mut self, n: usize) -> Matrix {
        let m = self.matrix(n, n);
        (&m + m.transpose()) * 0.5
    }

    pub fn skew(&mut self, n: usize) -> Matrix {
        let m = self.matrix(n, n);
        (&m - m.transpose()) * 0.5
    }

    /// `Pᵀ·diag(+1 × r, −1 × s)·P`.
    pub fn metric(&mut self, r: usize, s: usize) -> Result<BaseForm> {
        let n = r + s;
        FiberDim::new(n)?;
        let p = self.invertible(n);
        let g = p.transpose() * sign_diagonal(r, s) * &p;
        BaseForm::metric((&g + g.transpose()) * 0.5)
    }

    /// `Pᵀ·Ω·P` with `Ω = [[0, I], [−I, 0]]`.
    pub fn symplectic(&mut self, n: usize) -> Result<BaseForm> {
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::Dimension {
                expected: n + n % 2,
                found: n,
            });
        }
        let p = self.invertible(n);
        let omega = -standard_complex(n / 2);
        let w = p.transpose() * omega * &p;
        BaseForm::symplectic((&w - w.transpose()) * 0.5)
    }

    /// A model pair of `kind`, transported by a random invertible matrix.
    pub fn ae_pair(&mut self, kind: AeKind, n: usize) -> Result<AeManifoldData> {
        if !kind.supports(n) {
            return Err(Error::Dimension {
                expected: if kind == AeKind::IndefiniteHermitian {
                    4
                } else {
                    2
                },
                found: n,
            });
        }
        let m = n / 2;
        let (j, g) = match kind {
            AeKind::Hermitian => (standard_complex(m), identity(n)),
            AeKind::IndefiniteHermitian => {
                let d = sign_diagonal(m.div_ceil(2), m / 2);
                (
                    standard_complex(m),
                    block2(&d, &Matrix::zeros(m, m), &Matrix::zeros(m, m), &d),
                )
            }
            AeKind::Norden => (standard_complex(m), sign_diagonal(m, m)),
            AeKind::ParaHermitian => {
                let z = Matrix::zeros(m, m);
                (
                    sign_diagonal(m, m),
                    block2(&z, &identity(m), &identity(m), &z),
                )
            }
            AeKind::ProductRiemannian => (sign_diagonal(n.div_ceil(2), n / 2), identity(n)),
        };
        let p = self.invertible(n);
        let p_inv = inverse(&p).ok_or(Error::DegenerateForm)?;
        let g = p.transpose() * g * &p;
        let j = p_inv * j * &p;
        let (alpha, epsilon) = kind.signs();
        let g = BaseForm::metric((&g + g.transpose()) * 0.5)?;
        AeManifoldData::new(j, g, alpha, epsilon, Tolerance::DEFAULT)
    }

    /// Random `(b, g, J₁, J₂)` with `g` positive definite and each `Jᵢ`
    /// `g`-orthogonal.
    pub fn kahler_data(&mut self, n: usize) -> Result<KahlerData> {
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::Dimension {
                expected: n + n % 2,
                found: n,
            });
        }
        let b = self.skew(n);
        let p = self.invertible(n);
        let p_inv = inverse(&p).ok_or(Error::DegenerateForm)?;
        let g = p.transpose() * &p;
        let j0 = standard_complex(n / 2);
        let mut structure = || {
            let q = self.orthogonal(n);
            &p_inv * &q * &j0 * q.transpose() * &p
        };
        let j1 = structure();
        let j2 = structure();
        let g = BaseForm::metric((&g + g.transpose()) * 0.5)?;
        KahlerData::new(b, g, j1, j2, Tolerance::DEFAULT)
    }

    /// Four independent random blocks.
    pub fn block_operator(&mut self, dim: FiberDim) -> BlockOperator {
        let n = dim.n();
        let (h, s, t, k) = (
            self.matrix(n, n),
            self.matrix(n, n),
            self.matrix(n, n),
            self.matrix(n, n),
        );
        BlockOperator::new(h, s, t, k).expect("blocks share one size")
    }

    /// Random `𝒦` with `𝒢₀(𝒦·, ·)` symmetric and nondegenerate:
    /// `τ`, `σ` symmetric and `K = H*`.
    pub fn metric_inducer(&mut self, dim: FiberDim) -> BlockOperator {
        self.inducer(dim, Sign::Plus)
    }

    /// Random `𝒦` with `𝒢₀(𝒦·, ·)` skew and nondegenerate:
    /// `τ`, `σ` skew and `K = −H*`.
    pub fn symplectic_inducer(&mut self, dim: FiberDim) -> BlockOperator {
        self.inducer(dim, Sign::Minus)
    }

    fn inducer(&mut self, dim: FiberDim, sign: Sign) -> BlockOperator {
        let n = dim.n();
        let mut last = None;
        for _ in 0..MAX_TRIES {
            let h = self.matrix(n, n);
            let (s, t) = match sign {
                Sign::Plus => (self.symmetric(n), self.symmetric(n)),
                Sign::Minus => (self.skew(n), self.skew(n)),
            };
            let k = h.transpose() * sign.value();
            let op = BlockOperator::new(h, s, t, k).expect("blocks share one size");
            if condition_number(&op.assemble()) < MAX_CONDITION {
                return op;
            }
            last = Some(op);
        }
        last.expect("at least one try")
    }
}

/// A metric of signature `(r, s)` on `ℝⁿ`.
pub fn random_metric(n: usize, r: usize, s: usize, seed: Seed) -> Result<BaseForm> {
    if r + s != n {
        return Err(Error::Dimension {
            expected: n,
            found: r + s,
        });
    }
    Sampler::new(seed).metric(r, s)
}

/// A symplectic form on `ℝⁿ`, `n` even.
pub fn random_symplectic(n: usize, seed: Seed) -> Result<BaseForm> {
    Sampler::new(seed).symplectic(n)
}

/// A transported model pair of `kind`.
pub fn random_ae_pair(kind: AeKind, n: usize, seed: Seed) -> Result<AeManifoldData> {
    Sampler::new(seed).ae_pair(kind, n)
}

/// Random [`KahlerData`] on `ℝⁿ`, `n` even.
pub fn random_kahler_data(n: usize, seed: Seed) -> Result<KahlerData> {
    Sampler::new(seed).kahler_data(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::build_musical;
    use crate::PolynomialClass;

    #[test]
    fn reference_sequence() {
        let mut s = Sampler::new(Seed(0));
        assert_eq!(s.next_u64(), 0xe220a8397b1dcdaf);
        assert_eq!(s.next_u64(), 0x6e789e6aa1b965f4);
    }

    #[test]
    fn uniform_range() {
        let mut s = Sampler::new(Seed(3));
        for _ in 0..1000 {
            let x = s.uniform();
            assert!((-1.0..1.0).contains(&x));
        }
    }

    #[test]
    fn metrics_and_forms() {
        let tol = Tolerance::DEFAULT;
        let g = random_metric(4, 2, 2, Seed(1)).unwrap();
        assert_eq!(g.signature(tol), Ok((2, 2)));
        assert_eq!(
            random_metric(4, 2, 1, Seed(1)).unwrap_err(),
            Error::Dimension {
                expected: 4,
                found: 3
            }
        );
        assert_eq!(
            random_metric(2, 2, 0, Seed(9)),
            random_metric(2, 2, 0, Seed(9))
        );
        let w = random_symplectic(2, Seed(5)).unwrap();
        let j = build_musical(&w, Sign::Minus).unwrap();
        assert!(j
            .square()
            .approx_eq(&-&BlockOperator::identity(w.dim()), tol));
        assert!(matches!(
            random_symplectic(3, Seed(5)),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn pairs_are_valid() {
        let tight = Tolerance::new(1e-10, 1e-10).unwrap();
        for kind in AeKind::ALL {
            for n in 1..=4 {
                let r = random_ae_pair(kind, n, Seed(n as u64));
                if !kind.supports(n) {
                    assert!(matches!(r, Err(Error::Dimension { .. })));
                    continue;
                }
                let d = r.unwrap();
                d.validate(tight).unwrap();
                assert_eq!((d.alpha, d.epsilon), kind.signs());
            }
        }
        let d = random_ae_pair(AeKind::ParaHermitian, 2, Seed(4)).unwrap();
        let class = crate::fiber::matrix_polynomial_class(&d.j, Tolerance::DEFAULT);
        assert_eq!(class, PolynomialClass::AlmostProduct { plus: 1, minus: 1 });
        let d = random_ae_pair(AeKind::Norden, 2, Seed(4)).unwrap();
        assert_eq!(d.g.signature(Tolerance::DEFAULT), Ok((1, 1)));
    }

    #[test]
    fn inducers() {
        let tol = Tolerance::DEFAULT;
        let mut s = Sampler::new(Seed(11));
        let dim = FiberDim::new(3).unwrap();
        let (_, report) = crate::metrics::metric_from_endomorphism(&s.metric_inducer(dim), tol);
        assert!(report.valid());
        let (_, report) =
            crate::metrics::symplectic_from_endomorphism(&s.symplectic_inducer(dim), tol);
        assert!(report.valid());
    }
}
