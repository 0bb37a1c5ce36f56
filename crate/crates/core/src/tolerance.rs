use crate::linalg::Matrix;
use crate::{Error, Result};

/// Numerical tolerance used by every predicate in the crate.
///
/// `abs` bounds individual entries (and eigenvalue magnitudes), `rel` bounds
/// Frobenius-norm residuals relative to the size of the compared quantities.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    abs: f64,
    rel: f64,
}

impl Tolerance {
    /// `abs = rel = 1e-9`.
    pub const DEFAULT: Tolerance = Tolerance {
        abs: 1e-9,
        rel: 1e-9,
    };

    /// Both components must be finite and non-negative, and not both zero.
    pub fn new(abs: f64, rel: f64) -> Result<Self> {
        if !abs.is_finite() || !rel.is_finite() {
            return Err(Error::InvalidTolerance("components must be finite"));
        }
        if abs < 0.0 || rel < 0.0 {
            return Err(Error::InvalidTolerance("components must be non-negative"));
        }
        if abs == 0.0 && rel == 0.0 {
            return Err(Error::InvalidTolerance("abs and rel cannot both be zero"));
        }
        Ok(Tolerance { abs, rel })
    }

    /// Default absolute part with the given relative part.
    pub fn with_rel(rel: f64) -> Result<Self> {
        Tolerance::new(Self::DEFAULT.abs, rel)
    }

    /// Absolute entrywise tolerance.
    pub fn abs(&self) -> f64 {
        self.abs
    }

    /// Relative Frobenius tolerance.
    pub fn rel(&self) -> f64 {
        self.rel
    }

    /// `a ≈ b`: every entry of `a − b` is within `abs`, or the Frobenius norm
    /// of `a − b` is within `rel · max(‖a‖, ‖b‖)`.
    pub fn close(&self, a: &Matrix, b: &Matrix) -> bool {
        if a.shape() != b.shape() {
            return false;
        }
        let diff = a - b;
        diff.amax() <= self.abs || diff.norm() <= self.rel * a.norm().max(b.norm())
    }

    /// `a ≈ b` with the relative part measured against an explicit `scale`.
    pub fn close_scaled(&self, a: &Matrix, b: &Matrix, scale: f64) -> bool {
        if a.shape() != b.shape() {
            return false;
        }
        let diff = a - b;
        diff.amax() <= self.abs || diff.norm() <= self.rel * scale
    }

    /// Every entry within `abs` of zero, or `‖m‖ ≤ rel · scale`.
    pub fn negligible(&self, m: &Matrix, scale: f64) -> bool {
        m.amax() <= self.abs || m.norm() <= self.rel * scale
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::DEFAULT
    }
}

/// Relative Frobenius residual `‖a − b‖ / max(‖a‖, ‖b‖)`, zero when both
/// matrices vanish.
pub fn relative_residual(a: &Matrix, b: &Matrix) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}
