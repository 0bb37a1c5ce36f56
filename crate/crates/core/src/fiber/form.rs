use nalgebra::DVector;

use super::{FiberDim, GeneralizedVector};
use crate::linalg::{inverse, is_nondegenerate, symmetric_eigenvalues, Matrix};
use crate::{Error, Result, Tolerance};

/// Declared symmetry of a bilinear form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    Symmetric,
    Skew,
    General,
}

impl FormKind {
    fn holds(self, gram: &Matrix, tol: Tolerance) -> bool {
        match self {
            FormKind::Symmetric => tol.close(gram, &gram.transpose()),
            FormKind::Skew => tol.close(gram, &(-gram.transpose())),
            FormKind::General => true,
        }
    }
}

/// Anything carrying a Gram matrix and a declared kind.
pub trait Form {
    fn gram(&self) -> &Matrix;
    fn kind(&self) -> FormKind;
}

/// A bilinear form on the fiber `V ⊕ V*`: `(u, v) ↦ uᵀ M v`.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm {
    dim: FiberDim,
    gram: Matrix,
    kind: FormKind,
}

impl BilinearForm {
    /// Validates the shape and the declared symmetry with the default tolerance.
    pub fn new(gram: Matrix, kind: FormKind) -> Result<Self> {
        Self::with_tolerance(gram, kind, Tolerance::DEFAULT)
    }

    pub fn with_tolerance(gram: Matrix, kind: FormKind, tol: Tolerance) -> Result<Self> {
        if gram.nrows() != gram.ncols() || !gram.nrows().is_multiple_of(2) {
            return Err(Error::Dimension {
                expected: 2 * (gram.nrows() / 2).max(1),
                found: gram.ncols(),
            });
        }
        let dim = FiberDim::new(gram.nrows() / 2)?;
        if !kind.holds(&gram, tol) {
            return Err(match kind {
                FormKind::Symmetric => Error::FormKind("gram matrix is not symmetric"),
                _ => Error::FormKind("gram matrix is not skew-symmetric"),
            });
        }
        Ok(BilinearForm { dim, gram, kind })
    }

    pub fn dim(&self) -> FiberDim {
        self.dim
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    /// `uᵀ M v`.
    pub fn eval(&self, u: &GeneralizedVector, v: &GeneralizedVector) -> Result<f64> {
        self.dim.check(u.dim())?;
        self.dim.check(v.dim())?;
        Ok(u.coords().dot(&(&self.gram * v.coords())))
    }

    pub fn is_nondegenerate(&self, tol: Tolerance) -> bool {
        is_nondegenerate(&self.gram, tol)
    }

    /// `(r, s)`; see [`signature`].
    pub fn signature(&self, tol: Tolerance) -> Result<(usize, usize)> {
        signature(self, tol)
    }

    /// `c · self`, same kind.
    pub fn scaled(&self, c: f64) -> BilinearForm {
        BilinearForm {
            dim: self.dim,
            gram: &self.gram * c,
            kind: self.kind,
        }
    }
}

impl Form for BilinearForm {
    fn gram(&self) -> &Matrix {
        &self.gram
    }

    fn kind(&self) -> FormKind {
        self.kind
    }
}

/// A symmetric or skew bilinear form on `V`: a metric `g` or a 2-form `ω`.
#[derive(Clone, Debug, PartialEq)]
pub struct BaseForm {
    dim: FiberDim,
    gram: Matrix,
    kind: FormKind,
}

impl BaseForm {
    /// `kind` must be `Symmetric` or `Skew`.
    pub fn new(gram: Matrix, kind: FormKind) -> Result<Self> {
        Self::with_tolerance(gram, kind, Tolerance::DEFAULT)
    }

    pub fn with_tolerance(gram: Matrix, kind: FormKind, tol: Tolerance) -> Result<Self> {
        if kind == FormKind::General {
            return Err(Error::FormKind("base forms are symmetric or skew"));
        }
        if gram.nrows() != gram.ncols() {
            return Err(Error::Dimension {
                expected: gram.nrows(),
                found: gram.ncols(),
            });
        }
        let dim = FiberDim::new(gram.nrows())?;
        if !kind.holds(&gram, tol) {
            return Err(match kind {
                FormKind::Symmetric => Error::FormKind("gram matrix is not symmetric"),
                _ => Error::FormKind("gram matrix is not skew-symmetric"),
            });
        }
        Ok(BaseForm { dim, gram, kind })
    }

    /// Symmetric base form.
    pub fn metric(gram: Matrix) -> Result<Self> {
        Self::new(gram, FormKind::Symmetric)
    }

    /// Skew base form.
    pub fn symplectic(gram: Matrix) -> Result<Self> {
        Self::new(gram, FormKind::Skew)
    }

    pub fn dim(&self) -> FiberDim {
        self.dim
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    /// `Xᵀ B Y`.
    pub fn eval(&self, x: &DVector<f64>, y: &DVector<f64>) -> Result<f64> {
        let n = self.dim.n();
        for len in [x.len(), y.len()] {
            if len != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: len,
                });
            }
        }
        Ok(x.dot(&(&self.gram * y)))
    }

    pub fn is_nondegenerate(&self, tol: Tolerance) -> bool {
        is_nondegenerate(&self.gram, tol)
    }

    pub fn musicals(&self) -> Result<Musicals> {
        musicals_with(self, Tolerance::DEFAULT)
    }

    pub fn musicals_with(&self, tol: Tolerance) -> Result<Musicals> {
        musicals_with(self, tol)
    }

    pub fn signature(&self, tol: Tolerance) -> Result<(usize, usize)> {
        signature(self, tol)
    }
}

impl Form for BaseForm {
    fn gram(&self) -> &Matrix {
        &self.gram
    }

    fn kind(&self) -> FormKind {
        self.kind
    }
}

/// Flat and sharp matrices of a nondegenerate base form.
#[derive(Clone, Debug, PartialEq)]
pub struct Musicals {
    /// Coordinates of `♭X` are `flat · X`; equals `Bᵀ`.
    pub flat: Matrix,
    /// `flat⁻¹`.
    pub sharp: Matrix,
}

/// `♭` and `♯` of `b` with the default tolerance.
pub fn musicals(b: &BaseForm) -> Result<Musicals> {
    musicals_with(b, Tolerance::DEFAULT)
}

fn musicals_with(b: &BaseForm, tol: Tolerance) -> Result<Musicals> {
    if !b.is_nondegenerate(tol) {
        return Err(Error::DegenerateForm);
    }
    let flat = b.gram.transpose();
    let sharp = inverse(&flat).ok_or(Error::DegenerateForm)?;
    Ok(Musicals { flat, sharp })
}

/// Matrix of the dual map `A*`: the transpose.
pub fn dual_map(a: &Matrix) -> Matrix {
    a.transpose()
}

/// Numbers of positive and negative eigenvalues of a symmetric form.
///
/// Any eigenvalue with `|λ| ≤ tol.abs()` is reported as [`Error::DegenerateForm`].
pub fn signature<F: Form + ?Sized>(f: &F, tol: Tolerance) -> Result<(usize, usize)> {
    if f.kind() != FormKind::Symmetric {
        return Err(Error::FormKind("signature needs a symmetric form"));
    }
    let ev = symmetric_eigenvalues(f.gram());
    let mut r = 0;
    let mut s = 0;
    for &l in ev.iter() {
        if l.abs() <= tol.abs() {
            return Err(Error::DegenerateForm);
        }
        if l > 0.0 {
            r += 1;
        } else {
            s += 1;
        }
    }
    Ok((r, s))
}
