//! Closed-form fundamental tensors, evaluated argument-wise on basis pairs.

use nalgebra::DVector;

use super::families::{build_family, BaseData, Family};
use super::{fundamental_tensor_with, AeManifoldData};
use crate::canonical::g0;
use crate::linalg::{sqrt, Matrix};
use crate::metrics::induced_metric;
use crate::{BaseForm, BilinearForm, Error, FormKind, Result, Sign, Tolerance};

type Vector = DVector<f64>;

/// The generalized metric a family is paired with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DesignatedMetric {
    /// `𝒢₀`.
    Natural,
    /// `𝒢_g`.
    Induced,
}

/// Gram matrix of `(X + ξ, Y + η) ↦ f(X, ξ, Y, η)`.
fn gram_of(n: usize, f: impl Fn(&Vector, &Vector, &Vector, &Vector) -> f64) -> Matrix {
    let unit = |k: usize| Vector::from_fn(2 * n, |i, _| if i == k { 1.0 } else { 0.0 });
    Matrix::from_fn(2 * n, 2 * n, |r, c| {
        let u = unit(r);
        let v = unit(c);
        let (x, xi) = (u.rows(0, n).into_owned(), u.rows(n, n).into_owned());
        let (y, eta) = (v.rows(0, n).into_owned(), v.rows(n, n).into_owned());
        f(&x, &xi, &y, &eta)
    })
}

/// `½(ξ(Y) + η(X))`.
fn g0_eval(x: &Vector, xi: &Vector, y: &Vector, eta: &Vector) -> f64 {
    0.5 * (xi.dot(y) + eta.dot(x))
}

/// `½(ξ(Y) − η(X))`.
fn omega0_eval(x: &Vector, xi: &Vector, y: &Vector, eta: &Vector) -> f64 {
    0.5 * (xi.dot(y) - eta.dot(x))
}

/// A base form with its sharp map, as a scalar evaluator.
struct Base<'a> {
    form: &'a BaseForm,
    sharp: Matrix,
}

impl<'a> Base<'a> {
    fn new(form: &'a BaseForm) -> Result<Self> {
        Ok(Base {
            form,
            sharp: form.musicals()?.sharp,
        })
    }

    fn at(&self, x: &Vector, y: &Vector) -> f64 {
        x.dot(&(self.form.gram() * y))
    }

    /// `b(♯ξ, ♯η)`.
    fn dual(&self, xi: &Vector, eta: &Vector) -> f64 {
        self.at(&(&self.sharp * xi), &(&self.sharp * eta))
    }
}

/// `½(b(X, Y) + s·b(♯ξ, ♯η))`.
fn half_musical(b: &BaseForm, s: f64) -> Result<Matrix> {
    let b = Base::new(b)?;
    Ok(gram_of(b.form.dim().n(), |x, xi, y, eta| {
        0.5 * (b.at(x, y) + s * b.dual(xi, eta))
    }))
}

fn phi_musical(data: &AeManifoldData, family: Family) -> Result<Matrix> {
    let phi = data.phi();
    // 𝒥 and ℱ built on a metric give ½(φ ∓ φ(♯,♯)), on a 2-form ½(φ ± φ(♯,♯)).
    let s = match (family, phi.kind()) {
        (Family::Jphi, FormKind::Symmetric) | (Family::Fphi, FormKind::Skew) => -1.0,
        _ => 1.0,
    };
    half_musical(&phi, s)
}

/// `𝒢₀(AX + ξ, λ·AY + η)`.
fn g0_twisted(a: &Matrix, lambda: f64) -> Matrix {
    gram_of(a.nrows(), |x, xi, y, eta| {
        g0_eval(&(a * x), xi, &(a * y * lambda), eta)
    })
}

fn natural(family: Family, base: &BaseData, tol: Tolerance) -> Result<Matrix> {
    let r2 = sqrt(2.0);
    match family {
        Family::Jg => half_musical(base.g()?, -1.0),
        Family::Fg => half_musical(base.g()?, 1.0),
        Family::Jom => half_musical(base.omega()?, 1.0),
        Family::Fom => half_musical(base.omega()?, -1.0),
        Family::JlamJ(l) | Family::FlamF(l) => Ok(g0_twisted(base.j()?, l.value())),
        Family::JJgFlat | Family::FFgFlat | Family::JJgSharp | Family::FFgSharp => {
            let data = base.ae(tol)?;
            let g = Base::new(&data.g)?;
            let sharp = matches!(family, Family::JJgSharp | Family::FFgSharp);
            Ok(gram_of(data.dim().n(), |x, xi, y, eta| {
                let extra = if sharp { g.dual(xi, eta) } else { g.at(x, y) };
                g0_eval(&(&data.j * x), xi, &(&data.j * y), eta) + 0.5 * extra
            }))
        }
        Family::FJg | Family::JFg => {
            let data = base.ae(tol)?;
            let g = Base::new(&data.g)?;
            let s = if family == Family::FJg { 1.0 } else { -1.0 };
            Ok(gram_of(data.dim().n(), |x, xi, y, eta| {
                g0_eval(&(&data.j * x), xi, &(&data.j * y), eta)
                    + r2 / 2.0 * (g.at(x, y) + s * g.dual(xi, eta))
            }))
        }
        Family::Jphi | Family::Fphi => phi_musical(&base.ae(tol)?, family),
    }
}

fn induced(family: Family, base: &BaseData, tol: Tolerance) -> Result<Matrix> {
    let r2 = sqrt(2.0);
    let n = base.g()?.dim().n();
    match family {
        Family::Jg => Ok(gram_of(n, |x, xi, y, eta| {
            -2.0 * omega0_eval(x, xi, y, eta)
        })),
        Family::Fg => Ok(gram_of(n, |x, xi, y, eta| 2.0 * g0_eval(x, xi, y, eta))),
        Family::Jphi | Family::Fphi => {
            let data = base.ae(tol)?;
            let j = &data.j;
            let use_omega = (family == Family::Jphi) == (data.epsilon == Sign::Plus);
            Ok(gram_of(n, |x, xi, y, eta| {
                let (jx, jy) = (j * x, j * y);
                if use_omega {
                    -2.0 * omega0_eval(&jx, xi, &jy, eta)
                } else {
                    2.0 * g0_eval(&jx, xi, &jy, eta)
                }
            }))
        }
        Family::JlamJ(l) | Family::FlamF(l) => {
            let data = base.ae(tol)?;
            let expected = if matches!(family, Family::JlamJ(_)) {
                Sign::Minus
            } else {
                Sign::Plus
            };
            if data.alpha != expected {
                return Err(Error::WrongAlpha {
                    expected,
                    found: data.alpha,
                });
            }
            let phi = data.phi();
            let p = Base::new(&phi)?;
            // φ(X, Y) − λφ(♯ξ, ♯η) for 𝒥_{λ,J}, φ(X, Y) + λφ(♯ξ, ♯η) for ℱ_{λ,F}
            let s = expected.value() * l.value();
            Ok(gram_of(n, |x, xi, y, eta| p.at(x, y) + s * p.dual(xi, eta)))
        }
        Family::FJg | Family::JFg => {
            let data = base.ae(tol)?;
            let phi = data.phi();
            let p = Base::new(&phi)?;
            Ok(gram_of(n, |x, xi, y, eta| {
                let canonical = if family == Family::FJg {
                    2.0 * r2 * g0_eval(x, xi, y, eta)
                } else {
                    -2.0 * r2 * omega0_eval(x, xi, y, eta)
                };
                canonical + p.at(x, y) + p.dual(xi, eta)
            }))
        }
        _ => Err(Error::UnknownFamily(alloc::format!(
            "{} has no closed form with the induced metric",
            family.id()
        ))),
    }
}

/// The closed-form fundamental tensor of `family` paired with `metric`.
pub fn closed_form(
    family: Family,
    metric: DesignatedMetric,
    base: &BaseData,
    tol: Tolerance,
) -> Result<BilinearForm> {
    let gram = match metric {
        DesignatedMetric::Natural => natural(family, base, tol)?,
        DesignatedMetric::Induced => induced(family, base, tol)?,
    };
    BilinearForm::new(gram, FormKind::General)
}

/// The designated generalized metric as a form.
pub fn designated_form(metric: DesignatedMetric, base: &BaseData) -> Result<BilinearForm> {
    match metric {
        DesignatedMetric::Natural => {
            let n = base
                .g
                .as_ref()
                .map(|g| g.dim())
                .or(base.omega.as_ref().map(|w| w.dim()))
                .or(base
                    .j
                    .as_ref()
                    .and_then(|j| crate::FiberDim::new(j.nrows()).ok()))
                .ok_or(Error::MissingInput("g, J or omega"))?;
            Ok(g0(n))
        }
        DesignatedMetric::Induced => induced_metric(base.g()?),
    }
}

/// Compare [`fundamental_tensor_with`] of the built structure against its
/// closed form. Fails with [`Error::IncompatiblePair`] when the structure is
/// not compatible with the designated metric.
pub fn twin_formula_check(
    family: Family,
    metric: DesignatedMetric,
    base: &BaseData,
    tol: Tolerance,
) -> Result<bool> {
    let expected = closed_form(family, metric, base, tol)?;
    let op = build_family(family, base, tol)?;
    let form = designated_form(metric, base)?;
    let actual = fundamental_tensor_with(&op, &form, tol)?;
    Ok(tol.close(actual.form.gram(), expected.gram()))
}
