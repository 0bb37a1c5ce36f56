use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

use super::{square_sign, AeManifoldData};
use crate::linalg::{sqrt, Matrix};
use crate::{BaseForm, BlockOperator, Error, FormKind, Result, Sign, Tolerance};

/// `[[0, sign·♯_b], [♭_b, 0]]`: `𝒥_b` for `sign = −1`, `ℱ_b` for `sign = +1`.
pub fn build_musical(b: &BaseForm, sign: Sign) -> Result<BlockOperator> {
    let m = b.musicals()?;
    BlockOperator::anti_diagonal(m.sharp * sign.value(), m.flat)
}

/// `[[A, 0], [0, λA*]]` for `A² = ±I`.
pub fn build_diagonal(a: &Matrix, lambda: Sign) -> Result<BlockOperator> {
    if a.nrows() != a.ncols() {
        return Err(Error::Dimension {
            expected: a.nrows(),
            found: a.ncols(),
        });
    }
    if square_sign(a, Tolerance::DEFAULT).is_none() {
        return Err(Error::NotPolynomial);
    }
    BlockOperator::diagonal(a.clone(), a.transpose() * lambda.value())
}

/// Which off-diagonal block of a triangular structure is filled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Lower block `♭_g`.
    Flat,
    /// Upper block `♯_g`.
    Sharp,
}

/// `[[J, 0], [♭_g, εJ*]]` / `[[J, ♯_g], [0, εJ*]]` for `α = −1`, and
/// `[[F, 0], [♭_g, −εF*]]` / `[[F, ♯_g], [0, −εF*]]` for `α = +1`.
pub fn build_triangular(data: &AeManifoldData, variant: Variant) -> Result<BlockOperator> {
    let m = data.g.musicals()?;
    let n = data.dim().n();
    let corner = data.j.transpose() * (-data.alpha * data.epsilon).value();
    let z = Matrix::zeros(n, n);
    match variant {
        Variant::Flat => BlockOperator::new(data.j.clone(), z, m.flat, corner),
        Variant::Sharp => BlockOperator::new(data.j.clone(), m.sharp, z, corner),
    }
}

/// `ℱ_{J,g} = [[J, √2♯_g], [√2♭_g, εJ*]]` for `α = −1` and
/// `𝒥_{F,g} = [[F, −√2♯_g], [√2♭_g, −εF*]]` for `α = +1`.
pub fn build_mixed(data: &AeManifoldData) -> Result<BlockOperator> {
    let m = data.g.musicals()?;
    let r2 = sqrt(2.0);
    let a = data.alpha.value();
    let corner = data.j.transpose() * (-data.alpha * data.epsilon).value();
    BlockOperator::new(data.j.clone(), m.sharp * (-a * r2), m.flat * r2, corner)
}

/// Every structure the zoo can build from base-fiber data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `𝒥_g`
    Jg,
    /// `ℱ_g`
    Fg,
    /// `𝒥_ω`
    Jom,
    /// `ℱ_ω`
    Fom,
    /// `𝒥_{λ,J}`
    JlamJ(Sign),
    /// `ℱ_{λ,F}`
    FlamF(Sign),
    /// `𝒥_{J,g,♭}`
    JJgFlat,
    /// `𝒥_{J,g,♯}`
    JJgSharp,
    /// `ℱ_{F,g,♭}`
    FFgFlat,
    /// `ℱ_{F,g,♯}`
    FFgSharp,
    /// `ℱ_{J,g}`
    FJg,
    /// `𝒥_{F,g}`
    JFg,
    /// `𝒥_φ`
    Jphi,
    /// `ℱ_φ`
    Fphi,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::Jg,
        Family::Fg,
        Family::Jom,
        Family::Fom,
        Family::JlamJ(Sign::Plus),
        Family::JlamJ(Sign::Minus),
        Family::FlamF(Sign::Plus),
        Family::FlamF(Sign::Minus),
        Family::JJgFlat,
        Family::JJgSharp,
        Family::FFgFlat,
        Family::FFgSharp,
        Family::FJg,
        Family::JFg,
        Family::Jphi,
        Family::Fphi,
    ];

    /// Stable identifier.
    pub fn id(self) -> &'static str {
        match self {
            Family::Jg => "Jg",
            Family::Fg => "Fg",
            Family::Jom => "Jom",
            Family::Fom => "Fom",
            Family::JlamJ(Sign::Plus) => "JlamJ+",
            Family::JlamJ(Sign::Minus) => "JlamJ-",
            Family::FlamF(Sign::Plus) => "FlamF+",
            Family::FlamF(Sign::Minus) => "FlamF-",
            Family::JJgFlat => "JJgFlat",
            Family::JJgSharp => "JJgSharp",
            Family::FFgFlat => "FFgFlat",
            Family::FFgSharp => "FFgSharp",
            Family::FJg => "FJg",
            Family::JFg => "JFg",
            Family::Jphi => "Jphi",
            Family::Fphi => "Fphi",
        }
    }

    /// `α` required of the base data, if any.
    pub fn base_alpha(self) -> Option<Sign> {
        match self {
            Family::JlamJ(_) | Family::JJgFlat | Family::JJgSharp | Family::FJg => {
                Some(Sign::Minus)
            }
            Family::FlamF(_) | Family::FFgFlat | Family::FFgSharp | Family::JFg => Some(Sign::Plus),
            _ => None,
        }
    }

    /// `α` of the built structure, when it does not depend on the data.
    pub fn alpha(self) -> Option<Sign> {
        match self {
            Family::Jg | Family::Jom | Family::Jphi | Family::JlamJ(_) => Some(Sign::Minus),
            Family::JJgFlat | Family::JJgSharp | Family::JFg => Some(Sign::Minus),
            Family::Fg | Family::Fom | Family::Fphi | Family::FlamF(_) => Some(Sign::Plus),
            Family::FFgFlat | Family::FFgSharp | Family::FJg => Some(Sign::Plus),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Base-fiber inputs for [`build_family`]; each family reads what it needs.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BaseData {
    pub g: Option<BaseForm>,
    pub j: Option<Matrix>,
    pub omega: Option<BaseForm>,
}

impl BaseData {
    pub fn from_ae(data: &AeManifoldData) -> Self {
        BaseData {
            g: Some(data.g.clone()),
            j: Some(data.j.clone()),
            omega: None,
        }
    }

    pub fn g(&self) -> Result<&BaseForm> {
        self.g.as_ref().ok_or(Error::MissingInput("g"))
    }

    pub fn j(&self) -> Result<&Matrix> {
        self.j.as_ref().ok_or(Error::MissingInput("J"))
    }

    pub fn omega(&self) -> Result<&BaseForm> {
        self.omega.as_ref().ok_or(Error::MissingInput("omega"))
    }

    /// `(J, g)` with inferred `α`, `ε`.
    pub fn ae(&self, tol: Tolerance) -> Result<AeManifoldData> {
        AeManifoldData::infer(self.j()?.clone(), self.g()?.clone(), tol)
    }
}

fn require_alpha(data: &AeManifoldData, expected: Sign) -> Result<()> {
    if data.alpha != expected {
        return Err(Error::WrongAlpha {
            expected,
            found: data.alpha,
        });
    }
    Ok(())
}

/// Build `family` from `base`.
pub fn build_family(family: Family, base: &BaseData, tol: Tolerance) -> Result<BlockOperator> {
    match family {
        Family::Jg | Family::Fg => {
            let g = base.g()?;
            if g.kind() != FormKind::Symmetric {
                return Err(Error::FormKind("g must be symmetric"));
            }
            let sign = if family == Family::Jg {
                Sign::Minus
            } else {
                Sign::Plus
            };
            build_musical(g, sign)
        }
        Family::Jom | Family::Fom => {
            let w = base.omega()?;
            if w.kind() != FormKind::Skew {
                return Err(Error::FormKind("omega must be skew"));
            }
            let sign = if family == Family::Jom {
                Sign::Minus
            } else {
                Sign::Plus
            };
            build_musical(w, sign)
        }
        Family::JlamJ(lambda) => {
            let j = base.j()?;
            if square_sign(j, tol) != Some(Sign::Minus) {
                return Err(Error::NotComplex);
            }
            build_diagonal(j, lambda)
        }
        Family::FlamF(lambda) => {
            let f = base.j()?;
            if square_sign(f, tol) != Some(Sign::Plus) {
                return Err(Error::NotPolynomial);
            }
            build_diagonal(f, lambda)
        }
        Family::JJgFlat | Family::JJgSharp | Family::FFgFlat | Family::FFgSharp => {
            let data = base.ae(tol)?;
            require_alpha(
                &data,
                family.base_alpha().expect("triangular families fix α"),
            )?;
            let variant = match family {
                Family::JJgFlat | Family::FFgFlat => Variant::Flat,
                _ => Variant::Sharp,
            };
            build_triangular(&data, variant)
        }
        Family::FJg | Family::JFg => {
            let data = base.ae(tol)?;
            require_alpha(&data, family.base_alpha().expect("mixed families fix α"))?;
            build_mixed(&data)
        }
        Family::Jphi | Family::Fphi => {
            let data = base.ae(tol)?;
            let sign = if family == Family::Jphi {
                Sign::Minus
            } else {
                Sign::Plus
            };
            build_musical(&data.phi(), sign)
        }
    }
}
