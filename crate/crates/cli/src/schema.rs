//! JSON input and output documents.
//!
//! ```json
//! {"n": 2,
//!  "operator": {"H": [[..]], "sigma": [[..]], "tau": [[..]], "K": [[..]]},
//!  "metric": {"gram": [[..]], "kind": "symmetric"},
//!  "family": "Jg",
//!  "base": {"g": [[..]], "J": [[..]], "omega": [[..]], "b": [[..]]}}
//! ```
//!
//! Matrices are row-major arrays of rows. Besides the core keys a document
//! may carry `operator2` (second operator of a triple), `metric.named`
//! (`natural` or `induced` instead of an explicit Gram matrix) and the
//! fixture metadata `kind` and `seed`. Unknown keys are ignored, so a
//! classification output can be fed back as input.

use gentangent_core::canonical::g0;
use gentangent_core::zoo::{build_family, designated_form, BaseData, DesignatedMetric, Family};
use gentangent_core::{
    BaseForm, BilinearForm, BlockOperator, FiberDim, FormKind, Matrix, Tolerance,
};
use serde::{Deserialize, Serialize};
use serde_json::error::Category;

use crate::CliError;

pub type Rows = Vec<Vec<f64>>;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator: Option<OperatorJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator2: Option<OperatorJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<MetricJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<BaseJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OperatorJson {
    #[serde(rename = "H")]
    pub h: Rows,
    pub sigma: Rows,
    pub tau: Rows,
    #[serde(rename = "K")]
    pub k: Rows,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct MetricJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub named: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct BaseJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Rows>,
    #[serde(default, rename = "J", skip_serializing_if = "Option::is_none")]
    pub j: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Rows>,
}

/// Parse a document, reporting syntax errors with line and column.
pub fn parse(text: &str) -> Result<Document, CliError> {
    serde_json::from_str(text).map_err(|e| {
        let what = match e.classify() {
            Category::Data => "invalid document",
            _ => "malformed JSON",
        };
        let full = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        let detail = full.strip_suffix(&suffix).unwrap_or(&full);
        CliError::Usage(format!(
            "{what} at line {} column {}: {detail}",
            e.line(),
            e.column()
        ))
    })
}

pub fn rows(m: &Matrix) -> Rows {
    m.row_iter().map(|r| r.iter().copied().collect()).collect()
}

/// An `rows × cols` matrix from row-major data.
pub fn matrix(name: &str, data: &Rows, nrows: usize, ncols: usize) -> Result<Matrix, CliError> {
    if data.len() != nrows || data.iter().any(|r| r.len() != ncols) {
        return Err(CliError::Usage(format!("{name} must be {nrows} × {ncols}")));
    }
    Ok(Matrix::from_fn(nrows, ncols, |r, c| data[r][c]))
}

impl OperatorJson {
    pub fn from_operator(op: &BlockOperator) -> Self {
        OperatorJson {
            h: rows(op.h()),
            sigma: rows(op.sigma()),
            tau: rows(op.tau()),
            k: rows(op.k()),
        }
    }

    pub fn to_operator(&self, n: usize) -> Result<BlockOperator, CliError> {
        let block = |name: &str, d: &Rows| matrix(name, d, n, n);
        BlockOperator::new(
            block("operator.H", &self.h)?,
            block("operator.sigma", &self.sigma)?,
            block("operator.tau", &self.tau)?,
            block("operator.K", &self.k)?,
        )
        .map_err(CliError::from)
    }
}

fn form_kind(name: Option<&str>) -> Result<FormKind, CliError> {
    match name.unwrap_or("symmetric") {
        "symmetric" => Ok(FormKind::Symmetric),
        "skew" => Ok(FormKind::Skew),
        "general" => Ok(FormKind::General),
        other => Err(CliError::Usage(format!(
            "metric.kind must be symmetric, skew or general, not {other:?}"
        ))),
    }
}

pub fn kind_name(kind: FormKind) -> &'static str {
    match kind {
        FormKind::Symmetric => "symmetric",
        FormKind::Skew => "skew",
        FormKind::General => "general",
    }
}

impl MetricJson {
    pub fn from_form(form: &BilinearForm) -> Self {
        MetricJson {
            gram: Some(rows(form.gram())),
            kind: Some(kind_name(form.kind()).to_string()),
            named: None,
        }
    }
}

impl BaseJson {
    pub fn from_base(base: &BaseData, b: Option<&Matrix>) -> Self {
        BaseJson {
            g: base.g.as_ref().map(|g| rows(g.gram())),
            j: base.j.as_ref().map(rows),
            omega: base.omega.as_ref().map(|w| rows(w.gram())),
            b: b.map(rows),
        }
    }

    pub fn to_base(&self, n: usize) -> Result<BaseData, CliError> {
        let square =
            |name: &str, d: &Option<Rows>| d.as_ref().map(|d| matrix(name, d, n, n)).transpose();
        let g = square("base.g", &self.g)?
            .map(|g| BaseForm::new(g, FormKind::Symmetric))
            .transpose()?;
        let omega = square("base.omega", &self.omega)?
            .map(|w| BaseForm::new(w, FormKind::Skew))
            .transpose()?;
        Ok(BaseData {
            g,
            j: square("base.J", &self.j)?,
            omega,
        })
    }
}

/// A document with every structure resolved to matrices.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub n: usize,
    pub operator: BlockOperator,
    pub operator2: Option<BlockOperator>,
    pub metric: Option<BilinearForm>,
}

pub fn parse_designated(name: &str) -> Result<DesignatedMetric, CliError> {
    match name {
        "natural" => Ok(DesignatedMetric::Natural),
        "induced" => Ok(DesignatedMetric::Induced),
        other => Err(CliError::Usage(format!(
            "metric.named must be natural or induced, not {other:?}"
        ))),
    }
}

impl Document {
    /// Explicit `operator` blocks take precedence over `family`.
    pub fn resolve(&self, tol: Tolerance) -> Result<Resolved, CliError> {
        let n = self.n;
        if n == 0 {
            return Err(CliError::Usage("n must be at least 1".into()));
        }
        let base = self.base.as_ref().map(|b| b.to_base(n)).transpose()?;
        let operator = match (&self.operator, &self.family) {
            (Some(op), _) => op.to_operator(n)?,
            (None, Some(family)) => {
                let family: Family = family.parse()?;
                let base = base
                    .as_ref()
                    .ok_or_else(|| CliError::Usage("family needs base data".into()))?;
                build_family(family, base, tol)?
            }
            (None, None) => {
                return Err(CliError::Usage(
                    "document needs an operator or a family".into(),
                ))
            }
        };
        let operator2 = self
            .operator2
            .as_ref()
            .map(|op| op.to_operator(n))
            .transpose()?;
        let metric = match &self.metric {
            None => None,
            Some(MetricJson {
                gram: Some(gram),
                kind,
                ..
            }) => {
                let kind = form_kind(kind.as_deref())?;
                let gram = matrix("metric.gram", gram, 2 * n, 2 * n)?;
                Some(BilinearForm::with_tolerance(gram, kind, tol)?)
            }
            Some(MetricJson {
                named: Some(name), ..
            }) => Some(match parse_designated(name)? {
                DesignatedMetric::Natural => g0(FiberDim::new(n)?),
                induced => designated_form(induced, &base.clone().unwrap_or_default())?,
            }),
            Some(_) => return Err(CliError::Usage("metric needs gram or named".into())),
        };
        Ok(Resolved {
            n,
            operator,
            operator2,
            metric,
        })
    }
}
