//! The `classify` command.

use gentangent_core::metrics::{
    metric_from_endomorphism, symplectic_from_endomorphism, MetricInducerReport,
};
use gentangent_core::triples::classify_triple;
use gentangent_core::zoo::{classify_pair, fundamental_tensor_with};
use gentangent_core::{polynomial_class, PolynomialClass, Sign, Tolerance};
use serde::Serialize;

use crate::schema::{Document, MetricJson, OperatorJson};
use crate::CliError;

/// Classification of an operator with a metric.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairOutput {
    pub class: &'static str,
    pub alpha: Option<i32>,
    pub epsilon: Option<i32>,
    pub signature: Option<[usize; 2]>,
    /// Kind of the fundamental tensor; `null` for incompatible pairs.
    pub tensor: Option<&'static str>,
}

/// Classification of a pair of operators.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TripleOutput {
    pub triple: &'static str,
    pub lambda: Option<i32>,
    /// `K = F·J`.
    pub product: Option<OperatorJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InducerJson {
    pub valid: bool,
    pub violations: Vec<&'static str>,
}

impl From<&MetricInducerReport> for InducerJson {
    fn from(r: &MetricInducerReport) -> Self {
        InducerJson {
            valid: r.valid(),
            violations: r.violations().iter().map(|v| v.as_str()).collect(),
        }
    }
}

/// Analysis of a single operator.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InducerOutput {
    pub polynomial: String,
    pub metric_inducer: InducerJson,
    pub symplectic_inducer: InducerJson,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Outcome {
    Pair(PairOutput),
    Triple(TripleOutput),
    Inducer(InducerOutput),
}

/// An outcome followed by the resolved input, so the output is itself a
/// valid input document.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classification {
    #[serde(flatten)]
    pub outcome: Outcome,
    #[serde(flatten)]
    pub input: Document,
}

pub fn polynomial_name(p: PolynomialClass) -> String {
    match p {
        PolynomialClass::AlmostComplex => "AlmostComplex".into(),
        PolynomialClass::AlmostProduct { plus, minus } => format!("AlmostProduct({plus},{minus})"),
        PolynomialClass::Neither => "Neither".into(),
    }
}

fn sign(s: Option<Sign>) -> Option<i32> {
    s.map(Sign::as_i32)
}

pub fn classify(doc: &Document, tol: Tolerance) -> Result<Classification, CliError> {
    let resolved = doc.resolve(tol)?;
    let op = &resolved.operator;
    let outcome = match (&resolved.operator2, &resolved.metric) {
        (Some(op2), _) => {
            let r = classify_triple(op, op2, tol);
            Outcome::Triple(TripleOutput {
                triple: r.kind.as_str(),
                lambda: sign(r.lambda),
                product: r.k.as_ref().map(OperatorJson::from_operator),
            })
        }
        (None, Some(metric)) => {
            let c = classify_pair(op, metric, tol);
            let tensor = fundamental_tensor_with(op, metric, tol)
                .ok()
                .map(|t| t.kind.as_str());
            Outcome::Pair(PairOutput {
                class: c.name.as_str(),
                alpha: sign(c.alpha),
                epsilon: sign(c.epsilon),
                signature: c.signature.map(|(p, q)| [p, q]),
                tensor,
            })
        }
        (None, None) => {
            let (_, metric) = metric_from_endomorphism(op, tol);
            let (_, symplectic) = symplectic_from_endomorphism(op, tol);
            Outcome::Inducer(InducerOutput {
                polynomial: polynomial_name(polynomial_class(op, tol)),
                metric_inducer: (&metric).into(),
                symplectic_inducer: (&symplectic).into(),
            })
        }
    };
    let input = Document {
        operator: Some(OperatorJson::from_operator(op)),
        operator2: resolved.operator2.as_ref().map(OperatorJson::from_operator),
        metric: resolved.metric.as_ref().map(MetricJson::from_form),
        ..doc.clone()
    };
    Ok(Classification { outcome, input })
}

fn or_dash<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

impl Outcome {
    /// `key  value` lines.
    pub fn table(&self) -> String {
        let rows: Vec<(&str, String)> = match self {
            Outcome::Pair(p) => vec![
                ("class", p.class.to_string()),
                ("alpha", or_dash(p.alpha)),
                ("epsilon", or_dash(p.epsilon)),
                (
                    "signature",
                    or_dash(p.signature.map(|[a, b]| format!("({a},{b})"))),
                ),
                ("tensor", or_dash(p.tensor)),
            ],
            Outcome::Triple(t) => vec![
                ("triple", t.triple.to_string()),
                ("lambda", or_dash(t.lambda)),
            ],
            Outcome::Inducer(i) => {
                let report = |r: &InducerJson| {
                    if r.valid {
                        "valid".to_string()
                    } else {
                        format!("invalid ({})", r.violations.join(", "))
                    }
                };
                vec![
                    ("polynomial", i.polynomial.clone()),
                    ("metric", report(&i.metric_inducer)),
                    ("symplectic", report(&i.symplectic_inducer)),
                ]
            }
        };
        rows.iter().map(|(k, v)| format!("{k:<12}{v}\n")).collect()
    }
}
