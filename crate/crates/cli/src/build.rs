//! The `build` command: a named family or triple as an input document.

use gentangent_core::generators::{AeKind, Sampler, Seed};
use gentangent_core::triples::{canonical_triple, TripleName};
use gentangent_core::zoo::{build_family, BaseData, DesignatedMetric, Family};
use gentangent_core::{Sign, Tolerance};

use crate::schema::{BaseJson, Document, MetricJson, OperatorJson};
use crate::CliError;

/// What `build` can produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Family(Family),
    Triple(TripleName),
}

impl Target {
    pub fn parse(name: &str) -> Result<Self, CliError> {
        if let Ok(f) = name.parse() {
            return Ok(Target::Family(f));
        }
        if let Ok(t) = name.parse() {
            return Ok(Target::Triple(t));
        }
        let families: Vec<_> = Family::ALL.iter().map(|f| f.id()).collect();
        let triples: Vec<_> = TripleName::ALL.iter().map(|t| t.id()).collect();
        Err(CliError::Usage(format!(
            "unknown structure {name:?}; families: {}; triples: {}",
            families.join(", "),
            triples.join(", ")
        )))
    }

    /// `α` the base data must have.
    fn base_alpha(self) -> Option<Sign> {
        match self {
            Target::Family(f) => f.base_alpha(),
            Target::Triple(t) => Some(t.alpha()),
        }
    }

    fn needs_omega(self) -> bool {
        matches!(self, Target::Family(Family::Jom | Family::Fom))
    }

    /// Generator kind used when none is requested.
    pub fn default_kind(self) -> AeKind {
        match self.base_alpha() {
            Some(Sign::Plus) => AeKind::ParaHermitian,
            _ => AeKind::Hermitian,
        }
    }
}

/// Seeded base data of `kind` on `ℝⁿ`, with a 2-form when `target` needs one.
pub fn seeded_base(
    target: Target,
    kind: AeKind,
    n: usize,
    seed: u64,
) -> Result<BaseData, CliError> {
    let mut sampler = Sampler::new(Seed(seed));
    let data = sampler.ae_pair(kind, n)?;
    let mut base = BaseData::from_ae(&data);
    if target.needs_omega() {
        base.omega = Some(sampler.symplectic(n)?);
    }
    Ok(base)
}

/// The document for `target` on `base`.
pub fn build(
    target: Target,
    n: usize,
    base: &BaseData,
    metric: Option<DesignatedMetric>,
    tol: Tolerance,
) -> Result<Document, CliError> {
    let (operator, operator2, family) = match target {
        Target::Family(f) => (build_family(f, base, tol)?, None, Some(f.id().to_string())),
        Target::Triple(t) => {
            let data = base.ae(tol)?;
            let (f, j, _) = canonical_triple(t, &data)?;
            (f, Some(j), None)
        }
    };
    let metric = metric.map(|m| MetricJson {
        named: Some(
            match m {
                DesignatedMetric::Natural => "natural",
                DesignatedMetric::Induced => "induced",
            }
            .to_string(),
        ),
        ..MetricJson::default()
    });
    Ok(Document {
        n,
        operator: Some(OperatorJson::from_operator(&operator)),
        operator2: operator2.as_ref().map(OperatorJson::from_operator),
        metric,
        family,
        base: Some(BaseJson::from_base(base, None)),
        ..Document::default()
    })
}
