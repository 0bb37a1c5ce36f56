//! The `verify` command: seeded batches of registry checks.

use std::time::Instant;

use gentangent_core::Tolerance;
use rayon::prelude::*;
use serde::Serialize;

use crate::registry::{Proposition, Trial, REGISTRY};
use crate::CliError;

/// Dimensions swept when none is given.
pub const DEFAULT_DIMS: [usize; 4] = [1, 2, 3, 4];

/// Result of a batch for one proposition.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub id: &'static str,
    pub dims: Vec<usize>,
    pub trials: usize,
    pub failures: usize,
    pub max_residual: f64,
    /// Wall time in seconds.
    pub elapsed: f64,
    /// First failure message, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Seed of trial `t` in a batch seeded by `seed`.
pub fn trial_seed(seed: u64, t: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(t)
}

/// Run `trials` trials of `prop` at each of `dims`.
pub fn run(
    prop: &Proposition,
    dims: &[usize],
    trials: usize,
    seed: u64,
    tol: Tolerance,
) -> VerifyReport {
    let start = Instant::now();
    let cases: Vec<(usize, u64)> = dims
        .iter()
        .flat_map(|&n| (0..trials as u64).map(move |t| (n, t)))
        .collect();
    let outcomes: Vec<Result<f64, String>> = cases
        .into_par_iter()
        .map(|(n, t)| {
            let trial = Trial {
                n,
                seed: trial_seed(seed, t),
                tol,
            };
            match (prop.check)(&trial) {
                Ok(r) if r <= tol.rel() => Ok(r),
                Ok(r) => Err(format!("n = {n}, trial {t}: residual {r:.3e}")),
                Err(e) => Err(format!("n = {n}, trial {t}: {e}")),
            }
        })
        .collect();
    let max_residual = outcomes
        .iter()
        .filter_map(|o| o.as_ref().ok())
        .fold(0.0f64, |a, &b| a.max(b));
    let mut errors = outcomes.into_iter().filter_map(Result::err);
    let first_failure = errors.next();
    let failures = first_failure.iter().count() + errors.count();
    VerifyReport {
        id: prop.id,
        dims: dims.to_vec(),
        trials: trials * dims.len(),
        failures,
        max_residual,
        elapsed: start.elapsed().as_secs_f64(),
        first_failure,
    }
}

/// Reports for `target` (an id or `all`). An explicit dimension the single
/// requested proposition does not support is a usage error; `all` skips it.
pub fn verify(
    target: &str,
    dim: Option<usize>,
    trials: usize,
    seed: u64,
    tol: Tolerance,
) -> Result<Vec<VerifyReport>, CliError> {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be positive".into()));
    }
    if dim == Some(0) {
        return Err(CliError::Usage("--dim must be positive".into()));
    }
    let props: Vec<&Proposition> = if target == "all" {
        REGISTRY.iter().collect()
    } else {
        let prop = crate::registry::find(target).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown proposition {target:?}; known ids:\n  {}",
                crate::registry::ids().join("\n  ")
            ))
        })?;
        if let Some(n) = dim {
            if !(prop.supports)(n) {
                return Err(CliError::Usage(format!(
                    "{} is not defined at n = {n}",
                    prop.id
                )));
            }
        }
        vec![prop]
    };
    Ok(props
        .into_iter()
        .filter_map(|p| {
            let dims: Vec<usize> = match dim {
                Some(n) => vec![n],
                None => DEFAULT_DIMS.to_vec(),
            }
            .into_iter()
            .filter(|&n| (p.supports)(n))
            .collect();
            (!dims.is_empty()).then(|| run(p, &dims, trials, seed, tol))
        })
        .collect())
}

/// One line per report plus a header.
pub fn table(reports: &[VerifyReport]) -> String {
    let mut out = format!(
        "{:<24}{:<10}{:>8}{:>10}{:>14}{:>10}\n",
        "id", "dims", "trials", "failures", "max_residual", "secs"
    );
    for r in reports {
        let dims: Vec<String> = r.dims.iter().map(usize::to_string).collect();
        out.push_str(&format!(
            "{:<24}{:<10}{:>8}{:>10}{:>14.3e}{:>10.3}  {}\n",
            r.id,
            dims.join(","),
            r.trials,
            r.failures,
            r.max_residual,
            r.elapsed,
            if r.passed() { "PASS" } else { "FAIL" }
        ));
        if let Some(f) = &r.first_failure {
            out.push_str(&format!("    first failure: {f}\n"));
        }
    }
    out
}
