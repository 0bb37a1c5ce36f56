//! The `fixtures` command: seeded generator output as input documents.

use std::path::{Path, PathBuf};

use gentangent_core::generators::{random_ae_pair, random_symplectic, AeKind, Seed};
use gentangent_core::zoo::BaseData;

use crate::schema::{BaseJson, Document};
use crate::CliError;

/// One `(α, ε)`-pair per supported kind and dimension, plus a 2-form for
/// every even dimension. Each document records its seed.
pub fn fixture_documents(dims: &[usize], seed: u64) -> Result<Vec<(String, Document)>, CliError> {
    let mut out = Vec::new();
    for &n in dims {
        for kind in AeKind::ALL.into_iter().filter(|k| k.supports(n)) {
            let data = random_ae_pair(kind, n, Seed(seed))?;
            out.push((
                format!("{}-n{n}-seed{seed}.json", kind.as_str()),
                Document {
                    n,
                    base: Some(BaseJson::from_base(&BaseData::from_ae(&data), None)),
                    kind: Some(kind.as_str().to_string()),
                    seed: Some(seed),
                    ..Document::default()
                },
            ));
        }
        if n % 2 == 0 {
            let omega = random_symplectic(n, Seed(seed))?;
            let base = BaseData {
                omega: Some(omega),
                ..BaseData::default()
            };
            out.push((
                format!("symplectic-n{n}-seed{seed}.json"),
                Document {
                    n,
                    base: Some(BaseJson::from_base(&base, None)),
                    kind: Some("symplectic".to_string()),
                    seed: Some(seed),
                    ..Document::default()
                },
            ));
        }
    }
    Ok(out)
}

/// Write the fixtures into `dir`, returning the written paths.
pub fn write_fixtures(dir: &Path, dims: &[usize], seed: u64) -> Result<Vec<PathBuf>, CliError> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for (name, doc) in fixture_documents(dims, seed)? {
        let path = dir.join(name);
        let mut text = serde_json::to_string_pretty(&doc)?;
        text.push('\n');
        std::fs::write(&path, text)?;
        written.push(path);
    }
    Ok(written)
}
