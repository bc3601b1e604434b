//! Resolving `--matrix` and `--kron` arguments.

use std::fs;
use std::path::Path;

use lcmd_core::{complete_graph, IntMatrix, SimpleGraph};

use crate::json::{self, FormatError};
use crate::named;

#[derive(Debug, thiserror::Error)]
pub enum SourceError {
    #[error("cannot read {path}: {err}")]
    Io { path: String, err: std::io::Error },
    #[error("{0}")]
    Format(#[from] FormatError),
    #[error("unknown graph {0:?} (expected Kn or a JSON file)")]
    Graph(String),
}

/// A built-in name (`MB`, `MQ`, `MQT`, `MN`), an inline array such as
/// `[[1,2],[3,4]]`, inline matrix JSON, or a path to a matrix JSON file.
pub fn load_matrix(spec: &str) -> Result<IntMatrix, SourceError> {
    if let Some(m) = named::lookup(spec) {
        return Ok(m);
    }
    let trimmed = spec.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        return parse_matrix_text(trimmed);
    }
    let text = read(spec)?;
    parse_matrix_text(&text)
}

fn parse_matrix_text(text: &str) -> Result<IntMatrix, SourceError> {
    if text.trim_start().starts_with('[') {
        let rows: Vec<Vec<serde_json::Value>> =
            serde_json::from_str(text).map_err(FormatError::from)?;
        let mut out = Vec::with_capacity(rows.len());
        for row in rows {
            let mut r = Vec::with_capacity(row.len());
            for v in row {
                let s = match v {
                    serde_json::Value::String(s) => s,
                    other => other.to_string(),
                };
                r.push(json::parse_bigint(&s)?);
            }
            out.push(r);
        }
        let cols = out.first().map_or(0, Vec::len);
        let rows = out.len();
        let flat: Vec<_> = out.into_iter().flatten().collect();
        if flat.len() != rows * cols {
            return Err(
                FormatError::from(lcmd_core::Error::Dimension("ragged rows".into())).into(),
            );
        }
        return Ok(IntMatrix::new(rows, cols, flat).map_err(FormatError::from)?);
    }
    Ok(json::matrix_from_json(text)?)
}

/// `Kn` (e.g. `K4`) or a path to graph JSON.
pub fn load_graph(spec: &str) -> Result<SimpleGraph, SourceError> {
    if let Some(n) = spec.strip_prefix('K').and_then(|s| s.parse::<usize>().ok()) {
        return complete_graph(n).map_err(|e| FormatError::from(e).into());
    }
    if !Path::new(spec).exists() {
        return Err(SourceError::Graph(spec.to_string()));
    }
    let text = read(spec)?;
    Ok(json::graph_from_json(&text)?)
}

fn read(path: &str) -> Result<String, SourceError> {
    fs::read_to_string(path).map_err(|err| SourceError::Io {
        path: path.to_string(),
        err,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_and_inline() {
        assert_eq!(load_matrix("MB").unwrap(), named::bishop());
        assert_eq!(load_matrix("[[1,1],[1,-1]]").unwrap(), named::bishop());
        assert_eq!(
            load_matrix(r#"[["1","1"],["1","-1"]]"#).unwrap(),
            named::bishop()
        );
        assert!(load_matrix("[[1,2],[3]]").is_err());
        assert!(load_matrix("/no/such/file.json").is_err());
    }

    #[test]
    fn graphs() {
        assert_eq!(load_graph("K4").unwrap().edge_count(), 6);
        assert!(load_graph("K0").is_err());
        assert!(load_graph("P4").is_err());
    }
}
