//! JSON shapes. Big integers are always decimal strings.

use std::str::FromStr;

use lcmd_core::{BigInt, BigUint, IntMatrix, SimpleGraph};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad integer {0:?}")]
    Integer(String),
    #[error(transparent)]
    Shape(#[from] lcmd_core::Error),
}

/// An entry may be written as a decimal string or a plain JSON integer on
/// input; output always uses strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum Entry {
    Text(String),
    Int(i64),
}

/// `{"rows": r, "cols": c, "entries": [["<decimal>", ...], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Entry>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &IntMatrix) -> Self {
        let entries = (0..m.rows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .map(|x| Entry::Text(x.to_string()))
                    .collect()
            })
            .collect();
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries,
        }
    }

    pub fn to_matrix(&self) -> Result<IntMatrix, FormatError> {
        if self.entries.len() != self.rows {
            return Err(lcmd_core::Error::Dimension(format!(
                "\"rows\" is {} but {} rows given",
                self.rows,
                self.entries.len()
            ))
            .into());
        }
        let mut flat = Vec::with_capacity(self.rows * self.cols);
        for row in &self.entries {
            if row.len() != self.cols {
                return Err(lcmd_core::Error::Dimension(format!(
                    "\"cols\" is {} but a row has {} entries",
                    self.cols,
                    row.len()
                ))
                .into());
            }
            for e in row {
                flat.push(match e {
                    Entry::Int(v) => BigInt::from(*v),
                    Entry::Text(s) => parse_bigint(s)?,
                });
            }
        }
        Ok(IntMatrix::new(self.rows, self.cols, flat)?)
    }
}

pub fn parse_bigint(s: &str) -> Result<BigInt, FormatError> {
    BigInt::from_str(s.trim()).map_err(|_| FormatError::Integer(s.to_string()))
}

pub fn parse_biguint(s: &str) -> Result<BigUint, FormatError> {
    BigUint::from_str(s.trim()).map_err(|_| FormatError::Integer(s.to_string()))
}

pub fn matrix_to_json(m: &IntMatrix) -> String {
    serde_json::to_string(&MatrixJson::from_matrix(m)).expect("serialisable")
}

pub fn matrix_from_json(text: &str) -> Result<IntMatrix, FormatError> {
    serde_json::from_str::<MatrixJson>(text)?.to_matrix()
}

/// `{"n": n, "edges": [[u, v], ...]}` with 1-based vertices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &SimpleGraph) -> Self {
        Self {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<SimpleGraph, FormatError> {
        Ok(SimpleGraph::new(
            self.n,
            self.edges.iter().map(|e| (e[0], e[1])),
        )?)
    }
}

pub fn graph_from_json(text: &str) -> Result<SimpleGraph, FormatError> {
    serde_json::from_str::<GraphJson>(text)?.to_graph()
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Components {
    #[serde(rename = "lcmdA_pow")]
    pub lcmd_a_pow: String,
    pub collection_lcm: String,
}

/// Output of `lcmd formula`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FormulaOutput {
    pub value: String,
    pub factored: String,
    pub components: Components,
}

/// Output of `lcmd brute` and `lcmd compute`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComputeOutput {
    pub value: String,
    pub factored: String,
    pub engine: String,
    pub timing_ms: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CompareRow {
    pub label: String,
    pub n: usize,
    pub formula: String,
    pub brute: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SelectorJson {
    /// 1-based product rows.
    pub rows: Vec<usize>,
    /// 1-based product columns.
    pub cols: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct WitnessOutput {
    pub selector: SelectorJson,
    pub predicted: String,
    pub computed: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip() {
        let m = IntMatrix::from_rows(&[[1i64, -2], [3, 40]]).unwrap();
        let text = matrix_to_json(&m);
        assert_eq!(
            text,
            r#"{"rows":2,"cols":2,"entries":[["1","-2"],["3","40"]]}"#
        );
        assert_eq!(matrix_from_json(&text).unwrap(), m);
    }

    #[test]
    fn huge_entries_survive() {
        let text = r#"{"rows":1,"cols":2,"entries":[["123456789012345678901234567890", 7]]}"#;
        let m = matrix_from_json(text).unwrap();
        assert_eq!(m.get(0, 0).to_string(), "123456789012345678901234567890");
        assert_eq!(m.get(0, 1), &BigInt::from(7));
    }

    #[test]
    fn shape_mismatch_rejected() {
        assert!(matrix_from_json(r#"{"rows":2,"cols":2,"entries":[["1","2"]]}"#).is_err());
        assert!(matrix_from_json(r#"{"rows":1,"cols":2,"entries":[["1"]]}"#).is_err());
        assert!(matrix_from_json(r#"{"rows":1,"cols":1,"entries":[["x"]]}"#).is_err());
    }

    #[test]
    fn empty_matrices() {
        let m = matrix_from_json(r#"{"rows":0,"cols":0,"entries":[]}"#).unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 0));
        let m = matrix_from_json(r#"{"rows":2,"cols":0,"entries":[[],[]]}"#).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 0));
    }

    #[test]
    fn graph_json() {
        let g = graph_from_json(r#"{"n":3,"edges":[[1,2],[2,3]]}"#).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (2, 3)]);
        assert!(graph_from_json(r#"{"n":3,"edges":[[1,4]]}"#).is_err());
        let back = serde_json::to_string(&GraphJson::from_graph(&g)).unwrap();
        assert_eq!(back, r#"{"n":3,"edges":[[1,2],[2,3]]}"#);
    }
}
