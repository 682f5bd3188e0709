//! Finite graphs and the classical Hoffman ratio bound.

use std::collections::BTreeSet;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count accepted by [`hoffman_finite`].
pub const MAX_VERTICES: usize = 2000;

/// Symmetric 0/1 adjacency matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    n: usize,
    entries: Vec<u8>,
}

impl AdjacencyMatrix {
    /// Validates a dense matrix given row by row.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGraph(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v > 1 {
                    return Err(Error::InvalidGraph(format!("entry ({i}, {j}) is {v}, not 0/1")));
                }
                if i == j && v != 0 {
                    return Err(Error::InvalidGraph(format!("self-loop at vertex {i}")));
                }
            }
            entries.extend_from_slice(row);
        }
        for i in 0..n {
            for j in 0..i {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(Error::InvalidGraph(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(AdjacencyMatrix { n, entries })
    }

    /// Builds an `n`-vertex graph from undirected edges. Duplicate edges
    /// collapse; self-loops and out-of-range ids are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut entries = vec![0u8; n * n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            entries[u * n + v] = 1;
            entries[v * n + u] = 1;
        }
        Ok(AdjacencyMatrix { n, entries })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("valid by construction")
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|u| (u, (u + 1) % n))).expect("valid by construction")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        Self::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid by construction")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.entries[u * self.n + v] == 1
    }

    pub fn edge_count(&self) -> usize {
        self.entries.iter().map(|&v| v as usize).sum::<usize>() / 2
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|row| row.iter().map(|&v| v as usize).sum())
            .collect()
    }

    /// The common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let degrees = self.degrees();
        let first = *degrees.first()?;
        degrees.iter().all(|&d| d == first).then_some(first)
    }

    fn to_dense(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| self.entries[i * self.n + j] as f64)
    }
}

/// Parses the plain-text edge-list format: one `u v` pair of 0-based ids
/// per line, `#` starts a comment, and an optional `n <count>` header fixes
/// the vertex count (otherwise it is `1 + max id`).
impl FromStr for AdjacencyMatrix {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut declared: Option<usize> = None;
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut max_id: Option<usize> = None;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse_id = |s: &str| -> Result<usize> {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("expected a non-negative integer, got {s:?}"),
                })
            };
            match fields.as_slice() {
                ["n", count] => {
                    if declared.is_some() || !edges.is_empty() {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "the `n <count>` header must come first and only once".into(),
                        });
                    }
                    declared = Some(parse_id(count)?);
                }
                [u, v] => {
                    let (u, v) = (parse_id(u)?, parse_id(v)?);
                    if u == v {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("self-loop at vertex {u}"),
                        });
                    }
                    if let Some(n) = declared {
                        if u >= n || v >= n {
                            return Err(Error::Parse {
                                line: line_no,
                                message: format!("vertex id exceeds declared count {n}"),
                            });
                        }
                    }
                    max_id = max_id.max(Some(u.max(v)));
                    edges.insert((u.min(v), u.max(v)));
                }
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("expected `u v` or `n <count>`, got {line:?}"),
                    })
                }
            }
        }

        let n = declared.unwrap_or_else(|| max_id.map_or(0, |m| m + 1));
        if n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "{n} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        AdjacencyMatrix::from_edges(n, edges)
    }
}

/// Extreme adjacency eigenvalues and the Hoffman bounds they imply.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSpectrumResult {
    pub n: usize,
    pub edges: usize,
    pub regular: bool,
    #[serde(rename = "M")]
    pub max_eigenvalue: f64,
    #[serde(rename = "m")]
    pub min_eigenvalue: f64,
    /// `−m / (M − m)`. An upper bound on the independence ratio when the
    /// graph is regular.
    pub alpha_bound: f64,
    /// `(M − m) / (−m)`, a lower bound on the chromatic number.
    pub chi_bound: f64,
}

/// Dense symmetric eigensolve followed by the ratio bounds
/// `α(G) <= −m/(M − m)` and `χ(G) >= (M − m)/(−m)`.
///
/// With `regular` set, graphs whose degrees differ are rejected.
pub fn hoffman_finite(adjacency: &AdjacencyMatrix, regular: bool) -> Result<GraphSpectrumResult> {
    let n = adjacency.vertex_count();
    if n > MAX_VERTICES {
        return Err(Error::InvalidGraph(format!(
            "{n} vertices exceeds the supported maximum of {MAX_VERTICES}"
        )));
    }
    let edges = adjacency.edge_count();
    if edges == 0 {
        return Err(Error::Edgeless);
    }
    let is_regular = adjacency.regular_degree().is_some();
    if regular && !is_regular {
        return Err(Error::InvalidGraph(
            "graph was declared regular but its degrees differ".into(),
        ));
    }

    let eigenvalues = adjacency.to_dense().symmetric_eigenvalues();
    let max = eigenvalues.max();
    let min = eigenvalues.min();

    Ok(GraphSpectrumResult {
        n,
        edges,
        regular: is_regular,
        max_eigenvalue: max,
        min_eigenvalue: min,
        alpha_bound: -min / (max - min),
        chi_bound: (max - min) / -min,
    })
}
