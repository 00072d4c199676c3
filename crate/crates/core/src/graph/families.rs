use serde::{Deserialize, Serialize};

use super::{products::join, Graph, GraphError};

/// Named graph families.
///
/// Vertex numbering per family:
/// - `Cycle(n)`: `i ~ i+1 (mod n)`.
/// - `CompleteBipartite(a, b)`: parts `0..a` and `a..a+b`.
/// - `Wheel(n)`: hub `0`, rim `1..=n` in cycle order (the join `O_1 ∨ C_n`).
/// - `MobiusLadder(n)`: the cycle on `n` vertices plus chords `i ~ i + n/2`.
/// - `Gmn { m, n }`: vertex `v_{i,j}` (`1 <= i <= m`, `0 <= j < 2n`) is
///   `(i-1)*2n + j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Null { n: usize },
    Wheel { n: usize },
    MobiusLadder { n: usize },
    #[serde(rename = "g_mn")]
    Gmn { m: usize, n: usize },
}

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidSpec(msg.into())
}

pub fn generate(spec: FamilySpec) -> Result<Graph, GraphError> {
    match spec {
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(invalid(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        FamilySpec::Complete { n } => {
            if n < 1 {
                return Err(invalid("complete graph needs n >= 1"));
            }
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        FamilySpec::CompleteBipartite { a, b } => {
            if a < 1 || b < 1 {
                return Err(invalid(format!("complete bipartite needs a, b >= 1, got ({a}, {b})")));
            }
            Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        FamilySpec::Null { n } => {
            if n < 1 {
                return Err(invalid("null graph needs n >= 1"));
            }
            Ok(Graph::empty(n))
        }
        FamilySpec::Wheel { n } => {
            if n < 3 {
                return Err(invalid(format!("wheel needs n >= 3, got {n}")));
            }
            Ok(join(&Graph::empty(1), &generate(FamilySpec::Cycle { n })?))
        }
        FamilySpec::MobiusLadder { n } => {
            if n < 4 || n % 2 != 0 {
                return Err(invalid(format!("mobius ladder needs an even vertex count >= 4, got {n}")));
            }
            let rim = (0..n).map(|i| (i, (i + 1) % n));
            let rungs = (0..n / 2).map(|i| (i, i + n / 2));
            Graph::new(n, rim.chain(rungs))
        }
        FamilySpec::Gmn { m, n } => {
            if m < 2 || n < 2 {
                return Err(invalid(format!("G(m,n) needs m, n >= 2, got ({m}, {n})")));
            }
            Graph::new(2 * m * n, gmn_edges(m, n))
        }
    }
}

fn gmn_edges(m: usize, n: usize) -> Vec<(usize, usize)> {
    let width = 2 * n;
    // rows are 1-based, columns wrap at 2n
    let v = |i: usize, j: usize| (i - 1) * width + (j % width);
    let mut edges = Vec::with_capacity(4 * m * n);
    for j in 0..width {
        edges.push((v(1, j), v(1, j + 1)));
        for i in 1..m {
            edges.push((v(i, j), v(i + 1, j + 1)));
            edges.push((v(i + 1, j), v(i, j + 1)));
        }
        edges.push((v(m, j), v(m, j + 1)));
    }
    edges
}
