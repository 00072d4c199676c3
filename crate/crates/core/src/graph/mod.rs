//! Simple undirected graphs with a canonical edge order.
//!
//! Every edge is stored as `(low, high)` and the edge list is sorted, so an
//! edge index is a stable name for an edge: labelings, tours and matrices all
//! refer to edges by their position in [`Graph::edges`].

mod coloring;
mod euler;
mod families;
mod io;
mod products;

pub use coloring::{
    bipartition, chromatic_number, chromatic_number_with_budget, odd_closed_walk,
    DEFAULT_COLORING_BUDGET,
};
pub use euler::{euler_tour, euler_tour_from, EulerTour};
pub use families::{generate, FamilySpec};
pub use io::GraphJson;
pub use products::{cartesian_product, disjoint_copies, join, lex_product};

use thiserror::Error;

/// Vertex index, 0-based.
pub type Vertex = usize;
/// Position of an edge in the canonical edge list.
pub type EdgeId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    ParallelEdge(Vertex, Vertex),
    #[error("edge {0}-{1} references a vertex outside 0..{2}")]
    VertexOutOfRange(Vertex, Vertex, usize),
    #[error("invalid family parameters: {0}")]
    InvalidSpec(String),
    #[error("graph is not eulerian: {0}")]
    NotEulerian(String),
    #[error("edge {0} does not exist")]
    NoSuchEdge(EdgeId),
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("malformed graph input: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    p: usize,
    edges: Vec<(Vertex, Vertex)>,
    // (neighbor, edge id), sorted by edge id
    adjacency: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    /// Builds a graph from an arbitrary list of vertex pairs.
    ///
    /// Pairs may be given in either orientation and in any order; they are
    /// normalized and sorted. Loops and repeated pairs are rejected.
    pub fn new(p: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= p || v >= p {
                return Err(GraphError::VertexOutOfRange(u, v, p));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::ParallelEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); p];
        for (id, &(u, v)) in list.iter().enumerate() {
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        Ok(Graph { p, edges: list, adjacency })
    }

    /// The graph with `p` vertices and no edges.
    pub fn empty(p: usize) -> Self {
        Graph { p, edges: Vec::new(), adjacency: vec![Vec::new(); p] }
    }

    pub fn order(&self) -> usize {
        self.p
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// Incident `(neighbor, edge)` pairs of `v`, ordered by edge id.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Common degree if the graph is regular. The graph on zero vertices is
    /// reported as 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degrees = self.adjacency.iter().map(Vec::len);
        let first = degrees.next().unwrap_or(0);
        degrees.all(|d| d == first).then_some(first)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.p];
        let mut out = Vec::new();
        for root in 0..self.p {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![root];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.p <= 1 || self.components().len() == 1
    }

    /// Removes one edge; remaining edges keep their relative order, so edge
    /// ids above `e` shift down by one.
    pub fn without_edge(&self, e: EdgeId) -> Result<Graph, GraphError> {
        if e >= self.size() {
            return Err(GraphError::NoSuchEdge(e));
        }
        let rest = self.edges.iter().enumerate().filter(|&(i, _)| i != e).map(|(_, &uv)| uv);
        Graph::new(self.p, rest)
    }
}
