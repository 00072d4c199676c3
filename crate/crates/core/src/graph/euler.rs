use serde::{Deserialize, Serialize};

use super::{EdgeId, Graph, GraphError, Vertex};

/// A closed walk `x_1 x_2 … x_q x_1` using every edge exactly once.
///
/// `edges[i]` joins `vertices[i]` and `vertices[(i + 1) % q]`; the return to
/// `x_1` is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerTour {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

impl EulerTour {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Replays the walk against `g`: consecutive incidence, closure, and
    /// every edge used exactly once.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let q = self.edges.len();
        if q != g.size() || self.vertices.len() != q || q == 0 {
            return false;
        }
        let mut used = vec![false; q];
        for i in 0..q {
            let e = self.edges[i];
            if e >= q || std::mem::replace(&mut used[e], true) {
                return false;
            }
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % q]);
            if g.edge(e) != (a.min(b), a.max(b)) {
                return false;
            }
        }
        true
    }
}

fn check_eulerian(g: &Graph) -> Result<(), GraphError> {
    if g.size() == 0 {
        return Err(GraphError::NotEulerian("graph has no edges".into()));
    }
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) % 2 == 1) {
        return Err(GraphError::NotEulerian(format!("vertex {v} has odd degree {}", g.degree(v))));
    }
    let nontrivial = g.components().into_iter().filter(|c| c.len() > 1).count();
    if nontrivial > 1 {
        return Err(GraphError::NotEulerian(format!("edges span {nontrivial} components")));
    }
    Ok(())
}

/// Deterministic Euler tour by Hierholzer's algorithm, always leaving a
/// vertex through its lowest-indexed unused edge.
///
/// With `start = Some((u, v))` the tour begins `x_1 = u, x_2 = v`; otherwise
/// it starts at the lowest-indexed non-isolated vertex.
pub fn euler_tour(g: &Graph, start: Option<(Vertex, Vertex)>) -> Result<EulerTour, GraphError> {
    check_eulerian(g)?;
    match start {
        Some((u, v)) => {
            let e = g
                .edge_index(u, v)
                .ok_or_else(|| GraphError::NotEulerian(format!("requested start edge {u}-{v} is not an edge")))?;
            Ok(hierholzer(g, u, Some((e, v))))
        }
        None => {
            let root = (0..g.order()).find(|&v| g.degree(v) > 0).expect("graph has an edge");
            Ok(hierholzer(g, root, None))
        }
    }
}

/// Euler tour with `x_1 = start`.
pub fn euler_tour_from(g: &Graph, start: Vertex) -> Result<EulerTour, GraphError> {
    check_eulerian(g)?;
    if start >= g.order() || g.degree(start) == 0 {
        return Err(GraphError::NotEulerian(format!("start vertex {start} has no edges")));
    }
    Ok(hierholzer(g, start, None))
}

fn hierholzer(g: &Graph, root: Vertex, first: Option<(EdgeId, Vertex)>) -> EulerTour {
    let q = g.size();
    let mut used = vec![false; q];
    let mut cursor = vec![0usize; g.order()];
    // (vertex, edge used to arrive)
    let mut stack: Vec<(Vertex, Option<EdgeId>)> = vec![(root, None)];
    if let Some((e, next)) = first {
        used[e] = true;
        stack.push((next, Some(e)));
    }
    let mut circuit = Vec::with_capacity(q + 1);
    while let Some(&(v, _)) = stack.last() {
        let inc = g.incident(v);
        while cursor[v] < inc.len() && used[inc[cursor[v]].1] {
            cursor[v] += 1;
        }
        if cursor[v] < inc.len() {
            let (w, e) = inc[cursor[v]];
            used[e] = true;
            stack.push((w, Some(e)));
        } else {
            circuit.push(stack.pop().expect("stack is non-empty"));
        }
    }
    circuit.reverse();
    // circuit = [(x1, None), (x2, e1), …, (x1, eq)]
    let vertices = circuit[..q].iter().map(|&(v, _)| v).collect();
    let edges = circuit[1..].iter().map(|&(_, e)| e.expect("non-root entries carry an edge")).collect();
    EulerTour { vertices, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn bowtie() -> Graph {
        // w = 0, u1 = 1, u2 = 2, v1 = 3, v2 = 4
        Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn cycle_tour_visits_each_vertex_once() {
        let g = generate(FamilySpec::Cycle { n: 4 }).unwrap();
        let t = euler_tour(&g, None).unwrap();
        assert!(t.is_valid_for(&g));
        let mut vs = t.vertices.clone();
        vs.sort_unstable();
        assert_eq!(vs, vec![0, 1, 2, 3]);
    }

    #[test]
    fn bowtie_tour_passes_hub_twice() {
        let g = bowtie();
        let t = euler_tour(&g, None).unwrap();
        assert!(t.is_valid_for(&g));
        assert_eq!(t.len(), 6);
        assert_eq!(t.vertices.iter().filter(|&&v| v == 0).count(), 2);
        // hand trace of lowest-edge Hierholzer from w
        assert_eq!(t.vertices, vec![0, 1, 3, 0, 2, 4]);
    }

    #[test]
    fn forced_first_edge() {
        let g = generate(FamilySpec::Gmn { m: 2, n: 2 }).unwrap();
        for &(u, v) in g.edges() {
            for (a, b) in [(u, v), (v, u)] {
                let t = euler_tour(&g, Some((a, b))).unwrap();
                assert!(t.is_valid_for(&g));
                assert_eq!((t.vertices[0], t.vertices[1]), (a, b));
            }
        }
    }

    #[test]
    fn not_eulerian() {
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(euler_tour(&path, None), Err(GraphError::NotEulerian(_))));
        let two = crate::graph::disjoint_copies(2, &generate(FamilySpec::Cycle { n: 3 }).unwrap());
        assert!(matches!(euler_tour(&two, None), Err(GraphError::NotEulerian(_))));
        assert!(matches!(euler_tour(&Graph::empty(2), None), Err(GraphError::NotEulerian(_))));
    }

    #[test]
    fn isolated_vertices_are_ignored() {
        let g = Graph::new(4, [(1, 2), (2, 3), (1, 3)]).unwrap();
        let t = euler_tour(&g, None).unwrap();
        assert_eq!(t.vertices[0], 1);
        assert!(t.is_valid_for(&g));
    }
}
