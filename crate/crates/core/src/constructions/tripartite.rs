//! Hub-based tripartite graphs.
//!
//! The instance is a hub `w` plus two independent sets `V2`, `V3` (each of
//! size at least two). Every `V2` vertex has degree `2m`, every `V3` vertex
//! degree `2n`, and the hub has either an even number of neighbors in both
//! parts (`2a`, `2b` with `a, b >= 1`) or an odd number in both (`2a+1`,
//! `2b+1`). An Euler tour from the hub splits into closed trails at the hub;
//! after reordering and orienting those trails, `V2` vertices sit only at
//! even tour positions and `V3` vertices only at odd ones, so the cycle
//! labeling along the tour induces exactly three colors.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{label_along_tour, ConstructionError};
use crate::graph::{bipartition, euler_tour, euler_tour_from, EdgeId, EulerTour, Graph, Vertex};
use crate::labeling::EdgeLabeling;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TripartiteError {
    #[error("hub {0} is not a vertex of the graph")]
    NoSuchHub(Vertex),
    #[error("parts do not partition the vertex set: {0}")]
    NotAPartition(String),
    #[error("part {part} has {size} vertices, needs at least 2")]
    PartTooSmall { part: &'static str, size: usize },
    #[error("edge {0}-{1} lies inside part {2}")]
    PartNotIndependent(Vertex, Vertex, &'static str),
    #[error("vertex {vertex} in {part} has degree {degree}, expected {expected}")]
    UnevenDegree { part: &'static str, vertex: Vertex, degree: usize, expected: usize },
    #[error("{part} degrees must be even and positive, found {degree}")]
    OddPartDegree { part: &'static str, degree: usize },
    #[error("hub has {to_v2} neighbors in V2 and {to_v3} in V3; need both even and >= 2, or both odd")]
    HubNeighborCounts { to_v2: usize, to_v3: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is bipartite, so it has chromatic number 2")]
    Bipartite,
    #[error("edge count {q} breaks the size identity: {detail}")]
    SizeIdentity { q: usize, detail: String },
    #[error("tour does not start at the hub")]
    TourNotAtHub,
    #[error("trail classification is inconsistent: {0}")]
    Classification(String),
    #[error("no Euler tour from the hub has a hub-mixing trail")]
    NoMixedTrail,
}

/// The user-supplied part assignment: `{"w": 0, "V2": [...], "V3": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripartiteParts {
    pub w: Vertex,
    #[serde(rename = "V2")]
    pub v2: Vec<Vertex>,
    #[serde(rename = "V3")]
    pub v3: Vec<Vertex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    /// Hub has `2a` neighbors in `V2` and `2b` in `V3`.
    Even,
    /// Hub has `2a + 1` neighbors in `V2` and `2b + 1` in `V3`.
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Hub,
    V2,
    V3,
}

/// A validated instance with its derived parameters.
#[derive(Debug, Clone)]
pub struct TripartiteStructure {
    graph: Graph,
    parts: TripartiteParts,
    side: Vec<Side>,
    pub a: u64,
    pub b: u64,
    /// Half the degree of each `V2` vertex.
    pub m: u64,
    /// Half the degree of each `V3` vertex.
    pub n: u64,
    pub parity: Parity,
}

impl TripartiteStructure {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn parts(&self) -> &TripartiteParts {
        &self.parts
    }

    pub fn hub(&self) -> Vertex {
        self.parts.w
    }

    pub fn q(&self) -> u64 {
        self.graph.size() as u64
    }

    /// `|V2|`.
    pub fn x(&self) -> u64 {
        self.parts.v2.len() as u64
    }

    /// `|V3|`.
    pub fn y(&self) -> u64 {
        self.parts.v3.len() as u64
    }

    pub fn in_v2(&self, v: Vertex) -> bool {
        self.side[v] == Side::V2
    }

    pub fn in_v3(&self, v: Vertex) -> bool {
        self.side[v] == Side::V3
    }

    /// Colors of the tour labeling: `(V2, V3, hub)`.
    pub fn expected_colors(&self) -> (u64, u64, u64) {
        let (q, a, b, m, n, y) = (self.q(), self.a, self.b, self.m, self.n, self.y());
        let hub = match self.parity {
            Parity::Even => (a + b) * (q + 1) + n * y,
            Parity::Odd => (a + b + 1) * (q + 1) + n * y,
        };
        (m * (q + 1), n * q, hub)
    }
}

pub fn validate_tripartite(g: &Graph, parts: &TripartiteParts) -> Result<TripartiteStructure, TripartiteError> {
    let p = g.order();
    if parts.w >= p {
        return Err(TripartiteError::NoSuchHub(parts.w));
    }
    let mut side = vec![None; p];
    side[parts.w] = Some(Side::Hub);
    for (list, s, name) in [(&parts.v2, Side::V2, "V2"), (&parts.v3, Side::V3, "V3")] {
        for &v in list {
            if v >= p {
                return Err(TripartiteError::NotAPartition(format!("{name} names vertex {v} outside 0..{p}")));
            }
            if side[v].replace(s).is_some() {
                return Err(TripartiteError::NotAPartition(format!("vertex {v} is listed twice")));
            }
        }
    }
    if let Some(v) = side.iter().position(Option::is_none) {
        return Err(TripartiteError::NotAPartition(format!("vertex {v} is in no part")));
    }
    let side: Vec<Side> = side.into_iter().map(|s| s.expect("all assigned")).collect();
    for (part, size) in [("V2", parts.v2.len()), ("V3", parts.v3.len())] {
        if size < 2 {
            return Err(TripartiteError::PartTooSmall { part, size });
        }
    }
    for &(u, v) in g.edges() {
        match (side[u], side[v]) {
            (Side::V2, Side::V2) => return Err(TripartiteError::PartNotIndependent(u, v, "V2")),
            (Side::V3, Side::V3) => return Err(TripartiteError::PartNotIndependent(u, v, "V3")),
            _ => {}
        }
    }
    let half_degree = |list: &[Vertex], part: &'static str| -> Result<u64, TripartiteError> {
        let expected = g.degree(list[0]);
        if let Some(&v) = list.iter().find(|&&v| g.degree(v) != expected) {
            return Err(TripartiteError::UnevenDegree { part, vertex: v, degree: g.degree(v), expected });
        }
        if expected == 0 || expected % 2 == 1 {
            return Err(TripartiteError::OddPartDegree { part, degree: expected });
        }
        Ok(expected as u64 / 2)
    };
    let m = half_degree(&parts.v2, "V2")?;
    let n = half_degree(&parts.v3, "V3")?;
    let to_v2 = g.neighbors(parts.w).filter(|&v| side[v] == Side::V2).count();
    let to_v3 = g.degree(parts.w) - to_v2;
    let parity = match (to_v2 % 2, to_v3 % 2) {
        (0, 0) if to_v2 >= 2 && to_v3 >= 2 => Parity::Even,
        (1, 1) => Parity::Odd,
        _ => return Err(TripartiteError::HubNeighborCounts { to_v2, to_v3 }),
    };
    if !g.is_connected() {
        return Err(TripartiteError::Disconnected);
    }
    if bipartition(g).is_some() {
        return Err(TripartiteError::Bipartite);
    }
    let (a, b) = (to_v2 as u64 / 2, to_v3 as u64 / 2);
    let (q, x, y) = (g.size() as u64, parts.v2.len() as u64, parts.v3.len() as u64);
    let extra = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    if q != 2 * m * x + 2 * b + extra || q != 2 * n * y + 2 * a + extra {
        return Err(TripartiteError::SizeIdentity {
            q: g.size(),
            detail: format!("2mx+2b = {}, 2ny+2a = {} (+{extra})", 2 * m * x + 2 * b, 2 * n * y + 2 * a),
        });
    }
    Ok(TripartiteStructure { graph: g.clone(), parts: parts.clone(), side, a, b, m, n, parity })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TrailKind {
    /// Both hub neighbors in `V2`.
    R,
    /// Both hub neighbors in `V3`.
    S,
    /// One hub neighbor in each part.
    T,
}

/// A closed trail `w … w`; `edges[i]` joins `vertices[i]` and `vertices[i+1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trail {
    pub kind: TrailKind,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

impl Trail {
    fn second(&self) -> Vertex {
        self.vertices[1]
    }

    fn second_last(&self) -> Vertex {
        self.vertices[self.vertices.len() - 2]
    }

    fn reverse(&mut self) {
        self.vertices.reverse();
        self.edges.reverse();
    }
}

/// Hub-anchored trails in arranged order, with the counts `α`, `β`, `γ` of
/// R-, S- and T-trails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrailDecomposition {
    pub hub: Vertex,
    pub trails: Vec<Trail>,
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
}

impl TrailDecomposition {
    /// The rearranged Euler tour, starting at the hub.
    pub fn tour(&self) -> EulerTour {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for t in &self.trails {
            vertices.extend_from_slice(&t.vertices[..t.vertices.len() - 1]);
            edges.extend_from_slice(&t.edges);
        }
        EulerTour { vertices, edges }
    }

    /// Tour positions (1-based) where the neighbors of a hub visit lie in
    /// different parts. The first hub visit, which closes the tour, is
    /// checked only when `include_start` is set.
    pub fn hub_condition_failures(&self, s: &TripartiteStructure, include_start: bool) -> Vec<usize> {
        let tour = self.tour();
        let q = tour.len();
        let first = if include_start { 0 } else { 1 };
        (first..q)
            .filter(|&i| tour.vertices[i] == self.hub)
            .filter(|&i| {
                let (before, after) = (tour.vertices[(i + q - 1) % q], tour.vertices[(i + 1) % q]);
                s.in_v2(before) != s.in_v2(after)
            })
            .map(|i| i + 1)
            .collect()
    }

    /// `V2` vertices at even positions and `V3` vertices at odd positions.
    pub fn position_law_holds(&self, s: &TripartiteStructure) -> bool {
        self.tour().vertices.iter().enumerate().all(|(i, &v)| {
            let pos = i + 1;
            (!s.in_v2(v) || pos % 2 == 0) && (!s.in_v3(v) || pos % 2 == 1)
        })
    }
}

/// Splits a tour that starts at the hub into hub-to-hub trails, orients the
/// T-trails (odd-numbered ones leave the hub into `V2` and return from `V3`,
/// even-numbered ones the other way round) and arranges them as
/// `R… T_1…T_{γ-1} S… T_γ` (even parity) or `R… T_1…T_γ S…` (odd parity).
pub fn trail_decomposition(tour: &EulerTour, s: &TripartiteStructure) -> Result<TrailDecomposition, TripartiteError> {
    let hub = s.hub();
    if tour.vertices.first() != Some(&hub) {
        return Err(TripartiteError::TourNotAtHub);
    }
    let q = tour.len();
    let mut stops: Vec<usize> = (0..q).filter(|&i| tour.vertices[i] == hub).collect();
    stops.push(q);
    let (mut rs, mut ss, mut ts) = (Vec::new(), Vec::new(), Vec::new());
    for w in stops.windows(2) {
        let (from, to) = (w[0], w[1]);
        let mut vertices = tour.vertices[from..to].to_vec();
        vertices.push(hub);
        let edges = tour.edges[from..to].to_vec();
        if vertices.len() < 4 {
            return Err(TripartiteError::Classification(format!("trail at position {} is too short", from + 1)));
        }
        let (first, last) = (vertices[1], vertices[vertices.len() - 2]);
        let kind = match (s.in_v2(first), s.in_v2(last)) {
            (true, true) => TrailKind::R,
            (false, false) => TrailKind::S,
            _ => TrailKind::T,
        };
        let trail = Trail { kind, vertices, edges };
        match kind {
            TrailKind::R => rs.push(trail),
            TrailKind::S => ss.push(trail),
            TrailKind::T => ts.push(trail),
        }
    }
    let (alpha, beta, gamma) = (rs.len(), ss.len(), ts.len());
    let to_v2 = s.graph().neighbors(hub).filter(|&v| s.in_v2(v)).count();
    let to_v3 = s.graph().degree(hub) - to_v2;
    if 2 * alpha + gamma != to_v2 || 2 * beta + gamma != to_v3 {
        return Err(TripartiteError::Classification(format!(
            "α={alpha}, β={beta}, γ={gamma} against hub degrees {to_v2}/{to_v3}"
        )));
    }
    if gamma == 0 {
        return Err(TripartiteError::NoMixedTrail);
    }
    for (k, t) in ts.iter_mut().enumerate() {
        let wants_v2_first = k % 2 == 0;
        if s.in_v2(t.second()) != wants_v2_first {
            t.reverse();
        }
        debug_assert_eq!(s.in_v2(t.second_last()), !wants_v2_first);
    }
    let mut trails = rs;
    match s.parity {
        Parity::Even => {
            let last = ts.pop().expect("gamma > 0");
            trails.extend(ts);
            trails.extend(ss);
            trails.push(last);
        }
        Parity::Odd => {
            trails.extend(ts);
            trails.extend(ss);
        }
    }
    Ok(TrailDecomposition { hub, trails, alpha, beta, gamma })
}

#[derive(Debug, Clone)]
pub struct TripartiteLabeling {
    pub decomposition: TrailDecomposition,
    pub tour: EulerTour,
    pub labeling: EdgeLabeling,
}

/// Tour labeling of a validated tripartite instance.
///
/// The tour is Hierholzer's from the hub; should it contain no T-trail, the
/// tours forced through each hub edge in turn are tried.
pub fn tripartite_labeling(s: &TripartiteStructure) -> Result<TripartiteLabeling, ConstructionError> {
    let g = s.graph();
    let hub = s.hub();
    let mut candidates = vec![euler_tour_from(g, hub)?];
    let mut seen = HashSet::new();
    seen.insert(candidates[0].edges.clone());
    for w in g.neighbors(hub) {
        let t = euler_tour(g, Some((hub, w)))?;
        if seen.insert(t.edges.clone()) {
            candidates.push(t);
        }
    }
    let mut last_err = TripartiteError::NoMixedTrail;
    for raw in candidates {
        match trail_decomposition(&raw, s) {
            Ok(decomposition) => {
                let tour = decomposition.tour();
                let labeling = label_along_tour(g, &tour)?;
                return Ok(TripartiteLabeling { decomposition, tour, labeling });
            }
            Err(e @ TripartiteError::NoMixedTrail) => last_err = e,
            Err(e) => return Err(e.into()),
        }
    }
    Err(last_err.into())
}
