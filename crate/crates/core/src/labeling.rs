//! Edge labelings, the local antimagic verifier, and the complement,
//! edge-deletion and two-color transforms on labelings.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bipartition, EdgeId, Graph, GraphError, Vertex};

pub type Label = u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelingError {
    #[error("malformed labeling: {0}")]
    Malformed(String),
    #[error("malformed labeling matrix: {0}")]
    MalformedMatrix(String),
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Labels indexed by canonical edge id, with the induced vertex sums `f⁺`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    labels: Vec<Label>,
    sums: Vec<u64>,
}

impl EdgeLabeling {
    /// Accepts any assignment of labels from `1..=q` to the edges of `g`;
    /// repeated labels are allowed here and reported by [`verify`].
    pub fn from_labels(g: &Graph, labels: Vec<Label>) -> Result<Self, LabelingError> {
        let q = g.size();
        if labels.len() != q {
            return Err(LabelingError::Malformed(format!("{} labels for {q} edges", labels.len())));
        }
        if let Some((e, &l)) = labels.iter().enumerate().find(|&(_, &l)| l == 0 || l > q as Label) {
            return Err(LabelingError::Malformed(format!("edge {e} has label {l} outside 1..={q}")));
        }
        let sums = induced_sums(g, &labels);
        Ok(EdgeLabeling { labels, sums })
    }

    /// Like [`EdgeLabeling::from_labels`] but insists on a bijection onto `1..=q`.
    pub fn new(g: &Graph, labels: Vec<Label>) -> Result<Self, LabelingError> {
        let f = Self::from_labels(g, labels)?;
        if !f.is_bijection() {
            return Err(LabelingError::Malformed("labels are not a bijection onto 1..=q".into()));
        }
        Ok(f)
    }

    /// Builds a labeling from `(u, v, label)` triples naming each edge by its
    /// endpoints.
    pub fn from_vertex_pairs(g: &Graph, triples: &[(Vertex, Vertex, Label)]) -> Result<Self, LabelingError> {
        let mut labels = vec![0; g.size()];
        for &(u, v, l) in triples {
            let e = g
                .edge_index(u, v)
                .ok_or_else(|| LabelingError::Malformed(format!("{u}-{v} is not an edge")))?;
            labels[e] = l;
        }
        Self::new(g, labels)
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, e: EdgeId) -> Label {
        self.labels[e]
    }

    pub fn sums(&self) -> &[u64] {
        &self.sums
    }

    pub fn sum(&self, v: Vertex) -> u64 {
        self.sums[v]
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.labels.len() + 1];
        self.labels.iter().all(|&l| !std::mem::replace(&mut seen[l as usize], true))
    }

    /// Distinct vertex sums, ascending.
    pub fn colors(&self) -> Vec<u64> {
        let mut c = self.sums.clone();
        c.sort_unstable();
        c.dedup();
        c
    }

    pub fn color_count(&self) -> usize {
        self.colors().len()
    }
}

fn induced_sums(g: &Graph, labels: &[Label]) -> Vec<u64> {
    let mut sums = vec![0u64; g.order()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        sums[u] += labels[e];
        sums[v] += labels[e];
    }
    sums
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub is_bijection: bool,
    /// No two adjacent vertices share a sum.
    pub is_proper: bool,
    pub colors: Vec<u64>,
    pub color_count: usize,
    pub violations: Vec<(Vertex, Vertex)>,
    /// Some component is a single edge, so no local antimagic labeling exists.
    pub chi_la_undefined: bool,
}

impl VerificationReport {
    pub fn is_local_antimagic(&self) -> bool {
        self.is_bijection && self.is_proper
    }
}

/// True when some component of `g` is a lone edge.
pub fn has_k2_component(g: &Graph) -> bool {
    g.components().iter().any(|c| c.len() == 2)
}

/// Checks `f` against `g`, recomputing every vertex sum from the labels.
pub fn verify(g: &Graph, f: &EdgeLabeling) -> Result<VerificationReport, LabelingError> {
    if f.labels.len() != g.size() || f.sums.len() != g.order() {
        return Err(LabelingError::Malformed(format!(
            "labeling covers {} edges / {} vertices, graph has {} / {}",
            f.labels.len(),
            f.sums.len(),
            g.size(),
            g.order()
        )));
    }
    let sums = induced_sums(g, &f.labels);
    debug_assert_eq!(sums, f.sums);
    let violations: Vec<_> = g.edges().iter().copied().filter(|&(u, v)| sums[u] == sums[v]).collect();
    let mut colors = sums;
    colors.sort_unstable();
    colors.dedup();
    Ok(VerificationReport {
        is_bijection: f.is_bijection(),
        is_proper: violations.is_empty(),
        color_count: colors.len(),
        colors,
        violations,
        chi_la_undefined: has_k2_component(g),
    })
}

/// `e ↦ q + 1 - f(e)`.
pub fn complement(g: &Graph, f: &EdgeLabeling) -> EdgeLabeling {
    let q = f.labels.len() as Label;
    let labels = f.labels.iter().map(|&l| q + 1 - l).collect();
    EdgeLabeling::from_labels(g, labels).expect("complement stays within 1..=q")
}

/// How a deletion candidate was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeletionRoute {
    /// `f(e) = q`: keep the remaining labels.
    Restrict,
    /// `f(e) = 1`: keep the remaining labels, each lowered by one.
    Shift,
    /// [`DeletionRoute::Restrict`] applied to the complement of `f`.
    ComplementRestrict,
    /// [`DeletionRoute::Shift`] applied to the complement of `f`.
    ComplementShift,
}

#[derive(Debug, Clone)]
pub struct DeletionOutcome {
    pub graph: Graph,
    pub labeling: EdgeLabeling,
    pub report: VerificationReport,
    pub route: DeletionRoute,
    /// Every applicable candidate with its verification result, in trial order.
    pub candidates: Vec<(DeletionRoute, VerificationReport)>,
    /// No candidate was proper; `labeling` is then the first candidate.
    pub construction_failed: bool,
}

/// Removes an edge carrying label `1` or `q` from a regular graph with a
/// local antimagic labeling and relabels `G - e`.
///
/// The restriction (label `q`) and shift (label `1`) recipes are tried on `f`
/// and on its complement; the proper candidate with the fewest colors wins,
/// earlier routes first on ties.
pub fn delete_extreme_edge(g: &Graph, f: &EdgeLabeling, e: EdgeId) -> Result<DeletionOutcome, LabelingError> {
    let q = g.size() as Label;
    if e >= g.size() {
        return Err(LabelingError::Precondition(format!("edge {e} does not exist")));
    }
    if g.regular_degree().is_none() {
        return Err(LabelingError::Precondition("graph is not regular".into()));
    }
    let report = verify(g, f)?;
    if !report.is_local_antimagic() {
        return Err(LabelingError::Precondition("labeling is not local antimagic".into()));
    }
    if f.label(e) != 1 && f.label(e) != q {
        return Err(LabelingError::Precondition(format!("edge {e} has label {}, not 1 or {q}", f.label(e))));
    }
    let reduced = g.without_edge(e)?;
    let comp = complement(g, f);
    let recipes = [
        (DeletionRoute::Restrict, f, q, 0),
        (DeletionRoute::Shift, f, 1, 1),
        (DeletionRoute::ComplementRestrict, &comp, q, 0),
        (DeletionRoute::ComplementShift, &comp, 1, 1),
    ];
    let mut tried: Vec<(DeletionRoute, EdgeLabeling, VerificationReport)> = Vec::new();
    for (route, base, needed, lower_by) in recipes {
        if base.label(e) != needed {
            continue;
        }
        let labels = base
            .labels()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, &l)| l - lower_by)
            .collect();
        let cand = EdgeLabeling::from_labels(&reduced, labels)?;
        let rep = verify(&reduced, &cand)?;
        if !rep.is_bijection {
            return Err(LabelingError::InternalInvariant(format!("{route:?} candidate is not a bijection")));
        }
        tried.push((route, cand, rep));
    }
    let best = tried
        .iter()
        .enumerate()
        .filter(|(_, (_, _, r))| r.is_proper)
        .min_by_key(|(i, (_, _, r))| (r.color_count, *i))
        .map(|(i, _)| i);
    let construction_failed = best.is_none();
    let (route, labeling, report) = tried[best.unwrap_or(0)].clone();
    Ok(DeletionOutcome {
        graph: reduced,
        labeling,
        report,
        route,
        candidates: tried.into_iter().map(|(r, _, rep)| (r, rep)).collect(),
        construction_failed,
    })
}

/// Symmetric `p × p` matrix with `f(u_l u_l')` on edges and `None` (`*`)
/// elsewhere, including the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingMatrix {
    entries: Vec<Vec<Option<Label>>>,
}

impl LabelingMatrix {
    pub fn new(entries: Vec<Vec<Option<Label>>>) -> Self {
        LabelingMatrix { entries }
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Option<Label>>] {
        &self.entries
    }

    pub fn row_sum(&self, l: usize) -> u64 {
        self.entries[l].iter().flatten().sum()
    }

    /// Parses the text form: one row per line, tokens separated by spaces,
    /// `*` for non-edges.
    pub fn parse(text: &str) -> Result<Self, LabelingError> {
        let mut entries = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .enumerate()
                .map(|(col, tok)| match tok {
                    "*" => Ok(None),
                    t => t.parse::<Label>().map(Some).map_err(|_| {
                        LabelingError::MalformedMatrix(format!("line {}, column {}: bad token {t:?}", lineno + 1, col + 1))
                    }),
                })
                .collect::<Result<Vec<_>, _>>()?;
            entries.push(row);
        }
        Ok(LabelingMatrix { entries })
    }
}

impl fmt::Display for LabelingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let toks: Vec<String> = row.iter().map(|x| x.map_or_else(|| "*".to_string(), |l| l.to_string())).collect();
            writeln!(f, "{}", toks.join(" "))?;
        }
        Ok(())
    }
}

pub fn to_matrix(g: &Graph, f: &EdgeLabeling) -> Result<LabelingMatrix, LabelingError> {
    if f.size() != g.size() {
        return Err(LabelingError::Malformed(format!("{} labels for {} edges", f.size(), g.size())));
    }
    let p = g.order();
    let mut entries = vec![vec![None; p]; p];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        entries[u][v] = Some(f.label(e));
        entries[v][u] = Some(f.label(e));
    }
    Ok(LabelingMatrix { entries })
}

pub fn from_matrix(m: &LabelingMatrix) -> Result<(Graph, EdgeLabeling), LabelingError> {
    let p = m.order();
    let bad = |msg: String| LabelingError::MalformedMatrix(msg);
    let mut triples = Vec::new();
    for (l, row) in m.entries.iter().enumerate() {
        if row.len() != p {
            return Err(bad(format!("row {l} has {} entries, expected {p}", row.len())));
        }
        if row[l].is_some() {
            return Err(bad(format!("diagonal entry {l} is not *")));
        }
    }
    for l in 0..p {
        for k in l + 1..p {
            match (m.entries[l][k], m.entries[k][l]) {
                (None, None) => {}
                (Some(a), Some(b)) if a == b => triples.push((l, k, a)),
                _ => return Err(bad(format!("entries ({l},{k}) and ({k},{l}) differ"))),
            }
        }
    }
    let g = Graph::new(p, triples.iter().map(|&(u, v, _)| (u, v)))?;
    let q = g.size() as Label;
    let mut seen = vec![false; g.size() + 1];
    for &(_, _, l) in &triples {
        if l == 0 || l > q || std::mem::replace(&mut seen[l as usize], true) {
            return Err(bad(format!("label {l} is repeated or outside 1..={q}")));
        }
    }
    // triples were produced in (l, k) order, which is the canonical edge order
    let labels = triples.into_iter().map(|(_, _, l)| l).collect();
    let f = EdgeLabeling::new(&g, labels)?;
    Ok((g, f))
}

/// Witness data for a labeling with exactly two colors `x < y` on classes
/// `X` and `Y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoColorCertificate {
    pub x: u64,
    pub y: u64,
    pub class_x: Vec<Vertex>,
    pub class_y: Vec<Vertex>,
}

/// For a local antimagic labeling inducing two colors, checks that the color
/// classes form a bipartition with `x|X| = y|Y| = q(q+1)/2` and `|X| > |Y|`.
/// `Ok(None)` when the labeling uses some other number of colors.
pub fn two_coloring_certificate(g: &Graph, f: &EdgeLabeling) -> Result<Option<TwoColorCertificate>, LabelingError> {
    let report = verify(g, f)?;
    if !report.is_local_antimagic() {
        return Err(LabelingError::Precondition("labeling is not local antimagic".into()));
    }
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(LabelingError::Precondition(format!("vertex {v} is isolated")));
    }
    if report.color_count != 2 {
        return Ok(None);
    }
    let (x, y) = (report.colors[0], report.colors[1]);
    let (class_x, class_y): (Vec<_>, Vec<_>) = (0..g.order()).partition(|&v| f.sum(v) == x);
    let q = g.size() as u64;
    let half = q * (q + 1) / 2;
    let broken = |what: &str| Err(LabelingError::InternalInvariant(format!("two-color certificate: {what}")));
    if x * class_x.len() as u64 != half || y * class_y.len() as u64 != half {
        return broken("class weight differs from q(q+1)/2");
    }
    if class_x.len() <= class_y.len() {
        return broken("lighter color class is not the larger one");
    }
    if g.edges().iter().any(|&(u, v)| (f.sum(u) == x) == (f.sum(v) == x)) {
        return broken("an edge stays inside one color class");
    }
    Ok(Some(TwoColorCertificate { x, y, class_x, class_y }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "reason")]
pub enum TwoColorObstruction {
    NonBipartite,
    EqualParts { part_size: usize },
    NotDivisible { part_size: usize, half_weight: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "decision")]
pub enum TwoColorDecision {
    /// A two-color local antimagic labeling is impossible.
    Impossible(TwoColorObstruction),
    /// The necessary conditions hold; nothing more is claimed.
    Unknown,
}

/// Necessary conditions for a connected graph to have a local antimagic
/// labeling with two colors: bipartite, unequal parts, and `q(q+1)/2`
/// divisible by both part sizes.
pub fn chi_la2_feasible(g: &Graph) -> Result<TwoColorDecision, LabelingError> {
    if !g.is_connected() {
        return Err(LabelingError::Unsupported("graph is disconnected".into()));
    }
    if g.size() == 0 {
        return Err(LabelingError::Unsupported("graph has no edges".into()));
    }
    let Some((a, b)) = bipartition(g) else {
        return Ok(TwoColorDecision::Impossible(TwoColorObstruction::NonBipartite));
    };
    if a.len() == b.len() {
        return Ok(TwoColorDecision::Impossible(TwoColorObstruction::EqualParts { part_size: a.len() }));
    }
    let q = g.size() as u64;
    let half_weight = q * (q + 1) / 2;
    for part_size in [a.len(), b.len()] {
        if !half_weight.is_multiple_of(part_size as u64) {
            return Ok(TwoColorDecision::Impossible(TwoColorObstruction::NotDivisible { part_size, half_weight }));
        }
    }
    Ok(TwoColorDecision::Unknown)
}

/// Wire form of a labeling: labels in canonical edge order plus the verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingJson {
    pub labels: Vec<Label>,
    #[serde(default)]
    pub colors: Vec<u64>,
    #[serde(default)]
    pub proper: bool,
}

impl LabelingJson {
    pub fn describe(g: &Graph, f: &EdgeLabeling) -> Result<Self, LabelingError> {
        let report = verify(g, f)?;
        let proper = report.is_local_antimagic();
        Ok(LabelingJson { labels: f.labels().to_vec(), colors: report.colors, proper })
    }

    pub fn into_labeling(self, g: &Graph) -> Result<EdgeLabeling, LabelingError> {
        EdgeLabeling::from_labels(g, self.labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn cycle(n: usize) -> Graph {
        generate(FamilySpec::Cycle { n }).unwrap()
    }

    /// Labels given along the cycle: `positional[i]` sits on `x_{i+1} x_{i+2}`.
    fn along_cycle(n: usize, positional: &[Label]) -> (Graph, EdgeLabeling) {
        let g = cycle(n);
        let triples: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, positional[i])).collect();
        let f = EdgeLabeling::from_vertex_pairs(&g, &triples).unwrap();
        (g, f)
    }

    #[test]
    fn verify_c4_example() {
        let (g, f) = along_cycle(4, &[1, 2, 3, 4]);
        let r = verify(&g, &f).unwrap();
        assert!(r.is_local_antimagic());
        assert_eq!(r.colors, vec![3, 5, 7]);
        assert_eq!(r.color_count, 3);
        assert_eq!(f.sums(), &[5, 3, 5, 7]);
    }

    #[test]
    fn verify_c3_and_k2() {
        let g = cycle(3);
        let f = EdgeLabeling::new(&g, vec![1, 2, 3]).unwrap();
        let r = verify(&g, &f).unwrap();
        assert!(r.is_proper);
        assert_eq!(r.colors, vec![3, 4, 5]);

        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let f = EdgeLabeling::new(&k2, vec![1]).unwrap();
        let r = verify(&k2, &f).unwrap();
        assert!(!r.is_proper);
        assert_eq!(r.violations, vec![(0, 1)]);
        assert!(r.chi_la_undefined);
    }

    #[test]
    fn verify_reports_repeated_labels() {
        let g = cycle(4);
        let f = EdgeLabeling::from_labels(&g, vec![1, 1, 2, 3]).unwrap();
        assert!(!verify(&g, &f).unwrap().is_bijection);
        assert!(EdgeLabeling::new(&g, vec![1, 1, 2, 3]).is_err());
        assert!(EdgeLabeling::from_labels(&g, vec![1, 2, 3]).is_err());
        assert!(EdgeLabeling::from_labels(&g, vec![1, 2, 3, 5]).is_err());
    }

    #[test]
    fn verify_rejects_domain_mismatch() {
        let (_, f) = along_cycle(4, &[1, 2, 3, 4]);
        assert!(matches!(verify(&cycle(5), &f), Err(LabelingError::Malformed(_))));
    }

    #[test]
    fn complement_examples() {
        let (g, f) = along_cycle(4, &[1, 2, 3, 4]);
        let c = complement(&g, &f);
        let (_, expected) = along_cycle(4, &[4, 3, 2, 1]);
        assert_eq!(c, expected);
        assert_eq!(c.colors(), vec![3, 5, 7]);
        for v in 0..4 {
            assert_eq!(c.sum(v), 2 * 5 - f.sum(v));
        }
        assert_eq!(complement(&g, &c), f);

        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let one = EdgeLabeling::new(&k2, vec![1]).unwrap();
        assert_eq!(complement(&k2, &one), one);
    }

    #[test]
    fn deletion_on_c4() {
        // cycle labeling of C4 along x1x2, x2x3, x3x4, x4x1
        let (g, f) = along_cycle(4, &[4, 1, 3, 2]);
        let e = g.edge_index(0, 1).unwrap();
        let out = delete_extreme_edge(&g, &f, e).unwrap();
        assert!(!out.construction_failed);
        assert_eq!(out.route, DeletionRoute::ComplementShift);
        assert_eq!(out.report.color_count, 3);
        // path x2 x3 x4 x1 carries 3, 1, 2
        assert_eq!(out.labeling.sums(), &[2, 3, 4, 3]);
        assert_eq!(out.candidates.len(), 2);
        assert_eq!(out.candidates[0].0, DeletionRoute::Restrict);
        assert_eq!(out.candidates[0].1.color_count, 4);

        let e3 = g.edge_index(2, 3).unwrap();
        assert!(matches!(delete_extreme_edge(&g, &f, e3), Err(LabelingError::Precondition(_))));
    }

    #[test]
    fn deletion_preconditions() {
        let star = generate(FamilySpec::CompleteBipartite { a: 1, b: 3 }).unwrap();
        let f = EdgeLabeling::new(&star, vec![1, 2, 3]).unwrap();
        assert!(matches!(delete_extreme_edge(&star, &f, 0), Err(LabelingError::Precondition(_))));
        // every bijection on a cycle is proper; K4 with f⁺(0) = f⁺(1) = 10 is not
        let g = generate(FamilySpec::Complete { n: 4 }).unwrap();
        let f = EdgeLabeling::new(&g, vec![3, 1, 6, 2, 5, 4]).unwrap();
        assert_eq!(verify(&g, &f).unwrap().violations, vec![(0, 1)]);
        assert!(matches!(delete_extreme_edge(&g, &f, 0), Err(LabelingError::Precondition(_))));
    }

    #[test]
    fn matrix_of_c4_example() {
        let (g, f) = along_cycle(4, &[1, 2, 3, 4]);
        let m = to_matrix(&g, &f).unwrap();
        assert_eq!(m.to_string(), "* 1 * 4\n1 * 2 *\n* 2 * 3\n4 * 3 *\n");
        for l in 0..4 {
            assert_eq!(m.row_sum(l), f.sum(l));
        }
        let parsed = LabelingMatrix::parse(&m.to_string()).unwrap();
        assert_eq!(parsed, m);
        assert_eq!(from_matrix(&parsed).unwrap(), (g, f));
    }

    #[test]
    fn malformed_matrices() {
        let dup = LabelingMatrix::parse("* 5 5\n5 * 1\n5 1 *\n").unwrap();
        assert!(matches!(from_matrix(&dup), Err(LabelingError::MalformedMatrix(_))));
        let asym = LabelingMatrix::parse("* 1\n2 *\n").unwrap();
        assert!(matches!(from_matrix(&asym), Err(LabelingError::MalformedMatrix(_))));
        let diag = LabelingMatrix::parse("1 *\n* *\n").unwrap();
        assert!(matches!(from_matrix(&diag), Err(LabelingError::MalformedMatrix(_))));
        assert!(matches!(LabelingMatrix::parse("* x\n"), Err(LabelingError::MalformedMatrix(_))));
    }

    #[test]
    fn stars_never_have_two_colors() {
        let star = generate(FamilySpec::CompleteBipartite { a: 1, b: 3 }).unwrap();
        let f = EdgeLabeling::new(&star, vec![1, 2, 3]).unwrap();
        assert_eq!(f.sums(), &[6, 1, 2, 3]);
        assert_eq!(two_coloring_certificate(&star, &f).unwrap(), None);

        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let f = EdgeLabeling::new(&k2, vec![1]).unwrap();
        assert!(matches!(two_coloring_certificate(&k2, &f), Err(LabelingError::Precondition(_))));
    }

    #[test]
    fn certificate_on_k24() {
        // K_{2,4}: hubs 0, 1; leaves 2..6. Pairs (1,8),(2,7),(3,6),(4,5) sum to 9;
        // hub 0 takes 8, 2, 3, 5 = 18.
        let g = generate(FamilySpec::CompleteBipartite { a: 2, b: 4 }).unwrap();
        let f = EdgeLabeling::from_vertex_pairs(
            &g,
            &[(0, 2, 8), (1, 2, 1), (0, 3, 2), (1, 3, 7), (0, 4, 3), (1, 4, 6), (0, 5, 5), (1, 5, 4)],
        )
        .unwrap();
        let cert = two_coloring_certificate(&g, &f).unwrap().unwrap();
        assert_eq!((cert.x, cert.y), (9, 18));
        assert_eq!(cert.class_x, vec![2, 3, 4, 5]);
        assert_eq!(cert.class_y, vec![0, 1]);
    }

    #[test]
    fn two_color_feasibility() {
        let k22 = generate(FamilySpec::CompleteBipartite { a: 2, b: 2 }).unwrap();
        assert_eq!(
            chi_la2_feasible(&k22).unwrap(),
            TwoColorDecision::Impossible(TwoColorObstruction::EqualParts { part_size: 2 })
        );
        assert_eq!(
            chi_la2_feasible(&cycle(5)).unwrap(),
            TwoColorDecision::Impossible(TwoColorObstruction::NonBipartite)
        );
        let k13 = generate(FamilySpec::CompleteBipartite { a: 1, b: 3 }).unwrap();
        assert_eq!(chi_la2_feasible(&k13).unwrap(), TwoColorDecision::Unknown);
        let k23 = generate(FamilySpec::CompleteBipartite { a: 2, b: 3 }).unwrap();
        assert_eq!(
            chi_la2_feasible(&k23).unwrap(),
            TwoColorDecision::Impossible(TwoColorObstruction::NotDivisible { part_size: 2, half_weight: 21 })
        );
        let two = crate::graph::disjoint_copies(2, &cycle(4));
        assert!(matches!(chi_la2_feasible(&two), Err(LabelingError::Unsupported(_))));
    }

    #[test]
    fn labeling_json_shape() {
        let (g, f) = along_cycle(4, &[1, 2, 3, 4]);
        let j = LabelingJson::describe(&g, &f).unwrap();
        assert_eq!(serde_json::to_string(&j).unwrap(), r#"{"labels":[1,4,2,3],"colors":[3,5,7],"proper":true}"#);
        assert_eq!(j.into_labeling(&g).unwrap(), f);
    }
}
