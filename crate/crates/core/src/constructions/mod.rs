//! Explicit local antimagic labelings.
//!
//! Everything here rests on one cycle labeling: along a closed walk
//! `x_1 … x_q x_1` the `i`-th step gets label `q + 1 - j` when `i = 2j - 1`
//! and `j` when `i = 2j`. A vertex then collects `q` at odd positions other
//! than `x_1`, `q + 1` at even positions, and `2q - ⌊q/2⌋` at `x_1`.
//! Laying that pattern along a suitable Euler tour gives three-color
//! labelings of even-regular bipartite graphs and of the hub-based
//! tripartite graphs in [`tripartite`].

pub mod tripartite;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bipartition, euler_tour, generate, lex_product, EulerTour, FamilySpec, Graph, GraphError, Vertex};
use crate::labeling::{verify, EdgeLabeling, Label, LabelingError};
use crate::magic::{magic_square, MagicError};

pub use tripartite::{
    trail_decomposition, tripartite_labeling, validate_tripartite, Parity, Trail, TrailDecomposition, TrailKind,
    TripartiteError, TripartiteLabeling, TripartiteParts, TripartiteStructure,
};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("invalid parameter: {0}")]
    Invalid(String),
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("construction produced an inconsistent labeling: {0}")]
    Internal(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Magic(#[from] MagicError),
    #[error(transparent)]
    Tripartite(#[from] TripartiteError),
}

/// Cycle labels in walk order: entry `i` belongs to the step
/// `x_{i+1} x_{i+2}`.
pub fn positional_cycle_labels(q: usize) -> Vec<Label> {
    (0..q as Label).map(|i| if i % 2 == 0 { q as Label - i / 2 } else { i.div_ceil(2) }).collect()
}

/// Labels each tour edge with the cycle label of its position.
pub fn label_along_tour(g: &Graph, tour: &EulerTour) -> Result<EdgeLabeling, ConstructionError> {
    if !tour.is_valid_for(g) {
        return Err(ConstructionError::Precondition("tour is not an Euler tour of the graph".into()));
    }
    let positional = positional_cycle_labels(tour.len());
    let mut labels = vec![0; g.size()];
    for (pos, &e) in tour.edges.iter().enumerate() {
        labels[e] = positional[pos];
    }
    Ok(EdgeLabeling::new(g, labels)?)
}

/// The cycle labeling of `C_n` (vertex `i` is `x_{i+1}`).
pub fn cycle_labeling(n: usize) -> Result<(Graph, EdgeLabeling), ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::Invalid(format!("cycle labeling needs n >= 3, got {n}")));
    }
    let g = generate(FamilySpec::Cycle { n })?;
    let tour = EulerTour {
        vertices: (0..n).collect(),
        edges: (0..n).map(|i| g.edge_index(i, (i + 1) % n).expect("cycle edge")).collect(),
    };
    let f = label_along_tour(&g, &tour)?;
    Ok((g, f))
}

/// Induced sum at `x_i` (1-based) under the cycle labeling of `C_n`.
pub fn cycle_pattern(n: u64, i: u64) -> u64 {
    if i == 1 {
        2 * n - n / 2
    } else if i % 2 == 1 {
        n
    } else {
        n + 1
    }
}

/// A labeling laid along an Euler tour, with the tour kept for inspection.
#[derive(Debug, Clone)]
pub struct TourLabeling {
    pub tour: EulerTour,
    pub labeling: EdgeLabeling,
}

/// The three colors of the tour labeling on a `2m`-regular bipartite graph
/// with `q` edges: `[mq, m(q+1), (2m+1)q/2]`; the last one only at `x_1`.
pub fn bipartite_regular_colors(q: u64, m: u64) -> [u64; 3] {
    [m * q, m * (q + 1), 2 * q - q / 2 + (m - 1) * q]
}

/// Tour labeling of a connected `2m`-regular bipartite graph. With
/// `start = Some((u, v))` the tour begins with the edge `uv`, which then
/// carries label `q`.
pub fn bipartite_regular_labeling(
    g: &Graph,
    start: Option<(Vertex, Vertex)>,
) -> Result<TourLabeling, ConstructionError> {
    let pre = |m: &str| Err(ConstructionError::Precondition(m.to_string()));
    if !g.is_connected() || g.size() == 0 {
        return pre("graph must be connected with at least one edge");
    }
    match g.regular_degree() {
        Some(d) if d >= 2 && d % 2 == 0 => {}
        _ => return pre("graph must be 2m-regular with m >= 1"),
    }
    if bipartition(g).is_none() {
        return pre("graph must be bipartite");
    }
    let tour = euler_tour(g, start)?;
    let labeling = label_along_tour(g, &tour)?;
    Ok(TourLabeling { tour, labeling })
}

/// `f⁺(u)·n³ - (n³ - n)·deg(u)/2`, the sum every copy of `u` receives in the
/// block labeling of `G[O_n]`.
pub fn lex_vertex_value(sum: u64, degree: usize, n: u64) -> i128 {
    let n3 = (n * n * n) as i128;
    sum as i128 * n3 - (n3 - n as i128) * degree as i128 / 2
}

fn block_base(n: usize) -> Result<Vec<Vec<Label>>, ConstructionError> {
    match n {
        0 | 1 => Err(ConstructionError::Invalid(format!("blow-up order must be >= 2, got {n}"))),
        // no magic square of order 2; rows balance, columns do not
        2 => Ok(vec![vec![1, 4], vec![3, 2]]),
        _ => Ok(magic_square(n)?.rows().to_vec()),
    }
}

/// Block labeling of `G[O_n]`: the `K_{n,n}` replacing edge `u_l u_l'`
/// (`l < l'`) gets the shifted magic square `Ω_{f(u_l u_l')}`, rows indexed
/// by the copies of `u_l`.
///
/// For `n >= 3` every copy of `u` receives [`lex_vertex_value`]; for
/// `n = 2` the output is produced but carries no guarantee.
pub fn lex_labeling(g: &Graph, f: &EdgeLabeling, n: usize) -> Result<(Graph, EdgeLabeling), ConstructionError> {
    let report = verify(g, f)?;
    if !report.is_bijection {
        return Err(LabelingError::Malformed("base labeling is not a bijection".into()).into());
    }
    let base = block_base(n)?;
    let product = lex_product(g, &Graph::empty(n));
    let block = (n * n) as Label;
    let mut labels = vec![0; product.size()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let shift = (f.label(e) - 1) * block;
        for (j, row) in base.iter().enumerate() {
            for (k, &entry) in row.iter().enumerate() {
                let pe = product.edge_index(u * n + j, v * n + k).expect("product contains every blown-up edge");
                labels[pe] = entry + shift;
            }
        }
    }
    let labeling = EdgeLabeling::new(&product, labels)
        .map_err(|e| ConstructionError::Internal(format!("block labels do not tile 1..=qn²: {e}")))?;
    Ok((product, labeling))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LexCondition {
    /// Equal sums on vertices of different degree.
    EqualSumDifferentDegree,
    /// Different sums whose blown-up values coincide.
    BlownUpValuesCollide,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "result")]
pub enum LexCheck {
    Holds,
    Violated { first: usize, second: usize, condition: LexCondition },
}

impl LexCheck {
    pub fn holds(&self) -> bool {
        matches!(self, LexCheck::Holds)
    }
}

/// Checks, over all vertex pairs, that equal sums imply equal degrees and
/// that different sums stay different after blowing up by `O_n`.
pub fn check_lex_conditions(g: &Graph, f: &EdgeLabeling, n: u64) -> LexCheck {
    let pairs: Vec<_> = (0..g.order()).map(|v| (f.sum(v), g.degree(v))).collect();
    check_lex_conditions_on(&pairs, n)
}

/// [`check_lex_conditions`] on bare `(sum, degree)` data; witnesses index
/// into `data`.
pub fn check_lex_conditions_on(data: &[(u64, usize)], n: u64) -> LexCheck {
    for i in 0..data.len() {
        for j in i + 1..data.len() {
            let ((si, di), (sj, dj)) = (data[i], data[j]);
            let condition = if si == sj {
                (di != dj).then_some(LexCondition::EqualSumDifferentDegree)
            } else {
                (lex_vertex_value(si, di, n) == lex_vertex_value(sj, dj, n)).then_some(LexCondition::BlownUpValuesCollide)
            };
            if let Some(condition) = condition {
                return LexCheck::Violated { first: i, second: j, condition };
            }
        }
    }
    LexCheck::Holds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, generate, FamilySpec};
    use crate::labeling::{to_matrix, EdgeLabeling};

    fn cycle(n: usize) -> Graph {
        generate(FamilySpec::Cycle { n }).unwrap()
    }

    fn base_c4() -> (Graph, EdgeLabeling) {
        let g = cycle(4);
        let f = EdgeLabeling::from_vertex_pairs(&g, &[(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 0, 4)]).unwrap();
        (g, f)
    }

    #[test]
    fn positional_labels() {
        assert_eq!(positional_cycle_labels(4), vec![4, 1, 3, 2]);
        assert_eq!(positional_cycle_labels(5), vec![5, 1, 4, 2, 3]);
        assert_eq!(positional_cycle_labels(3), vec![3, 1, 2]);
    }

    #[test]
    fn cycle_labeling_examples() {
        let (g, f) = cycle_labeling(4).unwrap();
        assert_eq!(f.sums(), &[6, 5, 4, 5]);
        assert_eq!(f.colors(), vec![4, 5, 6]);
        assert_eq!(f.label(g.edge_index(0, 1).unwrap()), 4);
        let (_, f) = cycle_labeling(5).unwrap();
        assert_eq!(f.sums(), &[8, 6, 5, 6, 5]);
        let (_, f) = cycle_labeling(3).unwrap();
        assert_eq!(f.sums(), &[5, 4, 3]);
        assert!(matches!(cycle_labeling(2), Err(ConstructionError::Invalid(_))));
    }

    #[test]
    fn cycle_labeling_matches_pattern() {
        for n in 3..=60usize {
            let (g, f) = cycle_labeling(n).unwrap();
            assert!(verify(&g, &f).unwrap().is_local_antimagic());
            for i in 0..n {
                assert_eq!(f.sum(i), cycle_pattern(n as u64, i as u64 + 1), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn lex_example_matrix() {
        let (g, f) = base_c4();
        let (prod, lab) = lex_labeling(&g, &f, 3).unwrap();
        let text = to_matrix(&prod, &lab).unwrap().to_string();
        let first = text.lines().next().unwrap();
        assert_eq!(first, "* * * 8 1 6 * * * 35 28 33");
        let fourth = text.lines().nth(3).unwrap();
        assert_eq!(fourth, "8 3 4 * * * 17 10 15 * * *");
        assert_eq!(lab.sum(0), 111);
        assert_eq!(lab.sum(3), 57);
        assert_eq!(lab.colors(), vec![57, 111, 165]);
    }

    #[test]
    fn lex_sums_follow_formula() {
        let g = generate(FamilySpec::Wheel { n: 5 }).unwrap();
        let f = EdgeLabeling::new(&g, (1..=10).collect()).unwrap();
        for n in 3..=5usize {
            let (_, lab) = lex_labeling(&g, &f, n).unwrap();
            for u in 0..g.order() {
                for j in 0..n {
                    let expect = lex_vertex_value(f.sum(u), g.degree(u), n as u64);
                    assert_eq!(lab.sum(u * n + j) as i128, expect);
                }
            }
        }
    }

    #[test]
    fn lex_order_two_is_a_bijection() {
        let (g, f) = base_c4();
        let (prod, lab) = lex_labeling(&g, &f, 2).unwrap();
        assert_eq!(prod.size(), 16);
        assert!(lab.is_bijection());
        assert!(matches!(lex_labeling(&g, &f, 1), Err(ConstructionError::Invalid(_))));
    }

    #[test]
    fn lex_rejects_repeated_labels() {
        let g = cycle(4);
        let f = EdgeLabeling::from_labels(&g, vec![1, 1, 2, 3]).unwrap();
        assert!(matches!(lex_labeling(&g, &f, 3), Err(ConstructionError::Labeling(_))));
    }

    #[test]
    fn lex_conditions() {
        let (g, f) = base_c4();
        assert!(check_lex_conditions(&g, &f, 3).holds());
        assert_eq!(lex_vertex_value(11, 3, 3), 261);
        assert_eq!(lex_vertex_value(15, 3, 3), 369);
        assert_eq!(lex_vertex_value(20, 4, 3), 492);
        assert!(check_lex_conditions_on(&[(11, 3), (15, 3), (20, 4)], 3).holds());
        assert_eq!(
            check_lex_conditions_on(&[(11, 3), (11, 4)], 3),
            LexCheck::Violated { first: 0, second: 1, condition: LexCondition::EqualSumDifferentDegree }
        );
        // 27a - 12d: (a, d) = (4, 0) and (8, 9) both give 108
        assert_eq!(
            check_lex_conditions_on(&[(4, 0), (8, 9)], 3),
            LexCheck::Violated { first: 0, second: 1, condition: LexCondition::BlownUpValuesCollide }
        );
    }

    #[test]
    fn bipartite_regular_examples() {
        let c4 = cycle(4);
        let out = bipartite_regular_labeling(&c4, None).unwrap();
        assert_eq!(out.labeling, cycle_labeling(4).unwrap().1);

        let gmn = generate(FamilySpec::Gmn { m: 2, n: 2 }).unwrap();
        let out = bipartite_regular_labeling(&gmn, None).unwrap();
        assert_eq!(out.labeling.colors(), vec![32, 34, 40]);
        assert_eq!(bipartite_regular_colors(16, 2), [32, 34, 40]);

        let torus = cartesian_product(&cycle(4), &cycle(4));
        let out = bipartite_regular_labeling(&torus, None).unwrap();
        assert_eq!(out.labeling.colors(), vec![64, 66, 80]);
        assert!(verify(&torus, &out.labeling).unwrap().is_local_antimagic());
    }

    #[test]
    fn bipartite_start_edge_gets_top_label() {
        let g = generate(FamilySpec::Gmn { m: 3, n: 2 }).unwrap();
        for &(u, v) in g.edges().iter().take(5) {
            let out = bipartite_regular_labeling(&g, Some((v, u))).unwrap();
            assert_eq!(out.labeling.label(g.edge_index(u, v).unwrap()), g.size() as u64);
            assert_eq!(out.labeling.sum(v), bipartite_regular_colors(g.size() as u64, 2)[2]);
        }
    }

    #[test]
    fn bipartite_preconditions() {
        for g in [
            cycle(5),
            generate(FamilySpec::MobiusLadder { n: 6 }).unwrap(),
            crate::graph::disjoint_copies(2, &cycle(4)),
            Graph::new(3, [(0, 1), (1, 2)]).unwrap(),
        ] {
            assert!(matches!(bipartite_regular_labeling(&g, None), Err(ConstructionError::Precondition(_))));
        }
    }
}
