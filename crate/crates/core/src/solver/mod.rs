//! Exact local antimagic chromatic numbers on small graphs.
//!
//! [`chi_la_exact`] is a depth-first branch and bound over label
//! assignments in canonical edge order. [`oracle::chi_la_naive`] enumerates
//! every permutation with no pruning and shares no code with the search; the
//! tests hold the two against each other.

pub mod oracle;

mod bounds;

pub use bounds::{chi_la_bounds, BoundHints, BoundSource, Bounds};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bipartition, chromatic_number, Graph, GraphError, Vertex};
use crate::labeling::{has_k2_component, EdgeLabeling, Label};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("vertex {0} is isolated")]
    IsolatedVertex(Vertex),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    /// `chi_la` is proven optimal.
    Exact,
    /// The node budget ran out; `upper_bound` holds the best witness so far.
    BudgetExceeded,
    /// No local antimagic labeling exists.
    UndefinedNoLabeling,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub chi_la: Option<usize>,
    pub upper_bound: Option<usize>,
    pub lower_bound: usize,
    pub witness: Option<EdgeLabeling>,
    pub status: SolveStatus,
    pub nodes_explored: u64,
}

/// Whether some bipartition `(X, Y)` of `g` could carry a two-color local
/// antimagic labeling: `|X| > |Y|` and `q(q+1)/2` divisible by both sizes.
/// Each component may be flipped independently.
pub fn two_colors_possible(g: &Graph) -> bool {
    if g.size() == 0 || bipartition(g).is_none() {
        return false;
    }
    let half = (g.size() * (g.size() + 1) / 2) as u64;
    let p = g.order();
    let (a, _) = bipartition(g).expect("checked above");
    let mut in_a = vec![false; p];
    for v in a {
        in_a[v] = true;
    }
    // achievable sizes of X over all component flips
    let mut reachable = vec![false; p + 1];
    reachable[0] = true;
    for comp in g.components() {
        let left = comp.iter().filter(|&&v| in_a[v]).count();
        let right = comp.len() - left;
        let mut next = vec![false; p + 1];
        for s in 0..=p {
            if reachable[s] {
                next[s + left] = true;
                next[s + right] = true;
            }
        }
        reachable = next;
    }
    (0..=p).filter(|&s| reachable[s]).any(|x| {
        let y = p - x;
        x > y && y > 0 && half.is_multiple_of(x as u64) && half.is_multiple_of(y as u64)
    })
}

/// `max(χ(g), 3 when two colors are ruled out on a bipartite graph)`.
pub fn chi_la_lower_bound(g: &Graph) -> Result<(usize, BoundSource), SolverError> {
    let chi = chromatic_number(g)?;
    if chi == 2 && !two_colors_possible(g) {
        Ok((3, BoundSource::TwoColorBalance))
    } else {
        Ok((chi, BoundSource::ChromaticNumber))
    }
}

struct Search<'a> {
    g: &'a Graph,
    budget: u64,
    nodes: u64,
    used: Vec<bool>,
    labels: Vec<Label>,
    sums: Vec<u64>,
    remaining: Vec<usize>,
    color_count: Vec<u32>,
    distinct: usize,
    best: usize,
    best_labels: Option<Vec<Label>>,
    target: usize,
    first_label_cap: Label,
    exhausted: bool,
}

impl Search<'_> {
    fn complete(&mut self, v: Vertex) -> bool {
        let s = self.sums[v];
        let clash = self.g.neighbors(v).any(|w| self.remaining[w] == 0 && self.sums[w] == s);
        if clash {
            return false;
        }
        if self.color_count[s as usize] == 0 {
            self.distinct += 1;
        }
        self.color_count[s as usize] += 1;
        true
    }

    fn uncomplete(&mut self, v: Vertex) {
        let s = self.sums[v] as usize;
        self.color_count[s] -= 1;
        if self.color_count[s] == 0 {
            self.distinct -= 1;
        }
    }

    /// Returns true when the search must stop (target reached or budget hit).
    fn descend(&mut self, k: usize) -> bool {
        let q = self.g.size();
        if k == q {
            if self.distinct < self.best {
                self.best = self.distinct;
                self.best_labels = Some(self.labels.clone());
            }
            return self.best <= self.target;
        }
        let (u, v) = self.g.edge(k);
        let cap = if k == 0 { self.first_label_cap } else { q as Label };
        for l in 1..=cap {
            if self.used[l as usize] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return true;
            }
            self.used[l as usize] = true;
            self.labels[k] = l;
            self.sums[u] += l;
            self.sums[v] += l;
            self.remaining[u] -= 1;
            self.remaining[v] -= 1;

            let mut done_u = false;
            let mut done_v = false;
            let mut ok = true;
            if self.remaining[u] == 0 {
                ok = self.complete(u);
                done_u = ok;
            }
            if ok && self.remaining[v] == 0 {
                ok = self.complete(v);
                done_v = ok;
            }
            let stop = ok && self.distinct < self.best && self.descend(k + 1);

            if done_v {
                self.uncomplete(v);
            }
            if done_u {
                self.uncomplete(u);
            }
            self.remaining[u] += 1;
            self.remaining[v] += 1;
            self.sums[u] -= l;
            self.sums[v] -= l;
            self.used[l as usize] = false;
            if stop {
                return true;
            }
        }
        false
    }
}

/// Exact `χ_la(g)` by branch and bound, exploring at most `budget` label
/// assignments.
///
/// The search stops as soon as it meets the lower bound from
/// [`chi_la_lower_bound`]. On regular graphs only labels up to `(q+1)/2`
/// are tried on the first edge, since complementing a labeling keeps its
/// color count there.
pub fn chi_la_exact(g: &Graph, budget: u64) -> Result<SolveResult, SolverError> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(SolverError::IsolatedVertex(v));
    }
    let (lower, _) = chi_la_lower_bound(g)?;
    if has_k2_component(g) {
        return Ok(SolveResult {
            chi_la: None,
            upper_bound: None,
            lower_bound: lower,
            witness: None,
            status: SolveStatus::UndefinedNoLabeling,
            nodes_explored: 0,
        });
    }
    let q = g.size();
    let max_degree = g.degrees().into_iter().max().unwrap_or(0);
    let first_label_cap = if g.regular_degree().is_some() { (q as Label).div_ceil(2) } else { q as Label };
    let mut search = Search {
        g,
        budget,
        nodes: 0,
        used: vec![false; q + 1],
        labels: vec![0; q],
        sums: vec![0; g.order()],
        remaining: g.degrees(),
        color_count: vec![0; max_degree * q + 1],
        distinct: 0,
        best: usize::MAX,
        best_labels: None,
        target: lower,
        first_label_cap,
        exhausted: false,
    };
    search.descend(0);
    let witness = search.best_labels.map(|ls| EdgeLabeling::new(g, ls).expect("search assigns a bijection"));
    let upper_bound = witness.as_ref().map(|_| search.best);
    let status = if search.exhausted {
        SolveStatus::BudgetExceeded
    } else if witness.is_none() {
        SolveStatus::UndefinedNoLabeling
    } else {
        SolveStatus::Exact
    };
    Ok(SolveResult {
        chi_la: (status == SolveStatus::Exact).then_some(search.best),
        upper_bound,
        lower_bound: lower,
        witness,
        status,
        nodes_explored: search.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_copies, generate, FamilySpec};
    use crate::labeling::verify;

    fn fam(s: FamilySpec) -> Graph {
        generate(s).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (2, 4)]).unwrap()
    }

    fn solve(g: &Graph) -> SolveResult {
        chi_la_exact(g, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn small_cycles_and_friends() {
        for n in 3..=7 {
            assert_eq!(solve(&fam(FamilySpec::Cycle { n })).chi_la, Some(3), "C{n}");
        }
        assert_eq!(solve(&fam(FamilySpec::CompleteBipartite { a: 2, b: 2 })).chi_la, Some(3));
        assert_eq!(solve(&bowtie()).chi_la, Some(3));
    }

    #[test]
    fn stars_need_one_color_per_leaf_plus_center() {
        for n in 2..=5 {
            let r = solve(&fam(FamilySpec::CompleteBipartite { a: 1, b: n }));
            assert_eq!(r.chi_la, Some(n + 1));
        }
    }

    #[test]
    fn k24_has_two_colors() {
        let r = solve(&fam(FamilySpec::CompleteBipartite { a: 2, b: 4 }));
        assert_eq!(r.chi_la, Some(2));
        let w = r.witness.unwrap();
        assert!(crate::labeling::two_coloring_certificate(&fam(FamilySpec::CompleteBipartite { a: 2, b: 4 }), &w)
            .unwrap()
            .is_some());
    }

    #[test]
    fn witness_verifies() {
        for g in [bowtie(), fam(FamilySpec::Complete { n: 4 }), fam(FamilySpec::Wheel { n: 4 })] {
            let r = solve(&g);
            let w = r.witness.unwrap();
            let rep = verify(&g, &w).unwrap();
            assert!(rep.is_local_antimagic());
            assert_eq!(Some(rep.color_count), r.chi_la);
            assert!(r.chi_la.unwrap() >= chromatic_number(&g).unwrap());
        }
    }

    #[test]
    fn k2_is_undefined() {
        let r = solve(&fam(FamilySpec::Complete { n: 2 }));
        assert_eq!(r.status, SolveStatus::UndefinedNoLabeling);
        assert_eq!(r.chi_la, None);
        let two = disjoint_copies(2, &fam(FamilySpec::Complete { n: 2 }));
        assert_eq!(solve(&two).status, SolveStatus::UndefinedNoLabeling);
    }

    #[test]
    fn isolated_vertices_rejected() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(chi_la_exact(&g, 10), Err(SolverError::IsolatedVertex(2)));
    }

    #[test]
    fn budget_reports_bounds() {
        // the star never reaches its lower bound of 3, so the search cannot stop early
        let g = fam(FamilySpec::CompleteBipartite { a: 1, b: 6 });
        let r = chi_la_exact(&g, 50).unwrap();
        assert_eq!(r.status, SolveStatus::BudgetExceeded);
        assert_eq!(r.chi_la, None);
        assert_eq!(r.nodes_explored, 51);
        assert_eq!(r.lower_bound, 3);
        assert_eq!(r.upper_bound, Some(7));
    }

    #[test]
    fn deterministic() {
        let g = fam(FamilySpec::MobiusLadder { n: 6 });
        assert_eq!(solve(&g), solve(&g));
    }

    #[test]
    fn two_color_exclusion() {
        assert!(!two_colors_possible(&fam(FamilySpec::Cycle { n: 4 })));
        assert!(!two_colors_possible(&disjoint_copies(2, &fam(FamilySpec::Cycle { n: 4 }))));
        assert!(two_colors_possible(&fam(FamilySpec::CompleteBipartite { a: 2, b: 4 })));
        assert!(two_colors_possible(&fam(FamilySpec::CompleteBipartite { a: 1, b: 3 })));
        assert!(!two_colors_possible(&fam(FamilySpec::Cycle { n: 5 })));
        assert_eq!(
            chi_la_lower_bound(&disjoint_copies(2, &fam(FamilySpec::Cycle { n: 4 }))).unwrap(),
            (3, BoundSource::TwoColorBalance)
        );
    }
}
